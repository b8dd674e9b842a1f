#include "ydkit/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "ydkit/errors.hpp"

namespace ydkit {

namespace {

// Exact division of integer polynomials by a monic divisor (low to high).
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long long> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), detail::cyclo_context(d).modulus);
  }
  return poly;
}

namespace detail {

const CycloContext& cyclo_context(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (n == 1) {
    static const CycloContext rationals{1, 1, {-1, 1}};
    return rationals;
  }
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloContext>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  // Computed outside the lock: recursion reaches smaller orders.
  auto ctx = std::make_unique<CycloContext>();
  ctx->order = n;
  ctx->modulus = cyclotomic_polynomial(n);
  ctx->degree = ctx->modulus.size() - 1;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(ctx));
  return *it->second;
}

}  // namespace detail

Cyc::Cyc() : ctx_(&detail::cyclo_context(1)), c_(1) {}

Cyc::Cyc(long v) : ctx_(&detail::cyclo_context(1)), c_(1) { c_[0] = v; }

Cyc::Cyc(const mpq_class& q) : ctx_(&detail::cyclo_context(1)), c_(1, q) {}

Cyc::Cyc(const detail::CycloContext* ctx) : ctx_(ctx), c_(ctx->degree) {}

Cyc Cyc::zero(unsigned n) { return Cyc(&detail::cyclo_context(n)); }

Cyc Cyc::one(unsigned n) {
  Cyc r = zero(n);
  r.c_[0] = 1;
  return r;
}

Cyc Cyc::zeta(unsigned n, long k) {
  const auto* ctx = &detail::cyclo_context(n);
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  Cyc r(ctx);
  std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1);
  poly[e] = 1;
  r.reduce_from(std::move(poly));
  return r;
}

Cyc Cyc::from_coords(unsigned n, std::vector<mpq_class> coords) {
  const auto* ctx = &detail::cyclo_context(n);
  Cyc r(ctx);
  if (coords.size() > ctx->degree) {
    r.reduce_from(std::move(coords));
  } else {
    for (std::size_t j = 0; j < coords.size(); ++j) r.c_[j] = coords[j];
  }
  return r;
}

void Cyc::reduce_from(std::vector<mpq_class>&& poly) {
  const std::size_t deg = ctx_->degree;
  const auto& mod = ctx_->modulus;
  mpq_class t;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (sgn(poly[k]) == 0) continue;
    const mpq_class c = poly[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod[j] == 0) continue;
      t = c * static_cast<long>(mod[j]);
      poly[k - deg + j] -= t;
    }
    poly[k] = 0;
  }
  poly.resize(deg);
  c_ = std::move(poly);
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return false;
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

const detail::CycloContext* Cyc::common(const Cyc& a, const Cyc& b) {
  if (a.ctx_ == b.ctx_) return a.ctx_;
  const unsigned m = a.order(), n = b.order();
  if (n % m == 0) return b.ctx_;
  if (m % n == 0) return a.ctx_;
  throw FieldMismatch("cannot combine elements of Q(zeta_" + std::to_string(m) + ") and Q(zeta_" +
                      std::to_string(n) + ")");
}

Cyc Cyc::embedded(unsigned n) const {
  if (n == order()) return *this;
  if (n % order() != 0)
    throw FieldMismatch("Q(zeta_" + std::to_string(order()) + ") does not embed in Q(zeta_" + std::to_string(n) +
                        ")");
  const auto* ctx = &detail::cyclo_context(n);
  Cyc r(ctx);
  if (is_rational()) {
    r.c_[0] = c_[0];
    return r;
  }
  const std::size_t step = n / order();
  std::vector<mpq_class> poly(step * (c_.size() - 1) + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  r.reduce_from(std::move(poly));
  return r;
}

Cyc Cyc::galois(long k) const {
  if (is_rational()) return *this;
  const long n = static_cast<long>(order());
  long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk, n) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
  std::vector<mpq_class> poly(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    poly[(static_cast<long>(j) * kk) % n] += c_[j];
  }
  Cyc r(ctx_);
  r.reduce_from(std::move(poly));
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (ctx_ == o.ctx_) {
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) c_[j] += o.c_[j];
    return *this;
  }
  if (o.order() == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  const auto* ctx = common(*this, o);
  if (ctx != ctx_) *this = embedded(ctx->order);
  if (o.ctx_ == ctx_) return *this += o;
  return *this += o.embedded(ctx->order);
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (ctx_ == o.ctx_) {
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) c_[j] -= o.c_[j];
    return *this;
  }
  if (o.order() == 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  const auto* ctx = common(*this, o);
  if (ctx != ctx_) *this = embedded(ctx->order);
  if (o.ctx_ == ctx_) return *this -= o;
  return *this -= o.embedded(ctx->order);
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  const auto* ctx = Cyc::common(a, b);
  if (a.is_zero() || b.is_zero()) return Cyc(ctx);
  if (a.is_rational()) {
    Cyc r = (b.ctx_ == ctx) ? b : b.embedded(ctx->order);
    if (a.c_[0] != 1)
      for (auto& x : r.c_)
        if (sgn(x) != 0) x *= a.c_[0];
    return r;
  }
  if (b.is_rational()) {
    Cyc r = (a.ctx_ == ctx) ? a : a.embedded(ctx->order);
    if (b.c_[0] != 1)
      for (auto& x : r.c_)
        if (sgn(x) != 0) x *= b.c_[0];
    return r;
  }
  if (a.ctx_ != ctx) return a.embedded(ctx->order) * b;
  if (b.ctx_ != ctx) return a * b.embedded(ctx->order);
  const std::size_t deg = ctx->degree;
  std::vector<mpq_class> poly(2 * deg - 1);
  mpq_class t;
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      poly[i + j] += t;
    }
  }
  Cyc r(ctx);
  r.reduce_from(std::move(poly));
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  *this = *this * o;
  return *this;
}

void submul(Cyc& acc, const Cyc& a, const Cyc& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (acc.ctx_ == a.ctx_ && a.ctx_ == b.ctx_ && b.is_rational()) {
    mpq_class t;
    for (std::size_t j = 0; j < a.c_.size(); ++j) {
      if (sgn(a.c_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[j].get_mpq_t(), b.c_[0].get_mpq_t());
      acc.c_[j] -= t;
    }
    return;
  }
  acc -= a * b;
}

void addmul(Cyc& acc, const Cyc& a, const Cyc& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (acc.ctx_ == a.ctx_ && a.ctx_ == b.ctx_ && b.is_rational()) {
    mpq_class t;
    for (std::size_t j = 0; j < a.c_.size(); ++j) {
      if (sgn(a.c_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[j].get_mpq_t(), b.c_[0].get_mpq_t());
      acc.c_[j] += t;
    }
    return;
  }
  acc += a * b;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    Cyc r(ctx_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Solve M x = e_0 where column j of M holds the coordinates of a * zeta^j.
  const std::size_t deg = ctx_->degree;
  const auto& mod = ctx_->modulus;
  std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1));
  std::vector<mpq_class> col = c_;
  for (std::size_t j = 0; j < deg; ++j) {
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col[i];
    // multiply by zeta: shift up, fold x^deg back with the monic modulus.
    mpq_class top = col[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t i = 0; i < deg; ++i)
        if (mod[i] != 0) col[i] -= top * static_cast<long>(mod[i]);
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    const mpq_class piv = m[c][c];
    for (std::size_t k = c; k <= deg; ++k) m[c][k] /= piv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Cyc r(ctx_);
  for (std::size_t i = 0; i < deg; ++i) r.c_[i] = m[i][deg];
  return r;
}

Cyc& Cyc::operator/=(const Cyc& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_rational()) {
    const mpq_class d = o.c_[0];
    if (o.ctx_ != ctx_ && o.order() != 1) *this = embedded(common(*this, o)->order);
    for (auto& x : c_)
      if (sgn(x) != 0) x /= d;
    return *this;
  }
  *this = *this * o.inv();
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

int compare(const Cyc& a, const Cyc& b) {
  if (a.order() != b.order()) {
    const unsigned n = std::lcm(a.order(), b.order());
    return compare(a.embedded(n), b.embedded(n));
  }
  for (std::size_t j = 0; j < a.coords().size(); ++j) {
    const int c = cmp(a.coords()[j], b.coords()[j]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t Cyc::height() const {
  std::size_t h = 0;
  for (const auto& x : c_) {
    if (sgn(x) == 0) continue;
    h += mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }
  return h;
}

std::string Cyc::str() const {
  if (is_rational()) return c_[0].get_str();
  std::string s = "[";
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (j) s += ", ";
    s += c_[j].get_str();
  }
  s += "]@" + std::to_string(order());
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

mpq_class parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string canon(s.front() == '+' ? s.substr(1) : s);
  mpq_class q;
  if (q.set_str(canon, 10) != 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Cyc Cyc::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.front() != '[') return Cyc(parse_rational(s));
  const auto close = s.find(']');
  if (close == std::string_view::npos) throw ParseError("missing ']' in '" + std::string(text) + "'");
  std::string_view tail = trim(s.substr(close + 1));
  if (tail.empty() || tail.front() != '@') throw ParseError("missing '@n' in '" + std::string(text) + "'");
  tail.remove_prefix(1);
  tail = trim(tail);
  if (!all_digits(tail)) throw ParseError("bad field order in '" + std::string(text) + "'");
  const unsigned long n = std::stoul(std::string(tail));
  if (n == 0 || n > 100000) throw ParseError("bad field order in '" + std::string(text) + "'");
  std::vector<mpq_class> coords;
  std::string_view inner = s.substr(1, close - 1);
  while (true) {
    const auto comma = inner.find(',');
    coords.push_back(parse_rational(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (coords.size() != euler_phi(static_cast<unsigned>(n)))
    throw ParseError("expected " + std::to_string(euler_phi(static_cast<unsigned>(n))) + " coordinates in '" +
                     std::string(text) + "'");
  return from_coords(static_cast<unsigned>(n), std::move(coords));
}

std::complex<double> Cyc::approx() const {
  std::complex<double> acc = 0;
  const double step = 2 * M_PI / order();
  for (std::size_t j = 0; j < c_.size(); ++j) acc += c_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Cyc& x) { return os << x.str(); }

}  // namespace ydkit
