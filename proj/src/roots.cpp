#include "ydkit/roots.hpp"

#include <algorithm>
#include <numeric>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ydkit/errors.hpp"

namespace ydkit {

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Cyc eval(const Poly& p, const Cyc& x) {
  Cyc acc;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc *= x;
    acc += p[k];
  }
  return acc;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Cyc(static_cast<long>(k)));
  trim(d);
  return d;
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) throw std::invalid_argument("zero polynomial has no monic form");
  const Cyc lead_inv = p.back().inv();
  for (auto& c : p) c *= lead_inv;
  return p;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly r = a;
  trim(r);
  Poly d = b;
  trim(d);
  if (d.empty()) throw DivisionByZero();
  const int db = static_cast<int>(d.size()) - 1;
  const Cyc lead_inv = d.back().inv();
  Poly q(r.size() > d.size() - 1 ? r.size() - d.size() + 1 : 0);
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k].is_zero()) continue;
    const Cyc c = r[k] * lead_inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) submul(r[k - db + j], c, d[j]);
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(std::move(a));
}

unsigned field_order(const Poly& p) {
  unsigned n = 1;
  for (const auto& c : p) n = std::lcm(n, c.order());
  return n;
}

}  // namespace poly

namespace {

namespace bmp = boost::multiprecision;
using Real = bmp::number<bmp::cpp_bin_float<130>, bmp::et_off>;

constexpr int kLatticeBits = 320;
constexpr int kConvergedBits = 390;
constexpr int kMaxIterations = 4000;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real norm(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const mpq_class& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

mpz_class to_mpz(const Real& x) {
  const bmp::cpp_int i = round(x).convert_to<bmp::cpp_int>();
  return mpz_class(i.str());
}

/// Powers 1, zeta, ..., zeta^{m-1} at the embedding zeta -> exp(2 pi i / n).
std::vector<Cx> zeta_powers(unsigned n, std::size_t m) {
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Cx> out;
  for (std::size_t j = 0; j < m; ++j) {
    const Real theta = two_pi * Real(static_cast<long>(j)) / Real(static_cast<long>(n));
    out.push_back({cos(theta), sin(theta)});
  }
  return out;
}

Cx embed(const Cyc& x, unsigned n, const std::vector<Cx>& powers) {
  const Cyc y = x.embedded(n);
  Cx acc{Real(0), Real(0)};
  for (std::size_t j = 0; j < y.coords().size(); ++j) {
    if (sgn(y.coords()[j]) == 0) continue;
    const Real c = to_real(y.coords()[j]);
    acc.re += c * powers[j].re;
    acc.im += c * powers[j].im;
  }
  return acc;
}

Cx horner(const std::vector<Cx>& coeffs, const Cx& z) {
  Cx acc{Real(0), Real(0)};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

/// Simultaneous (Weierstrass) iteration on a monic polynomial.
std::vector<Cx> durand_kerner(const std::vector<Cx>& coeffs) {
  const std::size_t d = coeffs.size() - 1;
  Real bound(1);
  for (std::size_t k = 0; k < d; ++k) bound = std::max(bound, 1 + norm(coeffs[k]));
  std::vector<Cx> z(d);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < d; ++k) {
    const Real theta = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(d)) + Real("0.4");
    const Real radius = bound * Real("0.7");
    z[k] = {radius * cos(theta), radius * sin(theta)};
  }
  const Real tol = ldexp(Real(1), -kConvergedBits);
  for (int it = 0; it < kMaxIterations; ++it) {
    Real worst(0);
    for (std::size_t i = 0; i < d; ++i) {
      Cx den{Real(1), Real(0)};
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      if (den.re == 0 && den.im == 0) den.re = tol;
      const Cx step = horner(coeffs, z[i]) / den;
      z[i] = z[i] - step;
      worst = std::max(worst, norm(step) / std::max(Real(1), norm(z[i])));
    }
    if (worst < tol) break;
  }
  return z;
}

/// Integral LLL (Cohen, Algorithm 2.6.7) with delta = 3/4; rows of `b` are
/// linearly independent integer vectors, reduced in place.
void lll_reduce(std::vector<std::vector<mpz_class>>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  auto dot = [](const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  std::size_t k = 2, kmax = 1;

  auto red = [&](std::size_t kk, std::size_t l) {
    mpz_class two_abs = 2 * abs(lam[kk][l]);
    if (two_abs <= d[l]) return;
    mpz_class q;
    mpz_class num = 2 * lam[kk][l] + d[l];
    mpz_class den = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t i = 0; i < b[kk - 1].size(); ++i) b[kk - 1][i] -= q * b[l - 1][i];
    lam[kk][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };

  auto swap_rows = [&](std::size_t kk) {
    std::swap(b[kk - 1], b[kk - 2]);
    for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const mpz_class l = lam[kk][kk - 1];
    mpz_class bb = (d[kk - 2] * d[kk] + l * l);
    mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), d[kk - 1].get_mpz_t());
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      const mpz_class t = lam[i][kk];
      mpz_class v = d[kk] * lam[i][kk - 1] - l * t;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d[kk - 1].get_mpz_t());
      lam[i][kk] = v;
      mpz_class w = bb * t + l * lam[i][kk];
      mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), d[kk].get_mpz_t());
      lam[i][kk - 1] = w;
    }
    d[kk - 1] = bb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(b[k - 1], b[j - 1]);
        for (std::size_t i = 1; i < j; ++i) {
          u = d[i] * u - lam[k][i] * lam[j][i];
          mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i - 1].get_mpz_t());
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (sgn(u) == 0) throw std::logic_error("LLL input rows are dependent");
        }
      }
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap_rows(k);
      k = std::max<std::size_t>(2, k - 1);
      continue;
    }
    for (std::size_t l = k - 1; l-- > 1;) red(k, l);
    ++k;
  }
}

/// Candidate field elements close to z, shortest first.
std::vector<Cyc> reconstruct(const Cx& z, unsigned n, std::size_t m, const std::vector<Cx>& powers,
                             std::int64_t max_den) {
  const Real scale = ldexp(Real(1), kLatticeBits);
  std::vector<std::vector<mpz_class>> basis(m + 1, std::vector<mpz_class>(m + 3));
  for (std::size_t t = 0; t <= m; ++t) {
    basis[t][t] = 1;
    const Cx v = t == 0 ? z : Cx{-powers[t - 1].re, -powers[t - 1].im};
    basis[t][m + 1] = to_mpz(v.re * scale);
    basis[t][m + 2] = to_mpz(v.im * scale);
  }
  lll_reduce(basis);
  std::vector<Cyc> out;
  for (const auto& row : basis) {
    if (sgn(row[0]) == 0) continue;
    std::vector<mpq_class> coords(m);
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      coords[j] = mpq_class(row[j + 1], row[0]);
      coords[j].canonicalize();
      ok = cmp(coords[j].get_den(), max_den) <= 0;
    }
    if (ok) out.push_back(Cyc::from_coords(n, std::move(coords)));
  }
  return out;
}

}  // namespace

RootSearch search_roots(const Poly& p_in, std::int64_t max_den, unsigned field) {
  Poly p = p_in;
  poly::trim(p);
  if (poly::degree(p) < 1) throw std::invalid_argument("root search needs a polynomial of degree >= 1");
  p = poly::monic(std::move(p));
  const unsigned n = std::lcm(field, poly::field_order(p));

  const Poly g = poly::gcd(p, poly::derivative(p));
  const Poly sq = poly::degree(g) > 0 ? poly::monic(poly::divmod(p, g).first) : p;

  RootSearch result;
  std::vector<Cyc> distinct;
  if (poly::degree(sq) == 1) {
    distinct.push_back(-sq[0]);
  } else {
    const std::size_t m = euler_phi(n);
    const auto powers = zeta_powers(n, m);
    std::vector<Cx> coeffs;
    for (const auto& c : sq) coeffs.push_back(embed(c, n, powers));
    const auto approx = durand_kerner(coeffs);
    for (std::size_t i = 0; i < approx.size(); ++i) {
      bool certified = false;
      for (auto& cand : reconstruct(approx[i], n, m, powers, max_den)) {
        if (!poly::eval(sq, cand).is_zero()) continue;
        certified = true;
        const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Cyc& r) { return r == cand; });
        if (!seen) distinct.push_back(std::move(cand));
        break;
      }
      if (!certified) result.uncertified.push_back(i);
    }
  }

  for (auto& r : distinct) {
    const Poly lin{-r, Cyc(1)};
    unsigned mult = 0;
    Poly rest = p;
    while (true) {
      auto [q, rem] = poly::divmod(rest, lin);
      if (!rem.empty()) break;
      ++mult;
      rest = std::move(q);
    }
    result.roots.push_back({std::move(r), mult});
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const FieldRoot& a, const FieldRoot& b) { return compare(a.value, b.value) < 0; });
  return result;
}

std::vector<FieldRoot> find_roots_in_field(const Poly& p, std::int64_t max_den, unsigned field) {
  return search_roots(p, max_den, field).roots;
}

std::vector<FieldRoot> split_in_field(const Poly& p, std::int64_t max_den, unsigned field) {
  auto s = search_roots(p, max_den, field);
  if (!s.uncertified.empty()) throw ReconstructionFailed(s.uncertified.front());
  return std::move(s.roots);
}

}  // namespace ydkit
