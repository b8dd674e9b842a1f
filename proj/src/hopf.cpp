#include "ydkit/hopf.hpp"

#include <algorithm>

#include "ydkit/errors.hpp"

namespace ydkit {

CheckEntry& Report::add(std::string id, bool passed, std::vector<std::size_t> witness, std::string detail) {
  CheckEntry e;
  e.id = std::move(id);
  e.passed = passed;
  if (!passed) e.witness = std::move(witness);
  e.detail = std::move(detail);
  entries.push_back(std::move(e));
  return entries.back();
}

CheckEntry& Report::info(std::string id, bool value, std::string detail) {
  CheckEntry& e = add(std::move(id), value, {}, std::move(detail));
  e.informational = true;
  return e;
}

CheckEntry& Report::skip(std::string id, std::string reason) {
  CheckEntry& e = add(std::move(id), true, {}, std::move(reason));
  e.skipped = true;
  return e;
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::ok() const { return first_failure() == nullptr; }

const CheckEntry* Report::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

const CheckEntry* Report::first_failure() const {
  for (const auto& e : entries)
    if (!e.passed && !e.informational && !e.skipped) return &e;
  return nullptr;
}

Terms nonzeros(const Vec& v) {
  Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.emplace_back(i, v[i]);
  return t;
}

FinAlgebra Coalgebra::dual_algebra() const {
  std::vector<Vec> mult(dim * dim, Vec(dim));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t ab = 0; ab < dim * dim; ++ab)
      if (!comult[k][ab].is_zero()) mult[ab][k] = comult[k][ab];
  return FinAlgebra(dim, std::move(mult), counit);
}

std::optional<std::size_t> Coalgebra::coassociativity_witness() const {
  const std::size_t n = dim;
  for (std::size_t k = 0; k < n; ++k) {
    Vec left(n * n * n), right(n * n * n);
    for (const auto& [ab, c] : nonzeros(comult[k])) {
      const std::size_t a = ab / n, b = ab % n;
      for (const auto& [pq, d] : nonzeros(comult[a])) addmul(left[pq * n + b], c, d);
      for (const auto& [pq, d] : nonzeros(comult[b])) addmul(right[a * n * n + pq], c, d);
    }
    if (left != right) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> Coalgebra::counit_witness() const {
  const std::size_t n = dim;
  for (std::size_t k = 0; k < n; ++k) {
    Vec l(n), r(n);
    for (const auto& [ab, c] : nonzeros(comult[k])) {
      const std::size_t a = ab / n, b = ab % n;
      addmul(l[b], c, counit[a]);
      addmul(r[a], c, counit[b]);
    }
    const Vec e = unit_vec(n, k);
    if (l != e || r != e) return k;
  }
  return std::nullopt;
}

HopfAlgebra::HopfAlgebra(std::vector<std::string> names, unsigned field, std::vector<Vec> mult,
                         std::vector<Vec> comult, Vec unit, Vec counit, Mat antipode)
    : names_(std::move(names)),
      field_(field),
      n_(unit.size()),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      s_(std::move(antipode)) {
  if (names_.size() != n_ || mult_.size() != n_ * n_ || comult_.size() != n_ || counit_.size() != n_ ||
      s_.rows() != n_ || s_.cols() != n_)
    throw DimensionMismatch("Hopf structure tensors disagree on the dimension");
  for (const auto& v : comult_)
    if (v.size() != n_ * n_) throw DimensionMismatch("coproduct vector has the wrong length");
  for (const auto& v : mult_) mult_t_.push_back(nonzeros(v));
  for (const auto& v : comult_) comult_t_.push_back(nonzeros(v));
  alg_ = std::make_shared<const FinAlgebra>(n_, mult_, unit_);
  for (std::size_t i = 0; i < n_; ++i) {
    Mat m(n_, n_);
    for (const auto& [ab, c] : comult_t_[i]) {
      const std::size_t a = ab / n_, b = ab % n_;
      m += c * (alg_->left_basis(a) * alg_->right_mult(s_.col(b)));
    }
    ad_.push_back(std::move(m));
  }
}

Vec HopfAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(n_);
  const Terms tb = nonzeros(b);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [j, cb] : tb) {
      const Cyc c = a[i] * cb;
      for (const auto& [k, ck] : mult_t_[i * n_ + j]) addmul(out[k], c, ck);
    }
  }
  return out;
}

Vec HopfAlgebra::comul(const Vec& a) const {
  Vec out(n_ * n_);
  for (std::size_t k = 0; k < n_; ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& [ab, c] : comult_t_[k]) addmul(out[ab], a[k], c);
  }
  return out;
}

Cyc HopfAlgebra::eps(const Vec& a) const { return pair(counit_, a); }

Vec HopfAlgebra::tensor_mul(const Vec& x, const Vec& y, std::size_t legs) const {
  Vec out(x.size());
  const Terms tx = nonzeros(x), ty = nonzeros(y);
  std::vector<std::size_t> dx(legs), dy(legs);
  auto digits = [&](std::size_t idx, std::vector<std::size_t>& d) {
    for (std::size_t l = legs; l-- > 0;) {
      d[l] = idx % n_;
      idx /= n_;
    }
  };
  std::vector<std::pair<std::size_t, Cyc>> acc, next;
  for (const auto& [ix, cx] : tx) {
    digits(ix, dx);
    for (const auto& [iy, cy] : ty) {
      digits(iy, dy);
      acc.assign(1, {0, cx * cy});
      for (std::size_t l = 0; l < legs && !acc.empty(); ++l) {
        next.clear();
        for (const auto& [i0, c0] : acc)
          for (const auto& [k, ck] : mult_t_[dx[l] * n_ + dy[l]]) next.emplace_back(i0 * n_ + k, c0 * ck);
        acc.swap(next);
      }
      for (const auto& [i, c] : acc) out[i] += c;
    }
  }
  return out;
}

Vec HopfAlgebra::apply_leg(const Vec& x, std::size_t legs, std::size_t leg, const Mat& m) const {
  std::size_t stride = 1;
  for (std::size_t l = leg + 1; l < legs; ++l) stride *= n_;
  Vec out(x.size());
  for (const auto& [idx, c] : nonzeros(x)) {
    const std::size_t d = (idx / stride) % n_;
    const std::size_t base = idx - d * stride;
    for (std::size_t p = 0; p < n_; ++p)
      if (!m(p, d).is_zero()) addmul(out[base + p * stride], c, m(p, d));
  }
  return out;
}

Vec HopfAlgebra::comul_leg(const Vec& x, std::size_t legs, std::size_t leg) const {
  std::size_t stride = 1;
  for (std::size_t l = leg + 1; l < legs; ++l) stride *= n_;
  Vec out(x.size() * n_);
  for (const auto& [idx, c] : nonzeros(x)) {
    const std::size_t low = idx % stride;
    const std::size_t d = (idx / stride) % n_;
    const std::size_t high = idx / (stride * n_);
    for (const auto& [ab, cd] : comult_t_[d]) addmul(out[(high * n_ * n_ + ab) * stride + low], c, cd);
  }
  return out;
}

Vec HopfAlgebra::flip(const Vec& x) const {
  Vec out(x.size());
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out[b * n_ + a] = x[a * n_ + b];
  return out;
}

Vec HopfAlgebra::adjoint(const Vec& h, const Vec& a) const {
  Vec out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!h[i].is_zero()) axpy(out, h[i], ad_[i] * a);
  return out;
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.names_ == b.names_ && a.field_ == b.field_ && a.mult_ == b.mult_ && a.comult_ == b.comult_ &&
         a.unit_ == b.unit_ && a.counit_ == b.counit_ && a.s_ == b.s_;
}

Report verify_hopf(const HopfAlgebra& h, const SplitOptions& opts) {
  (void)opts;
  Report r;
  const std::size_t n = h.dim();
  const Vec one = h.unit();

  {
    auto w = h.algebra().unit_witness();
    r.add("unit", !w, w ? std::vector<std::size_t>{*w} : std::vector<std::size_t>{}, "1 b_i = b_i = b_i 1");
  }
  {
    auto w = h.algebra().associativity_witness();
    r.add("assoc", !w, w.value_or(std::vector<std::size_t>{}), "(b_i b_j) b_k = b_i (b_j b_k)");
  }
  const Coalgebra c = h.coalgebra();
  {
    auto w = c.coassociativity_witness();
    r.add("coassoc", !w, w ? std::vector<std::size_t>{*w} : std::vector<std::size_t>{},
          "(Delta x id) Delta = (id x Delta) Delta");
  }
  {
    auto w = c.counit_witness();
    r.add("counit", !w, w ? std::vector<std::size_t>{*w} : std::vector<std::size_t>{},
          "(eps x id) Delta = id = (id x eps) Delta");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t i = 0; i < n && w.empty(); ++i)
        if (h.comul(h.product(i, j)) != h.tensor_mul(h.coproduct(i), h.coproduct(j), 2)) w = {i, j};
    r.add("delta_mult", w.empty(), w, "Delta(b_i b_j) = Delta(b_i) Delta(b_j)");
  }
  {
    Vec oo(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) oo[a * n + b] = one[a] * one[b];
    r.add("delta_unit", h.comul(one) == oo, {}, "Delta(1) = 1 x 1");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t i = 0; i < n && w.empty(); ++i)
        if (h.eps(h.product(i, j)) != h.counit()[i] * h.counit()[j]) w = {i, j};
    r.add("eps_mult", w.empty(), w, "eps(b_i b_j) = eps(b_i) eps(b_j)");
    r.add("eps_unit", h.eps(one).is_one(), {}, "eps(1) = 1");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < n && w.empty(); ++k) {
      Vec l(n), rr(n);
      for (const auto& [ab, cf] : h.coproduct_terms(k)) {
        const std::size_t a = ab / n, b = ab % n;
        axpy(l, cf, h.mul(h.antipode().col(a), h.basis(b)));
        axpy(rr, cf, h.mul(h.basis(a), h.antipode().col(b)));
      }
      const Vec want = h.counit()[k] * one;
      if (l != want || rr != want) w = {k};
    }
    r.add("antipode", w.empty(), w, "m(S x id)Delta = 1 eps = m(id x S)Delta");
  }

  r.info("S2_id", (h.antipode() * h.antipode()).is_identity(), "S^2 = id");
  const bool semisimple = radical(h.algebra()).dim() == 0;
  const bool cosemisimple = radical(c.dual_algebra()).dim() == 0;
  r.info("semisimple", semisimple, "trace-form radical of H is zero");
  r.info("cosemisimple", cosemisimple, "trace-form radical of H* is zero");
  if (semisimple && cosemisimple && r.ok()) {
    const IntegralData d = integrals(h);
    r.info("unimodular", d.unimodular, "left integral of H is also a right integral");
    r.info("dual_unimodular", d.dual_unimodular, "right integral of H* is also a left integral");
  } else {
    r.skip("unimodular", "needs a semisimple, cosemisimple Hopf algebra");
    r.skip("dual_unimodular", "needs a semisimple, cosemisimple Hopf algebra");
  }
  return r;
}

HopfAlgebra dual(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<Vec> mult(n * n, Vec(n)), comult(n, Vec(n * n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, c] : h.coproduct_terms(k)) mult[ab][k] = c;
  for (std::size_t ab = 0; ab < n * n; ++ab)
    for (const auto& [k, c] : h.product_terms(ab / n, ab % n)) comult[k][ab] = c;
  std::vector<std::string> names;
  for (const auto& s : h.names()) names.push_back(s + "*");
  return HopfAlgebra(std::move(names), h.field(), std::move(mult), std::move(comult), h.counit(), h.unit(),
                     h.antipode().transpose());
}

Cyc pair(const Vec& f, const Vec& h) {
  Cyc s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero() && !h[i].is_zero()) addmul(s, f[i], h[i]);
  return s;
}

Vec left_hit(const HopfAlgebra& h, const Vec& f, const Vec& x) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (const auto& [k, xk] : nonzeros(x))
    for (const auto& [ab, c] : h.coproduct_terms(k))
      if (!f[ab % n].is_zero()) addmul(out[ab / n], xk * c, f[ab % n]);
  return out;
}

Vec right_hit(const HopfAlgebra& h, const Vec& x, const Vec& f) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (const auto& [k, xk] : nonzeros(x))
    for (const auto& [ab, c] : h.coproduct_terms(k))
      if (!f[ab / n].is_zero()) addmul(out[ab % n], xk * c, f[ab / n]);
  return out;
}

Vec hit_functional_left(const HopfAlgebra& h, const Vec& a, const Vec& f) {
  return h.algebra().right_mult(a).transpose() * f;
}

Vec hit_functional_right(const HopfAlgebra& h, const Vec& f, const Vec& a) {
  return h.algebra().left_mult(a).transpose() * f;
}

Vec coadjoint(const HopfAlgebra& h, const Vec& f, const Vec& x) {
  Mat ad(h.dim(), h.dim());
  for (const auto& [i, c] : nonzeros(x)) ad += c * h.adjoint_matrices()[i];
  return ad.transpose() * f;
}

Vec convolve(const HopfAlgebra& h, const Vec& f, const Vec& g) {
  const std::size_t n = h.dim();
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, c] : h.coproduct_terms(k)) {
      const Cyc& fa = f[ab / n];
      const Cyc& gb = g[ab % n];
      if (!fa.is_zero() && !gb.is_zero()) addmul(out[k], c * fa, gb);
    }
  return out;
}

IntegralData integrals(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  IntegralData d;

  // h Lambda = eps(h) Lambda for every basis h.
  Mat sys(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat& l = h.algebra().left_basis(i);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) sys(i * n + p, q) = l(p, q) - (p == q ? h.counit()[i] : Cyc(0));
  }
  const Subspace left = kernel(sys);
  for (const auto& v : left.basis_vectors()) {
    const Cyc e = h.eps(v);
    if (!e.is_zero()) {
      d.Lambda = e.inv() * v;
      break;
    }
  }
  if (d.Lambda.empty()) throw NonSemisimple("every left integral has eps(Lambda) = 0");

  // sum lambda(h1) h2 = lambda(h) 1 for every basis h.
  Mat dsys(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [ab, c] : h.coproduct_terms(k)) dsys(k * n + ab % n, ab / n) += c;
    for (std::size_t b = 0; b < n; ++b) dsys(k * n + b, k) -= h.unit()[b];
  }
  const Subspace right = kernel(dsys);
  for (const auto& v : right.basis_vectors()) {
    const Cyc e = pair(v, h.unit());
    if (!e.is_zero()) {
      d.lambda = e.inv() * v;
      break;
    }
  }
  if (d.lambda.empty()) throw NonSemisimple("every right integral of H* vanishes on 1");

  const std::size_t p = leading_index(d.Lambda);
  d.alpha.assign(n, Cyc());
  d.unimodular = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec lh = h.mul(d.Lambda, h.basis(i));
    d.alpha[i] = lh[p] / d.Lambda[p];
    if (lh != h.counit()[i] * d.Lambda) d.unimodular = false;
  }
  const std::size_t q = leading_index(d.lambda);
  d.a.assign(n, Cyc());
  d.dual_unimodular = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec fl = convolve(h, unit_vec(n, k), d.lambda);
    d.a[k] = fl[q] / d.lambda[q];
    if (fl != h.unit()[k] * d.lambda) d.dual_unimodular = false;
  }
  return d;
}

std::vector<Grouplike> grouplikes(const Coalgebra& c, const FinAlgebra* ambient, const SplitOptions& opts) {
  const std::size_t n = c.dim;
  const FinAlgebra dual = c.dual_algebra();
  std::vector<Grouplike> out;
  for (const auto& e : central_primitive_idempotents(dual, opts)) {
    if (rank(dual.left_mult(e)) != 1) continue;
    const std::size_t p = leading_index(e);
    Vec g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = dual.mul(unit_vec(n, j), e)[p] / e[p];
    Vec gg(n * n), dg(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) gg[a * n + b] = g[a] * g[b];
    for (std::size_t k = 0; k < n; ++k)
      if (!g[k].is_zero()) axpy(dg, g[k], c.comult[k]);
    if (dg != gg || pair(c.counit, g) != Cyc(1)) throw Error("one-dimensional block did not yield a grouplike");
    Grouplike gl{std::move(g), false};
    if (ambient) {
      gl.central = true;
      for (std::size_t i = 0; i < n && gl.central; ++i)
        if (ambient->mul(gl.g, unit_vec(n, i)) != ambient->mul(unit_vec(n, i), gl.g)) gl.central = false;
    }
    out.push_back(std::move(gl));
  }
  std::sort(out.begin(), out.end(), [](const Grouplike& x, const Grouplike& y) {
    for (std::size_t k = 0; k < x.g.size(); ++k)
      if (int cmp = compare(x.g[k], y.g[k]); cmp != 0) return cmp > 0;
    return false;
  });
  return out;
}

}  // namespace ydkit
