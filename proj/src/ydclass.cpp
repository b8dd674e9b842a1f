#include "ydkit/ydclass.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ydkit/errors.hpp"

namespace ydkit {

namespace {

void add_scaled(Mat& acc, const Cyc& c, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) addmul(acc(i, j), c, m(i, j));
}

std::size_t mat_dim(const std::vector<Mat>& ms) { return ms.empty() ? 0 : ms.front().rows(); }

Vec right_leg(const Vec& x, std::size_t a, std::size_t n) {
  return Vec(x.begin() + static_cast<std::ptrdiff_t>(a * n), x.begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
}

Vec left_leg(const Vec& x, std::size_t b, std::size_t n) {
  Vec v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = x[a * n + b];
  return v;
}

bool in_tensor_square(const Subspace& d, const Vec& x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (!d.contains(right_leg(x, k, n)) || !d.contains(left_leg(x, k, n))) return false;
  return true;
}

Vec combine(const std::vector<Vec>& basis, const Vec& coeffs, std::size_t n) {
  Vec out(n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) axpy(out, coeffs[k], basis[k]);
  return out;
}

bool by_dim_then_basis(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return compare(a, b) < 0;
}

// Left multiplication by b_i on H (x) W, index t * m + j.
Mat left_mult_HW(const HopfAlgebra& h, std::size_t i, std::size_t m) {
  const std::size_t n = h.dim();
  Mat out(n * m, n * m);
  for (std::size_t t = 0; t < n; ++t)
    for (const auto& [e, c] : h.product_terms(i, t))
      for (std::size_t j = 0; j < m; ++j) out(e * m + j, t * m + j) = c;
  return out;
}

// Quotient of k^len by a subspace, with standard vectors at the non-pivot columns as basis.
struct Quotient {
  Subspace rel;
  std::vector<std::size_t> keep;
  Mat proj;  // keep.size() x len
  Mat lift;  // len x keep.size()

  explicit Quotient(Subspace r) : rel(std::move(r)), keep(rel.complement_indices()) {
    const std::size_t len = rel.ambient_dim();
    proj = Mat(keep.size(), len);
    lift = Mat(len, keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) lift(keep[j], j) = Cyc(1);
    for (std::size_t c = 0; c < len; ++c) proj.set_col(c, reduce(unit_vec(len, c)));
  }

  Vec reduce(Vec v) const {
    const auto& piv = rel.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!v[piv[i]].is_zero()) {
        const Cyc c = v[piv[i]];
        axpy(v, -c, rel.basis_vector(i));
      }
    Vec out(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) out[j] = v[keep[j]];
    return out;
  }

  bool stable(const Mat& t) const {
    for (std::size_t i = 0; i < rel.dim(); ++i)
      if (!is_zero(reduce(t * rel.basis_vector(i)))) return false;
    return true;
  }

  Mat descend(const Mat& t) const { return proj * t * lift; }
};

void require_ok(const Report& r) {
  if (const CheckEntry* e = r.first_failure()) throw CheckFailed(e->id, e->witness, "check failed: " + e->id);
}

}  // namespace

std::vector<Mat> coaction_to_R(const QTHopf& q, const std::vector<Mat>& action, const std::vector<Mat>& coaction) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim(), d = mat_dim(action);
  std::vector<Mat> out(n, Mat(d, d));
  for (const auto& [pq, r] : q.R_terms()) {
    const Vec sq = h.S(h.basis(pq % n));
    for (std::size_t a = 0; a < n; ++a) {
      if (coaction[a].is_zero()) continue;
      const Mat m = action[pq / n] * coaction[a];
      for (const auto& [c, coef] : nonzeros(h.mul(h.basis(a), sq))) add_scaled(out[c], r * coef, m);
    }
  }
  return out;
}

std::vector<Mat> coaction_from_R(const QTHopf& q, const std::vector<Mat>& action, const std::vector<Mat>& coaction_R) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim(), d = mat_dim(action);
  std::vector<Mat> out(n, Mat(d, d));
  for (const auto& [pq, r] : q.R_terms())
    for (std::size_t a = 0; a < n; ++a) {
      if (coaction_R[a].is_zero()) continue;
      const Mat m = action[pq / n] * coaction_R[a];
      for (const auto& [c, coef] : h.product_terms(a, pq % n)) add_scaled(out[c], r * coef, m);
    }
  return out;
}

YDModule YDModule::from_coaction(QTPtr qt, std::vector<Mat> action, std::vector<Mat> coaction) {
  YDModule v;
  v.dim = mat_dim(action);
  v.coaction_R = coaction_to_R(*qt, action, coaction);
  v.action = std::move(action);
  v.coaction = std::move(coaction);
  v.qt = std::move(qt);
  return v;
}

YDModule YDModule::from_coaction_R(QTPtr qt, std::vector<Mat> action, std::vector<Mat> coaction_R) {
  YDModule v;
  v.dim = mat_dim(action);
  v.coaction = coaction_from_R(*qt, action, coaction_R);
  v.action = std::move(action);
  v.coaction_R = std::move(coaction_R);
  v.qt = std::move(qt);
  return v;
}

YDModule YDModule::regular(QTPtr qt) {
  const HopfAlgebra& h = qt->hopf();
  const std::size_t n = h.dim();
  std::vector<Mat> c(n, Mat(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, coef] : h.coproduct_terms(k)) c[ab / n](ab % n, k) = coef;
  return from_coaction(qt, h.adjoint_matrices(), std::move(c));
}

YDModule YDModule::trivial(QTPtr qt) {
  const HopfAlgebra& h = qt->hopf();
  std::vector<Mat> a, c;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    a.push_back(Mat::from_rows({{h.counit()[i]}}, 1));
    c.push_back(Mat::from_rows({{h.unit()[i]}}, 1));
  }
  return from_coaction(std::move(qt), std::move(a), std::move(c));
}

AlgModule YDModule::module() const { return {qt->hopf().algebra_ptr(), Side::Left, action}; }

OpFamily YDModule::operators() const {
  OpFamily ops = action;
  ops.insert(ops.end(), coaction.begin(), coaction.end());
  return ops;
}

namespace {

// First (a, b) with sum_c Delta(b_c)[a, b] C_c != C_b C_a.
std::optional<std::vector<std::size_t>> coassoc_witness(const std::vector<Terms>& delta, const std::vector<Mat>& c,
                                                        std::size_t n) {
  const std::size_t d = mat_dim(c);
  std::vector<Mat> lhs(n * n, Mat(d, d));
  for (std::size_t k = 0; k < n; ++k)
    if (!c[k].is_zero())
      for (const auto& [ab, coef] : delta[k]) add_scaled(lhs[ab], coef, c[k]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lhs[a * n + b] != c[b] * c[a]) return std::vector<std::size_t>{a, b};
  return std::nullopt;
}

std::optional<std::size_t> counit_witness(const Vec& counit, const std::vector<Mat>& c) {
  const std::size_t d = mat_dim(c);
  Mat s(d, d);
  for (const auto& [k, coef] : nonzeros(counit)) add_scaled(s, coef, c[k]);
  if (s.is_identity()) return std::nullopt;
  return 0;
}

std::optional<std::size_t> first_mismatch(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return k;
  return std::nullopt;
}

}  // namespace

Report verify_yd(const YDModule& v) {
  const QTHopf& q = *v.qt;
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim(), d = v.dim;
  const auto& A = v.action;
  const auto& C = v.coaction;
  const auto& CR = v.coaction_R;
  Report r;
  if (A.size() != n || C.size() != n || CR.size() != n) {
    r.add("shape", false, {}, "expected one matrix per basis element");
    return r;
  }

  {
    Mat u(d, d);
    for (const auto& [k, c] : nonzeros(h.unit())) add_scaled(u, c, A[k]);
    r.add("module_unit", u.is_identity());
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (std::size_t i = 0; i < n && w.empty(); ++i) {
        Mat rhs(d, d);
        for (const auto& [k, c] : h.product_terms(i, j)) add_scaled(rhs, c, A[k]);
        if (A[i] * A[j] != rhs) w = {i, j};
      }
    r.add("module_assoc", w.empty(), w);
  }

  std::vector<Terms> delta(n), delta_R(n);
  for (std::size_t k = 0; k < n; ++k) {
    delta[k] = h.coproduct_terms(k);
    delta_R[k] = q.delta_R_terms(k);
  }
  {
    const auto w = counit_witness(h.counit(), C);
    r.add("comodule_counit", !w);
    const auto w2 = coassoc_witness(delta, C, n);
    r.add("comodule_coassoc", !w2, w2.value_or(std::vector<std::size_t>{}));
  }

  // rho(h v) = sum h1 v(-1) S(h3) (x) h2 v(0)
  {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      std::vector<Mat> rhs(n, Mat(d, d));
      const Vec d2 = h.comul_leg(h.coproduct(i), 2, 0);
      for (const auto& [ame, t] : nonzeros(d2)) {
        const std::size_t a = ame / (n * n), m = (ame / n) % n, e = ame % n;
        const Vec se = h.S(h.basis(e));
        for (std::size_t s = 0; s < n; ++s) {
          if (C[s].is_zero()) continue;
          const Mat am = A[m] * C[s];
          for (const auto& [c, coef] : nonzeros(h.mul(h.product(a, s), se))) add_scaled(rhs[c], t * coef, am);
        }
      }
      for (std::size_t c = 0; c < n && w.empty(); ++c)
        if (C[c] * A[i] != rhs[c]) w = {i, c};
    }
    r.add("yd_compat", w.empty(), w);
  }

  {
    const auto w = counit_witness(h.counit(), CR);
    r.add("coaction_R_counit", !w);
    const auto w2 = coassoc_witness(delta_R, CR, n);
    r.add("coaction_R_coassoc", !w2, w2.value_or(std::vector<std::size_t>{}));
  }

  // rho_R(h v) = sum h1 .ad v<-1> (x) h2 v<0>
  {
    const auto& ad = h.adjoint_matrices();
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      std::vector<Mat> rhs(n, Mat(d, d));
      for (const auto& [st, coef] : h.coproduct_terms(i))
        for (std::size_t a = 0; a < n; ++a) {
          if (CR[a].is_zero()) continue;
          const Mat m = A[st % n] * CR[a];
          for (const auto& [c, ce] : nonzeros(ad[st / n].col(a))) add_scaled(rhs[c], coef * ce, m);
        }
      for (std::size_t c = 0; c < n && w.empty(); ++c)
        if (CR[c] * A[i] != rhs[c]) w = {i, c};
    }
    r.add("coaction_R_adjoint", w.empty(), w);
  }

  {
    const auto w = first_mismatch(coaction_to_R(q, A, C), CR);
    r.add("roundtrip_R", !w, w ? std::vector<std::size_t>{*w} : std::vector<std::size_t>{});
    const auto w2 = first_mismatch(coaction_from_R(q, A, CR), C);
    r.add("roundtrip_plain", !w2, w2 ? std::vector<std::size_t>{*w2} : std::vector<std::size_t>{});
  }
  return r;
}

bool is_absolutely_irreducible(const YDModule& v) {
  return v.dim > 0 && generated_algebra(v.operators(), v.dim).dim() == v.dim * v.dim;
}

std::size_t yd_hom_dim(const YDModule& v, const YDModule& w) { return intertwiners(v.operators(), w.operators()).dim(); }

Subspace coaction_support(const YDModule& v) {
  const std::size_t n = v.coaction_R.size();
  EchelonBuilder b(n);
  for (std::size_t l = 0; l < v.dim; ++l)
    for (std::size_t m = 0; m < v.dim; ++m) {
      Vec x(n);
      for (std::size_t a = 0; a < n; ++a) x[a] = v.coaction_R[a](l, m);
      b.insert(x);
    }
  return b.subspace();
}

Coideal make_coideal(const QTHopf& q, const Subspace& w) {
  const std::size_t n = q.dim(), m = w.dim();
  Coideal c{w, std::vector<Mat>(n, Mat(m, m))};
  for (std::size_t k = 0; k < m; ++k) {
    const Vec dr = q.delta_R(w.basis_vector(k));
    for (std::size_t a = 0; a < n; ++a) {
      const auto coords = w.coordinates(right_leg(dr, a, n));
      if (!coords) throw BlockMismatch("subspace is not a left coideal of H_R");
      c.coaction[a].set_col(k, *coords);
    }
  }
  return c;
}

std::vector<AdjStableCoalgebra> decompose_H(const QTHopf& q, const SplitOptions& opts) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  SplitOptions o = opts;
  o.field = std::max(o.field, h.field());
  OpFamily ops = h.adjoint_matrices();
  std::vector<Mat> c(n, Mat(n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [ab, coef] : h.coproduct_terms(k)) c[ab / n](ab % n, k) = coef;
  for (auto& m : c)
    if (!m.is_zero()) ops.push_back(std::move(m));

  std::map<std::size_t, std::vector<Vec>> classes;
  std::map<std::size_t, std::size_t> mult;
  for (const auto& s : decompose_operators(ops, n, o)) {
    auto& vs = classes[s.iso_class];
    for (const auto& v : s.space.basis_vectors()) vs.push_back(v);
    ++mult[s.iso_class];
  }
  std::vector<AdjStableCoalgebra> out;
  for (const auto& [cls, vs] : classes) out.push_back({Subspace::span(n, vs), mult[cls] > 1});
  std::sort(out.begin(), out.end(),
            [](const AdjStableCoalgebra& a, const AdjStableCoalgebra& b) { return by_dim_then_basis(a.space, b.space); });

  for (std::size_t i = 0; i < out.size(); ++i) {
    const Subspace& d = out[i].space;
    for (const auto& v : d.basis_vectors()) {
      if (!in_tensor_square(d, q.delta_R(v), n)) throw CheckFailed("subcoalgebra", {i}, "block is not a subcoalgebra of H_R");
      for (const auto& m : h.adjoint_matrices())
        if (!d.contains(m * v)) throw CheckFailed("adjoint_stable", {i}, "block is not adjoint-stable");
    }
  }
  return out;
}

std::vector<Coideal> simple_coideals(const QTHopf& q, const AdjStableCoalgebra& d, const SplitOptions& opts) {
  const std::size_t n = q.dim(), m = d.dim();
  SplitOptions o = opts;
  o.field = std::max(o.field, q.hopf().field());
  const std::vector<Vec> basis = d.space.basis_vectors();
  std::vector<Mat> ops(n, Mat(m, m));
  for (std::size_t k = 0; k < m; ++k) {
    const Vec dr = q.delta_R(basis[k]);
    for (std::size_t a = 0; a < n; ++a) {
      const auto coords = d.space.coordinates(right_leg(dr, a, n));
      if (!coords) throw BlockMismatch("block is not a left coideal of H_R");
      ops[a].set_col(k, *coords);
    }
  }
  OpFamily nz;
  for (auto& op : ops)
    if (!op.is_zero()) nz.push_back(std::move(op));

  std::map<std::size_t, Subspace> best;
  for (const auto& s : decompose_operators(nz, m, o)) {
    std::vector<Vec> vs;
    for (const auto& c : s.space.basis_vectors()) vs.push_back(combine(basis, c, n));
    Subspace w = Subspace::span(n, vs);
    auto it = best.find(s.iso_class);
    if (it == best.end())
      best.emplace(s.iso_class, std::move(w));
    else if (by_dim_then_basis(w, it->second))
      it->second = std::move(w);
  }
  std::vector<Subspace> reps;
  for (auto& [cls, w] : best) reps.push_back(std::move(w));
  std::sort(reps.begin(), reps.end(), by_dim_then_basis);
  std::vector<Coideal> out;
  for (const auto& w : reps) out.push_back(make_coideal(q, w));
  return out;
}

Subspace adjoint_span(const QTHopf& q, const Subspace& w) {
  return spin(q.hopf().adjoint_matrices(), w.basis_vectors(), q.dim());
}

bool conjugate_test(const QTHopf& q, const Coideal& w, const Coideal& w2) {
  return adjoint_span(q, w.space) == adjoint_span(q, w2.space);
}

ComoduleData induced_coaction(const QTHopf& q, const Coideal& w) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim(), m = w.dim();
  const auto& ad = h.adjoint_matrices();
  ComoduleData out{n * m, std::vector<Mat>(n, Mat(n * m, n * m))};
  for (std::size_t qi = 0; qi < n; ++qi)
    for (const auto& [st, c] : h.coproduct_terms(qi)) {
      const std::size_t s = st / n, t = st % n;
      for (std::size_t a = 0; a < n; ++a) {
        if (w.coaction[a].is_zero()) continue;
        const Terms adv = nonzeros(ad[s].col(a));
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t i = 0; i < m; ++i) {
            const Cyc& cw = w.coaction[a](i, r);
            if (cw.is_zero()) continue;
            const Cyc cc = c * cw;
            for (const auto& [e, ce] : adv) addmul(out.coaction[e](t * m + i, qi * m + r), cc, ce);
          }
      }
    }
  return out;
}

Subspace cotensor(const QTHopf& q, const AdjStableCoalgebra& d, const Coideal& w, const ComoduleData& v) {
  const std::size_t n = q.dim(), m = w.dim(), dv = v.dim;
  for (std::size_t l = 0; l < dv; ++l)
    for (std::size_t k = 0; k < dv; ++k) {
      Vec x(n);
      for (std::size_t a = 0; a < n; ++a) x[a] = v.coaction[a](l, k);
      if (!d.space.contains(x)) throw BlockMismatch("comodule coaction leaves the block");
    }
  // sum_k CW_a(k, j) X[k][mm] - sum_l CV_a(mm, l) X[j][l] = 0 for every (j, a, mm)
  Mat eqs(0, m * dv);
  for (std::size_t a = 0; a < n; ++a) {
    if (w.coaction[a].is_zero() && v.coaction[a].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t mm = 0; mm < dv; ++mm) {
        Vec row(m * dv);
        for (std::size_t k = 0; k < m; ++k) row[k * dv + mm] += w.coaction[a](k, j);
        for (std::size_t l = 0; l < dv; ++l) row[j * dv + l] -= v.coaction[a](mm, l);
        if (!is_zero(row)) eqs.append_row(row);
      }
  }
  if (eqs.rows() == 0) return Subspace::full(m * dv);
  return kernel(eqs);
}

Subspace grouplike_carrier(const QTHopf& q, const Vec& g) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  const auto& ad = h.adjoint_matrices();
  Mat eqs(n * n, n);
  for (std::size_t qi = 0; qi < n; ++qi) {
    Vec col(n * n);
    for (const auto& [st, c] : h.coproduct_terms(qi)) {
      const Vec ag = ad[st / n] * g;
      for (const auto& [a, ca] : nonzeros(ag)) addmul(col[a * n + st % n], c, ca);
    }
    for (const auto& [a, ga] : nonzeros(g)) col[a * n + qi] -= ga;
    eqs.set_col(qi, col);
  }
  return kernel(eqs);
}

Vec StableAlgebra::element(const Vec& coords) const {
  Vec out(carrier.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) axpy(out, coords[k], carrier.basis_vector(k));
  return out;
}

StableAlgebra build_NW(const QTHopf& q, const AdjStableCoalgebra& d, const Coideal& w, const std::optional<Coideal>& w2) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t n = h.dim();
  StableAlgebra N;
  N.W = w;
  N.W2 = w2.value_or(w);
  N.hdim = n;
  const std::size_t m = N.W.dim(), m2 = N.W2.dim();
  N.carrier = cotensor(q, d, N.W, induced_coaction(q, N.W2));
  if (N.carrier.dim() * d.dim() != n * m * m2)
    throw DimensionMismatch("dim N * dim D = " + std::to_string(N.carrier.dim() * d.dim()) +
                            " differs from dim H * dim W * dim W' = " + std::to_string(n * m * m2));

  if (m == 1 && m2 == 1) {
    Vec g(n);
    for (std::size_t a = 0; a < n; ++a) g[a] = N.W.coaction[a](0, 0);
    if (w2) {
      Vec g2(n);
      for (std::size_t a = 0; a < n; ++a) g2[a] = N.W2.coaction[a](0, 0);
      N.grouplike_path = g == g2;
    } else {
      N.grouplike_path = true;
    }
    if (N.grouplike_path && grouplike_carrier(q, g) != N.carrier)
      throw CheckFailed("grouplike_path", {}, "grouplike carrier disagrees with the cotensor");
  }
  if (w2) return N;

  const std::size_t nd = N.carrier.dim();
  const std::vector<Vec> basis = N.carrier.basis_vectors();
  auto coords = [&](const Vec& x, const char* what) {
    auto c = N.carrier.coordinates(x);
    if (!c) throw CheckFailed(what, {}, std::string("carrier not closed: ") + what);
    return *c;
  };
  // (x o y)[k][e][l] = sum Y[k][t][j] X[j][u][l] (b_t b_u)_e
  auto compose = [&](const Vec& x, const Vec& y) {
    Vec out(m * n * m);
    for (const auto& [ktj, cy] : nonzeros(y)) {
      const std::size_t k = ktj / (n * m), t = (ktj / m) % n, j = ktj % m;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t l = 0; l < m; ++l) {
          const Cyc& cx = x[(j * n + u) * m + l];
          if (cx.is_zero()) continue;
          const Cyc c = cy * cx;
          for (const auto& [e, ce] : h.product_terms(t, u)) addmul(out[(k * n + e) * m + l], c, ce);
        }
    }
    return out;
  };
  std::vector<Vec> mult(nd * nd);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < nd; ++j) mult[i * nd + j] = coords(compose(basis[i], basis[j]), "N_product");
  Vec unit(m * n * m);
  for (const auto& [t, c] : nonzeros(h.unit()))
    for (std::size_t k = 0; k < m; ++k) unit[(k * n + t) * m + k] = c;
  auto alg = std::make_shared<const FinAlgebra>(nd, std::move(mult), coords(unit, "N_unit"));
  if (auto wa = alg->associativity_witness()) throw CheckFailed("N_assoc", *wa, "N_W product is not associative");
  if (auto wu = alg->unit_witness()) throw CheckFailed("N_unit", {*wu}, "N_W unit fails");
  N.algebra = alg;

  // rho(x) = sum S(h_(2)) (x) w* (x) h_(1) (x) w
  N.coaction.assign(n, Mat(nd, nd));
  for (std::size_t al = 0; al < nd; ++al) {
    std::vector<Vec> parts(n, Vec(m * n * m));
    for (const auto& [ktl, cx] : nonzeros(basis[al])) {
      const std::size_t k = ktl / (n * m), t = (ktl / m) % n, l = ktl % m;
      for (const auto& [ps, c] : h.coproduct_terms(t)) {
        const Vec ss = h.S(h.basis(ps % n));
        for (const auto& [a, ca] : nonzeros(ss)) addmul(parts[a][(k * n + ps / n) * m + l], cx * c, ca);
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      if (!is_zero(parts[a])) N.coaction[a].set_col(al, coords(parts[a], "N_coaction"));
  }

  // x . (b_q (x) w_j) = sum_t X[j][t][l] b_q b_t (x) w_l
  std::vector<Mat> act(nd, Mat(n * m, n * m));
  for (std::size_t al = 0; al < nd; ++al)
    for (const auto& [jtl, cx] : nonzeros(basis[al])) {
      const std::size_t j = jtl / (n * m), t = (jtl / m) % n, l = jtl % m;
      for (std::size_t qi = 0; qi < n; ++qi)
        for (const auto& [e, ce] : h.product_terms(qi, t)) addmul(act[al](e * m + l, qi * m + j), cx, ce);
    }
  N.on_HW = AlgModule{alg, Side::Left, std::move(act)};
  if (auto wm = N.on_HW.axiom_witness()) throw CheckFailed("N_action", *wm, "N_W does not act on H (x) W");
  return N;
}

YDModule induce(const QTPtr& qt, const StableAlgebra& n, const AlgModule& u) {
  const HopfAlgebra& h = qt->hopf();
  const std::size_t hd = h.dim(), m = n.W.dim(), big = hd * m, du = u.dim(), nd = n.dim();
  if (!n.algebra) throw DimensionMismatch("induction needs N_W with W' = W");
  if ((du * big) % nd != 0) throw DimensionMismatch("dim U * dim H * dim W is not divisible by dim N");
  const std::size_t expected = du * big / nd;

  EchelonBuilder rel(du * big);
  for (std::size_t al = 0; al < nd; ++al) {
    const Mat& ua = u.action[al];
    const Mat& la = n.on_HW.action[al];
    for (std::size_t p = 0; p < du; ++p)
      for (std::size_t qi = 0; qi < big; ++qi) {
        Vec r(du * big);
        for (std::size_t p2 = 0; p2 < du; ++p2)
          if (!ua(p2, p).is_zero()) r[p2 * big + qi] += ua(p2, p);
        for (std::size_t q2 = 0; q2 < big; ++q2)
          if (!la(q2, qi).is_zero()) r[p * big + q2] -= la(q2, qi);
        rel.insert(r);
      }
  }
  const Quotient quo(rel.subspace());
  if (quo.keep.size() != expected)
    throw DimensionMismatch("induced module has dimension " + std::to_string(quo.keep.size()) + ", expected " +
                            std::to_string(expected));

  const Mat id = Mat::identity(du);
  std::vector<Mat> action, coaction_R;
  for (std::size_t i = 0; i < hd; ++i) {
    const Mat t = kron(id, left_mult_HW(h, i, m));
    if (!quo.stable(t)) throw QuotientIllFormed("relations are not stable under the H-action");
    action.push_back(quo.descend(t));
  }
  const ComoduleData hw = induced_coaction(*qt, n.W);
  for (std::size_t a = 0; a < hd; ++a) {
    if (hw.coaction[a].is_zero()) {
      coaction_R.emplace_back(expected, expected);
      continue;
    }
    const Mat t = kron(id, hw.coaction[a]);
    if (!quo.stable(t)) throw QuotientIllFormed("relations are not stable under the coaction");
    coaction_R.push_back(quo.descend(t));
  }
  return YDModule::from_coaction_R(qt, std::move(action), std::move(coaction_R));
}

AlgModule cotensor_module(const QTHopf& q, const AdjStableCoalgebra& d, const StableAlgebra& n, const YDModule& v) {
  const HopfAlgebra& h = q.hopf();
  const std::size_t hd = h.dim(), m = n.W.dim(), dv = v.dim, nd = n.dim();
  const Subspace z = cotensor(q, d, n.W, {dv, v.coaction_R});
  std::vector<Mat> act(nd, Mat(z.dim(), z.dim()));
  for (std::size_t al = 0; al < nd; ++al) {
    const Vec x = n.carrier.basis_vector(al);
    for (std::size_t be = 0; be < z.dim(); ++be) {
      const Vec zb = z.basis_vector(be);
      // (z . a)[j] = sum_{t, l} A[j][t][l] b_t . z_l
      Vec out(m * dv);
      for (const auto& [jtl, cx] : nonzeros(x)) {
        const std::size_t j = jtl / (hd * m), t = (jtl / m) % hd, l = jtl % m;
        const Vec zl(zb.begin() + static_cast<std::ptrdiff_t>(l * dv), zb.begin() + static_cast<std::ptrdiff_t>((l + 1) * dv));
        const Vec moved = v.action[t] * zl;
        for (std::size_t k = 0; k < dv; ++k)
          if (!moved[k].is_zero()) addmul(out[j * dv + k], cx, moved[k]);
      }
      const auto c = z.coordinates(out);
      if (!c) throw CheckFailed("cotensor_module", {al, be}, "cotensor is not stable under N");
      act[al].set_col(be, *c);
    }
  }
  return {n.algebra, Side::Right, std::move(act)};
}

std::size_t Classification::count() const {
  std::size_t c = 0;
  for (const auto& b : blocks) c += b.modules.size();
  return c;
}

std::size_t Classification::dim_square_sum() const {
  std::size_t s = 0;
  for (const auto& b : blocks)
    for (const auto& m : b.modules) s += m.dim_V * m.dim_V;
  return s;
}

std::vector<AlgModule> irreducible_right_modules(const StableAlgebra& n, const SplitOptions& opts) {
  const AlgModule reg = AlgModule::regular(n.algebra, Side::Right);
  std::vector<AlgModule> out;
  std::vector<bool> seen;
  for (const auto& s : decompose_module(reg, opts)) {
    if (s.iso_class >= seen.size()) seen.resize(s.iso_class + 1, false);
    if (seen[s.iso_class]) continue;
    seen[s.iso_class] = true;
    out.push_back({n.algebra, Side::Right, restrict_ops(reg.action, s.space)});
  }
  return out;
}

BlockRecord classify_block(const QTPtr& qt, const AdjStableCoalgebra& d, const Coideal& w, const SplitOptions& opts) {
  SplitOptions o = opts;
  o.field = std::max(o.field, qt->hopf().field());
  const StableAlgebra N = build_NW(*qt, d, w);
  BlockRecord rec{d, w, N.dim(), N.grouplike_path, o.field, {}};
  std::vector<AlgModule> us;
  for (int step = 0;; ++step) {
    try {
      us = irreducible_right_modules(N, o);
      break;
    } catch (const FieldNotSplitting&) {
      if (step == kMaxFieldDoublings) throw;
      o.field *= 2;
    }
  }
  rec.split_field = o.field;
  for (const auto& u : us) {
    YDModule v = induce(qt, N, u);
    require_ok(verify_yd(v));
    if (!is_absolutely_irreducible(v)) throw CheckFailed("irreducible", {u.dim()}, "induced module is reducible");
    if (!d.space.contains(coaction_support(v))) throw CheckFailed("block_support", {}, "coaction leaves the block");
    rec.modules.push_back({u.dim(), v.dim, std::move(v)});
  }
  for (std::size_t i = 0; i < rec.modules.size(); ++i)
    for (std::size_t j = i + 1; j < rec.modules.size(); ++j)
      if (rec.modules[i].dim_V == rec.modules[j].dim_V && yd_hom_dim(rec.modules[i].module, rec.modules[j].module) != 0)
        throw CheckFailed("non_isomorphic", {i, j}, "two induced modules are isomorphic");
  return rec;
}

Classification classify_all(const QTPtr& qt, const SplitOptions& opts, const std::string& name,
                            const std::vector<std::size_t>& choice) {
  SplitOptions o = opts;
  o.field = std::max(o.field, qt->hopf().field());
  Classification c{name, qt->hopf().field(), opts.seed, {}};
  const auto blocks = decompose_H(*qt, o);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto ws = simple_coideals(*qt, blocks[i], o);
    const std::size_t pick = i < choice.size() ? std::min(choice[i], ws.size() - 1) : 0;
    c.blocks.push_back(classify_block(qt, blocks[i], ws[pick], o));
  }
  return c;
}

std::vector<YDModule> one_dim_yd(const QTPtr& qt, const SplitOptions& opts) {
  const HopfAlgebra& h = qt->hopf();
  const std::size_t n = h.dim();
  SplitOptions o = opts;
  o.field = std::max(o.field, h.field());
  const auto gs = grouplikes(h.coalgebra(), &h.algebra(), o);
  const auto chars = grouplikes(dual(h).coalgebra(), nullptr, o);
  std::vector<YDModule> out;
  for (const auto& g : gs) {
    if (!g.central) continue;
    for (const auto& chi : chars) {
      std::vector<Mat> a, c;
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Mat::from_rows({{chi.g[i]}}, 1));
        c.push_back(Mat::from_rows({{g.g[i]}}, 1));
      }
      out.push_back(YDModule::from_coaction_R(qt, std::move(a), std::move(c)));
    }
  }
  return out;
}

Report check_H_simple(const StableAlgebra& n, const SplitOptions& opts) {
  Report r;
  const std::size_t nd = n.dim();
  OpFamily ops;
  for (std::size_t i = 0; i < nd; ++i) {
    ops.push_back(n.algebra->left_basis(i));
    ops.push_back(n.algebra->right_basis(i));
  }
  for (const auto& k : n.coaction)
    if (!k.is_zero()) ops.push_back(k);
  const auto sub = find_submodule(ops, nd, opts);
  r.add("H_simple", !sub, sub ? std::vector<std::size_t>{sub->dim()} : std::vector<std::size_t>{},
        sub ? "coaction-stable ideal of dimension " + std::to_string(sub->dim()) : std::string{});
  return r;
}

Report check_divisibility(const Classification& c, std::size_t hdim) {
  Report r;
  std::vector<std::size_t> wn, wh;
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    const auto& blk = c.blocks[b];
    for (std::size_t i = 0; i < blk.modules.size(); ++i) {
      const auto& m = blk.modules[i];
      if (wn.empty() && blk.dim_N % (m.dim_U * blk.W.dim()) != 0) wn = {b, i};
      if (wh.empty() && hdim % m.dim_V != 0) wh = {b, i};
    }
  }
  r.add("dimUW_divides_dimN", wn.empty(), wn);
  r.add("dimV_divides_dimH", wh.empty(), wh);
  return r;
}

std::vector<CentralizerModule> centralizer_modules(const QTPtr& qt, const GroupTable& g, const SplitOptions& opts) {
  const std::size_t n = g.order();
  if (qt->dim() != n) throw DimensionMismatch("group table does not match the Hopf algebra");
  SplitOptions o = opts;
  o.field = std::max(o.field, qt->hopf().field());
  std::vector<CentralizerModule> out;
  for (const auto& cls : g.conjugacy_classes()) {
    const std::size_t rep = cls.front();
    const std::vector<std::size_t> cent = g.centralizer(rep);
    const std::size_t cs = cent.size();
    std::vector<std::size_t> pos(n, cs);
    for (std::size_t i = 0; i < cs; ++i) pos[cent[i]] = i;
    std::vector<Vec> mult(cs * cs);
    for (std::size_t i = 0; i < cs; ++i)
      for (std::size_t j = 0; j < cs; ++j) mult[i * cs + j] = unit_vec(cs, pos[g.mul[cent[i]][cent[j]]]);
    auto kc = std::make_shared<const FinAlgebra>(cs, std::move(mult), unit_vec(cs, pos[g.identity()]));

    std::vector<std::size_t> reps, coset(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      if (coset[x] != n) continue;
      for (std::size_t c : cent) coset[g.mul[x][c]] = reps.size();
      reps.push_back(x);
    }
    const std::size_t nr = reps.size();

    const AlgModule reg = AlgModule::regular(kc, Side::Left);
    std::vector<bool> seen;
    for (const auto& s : decompose_module(reg, o)) {
      if (s.iso_class >= seen.size()) seen.resize(s.iso_class + 1, false);
      if (seen[s.iso_class]) continue;
      seen[s.iso_class] = true;
      const OpFamily u = restrict_ops(reg.action, s.space);
      const std::size_t du = s.space.dim(), dim = nr * du;
      std::vector<Mat> action(n, Mat(dim, dim)), coaction(n, Mat(dim, dim));
      for (std::size_t hh = 0; hh < n; ++hh)
        for (std::size_t r = 0; r < nr; ++r) {
          const std::size_t hx = g.mul[hh][reps[r]];
          const std::size_t sidx = coset[hx];
          const std::size_t c = g.mul[g.inverse(reps[sidx])][hx];
          const Mat& uc = u[pos[c]];
          for (std::size_t i = 0; i < du; ++i)
            for (std::size_t j = 0; j < du; ++j) action[hh](sidx * du + i, r * du + j) = uc(i, j);
        }
      for (std::size_t r = 0; r < nr; ++r) {
        const std::size_t a = g.mul[g.mul[reps[r]][rep]][g.inverse(reps[r])];
        for (std::size_t i = 0; i < du; ++i) coaction[a](r * du + i, r * du + i) = Cyc(1);
      }
      out.push_back({cls.size(), du, YDModule::from_coaction(qt, std::move(action), std::move(coaction))});
    }
  }
  return out;
}

CrosscheckResult crosscheck_group(const QTPtr& qt, const GroupTable& g, const Classification& c,
                                  const SplitOptions& opts) {
  const auto oracle = centralizer_modules(qt, g, opts);
  std::multiset<std::pair<std::size_t, std::size_t>> a, b;
  for (const auto& m : oracle) a.insert({m.class_size, m.module.dim});
  for (const auto& blk : c.blocks)
    for (const auto& m : blk.modules) b.insert({blk.D.dim(), m.dim_V});
  CrosscheckResult res;
  res.total = c.count();
  res.multisets_equal = a == b;
  std::vector<bool> used(oracle.size(), false);
  for (const auto& blk : c.blocks)
    for (const auto& m : blk.modules)
      for (std::size_t k = 0; k < oracle.size(); ++k) {
        if (used[k] || oracle[k].class_size != blk.D.dim() || oracle[k].module.dim != m.dim_V) continue;
        const auto x = find_invertible(intertwiners(m.module.operators(), oracle[k].module.operators()), opts.seed);
        if (!x || rank(*x) != m.dim_V) continue;
        const OpFamily from = m.module.operators(), to = oracle[k].module.operators();
        bool commutes = true;
        for (std::size_t i = 0; i < from.size() && commutes; ++i) commutes = *x * from[i] == to[i] * *x;
        if (!commutes) continue;
        used[k] = true;
        ++res.matched;
        break;
      }
  return res;
}

}  // namespace ydkit
