#include "ydkit/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "ydkit/errors.hpp"

namespace ydkit {

namespace {

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

Mat scalar_shift(Mat m, const Cyc& r) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= r;
  return m;
}

bool is_scalar(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && m(i, i) != m(0, 0)) return false;
    }
  return true;
}

/// Tr(a b) for square matrices of equal size.
Cyc trace_of_product(const Mat& a, const Mat& b) {
  Cyc t;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (!a(p, q).is_zero() && !b(q, p).is_zero()) addmul(t, a(p, q), b(q, p));
  return t;
}

/// Minimal polynomial of x inside an algebra given by mul and its unit.
template <class Mul>
Poly minimal_polynomial_in(const Vec& x, const Vec& unit, Mul mul) {
  const std::size_t n = x.size();
  std::vector<Vec> powers{unit};
  while (true) {
    Vec next = mul(powers.back(), x);
    const Mat cols = Mat::from_columns(powers, n);
    if (auto c = solve(cols, next)) {
      Poly p(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) p[k] = -(*c)[k];
      p.back() = Cyc(1);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

template <class Mul>
Vec eval_in(const Poly& p, const Vec& x, const Vec& unit, Mul mul) {
  Vec acc(x.size());
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = mul(acc, x);
    axpy(acc, p[k], unit);
  }
  return acc;
}

}  // namespace

FinAlgebra::FinAlgebra(std::size_t dim, std::vector<Vec> mult, Vec unit)
    : dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.size() != dim_ * dim_ || unit_.size() != dim_)
    throw DimensionMismatch("structure constants do not match the algebra dimension");
  for (const auto& v : mult_)
    if (v.size() != dim_) throw DimensionMismatch("product vector has the wrong length");
  left_.assign(dim_, Mat(dim_, dim_));
  right_.assign(dim_, Mat(dim_, dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t p = 0; p < dim_; ++p) {
        left_[i](p, j) = mult_[i * dim_ + j][p];
        right_[i](p, j) = mult_[j * dim_ + i][p];
      }
}

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Cyc c = a[i] * b[j];
      axpy(out, c, mult_[i * dim_ + j]);
    }
  }
  return out;
}

Mat FinAlgebra::left_mult(const Vec& a) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a[i].is_zero()) m += a[i] * left_[i];
  return m;
}

Mat FinAlgebra::right_mult(const Vec& a) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a[i].is_zero()) m += a[i] * right_[i];
  return m;
}

std::optional<std::vector<std::size_t>> FinAlgebra::associativity_witness() const {
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& jk = product(j, k);
      for (std::size_t i = 0; i < dim_; ++i) {
        const Vec lhs = right_[k] * product(i, j);
        const Vec rhs = left_[i] * jk;
        if (lhs != rhs) return std::vector<std::size_t>{i, j, k};
      }
    }
  return std::nullopt;
}

std::optional<std::size_t> FinAlgebra::unit_witness() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec b = unit_vec(dim_, i);
    if (mul(unit_, b) != b || mul(b, unit_) != b) return i;
  }
  return std::nullopt;
}

Subspace FinAlgebra::center() const {
  Mat c(dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k)
      for (std::size_t p = 0; p < dim_; ++p) c(i * dim_ + p, k) = product(k, i)[p] - product(i, k)[p];
  return kernel(c);
}

AlgModule AlgModule::regular(std::shared_ptr<const FinAlgebra> a, Side side) {
  AlgModule m;
  m.side = side;
  for (std::size_t i = 0; i < a->dim(); ++i) m.action.push_back(side == Side::Left ? a->left_basis(i) : a->right_basis(i));
  m.algebra = std::move(a);
  return m;
}

std::optional<std::vector<std::size_t>> AlgModule::axiom_witness() const {
  const std::size_t n = algebra->dim();
  Mat u(dim(), dim());
  for (std::size_t k = 0; k < n; ++k)
    if (!algebra->unit()[k].is_zero()) u += algebra->unit()[k] * action[k];
  if (!u.is_identity()) return std::vector<std::size_t>{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat want(dim(), dim());
      const Vec& ij = algebra->product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!ij[k].is_zero()) want += ij[k] * action[k];
      const Mat got = side == Side::Left ? action[i] * action[j] : action[j] * action[i];
      if (got != want) return std::vector<std::size_t>{i, j};
    }
  return std::nullopt;
}

Mat MatSpace::element(std::size_t k) const { return unflatten(space.basis_vector(k), rows, cols); }

Mat MatSpace::combine(const Vec& coeffs) const {
  Vec v(rows * cols);
  for (std::size_t k = 0; k < dim(); ++k) axpy(v, coeffs[k], space.basis_vector(k));
  return unflatten(v, rows, cols);
}

MatSpace intertwiners(const OpFamily& from, const OpFamily& to) {
  if (from.size() != to.size()) throw DimensionMismatch("operator families differ in length");
  const std::size_t nf = from.empty() ? 0 : from.front().cols();
  const std::size_t nt = to.empty() ? 0 : to.front().rows();
  if (from.empty()) return {nt, nf, Subspace::full(nt * nf)};
  // Current solutions as flattened matrices; constraints applied one operator at a time.
  std::vector<Mat> sols;
  for (std::size_t r = 0; r < nt; ++r)
    for (std::size_t c = 0; c < nf; ++c) {
      Mat e(nt, nf);
      e(r, c) = Cyc(1);
      sols.push_back(std::move(e));
    }
  for (std::size_t k = 0; k < from.size() && !sols.empty(); ++k) {
    if (from[k].is_identity() && to[k].is_identity()) continue;
    std::vector<Vec> cols;
    cols.reserve(sols.size());
    for (const auto& x : sols) cols.push_back(flatten(x * from[k] - to[k] * x));
    const Subspace ker = kernel(Mat::from_columns(cols, nt * nf));
    std::vector<Mat> next;
    for (std::size_t s = 0; s < ker.dim(); ++s) {
      Mat x(nt, nf);
      const Vec t = ker.basis_vector(s);
      for (std::size_t j = 0; j < sols.size(); ++j)
        if (!t[j].is_zero()) x += t[j] * sols[j];
      next.push_back(std::move(x));
    }
    sols = std::move(next);
  }
  std::vector<Vec> flat;
  for (const auto& x : sols) flat.push_back(flatten(x));
  return {nt, nf, Subspace::span(nt * nf, flat)};
}

MatSpace commutant(const OpFamily& ops) { return intertwiners(ops, ops); }

std::optional<Mat> find_invertible(const MatSpace& space, std::uint64_t seed, int attempts) {
  if (space.rows != space.cols || space.dim() == 0) return std::nullopt;
  for (std::size_t k = 0; k < space.dim(); ++k) {
    Mat x = space.element(k);
    if (!det(x).is_zero()) return x;
  }
  Rng rng(seed);
  for (int a = 0; a < attempts; ++a) {
    Vec c(space.dim());
    for (auto& x : c) x = rng.small();
    Mat x = space.combine(c);
    if (!det(x).is_zero()) return x;
  }
  return std::nullopt;
}

Subspace spin(const OpFamily& ops, const std::vector<Vec>& seeds, std::size_t n) {
  EchelonBuilder b(n);
  std::vector<Vec> todo;
  for (const auto& s : seeds)
    if (b.insert(s)) todo.push_back(s);
  while (!todo.empty()) {
    const Vec v = std::move(todo.back());
    todo.pop_back();
    for (const auto& op : ops) {
      Vec w = op * v;
      if (b.insert(w)) todo.push_back(std::move(w));
    }
  }
  return b.subspace();
}

Subspace generated_algebra(const OpFamily& ops, std::size_t n) {
  EchelonBuilder b(n * n);
  std::vector<Mat> todo{Mat::identity(n)};
  b.insert(flatten(todo.front()));
  while (!todo.empty() && b.dim() < n * n) {
    const Mat m = std::move(todo.back());
    todo.pop_back();
    for (const auto& op : ops) {
      Mat w = op * m;
      if (b.insert(flatten(w))) todo.push_back(std::move(w));
    }
  }
  return b.subspace();
}

OpFamily restrict_ops(const OpFamily& ops, const Subspace& stable) {
  OpFamily out;
  const std::size_t d = stable.dim();
  for (const auto& op : ops) {
    Mat r(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      auto c = stable.coordinates(op * stable.basis_vector(k));
      if (!c) throw Error("subspace is not stable under the operator family");
      for (std::size_t i = 0; i < d; ++i) r(i, k) = (*c)[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

Poly minimal_polynomial(const Mat& m) {
  const std::size_t n = m.rows();
  return minimal_polynomial_in(flatten(Mat::identity(n)), flatten(Mat::identity(n)),
                               [&](const Vec& a, const Vec& b) {
                                 (void)b;
                                 return flatten(unflatten(a, n, n) * m);
                               });
}

std::optional<Subspace> find_submodule(const OpFamily& ops, std::size_t n, const SplitOptions& opts) {
  if (n <= 1) return std::nullopt;
  const Subspace alg = generated_algebra(ops, n);
  if (alg.dim() == n * n) return std::nullopt;

  // A nonzero radical acts nilpotently, so rad(A) V is proper and nonzero.
  std::vector<Mat> elems;
  for (std::size_t k = 0; k < alg.dim(); ++k) elems.push_back(unflatten(alg.basis_vector(k), n, n));
  Mat form(elems.size(), elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) form(i, j) = form(j, i) = trace_of_product(elems[i], elems[j]);
  const Subspace rad = kernel(form);
  if (rad.dim() > 0) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < rad.dim(); ++k) {
      const Vec t = rad.basis_vector(k);
      Mat r(n, n);
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (!t[j].is_zero()) r += t[j] * elems[j];
      for (std::size_t c = 0; c < n; ++c) vs.push_back(r.col(c));
    }
    return Subspace::span(n, vs);
  }

  auto eigenspace = [&](const Mat& x) -> std::optional<Subspace> {
    for (const auto& root : find_roots_in_field(minimal_polynomial(x), opts.max_den, opts.field)) {
      Subspace k = kernel(scalar_shift(x, root.value));
      if (k.dim() > 0 && k.dim() < n) return k;
    }
    return std::nullopt;
  };

  // Semisimple but not the full matrix algebra: the commutant is larger than k.
  const MatSpace e = commutant(ops);
  Rng rng(opts.seed);
  for (std::size_t k = 0; k < e.dim(); ++k) {
    const Mat x = e.element(k);
    if (is_scalar(x)) continue;
    if (auto s = eigenspace(x)) return s;
  }
  for (int a = 0; a < opts.max_attempts && e.dim() > 1; ++a) {
    Vec c(e.dim());
    for (auto& x : c) x = rng.small();
    const Mat x = e.combine(c);
    if (is_scalar(x)) continue;
    if (auto s = eigenspace(x)) return s;
  }
  // Eigenvectors of algebra elements spin up to submodules.
  auto try_spin = [&](const Mat& x) -> std::optional<Subspace> {
    for (const auto& root : find_roots_in_field(minimal_polynomial(x), opts.max_den, opts.field)) {
      const Subspace k = kernel(scalar_shift(x, root.value));
      for (std::size_t j = 0; j < k.dim(); ++j) {
        Subspace s = spin(ops, {k.basis_vector(j)}, n);
        if (s.dim() < n) return s;
      }
    }
    return std::nullopt;
  };
  for (const auto& x : elems)
    if (auto s = try_spin(x)) return s;
  for (int a = 0; a < opts.max_attempts; ++a) {
    Mat x(n, n);
    for (const auto& el : elems) x += rng.small() * el;
    if (auto s = try_spin(x)) return s;
  }
  throw FieldNotSplitting("no in-field eigenvalue splits a module of dimension " + std::to_string(n));
}

namespace {

void decompose_rec(const OpFamily& ops, const Mat& embed, const SplitOptions& opts, std::vector<Mat>& out) {
  const std::size_t d = embed.rows();
  auto sub = find_submodule(ops, d, opts);
  if (!sub) {
    out.push_back(embed);
    return;
  }
  // A module projection V -> U that restricts to the identity on U; its kernel is a stable complement.
  const OpFamily on_sub = restrict_ops(ops, *sub);
  const MatSpace homs = intertwiners(ops, on_sub);
  const std::size_t u = sub->dim();
  const Mat incl = sub->basis().transpose();
  Mat system(u * u, homs.dim());
  for (std::size_t k = 0; k < homs.dim(); ++k) {
    const Mat p = homs.element(k) * incl;
    for (std::size_t i = 0; i < u * u; ++i) system(i, k) = p.entries()[i];
  }
  const auto coeffs = solve(system, flatten(Mat::identity(u)));
  if (!coeffs) throw NonSemisimple("submodule of dimension " + std::to_string(u) + " has no stable complement");
  const Subspace comp = kernel(homs.combine(*coeffs));
  decompose_rec(on_sub, sub->basis() * embed, opts, out);
  decompose_rec(restrict_ops(ops, comp), comp.basis() * embed, opts, out);
}

}  // namespace

std::vector<Summand> decompose_operators(const OpFamily& ops, std::size_t n, const SplitOptions& opts) {
  std::vector<Mat> pieces;
  if (n > 0) decompose_rec(ops, Mat::identity(n), opts, pieces);
  std::vector<Subspace> spaces;
  for (const auto& p : pieces) spaces.push_back(Subspace::row_space(p));
  std::sort(spaces.begin(), spaces.end(), [](const Subspace& a, const Subspace& b) { return compare(a, b) < 0; });

  std::vector<Summand> out;
  std::vector<std::pair<std::size_t, OpFamily>> reps;  // (summand index, restricted ops)
  for (auto& s : spaces) {
    OpFamily local = restrict_ops(ops, s);
    std::size_t cls = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (out[reps[r].first].space.dim() != s.dim()) continue;
      if (find_invertible(intertwiners(local, reps[r].second), opts.seed)) {
        cls = r;
        break;
      }
    }
    if (cls == reps.size()) reps.emplace_back(out.size(), std::move(local));
    out.push_back({std::move(s), cls});
  }
  return out;
}

std::vector<Summand> decompose_module(const AlgModule& m, const SplitOptions& opts) {
  return decompose_operators(m.action, m.dim(), opts);
}

MatSpace hom_space(const AlgModule& m, const AlgModule& n) {
  if (m.algebra && n.algebra && m.algebra->dim() != n.algebra->dim())
    throw DimensionMismatch("modules over different algebras");
  return intertwiners(m.action, n.action);
}

std::optional<Mat> find_isomorphism(const AlgModule& m, const AlgModule& n, std::uint64_t seed) {
  if (m.dim() != n.dim()) return std::nullopt;
  return find_invertible(hom_space(m, n), seed);
}

Subspace radical(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  Mat form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) form(i, j) = form(j, i) = trace_of_product(a.left_basis(i), a.left_basis(j));
  return kernel(form);
}

std::vector<Vec> central_primitive_idempotents(const FinAlgebra& a, const SplitOptions& opts) {
  const std::size_t n = a.dim();
  const auto zbasis = a.center().basis_vectors();
  auto mul = [&](const Vec& x, const Vec& y) { return a.mul(x, y); };
  Rng rng(opts.seed);

  std::vector<Vec> done, todo{a.unit()};
  while (!todo.empty()) {
    const Vec e = std::move(todo.back());
    todo.pop_back();
    std::vector<Vec> ez;
    for (const auto& z : zbasis) ez.push_back(a.mul(e, z));
    const Subspace block = Subspace::span(n, ez);
    if (block.dim() <= 1) {
      done.push_back(e);
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < opts.max_attempts && !split; ++attempt) {
      Vec c(n);
      for (std::size_t k = 0; k < block.dim(); ++k) axpy(c, attempt == 0 ? Cyc(static_cast<long>(k + 1)) : rng.small(), block.basis_vector(k));
      const Poly mp = minimal_polynomial_in(c, e, mul);
      if (poly::degree(mp) < 2) continue;
      const auto roots = find_roots_in_field(mp, opts.max_den, opts.field);
      if (roots.empty()) continue;
      Vec rest = e;
      for (const auto& r : roots) {
        const Poly q = poly::divmod(mp, Poly{-r.value, Cyc(1)}).first;
        const Cyc qr = poly::eval(q, r.value);
        if (qr.is_zero()) throw NonSemisimple("central element with a repeated eigenvalue");
        Vec er = qr.inv() * eval_in(q, c, e, mul);
        rest = rest - er;
        todo.push_back(std::move(er));
      }
      if (!is_zero(rest)) todo.push_back(std::move(rest));
      split = true;
    }
    if (!split)
      throw FieldNotSplitting("center block of dimension " + std::to_string(block.dim()) + " does not split in-field");
  }
  for (const auto& e : done)
    if (a.mul(e, e) != e) throw NonSemisimple("center is not a product of fields");

  std::vector<std::pair<std::size_t, Vec>> keyed;
  for (auto& e : done) keyed.emplace_back(rank(a.left_mult(e)), std::move(e));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    for (std::size_t k = 0; k < x.second.size(); ++k)
      if (int c = compare(x.second[k], y.second[k]); c != 0) return c < 0;
    return false;
  });
  std::vector<Vec> out;
  for (auto& [d, e] : keyed) out.push_back(std::move(e));
  return out;
}

}  // namespace ydkit
