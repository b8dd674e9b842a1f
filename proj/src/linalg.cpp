#include "ydkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ydkit/errors.hpp"

namespace ydkit {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = Cyc(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& axpy(Vec& y, const Cyc& a, const Vec& x) {
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) addmul(y[i], a, x[i]);
  return y;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator*(const Cyc& a, Vec v) {
  for (auto& x : v) x = a * x;
  return v;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyc(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Mat::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyc& y = b(k, j);
        if (!y.is_zero()) addmul(c(i, j), x, y);
      }
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) addmul(out[i], a(i, k), v[k]);
  }
  return out;
}

Mat operator*(const Cyc& s, Mat a) {
  for (auto& x : a.e_) x = s * x;
  return a;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

/// In-place elimination; returns pivot columns. With `reduce` false only
/// entries below each pivot are cleared and pivots are not normalized.
std::vector<std::size_t> eliminate(Mat& a, bool reduce, std::size_t col_limit, int* sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t best = rows, best_h = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const std::size_t h = a(i, c).height();
      if (best == rows || h < best_h) {
        best = i;
        best_h = h;
      }
    }
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
      if (sign) *sign = -*sign;
    }
    if (reduce) {
      const Cyc inv = a(r, c).inv();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) nz.push_back(j);
    const Cyc pivot_inv = reduce ? Cyc(1) : a(r, c).inv();
    for (std::size_t i = reduce ? 0 : r + 1; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Cyc f = reduce ? a(i, c) : a(i, c) * pivot_inv;
      for (std::size_t j : nz) submul(a(i, j), f, a(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon rref(const Mat& m) {
  Mat a = m;
  auto pivots = eliminate(a, true, a.cols());
  Mat reduced(pivots.size(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) reduced(i, j) = std::move(a(i, j));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  Mat a = m;
  return eliminate(a, false, a.cols()).size();
}

Cyc det(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Mat a = m;
  int sign = 1;
  auto pivots = eliminate(a, false, a.cols(), &sign);
  if (pivots.size() < a.rows()) return Cyc(0);
  Cyc d(sign);
  for (std::size_t i = 0; i < a.rows(); ++i) d *= a(i, i);
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = Cyc(1);
  }
  auto pivots = eliminate(a, true, n);
  if (pivots.size() < n) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = std::move(a(i, n + j));
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t n = m.cols();
  Mat a(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = b[i];
  }
  auto pivots = eliminate(a, true, n);
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (!a(i, n).is_zero()) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, n);
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Cyc trace(const Mat& m) {
  Cyc t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace::Subspace(std::size_t ambient, Echelon e)
    : ambient_(ambient), basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) throw AmbientMismatch("spanning vector has the wrong length");
  return Subspace(ambient, rref(Mat::from_rows(vectors, ambient)));
}

Subspace Subspace::row_space(const Mat& m) { return Subspace(m.cols(), rref(m)); }

Subspace Subspace::full(std::size_t ambient) { return row_space(Mat::identity(ambient)); }

Subspace Subspace::from_echelon(std::size_t ambient, Echelon e) { return Subspace(ambient, std::move(e)); }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.row(k));
  return out;
}

Vec Subspace::coordinates_unchecked(const Vec& v) const {
  Vec c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from the ambient dimension");
  Vec rest = v;
  Vec c = coordinates_unchecked(v);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) submul(rest[j], c[k], basis_(k, j));
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& u) const {
  if (u.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
  for (std::size_t k = 0; k < u.dim(); ++k)
    if (!contains(u.basis_.row(k))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
  auto vs = basis_vectors();
  for (auto& v : o.basis_vectors()) vs.push_back(std::move(v));
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw AmbientMismatch("subspaces live in different ambient spaces");
  // (U^0 + V^0)^0 for the coordinate pairing.
  const Subspace ann = kernel(basis_).sum(kernel(o.basis_));
  return kernel(ann.basis_);
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Vec EchelonBuilder::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v[pivots_[k]].is_zero()) continue;
    const Cyc f = v[pivots_[k]];
    const Vec& r = rows_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!r[j].is_zero()) submul(v[j], f, r[j]);
  }
  return v;
}

bool EchelonBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBuilder::insert(const Vec& v_in) {
  if (v_in.size() != ambient_) throw AmbientMismatch("vector length differs from the ambient dimension");
  Vec v = reduce(v_in);
  const std::size_t p = leading_index(v);
  if (p == ambient_) return false;
  const Cyc inv = v[p].inv();
  for (std::size_t j = p; j < ambient_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  for (auto& r : rows_) {
    if (r[p].is_zero()) continue;
    const Cyc f = r[p];
    for (std::size_t j = p; j < ambient_; ++j)
      if (!v[j].is_zero()) submul(r[j], f, v[j]);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace EchelonBuilder::subspace() const {
  return Subspace::from_echelon(ambient_, {Mat::from_rows(rows_, ambient_), pivots_});
}

Subspace kernel(const Mat& m) {
  const std::size_t n = m.cols();
  const Echelon e = rref(m);
  std::vector<Vec> vs;
  std::size_t k = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (k < e.pivots.size() && e.pivots[k] == f) {
      ++k;
      continue;
    }
    Vec v(n);
    v[f] = Cyc(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.reduced(i, f).is_zero()) v[e.pivots[i]] = -e.reduced(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

int compare(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots() ? -1 : 1;
  const auto& x = a.basis().entries();
  const auto& y = b.basis().entries();
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k)
    if (int c = compare(x[k], y[k]); c != 0) return c;
  return 0;
}

}  // namespace ydkit
