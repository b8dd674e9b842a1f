#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ydkit/cyclotomic.hpp"

namespace ydkit {

using Vec = std::vector<Cyc>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Cyc& a, const Vec& x);  // y += a x
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Cyc& a, Vec v);
/// Index of the first nonzero entry, or v.size().
std::size_t leading_index(const Vec& v);

/// Dense row-major matrix over cyclotomic numbers.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cyc& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Cyc& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const std::vector<Cyc>& entries() const { return e_; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  void append_row(const Vec& v);

  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend Mat operator*(const Cyc& s, Mat a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyc> e_;
};

struct Echelon {
  Mat reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are chosen by least coordinate height
/// among the candidate rows of each column.
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
Cyc det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Some x with m x = b, or nullopt when b is outside the image.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Kronecker product; (e_i (x) f_j) has index i * B.cols() + j.
Mat kron(const Mat& a, const Mat& b);
/// Trace of a square matrix.
Cyc trace(const Mat& m);

/// Subspace of k^n held as a canonical reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& m);
  static Subspace full(std::size_t ambient);
  /// Trusted constructor from rows already in reduced echelon form.
  static Subspace from_echelon(std::size_t ambient, Echelon e);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row(k); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& u) const;
  /// Coordinates of v with respect to basis(); nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Coordinates of a vector already known to lie in the subspace.
  Vec coordinates_unchecked(const Vec& v) const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  /// Standard basis vectors at the non-pivot columns span a complement.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Echelon e);
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced echelon basis grown one vector at a time.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v when it is independent of the rows so far; returns whether it was.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  Subspace subspace() const;

 private:
  Vec reduce(Vec v) const;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Mat& m);

/// Lexicographic comparison of subspaces by (dim, pivots, entries).
int compare(const Subspace& a, const Subspace& b);

}  // namespace ydkit
