#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "ydkit/linalg.hpp"
#include "ydkit/roots.hpp"

namespace ydkit {

/// Knobs shared by every randomized splitting routine.
struct SplitOptions {
  std::uint64_t seed = 0;
  std::int64_t max_den = kDefaultMaxDen;
  /// Cyclotomic order of the working field; roots are searched in Q(zeta_field).
  unsigned field = 1;
  int max_attempts = 48;
};

/// Deterministic source of small random coefficients.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed * 0x9E3779B97F4A7C15ULL + 0x5851F42D4C957F2DULL) {}
  Cyc small() { return Cyc(static_cast<long>(gen_() % 7) - 3); }
  Cyc nonzero() {
    const long v = static_cast<long>(gen_() % 6);
    return Cyc(v < 3 ? v - 3 : v - 2);
  }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// Finite-dimensional associative unital algebra given by structure constants.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  /// mult[i * dim + j] holds b_i b_j.
  FinAlgebra(std::size_t dim, std::vector<Vec> mult, Vec unit);

  std::size_t dim() const { return dim_; }
  const Vec& product(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  const Vec& unit() const { return unit_; }
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of x -> a x (columns indexed by basis).
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;
  const Mat& left_basis(std::size_t i) const { return left_[i]; }
  const Mat& right_basis(std::size_t i) const { return right_[i]; }

  /// First (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), scanning k slowest.
  std::optional<std::vector<std::size_t>> associativity_witness() const;
  std::optional<std::size_t> unit_witness() const;
  Subspace center() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> mult_;
  Vec unit_;
  std::vector<Mat> left_, right_;
};

enum class Side { Left, Right };

/// Module over a FinAlgebra: one matrix per algebra basis element acting on
/// column vectors. For a right module, action[i] is v -> v . b_i.
struct AlgModule {
  std::shared_ptr<const FinAlgebra> algebra;
  Side side = Side::Left;
  std::vector<Mat> action;

  std::size_t dim() const { return action.empty() ? 0 : action.front().rows(); }
  /// Regular module of A acting on itself from the given side.
  static AlgModule regular(std::shared_ptr<const FinAlgebra> a, Side side);
  /// First (i, j) violating the module law, or {unit index} style witness.
  std::optional<std::vector<std::size_t>> axiom_witness() const;
};

/// Subspace of rows x cols matrices, stored flattened row-major.
struct MatSpace {
  std::size_t rows = 0, cols = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  Mat element(std::size_t k) const;
  Mat combine(const Vec& coeffs) const;
};

using OpFamily = std::vector<Mat>;

/// All X (n_to x n_from) with X from[k] = to[k] X for every k.
MatSpace intertwiners(const OpFamily& from, const OpFamily& to);
MatSpace commutant(const OpFamily& ops);
/// An invertible element of the space if one shows up among the basis and
/// seeded random combinations.
std::optional<Mat> find_invertible(const MatSpace& space, std::uint64_t seed, int attempts = 24);

/// Smallest subspace containing `seeds` and stable under ops.
Subspace spin(const OpFamily& ops, const std::vector<Vec>& seeds, std::size_t n);
/// Matrix subalgebra (with identity) generated by ops, as flattened matrices.
Subspace generated_algebra(const OpFamily& ops, std::size_t n);
/// Operators restricted to a stable subspace, in the coordinates of its basis.
OpFamily restrict_ops(const OpFamily& ops, const Subspace& stable);

/// Minimal polynomial of a square matrix (monic, low to high).
Poly minimal_polynomial(const Mat& m);

/// A proper nonzero stable subspace, or nullopt when the family acts
/// absolutely irreducibly. Throws FieldNotSplitting when the commutant is a
/// proper field extension that cannot be split in-field.
std::optional<Subspace> find_submodule(const OpFamily& ops, std::size_t n, const SplitOptions& opts);

struct Summand {
  Subspace space;
  std::size_t iso_class;
};

/// Irreducible stable subspaces whose direct sum is k^n; summands in the same
/// isomorphism class share iso_class. Classes are numbered in order of first
/// appearance after sorting summands by (dim, canonical basis).
std::vector<Summand> decompose_operators(const OpFamily& ops, std::size_t n, const SplitOptions& opts);
std::vector<Summand> decompose_module(const AlgModule& m, const SplitOptions& opts);

MatSpace hom_space(const AlgModule& m, const AlgModule& n);
std::optional<Mat> find_isomorphism(const AlgModule& m, const AlgModule& n, std::uint64_t seed = 0);

/// Kernel of the trace form (a, b) -> tr(L_a L_b).
Subspace radical(const FinAlgebra& a);
/// Complete set of orthogonal central primitive idempotents, sorted by
/// (block dimension, coordinates).
std::vector<Vec> central_primitive_idempotents(const FinAlgebra& a, const SplitOptions& opts);

}  // namespace ydkit
