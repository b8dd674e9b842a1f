#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ydkit/algebra.hpp"
#include "ydkit/linalg.hpp"

namespace ydkit {

/// One line of a verification report.
struct CheckEntry {
  std::string id;
  bool passed = true;
  /// Informational facts (S^2 = id, unimodularity, ...) never fail a report.
  bool informational = false;
  bool skipped = false;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct Report {
  std::vector<CheckEntry> entries;

  CheckEntry& add(std::string id, bool passed, std::vector<std::size_t> witness = {}, std::string detail = {});
  CheckEntry& info(std::string id, bool value, std::string detail = {});
  CheckEntry& skip(std::string id, std::string reason);
  void append(const Report& other);
  bool ok() const;
  const CheckEntry* find(std::string_view id) const;
  const CheckEntry* first_failure() const;
};

/// Sparse view of a vector: (index, coefficient) for the nonzero entries.
using Terms = std::vector<std::pair<std::size_t, Cyc>>;
Terms nonzeros(const Vec& v);

/// Coalgebra on k^dim; comult[k] lives in C (x) C with index a * dim + b.
struct Coalgebra {
  std::size_t dim = 0;
  std::vector<Vec> comult;
  Vec counit;

  /// Convolution algebra C* in the dual basis.
  FinAlgebra dual_algebra() const;
  std::optional<std::size_t> coassociativity_witness() const;
  std::optional<std::size_t> counit_witness() const;
};

class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  /// mult[i * dim + j] = b_i b_j, comult[k] = Delta(b_k) in H (x) H.
  HopfAlgebra(std::vector<std::string> names, unsigned field, std::vector<Vec> mult, std::vector<Vec> comult,
              Vec unit, Vec counit, Mat antipode);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Cyclotomic order of the working field.
  unsigned field() const { return field_; }

  const Vec& product(std::size_t i, std::size_t j) const { return mult_[i * n_ + j]; }
  const Vec& coproduct(std::size_t k) const { return comult_[k]; }
  const Terms& product_terms(std::size_t i, std::size_t j) const { return mult_t_[i * n_ + j]; }
  const Terms& coproduct_terms(std::size_t k) const { return comult_t_[k]; }
  const Vec& unit() const { return unit_; }
  const Vec& counit() const { return counit_; }
  const Mat& antipode() const { return s_; }
  const std::vector<Vec>& mult_table() const { return mult_; }
  const std::vector<Vec>& comult_table() const { return comult_; }

  Vec basis(std::size_t i) const { return unit_vec(n_, i); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec comul(const Vec& a) const;
  Cyc eps(const Vec& a) const;
  Vec S(const Vec& a) const { return s_ * a; }
  /// Componentwise product in H^{(x) legs}.
  Vec tensor_mul(const Vec& x, const Vec& y, std::size_t legs) const;
  /// Apply a linear map (given as a matrix) to one leg of a tensor.
  Vec apply_leg(const Vec& x, std::size_t legs, std::size_t leg, const Mat& m) const;
  /// Delta applied to one leg: H^{(x) legs} -> H^{(x) legs+1}.
  Vec comul_leg(const Vec& x, std::size_t legs, std::size_t leg) const;
  /// Swap of the two legs of an element of H (x) H.
  Vec flip(const Vec& x) const;
  /// h .ad a = sum h1 a S(h2).
  Vec adjoint(const Vec& h, const Vec& a) const;
  /// Matrices of a -> b_i .ad a.
  const std::vector<Mat>& adjoint_matrices() const { return ad_; }

  const FinAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const FinAlgebra> algebra_ptr() const { return alg_; }
  Coalgebra coalgebra() const { return {n_, comult_, counit_}; }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

 private:
  std::vector<std::string> names_;
  unsigned field_ = 1;
  std::size_t n_ = 0;
  std::vector<Vec> mult_, comult_;
  std::vector<Terms> mult_t_, comult_t_;
  Vec unit_, counit_;
  Mat s_;
  std::shared_ptr<const FinAlgebra> alg_;
  std::vector<Mat> ad_;
};

/// Exhaustive axiom sweep; failures carry the first witness found. Triples
/// are scanned with the last index slowest.
Report verify_hopf(const HopfAlgebra& h, const SplitOptions& opts = {});

/// H* in the dual basis delta_k.
HopfAlgebra dual(const HopfAlgebra& h);

Cyc pair(const Vec& f, const Vec& h);
/// f -> h = sum h1 <f, h2>.
Vec left_hit(const HopfAlgebra& h, const Vec& f, const Vec& x);
/// h <- f = sum <f, h1> h2.
Vec right_hit(const HopfAlgebra& h, const Vec& x, const Vec& f);
/// (a -> f)(x) = f(x a) for a in H acting on a functional.
Vec hit_functional_left(const HopfAlgebra& h, const Vec& a, const Vec& f);
/// (f <- a)(x) = f(a x).
Vec hit_functional_right(const HopfAlgebra& h, const Vec& f, const Vec& a);
/// f <-<- h = sum (S h2) -> f <- h1, i.e. x -> f(h .ad x).
Vec coadjoint(const HopfAlgebra& h, const Vec& f, const Vec& x);
/// Ordinary convolution (f * g)(x) = sum f(x1) g(x2).
Vec convolve(const HopfAlgebra& h, const Vec& f, const Vec& g);

struct IntegralData {
  Vec Lambda;  // left integral of H, eps(Lambda) = 1
  Vec lambda;  // right integral of H*, <lambda, 1> = 1
  bool unimodular = false;       // Lambda also a right integral
  bool dual_unimodular = false;  // lambda also a left integral
  Vec alpha;  // distinguished grouplike of H*: Lambda h = alpha(h) Lambda
  Vec a;      // distinguished grouplike of H: f * lambda = f(a) lambda
};

IntegralData integrals(const HopfAlgebra& h);

struct Grouplike {
  Vec g;
  bool central = false;
};

/// Grouplikes of a coalgebra from the one-dimensional blocks of its dual
/// algebra, in coordinate order; `central` is set against `ambient` if given.
std::vector<Grouplike> grouplikes(const Coalgebra& c, const FinAlgebra* ambient, const SplitOptions& opts);

}  // namespace ydkit
