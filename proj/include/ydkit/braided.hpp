#pragma once

#include <vector>

#include "ydkit/algebra.hpp"
#include "ydkit/hopf.hpp"

namespace ydkit {

/// A Hopf algebra with an R-matrix, plus the transmuted coproduct and the
/// Drinfeld element computed once at construction.
class QTHopf {
 public:
  QTHopf() = default;
  /// Computes the caches; throws VerifyError("R_invertible") when R has no inverse in H (x) H.
  QTHopf(HopfAlgebra h, Vec R);

  const HopfAlgebra& hopf() const { return h_; }
  std::size_t dim() const { return h_.dim(); }
  const Vec& R() const { return r_; }
  const Vec& Rinv() const { return rinv_; }
  /// (index into H (x) H, coefficient) pairs of R.
  const Terms& R_terms() const { return r_t_; }
  /// u = sum S(R2) R1 and its inverse.
  const Vec& u() const { return u_; }
  const Vec& u_inv() const { return u_inv_; }

  /// Delta_R(b_k) = sum b_k1 S(R2) (x) R1 .ad b_k2.
  const Vec& delta_R(std::size_t k) const { return dr_[k]; }
  const std::vector<Vec>& delta_R_table() const { return dr_; }
  const Terms& delta_R_terms(std::size_t k) const { return dr_t_[k]; }
  Vec delta_R(const Vec& h) const;
  /// S_R(h) = sum R2 S(R1 .ad h).
  const Mat& S_R() const { return sr_; }
  /// The coalgebra H_R.
  Coalgebra coalgebra_R() const { return {h_.dim(), dr_, h_.counit()}; }

 private:
  HopfAlgebra h_;
  Vec r_, rinv_, u_, u_inv_;
  Terms r_t_;
  std::vector<Vec> dr_;
  std::vector<Terms> dr_t_;
  Mat sr_;
};

/// Every R-matrix identity, the Delta_R laws and the convolution cross-checks.
Report verify_qt(const QTHopf& q);
/// Builds the QTHopf and throws VerifyError with the first failing check.
QTHopf make_qt(HopfAlgebra h, Vec R);

/// H acting on itself by h .ad a.
AlgModule adjoint_action(const QTHopf& q);

/// f *_R g = sum (S R2 -> f) * (g <-<- R1).
Vec convolution_R(const QTHopf& q, const Vec& f, const Vec& g);
/// The same product read off Delta_R: (f *_R g)(h) = sum f(h^(1)) g(h^(2)).
Vec convolution_R_dual(const QTHopf& q, const Vec& f, const Vec& g);
/// Convolution algebra of H_R in the dual basis.
FinAlgebra dual_algebra_R(const QTHopf& q);

/// e_R as a dim x dim matrix: entry (a, b) is the coefficient of d_a (x) d_b.
Mat separable_idempotent(const QTHopf& q, const Vec& lambda);
/// Parts 1 and 2 of the separability statement for e_R; skipped unless H is
/// cosemisimple and unimodular.
Report check_separable_idempotent(const QTHopf& q);

/// First coordinate where Delta(x) and its flip disagree, or nullopt.
std::optional<std::size_t> cocommutativity_defect(const Coalgebra& c, const Vec& x);
/// Delta_R-cocommutativity of the left integral; skipped unless H is unimodular with S^2 = id.
Report check_integral_cocommutative(const QTHopf& q);

/// (alpha (x) id) R for the distinguished grouplike alpha of H*.
Vec alpha_tilde(const QTHopf& q, const Vec& alpha);

}  // namespace ydkit
