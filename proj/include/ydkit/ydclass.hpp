#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydkit/algebra.hpp"
#include "ydkit/braided.hpp"
#include "ydkit/catalog.hpp"
#include "ydkit/hopf.hpp"

namespace ydkit {

using QTPtr = std::shared_ptr<const QTHopf>;

/// Yetter-Drinfeld module over a quasitriangular H. Coactions are stored as
/// one matrix per basis element of H: rho(v) = sum_a b_a (x) C_a v.
struct YDModule {
  QTPtr qt;
  std::size_t dim = 0;
  std::vector<Mat> action;
  std::vector<Mat> coaction;
  std::vector<Mat> coaction_R;

  /// Builds from the plain coaction and derives rho_R.
  static YDModule from_coaction(QTPtr qt, std::vector<Mat> action, std::vector<Mat> coaction);
  /// Builds from rho_R and derives the plain coaction.
  static YDModule from_coaction_R(QTPtr qt, std::vector<Mat> action, std::vector<Mat> coaction_R);
  /// H with the adjoint action and Delta.
  static YDModule regular(QTPtr qt);
  /// k with the counit action and rho(1) = 1 (x) 1.
  static YDModule trivial(QTPtr qt);

  AlgModule module() const;
  /// Actions followed by coactions; YD submodules are the common invariant subspaces.
  OpFamily operators() const;
};

/// rho_R(v) = sum v(-1) S(R2) (x) R1 v(0).
std::vector<Mat> coaction_to_R(const QTHopf& q, const std::vector<Mat>& action, const std::vector<Mat>& coaction);
/// rho(v) = sum v<-1> R2 (x) R1 v<0>.
std::vector<Mat> coaction_from_R(const QTHopf& q, const std::vector<Mat>& action, const std::vector<Mat>& coaction_R);

/// Module and comodule laws, the YD condition, the rho_R laws and the rho/rho_R round trip.
Report verify_yd(const YDModule& v);

/// True when the YD operator family has no proper invariant subspace and its commutant is k.
bool is_absolutely_irreducible(const YDModule& v);
/// Dimension of the space of YD morphisms v -> w.
std::size_t yd_hom_dim(const YDModule& v, const YDModule& w);
/// Span of the left legs of rho_R.
Subspace coaction_support(const YDModule& v);

/// Minimal H-adjoint-stable subcoalgebra of H_R.
struct AdjStableCoalgebra {
  Subspace space;
  /// Set when the isotypic YD component had multiplicity > 1 and was kept whole.
  bool experimental = false;

  std::size_t dim() const { return space.dim(); }
};

/// A left coideal W of H_R with rho_R(w_k) = sum_a b_a (x) coaction[a] w_k.
struct Coideal {
  Subspace space;
  std::vector<Mat> coaction;

  std::size_t dim() const { return space.dim(); }
};

/// Comodule structure of a subspace of H_R; throws BlockMismatch unless it is a left coideal.
Coideal make_coideal(const QTHopf& q, const Subspace& w);

/// Blocks sorted by (dim, canonical basis).
std::vector<AdjStableCoalgebra> decompose_H(const QTHopf& q, const SplitOptions& opts);
/// One simple left coideal of D per comodule isomorphism class, sorted by (dim, canonical basis).
std::vector<Coideal> simple_coideals(const QTHopf& q, const AdjStableCoalgebra& d, const SplitOptions& opts);
/// H .ad W.
Subspace adjoint_span(const QTHopf& q, const Subspace& w);
bool conjugate_test(const QTHopf& q, const Coideal& w, const Coideal& w2);

/// Comodule given by matrices on k^dim, one per basis element of H.
struct ComoduleData {
  std::size_t dim = 0;
  std::vector<Mat> coaction;
};

/// H (x) W with rho_R(h (x) w) = sum h1 .ad w<-1> (x) h2 (x) w<0>; index t * dim W + i.
ComoduleData induced_coaction(const QTHopf& q, const Coideal& w);
/// W* box_D V inside W* (x) V (index k * dim V + m). Throws BlockMismatch if V's coaction leaves D.
Subspace cotensor(const QTHopf& q, const AdjStableCoalgebra& d, const Coideal& w, const ComoduleData& v);

/// N_{WW'} realized inside W* (x) H (x) W' (index (k * dim H + t) * dim W' + l).
struct StableAlgebra {
  Coideal W, W2;
  std::size_t hdim = 0;
  Subspace carrier;
  /// Set only when W2 = W; the product x y is x o y (x applied after y).
  std::shared_ptr<const FinAlgebra> algebra;
  /// rho(x) = sum_a b_a (x) coaction[a] x in carrier coordinates.
  std::vector<Mat> coaction;
  /// Left action on H (x) W.
  AlgModule on_HW;
  bool grouplike_path = false;

  std::size_t dim() const { return carrier.dim(); }
  /// The carrier element in W* (x) H (x) W' for given carrier coordinates.
  Vec element(const Vec& coords) const;
};

/// Throws DimensionMismatch if dim N * dim D != dim H * dim W * dim W'.
StableAlgebra build_NW(const QTHopf& q, const AdjStableCoalgebra& d, const Coideal& w,
                       const std::optional<Coideal>& w2 = std::nullopt);
/// {h : sum h1 .ad g (x) h2 = g (x) h}.
Subspace grouplike_carrier(const QTHopf& q, const Vec& g);

/// U (x)_N (H (x) W) for a right N-module U. Throws QuotientIllFormed if the relations are not stable.
YDModule induce(const QTPtr& qt, const StableAlgebra& n, const AlgModule& u);
/// Hom^D(H (x) W, V) = W* box_D V as a right N-module.
AlgModule cotensor_module(const QTHopf& q, const AdjStableCoalgebra& d, const StableAlgebra& n, const YDModule& v);

struct ModuleRecord {
  std::size_t dim_U = 0;
  std::size_t dim_V = 0;
  YDModule module;
};

struct BlockRecord {
  AdjStableCoalgebra D;
  Coideal W;
  std::size_t dim_N = 0;
  bool grouplike_path = false;
  /// Cyclotomic order in which the irreducible N_W-modules were found.
  unsigned split_field = 1;
  std::vector<ModuleRecord> modules;
};

struct Classification {
  std::string name;
  unsigned field = 1;
  std::uint64_t seed = 0;
  std::vector<BlockRecord> blocks;

  std::size_t count() const;
  /// Sum of (dim V)^2 over all modules.
  std::size_t dim_square_sum() const;
};

/// Irreducible right N-modules, one per class.
std::vector<AlgModule> irreducible_right_modules(const StableAlgebra& n, const SplitOptions& opts);
/// Times the splitting field is doubled before FieldNotSplitting propagates.
inline constexpr int kMaxFieldDoublings = 3;

/// Modules of one block from a chosen coideal; verifies each and asserts pairwise non-isomorphism.
/// The splitting field starts at opts.field and is doubled while N_W does not split.
BlockRecord classify_block(const QTPtr& qt, const AdjStableCoalgebra& d, const Coideal& w, const SplitOptions& opts);
/// `choice` picks the coideal index per block (clamped); the default takes the first.
Classification classify_all(const QTPtr& qt, const SplitOptions& opts, const std::string& name = {},
                            const std::vector<std::size_t>& choice = {});

/// One-dimensional YD modules from central grouplikes of H and characters of H.
std::vector<YDModule> one_dim_yd(const QTPtr& qt, const SplitOptions& opts);

/// N has no proper nonzero subspace that is an ideal and stable under the coaction.
Report check_H_simple(const StableAlgebra& n, const SplitOptions& opts);
Report check_divisibility(const Classification& c, std::size_t hdim);

/// M(g, U) = kG (x)_{kC(g)} U over each class representative, for a group algebra.
struct CentralizerModule {
  std::size_t class_size = 0;
  std::size_t dim_U = 0;
  YDModule module;
};
std::vector<CentralizerModule> centralizer_modules(const QTPtr& qt, const GroupTable& g, const SplitOptions& opts);

struct CrosscheckResult {
  std::size_t matched = 0;
  std::size_t total = 0;
  bool multisets_equal = false;
};
/// Pairs classify_all output with the centralizer construction; a pair counts once an invertible
/// YD intertwiner between them is found and checked.
CrosscheckResult crosscheck_group(const QTPtr& qt, const GroupTable& g, const Classification& c,
                                  const SplitOptions& opts);

}  // namespace ydkit
