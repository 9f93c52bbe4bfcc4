#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdclass/cone.hpp"
#include "pdclass/grading.hpp"

namespace pdclass {

/// Classicality by definition: D is classical iff Nplus is sum-free. If
/// beta1 + beta2 is never a root for beta1, beta2 in Nplus then, for a compact
/// root alpha and beta in Nplus with alpha + beta a root, alpha + beta cannot
/// be negative (its negative would pair with beta to give -alpha), so p_- is
/// ad-k invariant and abelian: G_R/K is Hermitian with p holomorphic.
/// Conversely a Hermitian splitting with p_-^R = p_- is abelian.
struct DefinitionalVerdict {
  bool classical = true;
  /// Lexicographically first (beta1, beta2) in Nplus^2 whose sum is a root.
  std::optional<std::pair<Root, Root>> witness;
};

DefinitionalVerdict is_classical_definitional(const HodgeGrading& g);

/// The sign system {(lambda, alpha) >= 0 for alpha in cplus,
/// (lambda, beta) <= 0 for beta in nplus}, normals in that order.
ConeSystem criterion_cone(const RootSystem& rs, const RootSet& cplus, const RootSet& nplus);

struct ConeVerdict {
  bool classical = false;
  ConeSystem system;
  /// Present when the cone is {0} (non-classical).
  std::optional<FarkasCertificate> certificate;
  /// Present when the cone has a nonzero point (classical).
  std::optional<Weight> witness;
};

ConeVerdict cone_criterion(const HodgeGrading& g);
ConeVerdict cone_criterion(const RootSystem& rs, const RootSet& cplus, const RootSet& nplus);

struct BracketGeneration {
  bool generates = false;
  /// Roots added to the generators, in discovery order.
  std::vector<Root> trace;
  RootSet closure;
};

/// Closure of `generators` under root addition. Round by round, pairs
/// (a, b) with a <= b from the round's starting set are visited in index
/// order and new sums are appended at the end of the round.
RootSet additive_closure(const RootSystem& rs, const RootSet& generators,
                         std::vector<RootId>* trace = nullptr);

/// Whether the subalgebra generated by k_- + p_+ contains p_-.
BracketGeneration bracket_generation(const HodgeGrading& g);
BracketGeneration bracket_generation(const RootSystem& rs, const RootSet& kminus,
                                     const RootSet& nplus);

/// #{alpha in cplus : (lambda, alpha) < 0} + #{beta in nplus : (lambda, beta) > 0}
std::size_t q_value(const HodgeGrading& g, const Weight& lambda);

struct CurvatureSignature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  /// (lambda, alpha) for alpha in cplus, then -(lambda, beta) for beta in nplus.
  RationalVector eigenvalues;
};

CurvatureSignature curvature_signature(const HodgeGrading& g, const Weight& lambda);

/// q(lambda) >= 1: the line bundle's curvature has a negative direction, so a
/// nonzero holomorphic section cannot exist on a compact quotient.
bool predicts_vanishing(const HodgeGrading& g, const Weight& lambda);

struct NcPartition {
  RootSet nc1;  // (lambda, beta) < 0
  RootSet nc2;  // beta = alpha + beta' with alpha in cplus, beta' in nc1
  RootSet nc3;  // the rest
};

NcPartition partition_nc(const HodgeGrading& g, const Weight& lambda);

/// k = [p, p]: every compact root is a sum of two noncompact roots and the
/// noncompact roots span the Cartan dual.
bool verify_k_equals_pp(const HodgeGrading& g);

/// Every noncompact simple root is alpha - beta' with alpha in cplus and
/// beta' in nplus. Throws Error(kPreconditionClassical) for classical g.
bool verify_simple_nc_decomposition(const HodgeGrading& g);

struct DomainReport {
  char type_label = 'A';
  int rank = 0;
  std::vector<int> labels;
  std::size_t dim_D = 0;
  std::size_t dim_KV = 0;
  std::size_t m0 = 0;
  std::vector<int> two_rho_nc;
  bool hermitian_type = false;
  bool classical = false;
  std::optional<std::pair<Root, Root>> witness_nonclassical;
  std::optional<Weight> witness_classical;
  std::optional<FarkasCertificate> farkas;
  bool bracket_generates = false;
  std::vector<Root> closure_trace;
  bool cycle_chain_connected = false;

  std::string spec_string() const;
};

/// Runs the definitional, cone and bracket-generation criteria and fills the
/// report. Throws Error(kInternalInconsistency) when they disagree.
DomainReport classify(const HodgeGrading& g);

}  // namespace pdclass
