#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdclass/grading.hpp"

namespace pdclass {

/// s at root level: S subset of Delta \ V0 with its parabolic
/// (-S) u V0. The grading is supplied separately to every operation.
struct ComplexStructure {
  RootSet S;
  RootSet parabolic_roots;
};

/// Splitting p = p_+^R + p_-^R by the eigenvalues of a center generator z of k.
struct HermitianSplitting {
  /// alpha(z) = sum_i n_i z_i; zero on compact roots, +-1 on noncompact ones.
  RationalVector z;
  RootSet p_plus_R;
  RootSet p_minus_R;
};

/// Empty when the center of k is trivial. The sign of z is fixed so that the
/// lowest-index noncompact simple root takes the value +1. Throws
/// Error(kHermitianAnomaly) when the center has dimension >= 2, when no
/// scaling puts every noncompact value in {+1, -1}, or when one of the ad-k
/// invariance, complementarity and abelian conditions fails.
std::optional<HermitianSplitting> hermitian_splitting(const HodgeGrading& g);

/// The same splitting with p_plus_R and p_minus_R exchanged and z negated.
HermitianSplitting conjugate_splitting(const HermitianSplitting& hs);

/// parabolic_roots = (-S) u V0, computed without validation.
ComplexStructure make_structure(const HodgeGrading& g, RootSet S);

/// S = Delta_+ \ V0.
ComplexStructure original_structure(const HodgeGrading& g);

struct NewStructure {
  ComplexStructure structure;
  HermitianSplitting splitting;
  bool differs_from_original = false;
  bool projection_holomorphic = false;
};

/// S = Kminus u p_minus_R, validated. Throws Error(kNotHermitian) without a
/// splitting and Error(kValidationFailed) if an axiom fails.
NewStructure new_complex_structure(const HodgeGrading& g);

enum class StructureAxiom {
  kNotInDomain,   // S meets V0
  kAdV0,          // V0 + S not inside S
  kAlmostComplex, // S and -S do not partition Delta \ V0
  kIntegrable,    // S + S not inside S
};

std::string axiom_name(StructureAxiom axiom);

struct StructureViolation {
  StructureAxiom axiom;
  Root first;
  /// Second root of the offending pair, when the violation is a pair.
  std::optional<Root> second;
};

struct StructureValidation {
  bool valid = true;
  std::vector<StructureViolation> violations;
};

/// Checks ad-V0 invariance, S u -S = Delta \ V0 disjointly, and S + S inside
/// S. Also checks the weaker S + S inside S u V0; given the first two axioms
/// the two integrability forms must agree, and Error(kValidationFailed) is
/// thrown if they do not.
StructureValidation validate_structure(const HodgeGrading& g, const RootSet& S);

/// (-S) u V0. Throws Error(kValidationFailed) naming the violating pair when
/// the set is not closed or does not cover Delta together with its negative.
RootSet parabolic_of(const HodgeGrading& g, const ComplexStructure& cs);

/// Also asserts equality with (-Kminus) u p_plus_R u V0.
RootSet parabolic_of_new(const HodgeGrading& g, const NewStructure& ns);

struct PositiveSystem {
  RootSet roots;
  /// Indecomposable members of `roots`, in root order.
  std::vector<RootId> simple_roots;
};

/// P = S u (V0 n Delta_+). Throws Error(kValidationFailed) unless P and -P
/// partition Delta, P is closed, and P has exactly rank simple roots.
PositiveSystem positive_system_of(const HodgeGrading& g, const ComplexStructure& cs);

struct EnumerationBounds {
  /// Largest |Delta \ V0| accepted; 48 admits every system of rank <= 4.
  std::size_t max_nonv0_roots = 48;
};

struct Enumeration {
  /// Each S as sorted root ids; discovery order.
  std::vector<RootSet> structures;
  bool truncated = false;
};

/// Every S satisfying the structure axioms, found by backtracking over the
/// sign of each pair {alpha, -alpha} in Delta \ V0 (positive roots in index
/// order, positive branch first). Stops after `limit` results. Throws
/// Error(kTooLarge) above the bound.
Enumeration enumerate_structures(const HodgeGrading& g, std::size_t limit = 100000,
                                 EnumerationBounds bounds = {});

/// The noncompact part of S equals hs.p_minus_R.
bool is_projection_holomorphic(const HodgeGrading& g, const ComplexStructure& cs,
                               const HermitianSplitting& hs);

}  // namespace pdclass
