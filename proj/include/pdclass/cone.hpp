#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "pdclass/rational.hpp"

namespace pdclass {

/// The polyhedral cone C = {lambda : <a, lambda> >= 0 for every normal a}.
struct ConeSystem {
  std::size_t dimension = 0;
  std::vector<RationalVector> normals;

  /// Throws Error(kInvalidArgument) when empty or ragged.
  void validate() const;
};

/// sign * e_axis written as a nonnegative combination of the normals.
struct DirectionCombination {
  std::size_t axis = 0;
  int sign = 1;
  RationalVector coefficients;
};

/// One combination per signed coordinate direction, ordered
/// +e_0, -e_0, +e_1, -e_1, ... Existence for all 2r directions means the
/// dual cone is everything, i.e. C = {0}.
struct FarkasCertificate {
  std::vector<DirectionCombination> combinations;
};

struct ConeTrivial {
  FarkasCertificate certificate;
};

struct ConeNontrivial {
  /// Primitive integer point of C, nonzero.
  std::vector<BigInt> witness;
  /// Index (in certificate order) of the first direction that is not a
  /// nonnegative combination of the normals.
  std::size_t failed_direction = 0;
};

using ConeDecision = std::variant<ConeTrivial, ConeNontrivial>;

/// Result of one Phase-I solve for "target = sum_j y_j a_j, y >= 0".
struct CombinationSolve {
  bool feasible = false;
  RationalVector coefficients;  // y, when feasible
  RationalVector farkas_ray;    // mu with <a_j, mu> >= 0 and <target, mu> < 0, otherwise
};

/// Exact Phase-I simplex with Bland's least-index rule.
CombinationSolve solve_nonnegative_combination(const std::vector<RationalVector>& normals,
                                               const RationalVector& target);

ConeDecision decide_cone(const ConeSystem& sys);

bool verify_certificate(const ConeSystem& sys, const FarkasCertificate& cert);

/// True iff <a, point> >= 0 for every normal.
bool satisfies_all(const ConeSystem& sys, const RationalVector& point);
bool satisfies_all(const ConeSystem& sys, const std::vector<BigInt>& point);

inline bool is_trivial(const ConeDecision& d) { return std::holds_alternative<ConeTrivial>(d); }

}  // namespace pdclass
