#include "pdclass/cone.hpp"

#include "pdclass/error.hpp"

namespace pdclass {

void ConeSystem::validate() const {
  if (normals.empty()) throw Error(ErrorCode::kInvalidArgument, "cone system has no normals");
  if (dimension == 0) throw Error(ErrorCode::kInvalidArgument, "cone system has dimension 0");
  for (const auto& a : normals) {
    if (a.size() != dimension) {
      throw Error(ErrorCode::kInvalidArgument, "normal of wrong length in cone system");
    }
  }
}

CombinationSolve solve_nonnegative_combination(const std::vector<RationalVector>& normals,
                                               const RationalVector& target) {
  const std::size_t m = normals.size();
  const std::size_t r = target.size();
  const std::size_t cols = m + r;

  // Row i: sum_j sign_i a_j[i] y_j + s_i = sign_i target[i], right side >= 0.
  std::vector<int> row_sign(r, 1);
  RationalMatrix tab(r, RationalVector(cols, Rational(0)));
  RationalVector rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (target[i] < 0) row_sign[i] = -1;
    for (std::size_t j = 0; j < m; ++j) tab[i][j] = normals[j][i] * row_sign[i];
    tab[i][m + i] = 1;
    rhs[i] = target[i] * row_sign[i];
  }
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) basis[i] = m + i;

  // Reduced costs for minimizing the artificial sum.
  RationalVector reduced(cols, Rational(0));
  for (std::size_t j = m; j < cols; ++j) reduced[j] = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= tab[i][j];
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = r;
    Rational best_ratio;
    for (std::size_t i = 0; i < r; ++i) {
      if (tab[i][entering] <= 0) continue;
      const Rational ratio = rhs[i] / tab[i][entering];
      if (leaving == r || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == r) {
      throw Error(ErrorCode::kInternalInconsistency, "phase-I objective unbounded");
    }

    const Rational pivot = tab[leaving][entering];
    for (auto& x : tab[leaving]) x /= pivot;
    rhs[leaving] /= pivot;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leaving || tab[i][entering] == 0) continue;
      const Rational factor = tab[i][entering];
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leaving][j];
      rhs[i] -= factor * rhs[leaving];
    }
    if (reduced[entering] != 0) {
      const Rational factor = reduced[entering];
      for (std::size_t j = 0; j < cols; ++j) reduced[j] -= factor * tab[leaving][j];
    }
    basis[leaving] = entering;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i] >= m) objective += rhs[i];
  }

  CombinationSolve out;
  if (objective == 0) {
    out.feasible = true;
    out.coefficients.assign(m, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      if (basis[i] < m) out.coefficients[basis[i]] = rhs[i];
    }
    RationalVector check(r, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      if (out.coefficients[j] == 0) continue;
      for (std::size_t i = 0; i < r; ++i) check[i] += out.coefficients[j] * normals[j][i];
    }
    if (check != target) {
      throw Error(ErrorCode::kInternalInconsistency, "phase-I combination does not replay");
    }
    return out;
  }

  // Simplex multipliers pi_i = 1 - reduced cost of artificial i; the ray is
  // -pi mapped back through the row signs.
  out.farkas_ray.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    out.farkas_ray[i] = -(Rational(1) - reduced[m + i]) * row_sign[i];
  }
  for (const auto& a : normals) {
    if (dot(a, out.farkas_ray) < 0) {
      throw Error(ErrorCode::kInternalInconsistency, "Farkas ray violates a normal");
    }
  }
  if (dot(target, out.farkas_ray) >= 0) {
    throw Error(ErrorCode::kInternalInconsistency, "Farkas ray does not separate the target");
  }
  return out;
}

ConeDecision decide_cone(const ConeSystem& sys) {
  sys.validate();
  FarkasCertificate cert;
  for (std::size_t axis = 0; axis < sys.dimension; ++axis) {
    for (int sign : {1, -1}) {
      RationalVector target(sys.dimension, Rational(0));
      target[axis] = sign;
      auto solve = solve_nonnegative_combination(sys.normals, target);
      if (!solve.feasible) {
        ConeNontrivial nontrivial;
        nontrivial.witness = primitive_integer_vector(solve.farkas_ray);
        nontrivial.failed_direction = cert.combinations.size();
        return nontrivial;
      }
      cert.combinations.push_back({axis, sign, std::move(solve.coefficients)});
    }
  }
  return ConeTrivial{std::move(cert)};
}

bool verify_certificate(const ConeSystem& sys, const FarkasCertificate& cert) {
  if (cert.combinations.size() != 2 * sys.dimension) return false;
  for (std::size_t k = 0; k < cert.combinations.size(); ++k) {
    const auto& combo = cert.combinations[k];
    if (combo.axis != k / 2 || combo.sign != (k % 2 == 0 ? 1 : -1)) return false;
    if (combo.coefficients.size() != sys.normals.size()) return false;
    RationalVector total(sys.dimension, Rational(0));
    for (std::size_t j = 0; j < sys.normals.size(); ++j) {
      const Rational& y = combo.coefficients[j];
      if (y < 0) return false;
      if (y == 0) continue;
      for (std::size_t i = 0; i < sys.dimension; ++i) total[i] += y * sys.normals[j][i];
    }
    for (std::size_t i = 0; i < sys.dimension; ++i) {
      const Rational expected = i == combo.axis ? Rational(combo.sign) : Rational(0);
      if (total[i] != expected) return false;
    }
  }
  return true;
}

bool satisfies_all(const ConeSystem& sys, const RationalVector& point) {
  for (const auto& a : sys.normals) {
    if (dot(a, point) < 0) return false;
  }
  return true;
}

bool satisfies_all(const ConeSystem& sys, const std::vector<BigInt>& point) {
  return satisfies_all(sys, to_rational(point));
}

}  // namespace pdclass
