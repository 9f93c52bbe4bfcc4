#include "pdclass/structures.hpp"

#include "pdclass/error.hpp"

namespace pdclass {

namespace {

Rational value_at(const Root& alpha, const RationalVector& z) {
  Rational v = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (alpha.coefficients[i] != 0) v += z[i] * alpha.coefficients[i];
  }
  return v;
}

std::string root_text(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(r.coefficients[i]);
  }
  return out + ")";
}

[[noreturn]] void anomaly(const HodgeGrading& g, const std::string& what) {
  throw Error(ErrorCode::kHermitianAnomaly, g.spec_string() + ": " + what);
}

[[noreturn]] void failed(const HodgeGrading& g, const std::string& what, const Root& a,
                         const Root& b) {
  throw Error(ErrorCode::kValidationFailed,
              g.spec_string() + ": " + what + " at " + root_text(a) + " + " + root_text(b));
}

// Closed under +, and together with its negative covers Delta.
void check_parabolic(const HodgeGrading& g, const RootSet& b) {
  const RootSystem& rs = g.root_system();
  for (RootId x : b) {
    for (RootId y : b) {
      const auto s = rs.sum(x, y);
      if (s && !b.contains(*s)) failed(g, "parabolic not closed", rs.root(x), rs.root(y));
    }
  }
  for (RootId id = 0; id < rs.size(); ++id) {
    if (!b.contains(id) && !b.contains(rs.negative(id))) {
      failed(g, "parabolic misses a root pair", rs.root(id), -rs.root(id));
    }
  }
}

}  // namespace

std::optional<HermitianSplitting> hermitian_splitting(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  const CenterOfK center = center_of_k(g);
  if (center.dimension == 0) return std::nullopt;
  if (center.dimension >= 2) {
    anomaly(g, "center of k has dimension " + std::to_string(center.dimension));
  }

  HermitianSplitting hs;
  hs.z = center.basis.front();
  Rational magnitude = 0;
  for (RootId id : g.noncompact()) {
    const Rational v = abs(value_at(rs.root(id), hs.z));
    if (v == 0) anomaly(g, "noncompact root " + root_text(rs.root(id)) + " vanishes on z");
    if (magnitude == 0) magnitude = v;
    if (v != magnitude) anomaly(g, "noncompact values of z differ in magnitude");
  }
  for (auto& x : hs.z) x /= magnitude;
  for (int i = 0; i < rs.rank(); ++i) {
    if (g.labels()[i] != 1) continue;
    if (hs.z[i] < 0) {
      for (auto& x : hs.z) x = -x;
    }
    break;
  }

  hs.p_plus_R = RootSet(rs.size());
  hs.p_minus_R = RootSet(rs.size());
  for (RootId id : g.noncompact()) {
    (value_at(rs.root(id), hs.z) > 0 ? hs.p_plus_R : hs.p_minus_R).insert(id);
  }
  for (RootId id : g.compact()) {
    if (value_at(rs.root(id), hs.z) != 0) anomaly(g, "compact root does not vanish on z");
  }
  if (!(negated(rs, hs.p_plus_R) == hs.p_minus_R) ||
      set_union(hs.p_plus_R, hs.p_minus_R).size() != g.noncompact().size()) {
    anomaly(g, "p_+^R and p_-^R do not split p");
  }
  for (RootId c : g.compact()) {
    for (RootId b : hs.p_minus_R) {
      const auto s = rs.sum(c, b);
      if (s && !hs.p_minus_R.contains(*s)) {
        anomaly(g, "p_-^R not ad-k invariant at " + root_text(rs.root(c)) + " + " +
                       root_text(rs.root(b)));
      }
    }
  }
  if (const auto pair = first_summing_pair(rs, hs.p_minus_R)) {
    anomaly(g, "p_-^R not abelian at " + root_text(rs.root(pair->first)) + " + " +
                   root_text(rs.root(pair->second)));
  }
  return hs;
}

HermitianSplitting conjugate_splitting(const HermitianSplitting& hs) {
  HermitianSplitting out{hs.z, hs.p_minus_R, hs.p_plus_R};
  for (auto& x : out.z) x = -x;
  return out;
}

ComplexStructure make_structure(const HodgeGrading& g, RootSet S) {
  RootSet parabolic = set_union(negated(g.root_system(), S), g.v0());
  return ComplexStructure{std::move(S), std::move(parabolic)};
}

ComplexStructure original_structure(const HodgeGrading& g) {
  return make_structure(g, g.n_minus());
}

NewStructure new_complex_structure(const HodgeGrading& g) {
  auto hs = hermitian_splitting(g);
  if (!hs) {
    throw Error(ErrorCode::kNotHermitian, g.spec_string() + ": center of k is trivial");
  }
  NewStructure out;
  out.structure = make_structure(g, set_union(g.kminus(), hs->p_minus_R));
  out.splitting = std::move(*hs);
  const auto check = validate_structure(g, out.structure.S);
  if (!check.valid) {
    const auto& v = check.violations.front();
    throw Error(ErrorCode::kValidationFailed,
                g.spec_string() + ": new structure violates " + axiom_name(v.axiom) + " at " +
                    root_text(v.first) + (v.second ? " + " + root_text(*v.second) : ""));
  }
  out.differs_from_original = !(out.structure.S == g.n_minus());
  out.projection_holomorphic = is_projection_holomorphic(g, out.structure, out.splitting);
  return out;
}

std::string axiom_name(StructureAxiom axiom) {
  switch (axiom) {
    case StructureAxiom::kNotInDomain:
      return "not_in_domain";
    case StructureAxiom::kAdV0:
      return "ad_v0_invariance";
    case StructureAxiom::kAlmostComplex:
      return "almost_complex";
    case StructureAxiom::kIntegrable:
      return "integrable";
  }
  return "unknown";
}

StructureValidation validate_structure(const HodgeGrading& g, const RootSet& S) {
  const RootSystem& rs = g.root_system();
  StructureValidation out;
  auto report = [&](StructureAxiom axiom, RootId a, std::optional<RootId> b) {
    out.valid = false;
    out.violations.push_back(
        {axiom, rs.root(a), b ? std::optional<Root>(rs.root(*b)) : std::nullopt});
  };

  for (RootId a : S) {
    if (g.v0().contains(a)) report(StructureAxiom::kNotInDomain, a, std::nullopt);
  }
  for (RootId v : g.v0()) {
    for (RootId a : S) {
      const auto s = rs.sum(v, a);
      if (s && !S.contains(*s)) report(StructureAxiom::kAdV0, v, a);
    }
  }
  for (RootId a : g.n_minus()) {
    if (S.contains(a) == S.contains(rs.negative(a))) {
      report(StructureAxiom::kAlmostComplex, a, std::nullopt);
    }
  }
  bool weak_integrable = true;
  bool strong_integrable = true;
  for (RootId a : S) {
    for (RootId b : S) {
      if (b < a) continue;
      const auto s = rs.sum(a, b);
      if (!s || S.contains(*s)) continue;
      strong_integrable = false;
      if (!g.v0().contains(*s)) weak_integrable = false;
      report(StructureAxiom::kIntegrable, a, b);
    }
  }
  const bool others = std::none_of(out.violations.begin(), out.violations.end(), [](const auto& v) {
    return v.axiom != StructureAxiom::kIntegrable;
  });
  if (others && weak_integrable && !strong_integrable) {
    throw Error(ErrorCode::kValidationFailed,
                g.spec_string() + ": S + S lies in S u V0 but not in S");
  }
  return out;
}

RootSet parabolic_of(const HodgeGrading& g, const ComplexStructure& cs) {
  RootSet b = set_union(negated(g.root_system(), cs.S), g.v0());
  check_parabolic(g, b);
  return b;
}

RootSet parabolic_of_new(const HodgeGrading& g, const NewStructure& ns) {
  RootSet b = parabolic_of(g, ns.structure);
  const RootSet expected = set_union(
      set_union(negated(g.root_system(), g.kminus()), ns.splitting.p_plus_R), g.v0());
  if (!(b == expected)) {
    throw Error(ErrorCode::kValidationFailed,
                g.spec_string() + ": parabolic differs from (-Kminus) u p_+^R u V0");
  }
  return b;
}

PositiveSystem positive_system_of(const HodgeGrading& g, const ComplexStructure& cs) {
  const RootSystem& rs = g.root_system();
  PositiveSystem out;
  out.roots = set_union(cs.S, set_intersection(g.v0(), rs.positive_roots()));
  for (RootId id = 0; id < rs.size(); ++id) {
    if (out.roots.contains(id) == out.roots.contains(rs.negative(id))) {
      failed(g, "P and -P do not partition Delta", rs.root(id), -rs.root(id));
    }
  }
  std::vector<bool> decomposable(rs.size(), false);
  for (RootId a : out.roots) {
    for (RootId b : out.roots) {
      const auto s = rs.sum(a, b);
      if (!s) continue;
      if (!out.roots.contains(*s)) failed(g, "P not closed", rs.root(a), rs.root(b));
      decomposable[*s] = true;
    }
  }
  for (RootId a : out.roots) {
    if (!decomposable[a]) out.simple_roots.push_back(a);
  }
  if (out.simple_roots.size() != static_cast<std::size_t>(rs.rank())) {
    throw Error(ErrorCode::kValidationFailed,
                g.spec_string() + ": P has " + std::to_string(out.simple_roots.size()) +
                    " indecomposable roots, expected " + std::to_string(rs.rank()));
  }
  return out;
}

Enumeration enumerate_structures(const HodgeGrading& g, std::size_t limit,
                                 EnumerationBounds bounds) {
  const RootSystem& rs = g.root_system();
  const std::vector<RootId> pairs(g.n_minus().begin(), g.n_minus().end());
  if (2 * pairs.size() > bounds.max_nonv0_roots) {
    throw Error(ErrorCode::kTooLarge, g.spec_string() + ": |Delta \\ V0| = " +
                                          std::to_string(2 * pairs.size()) + " exceeds " +
                                          std::to_string(bounds.max_nonv0_roots));
  }

  enum : signed char { kUnknown = 0, kIn = 1, kOut = -1 };
  std::vector<signed char> state(rs.size(), kUnknown);
  std::vector<RootId> chosen;
  Enumeration out;

  // Consistency of the new choice x (in) and -x (out) with decided roots.
  auto consistent = [&](RootId x) {
    const RootId o = rs.negative(x);
    for (RootId y : chosen) {
      if (const auto s = rs.sum(x, y)) {
        if (g.v0().contains(*s) || state[*s] == kOut) return false;
      }
      if (const auto w = rs.sum(o, rs.negative(y))) {
        if (state[*w] == kIn) return false;
      }
    }
    for (RootId v : g.v0()) {
      if (const auto s = rs.sum(x, v)) {
        if (state[*s] == kOut) return false;
      }
      if (const auto w = rs.sum(o, rs.negative(v))) {
        if (state[*w] == kIn) return false;
      }
    }
    return true;
  };

  auto recurse = [&](auto& self, std::size_t depth) -> void {
    if (out.truncated) return;
    if (depth == pairs.size()) {
      RootSet S(rs.size(), chosen);
      if (!validate_structure(g, S).valid) {
        throw Error(ErrorCode::kInternalInconsistency,
                    g.spec_string() + ": enumeration produced an invalid structure");
      }
      if (out.structures.size() == limit) {
        out.truncated = true;
        return;
      }
      out.structures.push_back(std::move(S));
      return;
    }
    const RootId pos = pairs[depth];
    for (RootId x : {pos, rs.negative(pos)}) {
      if (!consistent(x)) continue;
      state[x] = kIn;
      state[rs.negative(x)] = kOut;
      chosen.push_back(x);
      self(self, depth + 1);
      chosen.pop_back();
      state[x] = kUnknown;
      state[rs.negative(x)] = kUnknown;
    }
  };
  recurse(recurse, 0);
  return out;
}

bool is_projection_holomorphic(const HodgeGrading& g, const ComplexStructure& cs,
                               const HermitianSplitting& hs) {
  return set_intersection(cs.S, g.noncompact()) == hs.p_minus_R;
}

}  // namespace pdclass
