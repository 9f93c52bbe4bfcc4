#include "pdclass/classifier.hpp"

#include "pdclass/error.hpp"
#include "pdclass/linalg.hpp"
#include "pdclass/structures.hpp"

namespace pdclass {

namespace {

// B lambda; then (lambda, alpha) = (B lambda) . alpha since B is symmetric.
RationalVector covector(const RootSystem& rs, const Weight& lambda) {
  if (lambda.coordinates.size() != static_cast<std::size_t>(rs.rank())) {
    throw Error(ErrorCode::kInvalidArgument, "weight has " +
                                                 std::to_string(lambda.coordinates.size()) +
                                                 " coordinates, expected " +
                                                 std::to_string(rs.rank()));
  }
  const auto& b = rs.bilinear_form();
  RationalVector out(lambda.coordinates.size(), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += b[i][j] * lambda.coordinates[j];
  }
  return out;
}

Rational pair_with(const RationalVector& cov, const Root& alpha) {
  Rational sum = 0;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    if (alpha.coefficients[i] != 0) sum += cov[i] * alpha.coefficients[i];
  }
  return sum;
}

}  // namespace

DefinitionalVerdict is_classical_definitional(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  DefinitionalVerdict out;
  if (const auto pair = first_summing_pair(rs, g.nplus())) {
    out.classical = false;
    out.witness = std::make_pair(rs.root(pair->first), rs.root(pair->second));
  }
  return out;
}

ConeSystem criterion_cone(const RootSystem& rs, const RootSet& cplus, const RootSet& nplus) {
  ConeSystem sys;
  sys.dimension = static_cast<std::size_t>(rs.rank());
  for (RootId id : cplus) sys.normals.push_back(rs.form_times(rs.root(id)));
  for (RootId id : nplus) sys.normals.push_back(rs.form_times(-rs.root(id)));
  return sys;
}

ConeVerdict cone_criterion(const RootSystem& rs, const RootSet& cplus, const RootSet& nplus) {
  ConeVerdict out;
  out.system = criterion_cone(rs, cplus, nplus);
  auto decision = decide_cone(out.system);
  if (auto* trivial = std::get_if<ConeTrivial>(&decision)) {
    out.classical = false;
    out.certificate = std::move(trivial->certificate);
  } else {
    out.classical = true;
    out.witness = Weight{to_rational(std::get<ConeNontrivial>(decision).witness)};
  }
  return out;
}

ConeVerdict cone_criterion(const HodgeGrading& g) {
  return cone_criterion(g.root_system(), g.cplus(), g.nplus());
}

RootSet additive_closure(const RootSystem& rs, const RootSet& generators,
                         std::vector<RootId>* trace) {
  RootSet closure = generators;
  while (true) {
    const std::vector<RootId> snapshot(closure.begin(), closure.end());
    std::vector<RootId> added;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i; j < snapshot.size(); ++j) {
        const auto s = rs.sum(snapshot[i], snapshot[j]);
        if (!s || closure.contains(*s)) continue;
        if (std::find(added.begin(), added.end(), *s) != added.end()) continue;
        added.push_back(*s);
      }
    }
    if (added.empty()) break;
    for (RootId id : added) {
      closure.insert(id);
      if (trace) trace->push_back(id);
    }
  }
  return closure;
}

BracketGeneration bracket_generation(const RootSystem& rs, const RootSet& kminus,
                                     const RootSet& nplus) {
  const RootSet generators = set_union(kminus, negated(rs, nplus));
  std::vector<RootId> trace;
  BracketGeneration out;
  out.closure = additive_closure(rs, generators, &trace);
  out.generates = nplus.is_subset_of(out.closure);
  for (RootId id : trace) out.trace.push_back(rs.root(id));
  return out;
}

BracketGeneration bracket_generation(const HodgeGrading& g) {
  return bracket_generation(g.root_system(), g.kminus(), g.nplus());
}

std::size_t q_value(const HodgeGrading& g, const Weight& lambda) {
  const RootSystem& rs = g.root_system();
  const auto cov = covector(rs, lambda);
  std::size_t q = 0;
  for (RootId id : g.cplus()) {
    if (pair_with(cov, rs.root(id)) < 0) ++q;
  }
  for (RootId id : g.nplus()) {
    if (pair_with(cov, rs.root(id)) > 0) ++q;
  }
  return q;
}

CurvatureSignature curvature_signature(const HodgeGrading& g, const Weight& lambda) {
  const RootSystem& rs = g.root_system();
  const auto cov = covector(rs, lambda);
  CurvatureSignature out;
  for (RootId id : g.cplus()) out.eigenvalues.push_back(pair_with(cov, rs.root(id)));
  for (RootId id : g.nplus()) out.eigenvalues.push_back(-pair_with(cov, rs.root(id)));
  for (const auto& e : out.eigenvalues) {
    if (e > 0) {
      ++out.positive;
    } else if (e < 0) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

bool predicts_vanishing(const HodgeGrading& g, const Weight& lambda) {
  return q_value(g, lambda) >= 1;
}

NcPartition partition_nc(const HodgeGrading& g, const Weight& lambda) {
  const RootSystem& rs = g.root_system();
  const auto cov = covector(rs, lambda);
  NcPartition out{RootSet(rs.size()), RootSet(rs.size()), RootSet(rs.size())};
  for (RootId id : g.nplus()) {
    if (pair_with(cov, rs.root(id)) < 0) out.nc1.insert(id);
  }
  for (RootId id : g.nplus()) {
    if (out.nc1.contains(id)) continue;
    bool decomposes = false;
    for (RootId alpha : g.cplus()) {
      for (RootId beta : out.nc1) {
        if (rs.sum(alpha, beta) == id) decomposes = true;
      }
    }
    (decomposes ? out.nc2 : out.nc3).insert(id);
  }
  return out;
}

bool verify_k_equals_pp(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  const RootSet pp = root_set_sum(rs, g.noncompact(), g.noncompact());
  if (!g.compact().is_subset_of(pp)) return false;
  RationalMatrix rows;
  for (RootId id : g.noncompact()) rows.push_back(to_rational(rs.root(id).coefficients));
  return matrix_rank(rows, static_cast<std::size_t>(rs.rank())) ==
         static_cast<std::size_t>(rs.rank());
}

bool verify_simple_nc_decomposition(const HodgeGrading& g) {
  if (is_classical_definitional(g).classical) {
    throw Error(ErrorCode::kPreconditionClassical,
                g.spec_string() + " is classical; the decomposition is only claimed for "
                                  "non-classical domains");
  }
  const RootSystem& rs = g.root_system();
  for (int i = 0; i < rs.rank(); ++i) {
    if (g.labels()[i] != 1) continue;
    bool found = false;
    for (RootId beta : g.nplus()) {
      const auto s = rs.sum(rs.simple_root(i), beta);
      if (s && g.cplus().contains(*s)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string DomainReport::spec_string() const {
  std::string out = std::string(1, type_label) + std::to_string(rank) + "/";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

DomainReport classify(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  DomainReport report;
  report.type_label = rs.type_label();
  report.rank = rs.rank();
  report.labels = g.labels();

  const auto definitional = is_classical_definitional(g);
  auto cone = cone_criterion(g);
  auto bracket = bracket_generation(g);

  // Classical <=> cone nontrivial <=> k_- + p_+ does not generate p_-.
  if (definitional.classical != cone.classical || definitional.classical == bracket.generates) {
    throw Error(ErrorCode::kInternalInconsistency,
                g.spec_string() + ": definitional=" +
                    (definitional.classical ? "classical" : "non-classical") +
                    " cone=" + (cone.classical ? "classical" : "non-classical") +
                    " bracket_generates=" + (bracket.generates ? "true" : "false"));
  }

  report.classical = definitional.classical;
  report.witness_nonclassical = definitional.witness;
  report.witness_classical = std::move(cone.witness);
  report.farkas = std::move(cone.certificate);
  report.bracket_generates = bracket.generates;
  report.closure_trace = std::move(bracket.trace);
  report.cycle_chain_connected = bracket.generates;

  const std::size_t v0_positive = set_intersection(g.v0(), rs.positive_roots()).size();
  report.dim_D = rs.positive_count() - v0_positive;
  report.dim_KV = g.kminus().size();
  report.m0 = g.nplus().size();
  report.two_rho_nc.assign(static_cast<std::size_t>(rs.rank()), 0);
  for (RootId id : g.nplus()) {
    const auto& c = rs.root(id).coefficients;
    for (std::size_t i = 0; i < c.size(); ++i) report.two_rho_nc[i] += c[i];
  }
  report.hermitian_type = hermitian_splitting(g).has_value();

  if (report.m0 != report.dim_D - report.dim_KV) {
    throw Error(ErrorCode::kInternalInconsistency, g.spec_string() + ": m0 bookkeeping");
  }
  if (report.classical && !report.hermitian_type) {
    throw Error(ErrorCode::kInternalInconsistency,
                g.spec_string() + ": classical but no Hermitian splitting");
  }
  return report;
}

}  // namespace pdclass
