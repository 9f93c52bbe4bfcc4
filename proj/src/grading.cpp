#include "pdclass/grading.hpp"

#include <algorithm>

#include "pdclass/error.hpp"
#include "pdclass/linalg.hpp"

namespace pdclass {

std::string HodgeGrading::spec_string() const {
  std::string out = rs_->name() + "/";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out;
}

HodgeGrading make_grading(std::shared_ptr<const RootSystem> rs, std::vector<int> labels) {
  if (!rs) throw Error(ErrorCode::kInvalidArgument, "null root system");
  if (labels.size() != static_cast<std::size_t>(rs->rank())) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "expected " + std::to_string(rs->rank()) + " labels for " + rs->name() +
                    ", got " + std::to_string(labels.size()));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] > 2) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "label " + std::to_string(labels[i]) + " at position " +
                      std::to_string(i + 1) + " is not in {0,1,2}");
    }
  }
  if (std::find(labels.begin(), labels.end(), 1) == labels.end()) {
    throw Error(ErrorCode::kCompactForm,
                "no noncompact simple root; p = 0 so the real form is compact");
  }

  HodgeGrading g;
  g.rs_ = std::move(rs);
  g.labels_ = std::move(labels);
  const RootSystem& sys = *g.rs_;
  const std::size_t n = sys.size();
  g.grades_.resize(n);
  std::vector<RootId> v0, cplus, nplus, kminus, n_minus, compact, noncompact;
  for (RootId id = 0; id < n; ++id) {
    int grade = 0;
    const auto& coeffs = sys.root(id).coefficients;
    for (std::size_t i = 0; i < coeffs.size(); ++i) grade += coeffs[i] * g.labels_[i];
    g.grades_[id] = grade;
    const bool even = grade % 2 == 0;
    (even ? compact : noncompact).push_back(id);
    if (grade == 0) v0.push_back(id);
    if (!sys.is_positive(id)) continue;
    if (even) {
      cplus.push_back(id);
      if (grade != 0) kminus.push_back(id);
    } else {
      nplus.push_back(id);
    }
    if (grade != 0) n_minus.push_back(id);
  }
  g.v0_ = RootSet(n, std::move(v0));
  g.cplus_ = RootSet(n, std::move(cplus));
  g.nplus_ = RootSet(n, std::move(nplus));
  g.kminus_ = RootSet(n, std::move(kminus));
  g.n_minus_ = RootSet(n, std::move(n_minus));
  g.compact_ = RootSet(n, std::move(compact));
  g.noncompact_ = RootSet(n, std::move(noncompact));
  return g;
}

HodgeGrading make_grading(char type_label, int rank, std::vector<int> labels) {
  return make_grading(shared_root_system(type_label, rank), std::move(labels));
}

int grade_of(const HodgeGrading& g, const Root& alpha) {
  return g.grade(g.root_system().id_of(alpha));
}

RootPartition root_partition(const HodgeGrading& g) {
  return {g.v0(), g.cplus(), g.nplus(), g.kminus(), g.n_minus()};
}

std::vector<int> grading_element(const HodgeGrading& g) { return g.labels(); }

CenterOfK center_of_k(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  RationalMatrix rows;
  for (RootId id : g.compact()) {
    if (!rs.is_positive(id)) continue;
    rows.push_back(to_rational(rs.root(id).coefficients));
  }
  CenterOfK out;
  out.basis = nullspace_basis(rows, static_cast<std::size_t>(rs.rank()));
  out.dimension = out.basis.size();
  return out;
}

std::vector<std::vector<int>> all_label_vectors(int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> labels(static_cast<std::size_t>(rank), 0);
  while (true) {
    if (std::find(labels.begin(), labels.end(), 1) != labels.end()) out.push_back(labels);
    int pos = rank - 1;
    while (pos >= 0 && labels[pos] == 2) {
      labels[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++labels[pos];
  }
  return out;
}

}  // namespace pdclass
