#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pdclass/rootsys.hpp"

namespace pdclass {

/// The period-domain datum: one label per simple root. Label 1 marks a
/// noncompact simple root, 2 a compact simple root outside v, 0 a simple root
/// of v. The grading element h_g has these labels as coordinates in the basis
/// dual to the simple roots, so grade(alpha) = sum_i n_i c_i.
///
/// Conventions: compact roots are the even-grade roots; positive roots
/// outside V0 index n_-, so Nplus (positive odd-grade roots) indexes p_- and
/// Kminus (positive even-grade roots outside V0) indexes k_-. Complex
/// conjugation acts on root sets as alpha -> -alpha.
class HodgeGrading {
 public:
  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const std::vector<int>& labels() const { return labels_; }
  int rank() const { return rs_->rank(); }

  int grade(RootId id) const { return grades_[id]; }
  bool is_compact(RootId id) const { return grades_[id] % 2 == 0; }

  /// Roots of grade 0, the root system of v.
  const RootSet& v0() const { return v0_; }
  /// Positive even-grade roots (V0 included).
  const RootSet& cplus() const { return cplus_; }
  /// Positive odd-grade roots.
  const RootSet& nplus() const { return nplus_; }
  /// cplus \ V0.
  const RootSet& kminus() const { return kminus_; }
  /// Positive roots outside V0.
  const RootSet& n_minus() const { return n_minus_; }
  const RootSet& compact() const { return compact_; }
  const RootSet& noncompact() const { return noncompact_; }

  /// "C2/1,1"
  std::string spec_string() const;

 private:
  friend HodgeGrading make_grading(std::shared_ptr<const RootSystem> rs, std::vector<int> labels);
  HodgeGrading() = default;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> labels_;
  std::vector<int> grades_;
  RootSet v0_, cplus_, nplus_, kminus_, n_minus_, compact_, noncompact_;
};

/// Throws Error(kLabelOutOfRange) for labels outside {0,1,2} or of the wrong
/// length, Error(kCompactForm) when no label equals 1.
HodgeGrading make_grading(std::shared_ptr<const RootSystem> rs, std::vector<int> labels);
HodgeGrading make_grading(char type_label, int rank, std::vector<int> labels);

int grade_of(const HodgeGrading& g, const Root& alpha);

struct RootPartition {
  RootSet v0;
  RootSet cplus;
  RootSet nplus;
  RootSet kminus;
  RootSet n_minus;
};

RootPartition root_partition(const HodgeGrading& g);

/// Coordinates of h_g in the dual basis {h_i}; equal to the labels.
std::vector<int> grading_element(const HodgeGrading& g);

struct CenterOfK {
  std::size_t dimension = 0;
  std::vector<RationalVector> basis;
};

/// Solutions z (dual-basis coordinates) of alpha(z) = 0 for every compact root.
CenterOfK center_of_k(const HodgeGrading& g);

/// Every label vector in {0,1,2}^rank with at least one 1, in lexicographic order.
std::vector<std::vector<int>> all_label_vectors(int rank);

}  // namespace pdclass
