#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdclass/cone.hpp"
#include "pdclass/grading.hpp"

namespace pdclass {

struct SearchBox {
  int radius = 3;
  std::size_t dimension = 0;
  /// Throws Error(kInvalidArgument) when radius < 1.
  void validate() const;
};

/// First nonzero integer vector of [-radius, radius]^r, in lexicographic
/// order, lying in the cone. One-sided: an empty result proves nothing.
std::optional<std::vector<long long>> lattice_cone_search(const ConeSystem& sys,
                                                          const SearchBox& box);

/// Exact two-sided decision by Fourier-Motzkin elimination: the cone is
/// nontrivial iff some system {a . x >= 0, s x_i >= 1} is feasible.
/// Throws Error(kTooLarge) when an elimination step exceeds `max_rows`.
bool fourier_motzkin_nontrivial(const ConeSystem& sys, std::size_t max_rows = 20000);

struct SurveyOptions {
  std::vector<char> types{'A', 'B', 'C', 'D', 'G', 'F'};
  int max_rank = 4;
  int radius = 3;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t jobs = 1;
  /// Fill n_structures by enumeration where the size bound allows.
  bool count_structures = false;
};

struct SurveyRow {
  char type_label = 'A';
  int rank = 0;
  std::vector<int> labels;
  bool classical = false;
  bool hermitian = false;
  std::size_t m0 = 0;
  std::size_t dim_D = 0;
  std::optional<std::size_t> n_structures;
};

struct SurveySummary {
  char type_label = 'A';
  int rank = 0;
  std::size_t total = 0;
  std::size_t classical = 0;
  std::size_t nonclassical = 0;
  std::size_t hermitian = 0;
};

struct SurveyResult {
  std::vector<SurveyRow> rows;
  std::vector<SurveySummary> summaries;
  /// One line per disagreement or anomaly; empty on success.
  std::vector<std::string> failures;
};

/// Systems named by `types` with rank <= max_rank, taken in the given type
/// order and increasing rank.
std::vector<std::pair<char, int>> survey_systems(const SurveyOptions& options);

/// For each grading: the three classifiers, the lattice oracle, k = [p, p],
/// and for non-classical Hermitian gradings the new-structure pipeline.
/// Gradings run in parallel; rows are merged in input order.
SurveyResult survey_crosscheck(const SurveyOptions& options);

}  // namespace pdclass
