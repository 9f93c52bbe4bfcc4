#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdclass/rational.hpp"

namespace pdclass {

/// Index of a root inside its RootSystem. Positive roots occupy
/// [0, positive_count) ordered by height and then by descending coefficient
/// vector, so the simple roots come first in index order; the negative of
/// positive root k sits at k + positive_count. This index order is the
/// canonical root order used for every deterministic output.
using RootId = std::uint32_t;

/// A root in the simple-root basis: alpha = sum_i n_i alpha_i.
struct Root {
  std::vector<int> coefficients;

  int height() const;
  bool is_zero() const;
  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A weight in the simple-root basis, lambda = sum_i c_i alpha_i, with
/// exact rational coordinates.
struct Weight {
  RationalVector coordinates;

  static Weight zero(std::size_t rank);
  static Weight from_root(const Root& root);
  bool is_zero() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Finite set of roots of one fixed RootSystem, stored as sorted ids plus a
/// membership mask sized to the system.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe);
  RootSet(std::size_t universe, std::vector<RootId> ids);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(RootId id) const { return id < mask_.size() && mask_[id]; }
  std::span<const RootId> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  /// Inserts keeping ids sorted; returns false if already present.
  bool insert(RootId id);

  bool is_subset_of(const RootSet& other) const;

  friend bool operator==(const RootSet& a, const RootSet& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<RootId> ids_;
  std::vector<bool> mask_;
};

RootSet set_union(const RootSet& a, const RootSet& b);
RootSet set_intersection(const RootSet& a, const RootSet& b);
RootSet set_difference(const RootSet& a, const RootSet& b);

class RootSystem;
/// {-alpha : alpha in s}
RootSet negated(const RootSystem& rs, const RootSet& s);

struct CoefficientHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/// Finite reduced root system of a simple complex Lie algebra, generated from
/// its Cartan matrix. Immutable after construction.
class RootSystem {
 public:
  /// Throws Error(kInvalidTypeRank) for unsupported (type, rank) pairs.
  static RootSystem build(char type_label, int rank);

  char type_label() const { return type_; }
  int rank() const { return rank_; }
  /// "C2", "E8", ...
  std::string name() const;

  /// cartan_matrix()[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const RationalMatrix& bilinear_form() const { return form_; }

  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return positive_count_; }
  const Root& root(RootId id) const { return roots_[id]; }
  std::span<const Root> roots() const { return roots_; }

  std::optional<RootId> find(std::span<const int> coefficients) const;
  std::optional<RootId> find(const Root& root) const { return find(root.coefficients); }
  /// Like find, but throws Error(kInvalidArgument) when `root` is not a root.
  RootId id_of(const Root& root) const;

  RootId simple_root(int index) const { return static_cast<RootId>(index); }
  bool is_positive(RootId id) const { return id < positive_count_; }
  RootId negative(RootId id) const {
    return static_cast<RootId>(id < positive_count_ ? id + positive_count_
                                                    : id - positive_count_);
  }
  /// alpha + beta when that is a root (never when beta = -alpha).
  std::optional<RootId> sum(RootId a, RootId b) const {
    const auto s = sum_table_[static_cast<std::size_t>(a) * roots_.size() + b];
    if (s < 0) return std::nullopt;
    return static_cast<RootId>(s);
  }

  /// (alpha, beta) under the bilinear form.
  Rational inner(RootId a, RootId b) const;
  /// B alpha, the coefficient covector of (., alpha) in the simple-root basis.
  RationalVector form_times(const Root& root) const;

  RootSet all_roots() const;
  RootSet positive_roots() const;

  /// Copy with the bilinear form multiplied by a positive rational.
  RootSystem with_scaled_form(const Rational& factor) const;

 private:
  RootSystem() = default;

  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  RationalMatrix form_;
  std::vector<Root> roots_;
  std::size_t positive_count_ = 0;
  std::unordered_map<std::vector<int>, RootId, CoefficientHash> index_;
  std::vector<std::int32_t> sum_table_;
};

/// Shared, process-wide cached instance (thread-safe).
std::shared_ptr<const RootSystem> shared_root_system(char type_label, int rank);

/// True iff (type_label, rank) names a supported simple system.
bool is_valid_type_rank(char type_label, int rank);

/// The classical root count for the type, e.g. 2n^2 for B_n.
std::size_t expected_root_count(char type_label, int rank);

RootSystem build_root_system(char type_label, int rank);

bool is_root(const RootSystem& rs, std::span<const int> v);

std::optional<Root> root_sum(const RootSystem& rs, const Root& alpha, const Root& beta);

/// lambda^T B alpha.
Rational pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha);

/// (S1 + S2) intersected with the root system.
RootSet root_set_sum(const RootSystem& rs, const RootSet& s1, const RootSet& s2);

/// Lexicographically first ordered pair (a, b) of members of `s` whose sum is
/// a root, if any.
std::optional<std::pair<RootId, RootId>> first_summing_pair(const RootSystem& rs,
                                                            const RootSet& s);

/// No two members of `s` (repetition allowed) sum to a root.
bool is_sum_free(const RootSystem& rs, const RootSet& s);

/// Zero-based simple-root indices i_1..i_k with beta = alpha_{i_1} + ... +
/// alpha_{i_k} and every partial sum a root; the lexicographically first such
/// sequence. Throws Error(kInvalidArgument) unless beta is a positive root.
std::vector<int> root_chain(const RootSystem& rs, const Root& beta);

struct ThreeToTwoOptions {
  /// Skip triples with beta = -alpha. Dropping this exclusion admits
  /// degenerate triples where alpha + beta = 0.
  bool exclude_beta_negative_alpha = true;
  bool exclude_gamma_negative_alpha = true;
};

struct RootTriple {
  Root alpha;
  Root beta;
  Root gamma;
};

struct ThreeToTwoReport {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::vector<RootTriple> violations;
};

/// For all (alpha, beta, gamma) with beta + gamma and alpha + beta + gamma
/// roots: alpha + beta or alpha + gamma is a root.
ThreeToTwoReport verify_three_to_two(const RootSystem& rs, ThreeToTwoOptions options = {});

}  // namespace pdclass
