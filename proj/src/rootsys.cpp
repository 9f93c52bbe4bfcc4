#include "pdclass/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "pdclass/error.hpp"

namespace pdclass {

int Root::height() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), 0);
}

bool Root::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](int x) { return x == 0; });
}

Root Root::operator-() const {
  Root out{coefficients};
  for (auto& x : out.coefficients) x = -x;
  return out;
}

Root Root::operator+(const Root& other) const {
  Root out{coefficients};
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] += other.coefficients[i];
  }
  return out;
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

Weight Weight::zero(std::size_t rank) { return Weight{RationalVector(rank, Rational(0))}; }

Weight Weight::from_root(const Root& root) { return Weight{to_rational(root.coefficients)}; }

bool Weight::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(),
                     [](const Rational& x) { return x == 0; });
}

RootSet::RootSet(std::size_t universe) : mask_(universe, false) {}

RootSet::RootSet(std::size_t universe, std::vector<RootId> ids) : mask_(universe, false) {
  for (RootId id : ids) {
    if (id >= universe) {
      throw Error(ErrorCode::kInvalidArgument, "root id outside its root system");
    }
    mask_[id] = true;
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  ids_ = std::move(ids);
}

bool RootSet::insert(RootId id) {
  if (id >= mask_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "root id outside its root system");
  }
  if (mask_[id]) return false;
  mask_[id] = true;
  ids_.insert(std::lower_bound(ids_.begin(), ids_.end(), id), id);
  return true;
}

bool RootSet::is_subset_of(const RootSet& other) const {
  return std::all_of(ids_.begin(), ids_.end(), [&](RootId id) { return other.contains(id); });
}

RootSet set_union(const RootSet& a, const RootSet& b) {
  std::vector<RootId> ids;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return RootSet(std::max(a.universe(), b.universe()), std::move(ids));
}

RootSet set_intersection(const RootSet& a, const RootSet& b) {
  std::vector<RootId> ids;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return RootSet(std::max(a.universe(), b.universe()), std::move(ids));
}

RootSet set_difference(const RootSet& a, const RootSet& b) {
  std::vector<RootId> ids;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return RootSet(std::max(a.universe(), b.universe()), std::move(ids));
}

RootSet negated(const RootSystem& rs, const RootSet& s) {
  std::vector<RootId> ids;
  ids.reserve(s.size());
  for (RootId id : s) ids.push_back(rs.negative(id));
  return RootSet(rs.size(), std::move(ids));
}

std::size_t CoefficientHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x + 0x9e37);
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool is_valid_type_rank(char type_label, int rank) {
  switch (type_label) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::size_t expected_root_count(char type_label, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  switch (type_label) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

namespace {

// Squared lengths on the diagonal and (alpha_i, alpha_j) on the edges, with
// the shortest roots normalized to length^2 = 2 (Bourbaki node numbering).
std::vector<std::vector<int>> integer_form(char type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto edge = [&](std::size_t i, std::size_t j, int value) {
    b[i][j] = value;
    b[j][i] = value;
  };
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;

  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case 'B':
      // alpha_1..alpha_{n-1} long, alpha_n short.
      for (std::size_t i = 0; i + 1 < n; ++i) b[i][i] = 4;
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      // alpha_1..alpha_{n-1} short, alpha_n long.
      b[n - 1][n - 1] = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case 'E':
      edge(0, 2, -1);
      edge(1, 3, -1);
      edge(2, 3, -1);
      for (std::size_t i = 3; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = 4;
      b[1][1] = 4;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case 'G':
      // alpha_1 short, alpha_2 long.
      b[1][1] = 6;
      edge(0, 1, -3);
      break;
    default:
      break;
  }
  return b;
}

}  // namespace

RootSystem RootSystem::build(char type_label, int rank) {
  if (!is_valid_type_rank(type_label, rank)) {
    throw Error(ErrorCode::kInvalidTypeRank,
                std::string("unsupported simple type ") + type_label + std::to_string(rank));
  }
  RootSystem rs;
  rs.type_ = type_label;
  rs.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  const auto b = integer_form(type_label, rank);

  rs.symmetrizer_.resize(n);
  for (std::size_t i = 0; i < n; ++i) rs.symmetrizer_[i] = b[i][i] / 2;
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  rs.form_.assign(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rs.cartan_[i][j] = 2 * b[i][j] / b[j][j];
      rs.form_[i][j] = b[i][j];
    }
  }

  // Height-by-height generation: beta + alpha_j is a root iff the
  // alpha_j-string through beta extends upward, i.e. q = p - <beta, alpha_j^vee> > 0
  // where p counts the steps downward.
  std::unordered_map<std::vector<int>, bool, CoefficientHash> known;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    known.emplace(e, true);
    level.push_back(e);
  }
  std::vector<std::vector<int>> positives = level;
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (std::size_t j = 0; j < n; ++j) {
        int down = 0;
        std::vector<int> probe = beta;
        while (true) {
          probe[j] -= 1;
          if (known.count(probe) == 0) break;
          ++down;
        }
        int bracket = 0;
        for (std::size_t i = 0; i < n; ++i) bracket += beta[i] * rs.cartan_[i][j];
        if (down - bracket > 0) {
          std::vector<int> up = beta;
          up[j] += 1;
          if (known.emplace(up, true).second) next.push_back(up);
        }
      }
    }
    positives.insert(positives.end(), next.begin(), next.end());
    level = std::move(next);
  }

  std::sort(positives.begin(), positives.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              const int hx = std::accumulate(x.begin(), x.end(), 0);
              const int hy = std::accumulate(y.begin(), y.end(), 0);
              if (hx != hy) return hx < hy;
              return x > y;
            });

  rs.positive_count_ = positives.size();
  rs.roots_.reserve(2 * positives.size());
  for (const auto& p : positives) rs.roots_.push_back(Root{p});
  for (const auto& p : positives) rs.roots_.push_back(-Root{p});
  for (std::size_t id = 0; id < rs.roots_.size(); ++id) {
    rs.index_.emplace(rs.roots_[id].coefficients, static_cast<RootId>(id));
  }

  if (rs.roots_.size() != expected_root_count(type_label, rank)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "root generation for " + rs.name() + " produced " +
                    std::to_string(rs.roots_.size()) + " roots");
  }

  const std::size_t total = rs.roots_.size();
  rs.sum_table_.assign(total * total, -1);
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t c = 0; c < total; ++c) {
      const Root s = rs.roots_[a] + rs.roots_[c];
      const auto it = rs.index_.find(s.coefficients);
      if (it != rs.index_.end()) rs.sum_table_[a * total + c] = static_cast<std::int32_t>(it->second);
    }
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

std::optional<RootId> RootSystem::find(std::span<const int> coefficients) const {
  if (coefficients.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
  const auto it = index_.find(std::vector<int>(coefficients.begin(), coefficients.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::id_of(const Root& root) const {
  const auto id = find(root);
  if (!id) throw Error(ErrorCode::kInvalidArgument, "vector is not a root of " + name());
  return *id;
}

Rational RootSystem::inner(RootId a, RootId b) const {
  const auto& x = roots_[a].coefficients;
  const auto& y = roots_[b].coefficients;
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] != 0) sum += form_[i][j] * x[i] * y[j];
    }
  }
  return sum;
}

RationalVector RootSystem::form_times(const Root& root) const {
  RationalVector out(static_cast<std::size_t>(rank_), Rational(0));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[i] += form_[i][j] * root.coefficients[j];
  }
  return out;
}

RootSet RootSystem::all_roots() const {
  std::vector<RootId> ids(roots_.size());
  std::iota(ids.begin(), ids.end(), RootId{0});
  return RootSet(roots_.size(), std::move(ids));
}

RootSet RootSystem::positive_roots() const {
  std::vector<RootId> ids(positive_count_);
  std::iota(ids.begin(), ids.end(), RootId{0});
  return RootSet(roots_.size(), std::move(ids));
}

RootSystem RootSystem::with_scaled_form(const Rational& factor) const {
  if (factor <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "bilinear form scale must be positive");
  }
  RootSystem copy = *this;
  for (auto& row : copy.form_) {
    for (auto& x : row) x *= factor;
  }
  return copy;
}

std::shared_ptr<const RootSystem> shared_root_system(char type_label, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{type_label, rank}];
  if (!slot) {
    try {
      slot = std::make_shared<const RootSystem>(RootSystem::build(type_label, rank));
    } catch (...) {
      cache.erase({type_label, rank});
      throw;
    }
  }
  return slot;
}

RootSystem build_root_system(char type_label, int rank) {
  return RootSystem::build(type_label, rank);
}

bool is_root(const RootSystem& rs, std::span<const int> v) { return rs.find(v).has_value(); }

std::optional<Root> root_sum(const RootSystem& rs, const Root& alpha, const Root& beta) {
  const auto s = rs.sum(rs.id_of(alpha), rs.id_of(beta));
  if (!s) return std::nullopt;
  return rs.root(*s);
}

Rational pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha) {
  const auto b_alpha = rs.form_times(alpha);
  return dot(lambda.coordinates, b_alpha);
}

RootSet root_set_sum(const RootSystem& rs, const RootSet& s1, const RootSet& s2) {
  RootSet out(rs.size());
  for (RootId a : s1) {
    for (RootId b : s2) {
      if (const auto s = rs.sum(a, b)) out.insert(*s);
    }
  }
  return out;
}

std::optional<std::pair<RootId, RootId>> first_summing_pair(const RootSystem& rs,
                                                            const RootSet& s) {
  for (RootId a : s) {
    for (RootId b : s) {
      if (rs.sum(a, b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_sum_free(const RootSystem& rs, const RootSet& s) {
  return !first_summing_pair(rs, s).has_value();
}

std::vector<int> root_chain(const RootSystem& rs, const Root& beta) {
  const auto target = rs.find(beta);
  if (!target || !rs.is_positive(*target)) {
    throw Error(ErrorCode::kInvalidArgument, "root_chain needs a positive root");
  }
  const int rank = rs.rank();
  std::vector<bool> dead(rs.size(), false);
  std::vector<int> chain;

  // Partial sums stay positive roots below beta; the first success in index
  // order is the lexicographically first chain.
  std::function<bool(RootId)> extend = [&](RootId current) -> bool {
    if (current == *target) return true;
    const Root& cur = rs.root(current);
    for (int i = 0; i < rank; ++i) {
      if (cur.coefficients[i] >= beta.coefficients[i]) continue;
      const auto next = rs.sum(current, rs.simple_root(i));
      if (!next || dead[*next]) continue;
      chain.push_back(i);
      if (extend(*next)) return true;
      chain.pop_back();
    }
    dead[current] = true;
    return false;
  };

  for (int i = 0; i < rank; ++i) {
    if (beta.coefficients[i] == 0) continue;
    chain.assign(1, i);
    if (extend(rs.simple_root(i))) return chain;
  }
  throw Error(ErrorCode::kInternalInconsistency, "no simple-root chain found");
}

ThreeToTwoReport verify_three_to_two(const RootSystem& rs, ThreeToTwoOptions options) {
  ThreeToTwoReport report;
  const auto n = static_cast<RootId>(rs.size());
  for (RootId beta = 0; beta < n; ++beta) {
    for (RootId gamma = 0; gamma < n; ++gamma) {
      const auto bg = rs.sum(beta, gamma);
      if (!bg) continue;
      for (RootId alpha = 0; alpha < n; ++alpha) {
        if (options.exclude_beta_negative_alpha && beta == rs.negative(alpha)) continue;
        if (options.exclude_gamma_negative_alpha && gamma == rs.negative(alpha)) continue;
        if (!rs.sum(alpha, *bg)) continue;
        ++report.triples_checked;
        if (rs.sum(alpha, beta) || rs.sum(alpha, gamma)) continue;
        report.holds = false;
        report.violations.push_back({rs.root(alpha), rs.root(beta), rs.root(gamma)});
      }
    }
  }
  return report;
}

}  // namespace pdclass
