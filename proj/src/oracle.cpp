#include "pdclass/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "pdclass/classifier.hpp"
#include "pdclass/error.hpp"
#include "pdclass/structures.hpp"

namespace pdclass {

void SearchBox::validate() const {
  if (radius < 1) throw Error(ErrorCode::kInvalidArgument, "search radius must be >= 1");
}

namespace {

// Positive multiple of each normal with integer entries.
std::vector<std::vector<long long>> integer_normals(const ConeSystem& sys) {
  std::vector<std::vector<long long>> out;
  for (const auto& a : sys.normals) {
    BigInt l = 1;
    for (const auto& x : a) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<long long> row;
    for (const auto& x : a) {
      row.push_back(static_cast<long long>(numerator(x) * (l / denominator(x))));
    }
    out.push_back(std::move(row));
  }
  return out;
}

using Inequality = RationalVector;  // coefficients then constant: c . x + c0 >= 0

void normalize(Inequality& row) {
  Rational scale = 0;
  for (std::size_t i = 0; i + 1 < row.size(); ++i) scale = std::max(scale, Rational(abs(row[i])));
  if (scale == 0) scale = abs(row.back());
  if (scale == 0) return;
  for (auto& x : row) x /= scale;
}

bool fm_feasible(std::vector<Inequality> rows, std::size_t vars, std::size_t max_rows) {
  for (std::size_t k = 0; k < vars; ++k) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (auto& row : rows) {
      if (row[k] > 0) {
        pos.push_back(row);
      } else if (row[k] < 0) {
        neg.push_back(row);
      } else {
        next.insert(row);
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Inequality combo(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) combo[i] = p[i] * (-n[k]) + n[i] * p[k];
        normalize(combo);
        next.insert(std::move(combo));
        if (next.size() > max_rows) {
          throw Error(ErrorCode::kTooLarge, "Fourier-Motzkin elimination exceeds row limit");
        }
      }
    }
    rows.assign(next.begin(), next.end());
  }
  return std::all_of(rows.begin(), rows.end(), [](const Inequality& r) { return r.back() >= 0; });
}

}  // namespace

std::optional<std::vector<long long>> lattice_cone_search(const ConeSystem& sys,
                                                          const SearchBox& box) {
  box.validate();
  sys.validate();
  const auto normals = integer_normals(sys);
  const std::size_t r = sys.dimension;
  std::vector<long long> x(r, -box.radius);
  while (true) {
    const bool nonzero = std::any_of(x.begin(), x.end(), [](long long v) { return v != 0; });
    if (nonzero) {
      bool inside = true;
      for (const auto& a : normals) {
        long long s = 0;
        for (std::size_t i = 0; i < r; ++i) s += a[i] * x[i];
        if (s < 0) {
          inside = false;
          break;
        }
      }
      if (inside) return x;
    }
    std::size_t i = r;
    while (i > 0 && x[i - 1] == box.radius) {
      x[i - 1] = -box.radius;
      --i;
    }
    if (i == 0) return std::nullopt;
    ++x[i - 1];
  }
}

bool fourier_motzkin_nontrivial(const ConeSystem& sys, std::size_t max_rows) {
  sys.validate();
  const std::size_t r = sys.dimension;
  for (std::size_t axis = 0; axis < r; ++axis) {
    for (int sign : {1, -1}) {
      std::vector<Inequality> rows;
      for (const auto& a : sys.normals) {
        Inequality row(a);
        row.push_back(0);
        rows.push_back(std::move(row));
      }
      Inequality bound(r + 1, Rational(0));
      bound[axis] = sign;
      bound[r] = -1;
      rows.push_back(std::move(bound));
      if (fm_feasible(std::move(rows), r, max_rows)) return true;
    }
  }
  return false;
}

std::vector<std::pair<char, int>> survey_systems(const SurveyOptions& options) {
  std::vector<std::pair<char, int>> out;
  for (char t : options.types) {
    for (int rank = 1; rank <= options.max_rank; ++rank) {
      if (is_valid_type_rank(t, rank)) out.emplace_back(t, rank);
    }
  }
  return out;
}

namespace {

struct Job {
  char type_label;
  int rank;
  std::vector<int> labels;
};

struct JobResult {
  SurveyRow row;
  std::vector<std::string> failures;
};

JobResult run_job(const Job& job, const SurveyOptions& options) {
  JobResult out;
  out.row.type_label = job.type_label;
  out.row.rank = job.rank;
  out.row.labels = job.labels;
  const auto fail = [&](const std::string& prefix, const std::string& what) {
    out.failures.push_back(prefix + ": " + what);
  };
  try {
    const HodgeGrading g =
        make_grading(shared_root_system(job.type_label, job.rank), job.labels);
    const std::string name = g.spec_string();
    const DomainReport report = classify(g);
    out.row.classical = report.classical;
    out.row.hermitian = report.hermitian_type;
    out.row.m0 = report.m0;
    out.row.dim_D = report.dim_D;

    const ConeSystem sys = criterion_cone(g.root_system(), g.cplus(), g.nplus());
    const SearchBox box{options.radius, sys.dimension};
    const auto hit = lattice_cone_search(sys, box);
    if (hit && !report.classical) fail(name, "lattice point in a trivial cone");
    if (report.classical && !hit) {
      const auto& w = report.witness_classical->coordinates;
      const bool in_box = std::all_of(w.begin(), w.end(), [&](const Rational& x) {
        return abs(x) <= options.radius;
      });
      if (in_box) fail(name, "witness inside box but lattice search found nothing");
    }
    if (!verify_k_equals_pp(g)) fail(name, "k != [p, p]");

    if (!report.classical && report.hermitian_type) {
      const NewStructure ns = new_complex_structure(g);
      if (!ns.differs_from_original) fail(name, "new structure equals the original");
      if (!ns.projection_holomorphic) fail(name, "projection not holomorphic");
      parabolic_of_new(g, ns);
      positive_system_of(g, ns.structure);
      const RootSet nc = set_intersection(ns.structure.S, g.noncompact());
      if (!is_sum_free(g.root_system(), nc)) fail(name, "noncompact part of S not sum-free");
    }
    if (options.count_structures && 2 * g.n_minus().size() <= EnumerationBounds{}.max_nonv0_roots) {
      out.row.n_structures = enumerate_structures(g).structures.size();
    }
  } catch (const Error& e) {
    std::string name = std::string(1, job.type_label) + std::to_string(job.rank) + "/";
    for (std::size_t i = 0; i < job.labels.size(); ++i) {
      name += (i ? "," : "") + std::to_string(job.labels[i]);
    }
    fail(name, e.what());
  }
  return out;
}

}  // namespace

SurveyResult survey_crosscheck(const SurveyOptions& options) {
  if (options.radius < 1) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 1");
  std::vector<Job> jobs;
  for (const auto& [t, rank] : survey_systems(options)) {
    for (auto& labels : all_label_vectors(rank)) jobs.push_back({t, rank, std::move(labels)});
  }

  std::vector<JobResult> results(jobs.size());
  std::size_t workers = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  workers = std::max<std::size_t>(1, std::min(workers, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(jobs[i], options);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SurveyResult out;
  for (auto& res : results) {
    const SurveyRow& row = res.row;
    if (out.summaries.empty() || out.summaries.back().type_label != row.type_label ||
        out.summaries.back().rank != row.rank) {
      out.summaries.push_back({row.type_label, row.rank, 0, 0, 0, 0});
    }
    auto& s = out.summaries.back();
    ++s.total;
    ++(row.classical ? s.classical : s.nonclassical);
    if (row.hermitian) ++s.hermitian;
    out.rows.push_back(std::move(res.row));
    for (auto& f : res.failures) out.failures.push_back(std::move(f));
  }
  return out;
}

}  // namespace pdclass
