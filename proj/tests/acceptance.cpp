// Acceptance driver: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pdclass/classifier.hpp"
#include "pdclass/cli.hpp"
#include "pdclass/cone.hpp"
#include "pdclass/error.hpp"
#include "pdclass/oracle.hpp"
#include "pdclass/structures.hpp"
#include "support.hpp"

using namespace pdclass;

namespace {

constexpr double kEquivalenceBudgetSeconds = 300.0;
constexpr double kThreeToTwoBudgetSeconds = 120.0;
constexpr int kOracleRadius = 3;
constexpr int kWeightSamples = 100;
constexpr int kWeightBound = 5;
constexpr std::uint32_t kWeightSeed = 20261014;
constexpr int kFuzzedCones = 1000;
constexpr std::uint32_t kFuzzSeed = 424242;
constexpr unsigned kManyJobs = 8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<HodgeGrading> sweep_gradings() {
  std::vector<HodgeGrading> out;
  for (const auto& [t, rank] : testing::sweep_systems()) {
    const auto rs = shared_root_system(t, rank);
    for (const auto& labels : all_label_vectors(rank)) out.push_back(make_grading(rs, labels));
  }
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t count = 0, nonclassical = 0;
  for (const auto& g : sweep_gradings()) {
    try {
      const auto r = classify(g);
      ++count;
      if (!r.classical) ++nonclassical;
    } catch (const Error& e) {
      o.fail(g.spec_string() + ": " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs > kEquivalenceBudgetSeconds) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(count) + " gradings, " + std::to_string(nonclassical) +
               " non-classical, " + std::to_string(secs) + " s";
  }
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t triples = 0;
  for (const auto& [t, rank] : testing::sweep_systems()) {
    const auto rep = verify_three_to_two(*shared_root_system(t, rank));
    triples += rep.triples_checked;
    if (!rep.holds || !rep.violations.empty()) {
      o.fail(std::string(1, t) + std::to_string(rank) + ": " +
             std::to_string(rep.violations.size()) + " violations");
    }
  }
  ThreeToTwoOptions degenerate;
  degenerate.exclude_beta_negative_alpha = false;
  const auto demo = verify_three_to_two(*shared_root_system('A', 2), degenerate);
  if (demo.violations.empty()) o.fail("degenerate A2 triples produced no violation");
  const double secs = seconds_since(t0);
  if (secs > kThreeToTwoBudgetSeconds) o.fail("runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(triples) + " triples, degenerate A2 violations " +
               std::to_string(demo.violations.size()) + ", " + std::to_string(secs) + " s";
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& g : sweep_gradings()) {
    ++count;
    if (!verify_k_equals_pp(g)) o.fail(g.spec_string());
  }
  if (o.pass) o.detail = std::to_string(count) + " gradings";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto g11 = make_grading('C', 2, {1, 1});
  const auto r11 = classify(g11);
  const Root a1 = testing::R({1, 0});
  const Root a2 = testing::R({0, 1});
  if (r11.classical) o.fail("C2/1,1 classified classical");
  if (!r11.hermitian_type) o.fail("C2/1,1 not Hermitian");
  if (r11.m0 != 3) o.fail("C2/1,1 m0 = " + std::to_string(r11.m0));
  if (r11.dim_D != 4) o.fail("C2/1,1 dim_D = " + std::to_string(r11.dim_D));
  if (!r11.witness_nonclassical || r11.witness_nonclassical->first != a1 ||
      r11.witness_nonclassical->second != a2) {
    o.fail("C2/1,1 witness is not (a1, a2)");
  }
  const auto sys11 = criterion_cone(g11.root_system(), g11.cplus(), g11.nplus());
  if (lattice_cone_search(sys11, SearchBox{kOracleRadius, 2})) {
    o.fail("lattice oracle found a point in the C2/1,1 cone");
  }

  const auto g01 = make_grading('C', 2, {0, 1});
  const auto r01 = classify(g01);
  if (!r01.classical) o.fail("C2/0,1 classified non-classical");
  const auto sys01 = criterion_cone(g01.root_system(), g01.cplus(), g01.nplus());
  if (!lattice_cone_search(sys01, SearchBox{kOracleRadius, 2})) {
    o.fail("lattice oracle found no point in the C2/0,1 cone");
  }
  if (sys01.normals.size() != 4) {
    o.fail("C2/0,1 cone has " + std::to_string(sys01.normals.size()) + " conditions");
  }
  const RationalVector expected{Rational(1), Rational(0)};
  if (!satisfies_all(sys01, expected)) {
    std::ostringstream why;
    why << "C2/0,1 weight (1,0) violates a sign condition; computed witness (";
    for (std::size_t i = 0; i < r01.witness_classical->coordinates.size(); ++i) {
      why << (i ? "," : "") << r01.witness_classical->coordinates[i];
    }
    why << ")";
    o.fail(why.str());
  }
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(kWeightSeed);
  std::uniform_int_distribution<int> coord(-kWeightBound, kWeightBound);
  std::size_t gradings = 0, samples = 0;
  for (const auto& g : sweep_gradings()) {
    if (is_classical_definitional(g).classical) continue;
    ++gradings;
    for (int s = 0; s < kWeightSamples; ++s) {
      Weight lambda = Weight::zero(static_cast<std::size_t>(g.rank()));
      do {
        for (auto& x : lambda.coordinates) x = coord(rng);
      } while (lambda.is_zero());
      ++samples;
      const auto q = q_value(g, lambda);
      if (q < 1) o.fail(g.spec_string() + ": q = 0");
      if (curvature_signature(g, lambda).negative != q) o.fail(g.spec_string() + ": n_neg != q");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(gradings) + " gradings, " + std::to_string(samples) + " weights";
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : sweep_gradings()) {
    if (is_classical_definitional(g).classical) continue;
    try {
      if (!hermitian_splitting(g)) continue;
      ++checked;
      const auto ns = new_complex_structure(g);
      const auto& rs = g.root_system();
      const auto tag = g.spec_string() + ": ";
      if (!validate_structure(g, ns.structure.S).valid) o.fail(tag + "axioms fail");
      if (!ns.differs_from_original) o.fail(tag + "equals the original");
      parabolic_of_new(g, ns);
      const auto ps = positive_system_of(g, ns.structure);
      const auto v0_positive = set_intersection(g.v0(), rs.positive_roots());
      if (ps.roots != set_union(ns.structure.S, v0_positive)) {
        o.fail(tag + "positive system mismatch");
      }
      if (ps.simple_roots.size() != static_cast<std::size_t>(g.rank())) {
        o.fail(tag + "wrong number of simple roots");
      }
      if (!ns.projection_holomorphic) o.fail(tag + "projection not holomorphic");
      if (!is_sum_free(rs, set_intersection(ns.structure.S, g.noncompact()))) {
        o.fail(tag + "noncompact part not sum-free");
      }
    } catch (const Error& e) {
      o.fail(g.spec_string() + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " non-classical Hermitian gradings";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::mt19937 rng(kFuzzSeed);
  const auto gradings = sweep_gradings();
  std::uniform_int_distribution<std::size_t> pick(0, gradings.size() - 1);
  std::bernoulli_distribution flip(0.2);
  std::uniform_int_distribution<int> num(1, 9);
  std::size_t trivial = 0, nontrivial = 0;
  for (int trial = 0; trial < kFuzzedCones; ++trial) {
    const auto& g = gradings[pick(rng)];
    auto sys = criterion_cone(g.root_system(), g.cplus(), g.nplus());
    for (auto& a : sys.normals) {
      if (flip(rng)) {
        for (auto& x : a) x = -x;
      }
    }
    const auto tag = "cone " + std::to_string(trial) + " (" + g.spec_string() + "): ";
    const auto d = decide_cone(sys);
    if (const auto* t = std::get_if<ConeTrivial>(&d)) {
      ++trivial;
      if (!verify_certificate(sys, t->certificate)) o.fail(tag + "certificate rejected");
    } else {
      ++nontrivial;
      const auto& w = std::get<ConeNontrivial>(d).witness;
      if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; })) {
        o.fail(tag + "zero witness");
      }
      if (!satisfies_all(sys, w)) o.fail(tag + "witness violates an inequality");
    }
    auto scaled = sys;
    for (auto& a : scaled.normals) {
      const Rational c(num(rng), num(rng));
      for (auto& x : a) x *= c;
    }
    if (is_trivial(decide_cone(scaled)) != is_trivial(d)) o.fail(tag + "rescaling changed it");
    const auto hit = lattice_cone_search(sys, SearchBox{kOracleRadius, sys.dimension});
    if (hit && is_trivial(d)) o.fail(tag + "lattice point in a trivial cone");
    if (hit) {
      std::vector<BigInt> p(hit->begin(), hit->end());
      if (!satisfies_all(sys, p)) o.fail(tag + "lattice point outside the cone");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(trivial) + " trivial, " + std::to_string(nontrivial) + " nontrivial";
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1/1", 2}, {"C2/1,1", 8}, {"C2/0,1", 4}};
  std::ostringstream counts;
  for (const auto& [spec, expected] : cases) {
    const auto d = parse_domain_spec(spec);
    const auto g = make_grading(d.type_label, d.rank, d.labels);
    const auto en = enumerate_structures(g);
    const auto brute = testing::brute_structures(g);
    counts << (counts.tellp() > 0 ? ", " : "") << spec << "=" << en.structures.size();
    if (brute.size() != en.structures.size()) {
      o.fail(spec + ": brute force finds " + std::to_string(brute.size()));
    }
    if (std::find(en.structures.begin(), en.structures.end(), g.n_minus()) ==
        en.structures.end()) {
      o.fail(spec + ": original structure missing");
    }
    if (en.structures.size() != expected) {
      o.fail(spec + ": " + std::to_string(en.structures.size()) + " structures, expected " +
             std::to_string(expected) + " (brute force " + std::to_string(brute.size()) + ")");
    }
  }
  if (o.pass) o.detail = counts.str();
  return o;
}

std::string survey_csv(unsigned jobs) {
  const std::string j = std::to_string(jobs);
  std::vector<const char*> argv{"pdclass", "survey", "--format", "csv", "--jobs", j.c_str()};
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
  return out.str();
}

Outcome criterion_9() {
  Outcome o;
  const auto first = survey_csv(1);
  const auto second = survey_csv(1);
  const auto many = survey_csv(kManyJobs);
  if (first.rfind("type,", 0) != 0) o.fail("survey failed: " + first);
  if (first != second) o.fail("two serial runs differ");
  if (first != many) o.fail("1 vs " + std::to_string(kManyJobs) + " jobs differ");
  if (o.pass) o.detail = std::to_string(first.size()) + " bytes identical";
  return o;
}

const std::vector<std::function<Outcome()>> kCriteria = {
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdclass acceptance"};
  int only = 0;
  app.add_option("--criterion", only, "criterion to run (default: all)")
      ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) {
    if (only != 0 && n != only) continue;
    Outcome o;
    try {
      o = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
