#include <doctest.h>

#include <random>

#include "pdclass/classifier.hpp"
#include "pdclass/cone.hpp"
#include "pdclass/error.hpp"
#include "pdclass/oracle.hpp"
#include "support.hpp"

using namespace pdclass;

namespace {

ConeSystem system_of(std::size_t dim, const std::vector<std::vector<int>>& normals) {
  ConeSystem sys;
  sys.dimension = dim;
  for (const auto& a : normals) sys.normals.push_back(to_rational(a));
  return sys;
}

std::vector<BigInt> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("C2/1,1 cone is trivial with a valid certificate") {
  const auto sys = system_of(2, {{0, 2}, {-2, 2}, {2, -4}, {-2, 0}});
  const auto d = decide_cone(sys);
  REQUIRE(is_trivial(d));
  const auto& cert = std::get<ConeTrivial>(d).certificate;
  CHECK(cert.combinations.size() == 4);
  CHECK(verify_certificate(sys, cert));
}

TEST_CASE("C2/0,1 cone is nontrivial") {
  // Normals B a1, -B a2, -B(a1+a2), -B(2a1+a2).
  const auto sys = system_of(2, {{2, -2}, {2, -4}, {0, -2}, {-2, 0}});
  const auto d = decide_cone(sys);
  REQUIRE_FALSE(is_trivial(d));
  const auto& w = std::get<ConeNontrivial>(d).witness;
  CHECK(satisfies_all(sys, w));
  CHECK(w == ints({-1, -1}));
}

TEST_CASE("half-line in rank one") {
  const auto d = decide_cone(system_of(1, {{1}}));
  REQUIRE_FALSE(is_trivial(d));
  CHECK(std::get<ConeNontrivial>(d).witness == ints({1}));
  const auto neg = decide_cone(system_of(1, {{-2}}));
  REQUIRE_FALSE(is_trivial(neg));
  CHECK(std::get<ConeNontrivial>(neg).witness == ints({-1}));
  CHECK(is_trivial(decide_cone(system_of(1, {{1}, {-3}}))));
}

TEST_CASE("tampered certificates are rejected") {
  const auto sys = system_of(2, {{0, 2}, {-2, 2}, {2, -4}, {-2, 0}});
  auto cert = std::get<ConeTrivial>(decide_cone(sys)).certificate;
  REQUIRE(verify_certificate(sys, cert));

  auto negated = cert;
  for (auto& y : negated.combinations[0].coefficients) {
    if (y != 0) {
      y = -y;
      break;
    }
  }
  CHECK_FALSE(verify_certificate(sys, negated));

  auto perturbed = cert;
  for (auto& y : perturbed.combinations[1].coefficients) {
    if (y != 0) {
      y += Rational(1, 7);
      break;
    }
  }
  CHECK_FALSE(verify_certificate(sys, perturbed));

  auto short_cert = cert;
  short_cert.combinations.pop_back();
  CHECK_FALSE(verify_certificate(sys, short_cert));

  auto reordered = cert;
  std::swap(reordered.combinations[0], reordered.combinations[1]);
  CHECK_FALSE(verify_certificate(sys, reordered));
}

TEST_CASE("the full space and a single hyperplane") {
  const auto plane = decide_cone(system_of(3, {{1, 0, 0}, {-1, 0, 0}}));
  REQUIRE_FALSE(is_trivial(plane));
  const auto& w = std::get<ConeNontrivial>(plane).witness;
  CHECK(w[0] == 0);
  CHECK((w[1] != 0 || w[2] != 0));
}

TEST_CASE("invalid systems are rejected") {
  CHECK_THROWS_AS(decide_cone(ConeSystem{2, {}}), Error);
  CHECK_THROWS_AS(decide_cone(system_of(2, {{1, 0}, {1}})), Error);
}

TEST_CASE("nonnegative combination replays exactly") {
  const std::vector<RationalVector> normals{to_rational(std::vector<int>{1, 1}),
                                            to_rational(std::vector<int>{1, -1})};
  const auto solve = solve_nonnegative_combination(normals, to_rational(std::vector<int>{1, 0}));
  REQUIRE(solve.feasible);
  CHECK(solve.coefficients[0] == Rational(1, 2));
  CHECK(solve.coefficients[1] == Rational(1, 2));
  const auto infeasible =
      solve_nonnegative_combination(normals, to_rational(std::vector<int>{-1, 0}));
  REQUIRE_FALSE(infeasible.feasible);
  CHECK(dot(infeasible.farkas_ray, to_rational(std::vector<int>{-1, 0})) < 0);
}

TEST_CASE("random cones agree with Fourier-Motzkin and the lattice oracle") {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> dim_dist(1, 3), m_dist(1, 6), entry(-3, 3);
  int trivial = 0, nontrivial = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(dim_dist(rng));
    ConeSystem sys;
    sys.dimension = dim;
    const int m = m_dist(rng);
    for (int j = 0; j < m; ++j) {
      RationalVector a(dim);
      for (auto& x : a) x = entry(rng);
      sys.normals.push_back(std::move(a));
    }
    const auto d = decide_cone(sys);
    const bool fm = fourier_motzkin_nontrivial(sys);
    CHECK(fm == !is_trivial(d));
    if (is_trivial(d)) {
      ++trivial;
      CHECK(verify_certificate(sys, std::get<ConeTrivial>(d).certificate));
      CHECK_FALSE(lattice_cone_search(sys, SearchBox{3, dim}));
    } else {
      ++nontrivial;
      const auto& w = std::get<ConeNontrivial>(d).witness;
      CHECK(satisfies_all(sys, w));
      CHECK(std::any_of(w.begin(), w.end(), [](const BigInt& x) { return x != 0; }));
    }
  }
  CHECK(trivial > 20);
  CHECK(nontrivial > 20);
}

TEST_CASE("criterion cones of the sweep agree with Fourier-Motzkin") {
  for (const auto& [t, r] : pdclass::testing::sweep_systems()) {
    if (r > 3) continue;
    for (const auto& labels : all_label_vectors(r)) {
      const auto g = make_grading(t, r, labels);
      const auto sys = criterion_cone(g.root_system(), g.cplus(), g.nplus());
      CHECK(fourier_motzkin_nontrivial(sys) == !is_trivial(decide_cone(sys)));
    }
  }
}
