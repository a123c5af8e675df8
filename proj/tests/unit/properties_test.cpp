#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pearl/errors.hpp"
#include "pearl/gysin_bundle.hpp"
#include "pearl/positivity.hpp"
#include "random_data.hpp"

using namespace pearl;

namespace {

constexpr int kTrials = 1000;

std::vector<std::size_t> period_dims(const PearlComplex& c) {
  const int N = c.ring().generator_degree;
  return cohomology(c, DegreeWindow{0, N - 1}).dims;
}

oracle::Triples triples(const std::vector<ObstructionEntry>& entries) {
  oracle::Triples out;
  for (const auto& e : entries)
    for (int x : e.exponents) out.insert({e.target, e.source, x});
  return out;
}

}  // namespace

TEST_CASE("random complexes have the planted cohomology") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < kTrials; ++trial) {
    const int N = 1 + trial % 5;
    const auto rc = oracle::random_case(rng, N);
    CAPTURE(trial);
    const auto c = build_complex(rc.data);
    REQUIRE(check_d_squared(c).ok());
    const auto dims = period_dims(c);
    CHECK(dims == rc.expected);
    CHECK(dims == oracle::cohomology_dims(rc.data, oracle::Coeffs::laurent, 0, N - 1));
    // periodicity in k: the window [-N, 2N) repeats the period
    const auto wide = cohomology(c, DegreeWindow{-N, 2 * N - 1}).dims;
    for (std::size_t k = 0; k < wide.size(); ++k) CHECK(wide[k] == dims[k % static_cast<std::size_t>(N)]);
  }
}

TEST_CASE("positive cohomology matches the oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < kTrials / 4; ++trial) {
    const int N = 2 + trial % 3;
    const auto rc = oracle::random_case(rng, N);
    CAPTURE(trial);
    const auto c = build_complex(rc.data, RingSpec::positive(N));
    const DegreeWindow w{0, 3 * N};
    CHECK(cohomology(c, w).dims == oracle::cohomology_dims(rc.data, oracle::Coeffs::positive, w.lo, w.hi));
  }
}

TEST_CASE("valid twists build and their gamma matches the oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < kTrials; ++trial) {
    const int N = 1 + trial % 5;
    const auto rc = oracle::random_case(rng, N);
    CAPTURE(trial);
    const auto base = build_complex(rc.data);
    const auto b = build_bundle_complex(base, resolve_twist(base, rc.twist));
    CHECK(check_d_squared(b.total()).ok());
    const auto gamma = cohomology(b.total(), DegreeWindow{0, N - 1}).dims;
    CHECK(gamma == oracle::cohomology_dims(oracle::total_data(rc.data, rc.twist), oracle::Coeffs::laurent, 0, N - 1));

    // chain-homotopic twists give the same Γ
    const auto moved = oracle::perturb(rng, rc.data, rc.twist);
    const auto b2 = build_bundle_complex(base, resolve_twist(base, moved));
    CHECK(cohomology(b2.total(), DegreeWindow{0, N - 1}).dims == gamma);

    if (trial % 10 == 0) {
      const auto les = long_exact_sequence(b, DegreeWindow{-1, N + 1});
      CHECK(les.exact());
      for (int k = 0; k < N; ++k) CHECK(connecting_map(b, k).homology_equal);
    }
  }
}

TEST_CASE("random twists are rejected exactly when they fail to anticommute") {
  std::mt19937_64 rng(99);
  int rejected = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const int N = 1 + trial % 4;
    const auto rc = oracle::random_case(rng, N);
    const auto twist = oracle::random_twist(rng, rc.data);
    CAPTURE(trial);
    const auto base = build_complex(rc.data);
    const auto resolved = resolve_twist(base, twist);
    const auto expected = oracle::obstruction(rc.data, twist);
    CHECK(triples(twist_obstruction(base, resolved)) == expected);
    try {
      build_bundle_complex(base, resolved);
      CHECK(expected.empty());
    } catch (const TwistNotCocycle& e) {
      ++rejected;
      CHECK_FALSE(expected.empty());
      CHECK(triples(e.entries()) == expected);
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("relabeling does not change cohomology") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < kTrials / 2; ++trial) {
    const int N = 1 + trial % 4;
    const auto rc = oracle::random_case(rng, N);
    const auto r = oracle::relabel(rng, rc.data, rc.twist);
    CAPTURE(trial);
    const auto c1 = build_complex(rc.data);
    const auto c2 = build_complex(r.data);
    CHECK(period_dims(c1) == period_dims(c2));
    const auto b1 = build_bundle_complex(c1, resolve_twist(c1, rc.twist));
    const auto b2 = build_bundle_complex(c2, resolve_twist(c2, r.twist));
    CHECK(period_dims(b1.total()) == period_dims(b2.total()));
  }
}

TEST_CASE("sigma is a chain map on random positive data") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < kTrials / 10; ++trial) {
    const int N = 2 + trial % 3;
    auto rc = oracle::random_case(rng, N);
    CAPTURE(trial);
    const auto pc = build_complex(rc.data, RingSpec::positive(N));
    CHECK(sigma_report(pc, DegreeWindow{0, 2 * N}).chain_map);
  }
}
