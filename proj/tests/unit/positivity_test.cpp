#include <doctest.h>

#include "oracles.hpp"
#include "pearl/errors.hpp"
#include "pearl/positivity.hpp"

using namespace pearl;

namespace {

struct Pair {
  BundleComplex positive;
  BundleComplex laurent;
};

Pair bundles(const DatasetFile& f) {
  const auto twist = f.twist.value_or(std::vector<TwistTerm>{});
  return {build_bundle_complex(f.pearl, twist, RingSpec::positive(f.pearl.N)),
          build_bundle_complex(f.pearl, twist, RingSpec::laurent(f.pearl.N))};
}

DegreeWindow window_for(const PearlComplex& c) {
  const int N = c.ring().generator_degree;
  return {-1, c.max_index() + N + 2};
}

}  // namespace

TEST_CASE("positive complexes") {
  const auto torus = oracle::corpus("clifford_torus_2");
  const auto pc = positive_complex(torus.pearl);
  CHECK(pc.ring().kind == RingKind::positive);
  CHECK(cohomology(pc, DegreeWindow{0, 0}).dim(0) == 1);

  const auto empty = positive_complex(PearlData{"e", 2, {}, {}, {}, {}});
  CHECK(empty.size() == 0);
  CHECK(cohomology(empty, DegreeWindow{0, 3}).total() == 0);

  const auto rp2 = oracle::corpus("rp2");
  const auto dims = cohomology(positive_complex(rp2.pearl), DegreeWindow{0, 2}).dims;
  CHECK(dims == std::vector<std::size_t>{1, 1, 1});  // H^k(RP^2; Z2), k < N

  CHECK_THROWS_AS(positive_complex(PearlData{"n", 2, {{"w", -1}}, {}, {}, {}}), InvalidData);
  CHECK_THROWS_AS(positive_complex(PearlData{"m", 2, {{"x", 1}, {"y", 2}}, {{"y", "x", -1, 1}}, {}, {}}), InvalidData);
}

TEST_CASE("sigma is a chain map and sends the unit to the unit") {
  for (const auto& path : oracle::corpus_files()) {
    const auto f = load_dataset(path);
    CAPTURE(path.filename().string());
    const auto pc = positive_complex(f.pearl);
    const auto rep = sigma_report(pc, window_for(pc));
    CHECK(rep.chain_map);
    CHECK(rep.induced.size() == static_cast<std::size_t>(window_for(pc).hi - window_for(pc).lo + 1));
    if (f.pearl.unit) {
      const auto unit = cochain_from_ids(pc, *f.pearl.unit);
      const auto s = sigma_class(pc, 0, unit);
      const auto morse_unit = class_of(GradedSlices::morse(pc), 0, unit);
      CHECK(s.coordinates == morse_unit.coordinates);
      CHECK_FALSE(s.is_zero());
    }
  }
}

TEST_CASE("sigma of a t-multiple vanishes") {
  const auto pc = positive_complex(oracle::corpus("clifford_torus_2").pearl);
  CHECK(sigma_class(pc, 2, pc.basis(0, 1)).is_zero());
}

TEST_CASE("ladders commute on the corpus") {
  for (const auto& path : oracle::corpus_files()) {
    const auto f = load_dataset(path);
    CAPTURE(path.filename().string());
    const auto [pb, lb] = bundles(f);
    const auto w = window_for(pb.base());
    const auto sigma = comparison_ladder(pb, w);
    CHECK(sigma.chain_squares);
    CHECK(sigma.homology_squares);
    CHECK(sigma.failing_degrees.empty());
    const auto theta = theta_ladder(pb, lb, w);
    CHECK(theta.ok());
  }
}

TEST_CASE("a mismatched ladder is reported") {
  // the same base with two different twists: the vertical identity maps do
  // not intertwine T
  const auto hopf = oracle::corpus("hopf");
  const auto top = build_bundle_complex(hopf.pearl, *hopf.twist, RingSpec::positive(4));
  const auto bottom = build_bundle_complex(hopf.pearl, {}, RingSpec::laurent(4));
  const auto r = theta_ladder(top, bottom, DegreeWindow{-1, 6});
  CHECK_FALSE(r.ok());
}

TEST_CASE("euler class comparisons") {
  for (const auto* name : {"rp2", "rp3"}) {
    CAPTURE(name);
    const auto f = oracle::corpus(name);
    const auto [pb, lb] = bundles(f);
    const auto cmp = compare_euler_classes(pb, lb, cochain_from_ids(lb.base(), *f.pearl.unit));
    CHECK(cmp.sigma_matches);
    CHECK(cmp.theta_matches);
    CHECK_FALSE(cmp.classical.is_zero());
    CHECK(cmp.sigma_image.coordinates == cmp.classical.coordinates);
  }
  {
    const auto f = oracle::corpus("clifford_torus_2");
    const auto [pb, lb] = bundles(f);
    const auto cmp = compare_euler_classes(pb, lb, cochain_from_ids(lb.base(), {"m"}));
    CHECK(cmp.sigma_image.is_zero());  // e_F = t, classical e = 0
    CHECK(cmp.classical.is_zero());
    CHECK(cmp.sigma_matches);
    CHECK(cmp.theta_matches);
    CHECK_FALSE(cmp.laurent.is_zero());
  }
  for (const auto& path : oracle::corpus_files()) {
    const auto f = load_dataset(path);
    if (!f.pearl.unit) continue;
    const auto [pb, lb] = bundles(f);
    const auto cmp = compare_euler_classes(pb, lb, cochain_from_ids(lb.base(), *f.pearl.unit));
    CHECK(cmp.theta_matches);
    CHECK(cmp.sigma_matches);
  }
}

TEST_CASE("sigma is injective below N on the corpus") {
  for (const auto& path : oracle::corpus_files()) {
    const auto f = load_dataset(path);
    CAPTURE(path.filename().string());
    const auto rep = injectivity_window(positive_complex(f.pearl));
    CHECK(rep.injective);
    CHECK(rep.kernel_dims.size() == static_cast<std::size_t>(f.pearl.N));
    CHECK(rep.pair_chain_exact);
    CHECK(rep.pair_les_exact);
  }
  const auto two = injectivity_window(positive_complex(oracle::corpus("clifford_torus_1").pearl));
  CHECK(two.kernel_dims.size() == 2);
}

TEST_CASE("a class killed only through a t-term breaks injectivity") {
  // d y = x + w t with |w| = -1: [x] survives over Λ⁺ but is d y in the Morse
  // complex. Such data fails the Morse index requirement.
  const PearlData d{"adv", 2, {{"y", 0}, {"x", 1}, {"w", -1}}, {{"x", "y", 0, 1}, {"w", "y", 1, 1}}, {}, {}};
  const auto pc = build_complex(d, RingSpec::positive(2));
  const auto rep = injectivity_window(pc);
  CHECK_FALSE(rep.injective);
  CHECK(rep.kernel_dims[1] == 1);
  CHECK_THROWS_AS(require_morse_indices(d), InvalidData);
  CHECK_THROWS_AS(positive_complex(d), InvalidData);
}

TEST_CASE("periodicity") {
  const auto yes = periodicity_check({2, 2}, 2, true);
  CHECK(yes.applicable);
  CHECK(yes.periodic);
  CHECK(periodicity_check({1, 1, 1}, 3, true).periodic);
  CHECK_FALSE(periodicity_check({1, 0, 1, 1}, 4, true).periodic);
  const auto guard = periodicity_check({1, 0, 1, 0}, 4, false);
  CHECK_FALSE(guard.applicable);
}

TEST_CASE("narrowness criterion") {
  CHECK(narrowness_obstruction({1, 0, 1}, 4));       // S^2, N = 4
  CHECK(narrowness_obstruction({1, 0, 0, 0, 1}, 3));  // S^4, N = 3: 3 does not divide 5
  CHECK_FALSE(narrowness_obstruction({1, 2, 1}, 2));  // T^2
  CHECK_FALSE(narrowness_obstruction({1, 1, 1}, 3));  // RP^2
  CHECK_FALSE(narrowness_obstruction({1, 0, 1}, 3));  // S^2 with N | 3
}

TEST_CASE("subcritical euler check") {
  CHECK(subcritical_euler_check(3, true, true, true) == true);
  CHECK(subcritical_euler_check(3, true, true, false) == false);
  CHECK_FALSE(subcritical_euler_check(2, true, true, true).has_value());
  CHECK_FALSE(subcritical_euler_check(3, false, true, true).has_value());
  CHECK_FALSE(subcritical_euler_check(3, true, false, true).has_value());
}
