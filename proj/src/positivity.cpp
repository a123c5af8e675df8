#include "pearl/positivity.hpp"

#include "pearl/errors.hpp"

namespace pearl {

namespace {

constexpr ExponentRange kMorse{0, 0};

CellImage identity_cells(std::size_t n) {
  return [n](std::size_t g, int e) { return Cochain::basis(n, g, e); };
}

bool chain_square(const ChainMap& top, const ChainMap& bottom, const ChainMap& src_vertical,
                  const ChainMap& dst_vertical, int k) {
  return dst_vertical.matrix(k + top.shift()) * top.matrix(k) ==
         bottom.matrix(k) * src_vertical.matrix(k);
}

struct LadderMaps {
  ChainMap base;
  ChainMap total;
};

LadderReport run_ladder(const BundleComplex& top_b, std::optional<ExponentRange> top_range,
                        const BundleComplex& bottom_b, std::optional<ExponentRange> bottom_range,
                        DegreeWindow window) {
  const LadderMaps v{
      ChainMap(base_slices(top_b, top_range), base_slices(bottom_b, bottom_range), 0,
               identity_cells(top_b.base().size())),
      ChainMap(total_slices(top_b, top_range), total_slices(bottom_b, bottom_range), 0,
               identity_cells(top_b.total().size()))};
  const auto i_top = map_i(top_b, top_range);
  const auto p_top = map_p(top_b, top_range);
  const auto t_top = twist_map(top_b, top_range);
  const auto i_bot = map_i(bottom_b, bottom_range);
  const auto p_bot = map_p(bottom_b, bottom_range);
  const auto t_bot = twist_map(bottom_b, bottom_range);

  LadderReport report;
  for (int k = window.lo; k <= window.hi; ++k) {
    const bool ok = chain_square(i_top, i_bot, v.base, v.total, k) &&
                    chain_square(p_top, p_bot, v.total, v.base, k) &&
                    chain_square(t_top, t_bot, v.base, v.base, k);
    if (!ok) report.chain_squares = false;
  }
  const auto top = long_exact_sequence(i_top, p_top, window);
  const auto bottom = long_exact_sequence(i_bot, p_bot, window);
  const auto h = compare_les(top, bottom, v.base, v.total, v.base);
  report.homology_squares = h.homology_squares;
  report.failing_degrees = h.failing_degrees;
  return report;
}

}  // namespace

void require_morse_indices(const PearlData& data) {
  for (const auto& g : data.generators)
    if (g.index < 0)
      throw InvalidData("generator '" + g.id + "' has negative Morse index " + std::to_string(g.index));
}

PearlComplex positive_complex(const PearlData& data) {
  require_morse_indices(data);
  return build_complex(data, RingSpec::positive(data.N));
}

ChainMap sigma_map(const PearlComplex& positive) {
  if (positive.ring().kind != RingKind::positive)
    throw RingMismatch("σ is defined on a Λ⁺ complex, got " + to_string(positive.ring()));
  const std::size_t n = positive.size();
  return ChainMap(GradedSlices(positive), GradedSlices::morse(positive), 0,
                  [n](std::size_t g, int e) { return e == 0 ? Cochain::basis(n, g, 0) : Cochain(n); });
}

ChainMap theta_map(const PearlComplex& positive) {
  if (positive.ring().kind != RingKind::positive)
    throw RingMismatch("θ is defined on a Λ⁺ complex, got " + to_string(positive.ring()));
  PearlComplex laurent(RingSpec::laurent(positive.ring().generator_degree), positive.generators(),
                       positive.terms());
  return ChainMap(GradedSlices(positive), GradedSlices(laurent), 0, identity_cells(positive.size()));
}

SigmaReport sigma_report(const PearlComplex& positive, DegreeWindow window) {
  const auto sigma = sigma_map(positive);
  SigmaReport r{window, true, {}};
  for (int k = window.lo; k <= window.hi; ++k) {
    if (!sigma.commutes_at(k)) r.chain_map = false;
    r.induced.push_back(sigma.induced(k));
  }
  return r;
}

ClassRef sigma_class(const PearlComplex& positive, int k, const Cochain& cocycle) {
  const auto sigma = sigma_map(positive);
  const auto image = sigma.apply(cocycle);
  return class_of(sigma.target(), k, image);
}

LadderReport compare_les(const LesReport& top, const LesReport& bottom, const ChainMap& alpha,
                         const ChainMap& beta, const ChainMap& gamma) {
  if (top.shift != bottom.shift || top.rows.size() != bottom.rows.size())
    throw InvalidData("compared sequences have different shapes");
  const int s = top.shift;
  LadderReport r;
  for (std::size_t n = 0; n < top.rows.size(); ++n) {
    const auto& a = top.rows[n];
    const auto& b = bottom.rows[n];
    const int k = a.k;
    const bool sq_f = beta.induced(k) * a.f == b.f * alpha.induced(k);
    const bool sq_g = gamma.induced(k + s) * a.g == b.g * beta.induced(k);
    const bool sq_d = alpha.induced(k + 1) * a.boundary == b.boundary * gamma.induced(k + s);
    if (!(sq_f && sq_g && sq_d)) {
      r.homology_squares = false;
      r.failing_degrees.push_back(k);
    }
  }
  return r;
}

LadderReport comparison_ladder(const BundleComplex& positive_bundle, DegreeWindow window) {
  if (positive_bundle.base().ring().kind != RingKind::positive)
    throw RingMismatch("the comparison ladder starts from a Λ⁺ bundle");
  return run_ladder(positive_bundle, std::nullopt, positive_bundle, kMorse, window);
}

LadderReport theta_ladder(const BundleComplex& positive_bundle, const BundleComplex& laurent_bundle,
                          DegreeWindow window) {
  if (positive_bundle.base().ring().kind != RingKind::positive ||
      laurent_bundle.base().ring().kind != RingKind::laurent)
    throw RingMismatch("the θ ladder maps a Λ⁺ bundle to a Λ bundle");
  if (positive_bundle.total().generators() != laurent_bundle.total().generators())
    throw InvalidData("the θ ladder needs bundles over the same generators");
  return run_ladder(positive_bundle, std::nullopt, laurent_bundle, std::nullopt, window);
}

InjectivityReport injectivity_window(const PearlComplex& positive) {
  const int N = positive.ring().generator_degree;
  const auto sigma = sigma_map(positive);
  InjectivityReport r;
  for (int k = 0; k < N; ++k) {
    const auto m = sigma.induced(k);
    const auto ker = m.cols() - m.rank();
    r.kernel_dims.push_back(ker);
    if (ker != 0) r.injective = false;
  }

  const GradedSlices multiples(positive, {1, std::nullopt});
  const ChainMap incl(multiples, GradedSlices(positive), 0, identity_cells(positive.size()));
  const int lo = positive.size() ? std::min(0, positive.min_index()) - 1 : -1;
  const int hi = positive.size() ? positive.max_index() + N + 1 : N;
  for (int k = lo; k <= hi; ++k)
    if (!short_exact_at(incl, sigma, k)) r.pair_chain_exact = false;
  r.pair_les_exact = long_exact_sequence(incl, sigma, {lo, hi}).exact();
  return r;
}

EulerComparison compare_euler_classes(const BundleComplex& positive_bundle,
                                      const BundleComplex& laurent_bundle, const Cochain& unit) {
  auto pos = euler_class(positive_bundle, unit);
  auto lau = euler_class(laurent_bundle, unit);
  auto theta = class_of(base_slices(laurent_bundle), 2, pos.representative);
  auto sigma = sigma_class(positive_bundle.base(), 2, pos.representative);

  // Classical e through the generic connecting map of the Morse sequence.
  const auto i = map_i(positive_bundle, kMorse);
  const auto p = map_p(positive_bundle, kMorse);
  const auto morse = base_slices(positive_bundle, kMorse);
  const auto e_vec = snake(i, p, 1, morse.from_cochain(0, unit));
  ClassRef classical{morse.to_cochain(2, e_vec), morse.homology(2).coordinates(e_vec), 2};

  EulerComparison out{pos, lau, theta, sigma, classical, false, false};
  out.theta_matches = theta.coordinates == lau.coordinates;
  out.sigma_matches = sigma.coordinates == classical.coordinates;
  return out;
}

PeriodicityVerdict periodicity_check(const std::vector<std::size_t>& dims, int N, bool gamma_vanishes) {
  if (static_cast<int>(dims.size()) != N) throw InvalidData("periodicity check needs one period of dimensions");
  PeriodicityVerdict v;
  v.applicable = gamma_vanishes;
  v.periodic = true;
  for (int k = 0; k < N; ++k)
    if (dims[static_cast<std::size_t>(k)] != dims[static_cast<std::size_t>((k + 2) % N)]) v.periodic = false;
  return v;
}

bool narrowness_obstruction(const std::vector<int>& betti, int N) {
  if (N < 1) throw InvalidData("N must be positive");
  for (std::size_t i = 0; i < betti.size(); ++i)
    if ((static_cast<int>(i) + 1) % N == 0 && betti[i] != 0) return false;
  return true;
}

std::optional<bool> subcritical_euler_check(int N, bool qh_nonzero, bool gamma_vanishes,
                                            bool classical_euler_nonzero) {
  if (N < 3 || !qh_nonzero || !gamma_vanishes) return std::nullopt;
  return classical_euler_nonzero;
}

}  // namespace pearl
