#include "pearl/gysin_bundle.hpp"

#include <algorithm>
#include <map>

namespace pearl {

// -- BundleComplex -----------------------------------------------------------

BundleComplex::BundleComplex(PearlComplex base, std::vector<ComplexTerm> twist, PearlComplex total)
    : base_(std::move(base)), twist_(std::move(twist)), total_(std::move(total)) {}

Cochain BundleComplex::apply_twist(const Cochain& c) const {
  Cochain out = base_.zero();
  for (const auto& t : twist_)
    if (!c[t.source].is_zero()) out[t.target] += c[t.source].shifted(t.exponent);
  return out;
}

Cochain BundleComplex::include(const Cochain& c) const {
  Cochain out = total_.zero();
  for (std::size_t g = 0; g < base_.size(); ++g) out[prime(g)] = c[g];
  return out;
}

Cochain BundleComplex::project(const Cochain& c) const {
  Cochain out = base_.zero();
  for (std::size_t g = 0; g < base_.size(); ++g) out[g] = c[double_prime(g)];
  return out;
}

Cochain BundleComplex::lift(const Cochain& c) const {
  Cochain out = total_.zero();
  for (std::size_t g = 0; g < base_.size(); ++g) out[double_prime(g)] = c[g];
  return out;
}

Cochain BundleComplex::restrict_to_base(const Cochain& c) const {
  Cochain out = base_.zero();
  for (std::size_t g = 0; g < base_.size(); ++g) {
    if (!c[double_prime(g)].is_zero())
      throw InvalidData("cochain has a " + total_.id(double_prime(g)) + " term, not in the image of i");
    out[g] = c[prime(g)];
  }
  return out;
}

// -- construction ------------------------------------------------------------

namespace {

void check_twist_degrees(const PearlComplex& base, const std::vector<ComplexTerm>& twist) {
  for (const auto& t : twist) {
    if (t.source >= base.size() || t.target >= base.size())
      throw InvalidData("twist term refers to a generator position out of range");
    const auto& x = base.id(t.target);
    const auto& y = base.id(t.source);
    if (base.index(t.target) + t.exponent * base.ring().generator_degree != base.index(t.source) + 2)
      throw TwistDegreeViolation("twist term (x=" + x + ", y=" + y + ", mu_bar=" +
                                 std::to_string(t.exponent) + "): index " +
                                 std::to_string(base.index(t.target)) + " + " +
                                 std::to_string(t.exponent) + "*" +
                                 std::to_string(base.ring().generator_degree) +
                                 " != " + std::to_string(base.index(t.source)) + " + 2");
    if (base.ring().kind == RingKind::positive && t.exponent < 0)
      throw NotPositive("twist term " + y + " -> " + x + " has a negative exponent");
  }
}

Cochain twist_of(const PearlComplex& base, const std::vector<ComplexTerm>& twist, const Cochain& c) {
  Cochain out = base.zero();
  for (const auto& t : twist)
    if (!c[t.source].is_zero()) out[t.target] += c[t.source].shifted(t.exponent);
  return out;
}

ExponentRange natural(const PearlComplex& c) {
  if (c.ring().kind == RingKind::positive) return {0, std::nullopt};
  return {};
}

}  // namespace

std::vector<ComplexTerm> resolve_twist(const PearlComplex& base, const std::vector<TwistTerm>& twist) {
  std::vector<ComplexTerm> out;
  for (const auto& t : twist) {
    const auto x = base.position(t.x);
    const auto y = base.position(t.y);
    if (t.mu_bar < 0)
      throw InvalidData("twist term " + t.y + " -> " + t.x + " has negative mu_bar");
    const ComplexTerm term{x, y, t.mu_bar};
    check_twist_degrees(base, {term});
    if (t.count % 2 != 0) out.push_back(term);
  }
  return out;
}

std::vector<ObstructionEntry> twist_obstruction(const PearlComplex& base,
                                                const std::vector<ComplexTerm>& twist) {
  std::vector<ObstructionEntry> entries;
  for (std::size_t y = 0; y < base.size(); ++y) {
    const auto e = base.basis(y);
    const auto v = twist_of(base, twist, base.differential(e)) + base.differential(twist_of(base, twist, e));
    for (std::size_t x = 0; x < base.size(); ++x)
      if (!v[x].is_zero()) {
        const auto exps = v[x].exponents();
        entries.push_back({base.id(y), base.id(x), std::vector<int>(exps.begin(), exps.end())});
      }
  }
  return entries;
}

BundleComplex build_bundle_complex(const PearlComplex& base, const std::vector<ComplexTerm>& twist) {
  const auto dd = check_d_squared(base);
  if (!dd.ok())
    throw DSquaredNonzero("base complex has d∘d != 0 on " + base.id(dd.entries.front().source));
  check_twist_degrees(base, twist);
  auto obstruction = twist_obstruction(base, twist);
  if (!obstruction.empty()) {
    std::string what = "twist does not anticommute with d:";
    for (const auto& e : obstruction) what += " (" + e.source + " -> " + e.target + ")";
    throw TwistNotCocycle(what, std::move(obstruction));
  }

  const std::size_t n = base.size();
  std::vector<Generator> gens;
  gens.reserve(2 * n);
  for (const auto& g : base.generators()) gens.push_back({g.id + "'", g.index});
  for (const auto& g : base.generators()) gens.push_back({g.id + "''", g.index + 1});

  std::vector<ComplexTerm> terms;
  for (const auto& t : base.terms()) {
    terms.push_back(t);
    terms.push_back({n + t.target, n + t.source, t.exponent});
  }
  for (const auto& t : twist) terms.push_back({t.target, n + t.source, t.exponent});
  PearlComplex total(base.ring(), std::move(gens), terms);
  return BundleComplex(base, twist, std::move(total));
}

BundleComplex build_bundle_complex(const PearlData& base, const std::vector<TwistTerm>& twist,
                                   RingSpec ring) {
  auto c = build_complex(base, ring);
  auto resolved = resolve_twist(c, twist);
  return build_bundle_complex(c, resolved);
}

// -- slices and maps ---------------------------------------------------------

GradedSlices base_slices(const BundleComplex& b, std::optional<ExponentRange> range) {
  return {b.base(), range.value_or(natural(b.base()))};
}

GradedSlices total_slices(const BundleComplex& b, std::optional<ExponentRange> range) {
  return {b.total(), range.value_or(natural(b.total()))};
}

ChainMap map_i(const BundleComplex& b, std::optional<ExponentRange> range) {
  const std::size_t total = b.total().size();
  return ChainMap(base_slices(b, range), total_slices(b, range), 0,
                  [total](std::size_t g, int e) { return Cochain::basis(total, g, e); });
}

ChainMap map_p(const BundleComplex& b, std::optional<ExponentRange> range) {
  const std::size_t n = b.base().size();
  return ChainMap(total_slices(b, range), base_slices(b, range), -1, [n](std::size_t g, int e) {
    return g < n ? Cochain(n) : Cochain::basis(n, g - n, e);
  });
}

ChainMap twist_map(const BundleComplex& b, std::optional<ExponentRange> range) {
  return ChainMap(base_slices(b, range), base_slices(b, range), 2, [b](std::size_t g, int e) {
    return b.apply_twist(b.base().basis(g, e));
  });
}

DegreeWindow default_window(const BundleComplex& b) {
  const auto& base = b.base();
  if (base.ring().kind == RingKind::positive) {
    if (base.size() == 0) return {0, 1};
    return {std::min(0, base.min_index()) - 1, base.max_index() + 2};
  }
  return {0, base.ring().generator_degree - 1};
}

BundleMapChecks verify_bundle_maps(const BundleComplex& b, DegreeWindow window,
                                   std::optional<ExponentRange> range) {
  const auto i = map_i(b, range);
  const auto p = map_p(b, range);
  BundleMapChecks checks;
  for (int k = window.lo; k <= window.hi; ++k) {
    checks.i_commutes = checks.i_commutes && i.commutes_at(k);
    checks.p_commutes = checks.p_commutes && p.commutes_at(k);
    checks.p_after_i_zero = checks.p_after_i_zero && (p.matrix(k) * i.matrix(k)).is_zero();
    checks.chain_exact = checks.chain_exact && short_exact_at(i, p, k);
  }
  return checks;
}

// -- connecting map ----------------------------------------------------------

Cochain connecting_chain(const BundleComplex& b, const Cochain& cocycle) {
  if (!b.base().differential(cocycle).is_zero())
    throw NotACocycle("connecting map input " + b.base().format(cocycle) + " is not closed");
  return b.restrict_to_base(b.total().differential(b.lift(cocycle)));
}

ConnectingComparison connecting_map(const BundleComplex& b, int k, std::optional<ExponentRange> range) {
  const auto bs = base_slices(b, range);
  ConnectingComparison out;
  out.k = k;
  out.chain_equal = true;
  for (const auto& z : gf2::kernel_basis(bs.d(k))) {
    const auto y = bs.to_cochain(k, z);
    ++out.cocycles;
    if (!(connecting_chain(b, y) == b.apply_twist(y))) out.chain_equal = false;
  }

  const auto i = map_i(b, range);
  const auto p = map_p(b, range);
  const auto hk = bs.homology(k);
  const auto hk2 = bs.homology(k + 2);
  std::vector<gf2::BitVector> cols;
  for (const auto& c : hk.representatives()) cols.push_back(hk2.coordinates(snake(i, p, k + 1, c)));
  out.matrix = gf2::BitMatrix::from_columns(hk2.dim(), std::move(cols));
  out.homology_equal = out.matrix == twist_map(b, range).induced(k);
  return out;
}

ClassRef class_of(const GradedSlices& s, int k, const Cochain& cocycle) {
  const auto v = s.from_cochain(k, cocycle);
  return {cocycle, s.homology(k).coordinates(v), k};
}

ClassRef euler_class(const BundleComplex& b, const Cochain& unit, std::optional<ExponentRange> range) {
  const auto deg = b.base().degree_of(unit);
  if (deg && *deg != 0) throw InvalidData("the unit must have degree 0, got " + std::to_string(*deg));
  const auto e = connecting_chain(b, unit);
  return class_of(base_slices(b, range), 2, e);
}

LesReport long_exact_sequence(const BundleComplex& b, std::optional<DegreeWindow> window,
                              std::optional<ExponentRange> range) {
  return long_exact_sequence(map_i(b, range), map_p(b, range), window.value_or(default_window(b)));
}

ClassicalGysin classical_gysin(const PearlData& base, const std::vector<TwistTerm>& twist) {
  auto bundle = build_bundle_complex(base, twist, RingSpec::positive(base.N));
  const ExponentRange morse{0, 0};
  const auto& c = bundle.base();
  const int lo = c.size() ? c.min_index() : 0;
  const int hi = c.size() ? c.max_index() : 0;
  auto les = long_exact_sequence(bundle, DegreeWindow{lo - 1, hi + 2}, morse);
  ClassicalGysin out{bundle, std::move(les), {lo, hi + 1}, {}, {}};
  const auto bs = base_slices(bundle, morse);
  const auto ts = total_slices(bundle, morse);
  for (int k = lo; k <= hi + 1; ++k) {
    out.base_dims.push_back(bs.homology(k).dim());
    out.total_dims.push_back(ts.homology(k).dim());
  }
  return out;
}

// -- ambient variant ---------------------------------------------------------

Cochain cochain_to_ambient(const Cochain& c, int N) {
  Cochain out = c;
  for (std::size_t g = 0; g < c.size(); ++g) out[g] = to_ambient(c[g], N);
  return out;
}

AmbientVariant ambient_variant(const BundleComplex& b, const std::optional<Cochain>& unit) {
  const auto& base = b.base();
  const RingSpec ring = RingSpec::ambient_over(base.ring());
  const int N = base.ring().generator_degree;
  const int half = N / 2;

  std::vector<ComplexTerm> terms;
  for (const auto& t : base.terms()) terms.push_back({t.target, t.source, t.exponent * half});
  PearlComplex amb_base(ring, base.generators(), terms);

  std::vector<ComplexTerm> tw;
  for (const auto& t : b.twist()) tw.push_back({t.target, t.source, t.exponent * half});
  auto untwisted = build_bundle_complex(amb_base, tw);
  for (std::size_t g = 0; g < base.size(); ++g) tw.push_back({g, g, 1});
  auto bundle = build_bundle_complex(amb_base, tw);

  AmbientVariant out{bundle, untwisted, true, std::nullopt, std::nullopt, false, {}};

  const auto bs = base_slices(bundle);
  const std::size_t n = base.size();
  const ChainMap q_mult(bs, bs, 2, [n](std::size_t g, int e) { return Cochain::basis(n, g, e + 1); });
  const auto t_w = twist_map(untwisted);
  for (int k = 0; k < 2; ++k) {
    const auto cmp = connecting_map(bundle, k);
    const bool rel = cmp.matrix == t_w.induced(k) + q_mult.induced(k);
    out.delta_relation = out.delta_relation && cmp.chain_equal && cmp.homology_equal && rel;
  }

  if (unit) {
    const auto u = cochain_to_ambient(*unit, N);
    out.euler = euler_class(bundle, u);
    const auto expected = cochain_to_ambient(connecting_chain(b, *unit), N) + u.shifted(1);
    out.euler_expected = class_of(bs, 2, expected);
    out.euler_relation = out.euler->coordinates == out.euler_expected->coordinates;
  }
  out.les = long_exact_sequence(bundle);
  return out;
}

}  // namespace pearl
