#include "pearl/quantum_algebra.hpp"

#include "pearl/errors.hpp"
#include "pearl/graded.hpp"

namespace pearl {

namespace {

std::vector<ResolvedProductTerm> resolve(const PearlComplex& c, const ProductData& data) {
  const int N = c.ring().generator_degree;
  std::vector<ResolvedProductTerm> out;
  for (const auto& t : data.terms) {
    const auto z = c.position(t.z);
    const auto x = c.position(t.x);
    const auto y = c.position(t.y);
    if (t.mu_bar < 0) throw InvalidData("product term (" + t.z + "; " + t.x + ", " + t.y + ") has negative mu_bar");
    if (c.index(z) + t.mu_bar * N != c.index(x) + c.index(y))
      throw DegreeViolation("product term (z=" + t.z + ", x=" + t.x + ", y=" + t.y +
                            ", mu_bar=" + std::to_string(t.mu_bar) + "): index " +
                            std::to_string(c.index(z)) + " + " + std::to_string(t.mu_bar) + "*" +
                            std::to_string(N) + " != " + std::to_string(c.index(x)) + " + " +
                            std::to_string(c.index(y)));
    if (t.count % 2 != 0) out.push_back({z, x, y, t.mu_bar});
  }
  return out;
}

bool same_class(const Homology& h, const gf2::BitVector& a, const gf2::BitVector& b) {
  return h.coordinates(a) == h.coordinates(b);
}

}  // namespace

Product::Product(const PearlComplex& c, const ProductData& data)
    : Product(c, resolve(c, data), cochain_from_ids(c, data.unit)) {}

Product::Product(const PearlComplex& c, std::vector<ResolvedProductTerm> terms, Cochain unit)
    : c_(c), terms_(std::move(terms)), unit_(std::move(unit)) {
  const auto deg = c_.degree_of(unit_);
  if (deg && *deg != 0) throw InvalidData("product unit must have degree 0");
}

Cochain Product::operator()(const Cochain& a, const Cochain& b) const {
  Cochain out = c_.zero();
  for (const auto& t : terms_) {
    if (a[t.x].is_zero() || b[t.y].is_zero()) continue;
    out[t.z] += (a[t.x] * b[t.y]).shifted(t.exponent);
  }
  return out;
}

Cochain chain_product(const Product& pd, const Cochain& a, const Cochain& b) { return pd(a, b); }

PairVerdict check_leibniz(const Product& pd) {
  const auto& c = pd.complex();
  PairVerdict v;
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      const auto ex = c.basis(x);
      const auto ey = c.basis(y);
      const auto lhs = c.differential(pd(ex, ey));
      const auto rhs = pd(c.differential(ex), ey) + pd(ex, c.differential(ey));
      if (!(lhs == rhs)) v.violations.emplace_back(c.id(x), c.id(y));
    }
  return v;
}

RingVerdict check_homology_ring(const Product& pd) {
  const auto& c = pd.complex();
  const int N = c.ring().generator_degree;
  const GradedSlices s(c);
  RingVerdict v;
  v.unit_closed = c.differential(pd.unit()).is_zero();
  if (!v.unit_closed) {
    v.failures.push_back("unit is not closed");
    return v;
  }
  v.products_closed = v.unital = v.associative = true;

  struct Basis {
    int k;
    std::vector<Cochain> reps;
  };
  std::vector<Basis> basis;
  for (int k = 0; k < N; ++k) {
    Basis b{k, {}};
    const auto h = s.homology(k);
    for (const auto& r : h.representatives()) b.reps.push_back(s.to_cochain(k, r));
    basis.push_back(std::move(b));
  }
  auto closed_class = [&](int k, const Cochain& x, const std::string& what) -> std::optional<gf2::BitVector> {
    if (!c.differential(x).is_zero()) {
      v.products_closed = false;
      v.failures.push_back(what + " is not closed");
      return std::nullopt;
    }
    return s.homology(k).coordinates(s.from_cochain(k, x));
  };

  for (const auto& bi : basis)
    for (std::size_t i = 0; i < bi.reps.size(); ++i) {
      const auto& a = bi.reps[i];
      const auto self = s.homology(bi.k).coordinates(s.from_cochain(bi.k, a));
      const auto left = closed_class(bi.k, pd(pd.unit(), a), "unit * class");
      const auto right = closed_class(bi.k, pd(a, pd.unit()), "class * unit");
      if (!left || !right || *left != self || *right != self) {
        v.unital = false;
        v.failures.push_back("unit fails on " + c.format(a));
      }
    }

  for (const auto& ba : basis)
    for (const auto& bb : basis)
      for (const auto& bc : basis)
        for (const auto& a : ba.reps)
          for (const auto& b : bb.reps)
            for (const auto& g : bc.reps) {
              const int k = ba.k + bb.k + bc.k;
              const auto lhs = closed_class(k, pd(pd(a, b), g), "(ab)c");
              const auto rhs = closed_class(k, pd(a, pd(b, g)), "a(bc)");
              if (lhs && rhs && *lhs != *rhs) {
                v.associative = false;
                v.failures.push_back("associativity fails on (" + c.format(a) + ", " + c.format(b) +
                                     ", " + c.format(g) + ")");
              }
            }
  return v;
}

Product lift_product(const Product& pd, const BundleComplex& b) {
  std::vector<ResolvedProductTerm> terms;
  for (const auto& t : pd.terms()) {
    terms.push_back({b.prime(t.z), b.prime(t.x), b.prime(t.y), t.exponent});
    terms.push_back({b.double_prime(t.z), b.double_prime(t.x), b.prime(t.y), t.exponent});
    terms.push_back({b.double_prime(t.z), b.prime(t.x), b.double_prime(t.y), t.exponent});
  }
  return Product(b.total(), std::move(terms), b.include(pd.unit()));
}

LiftVerdict check_lifted_product(const Product& pd, const Product& lifted, const BundleComplex& b) {
  const auto& base = b.base();
  const auto& total = b.total();
  LiftVerdict v;
  v.i_multiplicative = v.p_right = v.p_left = true;
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      const auto ex = base.basis(x);
      const auto ey = base.basis(y);
      if (!(b.include(pd(ex, ey)) == lifted(b.include(ex), b.include(ey)))) v.i_multiplicative = false;
    }
  for (std::size_t xt = 0; xt < total.size(); ++xt)
    for (std::size_t y = 0; y < base.size(); ++y) {
      const auto ex = total.basis(xt);
      const auto ey = base.basis(y);
      if (!(b.project(lifted(ex, b.include(ey))) == pd(b.project(ex), ey))) v.p_right = false;
      if (!(b.project(lifted(b.include(ey), ex)) == pd(ey, b.project(ex)))) v.p_left = false;
    }
  v.leibniz = check_leibniz(lifted).ok();

  v.unit_in_homology = true;
  const GradedSlices s(total);
  const int N = total.ring().kind == RingKind::positive ? 1 : total.ring().generator_degree;
  for (int k = 0; k < N; ++k) {
    const auto h = s.homology(k);
    for (const auto& r : h.representatives()) {
      const auto rc = s.to_cochain(k, r);
      for (const auto& prod : {lifted(lifted.unit(), rc), lifted(rc, lifted.unit())}) {
        if (!total.differential(prod).is_zero() || !same_class(h, s.from_cochain(k, prod), r))
          v.unit_in_homology = false;
      }
    }
  }
  return v;
}

DeltaProductVerdict delta_equals_mult_eF(const BundleComplex& b, const Product& pd) {
  const auto& base = b.base();
  const GradedSlices s(base);
  const auto e = connecting_chain(b, pd.unit());
  const int N = base.ring().generator_degree;
  DeltaProductVerdict v;
  for (int k = 0; k < N; ++k) {
    const auto h = s.homology(k);
    const auto h2 = s.homology(k + 2);
    for (const auto& r : h.representatives()) {
      const auto a = s.to_cochain(k, r);
      ++v.classes;
      const auto delta = h2.coordinates(s.from_cochain(k + 2, connecting_chain(b, a)));
      const auto ea = pd(e, a);
      const auto ae = pd(a, e);
      if (!base.differential(ea).is_zero() || h2.coordinates(s.from_cochain(k + 2, ea)) != delta)
        v.left = false;
      if (!base.differential(ae).is_zero() || h2.coordinates(s.from_cochain(k + 2, ae)) != delta)
        v.right = false;
    }
  }
  return v;
}

ClassRef invertibility(const Product& pd, const Cochain& c) {
  const auto& base = pd.complex();
  if (!base.differential(c).is_zero()) throw NotACocycle("class to invert is not closed");
  const auto deg = base.degree_of(c);
  if (!deg) throw NotInvertible("zero is not invertible");
  const GradedSlices s(base);
  const auto h0 = s.homology(0);
  const auto one = h0.coordinates(s.from_cochain(0, pd.unit()));
  if (one.none()) throw NotInvertible("the cohomology ring is zero");

  const int inv_deg = -*deg;
  const auto h = s.homology(inv_deg);
  std::vector<gf2::BitVector> right_cols;
  std::vector<gf2::BitVector> left_cols;
  for (const auto& r : h.representatives()) {
    const auto x = s.to_cochain(inv_deg, r);
    right_cols.push_back(h0.coordinates(s.from_cochain(0, pd(x, c))));
    left_cols.push_back(h0.coordinates(s.from_cochain(0, pd(c, x))));
  }
  const auto right = gf2::BitMatrix::from_columns(h0.dim(), std::move(right_cols));
  const auto left = gf2::BitMatrix::from_columns(h0.dim(), std::move(left_cols));
  const auto sol = gf2::solve(right, one);
  if (!sol) throw NotInvertible("multiplication by " + base.format(c) + " does not reach the unit");
  if (left.apply(*sol) != one)
    throw NotInvertible("the right inverse of " + base.format(c) + " is not a left inverse");
  const auto rep = h.representative(*sol);
  return {s.to_cochain(inv_deg, rep), *sol, inv_deg};
}

ClassRef quantum_restriction(const PearlComplex& c, const ModuleActionData& mad,
                             const std::string& class_id, const Cochain& unit) {
  const AmbientClass* cls = nullptr;
  for (const auto& a : mad.ambient_classes)
    if (a.id == class_id) cls = &a;
  if (!cls) throw UnknownGenerator(class_id);
  const int N = c.ring().generator_degree;

  Cochain out = c.zero();
  for (const auto& t : mad.action_terms) {
    const AmbientClass* a = nullptr;
    for (const auto& ac : mad.ambient_classes)
      if (ac.id == t.a) a = &ac;
    if (!a) throw UnknownGenerator(t.a);
    const auto z = c.position(t.z);
    const auto x = c.position(t.x);
    if (c.index(z) + t.mu_bar * N != a->degree + c.index(x))
      throw DegreeViolation("action term (z=" + t.z + ", a=" + t.a + ", x=" + t.x + ", mu_bar=" +
                            std::to_string(t.mu_bar) + ") breaks index(z) + mu_bar*N = degree(a) + index(x)");
    if (t.a != class_id || t.count % 2 == 0 || unit[x].is_zero()) continue;
    out[z] += unit[x].shifted(t.mu_bar);
  }
  return class_of(GradedSlices(c), cls->degree, out);
}

LaurentElement euler_from_disk_counts(const std::vector<DiskClass>& classes, int N) {
  if (N != 2) throw InvalidData("the disk-count formula for e_F needs N = 2, got " + std::to_string(N));
  int r = 0;
  for (const auto& d : classes) r ^= (d.nu & 1) & (d.pairing & 1);
  return r ? LaurentElement::monomial(1) : LaurentElement();
}

}  // namespace pearl
