#pragma once

// Quantum product from structure constants: x * y = Σ count · z t^μ̄ over the
// product terms (z; x, y, μ̄), extended Λ-bilinearly. Each term must satisfy
// index(z) + μ̄N = index(x) + index(y).

#include <string>
#include <utility>
#include <vector>

#include "pearl/gysin_bundle.hpp"
#include "pearl/pearl_core.hpp"

namespace pearl {

struct ProductTerm {
  std::string z;
  std::string x;
  std::string y;
  int mu_bar = 0;
  int count = 1;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

struct ProductData {
  std::vector<ProductTerm> terms;
  std::vector<std::string> unit;

  friend bool operator==(const ProductData&, const ProductData&) = default;
};

struct AmbientClass {
  std::string id;
  int degree = 0;

  friend bool operator==(const AmbientClass&, const AmbientClass&) = default;
};

/// (z; a, x, μ̄): a * x contains z t^μ̄, with index(z) + μ̄N = degree(a) + index(x).
struct ActionTerm {
  std::string z;
  std::string a;
  std::string x;
  int mu_bar = 0;
  int count = 1;

  friend bool operator==(const ActionTerm&, const ActionTerm&) = default;
};

struct ModuleActionData {
  std::vector<AmbientClass> ambient_classes;
  std::vector<ActionTerm> action_terms;

  friend bool operator==(const ModuleActionData&, const ModuleActionData&) = default;
};

struct ResolvedProductTerm {
  std::size_t z;
  std::size_t x;
  std::size_t y;
  int exponent;
};

class Product {
 public:
  /// Resolves ids and checks every degree law; the unit must have degree 0.
  Product(const PearlComplex& c, const ProductData& data);
  Product(const PearlComplex& c, std::vector<ResolvedProductTerm> terms, Cochain unit);

  const PearlComplex& complex() const { return c_; }
  const std::vector<ResolvedProductTerm>& terms() const { return terms_; }
  const Cochain& unit() const { return unit_; }

  Cochain operator()(const Cochain& a, const Cochain& b) const;

 private:
  PearlComplex c_;
  std::vector<ResolvedProductTerm> terms_;
  Cochain unit_;
};

Cochain chain_product(const Product& pd, const Cochain& a, const Cochain& b);

struct PairVerdict {
  std::vector<std::pair<std::string, std::string>> violations;
  bool ok() const { return violations.empty(); }
};

/// d(x*y) = dx*y + x*dy for all generator pairs.
PairVerdict check_leibniz(const Product& pd);

struct RingVerdict {
  bool unit_closed = false;
  bool products_closed = false;  // products of cocycles are cocycles
  bool unital = false;
  bool associative = false;
  std::vector<std::string> failures;

  bool ok() const { return unit_closed && products_closed && unital && associative; }
};

/// Unit and associativity on basis classes of degrees [0, N).
RingVerdict check_homology_ring(const Product& pd);

/// Lifted structure constants on the bundle: (z′; x′, y′), (z″; x″, y′) and
/// (z″; x′, y″) carry the base counts, x″ * y″ = 0. The unit lifts to unit′.
Product lift_product(const Product& pd, const BundleComplex& b);

struct LiftVerdict {
  bool i_multiplicative = false;  // i(x*y) = i(x)*i(y)
  bool p_right = false;           // p(x̃*i(y)) = p(x̃)*y
  bool p_left = false;            // p(i(x)*ỹ) = x*p(ỹ)
  bool leibniz = false;           // lifted product against d̃
  bool unit_in_homology = false;  // unit′ acts as identity on H(Γ), one period

  bool identities() const { return i_multiplicative && p_right && p_left; }
};

LiftVerdict check_lifted_product(const Product& pd, const Product& lifted, const BundleComplex& b);

struct DeltaProductVerdict {
  bool left = true;   // δ(α) = e_F * α
  bool right = true;  // δ(α) = α * e_F
  std::size_t classes = 0;
  bool ok() const { return left && right; }
};

/// Over one period of basis classes.
DeltaProductVerdict delta_equals_mult_eF(const BundleComplex& b, const Product& pd);

/// Two-sided inverse of a homogeneous cohomology class, as a class in
/// degree -deg(c). Throws NotInvertible, including when QH = 0.
ClassRef invertibility(const Product& pd, const Cochain& c);

/// r(a) = a * 1 for the ambient class with the given id.
ClassRef quantum_restriction(const PearlComplex& c, const ModuleActionData& mad,
                             const std::string& class_id, const Cochain& unit);

struct DiskClass {
  std::string name;
  int nu = 0;       // ν(A) mod 2
  int pairing = 0;  // ⟨c, A⟩ mod 2
};

/// Coefficient r·t with e_F = r·t·unit, r = Σ ν(A)⟨c, A⟩ mod 2. N must be 2.
LaurentElement euler_from_disk_counts(const std::vector<DiskClass>& classes, int N);

}  // namespace pearl
