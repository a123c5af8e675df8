#pragma once

// The circle-bundle complex over doubled generators. Generator x of the base
// gives x′ (index |x|) and x″ (index |x| + 1); the total differential is
//   d̃ x′ = (dx)′,    d̃ y″ = T(y)′ + (dy)″,
// where T is the degree +2 twist read from the counts #P(x′, y″, ·).
// d̃² = 0 exactly when T∘d + d∘T = 0.

#include <optional>
#include <string>
#include <vector>

#include "pearl/errors.hpp"
#include "pearl/graded.hpp"
#include "pearl/pearl_core.hpp"

namespace pearl {

struct TwistTerm {
  std::string x;  // target, contributes x′
  std::string y;  // source, from y″
  int mu_bar = 0;
  int count = 1;

  friend bool operator==(const TwistTerm&, const TwistTerm&) = default;
};

class BundleComplex {
 public:
  BundleComplex(PearlComplex base, std::vector<ComplexTerm> twist, PearlComplex total);

  const PearlComplex& base() const { return base_; }
  const PearlComplex& total() const { return total_; }
  /// Twist terms by base position: target x, source y, exponent.
  const std::vector<ComplexTerm>& twist() const { return twist_; }

  std::size_t prime(std::size_t g) const { return g; }
  std::size_t double_prime(std::size_t g) const { return base_.size() + g; }

  Cochain apply_twist(const Cochain& base_cochain) const;
  /// i: x ↦ x′.
  Cochain include(const Cochain& base_cochain) const;
  /// p: x′ ↦ 0, y″ ↦ y.
  Cochain project(const Cochain& total_cochain) const;
  /// The canonical section of p: y ↦ y″.
  Cochain lift(const Cochain& base_cochain) const;
  /// Inverse of i on its image; throws InvalidData if a y″ term is present.
  Cochain restrict_to_base(const Cochain& total_cochain) const;

 private:
  PearlComplex base_;
  std::vector<ComplexTerm> twist_;
  PearlComplex total_;
};

/// Validates the twist degree law index(x) + μ̄N = index(y) + 2.
std::vector<ComplexTerm> resolve_twist(const PearlComplex& base, const std::vector<TwistTerm>& twist);

/// Nonzero entries of T∘d + d∘T, by generator id.
std::vector<ObstructionEntry> twist_obstruction(const PearlComplex& base,
                                                const std::vector<ComplexTerm>& twist);

/// Throws DSquaredNonzero if the base fails d² = 0 and TwistNotCocycle if the
/// twist does not anticommute with d.
BundleComplex build_bundle_complex(const PearlComplex& base, const std::vector<ComplexTerm>& twist);
BundleComplex build_bundle_complex(const PearlData& base, const std::vector<TwistTerm>& twist,
                                   RingSpec ring);

/// Slices of the base and the total complex with a common exponent range
/// (the ring's natural range when none is given).
GradedSlices base_slices(const BundleComplex& b, std::optional<ExponentRange> range = {});
GradedSlices total_slices(const BundleComplex& b, std::optional<ExponentRange> range = {});

ChainMap map_i(const BundleComplex& b, std::optional<ExponentRange> range = {});
ChainMap map_p(const BundleComplex& b, std::optional<ExponentRange> range = {});
/// T as a degree +2 chain map of the base.
ChainMap twist_map(const BundleComplex& b, std::optional<ExponentRange> range = {});

/// One period of degrees: [0, N) for Λ, [0, 2) for 𝒜. Λ⁺ has no period and
/// gets [min index - 1, max index + 2].
DegreeWindow default_window(const BundleComplex& b);

struct BundleMapChecks {
  bool i_commutes = true;
  bool p_commutes = true;
  bool p_after_i_zero = true;
  bool chain_exact = true;  // i injective, p onto, im i = ker p

  bool ok() const { return i_commutes && p_commutes && p_after_i_zero && chain_exact; }
};

BundleMapChecks verify_bundle_maps(const BundleComplex& b, DegreeWindow window,
                                   std::optional<ExponentRange> range = {});

/// δ on a base cocycle through the canonical lift: y ↦ i⁻¹(d̃ y″).
Cochain connecting_chain(const BundleComplex& b, const Cochain& cocycle);

struct ConnectingComparison {
  int k = 0;
  std::size_t cocycles = 0;    // size of the cocycle basis checked
  bool chain_equal = false;    // canonical lift agrees with T on every basis cocycle
  bool homology_equal = false; // pivot-lift matrix equals the induced T matrix
  gf2::BitMatrix matrix;       // δ: H^k -> H^{k+2}
};

ConnectingComparison connecting_map(const BundleComplex& b, int k,
                                    std::optional<ExponentRange> range = {});

struct ClassRef {
  Cochain representative;
  gf2::BitVector coordinates;  // in the representative basis of H^degree
  int degree = 0;

  bool is_zero() const { return coordinates.none(); }
};

/// Class of a cocycle in the slices' cohomology.
ClassRef class_of(const GradedSlices& s, int k, const Cochain& cocycle);

/// e_F = δ(unit), a class in H²; throws NotACocycle or InvalidData (unit of
/// nonzero degree).
ClassRef euler_class(const BundleComplex& b, const Cochain& unit,
                     std::optional<ExponentRange> range = {});

LesReport long_exact_sequence(const BundleComplex& b, std::optional<DegreeWindow> window = {},
                              std::optional<ExponentRange> range = {});

struct ClassicalGysin {
  BundleComplex bundle;  // over Λ⁺, read through the Morse quotient
  LesReport les;
  DegreeWindow dims_window;
  std::vector<std::size_t> base_dims;
  std::vector<std::size_t> total_dims;
};

/// The same construction with only the μ̄ = 0 parts of d and T.
ClassicalGysin classical_gysin(const PearlData& base, const std::vector<TwistTerm>& twist);

/// Image of a Λ cochain under t ↦ q^(N/2), on the same generators.
Cochain cochain_to_ambient(const Cochain& c, int N);

struct AmbientVariant {
  BundleComplex bundle;    // T_M = T + q·id over 𝒜
  BundleComplex untwisted; // T over 𝒜 without the q correction
  bool delta_relation = false;  // δ_M = δ_W + q in every degree class
  std::optional<ClassRef> euler;          // e′_F
  std::optional<ClassRef> euler_expected; // e_F + q
  bool euler_relation = false;
  LesReport les;
};

/// Requires a laurent bundle with even N. With a unit, also reports e′_F.
AmbientVariant ambient_variant(const BundleComplex& b, const std::optional<Cochain>& unit = {});

}  // namespace pearl
