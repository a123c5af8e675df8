#pragma once

// The positive theory over Λ⁺ = Z2[t] and its two comparison maps:
//   σ̃: C⁺ -> CM (t ↦ 0), onto the Morse complex, read as the exponent-0 quotient;
//   θ:  C⁺ -> C  (Λ⁺ ⊂ Λ).

#include <optional>
#include <string>
#include <vector>

#include "pearl/graded.hpp"
#include "pearl/gysin_bundle.hpp"
#include "pearl/pearl_core.hpp"

namespace pearl {

/// Throws InvalidData if any generator has a negative index.
void require_morse_indices(const PearlData& data);

/// The complex over Λ⁺; requires Morse indices and μ̄ ≥ 0.
PearlComplex positive_complex(const PearlData& data);

/// σ̃ on the slices of a Λ⁺ complex.
ChainMap sigma_map(const PearlComplex& positive);
/// θ into the same complex over Λ.
ChainMap theta_map(const PearlComplex& positive);

struct SigmaReport {
  DegreeWindow window;
  bool chain_map = true;
  std::vector<gf2::BitMatrix> induced;  // per degree in the window
};

SigmaReport sigma_report(const PearlComplex& positive, DegreeWindow window);

/// σ of a class of the Λ⁺ complex, as a class of the Morse complex.
ClassRef sigma_class(const PearlComplex& positive, int k, const Cochain& cocycle);

struct LadderReport {
  bool chain_squares = true;     // vertical maps commute with i, p, T at chain level
  bool homology_squares = true;  // the three squares of every row commute
  std::vector<int> failing_degrees;

  bool ok() const { return chain_squares && homology_squares; }
};

/// Compares two long exact sequences through vertical chain maps on the
/// A (base), B (total) and C (base) terms.
LadderReport compare_les(const LesReport& top, const LesReport& bottom, const ChainMap& alpha,
                         const ChainMap& beta, const ChainMap& gamma);

/// Positive Floer-Gysin sequence against the classical one through σ̃.
LadderReport comparison_ladder(const BundleComplex& positive_bundle, DegreeWindow window);
/// Positive sequence against the Λ sequence through θ; the Λ bundle must be
/// built from the same data.
LadderReport theta_ladder(const BundleComplex& positive_bundle, const BundleComplex& laurent_bundle,
                          DegreeWindow window);

struct InjectivityReport {
  std::vector<std::size_t> kernel_dims;  // dim ker σ on degrees [0, N)
  bool injective = true;
  bool pair_chain_exact = true;  // 0 -> tC⁺ -> C⁺ -> CM -> 0 degreewise
  bool pair_les_exact = true;
};

InjectivityReport injectivity_window(const PearlComplex& positive);

struct EulerComparison {
  ClassRef positive;       // e_F⁺ in Q⁺H²
  ClassRef laurent;        // e_F in QH²
  ClassRef theta_image;    // θ(e_F⁺)
  ClassRef sigma_image;    // σ(e_F⁺)
  ClassRef classical;      // e, via the classical connecting map
  bool theta_matches = false;
  bool sigma_matches = false;
};

EulerComparison compare_euler_classes(const BundleComplex& positive_bundle,
                                      const BundleComplex& laurent_bundle, const Cochain& unit);

struct PeriodicityVerdict {
  bool applicable = false;  // QH(Γ) = 0
  bool periodic = false;    // dim QH^k = dim QH^{k+2} for all k
};

/// dims holds one period [0, N) of QH(L).
PeriodicityVerdict periodicity_check(const std::vector<std::size_t>& dims, int N, bool gamma_vanishes);

/// True iff b_i = 0 for every i ≡ -1 (mod N).
bool narrowness_obstruction(const std::vector<int>& betti, int N);

/// For N ≥ 3 with QH(L) ≠ 0 and QH(Γ) = 0 the classical Euler class must be
/// nonzero. Returns nullopt when the hypotheses fail.
std::optional<bool> subcritical_euler_check(int N, bool qh_nonzero, bool gamma_vanishes,
                                            bool classical_euler_nonzero);

}  // namespace pearl
