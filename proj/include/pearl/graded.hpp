#pragma once

// Degreewise view of a pearl complex. The degree-k slice is spanned by the
// cells x t^e with index(x) + e·|t| = k and e inside an exponent range; each
// generator contributes at most one cell per degree.
//
// A range with a lower bound gives a subcomplex (Λ⁺ has min 0, the t-multiples
// min 1). An upper bound gives a quotient: terms landing above it are
// dropped, so the range [0, 0] is the Morse complex.

#include <functional>
#include <optional>
#include <vector>

#include "pearl/gf2.hpp"
#include "pearl/homology.hpp"
#include "pearl/pearl_core.hpp"

namespace pearl {

struct ExponentRange {
  std::optional<int> min;
  std::optional<int> max;

  bool contains(int e) const { return (!min || e >= *min) && (!max || e <= *max); }
  friend bool operator==(const ExponentRange&, const ExponentRange&) = default;
};

struct Cell {
  std::size_t gen;
  int exponent;
};

class GradedSlices {
 public:
  /// The natural range of the ring: unbounded, or min 0 for Λ⁺.
  explicit GradedSlices(PearlComplex c);
  GradedSlices(PearlComplex c, ExponentRange range);

  /// Quotient by t: cells with exponent 0 only.
  static GradedSlices morse(const PearlComplex& c) { return {c, {0, 0}}; }

  const PearlComplex& complex() const { return c_; }
  const ExponentRange& range() const { return range_; }

  std::vector<Cell> cells(int k) const;
  std::size_t dim(int k) const { return cells(k).size(); }
  /// Position of generator g in the degree-k slice.
  std::optional<std::size_t> position(int k, std::size_t g) const;
  /// d: slice k -> slice k+1.
  gf2::BitMatrix d(int k) const;
  Homology homology(int k) const { return Homology(d(k - 1), d(k)); }

  /// Degree-k part of a cochain. Terms above the range are dropped, terms of
  /// another degree are an error, terms below the range raise OutOfWindow.
  gf2::BitVector from_cochain(int k, const Cochain& c) const;
  Cochain to_cochain(int k, const gf2::BitVector& v) const;

 private:
  PearlComplex c_;
  ExponentRange range_;
};

/// Cell images of a module map, one per cell (gen, exponent).
using CellImage = std::function<Cochain(std::size_t gen, int exponent)>;

/// A degreewise map slice_A(k) -> slice_B(k + shift).
class ChainMap {
 public:
  ChainMap(GradedSlices source, GradedSlices target, int shift, CellImage image);

  int shift() const { return shift_; }
  const GradedSlices& source() const { return src_; }
  const GradedSlices& target() const { return dst_; }

  gf2::BitMatrix matrix(int k) const;
  Cochain apply(const Cochain& c) const;
  /// d_B ∘ f == f ∘ d_A on slice k.
  bool commutes_at(int k) const;
  /// H^k(A) -> H^{k+shift}(B) in the representative bases.
  gf2::BitMatrix induced(int k) const;

 private:
  GradedSlices src_;
  GradedSlices dst_;
  int shift_;
  CellImage image_;
};

/// Matrix of v ↦ coordinates of f(v) for the representatives of H.
gf2::BitMatrix induced_matrix(const Homology& from, const Homology& to, const gf2::BitMatrix& chain);

/// One row H^k(A) -f-> H^k(B) -g-> H^{k+s}(C) -∂-> H^{k+1}(A).
struct LesRow {
  int k = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_c = 0;
  gf2::BitMatrix f;
  gf2::BitMatrix g;
  gf2::BitMatrix boundary;
  bool exact_at_a = false;
  bool exact_at_b = false;
  bool exact_at_c = false;

  bool exact() const { return exact_at_a && exact_at_b && exact_at_c; }
};

struct LesReport {
  int shift = 0;
  DegreeWindow window;
  std::vector<LesRow> rows;

  bool exact() const;
  const LesRow& row(int k) const { return rows.at(static_cast<std::size_t>(k - window.lo)); }
};

/// Degreewise chain-level check 0 -> A -f-> B -g-> C[s] -> 0.
bool short_exact_at(const ChainMap& f, const ChainMap& g, int k);

/// Connecting map on one cocycle of C (degree k+s) by lifting through g with
/// the first pivot solution; returns the cocycle of A in degree k+1.
gf2::BitVector snake(const ChainMap& f, const ChainMap& g, int k, const gf2::BitVector& c);

LesReport long_exact_sequence(const ChainMap& f, const ChainMap& g, DegreeWindow window);

}  // namespace pearl
