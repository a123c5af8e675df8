#pragma once

// Pearl complexes: free graded modules Z2<Crit f> ⊗ R over a coefficient ring
// R (Λ, Λ⁺ or 𝒜) with a degree +1 differential read off from disk counts.
//
// A basis element x t^e has degree index(x) + e·|t|. The differential of a
// generator y is dy = Σ count(x, y, μ̄) · x t^μ̄ over the input terms, and
// each term must satisfy index(x) + μ̄·N = index(y) + 1.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pearl/coeff_ring.hpp"
#include "pearl/gf2.hpp"

namespace pearl {

struct Generator {
  std::string id;
  int index = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Contribution of the moduli count #P(x, y, A) to dy.
struct DiffTerm {
  std::string x;  // target
  std::string y;  // source
  int mu_bar = 0;
  int count = 1;

  friend bool operator==(const DiffTerm&, const DiffTerm&) = default;
};

struct PearlData {
  std::string name;
  int N = 2;
  std::vector<Generator> generators;
  std::vector<DiffTerm> diff_terms;
  std::optional<std::vector<std::string>> unit;
  std::optional<std::vector<int>> betti_hint;

  friend bool operator==(const PearlData&, const PearlData&) = default;
};

/// A module element: one coefficient per generator, in generator order.
class Cochain {
 public:
  Cochain() = default;
  explicit Cochain(std::size_t generators) : coeffs_(generators) {}

  static Cochain basis(std::size_t generators, std::size_t g, int exponent = 0);

  std::size_t size() const { return coeffs_.size(); }
  const LaurentElement& operator[](std::size_t g) const { return coeffs_[g]; }
  LaurentElement& operator[](std::size_t g) { return coeffs_[g]; }

  bool is_zero() const;
  Cochain& operator+=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  /// Multiplication by a scalar.
  Cochain& operator*=(const LaurentElement& scalar);
  Cochain shifted(int exponent) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::vector<LaurentElement> coeffs_;
};

/// Term of a complex, by generator position: adds target·var^exponent to
/// d(source).
struct ComplexTerm {
  std::size_t target;
  std::size_t source;
  int exponent;
};

class PearlComplex {
 public:
  /// Validates the degree law of every term; repeated terms add mod 2.
  PearlComplex(RingSpec ring, std::vector<Generator> generators,
               const std::vector<ComplexTerm>& terms);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  int index(std::size_t g) const { return gens_[g].index; }
  const std::string& id(std::size_t g) const { return gens_[g].id; }

  std::size_t position(std::string_view id) const;  // throws UnknownGenerator
  std::optional<std::size_t> find(std::string_view id) const;

  /// d(source) as (target, coefficient) pairs, targets increasing.
  const std::vector<std::pair<std::size_t, LaurentElement>>& column(std::size_t source) const {
    return columns_[source];
  }
  const std::vector<ComplexTerm>& terms() const { return terms_; }

  Cochain differential(const Cochain& c) const;
  Cochain zero() const { return Cochain(gens_.size()); }
  Cochain basis(std::size_t g, int exponent = 0) const {
    return Cochain::basis(gens_.size(), g, exponent);
  }

  /// Degree of x t^e.
  int degree(std::size_t g, int exponent) const {
    return gens_[g].index + exponent * ring_.generator_degree;
  }
  /// The degree of a nonzero homogeneous cochain, or nullopt if c is zero.
  /// Throws InvalidData if c is not homogeneous.
  std::optional<int> degree_of(const Cochain& c) const;

  int min_index() const;
  int max_index() const;

  std::string format(const Cochain& c) const;

 private:
  RingSpec ring_;
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t, std::less<>> ids_;
  std::vector<ComplexTerm> terms_;
  std::vector<std::vector<std::pair<std::size_t, LaurentElement>>> columns_;
};

/// Degree law check shared by the builders: index(x) + mu·N == index(y) + shift.
void check_term_degree(const std::string& what, int target_index, int mu, int source_index,
                       int shift, int N);

PearlComplex build_complex(const PearlData& data, RingSpec ring);
/// Laurent complex with |t| = data.N.
PearlComplex build_complex(const PearlData& data);

/// Cochain from a formal sum of generator ids (each with coefficient t^0).
Cochain cochain_from_ids(const PearlComplex& c, const std::vector<std::string>& ids);

struct DSquaredEntry {
  std::size_t source;
  std::size_t target;
  LaurentElement value;
};

struct DSquaredVerdict {
  std::vector<DSquaredEntry> entries;
  bool ok() const { return entries.empty(); }
};

DSquaredVerdict check_d_squared(const PearlComplex& c);

/// Z/N-graded Z2 complex obtained by setting t = 1.
struct PeriodicComplex {
  int period = 1;
  std::vector<std::vector<std::size_t>> classes;  // generators with index ≡ r (mod N)
  std::vector<gf2::BitMatrix> d;                  // class r -> class r+1
};

PeriodicComplex collapse_to_periodic(const PearlComplex& c);

struct DegreeWindow {
  int lo = 0;
  int hi = 0;  // inclusive
};

struct CohomologyTable {
  RingSpec ring;
  DegreeWindow window;
  std::vector<std::size_t> dims;                  // dims[k - window.lo]
  std::vector<std::vector<Cochain>> representatives;

  std::size_t dim(int k) const { return dims.at(static_cast<std::size_t>(k - window.lo)); }
  std::size_t total() const;
};

/// Laurent and ambient kinds: one period [0, N) computed on the collapsed
/// complex. Positive kind: degreewise over the given window (required).
CohomologyTable cohomology(const PearlComplex& c, std::optional<DegreeWindow> window = {});

/// [min(0, min index), max index + 2N].
DegreeWindow default_positive_window(const PearlComplex& c);

/// Alternating-sum balance on the collapsed complex; for odd N the weaker
/// count dim C - 2 rank d = dim H.
bool euler_characteristic_balanced(const PearlComplex& c);

}  // namespace pearl
