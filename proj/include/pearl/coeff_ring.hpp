#pragma once

// Graded coefficient rings over Z2:
//   Λ  = Z2[t^-1, t]   (laurent, |t| = N)
//   Λ⁺ = Z2[t]         (positive, |t| = N)
//   𝒜  = Z2[q^-1, q]   (ambient, |q| = 2), a Λ-algebra via t -> q^(N/2)
//
// An element is its set of exponents: the coefficient of each monomial is 1
// when the exponent is present and 0 otherwise.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pearl {

enum class RingKind { laurent, positive, ambient };

std::string to_string(RingKind kind);

struct RingSpec {
  RingKind kind = RingKind::laurent;
  int generator_degree = 1;

  static RingSpec laurent(int degree);
  static RingSpec positive(int degree);
  /// 𝒜 over a laurent ring; the laurent generator degree must be even.
  static RingSpec ambient_over(const RingSpec& laurent);

  /// Name of the ring variable: "t", or "q" for the ambient ring.
  char variable() const { return kind == RingKind::ambient ? 'q' : 't'; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

std::string to_string(const RingSpec& ring);

class LaurentElement {
 public:
  LaurentElement() = default;
  LaurentElement(std::initializer_list<int> exponents);
  explicit LaurentElement(std::vector<int> exponents);

  static LaurentElement monomial(int exponent) { return LaurentElement{exponent}; }
  static LaurentElement one() { return monomial(0); }

  bool is_zero() const { return exps_.empty(); }
  bool contains(int exponent) const;
  std::span<const int> exponents() const { return exps_; }
  std::size_t term_count() const { return exps_.size(); }
  int min_exponent() const { return exps_.front(); }
  int max_exponent() const { return exps_.back(); }
  bool is_monomial() const { return exps_.size() == 1; }

  /// Multiplication by t^shift.
  LaurentElement shifted(int shift) const;
  /// Parity of the number of monomials; the value at t = 1.
  bool evaluate_at_one() const { return (exps_.size() & 1U) != 0; }

  LaurentElement& operator+=(const LaurentElement& other);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

  std::string str(char variable = 't') const;

 private:
  std::vector<int> exps_;  // strictly increasing
};

/// A coefficient tagged with the ring it lives in.
class RingElement {
 public:
  RingElement(RingSpec ring, LaurentElement value);

  const RingSpec& ring() const { return ring_; }
  const LaurentElement& value() const { return value_; }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  RingSpec ring_;
  LaurentElement value_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);

/// Image under Λ -> 𝒜, t^k -> q^(k N / 2).
RingElement to_ambient(const RingElement& a);
LaurentElement to_ambient(const LaurentElement& a, int maslov);

/// Λ⁺ -> Z2, t -> 0.
bool sigma_specialize(const RingElement& a);
bool sigma_specialize(const LaurentElement& a);

}  // namespace pearl
