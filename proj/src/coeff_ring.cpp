#include "pearl/coeff_ring.hpp"

#include <algorithm>
#include <sstream>

#include "pearl/errors.hpp"

namespace pearl {

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::laurent:
      return "laurent";
    case RingKind::positive:
      return "positive";
    case RingKind::ambient:
      return "ambient";
  }
  return "?";
}

RingSpec RingSpec::laurent(int degree) {
  if (degree < 1) throw InvalidData("ring generator degree must be >= 1");
  return {RingKind::laurent, degree};
}

RingSpec RingSpec::positive(int degree) {
  if (degree < 1) throw InvalidData("ring generator degree must be >= 1");
  return {RingKind::positive, degree};
}

RingSpec RingSpec::ambient_over(const RingSpec& laurent) {
  if (laurent.kind != RingKind::laurent)
    throw RingMismatch("the ambient ring extends a laurent ring, got " + to_string(laurent));
  if (laurent.generator_degree % 2 != 0)
    throw OddMaslovNumber("the ambient ring needs an even minimal Maslov number, got N = " +
                          std::to_string(laurent.generator_degree));
  return {RingKind::ambient, 2};
}

std::string to_string(const RingSpec& ring) {
  return to_string(ring.kind) + "(|" + ring.variable() + "|=" +
         std::to_string(ring.generator_degree) + ")";
}

// -- LaurentElement ----------------------------------------------------------

LaurentElement::LaurentElement(std::initializer_list<int> exponents)
    : LaurentElement(std::vector<int>(exponents)) {}

LaurentElement::LaurentElement(std::vector<int> exponents) {
  // Repeated exponents cancel in pairs.
  std::sort(exponents.begin(), exponents.end());
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    if ((j - i) % 2 == 1) exps_.push_back(exponents[i]);
    i = j;
  }
}

bool LaurentElement::contains(int exponent) const {
  return std::binary_search(exps_.begin(), exps_.end(), exponent);
}

LaurentElement LaurentElement::shifted(int shift) const {
  LaurentElement out = *this;
  for (int& e : out.exps_) e += shift;
  return out;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  std::vector<int> merged;
  merged.reserve(exps_.size() + other.exps_.size());
  std::set_symmetric_difference(exps_.begin(), exps_.end(), other.exps_.begin(),
                                other.exps_.end(), std::back_inserter(merged));
  exps_ = std::move(merged);
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  std::vector<int> sums;
  sums.reserve(a.exps_.size() * b.exps_.size());
  for (int x : a.exps_)
    for (int y : b.exps_) sums.push_back(x + y);
  return LaurentElement(std::move(sums));
}

std::string LaurentElement::str(char variable) const {
  if (exps_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out << " + ";
    const int e = exps_[i];
    if (e == 0)
      out << "1";
    else if (e == 1)
      out << variable;
    else
      out << variable << "^" << e;
  }
  return out.str();
}

// -- RingElement -------------------------------------------------------------

RingElement::RingElement(RingSpec ring, LaurentElement value)
    : ring_(ring), value_(std::move(value)) {
  if (ring_.kind == RingKind::positive && !value_.is_zero() && value_.min_exponent() < 0)
    throw NotPositive("element " + value_.str() + " has a negative exponent");
}

RingElement add(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw RingMismatch("cannot add elements of " + to_string(a.ring()) + " and " +
                       to_string(b.ring()));
  return {a.ring(), a.value() + b.value()};
}

RingElement mul(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring())
    throw RingMismatch("cannot multiply elements of " + to_string(a.ring()) + " and " +
                       to_string(b.ring()));
  return {a.ring(), a.value() * b.value()};
}

LaurentElement to_ambient(const LaurentElement& a, int maslov) {
  if (maslov % 2 != 0)
    throw OddMaslovNumber("t -> q^(N/2) needs N even, got N = " + std::to_string(maslov));
  std::vector<int> exps;
  for (int e : a.exponents()) exps.push_back(e * (maslov / 2));
  return LaurentElement(std::move(exps));
}

RingElement to_ambient(const RingElement& a) {
  const RingSpec target = RingSpec::ambient_over(a.ring());
  return {target, to_ambient(a.value(), a.ring().generator_degree)};
}

bool sigma_specialize(const LaurentElement& a) {
  if (!a.is_zero() && a.min_exponent() < 0)
    throw NotPositive("sigma is defined on Λ⁺ only; got " + a.str());
  return a.contains(0);
}

bool sigma_specialize(const RingElement& a) {
  if (a.ring().kind == RingKind::ambient)
    throw RingMismatch("sigma is defined on Λ⁺, got " + to_string(a.ring()));
  return sigma_specialize(a.value());
}

}  // namespace pearl
