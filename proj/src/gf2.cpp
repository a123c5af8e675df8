#include "pearl/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace pearl::gf2 {

bool BitVector::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string BitVector::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, std::vector<BitVector> columns) {
  BitMatrix m;
  m.rows_ = rows;
  for (auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("column length mismatch");
  m.cols_ = std::move(columns);
  return m;
}

BitVector BitMatrix::apply(const BitVector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("BitMatrix::apply size mismatch");
  BitVector y(rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    if (x.test(c)) y ^= cols_[c];
  return y;
}

bool BitMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (c.any()) return false;
  return true;
}

std::size_t BitMatrix::rank() const {
  Reducer r(rows_, 0);
  for (const auto& c : cols_) r.insert(c, BitVector(0));
  return r.rank();
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("BitMatrix product shape mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) out.cols_[c] = a.apply(b.cols_[c]);
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("BitMatrix sum shape mismatch");
  BitMatrix out = a;
  for (std::size_t c = 0; c < a.cols(); ++c) out.cols_[c] ^= b.cols_[c];
  return out;
}

std::string BitMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += '\n';
    for (std::size_t c = 0; c < cols(); ++c) s += test(r, c) ? '1' : '0';
  }
  return s;
}

Reducer::Reduction Reducer::reduce(BitVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("Reducer::reduce size mismatch");
  BitVector tag(tag_dim_);
  for (const auto& row : rows_) {
    if (v.test(row.pivot)) {
      v ^= row.vec;
      tag ^= row.tag;
    }
  }
  return {std::move(v), std::move(tag)};
}

bool Reducer::insert(BitVector v, BitVector tag) {
  if (tag.size() != tag_dim_) throw std::invalid_argument("Reducer::insert tag size mismatch");
  auto red = reduce(std::move(v));
  const auto pivot = red.remainder.lowest();
  if (!pivot) return false;
  // remainder = v + (stored combination); its tag is tag + that combination.
  red.tag ^= tag;
  rows_.push_back({*pivot, std::move(red.remainder), std::move(red.tag)});
  return true;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  Reducer r(m.rows(), m.cols());
  std::vector<BitVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto unit = BitVector::unit(m.cols(), c);
    auto red = r.reduce(m.column(c));
    if (red.remainder.none()) {
      red.tag ^= unit;
      basis.push_back(std::move(red.tag));
    } else {
      r.insert(m.column(c), std::move(unit));
    }
  }
  return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  Reducer r(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) r.insert(m.column(c), BitVector::unit(m.cols(), c));
  auto red = r.reduce(b);
  if (red.remainder.any()) return std::nullopt;
  return std::move(red.tag);
}

}  // namespace pearl::gf2
