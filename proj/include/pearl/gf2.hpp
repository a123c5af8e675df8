#pragma once

// Dense linear algebra over GF(2). Matrices are stored by column: column j is
// the image of the j-th basis vector, which is how chain maps are built.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pearl::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t i) {
    BitVector v(size);
    v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;
  /// Index of the lowest set bit, if any.
  std::optional<std::size_t> lowest() const;
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// "0110..." with index 0 first.
  std::string str() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols, BitVector(rows)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_columns(std::size_t rows, std::vector<BitVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  bool test(std::size_t r, std::size_t c) const { return cols_[c].test(r); }
  void set(std::size_t r, std::size_t c, bool value = true) { cols_[c].set(r, value); }
  void flip(std::size_t r, std::size_t c) { cols_[c].flip(r); }
  const BitVector& column(std::size_t c) const { return cols_[c]; }

  BitVector apply(const BitVector& x) const;
  bool is_zero() const;
  std::size_t rank() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  /// Rows separated by '\n', e.g. "10\n01".
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::vector<BitVector> cols_;
};

/// Incremental echelon basis. Each stored vector carries a tag recording the
/// combination of inserted vectors it came from, so reductions also return
/// the coefficients that express a vector in terms of the inserted ones.
/// Pivots are the lowest set index, so earlier coordinates are eliminated
/// first.
class Reducer {
 public:
  Reducer(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim) {}

  struct Reduction {
    BitVector remainder;
    BitVector tag;
  };

  Reduction reduce(BitVector v) const;
  /// Inserts v with the given tag; returns false (and stores nothing) if v
  /// already lies in the span.
  bool insert(BitVector v, BitVector tag);
  bool contains(const BitVector& v) const { return reduce(v).remainder.none(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t tag_dim() const { return tag_dim_; }

 private:
  struct Row {
    std::size_t pivot;
    BitVector vec;
    BitVector tag;
  };
  std::size_t dim_;
  std::size_t tag_dim_;
  std::vector<Row> rows_;
};

/// Basis of {x : m x = 0}, in the order produced by column elimination.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Some x with m x = b, if one exists. Chooses the solution supported on the
/// earliest pivot columns.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

}  // namespace pearl::gf2
