#pragma once

// Small dense matrices over the scalar field, plus rank and span-membership
// helpers shared by the module and certificate layers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wgalg/scalar.hpp"

namespace wgalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& field);

  static Matrix identity(std::size_t n, const Field& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const FieldElement& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Entries flattened row-major.
  const std::vector<FieldElement>& entries() const { return data_; }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<FieldElement> data_;
};

/// Incrementally maintained row-echelon basis of a subspace of K^n.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(std::vector<FieldElement> v);
  /// True when v lies in the current span.
  bool contains(std::vector<FieldElement> v) const;
  /// Coordinates of v with respect to the inserted (independent) vectors, or
  /// nullopt when v is outside the span.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& v) const;

 private:
  // Reduces v in place; returns the leading column or dim_ if v became zero.
  std::size_t reduce(std::vector<FieldElement>& v, std::vector<FieldElement>* combo) const;

  std::size_t dim_;
  std::vector<std::vector<FieldElement>> rows_;        // leading entry 1
  std::vector<std::size_t> pivots_;                    // leading column per row
  std::vector<std::vector<FieldElement>> provenance_;  // rows_ in terms of inserted vectors
};

/// Rank of a family of vectors of equal length.
std::size_t rank_of(const std::vector<std::vector<FieldElement>>& vectors);

}  // namespace wgalg
