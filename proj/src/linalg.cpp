#include "wgalg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  Matrix r(a.rows_, b.cols_, a.field_ ? a.field_ : b.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElement& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const FieldElement& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------

std::size_t SpanBasis::reduce(std::vector<FieldElement>& v,
                              std::vector<FieldElement>* combo) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const FieldElement f = v[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    if (combo) {
      const std::size_t n = std::min(combo->size(), provenance_[r].size());
      for (std::size_t j = 0; j < n; ++j) {
        if (!provenance_[r][j].is_zero()) (*combo)[j] -= f * provenance_[r][j];
      }
    }
  }
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) return j;
  }
  return dim_;
}

bool SpanBasis::insert(std::vector<FieldElement> v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: wrong vector length");
  const std::size_t n = provenance_.empty() ? 0 : provenance_.front().size();
  // Provenance vectors are indexed by insertion order of independent vectors.
  std::vector<FieldElement> combo(n + 1, FieldElement());
  combo[n] = FieldElement(1);
  const std::size_t lead = reduce(v, &combo);
  if (lead == dim_) return false;
  const FieldElement inv = v[lead].inverse();
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;
  for (auto& p : provenance_) p.emplace_back();
  // Keep rows sorted by pivot so reduce() sweeps left to right.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
  provenance_.insert(provenance_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
  return true;
}

bool SpanBasis::contains(std::vector<FieldElement> v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: wrong vector length");
  return reduce(v, nullptr) == dim_;
}

std::optional<std::vector<FieldElement>> SpanBasis::solve(
    const std::vector<FieldElement>& v) const {
  std::vector<FieldElement> w = v;
  const std::size_t n = provenance_.empty() ? 0 : provenance_.front().size();
  std::vector<FieldElement> combo(n, FieldElement());
  if (reduce(w, &combo) != dim_) return std::nullopt;
  // v = sum_r f_r * row_r and row_r = sum_j prov[r][j] * inserted_j, so the
  // coefficients are the negated accumulated combination.
  for (auto& x : combo) x = -x;
  return combo;
}

std::size_t rank_of(const std::vector<std::vector<FieldElement>>& vectors) {
  if (vectors.empty()) return 0;
  SpanBasis b(vectors.front().size());
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

}  // namespace wgalg
