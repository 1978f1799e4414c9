#pragma once

// Certified finite-dimensional model of the W-graph algebra. The standard
// (non-pivot) paths of a saturated oracle span the algebra; they are a basis
// once the right action they induce is checked to kill every relation and
// the evaluation map from the algebra is invertible. After that, every zero
// test is exact and products of any length can be computed.

#include <optional>
#include <string>
#include <vector>

#include "wgalg/oracle.hpp"

namespace wgalg {

using Vector = std::vector<FieldElement>;

struct ClosureReport {
  bool closed = false;
  std::vector<std::string> problems;  // human-readable reasons when not closed
};

class CertifiedTable {
 public:
  /// Builds the table or returns nullopt with the reasons in `report`.
  static std::optional<CertifiedTable> build(const MembershipOracle& oracle,
                                             const std::vector<Relation>& relations,
                                             ClosureReport* report = nullptr);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Quiver& quiver() const { return *quiver_; }

  /// Coordinates of an element (paths of any length) in the basis.
  Vector coords(const OmegaElement& e) const;
  /// The element with the given coordinates.
  OmegaElement element(const Vector& coords) const;
  /// Product in coordinates via the structure constants.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Exact: true iff e vanishes in the algebra.
  bool is_zero(const OmegaElement& e) const;
  /// Canonical representative (combination of basis paths).
  OmegaElement canonical(const OmegaElement& e) const { return element(coords(e)); }

  /// Structure constants: basis_i * basis_j as a sparse rational row over
  /// basis indices.
  const SparseRow& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  bool associative() const { return associative_; }
  bool unit_verified() const { return unit_verified_; }

  /// Basis element index of a path, if it is a basis path.
  std::optional<std::size_t> index_of(const Path& p) const;

 private:
  CertifiedTable() = default;

  // Rational row vector (basis coordinates before the change of basis)
  // acted on by a path from the right.
  SparseRow act(SparseRow v, const Path& p) const;
  SparseRow act_arrow(const SparseRow& v, int arrow) const;
  std::vector<SparseRow> rational_coords(const OmegaElement& e, std::size_t degree,
                                         const Field& field) const;

  const Quiver* quiver_ = nullptr;
  std::vector<Path> basis_;
  std::vector<int> basis_path_ids_;
  std::map<Path, std::size_t, PathOrder> basis_index_;
  std::vector<SparseRow> vertex_rows_;  // normal form of E_I over basis indices
  // action_[arrow][i]: basis_i * arrow as a sparse row over basis indices.
  std::vector<std::vector<SparseRow>> action_;
  std::vector<std::vector<Rational>> ev_inverse_;  // dense inverse of evaluation matrix
  bool ev_identity_ = false;
  std::vector<std::vector<SparseRow>> table_;
  bool associative_ = false;
  bool unit_verified_ = false;
};

}  // namespace wgalg
