#pragma once

// Bounded ideal membership for the W-graph algebra: all quiver paths up to a
// length bound, and a row-echelon basis of the part of the relation ideal
// reachable by multiplying relations with arrows inside that bound.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wgalg/path.hpp"
#include "wgalg/quiver.hpp"
#include "wgalg/relations.hpp"

namespace wgalg {

/// All paths of Q of length <= L, numbered in path order (so a smaller id
/// means a leading path).
class PathSpace {
 public:
  PathSpace(const Quiver& Q, int max_length);

  const Quiver& quiver() const { return *quiver_; }
  int max_length() const { return max_length_; }
  std::size_t size() const { return paths_.size(); }
  const Path& path(int id) const { return paths_[id]; }
  /// Id of p, or -1 when p is longer than the bound or not a quiver path.
  int find(const Path& p) const;
  /// Id of p * X (resp. X * p) for the arrow with the given id, or -1.
  int right_extend(int id, int arrow) const;
  int left_extend(int arrow, int id) const;

 private:
  const Quiver* quiver_;
  int max_length_;
  std::vector<Path> paths_;
  std::map<Path, int, PathOrder> index_;
  std::vector<std::vector<std::pair<int, int>>> right_;  // (arrow, id)
  std::vector<std::vector<std::pair<int, int>>> left_;
};

/// Sparse rational vector over path ids, sorted by id.
using SparseRow = std::vector<std::pair<int, Rational>>;

class MembershipOracle {
 public:
  /// Throws BoundError when a relation has a term longer than L.
  MembershipOracle(const Quiver& Q, const std::vector<Relation>& relations, int L);

  int bound() const { return paths_.max_length(); }
  const PathSpace& paths() const { return paths_; }
  const Quiver& quiver() const { return paths_.quiver(); }
  /// Number of independent ideal elements found within the bound.
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int path_id) const { return pivot_.count(path_id) > 0; }

  struct Result {
    OmegaElement normal_form;
    bool zero = false;
  };
  /// Normal form modulo the saturated span; zero is a proof of vanishing in
  /// the algebra, a nonzero normal form is not a proof of the converse.
  /// Throws BoundError when a term is longer than the bound.
  Result reduce(const OmegaElement& e) const;
  OmegaElement normal_form(const OmegaElement& e) const { return reduce(e).normal_form; }

  /// Rational coordinates of an element with rational coefficients.
  SparseRow to_row(const OmegaElement& e) const;
  OmegaElement from_row(const SparseRow& row, const Field& field) const;
  /// Fully reduces a rational row in place.
  void reduce_row(SparseRow& row) const;

 private:
  void saturate(std::vector<SparseRow> work);

  PathSpace paths_;
  std::vector<SparseRow> rows_;             // monic, leading entry first
  std::unordered_map<int, int> pivot_;      // leading path id -> row index
};

/// Convenience: relations of the given source, then saturation.
MembershipOracle saturate(const Quiver& Q, const std::vector<Relation>& relations, int L);

}  // namespace wgalg
