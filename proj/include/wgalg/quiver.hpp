#pragma once

// Stembridge's compatibility graph Q_W on subsets of S. Each graph edge I <- J
// carries one lettered arrow X^s_{IJ} per s in I\J.

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wgalg/coxeter.hpp"

namespace wgalg {

enum class EdgeKind { kNone, kInclusion, kTransversal };

const char* edge_kind_name(EdgeKind kind);

/// The arrow X^letter_{source,target}, i.e. the graph edge source <- target.
struct Arrow {
  Subset source = 0;
  Subset target = 0;
  int letter = 0;
};

class Quiver {
 public:
  explicit Quiver(CoxeterPtr W);

  const CoxeterSystem& system() const { return *system_; }
  const CoxeterPtr& system_ptr() const { return system_; }
  int rank() const { return system_->rank(); }
  std::size_t vertex_count() const { return std::size_t(1) << rank(); }

  EdgeKind classify(Subset I, Subset J) const;
  bool has_edge(Subset I, Subset J) const { return classify(I, J) != EdgeKind::kNone; }

  /// Graph edges (I, J), sorted by (I, J).
  const std::vector<std::pair<Subset, Subset>>& edges() const { return edges_; }
  /// Arrows sorted by (source, target, letter).
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_[id]; }
  /// Id of X^s_{IJ}, or -1 when it is not an arrow of the quiver.
  int arrow_id(Subset I, Subset J, int s) const;
  /// Arrow ids with the given source (resp. target), in arrow order.
  std::span<const int> arrows_from(Subset I) const { return from_[I]; }
  std::span<const int> arrows_into(Subset J) const { return into_[J]; }

  std::string subset_name(Subset I) const { return system_->subset_name(I); }

  /// DOT export: one DOT edge per graph edge, drawn from J to I (the
  /// direction of I <- J); inclusion solid, transversal dashed.
  std::string to_dot() const;

 private:
  CoxeterPtr system_;
  std::vector<std::pair<Subset, Subset>> edges_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::uint64_t, int> arrow_index_;
  std::vector<std::vector<int>> from_;
  std::vector<std::vector<int>> into_;
};

Quiver build_compatibility_graph(CoxeterPtr W);
EdgeKind classify_edge(const Quiver& Q, Subset I, Subset J);

struct PsiGenerators {
  std::vector<Subset> vertices;
  std::vector<std::pair<Subset, Subset>> transversal_edges;
};
PsiGenerators psi_generators(const Quiver& Q);

}  // namespace wgalg
