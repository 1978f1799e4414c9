#include "wgalg/quiver.hpp"

#include <sstream>

#include "wgalg/error.hpp"

namespace wgalg {

namespace {

std::uint64_t arrow_key(Subset I, Subset J, int s) {
  return (std::uint64_t(I) << 37) | (std::uint64_t(J) << 5) | std::uint64_t(s);
}

}  // namespace

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kInclusion:
      return "inclusion";
    case EdgeKind::kTransversal:
      return "transversal";
    default:
      return "none";
  }
}

Quiver::Quiver(CoxeterPtr W) : system_(std::move(W)) {
  if (rank() > 20) throw SizeError("compatibility graph needs at most 20 generators");
  const Subset n = Subset(vertex_count());
  from_.resize(n);
  into_.resize(n);
  for (Subset I = 0; I < n; ++I) {
    for (Subset J = 0; J < n; ++J) {
      if (!has_edge(I, J)) continue;
      edges_.emplace_back(I, J);
      for (int s = 0; s < rank(); ++s) {
        if (contains(I, s) && !contains(J, s)) {
          const int id = static_cast<int>(arrows_.size());
          arrows_.push_back({I, J, s});
          arrow_index_.emplace(arrow_key(I, J, s), id);
          from_[I].push_back(id);
          into_[J].push_back(id);
        }
      }
    }
  }
}

EdgeKind Quiver::classify(Subset I, Subset J) const {
  const Subset out = I & ~J;
  const Subset in = J & ~I;
  if (out == 0) return EdgeKind::kNone;
  for (int s = 0; s < rank(); ++s) {
    if (!contains(out, s)) continue;
    for (int t = 0; t < rank(); ++t) {
      if (contains(in, t) && system_->order(s, t) == 2) return EdgeKind::kNone;
    }
  }
  return in == 0 ? EdgeKind::kInclusion : EdgeKind::kTransversal;
}

int Quiver::arrow_id(Subset I, Subset J, int s) const {
  if (s < 0 || s >= rank()) return -1;
  auto it = arrow_index_.find(arrow_key(I, J, s));
  return it == arrow_index_.end() ? -1 : it->second;
}

std::string Quiver::to_dot() const {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (Subset I = 0; I < Subset(vertex_count()); ++I) {
    out << "  \"" << subset_name(I) << "\";\n";
  }
  for (const auto& [I, J] : edges_) {
    out << "  \"" << subset_name(J) << "\" -> \"" << subset_name(I) << "\"";
    out << (classify(I, J) == EdgeKind::kTransversal ? " [style=dashed];\n"
                                                      : " [style=solid];\n");
  }
  out << "}\n";
  return out.str();
}

Quiver build_compatibility_graph(CoxeterPtr W) { return Quiver(std::move(W)); }

EdgeKind classify_edge(const Quiver& Q, Subset I, Subset J) { return Q.classify(I, J); }

PsiGenerators psi_generators(const Quiver& Q) {
  PsiGenerators g;
  for (Subset I = 0; I < Subset(Q.vertex_count()); ++I) g.vertices.push_back(I);
  for (const auto& e : Q.edges()) {
    if (Q.classify(e.first, e.second) == EdgeKind::kTransversal) g.transversal_edges.push_back(e);
  }
  return g;
}

}  // namespace wgalg
