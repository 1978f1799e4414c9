#include "wgalg/relations.hpp"

#include <sstream>

#include "wgalg/error.hpp"
#include "wgalg/freealg.hpp"

namespace wgalg {

RelationSource parse_relation_source(const std::string& text) {
  if (text == "closed-form") return RelationSource::kClosedForm;
  if (text == "braid") return RelationSource::kBraid;
  throw ParseError("unknown relation source '" + text + "' (expected closed-form or braid)");
}

const char* relation_source_name(RelationSource source) {
  return source == RelationSource::kClosedForm ? "closed-form" : "braid";
}

std::vector<long> tau_coeffs(int r) {
  if (r < -1) throw std::invalid_argument("tau_r needs r >= -1");
  std::vector<long> prev;      // tau_{-1}
  std::vector<long> cur{1};    // tau_0
  if (r == -1) return prev;
  for (int k = 1; k <= r; ++k) {
    std::vector<long> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

OmegaElement path_sum_P(const Quiver& Q, Subset I, Subset J, int r, int s, int t) {
  if (r < 0) throw std::invalid_argument("path_sum_P needs r >= 0");
  if (r == 0) return I == J ? OmegaElement::vertex(I) : OmegaElement();
  std::vector<Path> frontier{Path::vertex(I)};
  for (int k = 0; k < r; ++k) {
    const int letter = k % 2 == 0 ? s : t;
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (int id : Q.arrows_from(p.end())) {
        const Arrow& a = Q.arrow(id);
        if (a.letter != letter) continue;
        // The last arrow must land in J.
        if (k + 1 == r && a.target != J) continue;
        next.push_back(concat(p, Path::arrow(a.source, a.target, letter)));
      }
    }
    frontier = std::move(next);
  }
  OmegaElement out;
  for (const auto& p : frontier) out.add(p, FieldElement(1));
  return out;
}

bool alpha_applies(const CoxeterSystem& W, Subset I, Subset J, int s, int t, AlphaParity parity) {
  if (s == t) return false;
  if (!contains(I, s) || contains(I, t)) return false;
  bool odd = W.order(s, t) % 2 == 1;
  if (parity == AlphaParity::kSwapped) odd = !odd;
  if (odd) return contains(J, s) && !contains(J, t);
  return !contains(J, s) && contains(J, t);
}

namespace {

std::string pair_tag(const CoxeterSystem& W, const char* kind, int s, int t, Subset I, Subset J) {
  return std::string(kind) + "(" + W.generator(s) + "," + W.generator(t) + "," +
         W.subset_name(I) + "," + W.subset_name(J);
}

void closed_form(const Quiver& Q, AlphaParity parity, std::vector<Relation>& out) {
  const CoxeterSystem& W = Q.system();
  const Subset n = Subset(Q.vertex_count());
  for (int s = 0; s < W.rank(); ++s) {
    for (int t = 0; t < W.rank(); ++t) {
      if (s == t) continue;
      const int m = W.order(s, t);
      const auto a = tau_coeffs(m - 1);
      for (Subset I = 0; I < n; ++I) {
        for (Subset J = 0; J < n; ++J) {
          if (!alpha_applies(W, I, J, s, t, parity)) continue;
          OmegaElement rel;
          for (int k = 0; k < m; ++k) {
            if (a[k] != 0) rel += path_sum_P(Q, I, J, k, s, t) * FieldElement(a[k]);
          }
          if (!rel.is_zero()) out.push_back({std::move(rel), pair_tag(W, "alpha", s, t, I, J) + ")"});
        }
      }
    }
  }
  for (int s = 0; s < W.rank(); ++s) {
    for (int t = s + 1; t < W.rank(); ++t) {
      const int m = W.order(s, t);
      for (Subset I = 0; I < n; ++I) {
        for (Subset J = 0; J < n; ++J) {
          const Subset diff = I & ~J;
          if (!contains(diff, s) || !contains(diff, t)) continue;
          for (int r = 1; r <= m; ++r) {
            OmegaElement rel = path_sum_P(Q, I, J, r, s, t) - path_sum_P(Q, I, J, r, t, s);
            if (!rel.is_zero()) {
              out.push_back({std::move(rel),
                             pair_tag(W, "beta", s, t, I, J) + "," + std::to_string(r) + ")"});
            }
          }
        }
      }
    }
  }
}

void braid_form(const Quiver& Q, std::vector<Relation>& out) {
  const CoxeterSystem& W = Q.system();
  for (int s = 0; s < W.rank(); ++s) {
    for (int t = s + 1; t < W.rank(); ++t) {
      for (const auto& [gamma, y] : extract_y(W, s, t)) {
        const OmegaElement image = expand_to_paths(y, Q);
        // Split into (start, end) blocks: E_I y E_J generate the same ideal.
        std::map<std::pair<Subset, Subset>, OmegaElement> blocks;
        for (const auto& [p, c] : image.terms()) blocks[{p.start(), p.end()}].add(p, c);
        for (auto& [key, rel] : blocks) {
          if (rel.is_zero()) continue;
          out.push_back({std::move(rel), "ygamma(" + W.generator(s) + "," + W.generator(t) + "," +
                                             std::to_string(gamma) + "," +
                                             W.subset_name(key.first) + "," +
                                             W.subset_name(key.second) + ")"});
        }
      }
    }
  }
  // Relations a. and b. of the free presentation are identities in path
  // coordinates; they are transported anyway and dropped when zero.
  std::vector<std::pair<std::string, FreeElement>> residues;
  for (int s = 0; s < W.rank(); ++s) {
    const FreeElement e = FreeElement::e(s);
    const FreeElement x = FreeElement::x(s);
    residues.emplace_back("quiver-a(" + W.generator(s) + ")", e * e - e);
    residues.emplace_back("quiver-b(" + W.generator(s) + ")", e * x - x);
    residues.emplace_back("quiver-b(" + W.generator(s) + ")", x * e);
    for (int t = s + 1; t < W.rank(); ++t) {
      residues.emplace_back("quiver-a(" + W.generator(s) + "," + W.generator(t) + ")",
                            commutator(e, FreeElement::e(t)));
    }
  }
  for (auto& [tag, f] : residues) {
    OmegaElement rel = expand_to_paths(f, Q);
    if (!rel.is_zero()) out.push_back({std::move(rel), tag});
  }
}

}  // namespace

std::vector<Relation> relations(const Quiver& Q, RelationSource source, AlphaParity parity) {
  std::vector<Relation> out;
  if (source == RelationSource::kClosedForm) {
    closed_form(Q, parity, out);
  } else {
    braid_form(Q, out);
  }
  return out;
}

std::string relation_dump(const std::vector<Relation>& rels, const CoxeterSystem& W) {
  std::ostringstream out;
  for (const auto& r : rels) out << r.tag << " | " << r.element.to_string(W) << "\n";
  return out.str();
}

}  // namespace wgalg
