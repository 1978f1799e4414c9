#pragma once

// Defining relations of the W-graph algebra in path coordinates, either in
// closed form (Chebyshev sums of alternating path sums) or transported from
// the braid commutators of Gyoja's presentation.

#include <string>
#include <vector>

#include "wgalg/path.hpp"
#include "wgalg/quiver.hpp"

namespace wgalg {

enum class RelationSource { kClosedForm, kBraid };

RelationSource parse_relation_source(const std::string& text);
const char* relation_source_name(RelationSource source);

struct Relation {
  OmegaElement element;
  std::string tag;
};

/// Coefficients a_{r,0..r} of tau_r (tau_{-1} = 0, tau_0 = 1,
/// tau_r = T tau_{r-1} - tau_{r-2}); empty for r = -1.
std::vector<long> tau_coeffs(int r);

/// E_I x_s x_t x_s ... E_J with r alternating factors, as a path sum in Q.
OmegaElement path_sum_P(const Quiver& Q, Subset I, Subset J, int r, int s, int t);

/// Which (I,J) carry the alpha relation sum_k a_{m-1,k} P^k_{IJ}(s,t).
/// Both variants require s in I, t not in I. kStandard: for odd m also
/// s in J, t not in J; for even m, s not in J, t in J. kSwapped exchanges the
/// two parity conditions; it is kept only to demonstrate that it does not
/// present the same algebra as the braid relations.
enum class AlphaParity { kStandard, kSwapped };

bool alpha_applies(const CoxeterSystem& W, Subset I, Subset J, int s, int t,
                   AlphaParity parity = AlphaParity::kStandard);

/// All nonzero relations of the chosen source, in a deterministic order.
std::vector<Relation> relations(const Quiver& Q, RelationSource source,
                                AlphaParity parity = AlphaParity::kStandard);

/// One line per relation: "TAG | expression".
std::string relation_dump(const std::vector<Relation>& rels, const CoxeterSystem& W);

}  // namespace wgalg
