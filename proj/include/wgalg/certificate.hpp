#pragma once

// Decomposition certificates: idempotents F^λ, degrees d_λ and a partial
// order on the labels, given by covering pairs (λ, μ) meaning λ ⪯ μ.
// JSON: {"coxeter", "labels", "degrees", "order", "elements"}.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgalg/path.hpp"

namespace wgalg {

struct Certificate {
  CoxeterPtr system;
  std::vector<std::string> labels;
  std::map<std::string, int> degrees;
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::string, OmegaElement> elements;

  /// Position of a label; throws ValidationError when unknown.
  std::size_t index(const std::string& label) const;
  /// Reflexive-transitive closure of the order, indexed like `labels`.
  /// Throws ValidationError when the pairs contain a cycle.
  std::vector<std::vector<bool>> closure() const;
  /// Longest chain length of the order (number of labels in the chain).
  int height() const;
};

/// Labels distinct and complete, degrees positive, order acyclic and over
/// known labels, and sum of d^2 equal to the group order.
void check_certificate_shape(const Certificate& c, std::size_t group_order);

/// Covering pairs of the partial order generated by `pairs`, sorted by label
/// position.
std::vector<std::pair<std::string, std::string>> transitive_reduction(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& pairs);

/// Parses the certificate JSON. When W is given, the document's "coxeter"
/// entry (if present) must describe the same system.
Certificate certificate_from_json_text(std::string_view text, CoxeterPtr W = nullptr);
std::string certificate_to_json_text(const Certificate& c);

/// Renames labels (and the order) through `names`; unnamed labels are kept.
Certificate relabel(const Certificate& c, const std::map<std::string, std::string>& names);

/// F = 1 for the trivial group; F^sign = E_S, F^triv = E_∅ with sign ⪯ triv
/// for rank one. Throws ValidationError for other systems.
Certificate builtin_certificate(const CoxeterPtr& W);

}  // namespace wgalg
