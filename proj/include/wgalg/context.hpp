#pragma once

// Everything needed to decide questions about one W-graph algebra: quiver,
// relations, the bounded oracle, the certified table when it closes, and the
// builtin modules used as nonvanishing witnesses.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wgalg/expr.hpp"
#include "wgalg/oracle.hpp"
#include "wgalg/relations.hpp"
#include "wgalg/report.hpp"
#include "wgalg/table.hpp"
#include "wgalg/wgraph.hpp"

namespace wgalg {

/// kZero and kNonzero are proofs; kUnknown means nonzero at the bound only.
enum class Verdict { kZero, kNonzero, kUnknown };

const char* verdict_name(Verdict v);
/// PASS for kZero, FAIL for kNonzero, INCONCLUSIVE otherwise.
Outcome require_zero(Verdict v);

struct ContextOptions {
  int bound = 6;
  RelationSource source = RelationSource::kClosedForm;
  bool build_table = true;
  bool load_modules = true;
  /// Scalar field; defaults to the system's. A larger field lets factor
  /// algebras share the field of a product.
  Field field;
  /// Extra ideal generators (the quotient is then no longer Ω itself, so
  /// modules are not loaded).
  std::vector<Relation> extra;
};

class OmegaContext {
 public:
  explicit OmegaContext(CoxeterPtr W, ContextOptions options = {});
  OmegaContext(const OmegaContext&) = delete;
  OmegaContext& operator=(const OmegaContext&) = delete;

  const CoxeterSystem& system() const { return *system_; }
  const CoxeterPtr& system_ptr() const { return system_; }
  const Quiver& quiver() const { return *quiver_; }
  const Field& field() const { return field_; }
  int bound() const { return options_.bound; }
  RelationSource source() const { return options_.source; }
  const std::vector<Relation>& relations() const { return relations_; }
  const MembershipOracle& oracle() const { return *oracle_; }
  /// Null when the table did not close (see closure()) or was not requested.
  const CertifiedTable* table() const { return table_ ? &*table_ : nullptr; }
  const ClosureReport& closure() const { return closure_; }
  const std::vector<WGraph>& wgraphs() const { return wgraphs_; }
  const std::vector<OmegaModule>& modules() const { return modules_; }

  OmegaElement one() const { return OmegaElement::scalar(*system_, FieldElement::one(field_)); }
  ExprContext expr_context(const std::map<std::string, OmegaElement>* idempotents = nullptr) const;

  Verdict verdict(const OmegaElement& e) const;
  /// Canonical form from the table, else the oracle normal form (BoundError
  /// when a term exceeds the bound).
  OmegaElement reduce(const OmegaElement& e) const;

  /// Membership in the subalgebra Ψ generated by the E_I and the transversal
  /// arrows. Exact with a table; otherwise PASS via the span of normal forms
  /// of Ψ-monomials within the bound, FAIL via a module on which e leaves the
  /// image of Ψ, INCONCLUSIVE in between.
  Outcome psi_membership(const OmegaElement& e) const;

  /// Table coordinates of Ψ (requires the table): independent spanning vectors.
  const std::vector<Vector>& psi_table_basis() const;

 private:
  struct PsiBound;  // span data for the table-free test

  CoxeterPtr system_;
  ContextOptions options_;
  Field field_;
  std::unique_ptr<Quiver> quiver_;
  std::vector<Relation> relations_;
  std::unique_ptr<MembershipOracle> oracle_;
  std::optional<CertifiedTable> table_;
  ClosureReport closure_;
  std::vector<WGraph> wgraphs_;
  std::vector<OmegaModule> modules_;

  mutable std::optional<SpanBasis> psi_table_;
  mutable std::vector<Vector> psi_table_basis_;
  mutable std::shared_ptr<PsiBound> psi_bound_;
  mutable std::vector<std::optional<SpanBasis>> psi_module_;
};

/// Generators of Ψ as elements: every E_I, then every lettered transversal arrow.
std::vector<OmegaElement> psi_generator_elements(const Quiver& Q);

/// Flattened matrix entries, for span tests.
std::vector<FieldElement> flatten(const Matrix& m);

}  // namespace wgalg
