#pragma once

// Verification of decomposition certificates (axioms Z1-Z6) and a search that
// reconstructs certificates from a certified table for small types.

#include <optional>
#include <string>
#include <vector>

#include "wgalg/certificate.hpp"
#include "wgalg/context.hpp"
#include "wgalg/report.hpp"

namespace wgalg {

/// One check per axiom, named Z1..Z6. Z4 uses the corner criterion: the
/// corner F Ω F has dimension d^2 and acts with image dimension d^2 on some
/// builtin module. Throws ValidationError when the certificate is malformed or
/// belongs to another system.
Report verify_certificate(const OmegaContext& omega, const Certificate& c);

/// For every builtin module M the subspaces sum_{ν ⪯ λ} F^ν M are submodules.
Check filtration_check(const OmegaContext& omega, const Certificate& c);
/// Same on given modules; irreducible modules never detect a bad order, so
/// reducible ones (regular W-graphs, tensor products) are the useful input.
Check filtration_check(const OmegaContext& omega, const Certificate& c,
                       const std::vector<OmegaModule>& modules);

struct SearchResult {
  std::optional<Certificate> certificate;
  Report report;                 // verification of the certificate found
  std::vector<std::string> log;  // reasons, alternatives, failures
};

/// Lifts the central idempotents of the builtin irreducible modules through
/// Ψ ∩ (⊕ E_I Ω E_I) and keeps the first family that verifies. Needs the
/// certified table. `degrees` (optional) must match the module dimensions and
/// satisfy sum d^2 = |W|.
SearchResult search_certificate(const OmegaContext& omega,
                                const std::vector<int>* degrees = nullptr);

}  // namespace wgalg
