#pragma once

// Expression mini-language shared by the CLI and the file formats:
//   EXPR   ::= TERM (('+'|'-') TERM)*
//   TERM   ::= FACTOR ('*' FACTOR)*
//   FACTOR ::= ('-')? ATOM ('^' integer)?
//   ATOM   ::= rational | 'v' | 'theta' | '(' EXPR ')'
//            | 'e_'name | 'x_'name | 'T_'name
//            | 'E{' names '}' | 'X{' names '}->{' names '}' ('^' name)?
//            | 'F{' label '}'
// Negative powers are only allowed on v.

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "wgalg/coxeter.hpp"
#include "wgalg/freealg.hpp"
#include "wgalg/hecke.hpp"
#include "wgalg/path.hpp"
#include "wgalg/quiver.hpp"
#include "wgalg/scalar.hpp"

namespace wgalg {

/// Element of k[v^{±1}] ⊗ Ω, stored by v-degree.
using LaurentOmega = std::map<int, OmegaElement>;

struct ExprContext {
  const Quiver* quiver = nullptr;  // needed for e_, x_, T_, E, X in the Ω domain
  const CoxeterSystem* system = nullptr;  // defaults to the quiver's system
  Field field;  // field of theta; defaults to the system's field
  const std::map<std::string, OmegaElement>* idempotents = nullptr;  // F{label}
};

/// Laurent polynomial built from rationals, v and theta.
LaurentPoly parse_laurent(std::string_view text, const Field& field);
/// A scalar without v.
FieldElement parse_scalar(std::string_view text, const Field& field);

LaurentOmega parse_omega_laurent(std::string_view text, const ExprContext& ctx);
/// Throws ParseError when the value depends on v.
OmegaElement parse_omega(std::string_view text, const ExprContext& ctx);

/// Free-algebra value (e_, x_, T_ = iota(T_s), E and X expanded through e_s, x_s).
FreeElement parse_free(std::string_view text, const CoxeterSystem& W, const Field& field = {});

/// Hecke value; only scalars and T_ generators are allowed.
HeckeElement parse_hecke(std::string_view text, const GroupPtr& group);

/// Path element in Ω for "X{I}->{J}^s"; 0 when (I,J,s) is not an arrow.
/// Without a letter the smallest s in I\J is used.
OmegaElement edge_element(const Quiver& Q, Subset I, Subset J, int letter = -1);

/// e_s = sum of E_I over I containing s; x_s = sum of arrows with letter s.
OmegaElement omega_e(const Quiver& Q, int s);
OmegaElement omega_x(const Quiver& Q, int s);
/// iota(T_s) = -v^{-1} e_s + v (1 - e_s) + x_s.
LaurentOmega omega_T(const Quiver& Q, int s);

LaurentOmega laurent_omega_mult(const LaurentOmega& a, const LaurentOmega& b);
std::string laurent_omega_to_string(const LaurentOmega& a, const CoxeterSystem& W);

}  // namespace wgalg
