#pragma once

// The free algebra on e_s, x_s with Laurent coefficients, Gyoja's map iota,
// braid commutators and their v-coefficients y^gamma(s,t), and the expansion
// of free-algebra elements into path coordinates.

#include <map>
#include <string>
#include <vector>

#include "wgalg/path.hpp"
#include "wgalg/quiver.hpp"
#include "wgalg/scalar.hpp"

namespace wgalg {

/// Symbol code: 2s for e_s, 2s+1 for x_s.
using Word = std::vector<int>;

inline int e_symbol(int s) { return 2 * s; }
inline int x_symbol(int s) { return 2 * s + 1; }

class FreeElement {
 public:
  using Terms = std::map<Word, LaurentPoly>;

  FreeElement() = default;
  static FreeElement word(const Word& w, const LaurentPoly& c = LaurentPoly(1));
  static FreeElement unit(const LaurentPoly& c = LaurentPoly(1)) { return word({}, c); }
  static FreeElement e(int s) { return word({e_symbol(s)}); }
  static FreeElement x(int s) { return word({x_symbol(s)}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Word& w) const;
  void add(const Word& w, const LaurentPoly& c);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(const LaurentPoly& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const LaurentPoly& c) { return a *= c; }
  friend FreeElement operator*(const LaurentPoly& c, FreeElement a) { return a *= c; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Smallest and largest power of v occurring (nullopt for zero).
  std::optional<std::pair<int, int>> v_degree_range() const;

  std::string to_string(const CoxeterSystem& W) const;

 private:
  Terms terms_;
};

FreeElement commutator(const FreeElement& a, const FreeElement& b);

/// iota(T_s) = -v^{-1} e_s + v (1 - e_s) + x_s.
FreeElement iota_T(const CoxeterSystem& W, int s);

/// Alternating product of m = m_st factors starting with iota(T_s) minus the
/// one starting with iota(T_t).
FreeElement braid_commutator(const CoxeterSystem& W, int s, int t);

/// Coefficients of v^gamma in the braid commutator (zero ones omitted).
std::map<int, FreeElement> extract_y(const CoxeterSystem& W, int s, int t);

/// Substitutes e_s -> sum_{I containing s} E_I and x_s -> sum of arrows with
/// letter s. Coefficients must be constant in v (std::invalid_argument
/// otherwise).
OmegaElement expand_to_paths(const FreeElement& f, const Quiver& Q);

/// Expansion of an element with Laurent coefficients, split by powers of v.
std::map<int, OmegaElement> expand_laurent(const FreeElement& f, const Quiver& Q);

/// Image of a single word in path coordinates.
OmegaElement expand_word(const Word& w, const Quiver& Q);

}  // namespace wgalg
