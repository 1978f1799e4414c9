#pragma once

// Exact scalars: the real cyclotomic field Q(2cos(pi/L)) and Laurent
// polynomials in v over it.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wgalg {

using Integer = mpz_class;
using Rational = mpq_class;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// The field Q(theta) with theta = 2cos(pi/L) for a conductor L >= 1.
/// Elements are coordinate vectors in the basis 1, theta, ..., theta^(d-1).
class FieldSpec {
 public:
  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }

  /// Monic integer minimal polynomial of theta, lowest coefficient first.
  const std::vector<Integer>& minimal_polynomial() const { return minpoly_; }

  /// Floating-point value of theta (for sanity checks and sign tests only).
  double theta_value() const;

  /// True when 2cos(pi*j/m) lies in this field for every integer j.
  bool contains_order(long m) const { return m >= 1 && conductor_ % m == 0; }

  /// Coordinates of 2cos(pi*j/m); throws UnsupportedOrderError unless
  /// contains_order(m).
  std::vector<Rational> two_cos(long j, long m) const;

  /// Reduces a polynomial in theta (lowest coefficient first) modulo the
  /// minimal polynomial; the result has exactly degree() entries.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

  /// Shared instance for conductor L (instances are cached and immutable).
  static Field get(int conductor);

 private:
  explicit FieldSpec(int conductor);

  int conductor_;
  std::vector<Integer> minpoly_;
};

/// Integer polynomial C_n with 2cos(n*phi) = C_n(2cos(phi)), lowest
/// coefficient first (C_0 = 2, C_1 = x, C_n = x*C_{n-1} - C_{n-2}).
std::vector<Integer> chebyshev_two_cos(long n);

/// Minimal polynomial of 2cos(pi/L), computed by folding the cyclotomic
/// polynomial Phi_{2L} along z -> z + 1/z.
std::vector<Integer> theta_minimal_polynomial(int conductor);

/// The field generated by 2cos(pi/L), L = lcm(orders). Orders must be finite
/// and at least 2; an empty set gives Q.
Field make_field(std::span<const int> orders);

class FieldElement {
 public:
  /// Rational zero that is not yet attached to a field.
  FieldElement() : coords_{Rational(0)} {}
  /// A rational number not attached to a field; it embeds into any field.
  FieldElement(const Rational& q) : coords_{q} {}  // NOLINT(runtime/explicit)
  FieldElement(long q) : coords_{Rational(q)} {}   // NOLINT(runtime/explicit)
  FieldElement(Field field, const Rational& q);
  FieldElement(Field field, std::vector<Rational> coords);

  static FieldElement zero(const Field& field) { return FieldElement(field, Rational(0)); }
  static FieldElement one(const Field& field) { return FieldElement(field, Rational(1)); }
  static FieldElement theta(const Field& field);
  static FieldElement two_cos(const Field& field, long j, long m);

  const Field& field() const { return field_; }
  /// Coordinates in the theta power basis (length 1 for unattached rationals).
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Coefficient of theta^0.
  const Rational& rational_part() const { return coords_[0]; }

  /// This element expressed in `field`: unattached rationals embed anywhere,
  /// Q(2cos(pi/a)) embeds into Q(2cos(pi/b)) when a divides b.
  FieldElement in(const Field& field) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error for zero.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Total order on coordinates; used for canonical container keys only.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  double to_double() const;

  /// Expression syntax: "3/2", "theta", "(1 - 2*theta + theta^2)".
  std::string to_string() const;
  /// True when to_string() needs parentheses when used as a factor.
  bool needs_parentheses() const;

 private:
  static Field common_field(const FieldElement& a, const FieldElement& b);
  void attach(const Field& field);

  Field field_;
  std::vector<Rational> coords_;
};

/// Finite Laurent polynomial in v with coefficients in a FieldSpec; zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const FieldElement& c, int exponent = 0);  // NOLINT(runtime/explicit)
  LaurentPoly(long c) : LaurentPoly(FieldElement(c)) {}  // NOLINT(runtime/explicit)

  static LaurentPoly v(int exponent = 1) { return LaurentPoly(FieldElement(1), exponent); }

  const std::map<int, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coefficient(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;
  /// The field of the first attached coefficient, if any.
  Field field() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  void add_term(int exponent, const FieldElement& c);

  std::map<int, FieldElement> terms_;
};

enum class LaurentOp { kAdd, kSub, kMul };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op);

/// Formats `coefficient * monomial` in expression syntax (used by the printers
/// of all algebra layers). An empty monomial means the scalar itself.
std::string format_term(const FieldElement& coefficient, const std::string& monomial,
                        bool first);

}  // namespace wgalg
