#pragma once

// Iwahori-Hecke algebra of a finite Coxeter group in the T_w basis:
// T_s^2 = 1 + (v - v^{-1}) T_s.

#include <map>
#include <memory>
#include <string>

#include "wgalg/coxeter.hpp"
#include "wgalg/scalar.hpp"

namespace wgalg {

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(GroupPtr group) : group_(std::move(group)) {}

  /// T_w for the element with index w in the group enumeration.
  static HeckeElement basis(GroupPtr group, std::size_t w, const LaurentPoly& c = LaurentPoly(1));
  static HeckeElement generator(GroupPtr group, int s);
  static HeckeElement one(GroupPtr group) { return basis(std::move(group), 0); }

  const GroupPtr& group() const { return group_; }
  const std::map<std::size_t, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(std::size_t w) const;
  void add(std::size_t w, const LaurentPoly& c);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const LaurentPoly& c);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Expression syntax, T_w written as a product over a reduced word.
  std::string to_string() const;

 private:
  GroupPtr group_;
  std::map<std::size_t, LaurentPoly> terms_;
};

/// T_s * a, by T_s T_w = T_{sw} when l(sw) > l(w), else T_{sw} + (v - v^{-1}) T_w.
HeckeElement left_mult_generator(int s, const HeckeElement& a);

HeckeElement hecke_mult(const HeckeElement& a, const HeckeElement& b);

}  // namespace wgalg
