#include "wgalg/hecke.hpp"

#include <stdexcept>

#include "wgalg/error.hpp"

namespace wgalg {

HeckeElement HeckeElement::basis(GroupPtr group, std::size_t w, const LaurentPoly& c) {
  if (w >= group->size()) throw std::out_of_range("group element index out of range");
  HeckeElement h(std::move(group));
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::generator(GroupPtr group, int s) {
  if (s < 0 || s >= group->system().rank()) {
    throw UnknownGeneratorError("generator index out of range");
  }
  const std::size_t w = group->right_mult(0, s);
  return basis(std::move(group), w);
}

LaurentPoly HeckeElement::coefficient(std::size_t w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(std::size_t w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (!group_) group_ = other.group_;
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  if (!group_) group_ = other.group_;
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const HeckeElement& a, const LaurentPoly& c) {
  HeckeElement r(a.group_);
  for (const auto& [w, x] : a.terms_) r.add(w, x * c);
  return r;
}

HeckeElement left_mult_generator(int s, const HeckeElement& a) {
  const CoxeterGroup& G = *a.group();
  const LaurentPoly q = LaurentPoly::v() - LaurentPoly::v(-1);
  HeckeElement r(a.group());
  for (const auto& [w, c] : a.terms()) {
    const std::size_t sw = G.left_mult(s, w);
    r.add(sw, c);
    if (G.length(sw) < G.length(w)) r.add(w, c * q);
  }
  return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  const GroupPtr group = a.group_ ? a.group_ : b.group_;
  HeckeElement r(group);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.group_ && b.group_ && a.group_ != b.group_ &&
      !(a.group_->system() == b.group_->system())) {
    throw std::invalid_argument("Hecke elements of different groups");
  }
  HeckeElement bb = b;
  bb.group_ = group;
  for (const auto& [u, c] : a.terms_) {
    // T_u = T_{s1} ... T_{sk} for a reduced word s1...sk, applied right to left.
    HeckeElement acc = bb;
    const auto& word = group->element(u).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mult_generator(*it, acc);
    r += acc * c;
  }
  return r;
}

HeckeElement hecke_mult(const HeckeElement& a, const HeckeElement& b) { return a * b; }

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string mono;
    for (int s : group_->element(w).word) {
      if (!mono.empty()) mono += "*";
      mono += "T_" + group_->system().generator(s);
    }
    if (c.terms().size() == 1) {
      const auto& [k, a] = *c.terms().begin();
      std::string m = k == 0 ? "" : (k == 1 ? "v" : "v^" + std::to_string(k));
      if (!mono.empty()) m = m.empty() ? mono : m + "*" + mono;
      out += format_term(a, m, first);
    } else {
      const std::string body = "(" + c.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
      out += first ? body : " + " + body;
    }
    first = false;
  }
  return out;
}

}  // namespace wgalg
