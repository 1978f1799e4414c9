#include "wgalg/freealg.hpp"

#include <stdexcept>

#include "wgalg/error.hpp"

namespace wgalg {

FreeElement FreeElement::word(const Word& w, const LaurentPoly& c) {
  FreeElement f;
  f.add(w, c);
  return f;
}

LaurentPoly FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FreeElement::add(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const LaurentPoly& c) {
  Terms old;
  old.swap(terms_);
  for (auto& [w, x] : old) add(w, x * c);
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [w, d] : b.terms_) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      r.add(uw, c * d);
    }
  }
  return r;
}

std::optional<std::pair<int, int>> FreeElement::v_degree_range() const {
  std::optional<std::pair<int, int>> range;
  for (const auto& [w, c] : terms_) {
    const int lo = *c.min_exponent();
    const int hi = *c.max_exponent();
    if (!range) {
      range = std::make_pair(lo, hi);
    } else {
      range->first = std::min(range->first, lo);
      range->second = std::max(range->second, hi);
    }
  }
  return range;
}

namespace {

std::string word_string(const Word& w, const CoxeterSystem& W) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += (w[k] % 2 == 0 ? "e_" : "x_") + W.generator(w[k] / 2);
  }
  return out;
}

}  // namespace

std::string FreeElement::to_string(const CoxeterSystem& W) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const std::string mono = word_string(w, W);
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

FreeElement commutator(const FreeElement& a, const FreeElement& b) { return a * b - b * a; }

FreeElement iota_T(const CoxeterSystem& W, int s) {
  if (s < 0 || s >= W.rank()) throw UnknownGeneratorError("generator index out of range");
  const LaurentPoly v = LaurentPoly::v();
  const LaurentPoly vi = LaurentPoly::v(-1);
  return FreeElement::e(s) * (-vi) + (FreeElement::unit() - FreeElement::e(s)) * v +
         FreeElement::x(s);
}

FreeElement braid_commutator(const CoxeterSystem& W, int s, int t) {
  if (s == t) throw std::invalid_argument("braid commutator needs two distinct generators");
  const int m = W.order(s, t);
  const FreeElement a = iota_T(W, s);
  const FreeElement b = iota_T(W, t);
  FreeElement left = FreeElement::unit();
  FreeElement right = FreeElement::unit();
  for (int k = 0; k < m; ++k) {
    left = left * (k % 2 == 0 ? a : b);
    right = right * (k % 2 == 0 ? b : a);
  }
  return left - right;
}

std::map<int, FreeElement> extract_y(const CoxeterSystem& W, int s, int t) {
  std::map<int, FreeElement> y;
  const FreeElement delta = braid_commutator(W, s, t);
  for (const auto& [w, c] : delta.terms()) {
    for (const auto& [k, a] : c.terms()) y[k].add(w, LaurentPoly(a));
  }
  for (auto it = y.begin(); it != y.end();) {
    it = it->second.is_zero() ? y.erase(it) : std::next(it);
  }
  return y;
}

OmegaElement expand_word(const Word& w, const Quiver& Q) {
  const CoxeterSystem& W = Q.system();
  OmegaElement cur = OmegaElement::scalar(W, FieldElement(1));
  for (int sym : w) {
    const int s = sym / 2;
    OmegaElement next;
    for (const auto& [p, c] : cur.terms()) {
      if (sym % 2 == 0) {
        if (contains(p.end(), s)) next.add(p, c);
        continue;
      }
      for (int id : Q.arrows_from(p.end())) {
        const Arrow& a = Q.arrow(id);
        if (a.letter != s) continue;
        next.add(concat(p, Path::arrow(a.source, a.target, s)), c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<int, OmegaElement> expand_laurent(const FreeElement& f, const Quiver& Q) {
  std::map<int, OmegaElement> out;
  for (const auto& [w, c] : f.terms()) {
    const OmegaElement image = expand_word(w, Q);
    for (const auto& [k, a] : c.terms()) out[k] += image * a;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

OmegaElement expand_to_paths(const FreeElement& f, const Quiver& Q) {
  OmegaElement out;
  for (const auto& [w, c] : f.terms()) {
    if (c.terms().size() != 1 || c.terms().begin()->first != 0) {
      throw std::invalid_argument("expand_to_paths needs coefficients constant in v");
    }
    out += expand_word(w, Q) * c.terms().begin()->second;
  }
  return out;
}

}  // namespace wgalg
