#include "wgalg/path.hpp"

#include <stdexcept>

#include "wgalg/quiver.hpp"

namespace wgalg {

Path concat(const Path& a, const Path& b) {
  if (a.end() != b.start()) throw std::invalid_argument("paths are not composable");
  Path r = a;
  r.vertices.insert(r.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

bool PathOrder::operator()(const Path& a, const Path& b) const {
  if (a.letters.size() != b.letters.size()) return a.letters.size() > b.letters.size();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.letters < b.letters;
}

bool path_in_quiver(const Path& p, const Quiver& Q) {
  for (std::size_t k = 0; k < p.letters.size(); ++k) {
    if (Q.arrow_id(p.vertices[k], p.vertices[k + 1], p.letters[k]) < 0) return false;
  }
  return p.vertices.front() <= Q.system().full();
}

std::string path_to_string(const Path& p, const CoxeterSystem& W) {
  if (p.letters.empty()) return "E" + W.subset_name(p.start());
  std::string out;
  for (std::size_t k = 0; k < p.letters.size(); ++k) {
    if (k) out += " * ";
    out += "X" + W.subset_name(p.vertices[k]) + "->" + W.subset_name(p.vertices[k + 1]) + "^" +
           W.generator(p.letters[k]);
  }
  return out;
}

OmegaElement OmegaElement::from_path(const Path& p, const FieldElement& c) {
  OmegaElement e;
  e.add(p, c);
  return e;
}

OmegaElement OmegaElement::scalar(const CoxeterSystem& W, const FieldElement& c) {
  OmegaElement e;
  for (Subset I = 0; I <= W.full(); ++I) {
    e.add(Path::vertex(I), c);
    if (I == W.full()) break;
  }
  return e;
}

int OmegaElement::max_length() const {
  return terms_.empty() ? -1 : terms_.begin()->first.length();
}

FieldElement OmegaElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? FieldElement() : it->second;
}

void OmegaElement::add(const Path& p, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OmegaElement OmegaElement::operator-() const {
  OmegaElement r = *this;
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

OmegaElement& OmegaElement::operator+=(const OmegaElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

OmegaElement& OmegaElement::operator-=(const OmegaElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

OmegaElement& OmegaElement::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, x] : terms_) x *= c;
  return *this;
}

OmegaElement operator*(const OmegaElement& a, const OmegaElement& b) {
  OmegaElement r;
  // Group the right factor by start vertex to skip non-composable pairs.
  std::map<Subset, std::vector<const OmegaElement::Terms::value_type*>> by_start;
  for (const auto& t : b.terms_) by_start[t.first.start()].push_back(&t);
  for (const auto& [p, c] : a.terms_) {
    auto it = by_start.find(p.end());
    if (it == by_start.end()) continue;
    for (const auto* t : it->second) r.add(concat(p, t->first), c * t->second);
  }
  return r;
}

OmegaElement multiply(const OmegaElement& a, const OmegaElement& b) { return a * b; }

std::string OmegaElement::to_string(const CoxeterSystem& W) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    out += format_term(c, path_to_string(p, W), first);
    first = false;
  }
  return out;
}

}  // namespace wgalg
