#include "wgalg/oracle.hpp"

#include <algorithm>
#include <deque>

#include "wgalg/error.hpp"

namespace wgalg {

PathSpace::PathSpace(const Quiver& Q, int max_length) : quiver_(&Q), max_length_(max_length) {
  if (max_length < 0) throw BoundError("path length bound must be non-negative");
  std::vector<Path> level;
  for (Subset I = 0; I < Subset(Q.vertex_count()); ++I) level.push_back(Path::vertex(I));
  std::vector<Path> all = level;
  for (int k = 0; k < max_length; ++k) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (int id : Q.arrows_from(p.end())) {
        const Arrow& a = Q.arrow(id);
        next.push_back(concat(p, Path::arrow(a.source, a.target, a.letter)));
      }
    }
    if (all.size() + next.size() > 5'000'000) {
      throw SizeError("more than 5000000 paths below the length bound");
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), PathOrder());
  paths_ = std::move(all);
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], static_cast<int>(i));

  right_.resize(paths_.size());
  left_.resize(paths_.size());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    const Path& p = paths_[i];
    if (p.length() >= max_length) continue;
    for (int id : Q.arrows_from(p.end())) {
      const Arrow& a = Q.arrow(id);
      right_[i].emplace_back(id, find(concat(p, Path::arrow(a.source, a.target, a.letter))));
    }
    for (int id : Q.arrows_into(p.start())) {
      const Arrow& a = Q.arrow(id);
      left_[i].emplace_back(id, find(concat(Path::arrow(a.source, a.target, a.letter), p)));
    }
  }
}

int PathSpace::find(const Path& p) const {
  if (p.length() > max_length_) return -1;
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PathSpace::right_extend(int id, int arrow) const {
  for (const auto& [a, target] : right_[id]) {
    if (a == arrow) return target;
  }
  return -1;
}

int PathSpace::left_extend(int arrow, int id) const {
  for (const auto& [a, target] : left_[id]) {
    if (a == arrow) return target;
  }
  return -1;
}

// ---------------------------------------------------------------------------

MembershipOracle::MembershipOracle(const Quiver& Q, const std::vector<Relation>& relations,
                                   int L)
    : paths_(Q, L) {
  std::vector<SparseRow> work;
  for (const auto& r : relations) {
    if (r.element.max_length() > L) {
      throw BoundError("relation " + r.tag + " has terms of length " +
                       std::to_string(r.element.max_length()) + " > bound " +
                       std::to_string(L));
    }
    for (const auto& [p, c] : r.element.terms()) {
      if (!c.is_rational()) {
        throw std::invalid_argument("relation " + r.tag + " has irrational coefficients");
      }
    }
    work.push_back(to_row(r.element));
  }
  saturate(std::move(work));
}

SparseRow MembershipOracle::to_row(const OmegaElement& e) const {
  SparseRow row;
  for (const auto& [p, c] : e.terms()) {
    const int id = paths_.find(p);
    if (id < 0) {
      if (p.length() > bound()) {
        throw BoundError("term of length " + std::to_string(p.length()) +
                         " exceeds the saturation bound " + std::to_string(bound()));
      }
      throw std::invalid_argument("element contains a path outside the quiver");
    }
    if (!c.is_rational()) throw std::invalid_argument("to_row needs rational coefficients");
    row.emplace_back(id, c.rational_part());
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

OmegaElement MembershipOracle::from_row(const SparseRow& row, const Field& field) const {
  OmegaElement e;
  for (const auto& [id, q] : row) {
    e.add(paths_.path(id), field ? FieldElement(field, q) : FieldElement(q));
  }
  return e;
}

void MembershipOracle::reduce_row(SparseRow& row) const {
  if (row.empty()) return;
  std::map<int, Rational> acc(row.begin(), row.end());
  auto it = acc.begin();
  while (it != acc.end()) {
    auto pv = pivot_.find(it->first);
    if (pv == pivot_.end()) {
      ++it;
      continue;
    }
    const int key = it->first;
    const Rational c = it->second;
    acc.erase(it);
    const SparseRow& r = rows_[pv->second];
    for (std::size_t k = 1; k < r.size(); ++k) {
      auto [slot, inserted] = acc.try_emplace(r[k].first, 0);
      slot->second -= c * r[k].second;
      if (slot->second == 0) acc.erase(slot);
    }
    it = acc.upper_bound(key);
  }
  row.assign(acc.begin(), acc.end());
}

void MembershipOracle::saturate(std::vector<SparseRow> initial) {
  std::deque<SparseRow> work(std::make_move_iterator(initial.begin()),
                             std::make_move_iterator(initial.end()));
  const int L = bound();
  while (!work.empty()) {
    SparseRow row = std::move(work.front());
    work.pop_front();
    reduce_row(row);
    if (row.empty()) continue;
    const Rational inv = 1 / row.front().second;
    for (auto& [id, q] : row) q *= inv;
    const int lead = row.front().first;
    const int idx = static_cast<int>(rows_.size());
    pivot_.emplace(lead, idx);
    rows_.push_back(row);
    // Leading paths are the longest, so this decides whether arrow products
    // stay inside the bound.
    if (paths_.path(lead).length() + 1 > L) continue;
    const Quiver& Q = paths_.quiver();
    const Path& lp = paths_.path(lead);
    for (int a : Q.arrows_into(lp.start())) {
      SparseRow prod;
      for (const auto& [id, q] : row) prod.emplace_back(paths_.left_extend(a, id), q);
      std::sort(prod.begin(), prod.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      work.push_back(std::move(prod));
    }
    for (int a : Q.arrows_from(lp.end())) {
      SparseRow prod;
      for (const auto& [id, q] : row) prod.emplace_back(paths_.right_extend(id, a), q);
      std::sort(prod.begin(), prod.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      work.push_back(std::move(prod));
    }
  }
}

MembershipOracle::Result MembershipOracle::reduce(const OmegaElement& e) const {
  Field field;
  std::size_t degree = 1;
  for (const auto& [p, c] : e.terms()) {
    if (c.field()) {
      field = c.field();
      degree = static_cast<std::size_t>(field->degree());
      break;
    }
  }
  // Reduce each theta-coordinate separately: the ideal is spanned by rational
  // rows, so membership over the field splits coordinate-wise.
  std::vector<SparseRow> parts(degree);
  for (const auto& [p, c] : e.terms()) {
    const int id = paths_.find(p);
    if (id < 0) {
      if (p.length() > bound()) {
        throw BoundError("term of length " + std::to_string(p.length()) +
                         " exceeds the saturation bound " + std::to_string(bound()));
      }
      throw std::invalid_argument("element contains a path outside the quiver");
    }
    const FieldElement x = field ? c.in(field) : c;
    for (std::size_t k = 0; k < degree; ++k) {
      if (x.coords()[k] != 0) parts[k].emplace_back(id, x.coords()[k]);
    }
  }
  Result out;
  for (std::size_t k = 0; k < degree; ++k) {
    std::sort(parts[k].begin(), parts[k].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    reduce_row(parts[k]);
    for (const auto& [id, q] : parts[k]) {
      std::vector<Rational> coords(degree, Rational(0));
      coords[k] = q;
      out.normal_form.add(paths_.path(id),
                          field ? FieldElement(field, coords) : FieldElement(q));
    }
  }
  out.zero = out.normal_form.is_zero();
  return out;
}

MembershipOracle saturate(const Quiver& Q, const std::vector<Relation>& relations, int L) {
  return MembershipOracle(Q, relations, L);
}

}  // namespace wgalg
