#include "wgalg/table.hpp"

#include <algorithm>

#include "wgalg/error.hpp"

namespace wgalg {

namespace {

void add_scaled(std::map<int, Rational>& acc, const SparseRow& row, const Rational& c) {
  for (const auto& [k, q] : row) {
    auto [it, inserted] = acc.try_emplace(k, 0);
    it->second += c * q;
    if (it->second == 0) acc.erase(it);
  }
}

SparseRow to_sparse(const std::map<int, Rational>& acc) { return SparseRow(acc.begin(), acc.end()); }

// Orders basis paths shortest first, then like the path order.
bool basis_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return PathOrder()(a, b);
}

// Inverse of a dense rational matrix, or nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> A) {
  const std::size_t n = A.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(inv[piv], inv[col]);
    const Rational f = 1 / A[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      A[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational g = A[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (A[col][j] != 0) A[r][j] -= g * A[col][j];
        if (inv[col][j] != 0) inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::optional<CertifiedTable> CertifiedTable::build(const MembershipOracle& oracle,
                                                    const std::vector<Relation>& relations,
                                                    ClosureReport* report) {
  ClosureReport local;
  ClosureReport& rep = report ? *report : local;
  rep = ClosureReport{};
  const PathSpace& paths = oracle.paths();
  const Quiver& Q = oracle.quiver();
  const int L = oracle.bound();
  const CoxeterSystem& W = Q.system();

  CertifiedTable T;
  T.quiver_ = &Q;
  std::vector<int> standard;
  for (int id = 0; id < static_cast<int>(paths.size()); ++id) {
    if (!oracle.is_pivot(id)) standard.push_back(id);
  }
  for (int id : standard) {
    if (paths.path(id).length() >= L) {
      rep.problems.push_back("standard path " + path_to_string(paths.path(id), W) +
                             " has length " + std::to_string(L) +
                             "; its products with arrows escape the bound");
      if (rep.problems.size() >= 10) break;
    }
  }
  if (!rep.problems.empty()) return std::nullopt;

  std::sort(standard.begin(), standard.end(),
            [&](int a, int b) { return basis_less(paths.path(a), paths.path(b)); });
  std::vector<int> index_of_id(paths.size(), -1);
  for (std::size_t i = 0; i < standard.size(); ++i) {
    T.basis_.push_back(paths.path(standard[i]));
    T.basis_path_ids_.push_back(standard[i]);
    T.basis_index_.emplace(paths.path(standard[i]), i);
    index_of_id[standard[i]] = static_cast<int>(i);
  }
  const std::size_t d = T.basis_.size();

  auto to_basis = [&](const SparseRow& row) {
    SparseRow out;
    for (const auto& [id, q] : row) {
      if (index_of_id[id] < 0) throw InconsistencyError("normal form contains a pivot path");
      out.emplace_back(index_of_id[id], q);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  for (Subset I = 0; I < Subset(Q.vertex_count()); ++I) {
    SparseRow row{{paths.find(Path::vertex(I)), Rational(1)}};
    oracle.reduce_row(row);
    T.vertex_rows_.push_back(to_basis(row));
  }

  // Right action of every arrow on the span of the basis.
  T.action_.assign(Q.arrows().size(), std::vector<SparseRow>(d));
  for (std::size_t a = 0; a < Q.arrows().size(); ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      if (T.basis_[i].end() != Q.arrow(static_cast<int>(a)).source) continue;
      const int pid = paths.right_extend(T.basis_path_ids_[i], static_cast<int>(a));
      if (pid < 0) throw InconsistencyError("arrow extension missing below the bound");
      SparseRow row{{pid, Rational(1)}};
      oracle.reduce_row(row);
      T.action_[a][i] = to_basis(row);
    }
  }

  // The span must be a module: every relation acts as zero.
  for (const auto& r : relations) {
    for (std::size_t i = 0; i < d; ++i) {
      std::map<int, Rational> acc;
      for (const auto& [p, c] : r.element.terms()) {
        if (p.start() != T.basis_[i].end()) continue;
        add_scaled(acc, T.act({{static_cast<int>(i), Rational(1)}}, p), c.rational_part());
      }
      if (!acc.empty()) {
        rep.problems.push_back("relation " + r.tag + " does not act as zero on " +
                               path_to_string(T.basis_[i], W));
        break;
      }
    }
    if (rep.problems.size() >= 10) break;
  }
  if (!rep.problems.empty()) return std::nullopt;

  // Evaluation at the unit: row j is (sum_I E_I) * basis_j.
  std::vector<SparseRow> ev(d);
  bool identity = true;
  for (std::size_t j = 0; j < d; ++j) {
    ev[j] = T.act(T.vertex_rows_[T.basis_[j].start()], T.basis_[j]);
    if (!(ev[j].size() == 1 && ev[j][0].first == static_cast<int>(j) && ev[j][0].second == 1)) {
      identity = false;
    }
  }
  T.ev_identity_ = identity;
  if (!identity) {
    std::vector<std::vector<Rational>> dense(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, q] : ev[j]) dense[j][k] = q;
    }
    auto inv = invert(std::move(dense));
    if (!inv) {
      rep.problems.push_back("evaluation map is singular: standard paths are dependent");
      return std::nullopt;
    }
    T.ev_inverse_ = std::move(*inv);
  }

  auto change_basis = [&](const SparseRow& v) {
    if (T.ev_identity_) return v;
    std::map<int, Rational> acc;
    for (const auto& [k, q] : v) {
      SparseRow row;
      for (std::size_t j = 0; j < d; ++j) {
        if (T.ev_inverse_[k][j] != 0) row.emplace_back(static_cast<int>(j), T.ev_inverse_[k][j]);
      }
      add_scaled(acc, row, q);
    }
    return to_sparse(acc);
  };

  T.table_.assign(d, std::vector<SparseRow>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (T.basis_[i].end() != T.basis_[j].start()) continue;
      T.table_[i][j] = change_basis(T.act(ev[i], T.basis_[j]));
    }
  }

  // Associativity on all composable triples (other triples vanish on both
  // sides by the vertex grading of the table).
  T.associative_ = true;
  for (std::size_t i = 0; i < d && T.associative_; ++i) {
    for (std::size_t j = 0; j < d && T.associative_; ++j) {
      if (T.basis_[i].end() != T.basis_[j].start()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (T.basis_[j].end() != T.basis_[k].start()) continue;
        std::map<int, Rational> left, right;
        for (const auto& [l, q] : T.table_[i][j]) add_scaled(left, T.table_[l][k], q);
        for (const auto& [l, q] : T.table_[j][k]) add_scaled(right, T.table_[i][l], q);
        if (left != right) {
          T.associative_ = false;
          break;
        }
      }
    }
  }
  if (!T.associative_) {
    rep.problems.push_back("structure constants are not associative");
    return std::nullopt;
  }

  // sum_I E_I is a two-sided unit.
  const Vector unit = T.coords(OmegaElement::scalar(W, FieldElement(1)));
  T.unit_verified_ = true;
  for (std::size_t i = 0; i < d && T.unit_verified_; ++i) {
    Vector e(d, FieldElement(0));
    e[i] = FieldElement(1);
    if (T.multiply(unit, e) != e || T.multiply(e, unit) != e) T.unit_verified_ = false;
  }
  if (!T.unit_verified_) {
    rep.problems.push_back("sum of vertex idempotents is not the identity");
    return std::nullopt;
  }
  rep.closed = true;
  return T;
}

SparseRow CertifiedTable::act_arrow(const SparseRow& v, int arrow) const {
  std::map<int, Rational> acc;
  for (const auto& [i, q] : v) {
    if (basis_[i].end() != quiver_->arrow(arrow).source) continue;
    add_scaled(acc, action_[arrow][i], q);
  }
  return to_sparse(acc);
}

SparseRow CertifiedTable::act(SparseRow v, const Path& p) const {
  // Project onto paths ending at the start of p.
  SparseRow proj;
  for (const auto& [i, q] : v) {
    if (basis_[i].end() == p.start()) proj.emplace_back(i, q);
  }
  v = std::move(proj);
  for (int k = 0; k < p.length() && !v.empty(); ++k) {
    const int a = quiver_->arrow_id(p.vertices[k], p.vertices[k + 1], p.letters[k]);
    if (a < 0) return {};
    v = act_arrow(v, a);
  }
  return v;
}

std::vector<SparseRow> CertifiedTable::rational_coords(const OmegaElement& e, std::size_t degree,
                                                       const Field& field) const {
  std::vector<std::map<int, Rational>> acc(degree);
  for (const auto& [p, c] : e.terms()) {
    if (p.start() >= vertex_rows_.size()) {
      throw std::invalid_argument("path vertex outside the generator set");
    }
    const SparseRow image = act(vertex_rows_[p.start()], p);
    const FieldElement x = field ? c.in(field) : c;
    for (std::size_t k = 0; k < degree; ++k) {
      if (x.coords()[k] != 0) add_scaled(acc[k], image, x.coords()[k]);
    }
  }
  std::vector<SparseRow> out;
  for (auto& a : acc) out.push_back(to_sparse(a));
  return out;
}

Vector CertifiedTable::coords(const OmegaElement& e) const {
  Field field;
  for (const auto& [p, c] : e.terms()) {
    if (c.field()) {
      field = c.field();
      break;
    }
  }
  const std::size_t degree = field ? static_cast<std::size_t>(field->degree()) : 1;
  const auto parts = rational_coords(e, degree, field);
  const std::size_t d = dimension();
  std::vector<std::vector<Rational>> dense(degree, std::vector<Rational>(d, Rational(0)));
  for (std::size_t k = 0; k < degree; ++k) {
    for (const auto& [i, q] : parts[k]) {
      if (ev_identity_) {
        dense[k][i] += q;
      } else {
        for (std::size_t j = 0; j < d; ++j) {
          if (ev_inverse_[i][j] != 0) dense[k][j] += q * ev_inverse_[i][j];
        }
      }
    }
  }
  Vector out(d, FieldElement(0));
  for (std::size_t j = 0; j < d; ++j) {
    if (field) {
      std::vector<Rational> c(degree);
      for (std::size_t k = 0; k < degree; ++k) c[k] = dense[k][j];
      out[j] = FieldElement(field, c);
    } else {
      out[j] = FieldElement(dense[0][j]);
    }
  }
  return out;
}

OmegaElement CertifiedTable::element(const Vector& coords) const {
  OmegaElement e;
  for (std::size_t i = 0; i < coords.size() && i < basis_.size(); ++i) e.add(basis_[i], coords[i]);
  return e;
}

Vector CertifiedTable::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dimension();
  Vector out(d, FieldElement(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero() || table_[i][j].empty()) continue;
      const FieldElement ab = a[i] * b[j];
      for (const auto& [k, q] : table_[i][j]) out[k] += ab * FieldElement(q);
    }
  }
  return out;
}

bool CertifiedTable::is_zero(const OmegaElement& e) const {
  for (const auto& x : coords(e)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<std::size_t> CertifiedTable::index_of(const Path& p) const {
  auto it = basis_index_.find(p);
  if (it == basis_index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace wgalg
