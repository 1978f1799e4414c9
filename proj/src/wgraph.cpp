#include "wgalg/wgraph.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>

#include "wgalg/error.hpp"

namespace wgalg {

// ---------------------------------------------------------------------------
// LaurentMatrix

Matrix LaurentMatrix::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Matrix(n_, n_, field_) : it->second;
}

void LaurentMatrix::add(int k, const Matrix& m) {
  if (m.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, m);
  if (!inserted) {
    it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& other) {
  if (!field_) field_ = other.field_;
  for (const auto& [k, m] : other.terms_) add(k, m);
  return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& other) {
  if (!field_) field_ = other.field_;
  for (const auto& [k, m] : other.terms_) add(k, m.scaled(FieldElement(-1)));
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw ValidationError("Laurent matrix size mismatch");
  LaurentMatrix r(a.n_, a.field_ ? a.field_ : b.field_);
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) r.add(i + j, x * y);
  }
  return r;
}

std::string LaurentMatrix::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : terms_) {
    out += "v^" + std::to_string(k) + ":\n" + m.to_string();
    if (out.back() != '\n') out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_shape(const WGraph& G) {
  const std::size_t n = G.size();
  if (!G.system) throw ValidationError("W-graph without a Coxeter system");
  if (G.labels.size() != n) throw ValidationError("one label per vertex is required");
  if (G.weights.size() != static_cast<std::size_t>(G.system->rank())) {
    throw ValidationError("one weight matrix per generator is required");
  }
  for (const Matrix& m : G.weights) {
    if (m.rows() != n || m.cols() != n) {
      throw ValidationError("weight matrix shape does not match the vertex count");
    }
  }
  for (Subset I : G.labels) {
    if ((I & ~G.system->full()) != 0) throw ValidationError("label outside the generators");
  }
}

Matrix diagonal(std::size_t n, const Field& field, const std::vector<bool>& on) {
  Matrix d(n, n, field);
  for (std::size_t k = 0; k < n; ++k) {
    if (on[k]) d(k, k) = FieldElement::one(field);
  }
  return d;
}

}  // namespace

bool WGraphReport::passed() const {
  if (!condition_a.empty() || !coherence.empty() || !quadratic_failures.empty()) return false;
  for (const auto& b : braid) {
    if (!b.holds) return false;
  }
  return true;
}

std::string WGraphReport::to_string(const CoxeterSystem& W) const {
  std::ostringstream out;
  out << "condition a: " << (condition_a.empty() ? "ok" : "violated") << '\n';
  for (const auto& line : condition_a) out << "  " << line << '\n';
  out << "weight coherence: " << (coherence.empty() ? "ok" : "violated") << '\n';
  for (const auto& line : coherence) out << "  " << line << '\n';
  for (int s : quadratic_failures) out << "quadratic relation fails for " << W.generator(s) << '\n';
  for (const auto& b : braid) {
    out << "braid " << W.generator(b.s) << "," << W.generator(b.t) << " (m="
        << W.order(b.s, b.t) << "): " << (b.holds ? "ok" : "FAILS") << '\n';
  }
  return out.str();
}

LaurentMatrix omega_T_matrix(const WGraph& G, int s) {
  const std::size_t n = G.size();
  std::vector<bool> in(n), out(n);
  for (std::size_t x = 0; x < n; ++x) {
    in[x] = contains(G.labels[x], s);
    out[x] = !in[x];
  }
  LaurentMatrix T(n, G.field);
  T.add(-1, diagonal(n, G.field, in).scaled(FieldElement(-1)));
  T.add(1, diagonal(n, G.field, out));
  Matrix off = G.weights[s];
  for (std::size_t x = 0; x < n; ++x) off(x, x) = FieldElement::zero(G.field);
  T.add(0, off);
  return T;
}

LaurentMatrix omega_T_word(const WGraph& G, const std::vector<int>& word) {
  LaurentMatrix r(G.size(), G.field);
  r.add(0, Matrix::identity(G.size(), G.field));
  for (int s : word) r = r * omega_T_matrix(G, s);
  return r;
}

WGraphReport validate_wgraph(const WGraph& G) {
  check_shape(G);
  const CoxeterSystem& W = *G.system;
  const std::size_t n = G.size();
  WGraphReport rep;
  for (int s = 0; s < W.rank(); ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (G.weights[s](x, y).is_zero()) continue;
        if (!contains(G.labels[x], s) || contains(G.labels[y], s)) {
          rep.condition_a.push_back("m^" + W.generator(s) + "_{" + G.vertices[x] + "," +
                                    G.vertices[y] + "} = " + G.weights[s](x, y).to_string() +
                                    " but " + W.generator(s) + " is not in I(" + G.vertices[x] +
                                    ")\\I(" + G.vertices[y] + ")");
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      int first = -1;
      for (int s = 0; s < W.rank(); ++s) {
        const FieldElement& w = G.weights[s](x, y);
        if (w.is_zero()) continue;
        if (first < 0) {
          first = s;
        } else if (!(w == G.weights[first](x, y))) {
          rep.coherence.push_back("edge " + G.vertices[x] + " <- " + G.vertices[y] + ": m^" +
                                  W.generator(first) + " = " +
                                  G.weights[first](x, y).to_string() + " but m^" +
                                  W.generator(s) + " = " + w.to_string());
        }
      }
    }
  }
  std::vector<LaurentMatrix> T;
  for (int s = 0; s < W.rank(); ++s) T.push_back(omega_T_matrix(G, s));
  LaurentMatrix one(n, G.field);
  one.add(0, Matrix::identity(n, G.field));
  for (int s = 0; s < W.rank(); ++s) {
    LaurentMatrix q(n, G.field);
    q.add(1, Matrix::identity(n, G.field));
    q.add(-1, Matrix::identity(n, G.field).scaled(FieldElement(-1)));
    if (!(T[s] * T[s] == one + q * T[s])) rep.quadratic_failures.push_back(s);
  }
  for (int s = 0; s < W.rank(); ++s) {
    for (int t = s + 1; t < W.rank(); ++t) {
      const int m = W.order(s, t);
      LaurentMatrix a = one, b = one;
      for (int k = 0; k < m; ++k) {
        a = a * T[k % 2 == 0 ? s : t];
        b = b * T[k % 2 == 0 ? t : s];
      }
      rep.braid.push_back({s, t, a == b});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Modules

Matrix OmegaModule::apply(const Path& p) const {
  const std::size_t n = dimension_;
  auto projection = [&](Subset I) {
    std::vector<bool> on(n);
    for (std::size_t k = 0; k < n; ++k) on[k] = labels_[k] == I;
    return on;
  };
  // Entry (a,b) of E_{I0} x_{s1} E_{I1} ...: only rows labelled I0 and
  // columns labelled In survive; multiply block by block.
  Matrix acc = diagonal(n, field_, projection(p.start()));
  for (int k = 0; k < p.length(); ++k) {
    acc = acc * x_[p.letters[k]];
    const auto on = projection(p.vertices[k + 1]);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!on[c]) acc(r, c) = FieldElement::zero(field_);
      }
    }
  }
  return acc;
}

Matrix OmegaModule::apply(const OmegaElement& e) const {
  Matrix r(dimension_, dimension_, field_);
  for (const auto& [p, c] : e.terms()) r += apply(p).scaled(c.in(field_));
  return r;
}

LaurentMatrix OmegaModule::apply(const FreeElement& f) const {
  LaurentMatrix r(dimension_, field_);
  for (const auto& [w, c] : f.terms()) {
    Matrix m = Matrix::identity(dimension_, field_);
    for (int sym : w) m = m * (sym % 2 == 0 ? e_[sym / 2] : x_[sym / 2]);
    for (const auto& [k, a] : c.terms()) r.add(k, m.scaled(a.in(field_)));
  }
  return r;
}

LaurentMatrix OmegaModule::apply(const LaurentOmega& f) const {
  LaurentMatrix r(dimension_, field_);
  for (const auto& [k, e] : f) r.add(k, apply(e));
  return r;
}

OmegaModule omega_module(const WGraph& G, const std::vector<Relation>* relations) {
  check_shape(G);
  OmegaModule M;
  M.dimension_ = G.size();
  M.field_ = G.field;
  M.name_ = G.name;
  M.labels_ = G.labels;
  for (int s = 0; s < G.system->rank(); ++s) {
    std::vector<bool> on(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) on[k] = contains(G.labels[k], s);
    M.e_.push_back(diagonal(G.size(), G.field, on));
    M.x_.push_back(G.weights[s]);
  }
  if (relations) {
    for (const auto& r : *relations) {
      if (!M.apply(r.element).is_zero()) {
        throw InconsistencyError("relation " + r.tag + " does not annihilate the module " +
                                 G.name);
      }
    }
  }
  return M;
}

bool module_nonzero(const std::vector<OmegaModule>& modules, const OmegaElement& e) {
  for (const auto& M : modules) {
    if (!M.apply(e).is_zero()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Corpus and products

namespace {

WGraph one_vertex(const CoxeterPtr& W, const Field& field, const std::string& name, Subset label) {
  WGraph G;
  G.system = W;
  G.field = field;
  G.name = name;
  G.vertices = {"x"};
  G.labels = {label};
  for (int s = 0; s < W->rank(); ++s) G.weights.emplace_back(1, 1, field);
  return G;
}

// Graphs of an irreducible system.
std::vector<WGraph> irreducible_corpus(const CoxeterPtr& W, const Field& field) {
  std::vector<WGraph> out;
  out.push_back(one_vertex(W, field, "triv", 0));
  if (W->rank() == 0) return out;
  out.push_back(one_vertex(W, field, "sign", W->full()));
  if (W->rank() != 2) return out;
  const int m = W->order(0, 1);
  const int count = (m - 1) / 2;
  for (int j = 1; j <= count; ++j) {
    WGraph G;
    G.system = W;
    G.field = field;
    G.name = count == 1 ? "refl" : "refl" + std::to_string(j);
    G.vertices = {"x", "y"};
    G.labels = {Subset(1), Subset(2)};
    const FieldElement w = FieldElement::two_cos(field, j, m);
    G.weights.assign(2, Matrix(2, 2, field));
    G.weights[0](0, 1) = w;
    G.weights[1](1, 0) = w;
    out.push_back(std::move(G));
  }
  if (m % 2 == 0 && m >= 4) {
    // s and t are not conjugate: two more linear characters.
    out.push_back(one_vertex(W, field, "eps_" + W->generator(0), Subset(1)));
    out.push_back(one_vertex(W, field, "eps_" + W->generator(1), Subset(2)));
  }
  return out;
}

// Tensor product over a family of blocks: parts[k] lives on the generators
// blocks[k] of W (in order).
WGraph combine(const std::vector<const WGraph*>& parts,
               const std::vector<std::vector<int>>& blocks, const CoxeterPtr& W,
               const Field& field) {
  WGraph G;
  G.system = W;
  G.field = field;
  std::size_t n = 1;
  for (const WGraph* p : parts) n *= p->size();
  std::vector<std::vector<std::size_t>> tuples(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    std::vector<std::size_t> t(parts.size());
    for (std::size_t k = parts.size(); k-- > 0;) {
      t[k] = rest % parts[k]->size();
      rest /= parts[k]->size();
    }
    tuples[idx] = t;
    std::string vname;
    Subset label = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) vname += ".";
      vname += parts[k]->vertices[t[k]];
      for (std::size_t i = 0; i < blocks[k].size(); ++i) {
        if (contains(parts[k]->labels[t[k]], static_cast<int>(i))) {
          label |= Subset(1) << blocks[k][i];
        }
      }
    }
    G.vertices.push_back(vname);
    G.labels.push_back(label);
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) G.name += ".";
    G.name += parts[k]->name;
  }
  G.weights.assign(W->rank(), Matrix(n, n, field));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      const int s = blocks[k][i];
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          bool same = true;
          for (std::size_t j = 0; j < parts.size() && same; ++j) {
            if (j != k && tuples[a][j] != tuples[b][j]) same = false;
          }
          if (!same) continue;
          const FieldElement& w = parts[k]->weights[i](tuples[a][k], tuples[b][k]);
          if (!w.is_zero()) G.weights[s](a, b) = w.in(field);
        }
      }
    }
  }
  return G;
}

}  // namespace

WGraph tensor_wgraph(const WGraph& G1, const WGraph& G2, const ProductSystem& P) {
  auto W = std::make_shared<const CoxeterSystem>(P.system);
  const Field field = W->field();
  return combine({&G1, &G2}, {P.embed_first, P.embed_second}, W, field);
}

std::vector<WGraph> builtin_wgraphs(const CoxeterPtr& W, Field field) {
  if (!field) field = W->field();
  std::vector<std::vector<int>> blocks =
      W->factors().empty() ? components(*W) : W->factors();
  if (blocks.empty()) blocks.push_back({});
  std::vector<std::vector<WGraph>> corpora;
  for (const auto& block : blocks) {
    Subset mask = 0;
    for (int s : block) mask |= Subset(1) << s;
    auto sub = std::make_shared<const CoxeterSystem>(parabolic(*W, mask));
    corpora.push_back(irreducible_corpus(sub, field));
  }
  std::vector<WGraph> out;
  std::vector<std::size_t> choice(blocks.size(), 0);
  while (true) {
    std::vector<const WGraph*> parts;
    for (std::size_t k = 0; k < blocks.size(); ++k) parts.push_back(&corpora[k][choice[k]]);
    WGraph G = combine(parts, blocks, W, field);
    if (!validate_wgraph(G).passed()) {
      throw InconsistencyError("builtin W-graph " + G.name + " fails validation");
    }
    out.push_back(std::move(G));
    std::size_t k = blocks.size();
    while (k-- > 0) {
      if (++choice[k] < corpora[k].size()) break;
      choice[k] = 0;
    }
    if (k == std::size_t(-1)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

WGraph wgraph_from_json_text(std::string_view text, CoxeterPtr W) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid W-graph JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("W-graph JSON must be an object");
  if (doc.contains("coxeter")) {
    const auto& c = doc["coxeter"];
    CoxeterSystem parsed = c.is_string() ? parse_coxeter(c.get<std::string>())
                                         : coxeter_from_json_text(c.dump());
    if (W && !(parsed == *W)) {
      throw ValidationError("W-graph belongs to a different Coxeter system");
    }
    if (!W) W = std::make_shared<const CoxeterSystem>(std::move(parsed));
  }
  if (!W) throw ValidationError("W-graph JSON needs a \"coxeter\" entry");
  Field field = W->field();
  if (doc.contains("conductor")) {
    const int c = doc["conductor"].get<int>();
    if (c < 1) throw ValidationError("conductor must be positive");
    field = FieldSpec::get(std::lcm(field->conductor(), c));
  }
  WGraph G;
  G.system = W;
  G.field = field;
  G.name = doc.value("name", std::string("wgraph"));
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ValidationError("W-graph JSON needs a \"vertices\" list");
  }
  std::map<std::string, std::size_t> index;
  for (const auto& v : doc["vertices"]) {
    const std::string name = v.get<std::string>();
    if (!index.emplace(name, G.vertices.size()).second) {
      throw ValidationError("duplicate vertex " + name);
    }
    G.vertices.push_back(name);
  }
  const std::size_t n = G.vertices.size();
  G.labels.assign(n, 0);
  if (doc.contains("labels")) {
    for (const auto& [v, gens] : doc["labels"].items()) {
      auto it = index.find(v);
      if (it == index.end()) throw ValidationError("label for unknown vertex " + v);
      for (const auto& g : gens) G.labels[it->second] |= Subset(1) << W->index_of(g.get<std::string>());
    }
  }
  G.weights.assign(W->rank(), Matrix(n, n, field));
  if (doc.contains("weights")) {
    for (const auto& [s, rows] : doc["weights"].items()) {
      const int si = W->index_of(s);
      if (!rows.is_array() || rows.size() != n) {
        throw ValidationError("weight matrix of " + s + " must have " + std::to_string(n) + " rows");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!rows[x].is_array() || rows[x].size() != n) {
          throw ValidationError("weight matrix of " + s + " must have " + std::to_string(n) +
                                " columns");
        }
        for (std::size_t y = 0; y < n; ++y) {
          const auto& entry = rows[x][y];
          const std::string expr = entry.is_string() ? entry.get<std::string>() : entry.dump();
          G.weights[si](x, y) = parse_scalar(expr, field);
        }
      }
    }
  }
  return G;
}

std::string wgraph_to_json_text(const WGraph& G) {
  const CoxeterSystem& W = *G.system;
  nlohmann::ordered_json doc;
  const std::string name = W.name();
  doc["coxeter"] = name.empty() ? nlohmann::ordered_json::parse(coxeter_to_json_text(W))
                                : nlohmann::ordered_json(name);
  if (G.field->conductor() != W.field()->conductor()) doc["conductor"] = G.field->conductor();
  doc["name"] = G.name;
  doc["vertices"] = G.vertices;
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (std::size_t x = 0; x < G.size(); ++x) {
    std::vector<std::string> gens;
    for (int s = 0; s < W.rank(); ++s) {
      if (contains(G.labels[x], s)) gens.push_back(W.generator(s));
    }
    labels[G.vertices[x]] = gens;
  }
  doc["labels"] = labels;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (int s = 0; s < W.rank(); ++s) {
    if (G.weights[s].is_zero()) continue;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < G.size(); ++x) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t y = 0; y < G.size(); ++y) row.push_back(G.weights[s](x, y).to_string());
      rows.push_back(row);
    }
    weights[W.generator(s)] = rows;
  }
  doc["weights"] = weights;
  return doc.dump(2);
}

}  // namespace wgalg
