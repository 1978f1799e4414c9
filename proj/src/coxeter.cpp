#include "wgalg/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "wgalg/error.hpp"

namespace wgalg {

namespace {

// Generator letters for successive factors of a builtin product. Letters that
// clash with the expression grammar (e, x, v, X, E) are skipped.
constexpr std::string_view kFactorLetters = "stuwyzabcdfghjklmnopqr";

bool valid_generator_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators,
                             std::vector<std::vector<int>> matrix,
                             std::vector<std::vector<int>> factors,
                             std::vector<std::string> factor_types)
    : generators_(std::move(generators)),
      matrix_(std::move(matrix)),
      factors_(std::move(factors)),
      factor_types_(std::move(factor_types)) {
  const std::size_t n = generators_.size();
  if (n > 20) throw SizeError("at most 20 generators are supported");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!valid_generator_name(g)) throw ValidationError("invalid generator name '" + g + "'");
    if (g == "theta" || g == "v") {
      throw ValidationError("generator name '" + g + "' is reserved");
    }
    if (!seen.insert(g).second) throw ValidationError("duplicate generator '" + g + "'");
  }
  if (matrix_.size() != n) throw ValidationError("Coxeter matrix has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) {
      throw ValidationError("Coxeter matrix row " + std::to_string(i) + " has wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int m = matrix_[i][j];
      const std::string where = "m(" + generators_[i] + "," + generators_[j] + ")";
      if (i == j && m != 1) throw ValidationError(where + " must be 1");
      if (i != j && m <= 0) throw ValidationError(where + " is infinite or invalid");
      if (i != j && m < 2) throw ValidationError(where + " must be at least 2");
      if (m != matrix_[j][i]) throw ValidationError("Coxeter matrix is not symmetric at " + where);
    }
  }
  if (!factors_.empty()) {
    std::vector<int> count(n, 0);
    for (const auto& f : factors_) {
      if (f.empty()) throw ValidationError("empty factor in product declaration");
      for (int s : f) {
        if (s < 0 || static_cast<std::size_t>(s) >= n) {
          throw ValidationError("product declaration refers to an unknown generator");
        }
        ++count[s];
      }
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; })) {
      throw ValidationError("product declaration is not a partition of the generators");
    }
    for (auto& f : factors_) std::sort(f.begin(), f.end());
    factor_types_.resize(factors_.size());
    // Generators in different factors must commute.
    std::vector<int> block(n);
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      for (int s : factors_[k]) block[s] = static_cast<int>(k);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (block[i] != block[j] && matrix_[i][j] != 2) {
          throw InconsistentProductError("declared factors are not commuting: " +
                                         generators_[i] + ", " + generators_[j]);
        }
      }
    }
  } else {
    factor_types_.clear();
  }
}

std::string CoxeterSystem::name() const {
  if (factor_types_.empty()) return {};
  std::string out;
  for (const auto& t : factor_types_) {
    if (t.empty()) return {};
    if (!out.empty()) out += 'x';
    out += t;
  }
  return out;
}

std::optional<int> CoxeterSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int CoxeterSystem::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGeneratorError("unknown generator '" + std::string(name) + "'");
}

Field CoxeterSystem::field() const {
  std::vector<int> orders;
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) orders.push_back(matrix_[i][j]);
  }
  return make_field(orders);
}

std::string CoxeterSystem::subset_name(Subset set) const {
  std::string out = "{";
  bool first = true;
  for (int s = 0; s < rank(); ++s) {
    if (!contains(set, s)) continue;
    if (!first) out += ',';
    out += generators_[s];
    first = false;
  }
  return out + "}";
}

Subset CoxeterSystem::parse_subset(std::string_view text) const {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
  ++i;
  Subset set = 0;
  skip();
  if (i < text.size() && text[i] == '}') return set;
  while (true) {
    skip();
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
    }
    if (start == i) throw ParseError("expected generator name", start);
    const auto idx = find(text.substr(start, i - start));
    if (!idx) {
      throw ParseError("unknown generator '" + std::string(text.substr(start, i - start)) + "'",
                       start);
    }
    set |= Subset(1) << *idx;
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == '}') return set;
    throw ParseError("expected ',' or '}'", i);
  }
}

// ---------------------------------------------------------------------------

namespace {

struct BuiltinType {
  std::string name;
  std::vector<std::vector<int>> matrix;
};

BuiltinType builtin_type(char kind, int rank, int m) {
  BuiltinType t;
  auto chain = [&](int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = 3;
    return a;
  };
  switch (kind) {
    case 'A':
      t.name = "A" + std::to_string(rank);
      t.matrix = chain(rank);
      break;
    case 'B':
      t.name = "B" + std::to_string(rank);
      t.matrix = chain(rank);
      t.matrix[rank - 2][rank - 1] = t.matrix[rank - 1][rank - 2] = 4;
      break;
    default:  // dihedral
      t.name = kind == 'G' ? "G2" : "I2(" + std::to_string(m) + ")";
      t.matrix = {{1, m}, {m, 1}};
      break;
  }
  return t;
}

}  // namespace

CoxeterSystem builtin_coxeter(std::string_view text) {
  std::size_t i = 0;
  auto read_int = [&](const char* what) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError(std::string("expected ") + what, start);
    if (i - start > 4) throw ParseError(std::string(what) + " too large", start);
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  std::vector<BuiltinType> types;
  while (true) {
    if (i >= text.size()) throw ParseError("expected a Coxeter type", i);
    const std::size_t start = i;
    const char kind = text[i++];
    if (kind == 'A') {
      types.push_back(builtin_type('A', read_int("rank"), 0));
    } else if (kind == 'B') {
      const int n = read_int("rank");
      if (n < 2) throw ParseError("type B needs rank at least 2", start);
      types.push_back(builtin_type('B', n, 0));
    } else if (kind == 'G') {
      if (i >= text.size() || text[i] != '2') throw ParseError("expected G2", start);
      ++i;
      types.push_back(builtin_type('G', 2, 6));
    } else if (kind == 'I') {
      if (text.substr(i, 2) != "2(") throw ParseError("expected I2(m)", start);
      i += 2;
      const int m = read_int("dihedral order");
      if (m < 2) throw ParseError("dihedral order must be at least 2", start);
      if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      // An optional explicit rank must be 2.
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        const std::size_t rpos = i;
        if (read_int("rank") != 2) throw ParseError("dihedral type has rank 2", rpos);
      }
      types.push_back(builtin_type('I', 2, m));
    } else {
      throw ParseError("unknown Coxeter type '" + std::string(1, kind) + "'", start);
    }
    if (i == text.size()) break;
    if (text[i] != 'x') throw ParseError("expected 'x' or end of name", i);
    ++i;
  }
  if (types.size() > kFactorLetters.size()) throw SizeError("too many factors");

  std::vector<std::string> gens;
  std::vector<std::vector<int>> factors;
  std::vector<std::string> names;
  std::size_t total = 0;
  for (const auto& t : types) total += t.matrix.size();
  if (total > 20) throw SizeError("at most 20 generators are supported");
  std::vector<std::vector<int>> matrix(total, std::vector<int>(total, 2));
  std::size_t offset = 0;
  for (std::size_t k = 0; k < types.size(); ++k) {
    const auto& t = types[k];
    const std::size_t n = t.matrix.size();
    std::vector<int> factor;
    for (std::size_t a = 0; a < n; ++a) {
      gens.push_back(std::string(1, kFactorLetters[k]) + std::to_string(a + 1));
      factor.push_back(static_cast<int>(offset + a));
      for (std::size_t b = 0; b < n; ++b) matrix[offset + a][offset + b] = t.matrix[a][b];
    }
    offset += n;
    // Rank-zero factors contribute no generators and are dropped from the
    // factorization metadata.
    if (!factor.empty()) {
      factors.push_back(std::move(factor));
      names.push_back(t.name);
    }
  }
  return CoxeterSystem(std::move(gens), std::move(matrix), std::move(factors), std::move(names));
}

CoxeterSystem coxeter_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw ParseError("Coxeter document must be a JSON object", 0);
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("Coxeter document needs a \"generators\" array");
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError("Coxeter document needs a \"matrix\" array");
  }
  std::vector<std::string> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    gens.push_back(g.get<std::string>());
  }
  std::vector<std::vector<int>> matrix;
  for (std::size_t i = 0; i < doc["matrix"].size(); ++i) {
    const auto& row = doc["matrix"][i];
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<int> r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& x = row[j];
      if (x.is_number_integer()) {
        const auto m = x.get<long long>();
        if (m > 100000) throw ValidationError("Coxeter matrix entry too large");
        r.push_back(static_cast<int>(m));
      } else if (x.is_null() || (x.is_string() && (x == "inf" || x == "infinity")) ||
                 (x.is_number() && x.get<double>() == 0)) {
        throw ValidationError("infinite Coxeter matrix entry at matrix[" + std::to_string(i) +
                              "][" + std::to_string(j) + "]; only finite groups are supported");
      } else {
        throw ParseError("matrix[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] must be an integer");
      }
    }
    matrix.push_back(std::move(r));
  }
  std::vector<std::vector<int>> factors;
  if (doc.contains("product") && !doc["product"].is_null()) {
    if (!doc["product"].is_array()) throw ParseError("\"product\" must be an array of arrays");
    for (const auto& block : doc["product"]) {
      if (!block.is_array()) throw ParseError("\"product\" must be an array of arrays");
      std::vector<int> f;
      for (const auto& g : block) {
        if (!g.is_string()) throw ParseError("\"product\" entries must be generator names");
        const auto it = std::find(gens.begin(), gens.end(), g.get<std::string>());
        if (it == gens.end()) {
          throw UnknownGeneratorError("unknown generator '" + g.get<std::string>() +
                                      "' in product declaration");
        }
        f.push_back(static_cast<int>(it - gens.begin()));
      }
      factors.push_back(std::move(f));
    }
  }
  CoxeterSystem W(std::move(gens), std::move(matrix), std::move(factors));
  components(W);  // validates the declared split
  return W;
}

std::string coxeter_to_json_text(const CoxeterSystem& W) {
  nlohmann::json doc;
  doc["generators"] = W.generators();
  doc["matrix"] = W.matrix();
  if (W.factors().size() >= 2) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& f : W.factors()) {
      nlohmann::json b = nlohmann::json::array();
      for (int s : f) b.push_back(W.generator(s));
      blocks.push_back(b);
    }
    doc["product"] = blocks;
  }
  return doc.dump();
}

CoxeterSystem parse_coxeter(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string_view body = text.substr(i, j - i);
  if (!body.empty() && body.front() == '{') return coxeter_from_json_text(body);
  try {
    return builtin_coxeter(body);
  } catch (const ParseError& e) {
    // Re-anchor positions to the untrimmed text.
    if (e.position() == std::string::npos) throw;
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" (at position"));
    throw ParseError(msg, e.position() + i);
  }
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> components(const CoxeterSystem& W) {
  const int n = W.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (W.order(a, b) >= 3) parent[root(a)] = root(b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < n; ++a) groups[root(a)].push_back(a);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  if (!W.factors().empty()) {
    std::vector<int> block(n, -1);
    for (std::size_t k = 0; k < W.factors().size(); ++k) {
      for (int s : W.factors()[k]) block[s] = static_cast<int>(k);
    }
    for (const auto& c : out) {
      for (int s : c) {
        if (block[s] != block[c.front()]) {
          throw InconsistentProductError("declared factorization splits the component containing " +
                                         W.generator(c.front()) + " and " + W.generator(s));
        }
      }
    }
  }
  return out;
}

CoxeterSystem parabolic(const CoxeterSystem& W, Subset generators) {
  std::vector<int> keep;
  std::vector<int> pos(W.rank(), -1);
  for (int s = 0; s < W.rank(); ++s) {
    if (contains(generators, s)) {
      pos[s] = static_cast<int>(keep.size());
      keep.push_back(s);
    }
  }
  std::vector<std::string> gens;
  std::vector<std::vector<int>> matrix(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    gens.push_back(W.generator(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) matrix[a][b] = W.order(keep[a], keep[b]);
  }
  // Factors entirely inside the subset keep their type; partially kept
  // factors lose it.
  std::vector<std::vector<int>> factors;
  std::vector<std::string> types;
  for (std::size_t k = 0; k < W.factors().size(); ++k) {
    std::vector<int> f;
    for (int s : W.factors()[k]) {
      if (pos[s] >= 0) f.push_back(pos[s]);
    }
    if (f.empty()) continue;
    types.push_back(f.size() == W.factors()[k].size() ? W.factor_types()[k] : std::string());
    factors.push_back(std::move(f));
  }
  return CoxeterSystem(std::move(gens), std::move(matrix), std::move(factors), std::move(types));
}

std::pair<Subset, Subset> binary_split(const CoxeterSystem& W) {
  std::vector<std::vector<int>> blocks = W.factors();
  if (blocks.size() < 2) blocks = components(W);
  else components(W);
  if (blocks.size() < 2) {
    throw NotAProductError("Coxeter system " +
                           (W.name().empty() ? std::string("(matrix)") : W.name()) +
                           " is irreducible and has no product decomposition");
  }
  Subset second = 0;
  for (int s : blocks.back()) second |= Subset(1) << s;
  return {W.full() & ~second, second};
}

ProductSystem product(const CoxeterSystem& first, const CoxeterSystem& second) {
  const int n1 = first.rank();
  const int n2 = second.rank();
  ProductSystem out;
  for (int s = 0; s < n1; ++s) out.embed_first.push_back(s);
  for (int s = 0; s < n2; ++s) out.embed_second.push_back(n1 + s);
  if (!first.name().empty() && !second.name().empty()) {
    out.system = builtin_coxeter(first.name() + "x" + second.name());
    return out;
  }
  std::vector<std::string> gens = first.generators();
  for (const auto& g : second.generators()) {
    gens.push_back(first.find(g) ? g + "_2" : g);
  }
  std::vector<std::vector<int>> matrix(n1 + n2, std::vector<int>(n1 + n2, 2));
  for (int a = 0; a < n1 + n2; ++a) matrix[a][a] = 1;
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n1; ++b) matrix[a][b] = first.order(a, b);
  }
  for (int a = 0; a < n2; ++a) {
    for (int b = 0; b < n2; ++b) matrix[n1 + a][n1 + b] = second.order(a, b);
  }
  std::vector<std::vector<int>> factors;
  std::vector<std::string> types;
  auto add_factors = [&](const CoxeterSystem& W, int offset) {
    if (W.factors().empty()) {
      std::vector<int> f;
      for (int s = 0; s < W.rank(); ++s) f.push_back(offset + s);
      if (!f.empty()) {
        factors.push_back(std::move(f));
        types.emplace_back();
      }
      return;
    }
    for (std::size_t k = 0; k < W.factors().size(); ++k) {
      std::vector<int> f;
      for (int s : W.factors()[k]) f.push_back(offset + s);
      factors.push_back(std::move(f));
      types.push_back(W.factor_types()[k]);
    }
  };
  add_factors(first, 0);
  add_factors(second, n1);
  out.system = CoxeterSystem(std::move(gens), std::move(matrix), std::move(factors),
                             std::move(types));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Reflection representation: rho(s) alpha_t = alpha_t + 2cos(pi/m_st) alpha_s.
// Matrices act on column vectors in the basis of simple roots.
std::vector<std::vector<FieldElement>> reflection_coefficients(const CoxeterSystem& W,
                                                               const Field& K) {
  const int n = W.rank();
  std::vector<std::vector<FieldElement>> c(n, std::vector<FieldElement>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) c[s][t] = FieldElement::two_cos(K, 1, W.order(s, t));
  }
  return c;
}

std::vector<Rational> matrix_key(const Matrix& M) {
  std::vector<Rational> key;
  for (const auto& x : M.entries()) {
    for (const auto& q : x.coords()) key.push_back(q);
  }
  return key;
}

struct KeyLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterPtr W, std::size_t cap) : system_(std::move(W)) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const CoxeterSystem& S = *system_;
  const int n = S.rank();
  const Field K = S.field();
  const auto c = reflection_coefficients(S, K);

  // M * rho(s): column t becomes M[:,t] + c_st M[:,s].
  auto times_gen = [&](const Matrix& M, int s) {
    Matrix R = M;
    for (int t = 0; t < n; ++t) {
      if (c[s][t].is_zero()) continue;
      for (int r = 0; r < n; ++r) {
        if (!M(r, s).is_zero()) R(r, t) += c[s][t] * M(r, s);
      }
    }
    return R;
  };
  // rho(s) * M: row s becomes -M[s,:] + sum_{t != s} c_st M[t,:].
  auto gen_times = [&](int s, const Matrix& M) {
    Matrix R = M;
    for (int j = 0; j < n; ++j) {
      FieldElement x = -M(s, j);
      for (int t = 0; t < n; ++t) {
        if (t != s && !c[s][t].is_zero() && !M(t, j).is_zero()) x += c[s][t] * M(t, j);
      }
      R(s, j) = x;
    }
    return R;
  };

  std::map<std::vector<Rational>, std::size_t, KeyLess> index;
  elements_.push_back(GroupElement{});
  matrices_.push_back(Matrix::identity(n, K));
  index.emplace(matrix_key(matrices_.front()), 0);
  right_.emplace_back(n, SIZE_MAX);

  // Breadth-first by length. Within a level, parents are visited in ShortLex
  // order of their normal forms and generators ascending, so the first
  // discovery of an element yields its ShortLex-minimal word.
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int s = 0; s < n; ++s) {
        Matrix M = times_gen(matrices_[w], s);
        auto key = matrix_key(M);
        auto it = index.find(key);
        if (it != index.end()) {
          right_[w][s] = it->second;
          continue;
        }
        if (elements_.size() >= cap) throw GroupTooLargeError(cap, elements_.size());
        GroupElement g;
        g.word = elements_[w].word;
        g.word.push_back(s);
        g.length = elements_[w].length + 1;
        const std::size_t id = elements_.size();
        elements_.push_back(std::move(g));
        matrices_.push_back(std::move(M));
        right_.emplace_back(n, SIZE_MAX);
        index.emplace(std::move(key), id);
        right_[w][s] = id;
      }
    }
    level_begin = level_end;
    level_end = elements_.size();
  }

  left_.assign(elements_.size(), std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      auto it = index.find(matrix_key(gen_times(s, matrices_[w])));
      if (it == index.end()) throw InconsistencyError("reflection representation not closed");
      left_[w][s] = it->second;
    }
  }
}

std::size_t CoxeterGroup::evaluate(const std::vector<int>& word) const {
  std::size_t w = 0;
  for (int s : word) {
    if (s < 0 || s >= system_->rank()) throw UnknownGeneratorError("generator index out of range");
    w = right_[w][s];
  }
  return w;
}

Matrix CoxeterGroup::generator_matrix(int s) const {
  return matrices_[evaluate({s})];
}

std::vector<GroupElement> enumerate_elements(const CoxeterSystem& W, std::size_t cap) {
  return CoxeterGroup(std::make_shared<const CoxeterSystem>(W), cap).elements();
}

std::string word_to_string(const CoxeterSystem& W, const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += W.generator(word[i]);
  }
  return out;
}

}  // namespace wgalg
