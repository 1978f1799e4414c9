#include "wgalg/expr.hpp"

#include <cctype>
#include <memory>
#include <vector>

#include "wgalg/error.hpp"

namespace wgalg {

namespace {

struct Node {
  enum Kind { kNum, kV, kTheta, kAdd, kSub, kMul, kNeg, kPow, kGenE, kGenX, kGenT, kVertex, kEdge, kLabel };
  Kind kind;
  std::size_t pos = 0;
  Rational q;
  long exponent = 0;
  std::string name;   // generator name, label, or letter of an edge
  std::string set_i;  // subset texts of E/X
  std::string set_j;
  std::size_t pos_j = 0;
  std::size_t pos_letter = 0;
  std::vector<std::unique_ptr<Node>> kids;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->pos = pos;
  return n;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr n = expr();
    ws();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, pos);
  }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) {
      fail(i_ < s_.size() ? "expected '" + std::string(1, c) + "'"
                          : "expected '" + std::string(1, c) + "' at end of input");
    }
    ++i_;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (true) {
      ws();
      if (peek('+') || peek('-')) {
        const char op = s_[i_];
        const std::size_t pos = i_++;
        NodePtr n = make(op == '+' ? Node::kAdd : Node::kSub, pos);
        n->kids.push_back(std::move(left));
        n->kids.push_back(term());
        left = std::move(n);
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    while (peek('*')) {
      const std::size_t pos = i_++;
      NodePtr n = make(Node::kMul, pos);
      n->kids.push_back(std::move(left));
      n->kids.push_back(factor());
      left = std::move(n);
    }
    return left;
  }

  NodePtr factor() {
    ws();
    if (peek('-')) {
      const std::size_t pos = i_++;
      NodePtr n = make(Node::kNeg, pos);
      n->kids.push_back(factor());
      return n;
    }
    if (peek('+')) {
      ++i_;
      return factor();
    }
    NodePtr base = atom();
    if (peek('^')) {
      const std::size_t pos = i_++;
      ws();
      bool negative = false;
      if (i_ < s_.size() && s_[i_] == '-') {
        negative = true;
        ++i_;
      }
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an integer exponent");
      long e = std::stol(std::string(s_.substr(start, i_ - start)));
      if (negative) {
        if (base->kind != Node::kV) fail_at("negative exponents are only allowed on v", pos);
        e = -e;
      }
      NodePtr n = make(Node::kPow, pos);
      n->exponent = e;
      n->kids.push_back(std::move(base));
      return n;
    }
    return base;
  }

  std::string braced(std::size_t* pos) {
    expect('{');
    *pos = i_;
    const std::size_t close = s_.find('}', i_);
    if (close == std::string_view::npos) fail("unterminated '{'");
    std::string body(s_.substr(i_, close - i_));
    i_ = close + 1;
    return body;
  }

  NodePtr atom() {
    ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t pos = i_;
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodePtr n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string num(s_.substr(pos, i_ - pos));
      const std::size_t save = i_;
      ws();
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        ws();
        const std::size_t d0 = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (d0 == i_) fail("expected a denominator");
        const std::string den(s_.substr(d0, i_ - d0));
        if (Integer(den) == 0) fail_at("zero denominator", d0);
        num += "/" + den;
      } else {
        i_ = save;
      }
      NodePtr n = make(Node::kNum, pos);
      n->q = Rational(num);
      n->q.canonicalize();
      return n;
    }
    if (!ident_start(c)) fail("unexpected character '" + std::string(1, c) + "'");
    while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
    const std::string id(s_.substr(pos, i_ - pos));
    if (id == "v") return make(Node::kV, pos);
    if (id == "theta") return make(Node::kTheta, pos);
    if (id.size() > 2 && id[1] == '_' && (id[0] == 'e' || id[0] == 'x' || id[0] == 'T')) {
      NodePtr n = make(id[0] == 'e' ? Node::kGenE : id[0] == 'x' ? Node::kGenX : Node::kGenT, pos);
      n->name = id.substr(2);
      return n;
    }
    if (id == "E") {
      NodePtr n = make(Node::kVertex, pos);
      std::size_t p = 0;
      n->set_i = braced(&p);
      n->pos = p;
      return n;
    }
    if (id == "X") {
      NodePtr n = make(Node::kEdge, pos);
      std::size_t p = 0;
      n->set_i = braced(&p);
      n->pos = p;
      ws();
      if (s_.substr(i_, 2) != "->") fail("expected '->'");
      i_ += 2;
      n->set_j = braced(&n->pos_j);
      // A letter follows '^' only when it starts with a name character.
      const std::size_t save = i_;
      ws();
      if (i_ < s_.size() && s_[i_] == '^') {
        ++i_;
        ws();
        if (i_ < s_.size() && ident_start(s_[i_])) {
          n->pos_letter = i_;
          const std::size_t st = i_;
          while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
          n->name = std::string(s_.substr(st, i_ - st));
          return n;
        }
      }
      i_ = save;
      return n;
    }
    if (id == "F") {
      NodePtr n = make(Node::kLabel, pos);
      std::size_t p = 0;
      n->name = braced(&p);
      return n;
    }
    fail_at("unknown identifier '" + id + "'", pos);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Subset resolve_subset(const CoxeterSystem& W, const std::string& body, std::size_t pos) {
  Subset set = 0;
  std::size_t k = 0;
  while (k <= body.size()) {
    std::size_t comma = body.find(',', k);
    if (comma == std::string::npos) comma = body.size();
    std::string name = body.substr(k, comma - k);
    const auto a = name.find_first_not_of(" \t\n");
    const auto b = name.find_last_not_of(" \t\n");
    name = a == std::string::npos ? std::string() : name.substr(a, b - a + 1);
    if (name.empty()) {
      if (comma != body.size() || k != 0) throw ParseError("empty generator name", pos + k);
    } else {
      const auto s = W.find(name);
      if (!s) throw ParseError("unknown generator '" + name + "'", pos + k);
      set |= Subset(1) << *s;
    }
    k = comma + 1;
  }
  return set;
}

int resolve_generator(const CoxeterSystem& W, const std::string& name, std::size_t pos) {
  const auto s = W.find(name);
  if (!s) throw ParseError("unknown generator '" + name + "'", pos);
  return *s;
}

template <class Domain>
typename Domain::Value eval(const Node& n, const Domain& d) {
  using V = typename Domain::Value;
  switch (n.kind) {
    case Node::kNum:
      return d.scalar(LaurentPoly(FieldElement(n.q)));
    case Node::kV:
      return d.scalar(LaurentPoly::v());
    case Node::kTheta:
      if (!d.field) throw ParseError("theta needs a field", n.pos);
      return d.scalar(LaurentPoly(FieldElement::theta(d.field)));
    case Node::kAdd:
      return d.add(eval(*n.kids[0], d), eval(*n.kids[1], d));
    case Node::kSub:
      return d.add(eval(*n.kids[0], d), d.neg(eval(*n.kids[1], d)));
    case Node::kMul:
      return d.mul(eval(*n.kids[0], d), eval(*n.kids[1], d));
    case Node::kNeg:
      return d.neg(eval(*n.kids[0], d));
    case Node::kPow: {
      if (n.kids[0]->kind == Node::kV) return d.scalar(LaurentPoly::v(static_cast<int>(n.exponent)));
      const V base = eval(*n.kids[0], d);
      V acc = d.scalar(LaurentPoly(1));
      for (long k = 0; k < n.exponent; ++k) acc = d.mul(acc, base);
      return acc;
    }
    default:
      return d.generator(n);
  }
}

struct LaurentDomain {
  using Value = LaurentPoly;
  Field field;
  Value scalar(const LaurentPoly& c) const { return c; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value generator(const Node& n) const {
    throw ParseError("algebra generators are not allowed in a scalar", n.pos);
  }
};

struct OmegaDomain {
  using Value = LaurentOmega;
  Field field;
  const Quiver* quiver;
  const CoxeterSystem* system;
  const std::map<std::string, OmegaElement>* idempotents;

  Value scalar(const LaurentPoly& c) const {
    Value r;
    for (const auto& [k, a] : c.terms()) r[k] = OmegaElement::scalar(*system, a);
    return r;
  }
  Value add(Value a, const Value& b) const {
    for (const auto& [k, e] : b) a[k] += e;
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    return a;
  }
  Value neg(Value a) const {
    for (auto& [k, e] : a) e = -e;
    return a;
  }
  Value mul(const Value& a, const Value& b) const { return laurent_omega_mult(a, b); }
  const Quiver& need_quiver(const Node& n) const {
    if (!quiver) throw ParseError("algebra generators need a Coxeter system", n.pos);
    return *quiver;
  }
  Value generator(const Node& n) const {
    Value r;
    switch (n.kind) {
      case Node::kGenE:
        r[0] = omega_e(need_quiver(n), resolve_generator(*system, n.name, n.pos + 2));
        break;
      case Node::kGenX:
        r[0] = omega_x(need_quiver(n), resolve_generator(*system, n.name, n.pos + 2));
        break;
      case Node::kGenT:
        return omega_T(need_quiver(n), resolve_generator(*system, n.name, n.pos + 2));
      case Node::kVertex:
        need_quiver(n);
        r[0] = OmegaElement::vertex(resolve_subset(*system, n.set_i, n.pos));
        break;
      case Node::kEdge: {
        const Quiver& Q = need_quiver(n);
        const Subset I = resolve_subset(*system, n.set_i, n.pos);
        const Subset J = resolve_subset(*system, n.set_j, n.pos_j);
        int letter = -1;
        if (!n.name.empty()) {
          letter = resolve_generator(*system, n.name, n.pos_letter);
          if (!contains(I, letter) || contains(J, letter)) {
            throw ParseError("letter " + n.name + " is not in I\\J", n.pos_letter);
          }
        } else if ((I & ~J) == 0) {
          throw ParseError("X{I}->{J} needs I\\J to be nonempty", n.pos);
        }
        r[0] = edge_element(Q, I, J, letter);
        break;
      }
      case Node::kLabel: {
        if (!idempotents) throw ParseError("F{...} needs a certificate", n.pos);
        auto it = idempotents->find(n.name);
        if (it == idempotents->end()) throw ParseError("unknown label '" + n.name + "'", n.pos);
        r[0] = it->second;
        break;
      }
      default:
        break;
    }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
  }
};

struct FreeDomain {
  using Value = FreeElement;
  Field field;
  const CoxeterSystem* system;
  Value scalar(const LaurentPoly& c) const { return FreeElement::unit() * c; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  FreeElement vertex(Subset I) const {
    FreeElement r = FreeElement::unit();
    for (int s = 0; s < system->rank(); ++s) {
      r = r * (contains(I, s) ? FreeElement::e(s) : FreeElement::unit() - FreeElement::e(s));
    }
    return r;
  }
  Value generator(const Node& n) const {
    switch (n.kind) {
      case Node::kGenE:
        return FreeElement::e(resolve_generator(*system, n.name, n.pos + 2));
      case Node::kGenX:
        return FreeElement::x(resolve_generator(*system, n.name, n.pos + 2));
      case Node::kGenT:
        return iota_T(*system, resolve_generator(*system, n.name, n.pos + 2));
      case Node::kVertex:
        return vertex(resolve_subset(*system, n.set_i, n.pos));
      case Node::kEdge: {
        const Subset I = resolve_subset(*system, n.set_i, n.pos);
        const Subset J = resolve_subset(*system, n.set_j, n.pos_j);
        int letter = -1;
        if (!n.name.empty()) {
          letter = resolve_generator(*system, n.name, n.pos_letter);
          if (!contains(I, letter) || contains(J, letter)) {
            throw ParseError("letter " + n.name + " is not in I\\J", n.pos_letter);
          }
        } else {
          const Subset diff = I & ~J;
          if (diff == 0) throw ParseError("X{I}->{J} needs I\\J to be nonempty", n.pos);
          letter = __builtin_ctz(diff);
        }
        return vertex(I) * FreeElement::x(letter) * vertex(J);
      }
      default:
        throw ParseError("F{...} is not available in the free algebra", n.pos);
    }
  }
};

struct HeckeDomain {
  using Value = HeckeElement;
  Field field;
  GroupPtr group;
  Value scalar(const LaurentPoly& c) const { return HeckeElement::one(group) * c; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value generator(const Node& n) const {
    if (n.kind != Node::kGenT) throw ParseError("only T_ generators are Hecke elements", n.pos);
    return HeckeElement::generator(group, resolve_generator(group->system(), n.name, n.pos + 2));
  }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const Field& field) {
  const NodePtr n = Parser(text).parse();
  LaurentPoly r = eval(*n, LaurentDomain{field});
  if (!field) return r;
  LaurentPoly out;
  for (const auto& [k, a] : r.terms()) out += LaurentPoly(a.in(field), k);
  return out;
}

FieldElement parse_scalar(std::string_view text, const Field& field) {
  const LaurentPoly p = parse_laurent(text, field);
  if (p.is_zero()) return field ? FieldElement::zero(field) : FieldElement();
  if (p.terms().size() != 1 || p.terms().begin()->first != 0) {
    throw ParseError("scalar depends on v", 0);
  }
  return p.terms().begin()->second;
}

LaurentOmega parse_omega_laurent(std::string_view text, const ExprContext& ctx) {
  const CoxeterSystem* W = ctx.system ? ctx.system : ctx.quiver ? &ctx.quiver->system() : nullptr;
  if (!W) throw std::invalid_argument("Omega expressions need a Coxeter system");
  OmegaDomain d{ctx.field ? ctx.field : W->field(), ctx.quiver, W, ctx.idempotents};
  const NodePtr n = Parser(text).parse();
  return eval(*n, d);
}

OmegaElement parse_omega(std::string_view text, const ExprContext& ctx) {
  const LaurentOmega r = parse_omega_laurent(text, ctx);
  if (r.empty()) return OmegaElement();
  if (r.size() != 1 || r.begin()->first != 0) {
    throw ParseError("element depends on v; Omega elements have scalar coefficients", 0);
  }
  return r.begin()->second;
}

FreeElement parse_free(std::string_view text, const CoxeterSystem& W, const Field& field) {
  const NodePtr n = Parser(text).parse();
  return eval(*n, FreeDomain{field ? field : W.field(), &W});
}

HeckeElement parse_hecke(std::string_view text, const GroupPtr& group) {
  const NodePtr n = Parser(text).parse();
  HeckeElement r = eval(*n, HeckeDomain{group->system().field(), group});
  return r;
}

OmegaElement edge_element(const Quiver& Q, Subset I, Subset J, int letter) {
  if (letter < 0) {
    const Subset diff = I & ~J;
    if (diff == 0) return OmegaElement();
    letter = __builtin_ctz(diff);
  }
  if (Q.arrow_id(I, J, letter) < 0) return OmegaElement();
  return OmegaElement::arrow(I, J, letter);
}

OmegaElement omega_e(const Quiver& Q, int s) {
  OmegaElement r;
  for (Subset I = 0; I < Subset(Q.vertex_count()); ++I) {
    if (contains(I, s)) r.add(Path::vertex(I), FieldElement(1));
  }
  return r;
}

OmegaElement omega_x(const Quiver& Q, int s) {
  OmegaElement r;
  for (const Arrow& a : Q.arrows()) {
    if (a.letter == s) r.add(Path::arrow(a.source, a.target, s), FieldElement(1));
  }
  return r;
}

LaurentOmega omega_T(const Quiver& Q, int s) {
  LaurentOmega r;
  const OmegaElement e = omega_e(Q, s);
  const OmegaElement one = OmegaElement::scalar(Q.system(), FieldElement(1));
  r[-1] = -e;
  r[1] = one - e;
  r[0] = omega_x(Q, s);
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

LaurentOmega laurent_omega_mult(const LaurentOmega& a, const LaurentOmega& b) {
  LaurentOmega r;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) r[i + j] += x * y;
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

std::string laurent_omega_to_string(const LaurentOmega& a, const CoxeterSystem& W) {
  if (a.empty()) return "0";
  std::string out;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const int k = it->first;
    const std::string v = k == 0 ? "" : k == 1 ? "v*" : "v^" + std::to_string(k) + "*";
    if (!out.empty()) out += " + ";
    out += v + "(" + it->second.to_string(W) + ")";
  }
  if (a.size() == 1 && a.begin()->first == 0) return a.begin()->second.to_string(W);
  return out;
}

}  // namespace wgalg
