#include "wgalg/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wgalg/error.hpp"
#include "wgalg/expr.hpp"
#include "wgalg/freealg.hpp"

namespace wgalg {

// ---------------------------------------------------------------------------
// ProductStructure

ProductStructure::ProductStructure(CoxeterPtr W)
    : ProductStructure(W, binary_split(*W).first, binary_split(*W).second) {}

ProductStructure::ProductStructure(CoxeterPtr W, Subset first, Subset second)
    : system_(std::move(W)) {
  if ((first & second) != 0 || (first | second) != system_->full()) {
    throw ValidationError("product split must partition the generators");
  }
  for (int s = 0; s < system_->rank(); ++s) {
    for (int t = 0; t < system_->rank(); ++t) {
      if (contains(first, s) && contains(second, t) && system_->order(s, t) != 2) {
        throw ValidationError("generators " + system_->generator(s) + " and " +
                              system_->generator(t) + " of different factors do not commute");
      }
    }
  }
  part_[0] = first;
  part_[1] = second;
  quiver_ = std::make_unique<Quiver>(system_);
  local_.assign(system_->rank(), -1);
  for (int k = 0; k < 2; ++k) {
    factor_[k] = std::make_shared<const CoxeterSystem>(parabolic(*system_, part_[k]));
    factor_quiver_[k] = std::make_unique<Quiver>(factor_[k]);
    for (int s = 0; s < system_->rank(); ++s) {
      if (contains(part_[k], s)) {
        local_[s] = static_cast<int>(embed_[k].size());
        embed_[k].push_back(s);
      }
    }
  }
}

Subset ProductStructure::lift(int which, Subset local) const {
  Subset out = 0;
  const auto& e = embed_[which - 1];
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (contains(local, static_cast<int>(k))) out |= Subset(1) << e[k];
  }
  return out;
}

Subset ProductStructure::project(int which, Subset I) const {
  Subset out = 0;
  const auto& e = embed_[which - 1];
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (contains(I, e[k])) out |= Subset(1) << k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement

bool TensorElement::KeyOrder::operator()(const Key& a, const Key& b) const {
  PathOrder less;
  if (less(a.first, b.first)) return true;
  if (less(b.first, a.first)) return false;
  return less(a.second, b.second);
}

TensorElement TensorElement::pure(const OmegaElement& a, const OmegaElement& b) {
  TensorElement t;
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) t.add(p, q, c * d);
  }
  return t;
}

void TensorElement::add(const Path& a, const Path& b, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.first.end() != kb.first.start() || ka.second.end() != kb.second.start()) continue;
      out.add(concat(ka.first, kb.first), concat(ka.second, kb.second), ca * cb);
    }
  }
  return out;
}

std::string TensorElement::to_string(const CoxeterSystem& W1, const CoxeterSystem& W2) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    FieldElement coef = c;
    const bool negative = coef.is_rational() && coef.rational_part() < 0;
    if (negative) coef = -coef;
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (!coef.is_one()) {
      out << (coef.needs_parentheses() ? "(" + coef.to_string() + ")" : coef.to_string()) << "*";
    }
    out << path_to_string(k.first, W1) << " (x) " << path_to_string(k.second, W2);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Embeddings and tau

namespace {

std::vector<Subset> submasks(Subset mask) {
  std::vector<Subset> out;
  Subset sub = mask;
  while (true) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

OmegaElement embed_vertex(const ProductStructure& P, int which, Subset A) {
  OmegaElement out;
  const Subset base = P.lift(which, A);
  for (Subset C : submasks(P.part(3 - which))) out.add(Path::vertex(base | C), FieldElement(1));
  return out;
}

OmegaElement embed_arrow(const ProductStructure& P, int which, Subset A, Subset B, int letter) {
  OmegaElement out;
  const Subset a = P.lift(which, A);
  const Subset b = P.lift(which, B);
  const int s = P.global(which, letter);
  const auto other = submasks(P.part(3 - which));
  for (Subset C : other) {
    for (Subset D : other) {
      if (P.quiver().arrow_id(a | C, b | D, s) >= 0) {
        out.add(Path::arrow(a | C, b | D, s), FieldElement(1));
      }
    }
  }
  return out;
}

}  // namespace

OmegaElement parabolic_embed(const ProductStructure& P, int which, const OmegaElement& e) {
  const Field field = P.system().field();
  OmegaElement out;
  for (const auto& [p, c] : e.terms()) {
    OmegaElement image = embed_vertex(P, which, p.start());
    for (int k = 0; k < p.length(); ++k) {
      image = image * embed_arrow(P, which, p.vertices[k], p.vertices[k + 1], p.letters[k]);
      if (image.is_zero()) break;
    }
    out += image * c.in(field);
  }
  return out;
}

TensorElement tau_map(const ProductStructure& P, const OmegaElement& e) {
  TensorElement out;
  for (const auto& [p, c] : e.terms()) {
    Path left = Path::vertex(P.project(1, p.start()));
    Path right = Path::vertex(P.project(2, p.start()));
    bool zero = false;
    for (int k = 0; k < p.length() && !zero; ++k) {
      const Subset I = p.vertices[k];
      const Subset J = p.vertices[k + 1];
      const int s = p.letters[k];
      const int which = P.side(s);
      if (P.project(3 - which, I) != P.project(3 - which, J)) {
        zero = true;
        break;
      }
      Path& target = which == 1 ? left : right;
      target.vertices.push_back(P.project(which, J));
      target.letters.push_back(static_cast<std::uint8_t>(P.local(s)));
    }
    if (!zero) out.add(left, right, c);
  }
  return out;
}

std::vector<std::pair<Subset, Subset>> kernel_generators(const ProductStructure& P) {
  std::vector<std::pair<Subset, Subset>> out;
  for (const auto& [I, J] : P.quiver().edges()) {
    if (P.quiver().classify(I, J) != EdgeKind::kInclusion) continue;
    bool proper = true;
    for (int w = 1; w <= 2; ++w) {
      const Subset a = P.project(w, I);
      const Subset b = P.project(w, J);
      proper = proper && a != b && (a & b) == b;
    }
    if (proper) out.emplace_back(I, J);
  }
  return out;
}

std::vector<OmegaElement> kernel_generator_elements(const ProductStructure& P) {
  std::vector<OmegaElement> out;
  for (const auto& [I, J] : kernel_generators(P)) {
    for (int s = 0; s < P.system().rank(); ++s) {
      if (P.quiver().arrow_id(I, J, s) >= 0) out.push_back(OmegaElement::arrow(I, J, s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zero test in the tensor product

namespace {

// Right cofactors grouped by left path.
std::map<Path, OmegaElement, PathOrder> group_left(const TensorElement& t) {
  std::map<Path, OmegaElement, PathOrder> out;
  for (const auto& [k, c] : t.terms()) out[k.first].add(k.second, c);
  return out;
}

Field common(const Field& a, const Field& b) {
  if (!a) return b;
  if (!b) return a;
  return FieldSpec::get(std::lcm(a->conductor(), b->conductor()));
}

Verdict tables_verdict(const CertifiedTable& t1, const CertifiedTable& t2,
                                     const TensorElement& t, const Field& field) {
  const std::size_t n2 = t2.dimension();
  std::vector<FieldElement> M(t1.dimension() * n2, FieldElement::zero(field));
  for (const auto& [p, right] : group_left(t)) {
    const Vector u = t1.coords(OmegaElement::from_path(p));
    const Vector w = t2.coords(right);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      const FieldElement ui = u[i].in(field);
      for (std::size_t j = 0; j < n2; ++j) {
        if (!w[j].is_zero()) M[i * n2 + j] += ui * w[j].in(field);
      }
    }
  }
  for (const auto& m : M) {
    if (!m.is_zero()) return Verdict::kNonzero;
  }
  return Verdict::kZero;
}

}  // namespace

Verdict TensorTester::verdict(const TensorElement& t) const {
  if (t.is_zero()) return Verdict::kZero;
  const Field field = common(first_.field(), second_.field());
  if (first_.table() && second_.table()) {
    return tables_verdict(*first_.table(), *second_.table(), t, field);
  }
  // Reduce the left components, collect cofactors, reduce those.
  try {
    std::map<Path, OmegaElement, PathOrder> cofactors;
    for (const auto& [p, right] : group_left(t)) {
      const OmegaElement nf = first_.reduce(OmegaElement::from_path(p));
      for (const auto& [b, c] : nf.terms()) {
        OmegaElement scaled;
        for (const auto& [q, d] : right.terms()) scaled.add(q, c.in(field) * d.in(field));
        cofactors[b] += scaled;
      }
    }
    bool all_zero = true;
    bool proven_nonzero = false;
    for (const auto& [b, right] : cofactors) {
      const Verdict v = second_.verdict(right);
      if (v == Verdict::kZero) continue;
      all_zero = false;
      // Over the table basis the left paths are independent.
      if (v == Verdict::kNonzero && first_.table()) proven_nonzero = true;
    }
    if (all_zero) return Verdict::kZero;
    if (proven_nonzero) return Verdict::kNonzero;
  } catch (const BoundError&) {
  }
  // A pair of modules on which the element acts nontrivially.
  const auto groups = group_left(t);
  for (const auto& M1 : first_.modules()) {
    for (const auto& M2 : second_.modules()) {
      const std::size_t d1 = M1.dimension() * M1.dimension();
      const std::size_t d2 = M2.dimension() * M2.dimension();
      std::vector<FieldElement> acc(d1 * d2, FieldElement::zero(field));
      for (const auto& [p, right] : groups) {
        const auto a = flatten(M1.apply(p));
        const auto b = flatten(M2.apply(right));
        for (std::size_t i = 0; i < d1; ++i) {
          if (a[i].is_zero()) continue;
          const FieldElement ai = a[i].in(field);
          for (std::size_t j = 0; j < d2; ++j) {
            if (!b[j].is_zero()) acc[i * d2 + j] += ai * b[j].in(field);
          }
        }
      }
      for (const auto& x : acc) {
        if (!x.is_zero()) return Verdict::kNonzero;
      }
    }
  }
  return Verdict::kUnknown;
}

// ---------------------------------------------------------------------------
// Kernel of tau

Report verify_kernel(const ProductStructure& P, const OmegaContext& omega,
                     const OmegaContext& first, const OmegaContext& second) {
  const CoxeterSystem& W = P.system();
  const Quiver& Q = P.quiver();
  Report report;
  report.title = "kernel of tau for " + W.name() + " at L=" + std::to_string(omega.bound());
  const auto kernel = kernel_generator_elements(P);
  const TensorTester tester(first, second);

  Check gens{"kernel-generators-annihilated", "tau kills every kernel generator"};
  for (const auto& g : kernel) {
    const TensorElement t = tau_map(P, g);
    gens.note(t.is_zero() ? Outcome::kPass : Outcome::kFail,
              "tau(" + g.to_string(W) + ") = " +
                  t.to_string(*P.factor(1), *P.factor(2)));
  }
  gens.info(std::to_string(kernel.size()) + " kernel generators");
  report.checks.push_back(std::move(gens));

  Check exact{"kernel-exactly-proper-inclusions",
              "tau is nonzero on every other arrow"};
  std::size_t others = 0;
  for (const Arrow& a : Q.arrows()) {
    const OmegaElement x = OmegaElement::arrow(a.source, a.target, a.letter);
    if (std::find(kernel.begin(), kernel.end(), x) != kernel.end()) continue;
    ++others;
    const Verdict v = tester.verdict(tau_map(P, x));
    exact.note(v == Verdict::kNonzero ? Outcome::kPass
               : v == Verdict::kZero  ? Outcome::kFail
                                      : Outcome::kInconclusive,
               "tau(" + x.to_string(W) + ") is " + verdict_name(v));
  }
  exact.info(std::to_string(others) + " arrows outside the kernel");
  report.checks.push_back(std::move(exact));

  Check ideal{"kernel-commutators-in-ideal",
              "[e_s,x_t] lies in the ideal of the kernel generators"};
  {
    ContextOptions opts;
    opts.bound = omega.bound();
    opts.source = omega.source();
    opts.build_table = false;
    opts.load_modules = false;
    for (const auto& g : kernel) opts.extra.push_back(Relation{g, "KER"});
    OmegaContext quotient(P.system_ptr(), opts);
    for (int s = 0; s < W.rank(); ++s) {
      for (int t = 0; t < W.rank(); ++t) {
        if (P.side(s) == P.side(t)) continue;
        const FreeElement c = commutator(FreeElement::e(s), FreeElement::x(t));
        const OmegaElement paths = expand_to_paths(c, Q);
        bool zero = false;
        try {
          zero = quotient.oracle().reduce(paths).zero;
        } catch (const BoundError&) {
        }
        ideal.note(zero ? Outcome::kPass : Outcome::kInconclusive,
                   "[e_" + W.generator(s) + ",x_" + W.generator(t) +
                       "] not reduced to zero at the bound");
      }
    }
    ideal.info("verified at bound L=" + std::to_string(omega.bound()));
  }
  report.checks.push_back(std::move(ideal));

  Check cases{"kernel-four-case", "E_I [e_s,x_t] E_J follows the four cases"};
  for (int s = 0; s < W.rank(); ++s) {
    for (int t = 0; t < W.rank(); ++t) {
      if (P.side(s) != 1 || P.side(t) != 2) continue;
      const OmegaElement c =
          expand_to_paths(commutator(FreeElement::e(s), FreeElement::x(t)), Q);
      for (Subset I = 0; I < Q.vertex_count(); ++I) {
        for (Subset J = 0; J < Q.vertex_count(); ++J) {
          const OmegaElement block = OmegaElement::vertex(I) * c * OmegaElement::vertex(J);
          const OmegaElement x = edge_element(Q, I, J, t);
          OmegaElement expected;
          if (contains(I, s) && !contains(J, s)) expected = x;
          if (contains(J, s) && !contains(I, s)) expected = -x;
          cases.note(block == expected ? Outcome::kPass : Outcome::kFail,
                     "E" + W.subset_name(I) + "[e_" + W.generator(s) + ",x_" +
                         W.generator(t) + "]E" + W.subset_name(J) + " = " +
                         block.to_string(W));
        }
      }
    }
  }
  report.checks.push_back(std::move(cases));
  return report;
}

// ---------------------------------------------------------------------------
// Ψ commutation

Report check_psi_commutation(const ProductStructure& P, const OmegaContext& omega) {
  const CoxeterSystem& W = P.system();
  Report report;
  report.title = "Psi commutation for " + W.name() + " at L=" + std::to_string(omega.bound());
  const auto g1 = psi_generator_elements(P.factor_quiver(1));
  const auto g2 = psi_generator_elements(P.factor_quiver(2));

  Check comm{"psi-commutators", "[iota1(Psi1), iota2(Psi2)] = 0"};
  std::size_t pairs = 0;
  for (const auto& a : g1) {
    const OmegaElement ia = parabolic_embed(P, 1, a);
    for (const auto& b : g2) {
      const OmegaElement ib = parabolic_embed(P, 2, b);
      ++pairs;
      const Verdict v = omega.verdict(ia * ib - ib * ia);
      comm.note(require_zero(v), "[iota1(" + a.to_string(*P.factor(1)) + "), iota2(" +
                                     b.to_string(*P.factor(2)) + ")] is " + verdict_name(v));
    }
  }
  comm.info(std::to_string(pairs) + " generator pairs");
  report.checks.push_back(std::move(comm));

  Check beta{"psi-beta-identity", "two-term identity for transversal pairs"};
  const Quiver& Q = P.quiver();
  std::size_t count = 0;
  for (const Arrow& x : P.factor_quiver(1).arrows()) {
    if (P.factor_quiver(1).classify(x.source, x.target) != EdgeKind::kTransversal) continue;
    const Subset I = P.lift(1, x.source);
    const Subset J = P.lift(1, x.target);
    const int s = P.global(1, x.letter);
    for (const Arrow& y : P.factor_quiver(2).arrows()) {
      if (P.factor_quiver(2).classify(y.source, y.target) != EdgeKind::kTransversal) continue;
      const Subset K = P.lift(2, y.source);
      const Subset L = P.lift(2, y.target);
      const int t = P.global(2, y.letter);
      ++count;
      const std::string where = "I=" + W.subset_name(I) + " J=" + W.subset_name(J) +
                                " K=" + W.subset_name(K) + " L=" + W.subset_name(L);
      const int ids[4] = {Q.arrow_id(I | K, J | K, s), Q.arrow_id(J | K, J | L, t),
                          Q.arrow_id(I | K, I | L, t), Q.arrow_id(I | L, J | L, s)};
      if (*std::min_element(ids, ids + 4) < 0) {
        beta.note(Outcome::kFail, "an arrow of the identity is missing for " + where);
        continue;
      }
      const OmegaElement lhs =
          OmegaElement::arrow(I | K, J | K, s) * OmegaElement::arrow(J | K, J | L, t);
      const OmegaElement rhs =
          OmegaElement::arrow(I | K, I | L, t) * OmegaElement::arrow(I | L, J | L, s);
      const Verdict v = omega.verdict(lhs - rhs);
      beta.note(require_zero(v), "identity is " + std::string(verdict_name(v)) + " for " + where);
    }
  }
  beta.info(std::to_string(count) + " transversal pairs");
  report.checks.push_back(std::move(beta));
  return report;
}

// ---------------------------------------------------------------------------
// Lemma-level checks of tau

Check check_tau_hecke(const ProductStructure& P) {
  Check check{"tau-hecke", "tau(iota(T_s)) = iota_i(T_s) (x) 1"};
  const CoxeterSystem& W = P.system();
  for (int s = 0; s < W.rank(); ++s) {
    const int which = P.side(s);
    const LaurentOmega whole = omega_T(P.quiver(), s);
    const LaurentOmega part = omega_T(P.factor_quiver(which), P.local(s));
    const OmegaElement one =
        OmegaElement::scalar(*P.factor(3 - which), FieldElement(1));
    std::set<int> degrees;
    for (const auto& [d, e] : whole) degrees.insert(d);
    for (const auto& [d, e] : part) degrees.insert(d);
    for (int d : degrees) {
      const auto a = whole.find(d);
      const auto b = part.find(d);
      const TensorElement lhs = a == whole.end() ? TensorElement() : tau_map(P, a->second);
      TensorElement rhs;
      if (b != part.end()) {
        rhs = which == 1 ? TensorElement::pure(b->second, one)
                         : TensorElement::pure(one, b->second);
      }
      check.note(lhs == rhs ? Outcome::kPass : Outcome::kFail,
                 "degree " + std::to_string(d) + " of T_" + W.generator(s) + ": " +
                     lhs.to_string(*P.factor(1), *P.factor(2)) + " vs " +
                     rhs.to_string(*P.factor(1), *P.factor(2)));
    }
  }
  return check;
}

Check check_tau_psi(const ProductStructure& P) {
  Check check{"tau-psi", "tau maps Psi generators onto Psi1 (x) Psi2 generators"};
  const CoxeterSystem& W = P.system();
  const Quiver& Q1 = P.factor_quiver(1);
  const Quiver& Q2 = P.factor_quiver(2);
  const auto is_generator = [](const Quiver& Q, const Path& p) {
    if (p.length() == 0) return true;
    return p.length() == 1 && Q.classify(p.vertices[0], p.vertices[1]) == EdgeKind::kTransversal &&
           Q.arrow_id(p.vertices[0], p.vertices[1], p.letters[0]) >= 0;
  };
  for (const auto& g : psi_generator_elements(P.quiver())) {
    const TensorElement t = tau_map(P, g);
    bool ok = t.terms().size() == 1;
    if (ok) {
      const auto& [k, c] = *t.terms().begin();
      ok = c.is_one() && is_generator(Q1, k.first) && is_generator(Q2, k.second) &&
           k.first.length() + k.second.length() == g.max_length();
    }
    check.note(ok ? Outcome::kPass : Outcome::kFail,
               "tau(" + g.to_string(W) + ") = " + t.to_string(*P.factor(1), *P.factor(2)));
  }
  // Every generator g1 (x) E_K or E_K (x) g2 comes from iota1(g1) iota2(g2).
  const auto gens1 = psi_generator_elements(Q1);
  const auto gens2 = psi_generator_elements(Q2);
  for (const auto& a : gens1) {
    for (const auto& b : gens2) {
      if (a.max_length() > 0 && b.max_length() > 0) continue;
      const OmegaElement pre = parabolic_embed(P, 1, a) * parabolic_embed(P, 2, b);
      const TensorElement image = tau_map(P, pre);
      check.note(image == TensorElement::pure(a, b) ? Outcome::kPass : Outcome::kFail,
                 "tau(iota1(" + a.to_string(*P.factor(1)) + ") iota2(" +
                     b.to_string(*P.factor(2)) + ")) = " +
                     image.to_string(*P.factor(1), *P.factor(2)));
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Product certificates

namespace {

void require_verified(const Report& r, const std::string& which) {
  for (const char* z : {"Z1", "Z2", "Z6"}) {
    if (!r.passed(z)) {
      throw RefusalError("the " + which + " certificate has not passed " + z +
                         "; verify it before forming a product");
    }
  }
}

void require_same_system(const CoxeterSystem& a, const CoxeterSystem& b, const std::string& which) {
  if (a.rank() != b.rank() || a.matrix() != b.matrix()) {
    throw ValidationError("the " + which + " certificate is for a different Coxeter system");
  }
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "." + b; }

}  // namespace

Certificate product_certificate(const ProductStructure& P, const Certificate& c1,
                                const Report& r1, const Certificate& c2, const Report& r2) {
  require_verified(r1, "first");
  require_verified(r2, "second");
  require_same_system(*c1.system, *P.factor(1), "first");
  require_same_system(*c2.system, *P.factor(2), "second");
  Certificate out;
  out.system = P.system_ptr();
  std::map<std::string, OmegaElement> left;
  std::map<std::string, OmegaElement> right;
  for (const auto& l : c1.labels) left[l] = parabolic_embed(P, 1, c1.elements.at(l));
  for (const auto& m : c2.labels) right[m] = parabolic_embed(P, 2, c2.elements.at(m));
  for (const auto& l : c1.labels) {
    for (const auto& m : c2.labels) {
      const std::string name = pair_label(l, m);
      out.labels.push_back(name);
      out.degrees[name] = c1.degrees.at(l) * c2.degrees.at(m);
      out.elements[name] = left[l] * right[m];
    }
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : c1.order) {
    for (const auto& m : c2.labels) pairs.emplace_back(pair_label(a, m), pair_label(b, m));
  }
  for (const auto& [a, b] : c2.order) {
    for (const auto& l : c1.labels) pairs.emplace_back(pair_label(l, a), pair_label(l, b));
  }
  out.order = transitive_reduction(out.labels, pairs);
  return out;
}

Check check_product_corners(const ProductStructure& P, const OmegaContext& omega,
                            const Certificate& c1, const Certificate& c2) {
  Check check{"product-corners", "F[iota1(X), iota2(g)]F' = 0 when mu is not below mu'"};
  const CoxeterSystem& W = P.system();
  const auto le2 = c2.closure();
  std::map<std::string, OmegaElement> left;
  std::map<std::string, OmegaElement> right;
  for (const auto& l : c1.labels) left[l] = parabolic_embed(P, 1, c1.elements.at(l));
  for (const auto& m : c2.labels) right[m] = parabolic_embed(P, 2, c2.elements.at(m));
  std::vector<std::pair<OmegaElement, std::string>> inclusions;
  for (const Arrow& a : P.factor_quiver(1).arrows()) {
    if (P.factor_quiver(1).classify(a.source, a.target) != EdgeKind::kInclusion) continue;
    const OmegaElement x = OmegaElement::arrow(a.source, a.target, a.letter);
    inclusions.emplace_back(parabolic_embed(P, 1, x), x.to_string(*P.factor(1)));
  }
  std::vector<std::pair<OmegaElement, std::string>> psi2;
  for (const auto& g : psi_generator_elements(P.factor_quiver(2))) {
    psi2.emplace_back(parabolic_embed(P, 2, g), g.to_string(*P.factor(2)));
  }
  std::size_t count = 0;
  for (std::size_t m = 0; m < c2.labels.size(); ++m) {
    for (std::size_t m2 = 0; m2 < c2.labels.size(); ++m2) {
      if (le2[m][m2]) continue;
      for (const auto& l : c1.labels) {
        for (const auto& l2 : c1.labels) {
          const OmegaElement F = left[l] * right[c2.labels[m]];
          const OmegaElement G = left[l2] * right[c2.labels[m2]];
          for (const auto& [x, xname] : inclusions) {
            for (const auto& [g, gname] : psi2) {
              ++count;
              const Verdict v = omega.verdict(F * (x * g - g * x) * G);
              check.note(require_zero(v),
                         "F{" + pair_label(l, c2.labels[m]) + "}[" + xname + "," + gname +
                             "]F{" + pair_label(l2, c2.labels[m2]) + "} is " + verdict_name(v));
            }
          }
        }
      }
    }
  }
  check.info(std::to_string(count) + " instances in " + W.name());
  return check;
}

// ---------------------------------------------------------------------------
// Nilpotency of the kernel

namespace {

// Independent vectors spanning a subspace, kept with their echelon form.
struct Subspace {
  explicit Subspace(std::size_t dim) : span(dim) {}
  bool insert(const Vector& v) {
    if (!span.insert(v)) return false;
    basis.push_back(v);
    return true;
  }
  SpanBasis span;
  std::vector<Vector> basis;
};

}  // namespace

Report nilpotency_check(const ProductStructure& P, const OmegaContext& omega,
                        const Certificate& c1, const Certificate& c2) {
  Report report;
  const int h1 = c1.height();
  const int h2 = c2.height();
  const int k_bound = std::min(h1, h2) + 1;
  report.title = "nilpotency of ker(tau) for " + P.system().name();
  Check check{"kernel-nilpotent", "ker(tau)^k = 0 for k = min(ht1, ht2) + 1"};
  check.info("ht1=" + std::to_string(h1) + " ht2=" + std::to_string(h2) +
             " bound k=" + std::to_string(k_bound));
  const auto kernel = kernel_generator_elements(P);

  if (const CertifiedTable* T = omega.table()) {
    // The ideal K generated by the kernel arrows, then its powers.
    const std::size_t n = T->dimension();
    Subspace K(n);
    std::vector<Vector> queue;
    for (const auto& g : kernel) {
      Vector v = T->coords(g);
      if (K.insert(v)) queue.push_back(v);
    }
    std::vector<Vector> gens;
    for (Subset I = 0; I < P.quiver().vertex_count(); ++I) {
      gens.push_back(T->coords(OmegaElement::vertex(I)));
    }
    for (const Arrow& a : P.quiver().arrows()) {
      gens.push_back(T->coords(OmegaElement::arrow(a.source, a.target, a.letter)));
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const Vector& g : gens) {
        for (Vector w : {T->multiply(queue[q], g), T->multiply(g, queue[q])}) {
          if (K.insert(w)) queue.push_back(std::move(w));
        }
      }
    }
    check.info("dim ker(tau) = " + std::to_string(K.basis.size()));
    // Powers only shrink, so K^k = 0 for every k from the first zero power on.
    std::vector<Vector> power = K.basis;
    int smallest = power.empty() ? 1 : -1;
    for (int k = 2; smallest < 0 && k <= static_cast<int>(n) + 1; ++k) {
      Subspace next(n);
      for (const Vector& a : power) {
        for (const Vector& b : K.basis) next.insert(T->multiply(a, b));
      }
      power = std::move(next.basis);
      if (power.empty()) smallest = k;
    }
    const bool bound_zero = smallest > 0 && smallest <= k_bound;
    check.info("smallest k with ker(tau)^k = 0: " +
               (smallest > 0 ? std::to_string(smallest) : std::string("none")));
    check.note(bound_zero ? Outcome::kPass : Outcome::kFail,
               "ker(tau)^" + std::to_string(k_bound) + " is nonzero");
    report.checks.push_back(std::move(check));
    return report;
  }

  // Bounded: products g1 p1 g2 ... gk of kernel arrows and connecting paths.
  const PathSpace& paths = omega.oracle().paths();
  const int L = omega.bound();
  std::vector<Path> gens;
  for (const auto& g : kernel) gens.push_back(g.terms().begin()->first);
  int smallest = -1;
  bool bound_ok = false;
  for (int k = 1; k <= std::max(k_bound, 1); ++k) {
    bool all_zero = true;
    std::vector<Path> frontier = gens;
    for (int step = 1; step < k; ++step) {
      std::vector<Path> next;
      for (const Path& a : frontier) {
        for (std::size_t id = 0; id < paths.size(); ++id) {
          const Path& c = paths.path(static_cast<int>(id));
          if (c.start() != a.end() || a.length() + c.length() + 1 > L) continue;
          const Path ac = concat(a, c);
          for (const Path& g : gens) {
            if (g.start() == ac.end()) next.push_back(concat(ac, g));
          }
        }
      }
      frontier = std::move(next);
    }
    for (const Path& p : frontier) {
      if (!omega.oracle().reduce(OmegaElement::from_path(p)).zero) {
        all_zero = false;
        break;
      }
    }
    if (all_zero && smallest < 0) smallest = k;
    if (k == k_bound) bound_ok = all_zero;
  }
  check.info("smallest k with all products zero at bound L=" + std::to_string(L) + ": " +
             (smallest > 0 ? std::to_string(smallest) : std::string("none")));
  check.note(bound_ok ? Outcome::kPass : Outcome::kInconclusive,
             "a product of " + std::to_string(k_bound) + " kernel generators is nonzero at bound");
  report.checks.push_back(std::move(check));
  return report;
}

}  // namespace wgalg
