#include "wgalg/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "wgalg/error.hpp"

namespace wgalg {

namespace {

std::string F(const std::string& label) { return "F{" + label + "}"; }

void require_system(const OmegaContext& omega, const Certificate& c) {
  const CoxeterSystem& a = omega.system();
  const CoxeterSystem& b = *c.system;
  if (a.rank() != b.rank() || a.matrix() != b.matrix()) {
    throw ValidationError("certificate belongs to a different Coxeter system");
  }
}

std::size_t group_order(const CoxeterPtr& W) { return CoxeterGroup(W).size(); }

Vector vec_add(Vector a, const Vector& b, const FieldElement& scale = FieldElement(1)) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += scale * b[i];
  }
  return a;
}

bool vec_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// Rank of matrices (as vectors) rho(F) rho(b) rho(F) over the given elements.
std::size_t slice_rank(const OmegaModule& M, const Matrix& f,
                       const std::vector<OmegaElement>& elements) {
  SpanBasis span(M.dimension() * M.dimension());
  for (const auto& b : elements) span.insert(flatten(f * M.apply(b) * f));
  return span.rank();
}

// Z4 for one label.
void corner_check(const OmegaContext& omega, Check& check, const std::string& label,
                  const OmegaElement& f, int d) {
  const std::size_t target = std::size_t(d) * std::size_t(d);
  std::vector<OmegaElement> spanning;  // elements b with F b F spanning the corner
  std::size_t upper = 0;
  bool exact = false;
  if (const CertifiedTable* T = omega.table()) {
    exact = true;
    const Vector fv = T->coords(f);
    SpanBasis span(T->dimension());
    for (const Path& p : T->basis()) {
      const OmegaElement b = OmegaElement::from_path(p);
      spanning.push_back(b);
      span.insert(T->multiply(T->multiply(fv, T->coords(b)), fv));
    }
    upper = span.rank();
  } else {
    // Normal forms of F p F over the paths inside the bound.
    const PathSpace& paths = omega.oracle().paths();
    std::vector<OmegaElement> forms;
    std::map<Path, std::size_t, PathOrder> index;
    for (std::size_t id = 0; id < paths.size(); ++id) {
      const OmegaElement b = OmegaElement::from_path(paths.path(static_cast<int>(id)));
      try {
        forms.push_back(omega.oracle().normal_form(f * b * f));
        spanning.push_back(b);
      } catch (const BoundError&) {
        continue;
      }
      for (const auto& [q, c] : forms.back().terms()) index.try_emplace(q, 0);
    }
    std::size_t next = 0;
    for (auto& [q, k] : index) k = next++;
    SpanBasis span(next);
    for (const auto& e : forms) {
      Vector v(next, FieldElement::zero(omega.field()));
      for (const auto& [q, c] : e.terms()) v[index.at(q)] = c;
      span.insert(std::move(v));
    }
    upper = span.rank();
  }
  std::size_t lower = 0;
  std::string witness;
  for (const auto& M : omega.modules()) {
    if (M.dimension() < std::size_t(d)) continue;
    const std::size_t r = slice_rank(M, M.apply(f), spanning);
    if (r > lower) {
      lower = r;
      witness = M.name();
    }
    if (r == target) break;
  }
  const std::string head = F(label) + ": corner dimension " + std::to_string(upper) +
                           (exact ? "" : " (at bound)") + ", module image " +
                           std::to_string(lower) + (witness.empty() ? "" : " on " + witness) +
                           ", d^2 = " + std::to_string(target);
  check.info(head);
  if (exact) {
    check.note(upper == target && lower == target ? Outcome::kPass : Outcome::kFail, head);
  } else if (lower > target || upper < lower) {
    check.note(Outcome::kFail, head);
  } else {
    check.note(upper == target && lower == target ? Outcome::kPass : Outcome::kInconclusive,
               head);
  }
}

std::vector<OmegaElement> arrow_elements(const Quiver& Q) {
  std::vector<OmegaElement> out;
  for (const Arrow& a : Q.arrows()) out.push_back(OmegaElement::arrow(a.source, a.target, a.letter));
  return out;
}

}  // namespace

Report verify_certificate(const OmegaContext& omega, const Certificate& c) {
  require_system(omega, c);
  check_certificate_shape(c, group_order(omega.system_ptr()));
  const CoxeterSystem& W = omega.system();
  const Quiver& Q = omega.quiver();
  const auto le = c.closure();
  const std::size_t n = c.labels.size();
  std::vector<OmegaElement> f;
  for (const auto& l : c.labels) f.push_back(c.elements.at(l));

  Report report;
  report.title = "certificate for " + W.name() + (omega.table() ? " (certified table)" : "") +
                 " at L=" + std::to_string(omega.bound());

  Check z1{"Z1", "Z1 (orthogonal idempotents summing to 1)"};
  OmegaElement rest = omega.one();
  for (std::size_t i = 0; i < n; ++i) {
    rest -= f[i];
    for (std::size_t j = 0; j < n; ++j) {
      OmegaElement e = f[i] * f[j];
      if (i == j) e -= f[i];
      const Verdict v = omega.verdict(e);
      z1.note(require_zero(v), F(c.labels[i]) + "*" + F(c.labels[j]) +
                                   (i == j ? " - " + F(c.labels[i]) : std::string()) + " is " +
                                   verdict_name(v));
    }
  }
  {
    const Verdict v = omega.verdict(rest);
    z1.note(require_zero(v), std::string("1 - sum of F is ") + verdict_name(v));
  }
  report.checks.push_back(std::move(z1));

  Check z2{"Z2", "Z2 (commuting with every E_I)"};
  for (std::size_t i = 0; i < n; ++i) {
    for (Subset I = 0; I < Q.vertex_count(); ++I) {
      const OmegaElement E = OmegaElement::vertex(I);
      const Verdict v = omega.verdict(E * f[i] - f[i] * E);
      z2.note(require_zero(v), "[E" + W.subset_name(I) + "," + F(c.labels[i]) + "] is " +
                                   verdict_name(v));
    }
  }
  report.checks.push_back(std::move(z2));

  const auto arrows = arrow_elements(Q);
  Check z3{"Z3", "Z3 (nonzero corners only downward)"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (le[i][j]) continue;
      for (const auto& x : arrows) {
        const Verdict v = omega.verdict(f[i] * x * f[j]);
        z3.note(require_zero(v), F(c.labels[i]) + "*" + x.to_string(W) + "*" + F(c.labels[j]) +
                                     " is " + verdict_name(v) + " but " + c.labels[i] +
                                     " is not below " + c.labels[j]);
      }
    }
  }
  report.checks.push_back(std::move(z3));

  Check z4{"Z4", "Z4 (corner criterion)"};
  for (std::size_t i = 0; i < n; ++i) {
    corner_check(omega, z4, c.labels[i], f[i], c.degrees.at(c.labels[i]));
  }
  report.checks.push_back(std::move(z4));

  Check z5{"Z5", "Z5 (F X F in Psi)"};
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : arrows) {
      const Outcome o = omega.psi_membership(f[i] * x * f[i]);
      z5.note(o, F(c.labels[i]) + "*" + x.to_string(W) + "*" + F(c.labels[i]) +
                     (o == Outcome::kFail ? " is outside Psi" : " not shown to lie in Psi"));
    }
  }
  report.checks.push_back(std::move(z5));

  Check z6{"Z6", "Z6 (F in Psi)"};
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome o = omega.psi_membership(f[i]);
    z6.note(o, F(c.labels[i]) + (o == Outcome::kFail ? " is outside Psi" : " not shown to lie in Psi"));
  }
  report.checks.push_back(std::move(z6));
  return report;
}

Check filtration_check(const OmegaContext& omega, const Certificate& c) {
  return filtration_check(omega, c, omega.modules());
}

Check filtration_check(const OmegaContext& omega, const Certificate& c,
                       const std::vector<OmegaModule>& modules) {
  require_system(omega, c);
  Check check{"filtration", "down-sets of the order give submodules"};
  const auto le = c.closure();
  const std::size_t n = c.labels.size();
  const CoxeterSystem& W = omega.system();
  for (const auto& M : modules) {
    const std::size_t dim = M.dimension();
    std::vector<Matrix> images;
    for (const auto& l : c.labels) images.push_back(M.apply(c.elements.at(l)));
    std::vector<const Matrix*> gens;
    for (int s = 0; s < W.rank(); ++s) {
      gens.push_back(&M.e(s));
      gens.push_back(&M.x(s));
    }
    for (std::size_t lam = 0; lam < n; ++lam) {
      SpanBasis span(dim);
      std::vector<Vector> columns;
      for (std::size_t nu = 0; nu < n; ++nu) {
        if (!le[nu][lam]) continue;
        for (std::size_t col = 0; col < dim; ++col) {
          Vector v(dim, FieldElement::zero(M.field()));
          for (std::size_t r = 0; r < dim; ++r) v[r] = images[nu](r, col);
          if (span.insert(v)) columns.push_back(std::move(v));
        }
      }
      bool stable = true;
      for (const Matrix* g : gens) {
        for (const Vector& v : columns) {
          Vector w(dim, FieldElement::zero(M.field()));
          for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t k = 0; k < dim; ++k) {
              if (!v[k].is_zero() && !(*g)(r, k).is_zero()) w[r] += (*g)(r, k) * v[k];
            }
          }
          if (!span.contains(w)) stable = false;
        }
      }
      check.note(stable ? Outcome::kPass : Outcome::kFail,
                 "the span below " + c.labels[lam] + " is not stable on " + M.name());
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Search

namespace {

// rho of a table vector on every module, flattened and concatenated.
class Representation {
 public:
  Representation(const OmegaContext& omega, const CertifiedTable& T) : modules_(omega.modules()) {
    for (const Path& p : T.basis()) {
      std::vector<Matrix> per;
      for (const auto& M : modules_) per.push_back(M.apply(p));
      images_.push_back(std::move(per));
    }
    for (const auto& M : modules_) size_ += M.dimension() * M.dimension();
  }

  std::size_t size() const { return size_; }

  std::vector<FieldElement> flat(const Vector& a, const Field& field) const {
    std::vector<FieldElement> out;
    out.reserve(size_);
    for (std::size_t m = 0; m < modules_.size(); ++m) {
      Matrix acc(modules_[m].dimension(), modules_[m].dimension(), field);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) acc += images_[i][m].scaled(a[i]);
      }
      const auto& e = acc.entries();
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }

  // Identity on module k, zero elsewhere.
  std::vector<FieldElement> central(std::size_t k, const Field& field) const {
    std::vector<FieldElement> out;
    for (std::size_t m = 0; m < modules_.size(); ++m) {
      const std::size_t d = modules_[m].dimension();
      const Matrix blk = m == k ? Matrix::identity(d, field) : Matrix(d, d, field);
      out.insert(out.end(), blk.entries().begin(), blk.entries().end());
    }
    return out;
  }

 private:
  const std::vector<OmegaModule>& modules_;
  std::vector<std::vector<Matrix>> images_;
  std::size_t size_ = 0;
};

// Newton-type iteration x -> 3x^2 - 2x^3; stable once x^2 = x.
std::optional<Vector> lift_idempotent(const CertifiedTable& T, Vector x) {
  for (int round = 0; round < 64; ++round) {
    const Vector x2 = T.multiply(x, x);
    if (vec_zero(vec_add(x2, x, FieldElement(-1)))) return x;
    const Vector x3 = T.multiply(x2, x);
    Vector next(x.size(), FieldElement(0));
    next = vec_add(next, x2, FieldElement(3));
    next = vec_add(next, x3, FieldElement(-2));
    x = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

SearchResult search_certificate(const OmegaContext& omega, const std::vector<int>* degrees) {
  SearchResult result;
  auto fail = [&](const std::string& why) {
    result.log.push_back(why);
    return result;
  };
  const std::size_t order = group_order(omega.system_ptr());
  if (degrees) {
    std::size_t total = 0;
    for (int d : *degrees) total += std::size_t(d) * std::size_t(d);
    if (total != order) {
      return fail("sum of squared degrees is " + std::to_string(total) +
                  ", the group has order " + std::to_string(order));
    }
  }
  const CertifiedTable* T = omega.table();
  if (!T) return fail("search needs a certified table; it did not close at this bound");
  const auto& modules = omega.modules();
  std::vector<int> dims;
  std::size_t total = 0;
  for (const auto& M : modules) {
    dims.push_back(static_cast<int>(M.dimension()));
    total += M.dimension() * M.dimension();
  }
  if (total != order) {
    return fail("the builtin modules do not account for every irreducible representation");
  }
  if (degrees) {
    std::vector<int> a = dims;
    std::vector<int> b = *degrees;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return fail("requested degrees differ from the builtin module dimensions");
  }
  const Field field = omega.field();
  const std::size_t n = T->dimension();
  const Quiver& Q = omega.quiver();

  // Ψ ∩ (⊕ E_I Ω E_I): Ψ contains every E_I, so this is the E-diagonal part of Ψ.
  std::vector<Vector> vertex;
  for (Subset I = 0; I < Q.vertex_count(); ++I) vertex.push_back(T->coords(OmegaElement::vertex(I)));
  std::vector<Vector> diag;
  {
    SpanBasis span(n);
    for (const Vector& v : omega.psi_table_basis()) {
      for (const Vector& e : vertex) {
        Vector w = T->multiply(T->multiply(e, v), e);
        if (span.insert(w)) diag.push_back(std::move(w));
      }
    }
  }
  result.log.push_back("Psi has dimension " + std::to_string(omega.psi_table_basis().size()) +
                       ", its E-diagonal part " + std::to_string(diag.size()));

  const Representation rho(omega, *T);
  SpanBasis image(rho.size());
  std::vector<std::size_t> used;
  for (std::size_t k = 0; k < diag.size(); ++k) {
    if (image.insert(rho.flat(diag[k], field))) used.push_back(k);
  }
  std::vector<Vector> preimage;
  for (std::size_t m = 0; m < modules.size(); ++m) {
    auto sol = image.solve(rho.central(m, field));
    if (!sol) return fail("no element of Psi acts as the identity on " + modules[m].name() + " alone");
    Vector a(n, FieldElement(0));
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (!(*sol)[k].is_zero()) a = vec_add(a, diag[used[k]], (*sol)[k]);
    }
    preimage.push_back(std::move(a));
  }

  const Vector one = T->coords(omega.one());
  std::vector<std::size_t> perm(modules.size());
  std::iota(perm.begin(), perm.end(), 0);
  int attempts = 0;
  do {
    if (++attempts > 720) break;
    std::vector<Vector> fam(modules.size());
    Vector rest = one;
    bool ok = true;
    for (std::size_t step = 0; step + 1 < perm.size() && ok; ++step) {
      const std::size_t m = perm[step];
      auto lifted = lift_idempotent(*T, T->multiply(T->multiply(rest, preimage[m]), rest));
      if (!lifted) {
        ok = false;
        break;
      }
      fam[m] = *lifted;
      rest = vec_add(rest, fam[m], FieldElement(-1));
    }
    if (!ok) {
      result.log.push_back("lifting failed for ordering " + std::to_string(attempts));
      continue;
    }
    fam[perm.back()] = rest;

    Certificate cert;
    cert.system = omega.system_ptr();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t m = 0; m < modules.size(); ++m) {
      cert.labels.push_back(modules[m].name());
      cert.degrees[modules[m].name()] = static_cast<int>(modules[m].dimension());
      cert.elements[modules[m].name()] = T->element(fam[m]);
    }
    for (std::size_t a = 0; a < modules.size(); ++a) {
      for (std::size_t b = 0; b < modules.size(); ++b) {
        if (a == b) continue;
        for (const Arrow& x : Q.arrows()) {
          const Vector xv = T->coords(OmegaElement::arrow(x.source, x.target, x.letter));
          if (!vec_zero(T->multiply(T->multiply(fam[a], xv), fam[b]))) {
            pairs.emplace_back(modules[a].name(), modules[b].name());
            break;
          }
        }
      }
    }
    try {
      cert.order = transitive_reduction(cert.labels, pairs);
    } catch (const ValidationError& e) {
      result.log.push_back(std::string("nonzero corners are cyclic: ") + e.what());
      continue;
    }
    Report report = verify_certificate(omega, cert);
    if (report.overall() == Outcome::kPass) {
      result.log.push_back("found after " + std::to_string(attempts) + " lifting order(s)");
      result.log.push_back(
          "the order is the one forced by nonzero corners; every order containing it also "
          "passes Z3");
      result.certificate = std::move(cert);
      result.report = std::move(report);
      return result;
    }
    result.log.push_back("candidate from ordering " + std::to_string(attempts) +
                         " did not verify");
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fail("no certificate found within the table (this is not a disproof)");
}

}  // namespace wgalg
