#include "wgalg/context.hpp"

#include <map>

#include "wgalg/error.hpp"

namespace wgalg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kZero:
      return "zero";
    case Verdict::kNonzero:
      return "nonzero";
    case Verdict::kUnknown:
      return "nonzero-at-bound";
  }
  return "?";
}

Outcome require_zero(Verdict v) {
  switch (v) {
    case Verdict::kZero:
      return Outcome::kPass;
    case Verdict::kNonzero:
      return Outcome::kFail;
    case Verdict::kUnknown:
      return Outcome::kInconclusive;
  }
  return Outcome::kInconclusive;
}

std::vector<FieldElement> flatten(const Matrix& m) { return m.entries(); }

std::vector<OmegaElement> psi_generator_elements(const Quiver& Q) {
  std::vector<OmegaElement> out;
  for (Subset I = 0; I < Q.vertex_count(); ++I) out.push_back(OmegaElement::vertex(I));
  for (const Arrow& a : Q.arrows()) {
    if (Q.classify(a.source, a.target) == EdgeKind::kTransversal) {
      out.push_back(OmegaElement::arrow(a.source, a.target, a.letter));
    }
  }
  return out;
}

struct OmegaContext::PsiBound {
  std::map<Path, std::size_t, PathOrder> index;
  std::optional<SpanBasis> span;
};

OmegaContext::OmegaContext(CoxeterPtr W, ContextOptions options)
    : system_(std::move(W)), options_(std::move(options)) {
  field_ = options_.field ? options_.field : system_->field();
  quiver_ = std::make_unique<Quiver>(system_);
  relations_ = wgalg::relations(*quiver_, options_.source);
  std::vector<Relation> ideal = relations_;
  ideal.insert(ideal.end(), options_.extra.begin(), options_.extra.end());
  oracle_ = std::make_unique<MembershipOracle>(*quiver_, ideal, options_.bound);
  if (options_.build_table) table_ = CertifiedTable::build(*oracle_, ideal, &closure_);
  if (options_.load_modules && options_.extra.empty()) {
    wgraphs_ = builtin_wgraphs(system_, field_);
    for (const auto& G : wgraphs_) modules_.push_back(omega_module(G, &relations_));
  }
}

ExprContext OmegaContext::expr_context(
    const std::map<std::string, OmegaElement>* idempotents) const {
  ExprContext ctx;
  ctx.quiver = quiver_.get();
  ctx.system = system_.get();
  ctx.field = field_;
  ctx.idempotents = idempotents;
  return ctx;
}

Verdict OmegaContext::verdict(const OmegaElement& e) const {
  if (e.is_zero()) return Verdict::kZero;
  if (table_) return table_->is_zero(e) ? Verdict::kZero : Verdict::kNonzero;
  try {
    if (oracle_->reduce(e).zero) return Verdict::kZero;
  } catch (const BoundError&) {
  }
  return module_nonzero(modules_, e) ? Verdict::kNonzero : Verdict::kUnknown;
}

OmegaElement OmegaContext::reduce(const OmegaElement& e) const {
  if (table_) return table_->canonical(e);
  return oracle_->normal_form(e);
}

const std::vector<Vector>& OmegaContext::psi_table_basis() const {
  if (!table_) throw Error("no certified table for " + system_->name());
  if (psi_table_) return psi_table_basis_;
  const CertifiedTable& T = *table_;
  psi_table_.emplace(T.dimension());
  std::vector<Vector> arrows;
  std::vector<Vector> queue;
  for (const OmegaElement& g : psi_generator_elements(*quiver_)) {
    if (g.max_length() == 0) {
      Vector v = T.coords(g);
      if (psi_table_->insert(v)) queue.push_back(v);
    } else {
      arrows.push_back(T.coords(g));
    }
  }
  // Right multiplication by the transversal arrows reaches every monomial.
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Vector& a : arrows) {
      Vector w = T.multiply(queue[k], a);
      if (psi_table_->insert(w)) queue.push_back(std::move(w));
    }
  }
  psi_table_basis_ = std::move(queue);
  return psi_table_basis_;
}

namespace {

// Span of rho(Ψ) inside End(M), closed under the generators.
SpanBasis module_psi_span(const OmegaModule& M, const Quiver& Q) {
  const std::size_t n = M.dimension();
  SpanBasis span(n * n);
  std::vector<Matrix> gens;
  std::vector<Matrix> queue;
  for (const OmegaElement& g : psi_generator_elements(Q)) {
    Matrix m = M.apply(g);
    if (g.max_length() == 0) {
      if (span.insert(flatten(m))) queue.push_back(m);
    } else {
      gens.push_back(std::move(m));
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Matrix& g : gens) {
      Matrix w = queue[k] * g;
      if (span.insert(flatten(w))) queue.push_back(std::move(w));
    }
  }
  return span;
}

}  // namespace

Outcome OmegaContext::psi_membership(const OmegaElement& e) const {
  if (table_) {
    psi_table_basis();
    return psi_table_->contains(table_->coords(e)) ? Outcome::kPass : Outcome::kFail;
  }
  bool in_span = false;
  try {
    if (!psi_bound_) {
      auto data = std::make_shared<PsiBound>();
      std::vector<OmegaElement> forms;
      const PathSpace& paths = oracle_->paths();
      for (std::size_t id = 0; id < paths.size(); ++id) {
        const Path& p = paths.path(static_cast<int>(id));
        bool transversal = true;
        for (int k = 0; k < p.length() && transversal; ++k) {
          transversal = quiver_->classify(p.vertices[k], p.vertices[k + 1]) ==
                        EdgeKind::kTransversal;
        }
        if (!transversal) continue;
        forms.push_back(oracle_->normal_form(OmegaElement::from_path(p)));
        for (const auto& [q, c] : forms.back().terms()) data->index.try_emplace(q, 0);
      }
      std::size_t next = 0;
      for (auto& [q, k] : data->index) k = next++;
      data->span.emplace(next);
      for (const auto& f : forms) {
        std::vector<FieldElement> v(next, FieldElement::zero(field_));
        for (const auto& [q, c] : f.terms()) v[data->index.at(q)] = c;
        data->span->insert(std::move(v));
      }
      psi_bound_ = std::move(data);
    }
    const OmegaElement nf = oracle_->normal_form(e);
    std::vector<FieldElement> v(psi_bound_->span->dim(), FieldElement::zero(field_));
    bool representable = true;
    for (const auto& [q, c] : nf.terms()) {
      auto it = psi_bound_->index.find(q);
      if (it == psi_bound_->index.end()) {
        representable = false;
        break;
      }
      v[it->second] = c;
    }
    in_span = representable && psi_bound_->span->contains(std::move(v));
  } catch (const BoundError&) {
  }
  if (in_span) return Outcome::kPass;
  if (psi_module_.size() != modules_.size()) psi_module_.assign(modules_.size(), std::nullopt);
  for (std::size_t k = 0; k < modules_.size(); ++k) {
    if (!psi_module_[k]) psi_module_[k] = module_psi_span(modules_[k], *quiver_);
    if (!psi_module_[k]->contains(flatten(modules_[k].apply(e)))) return Outcome::kFail;
  }
  return Outcome::kInconclusive;
}

}  // namespace wgalg
