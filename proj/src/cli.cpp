#include "wgalg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgalg/decomp.hpp"
#include "wgalg/error.hpp"
#include "wgalg/tensor.hpp"

namespace wgalg {
namespace {

using json = nlohmann::ordered_json;

constexpr int kUsage = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A builtin name or inline JSON, else the path of a JSON file.
CoxeterPtr load_coxeter(const std::string& arg) {
  if (arg.empty()) throw ValidationError("--coxeter is required");
  std::error_code ec;
  const std::string text = std::filesystem::is_regular_file(arg, ec) ? slurp(arg) : arg;
  return std::make_shared<const CoxeterSystem>(parse_coxeter(text));
}

struct Options {
  std::string coxeter;
  int max_len = 6;
  std::string source = "closed-form";
  std::string out;
  std::string format = "text";
  std::string expr;
  std::string wgraph;
  std::vector<std::string> certs;
  std::vector<int> degrees;
  bool table = false;
  bool no_table = false;

  bool json() const { return format == "json"; }

  ContextOptions context(bool build_table, bool load_modules = true) const {
    ContextOptions o;
    o.bound = max_len;
    o.source = parse_relation_source(source);
    o.build_table = build_table;
    o.load_modules = load_modules;
    return o;
  }
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  // Primary output goes to --out when given.
  void emit(const std::string& text) {
    if (opt_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + opt_.out);
    f << text;
  }

  int report(const Report& r) {
    out_ << (opt_.json() ? r.to_json_text() : r.to_text());
    return exit_code(r.overall());
  }

  int coxeter_info() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    const CoxeterGroup G(W);
    json doc;
    doc["name"] = W->name();
    doc["rank"] = W->rank();
    doc["generators"] = W->generators();
    doc["matrix"] = W->matrix();
    json blocks = json::array();
    for (const auto& c : components(*W)) {
      json names = json::array();
      for (int s : c) names.push_back(W->generator(s));
      blocks.push_back(names);
    }
    doc["components"] = blocks;
    doc["conductor"] = W->field()->conductor();
    doc["field_degree"] = W->field()->degree();
    doc["order"] = G.size();
    doc["longest_length"] = G.length(G.longest());
    doc["longest_word"] = word_to_string(*W, G.element(G.longest()).word);
    if (opt_.json()) {
      emit(doc.dump(2) + "\n");
      return 0;
    }
    std::ostringstream s;
    s << "name: " << (W->name().empty() ? "(matrix)" : W->name()) << "\n";
    s << "rank: " << W->rank() << "\n";
    s << "generators:";
    for (const auto& g : W->generators()) s << " " << g;
    s << "\nmatrix:\n";
    for (const auto& row : W->matrix()) {
      s << " ";
      for (int m : row) s << " " << m;
      s << "\n";
    }
    s << "components:";
    for (const auto& b : doc["components"]) {
      s << " {";
      for (std::size_t k = 0; k < b.size(); ++k) s << (k ? "," : "") << b[k].get<std::string>();
      s << "}";
    }
    s << "\nfield: Q(2cos(pi/" << W->field()->conductor() << ")), degree "
      << W->field()->degree() << "\n";
    s << "order: " << G.size() << "\n";
    s << "longest element: " << doc["longest_word"].get<std::string>() << " (length "
      << G.length(G.longest()) << ")\n";
    emit(s.str());
    return 0;
  }

  int quiver_dot() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    const Quiver Q(W);
    if (!opt_.json()) {
      emit(Q.to_dot());
      return 0;
    }
    json doc;
    json vertices = json::array();
    for (Subset I = 0; I < Q.vertex_count(); ++I) vertices.push_back(Q.subset_name(I));
    doc["vertices"] = vertices;
    json edges = json::array();
    for (const auto& [I, J] : Q.edges()) {
      edges.push_back({{"from", Q.subset_name(J)},
                       {"to", Q.subset_name(I)},
                       {"kind", edge_kind_name(Q.classify(I, J))}});
    }
    doc["edges"] = edges;
    emit(doc.dump(2) + "\n");
    return 0;
  }

  int omega_relations() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    const Quiver Q(W);
    const auto rels = relations(Q, parse_relation_source(opt_.source));
    if (!opt_.json()) {
      emit(relation_dump(rels, *W));
      return 0;
    }
    json doc = json::array();
    for (const auto& r : rels) doc.push_back({{"tag", r.tag}, {"element", r.element.to_string(*W)}});
    emit(doc.dump(2) + "\n");
    return 0;
  }

  int omega_table() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    OmegaContext omega(W, opt_.context(true, false));
    Report r;
    r.title = "certified table of " + W->name() + " at L=" + std::to_string(opt_.max_len);
    Check c("table-closed", "certified multiplication table");
    const CertifiedTable* T = omega.table();
    if (!T) {
      for (const auto& p : omega.closure().problems) c.note(Outcome::kInconclusive, p);
      if (c.details.empty()) c.note(Outcome::kInconclusive, "the table did not close at this bound");
      return report_with(r, std::move(c), "");
    }
    c.info("dimension " + std::to_string(T->dimension()));
    c.note(T->associative() ? Outcome::kPass : Outcome::kFail, "structure constants not associative");
    c.note(T->unit_verified() ? Outcome::kPass : Outcome::kFail, "sum of E_I is not a unit");
    std::string body;
    if (opt_.json()) {
      json doc;
      doc["dimension"] = T->dimension();
      json basis = json::array();
      for (const Path& p : T->basis()) basis.push_back(path_to_string(p, *W));
      doc["basis"] = basis;
      json products = json::array();
      for (std::size_t i = 0; i < T->dimension(); ++i) {
        for (std::size_t j = 0; j < T->dimension(); ++j) {
          const OmegaElement prod =
              omega.reduce(OmegaElement::from_path(T->basis()[i]) * OmegaElement::from_path(T->basis()[j]));
          if (!prod.is_zero()) products.push_back({i, j, prod.to_string(*W)});
        }
      }
      doc["products"] = products;
      body = doc.dump(2) + "\n";
    } else {
      std::ostringstream s;
      s << "dimension: " << T->dimension() << "\n";
      for (std::size_t i = 0; i < T->dimension(); ++i) {
        s << "  b" << i << " = " << path_to_string(T->basis()[i], *W) << "\n";
      }
      body = s.str();
    }
    return report_with(r, std::move(c), body);
  }

  int omega_reduce() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    if (opt_.expr.empty()) throw ValidationError("--expr is required");
    OmegaContext omega(W, opt_.context(opt_.table, false));
    const OmegaElement e = parse_omega(opt_.expr, omega.expr_context());
    const OmegaElement nf = omega.reduce(e);
    // Nonzero from the oracle alone is only nonzero at the bound.
    const Verdict v = nf.is_zero() ? Verdict::kZero
                      : omega.table() ? Verdict::kNonzero
                                      : Verdict::kUnknown;
    if (opt_.json()) {
      json doc;
      doc["input"] = opt_.expr;
      doc["normal_form"] = nf.to_string(*W);
      doc["verdict"] = verdict_name(v);
      emit(doc.dump(2) + "\n");
    } else {
      emit(nf.to_string(*W) + "\n");
    }
    return 0;
  }

  int wgraph_validate() {
    CoxeterPtr W = opt_.coxeter.empty() ? nullptr : load_coxeter(opt_.coxeter);
    std::vector<WGraph> graphs;
    if (!opt_.wgraph.empty()) {
      graphs.push_back(wgraph_from_json_text(slurp(opt_.wgraph), W));
    } else {
      if (!W) throw ValidationError("give --wgraph FILE or --coxeter for the builtin corpus");
      graphs = builtin_wgraphs(W);
    }
    Report r;
    r.title = "W-graph validation";
    for (const auto& G : graphs) {
      const std::string name = G.name.empty() ? "wgraph" : G.name;
      Check c("wgraph:" + name, "W-graph " + name);
      const WGraphReport wr = validate_wgraph(G);
      if (!wr.passed()) {
        const CoxeterSystem& S = *G.system;
        for (const auto& v : wr.condition_a) c.note(Outcome::kFail, "condition a: " + v);
        for (const auto& v : wr.coherence) c.note(Outcome::kFail, "coherence: " + v);
        for (int s : wr.quadratic_failures) {
          c.note(Outcome::kFail, "quadratic relation fails for " + S.generator(s));
        }
        for (const auto& b : wr.braid) {
          if (!b.holds) {
            c.note(Outcome::kFail, "braid relation fails for " + S.generator(b.s) + "," +
                                       S.generator(b.t) + " (m=" +
                                       std::to_string(S.order(b.s, b.t)) + ")");
          }
        }
        if (c.details.empty()) c.note(Outcome::kFail, "conditions violated");
      } else {
        const auto rels = relations(Quiver(G.system), parse_relation_source(opt_.source));
        try {
          (void)omega_module(G, &rels);
          c.info(std::to_string(G.size()) + " vertices; conditions a. and b. hold; every relation acts as zero");
        } catch (const InconsistencyError& e) {
          c.note(Outcome::kFail, e.what());
        }
      }
      r.checks.push_back(std::move(c));
    }
    return report(r);
  }

  struct Factors {
    std::unique_ptr<ProductStructure> P;
    std::unique_ptr<OmegaContext> omega;
    std::unique_ptr<OmegaContext> f1;
    std::unique_ptr<OmegaContext> f2;
  };

  Factors factors(bool build_table) {
    Factors f;
    f.P = std::make_unique<ProductStructure>(load_coxeter(opt_.coxeter));
    f.omega = std::make_unique<OmegaContext>(f.P->system_ptr(), opt_.context(build_table));
    for (int k = 1; k <= 2; ++k) {
      ContextOptions o = opt_.context(build_table);
      o.field = f.P->system().field();
      (k == 1 ? f.f1 : f.f2) = std::make_unique<OmegaContext>(f.P->factor(k), o);
    }
    return f;
  }

  int tensor_verify_kernel() {
    Factors f = factors(!opt_.no_table);
    Report r = verify_kernel(*f.P, *f.omega, *f.f1, *f.f2);
    r.checks.insert(r.checks.begin(), check_tau_hecke(*f.P));
    return report(r);
  }

  int tensor_verify_psi() {
    const auto P = std::make_unique<ProductStructure>(load_coxeter(opt_.coxeter));
    OmegaContext omega(P->system_ptr(), opt_.context(!opt_.no_table, false));
    Report r = check_psi_commutation(*P, omega);
    r.checks.push_back(check_tau_psi(*P));
    return report(r);
  }

  // "builtin", "search" or a certificate file.
  Certificate certificate_for(const OmegaContext& omega, const std::string& spec, std::ostream& log) {
    if (spec == "builtin") return builtin_certificate(omega.system_ptr());
    if (spec == "search") {
      SearchResult s = search_certificate(omega);
      if (!s.certificate) {
        for (const auto& l : s.log) log << l << "\n";
        throw RefusalError("no certificate found for " + omega.system().name());
      }
      return *s.certificate;
    }
    return certificate_from_json_text(slurp(spec), omega.system_ptr());
  }

  int cert_verify() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    if (opt_.certs.size() != 1) throw ValidationError("cert verify takes one --cert");
    OmegaContext omega(W, opt_.context(!opt_.no_table));
    std::ostringstream log;
    const Certificate c = certificate_for(omega, opt_.certs.front(), log);
    Report r = verify_certificate(omega, c);
    r.checks.push_back(filtration_check(omega, c));
    return report(r);
  }

  int cert_product() {
    Factors f = factors(true);
    std::vector<std::string> specs = opt_.certs;
    if (specs.size() > 2) throw ValidationError("cert product takes at most two --cert");
    for (int k = static_cast<int>(specs.size()); k < 2; ++k) {
      specs.push_back(f.P->factor(k + 1)->rank() <= 1 ? "builtin" : "search");
    }
    std::ostringstream log;
    const Certificate c1 = certificate_for(*f.f1, specs[0], log);
    const Certificate c2 = certificate_for(*f.f2, specs[1], log);
    const Report r1 = verify_certificate(*f.f1, c1);
    const Report r2 = verify_certificate(*f.f2, c2);
    Report r;
    r.title = "product certificate on " + f.P->system().name();
    Check factor_check("factor-certificates", "factor certificates verified");
    factor_check.note(r1.overall(), "first factor: " + std::string(outcome_name(r1.overall())));
    factor_check.note(r2.overall(), "second factor: " + std::string(outcome_name(r2.overall())));
    r.checks.push_back(factor_check);
    const Certificate c = product_certificate(*f.P, c1, r1, c2, r2);
    for (auto& check : verify_certificate(*f.omega, c).checks) r.checks.push_back(std::move(check));
    r.checks.push_back(filtration_check(*f.omega, c));
    r.checks.push_back(check_product_corners(*f.P, *f.omega, c1, c2));
    for (auto& check : nilpotency_check(*f.P, *f.omega, c1, c2).checks) {
      r.checks.push_back(std::move(check));
    }
    write_certificate(c);
    return report(r);
  }

  int cert_search() {
    const CoxeterPtr W = load_coxeter(opt_.coxeter);
    OmegaContext omega(W, opt_.context(true));
    const SearchResult s = search_certificate(omega, opt_.degrees.empty() ? nullptr : &opt_.degrees);
    if (!s.certificate) {
      Report r;
      r.title = "certificate search on " + W->name();
      Check c("search", "certificate search");
      for (const auto& l : s.log) c.note(Outcome::kFail, l);
      if (c.details.empty()) c.note(Outcome::kFail, "no certificate found");
      r.checks.push_back(c);
      return report(r);
    }
    write_certificate(*s.certificate);
    Report r = s.report;
    r.checks.push_back(filtration_check(omega, *s.certificate));
    return report(r);
  }

 private:
  int report_with(Report& r, Check c, const std::string& body) {
    r.checks.push_back(std::move(c));
    if (!body.empty()) emit(body);
    return report(r);
  }

  // Without --out the certificate precedes the report on stdout.
  void write_certificate(const Certificate& c) { emit(certificate_to_json_text(c)); }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in W-graph algebras", "wgalg"};
  app.require_subcommand(1);
  Options opt;

  std::function<int()> action;
  std::unique_ptr<Runner> runner;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  int (Runner::*method)(), std::initializer_list<const char*> extras) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--coxeter", opt.coxeter, "Coxeter system: builtin name, JSON, or file");
    sub->add_option("--max-len", opt.max_len, "path length bound L")->check(CLI::PositiveNumber);
    sub->add_option("--source", opt.source, "relation source")
        ->check(CLI::IsMember({"closed-form", "braid"}));
    sub->add_option("--out", opt.out, "write the primary output to FILE");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    for (std::string_view x : extras) {
      if (x == "expr") sub->add_option("--expr", opt.expr, "expression");
      if (x == "table") sub->add_flag("--table", opt.table, "use the certified table");
      if (x == "no-table") sub->add_flag("--no-table", opt.no_table, "bounded oracle only");
      if (x == "wgraph") sub->add_option("--wgraph", opt.wgraph, "W-graph JSON file");
      if (x == "cert") sub->add_option("--cert", opt.certs, "certificate file, builtin or search");
      if (x == "degrees") sub->add_option("--degrees", opt.degrees, "degree multiset")->delimiter(',');
    }
    sub->callback([&, method] {
      action = [&, method] { return (*runner.*method)(); };
    });
  };

  CLI::App* coxeter = app.add_subcommand("coxeter", "Coxeter systems")->require_subcommand(1);
  leaf(coxeter, "info", "summary of a Coxeter system", &Runner::coxeter_info, {});
  CLI::App* quiver = app.add_subcommand("quiver", "compatibility graph")->require_subcommand(1);
  leaf(quiver, "dot", "DOT export", &Runner::quiver_dot, {});
  CLI::App* omega = app.add_subcommand("omega", "the algebra")->require_subcommand(1);
  leaf(omega, "relations", "defining relations", &Runner::omega_relations, {});
  leaf(omega, "table", "certified multiplication table", &Runner::omega_table, {});
  leaf(omega, "reduce", "normal form of an expression", &Runner::omega_reduce, {"expr", "table"});
  CLI::App* wgraph = app.add_subcommand("wgraph", "W-graphs")->require_subcommand(1);
  leaf(wgraph, "validate", "check a W-graph or the builtin corpus", &Runner::wgraph_validate,
       {"wgraph"});
  CLI::App* tensor = app.add_subcommand("tensor", "product machinery")->require_subcommand(1);
  leaf(tensor, "verify-kernel", "kernel of tau", &Runner::tensor_verify_kernel, {"no-table"});
  leaf(tensor, "verify-psi", "Psi commutation", &Runner::tensor_verify_psi, {"no-table"});
  CLI::App* cert = app.add_subcommand("cert", "decomposition certificates")->require_subcommand(1);
  leaf(cert, "verify", "check Z1-Z6", &Runner::cert_verify, {"cert", "no-table"});
  leaf(cert, "product", "certificate of a product", &Runner::cert_product, {"cert"});
  leaf(cert, "search", "search a certificate", &Runner::cert_search, {"degrees"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  runner = std::make_unique<Runner>(opt, out);
  try {
    return action();
  } catch (const BoundError& e) {
    err << "inconclusive: " << e.what() << "\n";
    out << "CHECK bound INCONCLUSIVE\n";
    return 2;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    out << "CHECK refusal FAIL\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wgalg
