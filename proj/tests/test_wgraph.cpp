#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wgalg/error.hpp"
#include "wgalg/oracle.hpp"
#include "wgalg/wgraph.hpp"

using namespace wgalg;

namespace {

WGraph reflection_A2(const FieldElement& w = FieldElement(1)) {
  auto W = system_of("A2");
  WGraph G;
  G.system = W;
  G.field = W->field();
  G.name = "refl";
  G.vertices = {"x", "y"};
  G.labels = {1, 2};
  G.weights.assign(2, Matrix(2, 2, G.field));
  G.weights[0](0, 1) = w.in(G.field);
  G.weights[1](1, 0) = FieldElement::one(G.field);
  return G;
}

const WGraph& find(const std::vector<WGraph>& gs, const std::string& name) {
  for (const auto& g : gs) {
    if (g.name == name) return g;
  }
  throw std::runtime_error("no graph " + name);
}

}  // namespace

TEST(WGraph, A2Reflection) {
  const WGraph G = reflection_A2();
  EXPECT_TRUE(validate_wgraph(G).passed());
  const WGraphReport bad = validate_wgraph(reflection_A2(FieldElement(2)));
  EXPECT_FALSE(bad.passed());
  EXPECT_TRUE(bad.condition_a.empty());
  ASSERT_EQ(bad.braid.size(), 1u);
  EXPECT_FALSE(bad.braid[0].holds);

  const OmegaModule M = omega_module(G);
  Matrix es(2, 2, G.field), et(2, 2, G.field);
  es(0, 0) = FieldElement(1);
  et(1, 1) = FieldElement(1);
  EXPECT_EQ(M.e(0), es);
  EXPECT_EQ(M.e(1), et);
  EXPECT_EQ(M.apply(OmegaElement::vertex(1)), es);
}

TEST(WGraph, ConditionAViolation) {
  WGraph G = reflection_A2();
  G.labels = {1, 1};
  const WGraphReport r = validate_wgraph(G);
  EXPECT_FALSE(r.condition_a.empty());
  EXPECT_FALSE(r.passed());
}

TEST(WGraph, ShapeMismatch) {
  WGraph G = reflection_A2();
  G.weights[1] = Matrix(3, 3, G.field);
  EXPECT_THROW(validate_wgraph(G), ValidationError);
}

TEST(WGraph, IotaMatchesOmegaT) {
  const WGraph G = reflection_A2();
  const OmegaModule M = omega_module(G);
  for (int s = 0; s < 2; ++s) {
    EXPECT_EQ(M.apply(iota_T(*G.system, s)), omega_T_matrix(G, s));
  }
  EXPECT_EQ(M.apply(OmegaElement::scalar(*G.system, FieldElement(1))),
            Matrix::identity(2, G.field));
}

TEST(WGraph, SignModuleHasZeroX) {
  auto W = system_of("A1");
  const auto gs = builtin_wgraphs(W);
  const OmegaModule M = omega_module(find(gs, "sign"));
  EXPECT_TRUE(M.x(0).is_zero());
  EXPECT_EQ(M.dimension(), 1u);
}

TEST(WGraph, CorpusNames) {
  auto names = [](const std::string& n) {
    std::vector<std::string> out;
    for (const auto& g : builtin_wgraphs(system_of(n))) out.push_back(g.name);
    return out;
  };
  EXPECT_EQ(names("A1"), (std::vector<std::string>{"triv", "sign"}));
  EXPECT_EQ(names("A2"), (std::vector<std::string>{"triv", "sign", "refl"}));
  EXPECT_EQ(names("I2(5)"), (std::vector<std::string>{"triv", "sign", "refl1", "refl2"}));
  EXPECT_EQ(names("I2(6)").size(), 6u);
  EXPECT_EQ(names("I2(4)"),
            (std::vector<std::string>{"triv", "sign", "refl", "eps_s1", "eps_s2"}));
  EXPECT_EQ(names("A3"), (std::vector<std::string>{"triv", "sign"}));
  EXPECT_EQ(names("A2xA1").size(), 6u);
}

// Each builtin graph passes; perturbing any single nonzero weight breaks the
// braid identity.
TEST(WGraph, DihedralGraphsAndPerturbations) {
  for (const char* name : {"A2", "I2(5)", "I2(6)"}) {
    for (const WGraph& G : builtin_wgraphs(system_of(name))) {
      EXPECT_TRUE(validate_wgraph(G).passed()) << name << " " << G.name;
      for (int s = 0; s < G.system->rank(); ++s) {
        for (std::size_t x = 0; x < G.size(); ++x) {
          for (std::size_t y = 0; y < G.size(); ++y) {
            if (G.weights[s](x, y).is_zero()) continue;
            WGraph H = G;
            H.weights[s](x, y) += FieldElement::one(G.field);
            const WGraphReport r = validate_wgraph(H);
            bool braid_fails = false;
            for (const auto& b : r.braid) braid_fails |= !b.holds;
            EXPECT_TRUE(braid_fails) << name << " " << G.name;
          }
        }
      }
    }
  }
}

TEST(WGraph, RelationsAnnihilateBuiltinModules) {
  for (const char* name : {"A1", "A2", "I2(4)", "I2(5)", "I2(6)", "A1xA1", "A2xA1", "A3", "B3"}) {
    auto W = system_of(name);
    Quiver Q(W);
    for (auto source : {RelationSource::kClosedForm, RelationSource::kBraid}) {
      const auto rels = relations(Q, source);
      for (const WGraph& G : builtin_wgraphs(W)) {
        EXPECT_NO_THROW(omega_module(G, &rels)) << name << " " << G.name;
      }
    }
  }
}

// omega(T_w) does not depend on the reduced word.
TEST(WGraph, WellDefinedOnGroupElements) {
  for (const char* name : {"A2", "I2(5)", "I2(6)", "A2xA1", "B3"}) {
    auto W = system_of(name);
    CoxeterGroup group(W);
    for (const WGraph& G : builtin_wgraphs(W)) {
      for (std::size_t w = 0; w < group.size(); ++w) {
        const auto& word = group.element(w).word;
        // Another reduced word: peel off the largest right descent each time.
        std::vector<int> other;
        std::size_t cur = w;
        while (group.length(cur) > 0) {
          for (int s = W->rank() - 1; s >= 0; --s) {
            const std::size_t ws = group.right_mult(cur, s);
            if (group.length(ws) < group.length(cur)) {
              other.insert(other.begin(), s);
              cur = ws;
              break;
            }
          }
        }
        ASSERT_EQ(group.evaluate(other), w);
        EXPECT_EQ(omega_T_word(G, word), omega_T_word(G, other)) << name << " " << G.name;
      }
    }
  }
}

TEST(WGraph, JsonRoundTrip) {
  const std::string text = R"js({"coxeter": "I2(5)", "vertices": ["x", "y"],
    "labels": {"x": ["s1"], "y": ["s2"]},
    "weights": {"s1": [["0", "theta"], ["0", "0"]], "s2": [["0", "0"], ["theta", "0"]]}})js";
  const WGraph G = wgraph_from_json_text(text);
  EXPECT_TRUE(validate_wgraph(G).passed());
  const WGraph H = wgraph_from_json_text(wgraph_to_json_text(G));
  EXPECT_EQ(H.labels, G.labels);
  EXPECT_EQ(H.weights[0], G.weights[0]);
  EXPECT_EQ(H.weights[1], G.weights[1]);
  EXPECT_THROW(wgraph_from_json_text(R"js({"coxeter": "A2", "vertices": ["x"],
    "weights": {"s1": [["0", "1"]]}})js"), ValidationError);
  EXPECT_THROW(wgraph_from_json_text("{"), ParseError);
}

TEST(WGraph, ConductorOverride) {
  const WGraph G = wgraph_from_json_text(
      R"js({"coxeter": "A1", "conductor": 5, "vertices": ["x"], "labels": {"x": []}})js");
  EXPECT_EQ(G.field->conductor(), 5);
}

// A module witness and a zero verdict never coexist.
TEST(Property, ModuleWitnessConsistency) {
  std::mt19937 rng(3);
  int cases = 0;
  for (const char* name : {"A2", "I2(5)", "A1xA1", "A2xA1"}) {
    auto W = system_of(name);
    Quiver Q(W);
    const auto rels = relations(Q, RelationSource::kClosedForm);
    MembershipOracle o(Q, rels, 6);
    std::vector<OmegaModule> mods;
    for (const WGraph& G : builtin_wgraphs(W)) mods.push_back(omega_module(G));
    const auto& paths = o.paths();
    for (int k = 0; k < 130; ++k) {
      OmegaElement e;
      // Mix relation elements (zero) with random short paths.
      if (k % 2 == 0) e += rels[k % rels.size()].element * FieldElement(k + 1);
      const int terms = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int j = 0; j < terms; ++j) {
        const int id = std::uniform_int_distribution<int>(0, static_cast<int>(paths.size()) - 1)(rng);
        if (paths.path(id).length() <= 3) e.add(paths.path(id), FieldElement(j + 1));
      }
      const bool witnessed = module_nonzero(mods, e);
      const bool zero = o.reduce(e).zero;
      EXPECT_FALSE(witnessed && zero) << name << " " << e.to_string(*W);
      ++cases;
    }
  }
  EXPECT_GE(cases, 500);
}
