#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wgalg/coxeter.hpp"
#include "wgalg/error.hpp"

using namespace wgalg;

namespace {

// Length distribution of the symmetric group S_{n+1} by inversion counting,
// computed by closure under adjacent transpositions.
std::map<int, int> symmetric_group_lengths(int n) {
  std::vector<int> id(n + 1);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      auto p = queue[i];
      std::swap(p[s], p[s + 1]);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  std::map<int, int> dist;
  for (const auto& p : seen) {
    int inv = 0;
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) inv += p[a] > p[b];
    }
    ++dist[inv];
  }
  return dist;
}

std::map<int, int> length_distribution(const std::vector<GroupElement>& els) {
  std::map<int, int> dist;
  for (const auto& g : els) ++dist[g.length];
  return dist;
}

}  // namespace

TEST(Parse, BuiltinNames) {
  const auto A2 = parse_coxeter("A2");
  EXPECT_EQ(A2.generators(), (std::vector<std::string>{"s1", "s2"}));
  EXPECT_EQ(A2.order(0, 1), 3);
  const auto P = parse_coxeter("A1xA1");
  EXPECT_EQ(P.generators(), (std::vector<std::string>{"s1", "t1"}));
  EXPECT_EQ(P.order(0, 1), 2);
  EXPECT_EQ(P.factors().size(), 2u);
  const auto I = parse_coxeter("I2(5)");
  EXPECT_EQ(I.order(0, 1), 5);
  EXPECT_EQ(parse_coxeter("G2").order(0, 1), 6);
  const auto B3 = parse_coxeter("B3");
  EXPECT_EQ(B3.order(0, 1), 3);
  EXPECT_EQ(B3.order(1, 2), 4);
  EXPECT_EQ(B3.order(0, 2), 2);
  EXPECT_EQ(parse_coxeter("A0").rank(), 0);
  EXPECT_EQ(parse_coxeter("A2xA1").generators(),
            (std::vector<std::string>{"s1", "s2", "t1"}));
  EXPECT_EQ(parse_coxeter("A2xA1").name(), "A2xA1");
}

TEST(Parse, Errors) {
  try {
    parse_coxeter("A2xQ3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_coxeter("B1"), ParseError);
  EXPECT_THROW(parse_coxeter("I2(1)"), ParseError);
  EXPECT_THROW(parse_coxeter("A"), ParseError);
  EXPECT_THROW(parse_coxeter(""), ParseError);
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b"],"matrix":[[1,3],[4,1]]})"),
               ValidationError);
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b"],"matrix":[[2,3],[3,1]]})"),
               ValidationError);
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b"],"matrix":[[1,null],[null,1]]})"),
               ValidationError);
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b"],"matrix":[[1,"inf"],["inf",1]]})"),
               ValidationError);
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b"],"matrix":[[1,3],[3,1]],)"),
               ParseError);
}

TEST(Parse, JsonDocumentWithProduct) {
  const auto W = parse_coxeter(
      R"({"generators":["a","b","c"],"matrix":[[1,3,2],[3,1,2],[2,2,1]],
          "product":[["a","b"],["c"]]})");
  EXPECT_EQ(W.rank(), 3);
  EXPECT_EQ(W.factors().size(), 2u);
  EXPECT_EQ(components(W), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  EXPECT_THROW(parse_coxeter(R"({"generators":["a","b","c"],"matrix":[[1,3,2],[3,1,2],[2,2,1]],
          "product":[["a"],["b","c"]]})"),
               InconsistentProductError);
  const auto back = parse_coxeter(coxeter_to_json_text(W));
  EXPECT_EQ(back, W);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(parse_coxeter("A1xA1")), (std::vector<std::vector<int>>{{0}, {1}}));
  EXPECT_EQ(components(parse_coxeter("A2")), (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_EQ(components(parse_coxeter("A2xA1")), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  const auto split = binary_split(parse_coxeter("A2xA1"));
  EXPECT_EQ(split.first, 0b011u);
  EXPECT_EQ(split.second, 0b100u);
  EXPECT_THROW(binary_split(parse_coxeter("A2")), NotAProductError);
}

TEST(Subsets, NamesRoundTrip) {
  const auto W = parse_coxeter("A2xA1");
  for (Subset I = 0; I < 8; ++I) EXPECT_EQ(W.parse_subset(W.subset_name(I)), I);
  EXPECT_EQ(W.subset_name(0b101), "{s1,t1}");
  EXPECT_EQ(W.parse_subset("{ }"), 0u);
  EXPECT_THROW(W.parse_subset("{s9}"), ParseError);
}

TEST(Products, ParabolicAndProduct) {
  const auto W = parse_coxeter("A2xA1");
  const auto W1 = parabolic(W, 0b011);
  EXPECT_EQ(W1.generators(), (std::vector<std::string>{"s1", "s2"}));
  EXPECT_EQ(W1.name(), "A2");
  const auto P = product(parse_coxeter("A2"), parse_coxeter("A1"));
  EXPECT_EQ(P.system.generators(), W.generators());
  EXPECT_EQ(P.embed_second, (std::vector<int>{2}));
}

TEST(Enumerate, SmallGroups) {
  const auto A2 = enumerate_elements(parse_coxeter("A2"), 100);
  ASSERT_EQ(A2.size(), 6u);
  std::vector<int> lengths;
  for (const auto& g : A2) lengths.push_back(g.length);
  EXPECT_EQ(lengths, (std::vector<int>{0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(enumerate_elements(parse_coxeter("A1xA1"), 100).size(), 4u);
  EXPECT_EQ(enumerate_elements(parse_coxeter("A0"), 100).size(), 1u);
  EXPECT_EQ(enumerate_elements(parse_coxeter("I2(5)")).size(), 10u);
  EXPECT_EQ(enumerate_elements(parse_coxeter("G2")).size(), 12u);
  EXPECT_EQ(enumerate_elements(parse_coxeter("B3")).size(), 48u);
  EXPECT_EQ(enumerate_elements(parse_coxeter("I2(7)xA1")).size(), 28u);
}

TEST(Enumerate, ShortLexWords) {
  const auto A2 = enumerate_elements(parse_coxeter("A2"));
  EXPECT_EQ(A2[3].word, (std::vector<int>{0, 1}));
  EXPECT_EQ(A2[4].word, (std::vector<int>{1, 0}));
  EXPECT_EQ(A2[5].word, (std::vector<int>{0, 1, 0}));
}

TEST(Enumerate, SymmetricGroupOracle) {
  for (int n = 1; n <= 4; ++n) {
    const auto els = enumerate_elements(parse_coxeter("A" + std::to_string(n)));
    EXPECT_EQ(length_distribution(els), symmetric_group_lengths(n)) << "A" << n;
  }
}

TEST(Enumerate, CapExceeded) {
  try {
    enumerate_elements(parse_coxeter("A4"), 50);
    FAIL();
  } catch (const GroupTooLargeError& e) {
    EXPECT_EQ(e.partial_count(), 50u);
  }
}

TEST(Group, RepresentationProperties) {
  for (const char* name : {"A3", "B3", "I2(5)", "I2(8)", "A2xA1", "G2"}) {
    const auto W = std::make_shared<const CoxeterSystem>(parse_coxeter(name));
    const CoxeterGroup G(W);
    // rho(s)rho(t) has order exactly m(s,t).
    for (int s = 0; s < W->rank(); ++s) {
      for (int t = 0; t < W->rank(); ++t) {
        const Matrix st = G.generator_matrix(s) * G.generator_matrix(t);
        const Matrix I = Matrix::identity(W->rank(), W->field());
        Matrix P = st;
        int order = 1;
        while (!(P == I) && order <= 100) {
          P = P * st;
          ++order;
        }
        EXPECT_EQ(order, s == t ? 1 : W->order(s, t)) << name;
      }
    }
    // Lengths agree with descents read off the matrices: l(ws) < l(w) iff
    // w(alpha_s) is a negative root.
    for (std::size_t w = 0; w < G.size(); ++w) {
      EXPECT_EQ(static_cast<int>(G.element(w).word.size()), G.length(w));
      EXPECT_EQ(G.evaluate(G.element(w).word), w);
      for (int s = 0; s < W->rank(); ++s) {
        const std::size_t ws = G.right_mult(w, s);
        EXPECT_EQ(std::abs(G.length(ws) - G.length(w)), 1);
        double col = 0;
        for (int r = 0; r < W->rank(); ++r) col += G.representation(w)(r, s).to_double();
        EXPECT_EQ(G.length(ws) < G.length(w), col < 0) << name;
        EXPECT_EQ(G.right_mult(ws, s), w);
        EXPECT_EQ(G.left_mult(s, G.left_mult(s, w)), w);
      }
    }
    // Exactly one longest element.
    int maxlen = 0;
    for (const auto& g : G.elements()) maxlen = std::max(maxlen, g.length);
    EXPECT_EQ(G.length(G.longest()), maxlen);
    EXPECT_EQ(G.length(G.longest() - 1) < maxlen, true);
  }
}
