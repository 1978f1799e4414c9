#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "wgalg/decomp.hpp"
#include "wgalg/error.hpp"

using namespace wgalg;

namespace {

std::string z_text(const Report& r) { return r.to_text(); }

}  // namespace

TEST(Certificate, BuiltinA1Verifies) {
  auto W = system_of("A1");
  OmegaContext omega(W);
  const Certificate c = builtin_certificate(W);
  EXPECT_EQ(c.labels, (std::vector<std::string>{"sign", "triv"}));
  const Report r = verify_certificate(omega, c);
  ASSERT_EQ(r.checks.size(), 6u);
  for (const auto& check : r.checks) EXPECT_EQ(check.outcome, Outcome::kPass) << check.name;
  EXPECT_EQ(r.overall(), Outcome::kPass);
  EXPECT_NE(z_text(r).find("CHECK Z4 PASS"), std::string::npos);
}

TEST(Certificate, ReversedOrderFailsZ3) {
  auto W = system_of("A1");
  OmegaContext omega(W);
  Certificate c = builtin_certificate(W);
  c.order = {{"triv", "sign"}};
  const Report r = verify_certificate(omega, c);
  EXPECT_EQ(r.find("Z3")->outcome, Outcome::kFail);
  EXPECT_NE(z_text(r).find("X{s1}->{}"), std::string::npos);
  EXPECT_EQ(r.passed("Z1"), true);
  EXPECT_EQ(exit_code(r.overall()), 1);
}

TEST(Certificate, WrongDegreeFailsZ4) {
  auto W = system_of("A2");
  OmegaContext omega(W);
  SearchResult found = search_certificate(omega);
  ASSERT_TRUE(found.certificate);
  Certificate c = *found.certificate;
  c.degrees["refl"] = 1;
  EXPECT_THROW(verify_certificate(omega, c), ValidationError);  // sum of squares breaks
  c.degrees["sign"] = 1;
  c.degrees["refl"] = 2;
  c.elements["refl"] = OmegaElement::vertex(1);
  c.elements["triv"] = OmegaElement::vertex(0) + OmegaElement::vertex(2);
  EXPECT_EQ(verify_certificate(omega, c).overall(), Outcome::kFail);
}

TEST(Certificate, TrivialGroup) {
  auto W = system_of("A0");
  OmegaContext omega(W);
  const Certificate c = builtin_certificate(W);
  EXPECT_EQ(c.labels, (std::vector<std::string>{"triv"}));
  EXPECT_EQ(verify_certificate(omega, c).overall(), Outcome::kPass);
}

TEST(Certificate, BuiltinRejectsLargerRank) {
  EXPECT_THROW(builtin_certificate(system_of("A2")), ValidationError);
}

TEST(Certificate, ShapeErrors) {
  auto W = system_of("A1");
  Certificate c = builtin_certificate(W);
  c.order.push_back({"triv", "sign"});
  EXPECT_THROW(c.closure(), ValidationError);
  Certificate d = builtin_certificate(W);
  d.degrees["sign"] = 2;
  EXPECT_THROW(check_certificate_shape(d, 2), ValidationError);
  Certificate e = builtin_certificate(W);
  e.labels.push_back("sign");
  EXPECT_THROW(check_certificate_shape(e, 2), ValidationError);
}

TEST(Certificate, JsonRoundTrip) {
  auto W = system_of("A1");
  const Certificate c = builtin_certificate(W);
  const std::string text = certificate_to_json_text(c);
  const Certificate back = certificate_from_json_text(text);
  EXPECT_EQ(back.labels, c.labels);
  EXPECT_EQ(back.degrees, c.degrees);
  EXPECT_EQ(back.order, c.order);
  EXPECT_EQ(back.elements, c.elements);
  EXPECT_EQ(certificate_to_json_text(back), text);
  EXPECT_THROW(certificate_from_json_text(text, system_of("A2")), ValidationError);
  EXPECT_THROW(certificate_from_json_text("{\"labels\": 3}"), Error);
}

TEST(Certificate, DegreesAsList) {
  const std::string text = R"({"coxeter": "A1", "labels": ["sign", "triv"], "degrees": [1, 1],
    "order": [["sign", "triv"]], "elements": {"sign": "E{s1}", "triv": "E{}"}})";
  const Certificate c = certificate_from_json_text(text);
  auto W = c.system;
  OmegaContext omega(W);
  EXPECT_EQ(verify_certificate(omega, c).overall(), Outcome::kPass);
}

TEST(Certificate, TransitiveReduction) {
  const std::vector<std::string> labels = {"a", "b", "c"};
  EXPECT_EQ(transitive_reduction(labels, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
            (std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}}));
}

TEST(Search, A1) {
  auto W = system_of("A1");
  OmegaContext omega(W);
  const SearchResult r = search_certificate(omega);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.report.overall(), Outcome::kPass);
  EXPECT_EQ(r.certificate->elements.at("sign"), OmegaElement::vertex(1));
  EXPECT_EQ(r.certificate->elements.at("triv"), OmegaElement::vertex(0));
  EXPECT_EQ(r.certificate->order,
            (std::vector<std::pair<std::string, std::string>>{{"sign", "triv"}}));
}

TEST(Search, A2MatchesGolden) {
  auto W = system_of("A2");
  OmegaContext omega(W);
  const SearchResult r = search_certificate(omega);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.report.overall(), Outcome::kPass) << r.report.to_text();
  const Certificate& c = *r.certificate;
  EXPECT_EQ(c.elements.at("sign"), OmegaElement::vertex(3));
  EXPECT_EQ(c.elements.at("refl"), OmegaElement::vertex(1) + OmegaElement::vertex(2));
  EXPECT_EQ(c.elements.at("triv"), OmegaElement::vertex(0));
  EXPECT_EQ(c.degrees.at("refl"), 2);
  const std::string golden = read_file(data_path("golden/cert_A2.json"));
  ASSERT_FALSE(golden.empty());
  const Certificate g = certificate_from_json_text(golden, W);
  // Labels follow corpus order in the search; compare as relations.
  EXPECT_EQ(std::set<std::string>(g.labels.begin(), g.labels.end()),
            std::set<std::string>(c.labels.begin(), c.labels.end()));
  EXPECT_EQ(g.closure()[g.index("sign")][g.index("triv")], true);
  EXPECT_EQ(c.closure()[c.index("sign")][c.index("triv")], true);
  EXPECT_EQ(std::set(g.order.begin(), g.order.end()), std::set(c.order.begin(), c.order.end()));
  EXPECT_EQ(g.elements, c.elements);
  EXPECT_EQ(g.degrees, c.degrees);
  EXPECT_EQ(filtration_check(omega, c).outcome, Outcome::kPass);
}

TEST(Search, RejectsBadDegrees) {
  auto W = system_of("A1");
  OmegaContext omega(W);
  const std::vector<int> degrees = {2};
  const SearchResult r = search_certificate(omega, &degrees);
  EXPECT_FALSE(r.certificate);
  ASSERT_FALSE(r.log.empty());
  EXPECT_NE(r.log.front().find("sum of squared degrees is 4"), std::string::npos);
  const std::vector<int> ok = {1, 1};
  EXPECT_TRUE(search_certificate(omega, &ok).certificate);
}

TEST(Search, RelabellingInvariance) {
  auto W = system_of("A2");
  OmegaContext omega(W);
  const SearchResult r = search_certificate(omega);
  ASSERT_TRUE(r.certificate);
  const Certificate& c = *r.certificate;
  std::mt19937 rng(11);
  const std::vector<std::string> pool = {"x", "y", "z", "w", "u", "v", "p", "q"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> names = pool;
    std::shuffle(names.begin(), names.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < c.labels.size(); ++i) rename[c.labels[i]] = names[i];
    Certificate d = relabel(c, rename);
    std::shuffle(d.labels.begin(), d.labels.end(), rng);
    // Only the cheap checks are rerun each time; the full verification once.
    if (trial == 0) {
      EXPECT_EQ(verify_certificate(omega, d).overall(), Outcome::kPass);
    }
    check_certificate_shape(d, 6);
    for (const auto& [from, to] : rename) {
      EXPECT_EQ(d.elements.at(to), c.elements.at(from));
      EXPECT_EQ(d.degrees.at(to), c.degrees.at(from));
    }
    EXPECT_EQ(d.height(), c.height());
  }
}

TEST(Filtration, DetectsNonSubmodule) {
  auto W = system_of("A1");
  OmegaContext omega(W);
  Certificate c = builtin_certificate(W);
  // The regular W-graph of A1: X^s_{{s},{}} sends the {}-vertex to the {s}-vertex.
  const WGraph regular = wgraph_from_json_text(R"js({"coxeter": "A1", "vertices": ["s", "e"],
    "labels": {"s": ["s1"], "e": []}, "weights": {"s1": [["0", "1"], ["0", "0"]]}})js", W);
  const std::vector<OmegaModule> modules = {omega_module(regular)};
  EXPECT_EQ(filtration_check(omega, c).outcome, Outcome::kPass);
  EXPECT_EQ(filtration_check(omega, c, modules).outcome, Outcome::kPass);
  c.order = {{"triv", "sign"}};
  // Irreducible modules cannot see the reversal; the regular one does.
  EXPECT_EQ(filtration_check(omega, c).outcome, Outcome::kPass);
  EXPECT_EQ(filtration_check(omega, c, modules).outcome, Outcome::kFail);
}
