#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "lindep/errors.hpp"
#include "lindep/verifier.hpp"

using namespace lindep;
using verifier::ClaimStatus;

namespace {

verifier::VerificationReport run(std::uint32_t p, std::uint32_t k, std::uint32_t n,
                                 verifier::Options opts = {}) {
  return verifier::run_suite(gf::FieldSpec::make(p, k), n, opts);
}

nlohmann::json without_timings(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("timings");
  return j;
}

}  // namespace

TEST(Registry, UniqueIds) {
  std::set<std::string_view> ids;
  for (const auto& c : verifier::claim_registry()) EXPECT_TRUE(ids.insert(c.id).second);
  EXPECT_EQ(ids.size(), 23u);
}

TEST(RunSuite, FriendshipGraph) {
  const auto r = run(3, 1, 2);
  ASSERT_EQ(r.claims.size(), verifier::claim_registry().size());
  for (std::size_t i = 0; i < r.claims.size(); ++i)
    EXPECT_EQ(r.claims[i].claim_id, verifier::claim_registry()[i].id);
  for (const auto& c : r.claims) {
    if (c.claim_id == "adjacency_energy_corollary" || c.claim_id == "distance_energy_corollary") {
      EXPECT_FALSE(c.match);
      EXPECT_EQ(c.status, ClaimStatus::known_discrepancy);
      EXPECT_EQ(c.note, "corollary inconsistent with spectrum theorem");
    } else {
      EXPECT_TRUE(c.match) << c.claim_id;
      EXPECT_EQ(c.status, ClaimStatus::pass) << c.claim_id;
    }
  }
  EXPECT_FALSE(r.has_failures());
  EXPECT_TRUE(r.has_known_discrepancies());
  ASSERT_EQ(r.charpoly_checks.size(), 3u);
  for (const auto& c : r.charpoly_checks) EXPECT_TRUE(c.equal);
}

TEST(RunSuite, K2UsesLineSpecialisation) {
  const auto r = run(2, 1, 1);
  EXPECT_EQ(std::get<BigInt>(r.claim("connected_diameter").predicted), 1);
  EXPECT_TRUE(r.claim("connected_diameter").match);
  for (const auto& c : r.charpoly_checks) EXPECT_TRUE(c.equal);
  EXPECT_FALSE(r.has_failures());
}

TEST(RunSuite, K4FromCustomModulus) {
  const auto r = verifier::run_suite(gf::FieldSpec::with_modulus(2, 2, {1, 1, 1}), 1);
  EXPECT_EQ(std::get<std::string>(r.claim("planarity").computed), "planar");
  EXPECT_EQ(std::get<BigInt>(r.claim("clique_number").computed), 4);
  EXPECT_EQ(std::get<BigInt>(r.claim("chromatic_number").computed), 4);
  EXPECT_EQ(std::get<BigInt>(r.claim("spanning_trees").computed), 16);
  EXPECT_FALSE(r.has_failures());
}

TEST(RunSuite, SearchBoundSkips) {
  verifier::Options opts;
  opts.bounds.search = 8;
  const auto r = run(3, 1, 2, opts);
  for (auto id : {"domination", "independence", "maximal_cliques", "clique_number", "chromatic_number"}) {
    EXPECT_EQ(r.claim(id).status, ClaimStatus::skipped) << id;
    EXPECT_FALSE(r.claim(id).match);
    EXPECT_FALSE(r.claim(id).note.empty());
  }
  EXPECT_EQ(r.claim("size").status, ClaimStatus::pass);
}

TEST(RunSuite, SpectraBoundSkips) {
  verifier::Options opts;
  opts.bounds.spectra = 4;
  const auto r = run(3, 1, 2, opts);
  EXPECT_TRUE(r.charpoly_checks.empty());
  EXPECT_EQ(r.claim("charpoly_distance").status, ClaimStatus::skipped);
  EXPECT_EQ(r.claim("adjacency_energy_corollary").status, ClaimStatus::skipped);
  EXPECT_FALSE(r.has_known_discrepancies());
}

TEST(RunSuite, GraphBoundThrows) {
  verifier::Options opts;
  opts.bounds.graph = 16;
  EXPECT_THROW(run(2, 1, 5, opts), CapacityError);
}

TEST(RunSuite, SequentialMatchesParallel) {
  verifier::Options seq;
  seq.parallel = false;
  const auto a = verifier::render_report(run(2, 2, 2), verifier::ReportFormat::json);
  const auto b = verifier::render_report(run(2, 2, 2, seq), verifier::ReportFormat::json);
  EXPECT_EQ(without_timings(a), without_timings(b));
}

TEST(ValuesMatch, Rules) {
  using verifier::ClaimValue;
  using verifier::values_match;
  EXPECT_TRUE(values_match(ClaimValue(BigInt(3)), ClaimValue(BigInt(3))));
  EXPECT_FALSE(values_match(ClaimValue(BigInt(3)), ClaimValue(BigInt(4))));
  EXPECT_TRUE(values_match(ClaimValue(verifier::Real(1)), ClaimValue(verifier::Real("1.0000000000001"))));
  EXPECT_FALSE(values_match(ClaimValue(verifier::Real(1)), ClaimValue(verifier::Real("1.00000001"))));
  EXPECT_TRUE(values_match(ClaimValue(BigInt(8)), ClaimValue(verifier::Real(8))));
  EXPECT_FALSE(values_match(ClaimValue(), ClaimValue()));
  EXPECT_FALSE(values_match(ClaimValue(true), ClaimValue(std::string("true"))));
}

TEST(Render, JsonShape) {
  const auto r = run(3, 1, 2);
  const auto text = verifier::render_report(r, "json");
  const auto j = nlohmann::json::parse(text);
  for (auto key : {"meta", "claims", "charpoly_checks", "timings"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["meta"]["q"], 3);
  EXPECT_EQ(j["meta"]["N"], "4");
  EXPECT_EQ(j["claims"].size(), 23u);
  EXPECT_EQ(j["claims"][1]["predicted"], 12);
  EXPECT_EQ(j["charpoly_checks"][0]["matrix"], "adjacency");
  EXPECT_TRUE(j["charpoly_checks"][0]["equal"].get<bool>());
  // Round trip.
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
  // Reals use 12 significant digits.
  const std::string e = j["claims"][15]["computed"];
  EXPECT_EQ(e, "12.7445626465");
}

TEST(Render, Deterministic) {
  const auto a = verifier::render_report(run(3, 1, 2), "json");
  const auto b = verifier::render_report(run(3, 1, 2), "json");
  EXPECT_EQ(without_timings(a).dump(), without_timings(b).dump());
}

TEST(Render, MarkdownRows) {
  const auto md = verifier::render_report(run(2, 1, 2), "markdown");
  for (const auto& c : verifier::claim_registry())
    EXPECT_NE(md.find("| " + std::string(c.id) + " |"), std::string::npos) << c.id;
  EXPECT_THROW(verifier::render_report(run(2, 1, 1), "yaml"), std::invalid_argument);
}
