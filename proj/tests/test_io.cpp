#include <gtest/gtest.h>

#include <popdist/io.hpp>

using namespace popdist;
using namespace popdist::vars;
using popdist::io::json;

TEST(Json, PopRoundTrip) {
  const PopPattern pat(3, {{3, 1}});
  const auto j = io::to_json(pat);
  EXPECT_EQ(j.dump(), R"({"size":3,"relations":[[3,1]]})");
  EXPECT_EQ(io::pop_from_json(j), pat);
  EXPECT_EQ(io::pop_from_json(io::to_json(flat_pop(5))), flat_pop(5));
}

TEST(Json, SeriesUsesCanonicalOrder) {
  const auto s = (1 + mpq_class(1, 2) * u() * x() + 3 * t() * x()).truncate(2);
  const auto j = io::to_json(s);
  EXPECT_EQ(j["order"], 2);
  ASSERT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0].dump(), R"({"exps":[0,0,0,0,0,0,0],"num":"1","den":"1"})");
  EXPECT_EQ(j["terms"][1].dump(), R"({"exps":[1,0,0,0,0,0,1],"num":"3","den":"1"})");
  EXPECT_EQ(j["terms"][2].dump(), R"({"exps":[1,0,0,1,0,0,0],"num":"1","den":"2"})");
  EXPECT_EQ(io::series_from_json(j), s);
}

TEST(Json, SeriesRoundTripOfDistribution) {
  const auto o = oracle_series(4, 6);
  EXPECT_EQ(io::series_from_json(json::parse(io::to_json(o).dump())), o);
}

TEST(Json, Stats) {
  EXPECT_EQ(io::to_json(Permutation::parse("34152")).dump(),
            R"({"perm":"34152","asc":2,"des":2,"lrmax":3,"rlmax":2,"lrmin":2,"rlmin":2})");
}

TEST(Json, CountsAsDecimalStrings) {
  const auto j = io::counts_json(RationalGF{1 - x(), 1 - 2 * x()}.expand(3));
  EXPECT_EQ(j.dump(), R"([{"n":0,"count":"1"},{"n":1,"count":"1"},{"n":2,"count":"2"},{"n":3,"count":"4"}])");
}

TEST(Json, FkHeader) {
  const auto j = io::fk_json(3, f3_gf().expand(2), "closed", "full");
  EXPECT_EQ(j["schema"], "popdist/1");
  EXPECT_EQ(j["generator"], "closed");
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["order"], 2);
}

TEST(Text, Counts) {
  EXPECT_EQ(io::counts_text(RationalGF{1 - 3 * x() + 2 * x() * x(), 1 - 4 * x() + 4 * x() * x() - 2 * x().pow(3) + 2 * x().pow(4)}.expand(6)),
            "1,1,2,6,16,42,112");
  EXPECT_EQ(io::counts_text(s_tpq_series(4).specialize({Var::p, Var::q})), "1,2,6,22");
  EXPECT_THROW(io::counts_text(RationalGF{1, 1 - mpq_class(1, 2) * x()}.expand(2)), DomainError);
}

TEST(Text, DistributionTable) {
  const auto t = distribution_table(3, flat_pop(3));
  const auto text = io::to_text(t);
  EXPECT_EQ(text.substr(0, text.find('\n')), "asc des lrmax rlmax lrmin rlmin count");
  EXPECT_NE(text.find("total 4"), std::string::npos);
  const auto j = io::to_json(t);
  EXPECT_EQ(j["total"], 4);
  EXPECT_EQ(j["pop"], io::to_json(flat_pop(3)));
}

TEST(Text, Deterministic) {
  EXPECT_EQ(io::to_json(solve_fk(4, 5).full).dump(), io::to_json(solve_fk(4, 5).full).dump());
}
