#include <gtest/gtest.h>

#include "hpl/hpl.hpp"

using namespace hpl;
using hpl::io::json;

namespace {

Rational r(long p, long q = 1) { return frac(p, q); }

}  // namespace

TEST(Io, Rationals) {
  EXPECT_EQ(io::to_json(r(-3, 6)), json("-1/2"));
  EXPECT_EQ(io::rational_from_json(json("6/4")), r(3, 2));
  EXPECT_EQ(io::rational_from_json(json(5)), r(5));
  EXPECT_THROW(io::rational_from_json(json(0.5)), InvalidInput);
  EXPECT_THROW(io::rational_from_json(json("1/0")), InvalidInput);
  EXPECT_THROW(io::rational_from_json(json("x")), InvalidInput);
}

TEST(Io, SystemRoundTrip) {
  for (auto a : {cartan::A2(), cartan::G2(), cartan::A1_affine(), cartan::H3()}) {
    auto rs = RootSystem::from_gcm(a);
    auto j = io::to_json(rs);
    auto back = io::system_from_json(j);
    EXPECT_EQ(back.gcm().entries(), rs.gcm().entries());
    EXPECT_EQ(back.simple_roots(), rs.simple_roots());
    EXPECT_EQ(back.simple_coroots(), rs.simple_coroots());
    EXPECT_EQ(back.names(), rs.names());
    EXPECT_EQ(io::to_json(back), j);
  }
  EXPECT_THROW(io::system_from_json(json::parse(R"({"cartan_matrix": [[2, 1], [1, 2]]})")), NotGCM);
  EXPECT_THROW(io::system_from_json(json::parse(R"({"matrix": [[2]]})")), InvalidInput);
  auto explicit_rs = io::system_from_json(
      json::parse(R"({"cartan_matrix": [[2]], "simple_roots": [[1, 1]], "simple_coroots": [[1, 1]]})"));
  EXPECT_EQ(explicit_rs.dim(), 2u);
}

TEST(Io, PathRoundTrip) {
  auto rs = RootSystem::from_gcm(cartan::A2());
  VectorV lam{1, 1};
  for (const auto& p : enumerate_hecke(rs, lam, rs.zero(), rs.zero(), 10)) {
    auto j = io::to_json(p);
    EXPECT_EQ(io::path_from_json(rs, j), p);
    EXPECT_EQ(io::to_json(io::path_from_json(rs, json::parse(j.dump()))), j);
  }
  auto a1 = RootSystem::from_gcm(cartan::A1());
  auto j = json::parse(R"({"lambda": ["1"], "start": ["0"], "directions": [["1"], []], "breakpoints": ["0", "1/2", "1"]})");
  auto p = io::path_from_json(a1, j);
  EXPECT_EQ(p.eval(r(1, 2)), VectorV{r(-1, 2)});
  EXPECT_THROW(io::path_from_json(a1, json::parse(R"({"lambda": ["1"], "start": ["0"], "directions": [[3]], "breakpoints": ["0", "1"]})")),
               InvalidInput);
  EXPECT_THROW(io::path_from_json(a1, json::parse(R"({"lambda": ["1"], "start": ["0"], "directions": [[]]})")), InvalidInput);
}

TEST(Io, CertificatesStatsPatterns) {
  auto rs = RootSystem::from_gcm(cartan::A2());
  VectorV lam{2, 1};
  for (const auto& p : enumerate_hecke(rs, lam, rs.zero(), VectorV{0, -1}, 10)) {
    for (const auto& c : check_hecke(rs, p, 10).certificates) {
      auto j = io::to_json(c);
      auto back = io::certificate_from_json(rs, j);
      EXPECT_EQ(back.t, c.t);
      EXPECT_EQ(back.roots, c.roots);
      EXPECT_EQ(back.xis, c.xis);
      EXPECT_EQ(io::to_json(back), j);
    }
    auto st = stats(rs, p, 10);
    EXPECT_EQ(io::to_json(io::stats_from_json(io::to_json(st))), io::to_json(st));
    auto pat = parameter_pattern(rs, p, 10);
    auto pj = io::to_json(pat);
    auto pb = io::pattern_from_json(pj);
    EXPECT_EQ(pb.N, pat.N);
    EXPECT_EQ(pb.factors, pat.factors);
    EXPECT_EQ(io::to_json(pb), pj);
    for (const auto& g : decorate(rs, p, 10).galleries) {
      auto gj = io::to_json(rs, g);
      auto gb = io::gallery_from_json(rs, gj);
      EXPECT_EQ(gb.chambers, g.chambers);
      EXPECT_EQ(io::to_json(rs, gb), gj);
    }
  }
}

TEST(Io, CrystalRoundTrip) {
  auto rs = RootSystem::from_gcm(cartan::B2());
  auto g = generate_ls_paths(rs, VectorV{1, 1}, 100, 20);
  auto j = io::to_json(g);
  auto back = io::crystal_from_json(rs, j);
  EXPECT_EQ(back.nodes, g.nodes);
  EXPECT_EQ(io::to_json(back), j);
  auto dot = io::to_dot(g);
  EXPECT_NE(dot.find("digraph crystal"), std::string::npos);
  EXPECT_NE(dot.find("label=\"f1\""), std::string::npos);
}

TEST(Io, ReadFileErrors) {
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InvalidInput);
  std::string path = ::testing::TempDir() + "bad.json";
  {
    std::ofstream out(path);
    out << "{\n \"cartan_matrix\": [[2,\n";
  }
  try {
    io::read_json_file(path);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}
