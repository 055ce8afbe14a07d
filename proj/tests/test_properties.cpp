#include <gtest/gtest.h>

#include "generators.hpp"

using namespace hpl;
using namespace hpl::testgen;

namespace {

std::vector<std::pair<KacMoodyMatrix, VectorV>> finite_cases() {
  return {{cartan::A2(), VectorV{1, 1}}, {cartan::A2(), VectorV{2, 1}}, {cartan::A2(), VectorV{1, 2}},
          {cartan::B2(), VectorV{1, 1}}, {cartan::B2(), VectorV{2, 2}}, {cartan::G2(), VectorV{2, 1}}};
}

}  // namespace

TEST(Properties, SimpleReflectionsAreInvolutions) {
  std::mt19937 gen(1);
  for (auto a : {cartan::A2(), cartan::G2(), cartan::A1_affine(), cartan::H3()}) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 100; ++k) {
      auto v = random_vector(rs, gen, 5, 7);
      std::size_t i = gen() % rs.rank();
      EXPECT_EQ(rs.simple_reflection(i, rs.simple_reflection(i, v)), v);
      EXPECT_EQ(rs.alpha(i, rs.simple_reflection(i, v)), -rs.alpha(i, v));
    }
  }
}

TEST(Properties, RootListsAreNested) {
  for (auto a : {cartan::G2(), cartan::A1_affine(), cartan::A2_affine(), cartan::H3()}) {
    auto rs = RootSystem::from_gcm(a);
    for (long h = 1; h < 9; ++h) {
      auto small = rs.positive_roots(h), big = rs.positive_roots(h + 1);
      std::set<RealRoot> b(big.begin(), big.end());
      for (const auto& x : small) EXPECT_TRUE(b.count(x));
      EXPECT_EQ(std::set<RealRoot>(small.begin(), small.end()).size(), small.size());
    }
  }
}

TEST(Properties, RelativeLengthBounds) {
  std::mt19937 gen(2);
  for (auto a : {cartan::A2(), cartan::B2(), cartan::A1_affine(), cartan::A2_affine()}) {
    auto rs = RootSystem::from_gcm(a);
    std::uniform_int_distribution<int> letter(0, int(rs.rank()) - 1), len(0, 6);
    for (int k = 0; k < 100; ++k) {
      Word w;
      for (int j = len(gen); j > 0; --j) w.push_back(letter(gen));
      auto x = rs.normalize(std::span<const int>(w));
      auto v = random_vector(rs, gen, 3, 3);
      EXPECT_LE(rs.relative_length(v, x, 40), x.length());
      auto special = random_vector(rs, gen, 3, 1);
      EXPECT_EQ(rs.relative_length(special, x, 40), x.length());
    }
  }
}

TEST(Properties, TitsWitnessIsDominant) {
  std::mt19937 gen(3);
  for (auto a : {cartan::A2(), cartan::A1_affine(), cartan::A2_affine(), cartan::H3()}) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 100; ++k) {
      auto v = random_vector(rs, gen, 4, 3);
      auto t = rs.tits_cone_membership(v, 2000);
      if (t.verdict == TitsVerdict::In) {
        ASSERT_TRUE(t.witness);
        EXPECT_TRUE(rs.is_dominant(rs.act(*t.witness, v)));
      }
    }
  }
}

TEST(Properties, CosetBruhatMatchesSignOfRoot) {
  std::mt19937 gen(4);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    auto roots = rs.positive_roots(20);
    for (const auto& xi : orbit(rs, lam)) {
      auto s = rs.coset_of_direction(xi, lam);
      for (const auto& b : roots) {
        Rational v = rs.eval(b, xi);
        if (v == 0) continue;
        auto t = rs.coset_of_direction(rs.reflect(b, xi), lam);
        bool lower = !(t == s) && rs.bruhat_leq(t.element, s.element);
        EXPECT_EQ(v < 0, lower);
      }
    }
  }
}

TEST(Properties, GeneratedPathsAreHeckeAndSatisfyInequalities) {
  std::mt19937 gen(5);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 40; ++k) {
      auto p = random_hecke_path_in_Y(rs, lam, gen, 12, 3, 20);
      auto hv = check_hecke(rs, p, 20);
      ASSERT_TRUE(hv.ok) << p.key() << " " << hv.reason;
      for (const auto& c : hv.certificates)
        for (std::size_t i = 0; i < c.roots.size(); ++i) {
          EXPECT_LT(rs.eval(c.roots[i], c.xis[i]), 0);
          EXPECT_EQ(rs.reflect(c.roots[i], c.xis[i]), c.xis[i + 1]);
          EXPECT_TRUE(is_integer(rs.eval(c.roots[i], p.eval(c.t))));
          EXPECT_TRUE(rs.bruhat_leq(c.sigmas[i + 1].element, c.sigmas[i].element));
          EXPECT_FALSE(c.sigmas[i + 1] == c.sigmas[i]);
        }
      auto st = stats(rs, p, 20);
      auto [dd, cd] = stats_by_definition(rs, p, 20);
      EXPECT_EQ(st.ddim, dd) << p.key();
      EXPECT_EQ(st.codim, cd) << p.key();
      Rational gap = rho_gap(rs, p);
      EXPECT_LE(Rational(st.ddim), gap);
      EXPECT_LE(gap, Rational(st.codim));
      EXPECT_EQ(Rational(st.ddim + st.codim), 2 * gap);
      auto ls = is_ls(rs, p, 20);
      EXPECT_EQ(ls.ls, Rational(st.ddim) == gap);
      if (ls.ls) EXPECT_TRUE(p.end().is_integral());
      ASSERT_TRUE(is_billiard(rs, p, 20));
      // dim + codim = rho(2 lambda); dim <= rho(lambda + nu) iff ddim <= rho(lambda - nu)
      EXPECT_EQ(Rational(*st.dim + st.codim), rs.rho_of(2 * lam));
      EXPECT_EQ(Rational(*st.dim) <= rs.rho_of(lam + p.nu()), Rational(st.ddim) <= gap);
    }
  }
}

TEST(Properties, StatsMatchDefinitionOnArbitraryPaths) {
  std::mt19937 gen(6);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 30; ++k) {
      auto p = random_path(rs, lam, gen, 10, 4);
      auto st = stats(rs, p, 20);
      auto [dd, cd] = stats_by_definition(rs, p, 20);
      EXPECT_EQ(st.ddim, dd) << p.key();
      EXPECT_EQ(st.codim, cd) << p.key();
      long pos_rev = 0, neg = 0;
      for (const auto& t : st.tallies) pos_rev += t.pos_rev, neg += t.neg;
      EXPECT_EQ(pos_rev, st.ddim);
      EXPECT_EQ(neg, st.codim);
    }
  }
}

TEST(Properties, ReverseAndContinuity) {
  std::mt19937 gen(7);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 30; ++k) {
      auto p = random_path(rs, lam, gen, 10, 5);
      auto rv = reverse_path(rs, p);
      EXPECT_EQ(reverse_path(rs, rv), p);
      EXPECT_EQ(rv.nu(), -p.nu());
      for (const auto& t : p.breakpoints()) EXPECT_EQ(rv.eval(1 - t), p.eval(t));
      // left and right formulas agree at the breakpoints
      for (std::size_t j = 1; j < p.segments(); ++j) {
        const auto& t = p.breakpoints()[j];
        auto left = p.eval(p.breakpoints()[j - 1]) + (t - p.breakpoints()[j - 1]) * p.velocities()[j - 1];
        auto right = p.eval(p.breakpoints()[j + 1]) - (p.breakpoints()[j + 1] - t) * p.velocities()[j];
        EXPECT_EQ(left, right);
      }
      // reversed stats are the tallies of the reverse path
      auto st = stats(rs, p, 20), sr = stats(rs, rv, 20);
      long pos = 0, neg_rev = 0;
      for (const auto& x : st.tallies) pos += x.pos, neg_rev += x.neg_rev;
      EXPECT_EQ(*st.dim, pos);
      long rev_pos = 0, rev_neg = 0;
      for (const auto& x : sr.tallies) rev_pos += x.pos, rev_neg += x.neg;
      EXPECT_EQ(rev_pos, st.ddim);
      EXPECT_EQ(rev_neg, neg_rev);
    }
  }
}

TEST(Properties, OperatorLedger) {
  std::mt19937 gen(8);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 40; ++k) {
      auto p = random_hecke_path_in_Y(rs, lam, gen, 12, 3, 20);
      auto st = stats(rs, p, 20);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        auto e = root_operator(rs, OpKind::E, i, p);
        auto f = root_operator(rs, OpKind::F, i, p);
        auto et = root_operator(rs, OpKind::ETilde, i, p);
        if (e.path) {
          auto s2 = stats(rs, *e.path, 20);
          EXPECT_EQ(s2.ddim, st.ddim - 1) << p.key();
          EXPECT_EQ(s2.codim, st.codim - 1) << p.key();
          EXPECT_EQ(e.path->end(), p.end() + rs.coroot_vector(i));
          auto back = root_operator(rs, OpKind::F, i, *e.path);
          ASSERT_TRUE(back.path);
          EXPECT_EQ(*back.path, p);
          if (!et.path) EXPECT_TRUE(is_hecke(rs, *e.path, 20)) << p.key();
        }
        if (f.path) {
          auto s2 = stats(rs, *f.path, 20);
          EXPECT_EQ(s2.ddim, st.ddim + 1) << p.key();
          EXPECT_EQ(s2.codim, st.codim + 1) << p.key();
          EXPECT_EQ(f.path->end(), p.end() - rs.coroot_vector(i));
          auto back = root_operator(rs, OpKind::E, i, *f.path);
          ASSERT_TRUE(back.path);
          EXPECT_EQ(*back.path, p);
          if (!et.path) EXPECT_TRUE(is_hecke(rs, *f.path, 20)) << p.key();
        }
        if (et.path) {
          auto s2 = stats(rs, *et.path, 20);
          EXPECT_EQ(s2.ddim, st.ddim + 1) << p.key();
          EXPECT_EQ(s2.codim, st.codim - 1) << p.key();
          EXPECT_EQ(et.path->end(), p.end());
          EXPECT_TRUE(is_hecke(rs, *et.path, 20)) << p.key();
        }
      }
    }
  }
}

TEST(Properties, PatternLengthIsDdim) {
  std::mt19937 gen(9);
  for (auto [a, lam] : finite_cases()) {
    auto rs = RootSystem::from_gcm(a);
    for (int k = 0; k < 25; ++k) {
      auto p = random_hecke_path_in_Y(rs, lam, gen, 12, 3, 20);
      auto pat = parameter_pattern(rs, p, 20);
      EXPECT_EQ(pat.N, stats(rs, p, 20).ddim) << p.key();
      auto d = decorate(rs, p, 20);
      for (std::size_t j = 0; j < d.galleries.size(); ++j) {
        const auto& g = d.galleries[j];
        EXPECT_TRUE(is_positively_folded(rs, g));
        EXPECT_EQ(rs.act(g.end(), lam), p.velocities()[j + 1]);
      }
      EXPECT_GE(codim_tilde(rs, d, 20), stats(rs, p, 20).codim);
    }
  }
}
