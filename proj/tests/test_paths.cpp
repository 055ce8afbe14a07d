#include <gtest/gtest.h>

#include "hpl/model.hpp"

using namespace hpl;

namespace {

Rational r(long p, long q = 1) { return frac(p, q); }

struct A1Fixture : ::testing::Test {
  RootSystem rs = RootSystem::from_gcm(cartan::A1());
  VectorV lam{1};
  WeylElement s = rs.generator(0);
  LambdaPath straight = LambdaPath::straight(rs, lam);
  LambdaPath fold = LambdaPath::make(rs, lam, rs.zero(), {s, rs.identity()}, {0, r(1, 2), 1});
  LambdaPath off_wall = LambdaPath::make(rs, lam, rs.zero(), {s, rs.identity()}, {0, r(3, 8), 1});
};

}  // namespace

TEST_F(A1Fixture, Eval) {
  EXPECT_EQ(straight.eval(r(1, 2)), VectorV{r(1, 2)});
  EXPECT_EQ(fold.eval(r(1, 2)), VectorV{r(-1, 2)});
  EXPECT_EQ(fold.eval(0), fold.start());
  EXPECT_EQ(fold.end(), rs.zero());
  EXPECT_THROW(fold.eval(r(3, 2)), OutOfRange);
  EXPECT_THROW(fold.eval(r(-1, 5)), OutOfRange);
}

TEST_F(A1Fixture, DirectionData) {
  auto d = direction_data(fold, r(1, 2));
  EXPECT_EQ(d.left, VectorV{-1});
  EXPECT_EQ(d.right, VectorV{1});
  EXPECT_EQ(d.w_minus.element, s);
  EXPECT_TRUE(d.w_plus.element.is_identity());
  auto q = direction_data(fold, r(1, 4));
  EXPECT_EQ(q.w_minus.element, s);
  EXPECT_EQ(q.w_plus.element, s);
  auto z = direction_data(straight, r(2, 7));
  EXPECT_TRUE(z.w_minus.element.is_identity() && z.w_plus.element.is_identity());
  EXPECT_THROW(direction_data(fold, 0), OutOfRange);
  EXPECT_THROW(direction_data(fold, 1), OutOfRange);
}

TEST_F(A1Fixture, Construction) {
  EXPECT_THROW(LambdaPath::straight(rs, VectorV{1, 0}), InvalidInput);
  EXPECT_THROW(LambdaPath::make(rs, lam, rs.zero(), {s, rs.identity()}, {0, r(1, 2), r(1, 2)}), InvalidInput);
  EXPECT_THROW(LambdaPath::make(rs, lam, rs.zero(), {s}, {0, r(1, 2)}), InvalidInput);
  EXPECT_THROW(LambdaPath::make(rs, lam, rs.zero(), {s, s}, {0, r(1, 2), r(1, 2), 1}), InvalidInput);
  auto merged = LambdaPath::make(rs, lam, rs.zero(), {s, s, rs.identity()}, {0, r(1, 4), r(1, 2), 1});
  EXPECT_EQ(merged, fold);
  auto from_vel = LambdaPath::from_vectors(rs, lam, rs.zero(), {VectorV{-1}, VectorV{1}}, {0, r(1, 2), 1});
  EXPECT_EQ(from_vel, fold);
  EXPECT_THROW(LambdaPath::from_vectors(rs, lam, rs.zero(), {VectorV{2}}, {0, 1}), InvalidInput);
  auto a2 = RootSystem::from_gcm(cartan::A2());
  EXPECT_THROW(LambdaPath::straight(a2, VectorV{1, 0}), NotDominant);
}

TEST_F(A1Fixture, Reverse) {
  auto rv = reverse_path(rs, straight);
  for (auto t : {r(0), r(1, 3), r(1)}) EXPECT_EQ(rv.eval(t), (1 - t) * lam);
  auto rf = reverse_path(rs, fold);
  EXPECT_EQ(rf.eval(r(1, 2)), VectorV{r(-1, 2)});
  EXPECT_EQ(rf.velocities()[0], VectorV{-1});
  EXPECT_EQ(rf.velocities()[1], VectorV{1});
  EXPECT_TRUE(rf.reversed_shape());
  EXPECT_EQ(reverse_path(rs, rf), fold);
  EXPECT_EQ(reverse_path(rs, rv), straight);
  EXPECT_EQ(rv.nu(), -straight.nu());
}

TEST_F(A1Fixture, Concat) {
  auto two = as_lambda_path(rs, concat(straight.polyline(), straight.polyline()));
  ASSERT_TRUE(two);
  EXPECT_EQ(*two, LambdaPath::straight(rs, VectorV{2}));
  auto zero = LambdaPath::straight(rs, rs.zero());
  auto same = as_lambda_path(rs, concat(fold.polyline(), zero.polyline()));
  ASSERT_TRUE(same);
  EXPECT_EQ(*same, fold);
  // the three pieces cut by e-tilde
  auto p = LambdaPath::make(rs, lam, rs.zero(), {s, rs.identity()}, {0, r(3, 4), 1});
  auto poly = p.polyline();
  auto joined = concat(concat(poly.restrict(0, r(1, 2)), poly.restrict(r(1, 2), 1)), Polyline{p.end(), {0, 1}, {rs.zero()}});
  auto back = as_lambda_path(rs, joined);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, p);
  auto three = concat(concat(poly.restrict(0, r(1, 3)), poly.restrict(r(1, 3), r(7, 8))), poly.restrict(r(7, 8), 1));
  EXPECT_EQ(*as_lambda_path(rs, three), p);
}

TEST_F(A1Fixture, FindChain) {
  auto c = find_chain(rs, VectorV{-1}, VectorV{1}, VectorV{r(-1, 2)}, lam, ChainQuery{}, 5);
  ASSERT_TRUE(c);
  ASSERT_EQ(c->roots.size(), 1u);
  EXPECT_EQ(c->roots[0], rs.simple_root(0));
  EXPECT_FALSE(find_chain(rs, VectorV{1}, VectorV{-1}, VectorV{r(-1, 2)}, lam, ChainQuery{}, 5));
  EXPECT_FALSE(find_chain(rs, VectorV{1}, VectorV{-1}, rs.zero(), lam, ChainQuery{}, 5));
  auto e = find_chain(rs, VectorV{1}, VectorV{1}, VectorV{r(1, 3)}, lam, ChainQuery{}, 5);
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->roots.empty());
  EXPECT_FALSE(find_chain(rs, VectorV{-1}, VectorV{1}, VectorV{r(-3, 8)}, lam, ChainQuery{}, 5));
}

TEST_F(A1Fixture, Hecke) {
  EXPECT_TRUE(is_hecke(rs, straight, 5));
  EXPECT_TRUE(is_hecke(rs, fold, 5));
  auto v = check_hecke(rs, off_wall, 5);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.reason, "condition vii fails at t=3/8");
  auto bad = LambdaPath::make(rs, lam, rs.zero(), {rs.identity(), s}, {0, r(1, 2), 1});
  auto vb = check_hecke(rs, bad, 5);
  EXPECT_FALSE(vb.ok);
  EXPECT_EQ(vb.reason, "condition vi fails at t=1/2");
}

TEST_F(A1Fixture, Ls) {
  EXPECT_TRUE(is_ls(rs, straight, 5).ls);
  auto v = is_ls(rs, fold, 5);
  EXPECT_TRUE(v.ls);
  EXPECT_TRUE(v.cross_checked);
  ASSERT_EQ(v.certificates.size(), 1u);
  EXPECT_EQ(v.certificates[0].sigmas[0].element, s);
  EXPECT_TRUE(v.certificates[0].sigmas[1].element.is_identity());
  EXPECT_FALSE(is_ls(rs, off_wall, 5).ls);
  auto half = LambdaPath::straight(rs, VectorV{r(1, 2)});
  EXPECT_FALSE(is_ls(rs, half, 5).ls);
  EXPECT_TRUE(is_ls(rs, LambdaPath::straight(rs, rs.zero()), 5).ls);
  EXPECT_TRUE(is_hecke(rs, LambdaPath::straight(rs, rs.zero()), 5));
}

TEST_F(A1Fixture, Stats) {
  auto st = stats(rs, straight, 5);
  EXPECT_EQ(st.ddim, 0);
  EXPECT_EQ(st.codim, 0);
  auto sf = stats(rs, fold, 5);
  EXPECT_EQ(sf.ddim, 1);
  EXPECT_EQ(sf.codim, 1);
  EXPECT_EQ(rho_gap(rs, fold), 1);
  EXPECT_EQ(Rational(sf.ddim + sf.codim), 2 * rho_gap(rs, fold));
  ASSERT_EQ(sf.tallies.size(), 1u);
  EXPECT_EQ(sf.tallies[0].neg, 1);
  EXPECT_EQ(sf.tallies[0].pos_rev, 1);
  ASSERT_TRUE(sf.dim);
  EXPECT_EQ(*sf.dim, 1);
}

TEST_F(A1Fixture, Operators) {
  auto f = root_operator(rs, OpKind::F, 0, straight);
  ASSERT_TRUE(f.path);
  EXPECT_EQ(*f.path, fold);
  EXPECT_EQ(f.path->end(), lam - rs.coroot_vector(0));
  auto e = root_operator(rs, OpKind::E, 0, *f.path);
  ASSERT_TRUE(e.path);
  EXPECT_EQ(*e.path, straight);
  EXPECT_FALSE(root_operator(rs, OpKind::E, 0, straight).path);
  auto ff = root_operator(rs, OpKind::F, 0, fold);
  ASSERT_TRUE(ff.path);
  EXPECT_EQ(ff.path->end(), VectorV{-1});
  EXPECT_FALSE(root_operator(rs, OpKind::F, 0, *ff.path).path);
  EXPECT_THROW(root_operator(rs, OpKind::F, 3, straight), InvalidInput);

  auto p = LambdaPath::make(rs, lam, rs.zero(), {s, rs.identity()}, {0, r(3, 4), 1});
  auto et = root_operator(rs, OpKind::ETilde, 0, p);
  ASSERT_TRUE(et.path);
  EXPECT_EQ(et.path->breakpoints(), (std::vector<Rational>{0, r(1, 2), r(3, 4), 1}));
  EXPECT_EQ(et.path->eval(r(1, 2)), VectorV{r(-1, 2)});
  EXPECT_EQ(et.path->eval(r(3, 4)), VectorV{r(-1, 4)});
  EXPECT_EQ(et.path->end(), p.end());
  EXPECT_FALSE(root_operator(rs, OpKind::ETilde, 0, straight).path);
}

TEST_F(A1Fixture, Billiard) {
  EXPECT_TRUE(is_billiard(rs, fold, 5));
  EXPECT_FALSE(is_billiard(rs, off_wall, 5));
}

TEST(PathsA2, HeckeButNotLs) {
  auto rs = RootSystem::from_gcm(cartan::A2());
  VectorV lam{1, 1};
  bool found = false;
  for (long a = -2; a <= 1 && !found; ++a)
    for (long b = -2; b <= 1 && !found; ++b) {
      VectorV y1{a, b};
      for (const auto& p : enumerate_hecke(rs, lam, rs.zero(), y1, 10)) {
        auto v = is_ls(rs, p, 10);
        if (!v.ls && v.hecke) {
          found = true;
          EXPECT_LT(Rational(v.ddim), v.rho_gap);
          EXPECT_TRUE(is_hecke(rs, p, 10));
        }
      }
    }
  EXPECT_TRUE(found);
}

TEST(PathsA2, HeightBoundIsEnforced) {
  auto rs = RootSystem::from_gcm(cartan::A2());
  VectorV lam{1, 1};
  auto w0 = rs.normalize({0, 1, 0});
  auto p = LambdaPath::make(rs, lam, rs.zero(), {w0, rs.identity()}, {0, r(1, 2), 1});
  EXPECT_THROW(check_hecke(rs, p, 1), HeightBoundTooSmall);
  EXPECT_NO_THROW(check_hecke(rs, p, 2));
}

TEST(PathsAffine, ReverseStatsNeedFiniteType) {
  auto rs = RootSystem::from_gcm(cartan::A1_affine());
  VectorV lam{0, 0, 1};
  auto p = LambdaPath::straight(rs, lam);
  EXPECT_THROW(stats(rs, reverse_path(rs, p), 10), UnsupportedType);
  EXPECT_FALSE(stats(rs, p, 10).dim);
  EXPECT_THROW(is_billiard(rs, p, 10), UnsupportedType);
}
