#include <gtest/gtest.h>

#include <cmath>

#include "nirrt/rng.hpp"
#include "nirrt/tree.hpp"
#include "oracles.hpp"

using namespace nirrt;

namespace {

Tree random_tree(int n, int dim, double side, Rng& rng) {
  const State lo = dim == 2 ? State{0, 0} : State{0, 0, 0};
  State hi = lo;
  for (int i = 0; i < dim; ++i) hi[i] = side;
  Tree t(sample_uniform_box(lo, hi, rng));
  for (int k = 1; k < n; ++k) t.add_vertex(sample_uniform_box(lo, hi, rng), static_cast<int>(rng.index(t.size())));
  return t;
}

}  // namespace

TEST(Nearest, SingleVertex) {
  const Tree t(State{3, 4});
  EXPECT_EQ(t.nearest(State{100, -7}), 0);
}

TEST(Nearest, ExactVertex) {
  Tree t(State{0, 0});
  t.add_vertex(State{5, 5}, 0);
  t.add_vertex(State{9, 1}, 1);
  EXPECT_EQ(t.nearest(State{5, 5}), 1);
  EXPECT_EQ(distance(t.vertex(t.nearest(State{9, 1})), State{9, 1}), 0.0);
}

TEST(Nearest, TiesGoToLowestIndex) {
  Tree t(State{0, 0});
  t.add_vertex(State{2, 0}, 0);
  t.add_vertex(State{-2, 0}, 0);
  EXPECT_EQ(t.nearest(State{1, 0}), 0);
  EXPECT_EQ(t.nearest(State{0, 5}), 0);
  Tree u(State{10, 10});
  u.add_vertex(State{-2, 0}, 0);
  u.add_vertex(State{2, 0}, 0);
  EXPECT_EQ(u.nearest(State{0, 0}), 1);
}

TEST(Nearest, MatchesBruteForce) {
  Rng rng(5);
  for (int dim : {2, 3}) {
    for (int n : {1, 10, 100, 1000}) {
      const Tree t = random_tree(n, dim, 200, rng);
      for (int q = 0; q < 300; ++q) {
        const State lo = dim == 2 ? State{-50, -50} : State{-50, -50, -50};
        State hi = lo;
        for (int i = 0; i < dim; ++i) hi[i] = 250;
        const State x = sample_uniform_box(lo, hi, rng);
        ASSERT_EQ(t.nearest(x), oracles::brute_nearest(t.vertices(), x));
      }
    }
  }
}

TEST(Nearest, DuplicateVerticesMatchBruteForce) {
  // Coarse grid coordinates produce many exact ties.
  Rng rng(8);
  Tree t(State{0, 0});
  for (int k = 0; k < 500; ++k) {
    t.add_vertex(State{static_cast<double>(rng.integer(0, 20)), static_cast<double>(rng.integer(0, 20))}, 0);
  }
  for (int q = 0; q < 500; ++q) {
    const State x{static_cast<double>(rng.integer(-2, 22)), static_cast<double>(rng.integer(0, 20)) + 0.5};
    ASSERT_EQ(t.nearest(x), oracles::brute_nearest(t.vertices(), x));
  }
}

TEST(Near, RadiusZeroOnlyCoincident) {
  Tree t(State{1, 1});
  t.add_vertex(State{2, 2}, 0);
  t.add_vertex(State{1, 1}, 1);
  EXPECT_EQ(t.near(State{1, 1}, 0.0), (std::vector<int>{0, 2}));
  EXPECT_TRUE(t.near(State{1.5, 1}, 0.0).empty());
}

TEST(Near, LargeRadiusReturnsAll) {
  Rng rng(2);
  const Tree t = random_tree(200, 2, 50, rng);
  EXPECT_EQ(t.near(State{25, 25}, 200).size(), 200u);
}

TEST(Near, MatchesBruteForce) {
  Rng rng(6);
  for (int dim : {2, 3}) {
    const Tree t = random_tree(2000, dim, 100, rng);
    for (double r : {0.5, 7.0, 15.0, 40.0}) {
      for (int q = 0; q < 100; ++q) {
        const State lo = dim == 2 ? State{0, 0} : State{0, 0, 0};
        State hi = lo;
        for (int i = 0; i < dim; ++i) hi[i] = 100;
        const State x = sample_uniform_box(lo, hi, rng);
        ASSERT_EQ(t.near(x, r), oracles::brute_near(t.vertices(), x, r));
      }
    }
  }
}

TEST(Near, NegativeRadiusThrows) {
  const Tree t(State{0, 0});
  EXPECT_THROW(t.near(State{0, 0}, -1), ContractViolation);
}

TEST(Steer, WithinReach) {
  EXPECT_EQ(steer(State{0, 0}, State{3, 4}, 10), (State{3, 4}));
  EXPECT_EQ(steer(State{0, 0}, State{10, 0}, 4), (State{4, 0}));
  EXPECT_EQ(steer(State{1, 1}, State{1, 1}, 4), (State{1, 1}));
  EXPECT_THROW(steer(State{0, 0}, State{1, 0}, 0), ContractViolation);
}

TEST(Steer, StepLengthProperty) {
  Rng rng(3);
  for (int k = 0; k < 10000; ++k) {
    const State a = sample_uniform_box(State{-50, -50}, State{50, 50}, rng);
    const State b = sample_uniform_box(State{-50, -50}, State{50, 50}, rng);
    const double eta = rng.uniform(0.1, 30);
    EXPECT_NEAR(distance(a, steer(a, b, eta)), std::min(eta, distance(a, b)), 1e-9);
  }
}

TEST(Tree, SetParentUpdatesSubtree) {
  Tree t(State{0, 0});
  const int a = t.add_vertex(State{10, 0}, 0);
  const int b = t.add_vertex(State{10, 10}, a);
  const int c = t.add_vertex(State{10, 20}, b);
  EXPECT_DOUBLE_EQ(t.cost(c), 30.0);
  t.set_parent(b, 0);
  EXPECT_DOUBLE_EQ(t.cost(b), std::hypot(10.0, 10.0));
  EXPECT_DOUBLE_EQ(t.cost(c), std::hypot(10.0, 10.0) + 10.0);
  EXPECT_TRUE(t.children(a).empty());
  EXPECT_EQ(t.path_to(c), (std::vector<State>{State{0, 0}, State{10, 10}, State{10, 20}}));
  EXPECT_THROW(t.add_vertex(State{1, 1}, 17), ContractViolation);
}
