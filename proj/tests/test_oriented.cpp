// Copyright 2026 The subdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
#include "subdisc/oracle.hpp"
#include "subdisc/oriented.hpp"

using namespace subdisc;

namespace {

std::int64_t half_up(int l) { return (l + 1) / 2; }

std::int64_t certificate(const Tree& t, const Orientation& o) {
  const OrientedProfiles p = oriented_profiles(t, o);
  std::int64_t best = 0;
  for (std::size_t v = 0; v < p.away.size(); ++v) best = std::max(best, p.away[v] + p.toward[v]);
  return best;
}

Orientation from_code(int m, std::uint32_t code) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) bits[e] = static_cast<std::uint8_t>(code >> e & 1U);
  return Orientation(bits);
}

}  // namespace

TEST(Orientation, LeavesAndFlip) {
  const Tree p = family::path(3);
  const Orientation o({0, 1});
  EXPECT_TRUE(o.leaves(p, 0, 0));
  EXPECT_FALSE(o.leaves(p, 0, 1));
  EXPECT_TRUE(o.leaves(p, 1, 2));
  EXPECT_EQ(o.flipped(), Orientation({1, 0}));
  EXPECT_THROW(Orientation({0, 2}), Error);
}

TEST(OrientedImbalance, AlternatingPath) {
  const Tree p = family::path(3);
  const RootedWitness w = oriented_imbalance(p, Orientation({0, 1}));
  EXPECT_EQ(w.value, 2);
  EXPECT_EQ(w.root, 1);
  EXPECT_EQ(w.edge_ids, (std::vector<EdgeId>{0, 1}));
}

TEST(OrientedImbalance, StarThreeOutTwoIn) {
  const Tree s = family::star(5);
  const Orientation o({0, 0, 0, 1, 1});
  const std::vector<EdgeId> out_edges = {0, 1, 2};
  EXPECT_EQ(rooted_value(s, o, out_edges, 0), 3);
  const std::vector<EdgeId> with_in = {0, 1, 2, 3};
  EXPECT_EQ(rooted_value(s, o, with_in, 4), 4);
  const RootedWitness w = oriented_imbalance(s, o);
  EXPECT_EQ(w.value, 4);
  EXPECT_EQ(rooted_value(s, o, w.edge_ids, w.root), 4);
}

TEST(OrientedImbalance, AllAwayFromZero) {
  const Tree p = family::path(9);
  const RootedWitness w = oriented_imbalance(p, Orientation(std::vector<std::uint8_t>(8, 0)));
  EXPECT_EQ(w.value, 8);
  EXPECT_EQ(w.root, 0);
}

TEST(OrientedImbalance, MatchesEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Tree t = family::random_tree(2 + trial % 10, rng());
    const auto bits = brute::random_bits(t.edge_count(), rng);
    const Orientation o(bits);
    const RootedWitness w = oriented_imbalance(t, o);
    EXPECT_EQ(w.value, brute::oriented_imbalance(t, bits));
    EXPECT_EQ(rooted_value(t, o, w.edge_ids, w.root), w.value);
    EXPECT_EQ(brute::rooted(t, bits, [&] {
                brute::Mask m = 0;
                for (EdgeId e : w.edge_ids) m |= brute::Mask{1} << e;
                return m;
              }(), w.root),
              w.value);
  }
}

TEST(OrientedProfiles, FlipDuality) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Tree t = family::random_tree(2 + trial % 50, rng());
    const Orientation o(brute::random_bits(t.edge_count(), rng));
    const OrientedProfiles a = oriented_profiles(t, o);
    const OrientedProfiles b = oriented_profiles(t, o.flipped());
    EXPECT_EQ(a.away, b.toward);
    EXPECT_EQ(a.toward, b.away);
    EXPECT_EQ(oriented_imbalance(t, o).value, oriented_imbalance(t, o.flipped()).value);
  }
}

TEST(RootedValue, Errors) {
  const Tree p = family::path(4);
  const Orientation o({0, 0, 0});
  try {
    rooted_value(p, o, std::vector<EdgeId>{0, 2}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DisconnectedSubtree);
  }
  EXPECT_THROW(rooted_value(p, o, std::vector<EdgeId>{2}, 0), Error);
}

TEST(OrientTree, PathAlternates) {
  for (int n = 3; n <= 12; ++n) {
    const Tree p = family::path(n);
    const Orientation o = orient_tree(p);
    for (EdgeId e = 1; e < p.edge_count(); ++e) EXPECT_NE(o[e], o[e - 1]);
    EXPECT_EQ(oriented_imbalance(p, o).value, 2);
  }
  EXPECT_EQ(oriented_imbalance(family::path(2), orient_tree(family::path(2))).value, 1);
}

TEST(OrientTree, StarsWithinBounds) {
  for (int l = 2; l <= 12; ++l) {
    const Tree s = family::star(l);
    const Orientation o = orient_tree(s);
    const std::int64_t v = oriented_imbalance(s, o).value;
    EXPECT_LE(v, l);
    EXPECT_GE(v, half_up(l) + 1);
  }
}

TEST(OrientTree, CertificateOnRandomTrees) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> size(2, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = family::random_tree(size(rng), rng());
    EXPECT_LE(certificate(t, orient_tree(t)), t.leaf_count());
  }
  const Tree f = fixtures::worked_tree();
  EXPECT_LE(certificate(f, orient_tree(f)), 6);
}

TEST(StarOrientedDiscrepancy, Formula) {
  EXPECT_EQ(star_oriented_discrepancy(2), 2);
  EXPECT_EQ(star_oriented_discrepancy(5), 4);
  EXPECT_EQ(star_oriented_discrepancy(6), 4);
  EXPECT_EQ(brute::exact_oriented(family::star(2)), 2);
  for (int l = 3; l <= 7; ++l) EXPECT_EQ(brute::exact_oriented(family::star(l)), star_oriented_discrepancy(l));
}

TEST(LowerBoundWitness, StarFourEveryOrientation) {
  const Tree s = family::star(4);
  for (std::uint32_t code = 0; code < 16; ++code) {
    const Orientation o = from_code(4, code);
    const RootedWitness w = oriented_lower_bound_witness(s, o);
    EXPECT_GE(w.value, 3);
    EXPECT_EQ(rooted_value(s, o, w.edge_ids, w.root), w.value);
  }
}

TEST(LowerBoundWitness, AlternatingPath) {
  const RootedWitness w = oriented_lower_bound_witness(family::path(3), Orientation({0, 1}));
  EXPECT_EQ(w.value, 2);
}

TEST(LowerBoundWitness, EveryOrientationOfSmallTrees) {
  for (const Tree& t : enumerate_trees_up_to(10)) {
    if (t.vertex_count() < 3) continue;
    const int m = t.edge_count();
    const std::int64_t bound = half_up(t.leaf_count()) + 1;
    for (std::uint32_t code = 0; code < (1U << m); ++code) {
      const Orientation o = from_code(m, code);
      const RootedWitness w = oriented_lower_bound_witness(t, o);
      ASSERT_GE(w.value, bound);
      ASSERT_EQ(rooted_value(t, o, w.edge_ids, w.root), w.value);
    }
  }
}

TEST(LowerBoundWitness, RandomLargerTrees) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Tree t = family::random_tree(3 + trial % 200, rng());
    const Orientation o(brute::random_bits(t.edge_count(), rng));
    const RootedWitness w = oriented_lower_bound_witness(t, o);
    EXPECT_GE(w.value, half_up(t.leaf_count()) + 1);
    EXPECT_EQ(rooted_value(t, o, w.edge_ids, w.root), w.value);
  }
}

TEST(LowerBoundWitness, TooSmall) {
  try {
    oriented_lower_bound_witness(family::path(2), Orientation({0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooSmall);
  }
}

TEST(OrientationIo, RoundTrip) {
  const Orientation o({0, 1, 1, 0});
  EXPECT_EQ(parse_orientation(emit_orientation(o)), o);
  EXPECT_THROW(parse_orientation("0\n2\n"), Error);
}
