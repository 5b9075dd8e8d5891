#include <gtest/gtest.h>

#include <algorithm>

#include "mothernet/mothercuts.hpp"
#include "mothernet/schreier.hpp"
#include "mothernet/verify.hpp"
#include "support/oracles.hpp"

using namespace mothernet;

namespace {

const Edge* find_edge(const Network& net, const char* x, const char* y) {
  const auto u = net.find(DigitWord::parse(x)), v = net.find(DigitWord::parse(y));
  for (const Edge& e : net.edges()) {
    if ((e.u == *u && e.v == *v) || (e.u == *v && e.v == *u)) return &e;
  }
  return nullptr;
}

std::vector<TreeShape> shapes() { return {TreeShape::constant(2), TreeShape::repeating({3, 2, 4})}; }

}  // namespace

TEST(PlainCutset, EdgesCrossingThePosition) {
  for (int d = 0; d <= 2; ++d) {
    const Network net = build_projected(d, TreeShape::constant(2), 6);
    for (std::uint64_t p = 1; p < 64; ++p) {
      const auto cut = cutset_plain({p}, net);
      std::vector<EdgeId> crossing;
      for (EdgeId id = 0; id < net.edge_count(); ++id) {
        const Edge& e = net.edge(id);
        const auto lo = std::min(net.vertex(e.u).position.value, net.vertex(e.v).position.value);
        const auto hi = std::max(net.vertex(e.u).position.value, net.vertex(e.v).position.value);
        if (lo < p && p <= hi) crossing.push_back(id);
      }
      EXPECT_EQ(cut.edges, crossing);
      EXPECT_TRUE(validate_cutset(net, cut.edges, net.vertices_in_positions(0, p), net.vertices_in_positions(p, 64)));
    }
  }
}

TEST(EnlargedCutset, ContainsPlainAndMatchesFamily) {
  for (int d = 0; d <= 2; ++d) {
    for (const auto& shape : shapes()) {
      const Network net = build_projected(d, shape, 7);
      const auto family = enlarged_family(net, 1, 128);
      for (std::uint64_t p = 1; p < 128; ++p) {
        const auto scan = cutset_enlarged({p}, net);
        const auto& inv = family[p - 1];
        EXPECT_EQ(inv.position.value, p);
        EXPECT_EQ(inv.a, scan.a);
        EXPECT_EQ(inv.edges, scan.edges) << "d=" << d << " p=" << p;
        const auto plain = cutset_plain({p}, net);
        // Plain membership is only guaranteed below the top scale of the level.
        if (p < 64) {
          EXPECT_TRUE(std::includes(scan.edges.begin(), scan.edges.end(), plain.edges.begin(), plain.edges.end()))
              << "d=" << d << " p=" << p;
        }
      }
    }
  }
}

TEST(EnlargedCutset, SmallestGraphValues) {
  const auto shape = TreeShape::constant(2);
  const Network net = build_projected(1, shape, 3);
  EXPECT_EQ(cutset_conductance(LinearPosition{2}, net, shape), Rational(5));
  EXPECT_EQ(cutset_conductance(LinearPosition{3}, net, shape), Rational(5));
  const Edge* chord = find_edge(net, "011", "111");
  ASSERT_NE(chord, nullptr);
  EXPECT_EQ(chord->type, 1);
  EXPECT_EQ(weight_sum_over_cutsets(net, *chord, shape), Rational(4));
  const auto shape3 = TreeShape::constant(3);
  const Network net3 = build_projected(1, shape3, 3);
  const Edge* chord3 = find_edge(net3, "011", "111");
  ASSERT_NE(chord3, nullptr);
  EXPECT_EQ(weight_sum_over_cutsets(net3, *chord3, shape3), Rational(9, 8));
}

TEST(EnlargedCutset, BinaryDegreeOneConductance) {
  // C_a = 2^{top + 2} - 3 where 2^top <= a^ < 2^{top + 1}.
  const auto shape = TreeShape::constant(2);
  const Network net = build_projected(1, shape, 9);
  const auto family = enlarged_family(net, 1, 256);
  for (const auto& cut : family) {
    const int top = std::bit_width(cut.position.value) - 1;
    EXPECT_EQ(cutset_conductance(cut, net, shape), Rational((1L << (top + 2)) - 3)) << cut.position.value;
  }
}

TEST(EnlargedCutset, SharesFormAValidAllocation) {
  for (const auto& shape : shapes()) {
    const Network net = build_projected(2, shape, 7);
    const auto family = enlarged_family(net, 1, 128);
    std::vector<Rational> used(net.edge_count(), Rational(0));
    for (const auto& cut : family) {
      const auto shares = cutset_shares(net, cut, shape);
      ASSERT_EQ(shares.size(), cut.edges.size());
      for (std::size_t j = 0; j < shares.size(); ++j) used[cut.edges[j]] += shares[j];
    }
    for (EdgeId id = 0; id < net.edge_count(); ++id) EXPECT_LE(used[id], 1 / net.edge(id).conductance);
  }
}

TEST(WeightSums, ClosedFormEqualsEnumeration) {
  for (int d = 1; d <= 2; ++d) {
    for (const auto& shape : shapes()) {
      const auto report = verify_weights(d, shape, 7);
      EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures.front());
    }
  }
}

TEST(Lemma, MembershipRule) {
  for (int d = 1; d <= 2; ++d) {
    for (const auto& shape : shapes()) {
      const auto report = verify_lemma(d, shape, 7);
      EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures.front());
      EXPECT_GT(report.checks, 0u);
    }
  }
}

TEST(Lemma, RejectsTypesAboveTwo) {
  const Network net = build_projected(3, TreeShape::constant(2), 5);
  const auto e = std::find_if(net.edges().begin(), net.edges().end(), [](const Edge& x) { return x.type == 3; });
  ASSERT_NE(e, net.edges().end());
  for (std::uint64_t a = 0; a < 32; ++a) EXPECT_FALSE(enlarged_membership(net, *e, DigitWord::from_bits(a, 5)));
}

TEST(Theorem, SpotValue) {
  const auto tb = theorem_bound(1, TreeShape::constant(2), 1, 2, 3);
  EXPECT_EQ(tb.report.bound, Rational(2, 5));
  ASSERT_TRUE(tb.resistance.has_value());
  ASSERT_TRUE(tb.resistance->exact.has_value());
  EXPECT_EQ(*tb.resistance->exact, Rational(5, 3));
  EXPECT_EQ(tb.report.rows.size(), 2u);
  EXPECT_EQ(tb.report.rows[0].weight, Rational(1));
}

TEST(Theorem, PathControlIsTightWithClosedWindow) {
  TheoremBoundOptions opts;
  opts.include_upper = true;
  for (int t = 2; t <= 6; ++t) {
    const auto tb = theorem_bound(0, TreeShape::constant(2), 1, t, static_cast<std::size_t>(t) + 2, opts);
    ASSERT_TRUE(tb.resistance && tb.resistance->exact);
    EXPECT_EQ(tb.report.bound, *tb.resistance->exact);
    EXPECT_EQ(tb.report.bound, Rational((1L << t) - 1));
  }
  // Half-open window misses the last edge.
  const auto tb = theorem_bound(0, TreeShape::constant(2), 1, 3, 5);
  EXPECT_EQ(tb.report.bound + 1, *tb.resistance->exact);
}

TEST(Theorem, BelowResistance) {
  for (int d = 1; d <= 2; ++d) {
    for (const auto& shape : shapes()) {
      for (int s = 0; s <= 2; ++s) {
        for (int t = s + 1; t <= 5; ++t) {
          const auto tb = theorem_bound(d, shape, s, t, static_cast<std::size_t>(t) + 2);
          ASSERT_TRUE(tb.resistance.has_value());
          EXPECT_LE(tb.report.bound.get_d(), tb.resistance->value * (1 + 1e-12));
          if (tb.resistance->exact) EXPECT_LE(tb.report.bound, *tb.resistance->exact);
        }
      }
    }
  }
}

TEST(Theorem, RejectsBadScales) {
  const auto shape = TreeShape::constant(2);
  EXPECT_THROW(theorem_bound(1, shape, 2, 2, 5), std::invalid_argument);
  EXPECT_THROW(theorem_bound(1, shape, 1, 5, 5), std::invalid_argument);
  EXPECT_THROW(theorem_bound(1, shape, -1, 2, 5), std::invalid_argument);
}

TEST(Asymptotic, TracksExactConductance) {
  for (int d = 1; d <= 2; ++d) {
    for (const auto& shape : shapes()) {
      const Network net = build_projected(d, shape, 10);
      // The top scale of a finite level is truncated, so stop below 2^{n-1}.
      const auto family = enlarged_family(net, 2, 512);
      for (const auto& cut : family) {
        const double ratio = cutset_conductance(cut, net, shape).get_d() / asymptotic_conductance(cut.position, shape, d);
        // The constant depends on the alphabet bound; 32 covers shapes up to 4.
        EXPECT_GT(ratio, 1.0 / 32) << cut.position.value;
        EXPECT_LT(ratio, 32.0) << cut.position.value;
      }
    }
  }
  EXPECT_THROW(asymptotic_conductance(LinearPosition{1}, TreeShape::constant(2), 1), std::invalid_argument);
}

TEST(Recurrence, IncreasingWithExpectedIncrements) {
  const auto shape = TreeShape::constant(2);
  const auto d1 = recurrence_experiment(1, shape, 10);
  const auto d2 = recurrence_experiment(2, shape, 10);
  for (std::size_t i = 1; i < d1.size(); ++i) {
    EXPECT_GT(d1[i].bound, d1[i - 1].bound);
    EXPECT_GT(d2[i].bound, d2[i - 1].bound);
    EXPECT_EQ(d1[i].increment, Rational(1L << i, (1L << (i + 2)) - 3));
  }
  const auto solved = recurrence_experiment(1, shape, 4, true);
  for (const auto& row : solved) {
    ASSERT_TRUE(row.resistance.has_value());
    EXPECT_LE(row.bound.get_d(), *row.resistance * (1 + 1e-12));
  }
}
