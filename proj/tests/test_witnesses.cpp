#include "ordram/witnesses.hpp"
#include "ordram/parse.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ordram;
using ordram::testing::O;

TEST_CASE("both class graphs are triangle-free") {
  CHECK(verify_graph_triangle_free(mermelstein_witness()));
  CHECK(verify_graph_triangle_free(omega_dot2_top_witness()));
}

TEST_CASE("a corrupted adjacency is caught") {
  WitnessColoring w = mermelstein_witness();
  // adding top1-bottom1 closes the triangle top1-middle1-bottom1
  w.adjacency.push_back({2, 0});
  CHECK_FALSE(verify_graph_triangle_free(w));
}

TEST_CASE("mermelstein pair colors") {
  WitnessColoring w = mermelstein_witness();
  CHECK(w.pair_color(O("0"), O("w")) == PairColor::blue);
  CHECK(w.pair_color(O("0"), O("w^2")) == PairColor::red);
  CHECK(w.pair_color(O("w^2"), O("w^2*2")) == PairColor::blue);
  CHECK(w.pair_color(O("w^2"), O("w^2+1")) == PairColor::blue);
  CHECK(w.pair_color(O("1"), O("w^2*2+w")) == PairColor::blue);
  CHECK(w.pair_color(O("w"), O("w^2*2+w")) == PairColor::red);
  CHECK_THROWS_AS(w.pair_color(O("w"), O("w")), std::domain_error);
}

TEST_CASE("omega-dot-2 pair colors") {
  WitnessColoring w = omega_dot2_top_witness();
  CHECK(w.pair_color(O("0"), O("w^2")) == PairColor::blue);
  CHECK(w.pair_color(O("w"), O("w^2+w")) == PairColor::blue);
  CHECK(w.pair_color(O("w"), O("w^2")) == PairColor::red);
  CHECK(w.pair_color(O("w^2+1"), O("w^2*2")) == PairColor::blue);
  CHECK(w.pair_color(O("1"), O("w^2*2")) == PairColor::blue);
  CHECK(w.pair_color(O("w"), O("w*2")) == PairColor::red);
}

TEST_CASE("pair color is symmetric and matches the definition") {
  for (const auto& name : witness_names()) {
    WitnessColoring w = witness_by_name(name);
    std::mt19937_64 rng(42);
    Ordinal bound = w.space_max + Ordinal(1);
    for (int i = 0; i < 300; ++i) {
      Ordinal x = sample_below(bound, rng);
      Ordinal y = sample_below(bound, rng);
      if (x == y) continue;
      CHECK(w.pair_color(x, y) == w.pair_color(y, x));
      bool blue = w.pair_color(x, y) == PairColor::blue;
      int cx = w.class_of(x), cy = w.class_of(y);
      CHECK(blue == (cx != cy && w.adjacent(cx, cy)));
    }
  }
}

TEST_CASE("class partitions on representative shapes") {
  WitnessColoring m = mermelstein_witness();
  auto expect = [&](const char* pt, const char* cls) {
    auto cs = m.classes_of(O(pt));
    REQUIRE(cs.size() == 1);
    CHECK(m.classes[cs[0]].name == cls);
  };
  expect("0", "bottom1");
  expect("1", "bottom1");
  expect("17", "bottom1");
  expect("w+1", "bottom1");
  expect("w*5+3", "bottom1");
  expect("w", "middle1");
  expect("w*13", "middle1");
  expect("w^2", "top1");
  expect("w^2+1", "bottom2");
  expect("w^2+w*2+7", "bottom2");
  expect("w^2+w", "middle2");
  expect("w^2+w*9", "middle2");
  expect("w^2*2", "top2");
  expect("w^2*2+1", "bottom3");
  expect("w^2*2+12", "bottom3");
  expect("w^2*2+w", "middle3");

  WitnessColoring t = omega_dot2_top_witness();
  auto expect_t = [&](const char* pt, const char* cls) {
    auto cs = t.classes_of(O(pt));
    REQUIRE(cs.size() == 1);
    CHECK(t.classes[cs[0]].name == cls);
  };
  expect_t("0", "bottom1");
  expect_t("w*2+1", "bottom1");
  expect_t("w*3", "middle1");
  expect_t("w^2", "top1");
  expect_t("w^2+5", "bottom2");
  expect_t("w^2+w*4", "middle2");
  expect_t("w^2*2", "top2");
}

TEST_CASE("every sampled point is classified exactly once") {
  for (const auto& name : witness_names()) {
    WitnessColoring w = witness_by_name(name);
    std::mt19937_64 rng(7);
    Ordinal bound = w.space_max + Ordinal(1);
    for (int i = 0; i < 2000; ++i)
      CHECK(w.classes_of(sample_below(bound, rng)).size() == 1);
  }
}

TEST_CASE("cb rank coloring") {
  PointColoring c2 = cb_rank_coloring(2);
  CHECK(c2.color_of(O("w*3")) == 1);
  PointColoring c3 = cb_rank_coloring(3);
  CHECK(c3.color_of(O("w^2*2+5")) == 0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    Ordinal x = sample_below(c2.space, rng);
    int col = c2.color_of(x);
    CHECK(col >= 0);
    CHECK(col < 2);
    CHECK(Ordinal(unsigned(col)) == cb_rank(x));
  }
}

TEST_CASE("cb rank classes are discrete") {
  // inside class i, the points x + w^i * n stay in the class while their
  // supremum x + w^(i+1) has strictly larger rank
  std::mt19937_64 rng(6);
  for (unsigned k = 2; k <= 4; ++k) {
    PointColoring c = cb_rank_coloring(k);
    for (int t = 0; t < 200; ++t) {
      Ordinal x = sample_below(c.space, rng);
      if (x.is_zero()) continue;
      unsigned i = static_cast<unsigned>(c.color_of(x));
      for (unsigned n = 1; n <= 3; ++n) {
        Ordinal y = x + omega_power(Ordinal(i)) * Ordinal(n);
        CHECK(cb_rank(y) == Ordinal(i));
      }
      Ordinal sup = x + omega_power(Ordinal(i + 1));
      CHECK(cb_rank(sup) > Ordinal(i));
    }
  }
}

TEST_CASE("partite pair coloring from a point coloring") {
  InducedPairColoring d = partite_from_point_coloring(cb_rank_coloring(2));
  CHECK(d.color(O("w"), O("w*2")) == PairColor::red);
  CHECK(d.color(O("1"), O("w")) == PairColor::blue);
  CHECK_THROWS_AS(d.color(O("w"), O("w")), std::domain_error);

  // red-homogeneous sampled sets lie in one class; blue cliques have
  // pairwise distinct classes, hence at most `colors` points
  std::mt19937_64 rng(8);
  InducedPairColoring d3 = partite_from_point_coloring(cb_rank_coloring(3));
  for (int t = 0; t < 100; ++t) {
    std::vector<Ordinal> pts;
    std::set<Ordinal> seen;
    while (pts.size() < 6) {
      Ordinal x = sample_below(d3.base.space, rng);
      if (seen.insert(x).second) pts.push_back(x);
    }
    bool all_red = true, all_blue = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        (d3.color(pts[i], pts[j]) == PairColor::red ? all_blue : all_red) =
            false;
    if (all_red) {
      for (const auto& p : pts)
        CHECK(d3.base.color_of(p) == d3.base.color_of(pts[0]));
    }
    CHECK(!(all_blue && pts.size() > 3));  // blue cliques bounded by colors
  }
}

TEST_CASE("sampled homogeneity reports are clean") {
  for (const auto& name : witness_names()) {
    auto rep = sampled_homogeneity_report(witness_by_name(name), 20, 200,
                                          0xabcdef12);
    CHECK(rep.pass());
    CHECK(rep.violations.empty());
    auto j = to_json(rep);
    CHECK(j["witness"] == name);
    CHECK(j["verdict"] == "pass");
    CHECK(j["trials"] == 200);
  }
}

TEST_CASE("homogeneity report is deterministic for a fixed seed") {
  auto a = sampled_homogeneity_report(mermelstein_witness(), 10, 50, 99);
  auto b = sampled_homogeneity_report(mermelstein_witness(), 10, 50, 99);
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("finite full subtree: pinned examples") {
  FiniteTree t{1, 3};
  auto colors = [](const std::vector<int>& leaf) {
    return leaf[0] == 2 ? 1 : 0;  // (red, red, blue)
  };
  auto sub = finite_full_subtree(t, colors, 2);
  REQUIRE(sub.has_value());
  CHECK(sub->leaf_color == 0);
  CHECK(sub->child_choice.at({}) == std::vector<int>{0, 1});

  FiniteTree t2{2, 3};
  auto all_red = [](const std::vector<int>&) { return 0; };
  auto sub2 = finite_full_subtree(t2, all_red, 2);
  REQUIRE(sub2.has_value());
  CHECK(sub2->leaf_color == 0);
  CHECK(sub2->child_choice.size() == 1 + 2);  // root plus two children

  // no monochromatic pair among two leaves
  FiniteTree t3{1, 2};
  auto rb = [](const std::vector<int>& leaf) { return leaf[0]; };
  CHECK_FALSE(finite_full_subtree(t3, rb, 2).has_value());
}

namespace {

// checks subtree structure: every internal node has exactly M children
// and all leaves carry the claimed color
void check_subtree(const FiniteTree& t, const LeafColoring& col,
                   const FullSubtree& sub) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> stack = {
      {{}, {}}};  // (subtree addr, original addr)
  while (!stack.empty()) {
    auto [saddr, oaddr] = stack.back();
    stack.pop_back();
    if (oaddr.size() == t.height) {
      CHECK(col(oaddr) == sub.leaf_color);
      continue;
    }
    auto it = sub.child_choice.find(saddr);
    REQUIRE(it != sub.child_choice.end());
    REQUIRE(it->second.size() == sub.quorum);
    for (unsigned j = 0; j < it->second.size(); ++j) {
      auto sa = saddr;
      sa.push_back(static_cast<int>(j));
      auto oa = oaddr;
      oa.push_back(it->second[j]);
      stack.push_back({sa, oa});
    }
  }
}

}  // namespace

TEST_CASE("quorum law at k=2, N=3, M=2 over all colorings") {
  FiniteTree t{2, 3};
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    auto col = [mask](const std::vector<int>& leaf) {
      return static_cast<int>((mask >> (leaf[0] * 3 + leaf[1])) & 1);
    };
    auto sub = finite_full_subtree(t, col, 2);
    REQUIRE(sub.has_value());
    check_subtree(t, col, *sub);
  }
}

TEST_CASE("quorum law N >= 2M-1 for heights 1 and 2") {
  // raw exhaustion for N = 3, 4 at M = 2
  for (unsigned N = 3; N <= 4; ++N) {
    FiniteTree t1{1, N};
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
      auto col = [mask](const std::vector<int>& leaf) {
        return static_cast<int>((mask >> leaf[0]) & 1);
      };
      CHECK(finite_full_subtree(t1, col, 2).has_value());
    }
    FiniteTree t2{2, N};
    for (unsigned mask = 0; mask < (1u << (N * N)); ++mask) {
      auto col = [mask, N](const std::vector<int>& leaf) {
        return static_cast<int>((mask >> (leaf[0] * N + leaf[1])) & 1);
      };
      CHECK(finite_full_subtree(t2, col, 2).has_value());
    }
  }
  // N = 5, height 2: exhaustive over per-child capability classes. A
  // 5-leaf child realizes red iff it has <= 1 blue leaf is false -- it
  // realizes red iff >= 2 red leaves; classes (canR, canB) are
  // (1,0) for <= 1 blue, (0,1) for <= 1 red, (1,1) otherwise, and the
  // root needs >= 2 children on one side. Verified per class vector.
  {
    for (unsigned v = 0; v < 243; ++v) {  // 3^5 class vectors
      unsigned x = v;
      unsigned canR = 0, canB = 0;
      for (int i = 0; i < 5; ++i) {
        unsigned cls = x % 3;
        x /= 3;
        if (cls == 0 || cls == 2) ++canR;
        if (cls == 1 || cls == 2) ++canB;
      }
      CHECK((canR >= 2 || canB >= 2));
    }
    // the three classes are exactly the possible 5-leaf children
    for (unsigned mask = 0; mask < 32; ++mask) {
      unsigned blue = __builtin_popcount(mask);
      unsigned red = 5 - blue;
      CHECK((red >= 2 || blue >= 2));
    }
  }
}

TEST_CASE("quorum law sampled at height 3") {
  FiniteTree t{3, 3};
  std::mt19937_64 rng(3141);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint32_t mask = static_cast<std::uint32_t>(rng());
    auto col = [mask](const std::vector<int>& leaf) {
      int idx = leaf[0] * 9 + leaf[1] * 3 + leaf[2];
      return static_cast<int>((mask >> idx) & 1);
    };
    auto sub = finite_full_subtree(t, col, 2);
    REQUIRE(sub.has_value());
    check_subtree(t, col, *sub);
  }
}

TEST_CASE("sampler stays below the bound and is seeded") {
  std::mt19937_64 a(1), b(1);
  Ordinal bound = O("w^2*2+w+1");
  for (int i = 0; i < 500; ++i) {
    Ordinal x = sample_below(bound, a);
    CHECK(x < bound);
    CHECK(x == sample_below(bound, b));
  }
}
