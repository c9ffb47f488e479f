#pragma once

// Executable lower-bound colorings. Each witness is a symbolic pair
// coloring of an ordinal interval, given by a partition of the space into
// finitely many classes (CNF shape predicates) plus a finite adjacency
// graph on the classes: a pair is blue iff its endpoints lie in distinct
// adjacent classes. Triangle-freeness of the class graph is checked
// exactly; the infinite-space homogeneity claims themselves stay theorems,
// and only their finitely checkable consequences are asserted (by seeded
// sampling).

#include "ordram/ordinal.hpp"
#include "ordram/parse.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ordram {

enum class PairColor { red, blue };

struct WitnessColoring {
  struct Cls {
    std::string name;
    std::function<bool(const Ordinal&)> contains;
  };

  std::string name;
  Ordinal space_max;  // the space is the closed interval [0, space_max]
  std::vector<Cls> classes;
  std::vector<std::pair<int, int>> adjacency;  // loop-free, undirected

  bool in_space(const Ordinal& x) const { return x <= space_max; }

  std::vector<int> classes_of(const Ordinal& x) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i)
      if (classes[i].contains(x)) out.push_back(i);
    return out;
  }

  // Index of the unique class containing x; throws if the partition is
  // violated (classes_of is the non-throwing probe).
  int class_of(const Ordinal& x) const {
    auto cs = classes_of(x);
    if (cs.size() != 1)
      throw std::logic_error("witness partition violated at " +
                             format_ordinal(x));
    return cs[0];
  }

  bool adjacent(int a, int b) const {
    for (auto& [u, v] : adjacency)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }

  PairColor pair_color(const Ordinal& x, const Ordinal& y) const {
    if (x == y) throw std::domain_error("pair_color needs two distinct points");
    int cx = class_of(x), cy = class_of(y);
    return (cx != cy && adjacent(cx, cy)) ? PairColor::blue : PairColor::red;
  }
};

namespace detail {

inline bool is_successor_in(const Ordinal& x, const Ordinal& lo,
                            const Ordinal& hi) {
  return x.is_successor() && lo < x && x < hi;
}

inline bool is_limit_in(const Ordinal& x, const Ordinal& lo, const Ordinal& hi) {
  return x.is_limit() && lo < x && x < hi;
}

}  // namespace detail

// The coloring showing w^2*2+w+1 -/->cl (w+2, 3)^2: eight classes on
// [0, w^2*2+w] and eleven edges.
inline WitnessColoring mermelstein_witness() {
  using detail::is_limit_in;
  using detail::is_successor_in;
  Ordinal w2 = parse_ordinal("w^2");
  Ordinal w2x2 = parse_ordinal("w^2*2");
  Ordinal top = parse_ordinal("w^2*2+w");
  WitnessColoring w;
  w.name = "mermelstein";
  w.space_max = top;
  w.classes = {
      {"bottom1", [w2](const Ordinal& x) {
         return x.is_zero() || is_successor_in(x, Ordinal(0), w2);
       }},
      {"middle1", [w2](const Ordinal& x) {
         return is_limit_in(x, Ordinal(0), w2);
       }},
      {"top1", [w2](const Ordinal& x) { return x == w2; }},
      {"bottom2", [w2, w2x2](const Ordinal& x) {
         return is_successor_in(x, w2, w2x2);
       }},
      {"middle2", [w2, w2x2](const Ordinal& x) {
         return is_limit_in(x, w2, w2x2);
       }},
      {"top2", [w2x2](const Ordinal& x) { return x == w2x2; }},
      {"bottom3", [w2x2, top](const Ordinal& x) {
         return is_successor_in(x, w2x2, top);
       }},
      {"middle3", [top](const Ordinal& x) { return x == top; }},
  };
  // indices: bottom1=0 middle1=1 top1=2 bottom2=3 middle2=4 top2=5
  //          bottom3=6 middle3=7
  w.adjacency = {{2, 1}, {1, 0}, {2, 5}, {2, 3}, {0, 4}, {5, 4},
                 {4, 3}, {0, 7}, {5, 7}, {3, 6}, {0, 6}};
  return w;
}

// The coloring showing w^2*2+1 -/->top (w*2, 3)^2: six classes on
// [0, w^2*2] and seven edges.
inline WitnessColoring omega_dot2_top_witness() {
  using detail::is_limit_in;
  using detail::is_successor_in;
  Ordinal w2 = parse_ordinal("w^2");
  Ordinal w2x2 = parse_ordinal("w^2*2");
  WitnessColoring w;
  w.name = "omega-dot-2-top";
  w.space_max = w2x2;
  w.classes = {
      {"bottom1", [w2](const Ordinal& x) {
         return x.is_zero() || is_successor_in(x, Ordinal(0), w2);
       }},
      {"middle1", [w2](const Ordinal& x) {
         return is_limit_in(x, Ordinal(0), w2);
       }},
      {"top1", [w2](const Ordinal& x) { return x == w2; }},
      {"bottom2", [w2, w2x2](const Ordinal& x) {
         return is_successor_in(x, w2, w2x2);
       }},
      {"middle2", [w2, w2x2](const Ordinal& x) {
         return is_limit_in(x, w2, w2x2);
       }},
      {"top2", [w2x2](const Ordinal& x) { return x == w2x2; }},
  };
  // indices: bottom1=0 middle1=1 top1=2 bottom2=3 middle2=4 top2=5
  w.adjacency = {{2, 0}, {5, 3}, {1, 0}, {4, 3}, {2, 3}, {5, 0}, {1, 4}};
  return w;
}

inline const std::vector<std::string>& witness_names() {
  static const std::vector<std::string> names = {"mermelstein",
                                                 "omega-dot-2-top"};
  return names;
}

inline WitnessColoring witness_by_name(const std::string& name) {
  if (name == "mermelstein") return mermelstein_witness();
  if (name == "omega-dot-2-top") return omega_dot2_top_witness();
  throw std::domain_error("unknown witness: " + name);
}

/// Exact triangle-freeness of the finite class graph.
inline bool verify_graph_triangle_free(const WitnessColoring& w) {
  int n = static_cast<int>(w.classes.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (w.adjacent(a, b) && w.adjacent(b, c) && w.adjacent(a, c))
          return false;
  return true;
}

// ---------------------------------------------------------------------------
// Point colorings

struct PointColoring {
  Ordinal space;  // the space is [0, space)
  int colors;
  std::function<int(const Ordinal&)> color_of;
};

/// Colors each x in [0, w^k) with its CB rank; every class is discrete.
inline PointColoring cb_rank_coloring(unsigned k) {
  if (k < 1) throw std::domain_error("cb_rank_coloring requires k >= 1");
  return PointColoring{
      omega_power(Ordinal(k)), static_cast<int>(k), [](const Ordinal& x) {
        return static_cast<int>(cb_rank(x).as_nat().convert_to<unsigned>());
      }};
}

// Pair coloring induced by a point coloring: red on same-class pairs,
// blue across classes.
struct InducedPairColoring {
  PointColoring base;
  PairColor color(const Ordinal& x, const Ordinal& y) const {
    if (x == y) throw std::domain_error("pairs are 2-sets");
    return base.color_of(x) == base.color_of(y) ? PairColor::red
                                                : PairColor::blue;
  }
};

inline InducedPairColoring partite_from_point_coloring(PointColoring c) {
  return InducedPairColoring{std::move(c)};
}

// ---------------------------------------------------------------------------
// Sampling

// Random ordinal below `bound`, sampled as a CNF digit vector with
// coefficients capped at `coeff_cap` and rejection against the bound.
// Requires a bound with finite leading exponent. Deterministic for a
// fixed generator state.
inline Ordinal sample_below(const Ordinal& bound, std::mt19937_64& rng,
                            unsigned coeff_cap = 50) {
  if (bound.is_zero()) throw std::domain_error("sample_below of zero");
  if (bound == Ordinal(1)) return Ordinal();
  if (!bound.leading_exponent().is_finite())
    throw std::domain_error("sample_below supports finite exponents only");
  unsigned lead =
      bound.leading_exponent().as_nat().convert_to<unsigned>();
  unsigned lead_coeff = bound.leading_coeff().convert_to<unsigned>();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Ordinal::Term> ts;
    for (int e = static_cast<int>(lead); e >= 0; --e) {
      unsigned cap = (e == static_cast<int>(lead)) ? lead_coeff : coeff_cap;
      unsigned c = std::uniform_int_distribution<unsigned>(0, cap)(rng);
      if (c) ts.push_back(Ordinal::Term{Ordinal(unsigned(e)), Nat(c)});
    }
    Ordinal x = Ordinal::from_terms(std::move(ts));
    if (x < bound) return x;
  }
  return Ordinal();
}

struct HomogeneityReport {
  std::string witness;
  unsigned trials = 0;
  unsigned sample_size = 0;
  std::uint64_t seed = 0;
  std::uint64_t blue_triangles = 0;
  std::uint64_t partition_violations = 0;
  std::uint64_t within_class_blue = 0;
  std::vector<std::string> violations;  // first few, for the report
  bool pass() const {
    return blue_triangles == 0 && partition_violations == 0 &&
           within_class_blue == 0;
  }
};

inline nlohmann::json to_json(const HomogeneityReport& r) {
  return nlohmann::json{{"witness", r.witness},
                        {"trials", r.trials},
                        {"sample_size", r.sample_size},
                        {"seed", r.seed},
                        {"violations", r.violations},
                        {"counts",
                         {{"blue_triangles", r.blue_triangles},
                          {"partition_violations", r.partition_violations},
                          {"within_class_blue", r.within_class_blue}}},
                        {"verdict", r.pass() ? "pass" : "fail"}};
}

// Seeded sampling harness over a witness coloring. Per trial it draws a
// set of distinct points of the space and checks: every point lies in
// exactly one class; within-class pairs are red; no triple is all blue.
inline HomogeneityReport sampled_homogeneity_report(const WitnessColoring& w,
                                                    unsigned sample_size,
                                                    unsigned trials,
                                                    std::uint64_t seed) {
  HomogeneityReport rep;
  rep.witness = w.name;
  rep.trials = trials;
  rep.sample_size = sample_size;
  rep.seed = seed;
  Ordinal bound = w.space_max + Ordinal(1);
  constexpr std::size_t kMaxRecorded = 32;
  auto record = [&](std::string msg) {
    if (rep.violations.size() < kMaxRecorded)
      rep.violations.push_back(std::move(msg));
  };
  for (unsigned t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
    std::set<Ordinal> pts;
    for (int guard = 0; pts.size() < sample_size && guard < 4000; ++guard)
      pts.insert(sample_below(bound, rng));
    std::vector<Ordinal> v(pts.begin(), pts.end());
    std::vector<int> cls(v.size(), -1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto cs = w.classes_of(v[i]);
      if (cs.size() != 1) {
        ++rep.partition_violations;
        record("point " + format_ordinal(v[i]) + " lies in " +
               std::to_string(cs.size()) + " classes");
        continue;
      }
      cls[i] = cs[0];
    }
    auto blue = [&](std::size_t i, std::size_t j) {
      return cls[i] >= 0 && cls[j] >= 0 && cls[i] != cls[j] &&
             w.adjacent(cls[i], cls[j]);
    };
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (cls[i] >= 0 && cls[i] == cls[j] && blue(i, j)) {
          ++rep.within_class_blue;
          record("within-class blue pair at " + format_ordinal(v[i]));
        }
        for (std::size_t l = j + 1; l < v.size(); ++l)
          if (blue(i, j) && blue(j, l) && blue(i, l)) {
            ++rep.blue_triangles;
            record("blue triangle {" + format_ordinal(v[i]) + ", " +
                   format_ordinal(v[j]) + ", " + format_ordinal(v[l]) + "}");
          }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Finite full-subtree pigeonhole

// Perfect N-ary tree of height k: nodes are child-index sequences of
// length <= k, leaves the sequences of length exactly k.
struct FiniteTree {
  unsigned height;
  unsigned branching;
};

using LeafColoring = std::function<int(const std::vector<int>&)>;  // 2 colors

// An embedded full subtree with quorum M: for each internal node of the
// subtree (addressed in the *subtree's* coordinates), the M original
// child indices chosen under it.
struct FullSubtree {
  unsigned quorum;
  int leaf_color;
  std::map<std::vector<int>, std::vector<int>> child_choice;
};

namespace detail {

// can_color[node] per color: a leaf carries its own color; an internal
// node can realize color c iff at least M children can. This is the
// level-by-level pigeonhole of the tree lemma, evaluated exactly.
inline std::pair<bool, bool> subtree_can_color(const FiniteTree& t,
                                               const LeafColoring& col,
                                               unsigned M,
                                               std::vector<int>& addr) {
  if (addr.size() == t.height) {
    int c = col(addr);
    return {c == 0, c == 1};
  }
  unsigned can0 = 0, can1 = 0;
  for (unsigned i = 0; i < t.branching; ++i) {
    addr.push_back(static_cast<int>(i));
    auto [a, b] = subtree_can_color(t, col, M, addr);
    addr.pop_back();
    can0 += a;
    can1 += b;
  }
  return {can0 >= M, can1 >= M};
}

inline void extract_subtree(const FiniteTree& t, const LeafColoring& col,
                            unsigned M, int color, std::vector<int>& addr,
                            std::vector<int>& sub_addr, FullSubtree& out) {
  if (addr.size() == t.height) return;
  std::vector<int> chosen;
  for (unsigned i = 0; i < t.branching && chosen.size() < M; ++i) {
    addr.push_back(static_cast<int>(i));
    auto [a, b] = subtree_can_color(t, col, M, addr);
    bool ok = color == 0 ? a : b;
    addr.pop_back();
    if (ok) chosen.push_back(static_cast<int>(i));
  }
  out.child_choice[sub_addr] = chosen;
  for (unsigned j = 0; j < chosen.size(); ++j) {
    addr.push_back(chosen[j]);
    sub_addr.push_back(static_cast<int>(j));
    extract_subtree(t, col, M, color, addr, sub_addr, out);
    sub_addr.pop_back();
    addr.pop_back();
  }
}

}  // namespace detail

// Embedded height-k subtree with M children per node and monochromatic
// leaves, when one exists. Whenever branching >= 2M-1 the pigeonhole
// guarantees one for every coloring.
inline std::optional<FullSubtree> finite_full_subtree(const FiniteTree& t,
                                                      const LeafColoring& col,
                                                      unsigned M) {
  if (M < 1) throw std::domain_error("quorum must be at least 1");
  if (M > t.branching) return std::nullopt;
  std::vector<int> addr;
  auto [can_red, can_blue] = detail::subtree_can_color(t, col, M, addr);
  if (!can_red && !can_blue) return std::nullopt;
  FullSubtree out;
  out.quorum = M;
  out.leaf_color = can_red ? 0 : 1;
  std::vector<int> sub_addr;
  detail::extract_subtree(t, col, M, out.leaf_color, addr, sub_addr, out);
  return out;
}

}  // namespace ordram
