#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "properties.hpp"
#include "plethys/census.hpp"
#include "plethys/graph.hpp"

using namespace plethys;
using oracle::sf;

namespace {

constexpr int L = HalfEdgeGraph::kNoLeg;

HalfEdgeGraph make_graph(std::vector<int> vertex_of, std::vector<int> involution, std::vector<int> legs,
                         std::vector<int> genus) {
  HalfEdgeGraph g{std::move(vertex_of), std::move(involution), std::move(legs), std::move(genus)};
  g.validate();
  return g;
}

// k genus-0 vertices in a cycle, each with one leg labelled i+1.
HalfEdgeGraph cycle_with_legs(int k) {
  std::vector<int> vertex_of, involution(static_cast<std::size_t>(3 * k)), legs;
  for (int i = 0; i < k; ++i) {
    vertex_of.insert(vertex_of.end(), {i, i, i});
    legs.insert(legs.end(), {i + 1, L, L});
    involution[static_cast<std::size_t>(3 * i)] = 3 * i;
    const int next = 3 * ((i + 1) % k) + 2;
    involution[static_cast<std::size_t>(3 * i + 1)] = next;
    involution[static_cast<std::size_t>(next)] = 3 * i + 1;
  }
  return make_graph(vertex_of, involution, legs, std::vector<int>(static_cast<std::size_t>(k), 0));
}

ModuleSpec tri_spec() {
  ModuleSpec spec;
  spec.genus0[3] = {Partition{3}};
  return spec;
}

DecoratedGraph random_relabel(const DecoratedGraph& g, std::mt19937_64& rng) {
  return relabel_half_edges(g, oracle::random_perm(rng, g.graph.num_half_edges()),
                            oracle::random_perm(rng, g.graph.num_vertices()));
}

}  // namespace

TEST_CASE("betti1") {
  CHECK(betti1(HalfEdgeGraph{{}, {}, {}, {0}}) == 0);
  CHECK(betti1(make_graph({0, 0}, {1, 0}, {L, L}, {0})) == 1);
  CHECK(betti1(make_graph({0, 0, 1, 1}, {2, 3, 0, 1}, {L, L, L, L}, {0, 0})) == 1);
  CHECK(betti1(cycle_with_legs(4)) == 1);
}

TEST_CASE("is_necklace") {
  CHECK(is_necklace(cycle_with_legs(3)));
  CHECK(is_necklace(make_graph({0, 0, 0}, {1, 0, 2}, {L, L, 1}, {0})));
  // Two-cycle with a third vertex hanging off v0.
  const auto hanging = make_graph({0, 0, 0, 1, 1, 1, 2, 2, 2}, {3, 4, 6, 0, 1, 5, 2, 7, 8},
                                  {L, L, L, L, L, 1, L, 2, 3}, {0, 0, 0});
  CHECK(betti1(hanging) == 1);
  CHECK_FALSE(is_necklace(hanging));
  // Tree and theta graph.
  CHECK_FALSE(is_necklace(make_graph({0, 0, 0}, {0, 1, 2}, {1, 2, 3}, {0})));
  CHECK_FALSE(is_necklace(make_graph({0, 0, 0, 1, 1, 1}, {3, 4, 5, 0, 1, 2}, {L, L, L, L, L, L}, {0, 0})));
  CHECK_THROWS_AS(is_necklace(make_graph({0, 1}, {0, 1}, {1, 2}, {0, 0})), InvalidInput);
}

TEST_CASE("HalfEdgeGraph validation") {
  CHECK_THROWS_AS(make_graph({0, 0}, {1, 1}, {L, L}, {0}), InvalidInput);
  CHECK_THROWS_AS(make_graph({0, 0}, {0, 1}, {1, 1}, {0}), InvalidInput);
  CHECK_THROWS_AS(make_graph({0}, {0}, {1}, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(make_graph({0, 0}, {1, 0}, {1, L}, {0}), InvalidInput);
  CHECK(make_graph({0, 0, 0}, {0, 1, 2}, {1, 2, 3}, {0}).is_stable());
  CHECK_FALSE(make_graph({0, 0}, {0, 1}, {1, 2}, {0}).is_stable());
  CHECK(make_graph({0}, {0}, {1}, {1}).is_stable());
}

TEST_CASE("family names") {
  for (auto f : {Family::genus1_stable, Family::necklace, Family::oriented_necklace, Family::rooted_tree}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_FALSE(parse_family("necklaces").has_value());
}

TEST_CASE("small censuses") {
  const auto spec = tri_spec();
  CHECK(enumerate_decorated(spec, Family::necklace, 1).size() == 1);
  CHECK(enumerate_decorated(spec, Family::oriented_necklace, 1).size() == 1);
  CHECK(enumerate_decorated(spec, Family::rooted_tree, 2).size() == 1);
  for (auto f : {Family::genus1_stable, Family::necklace, Family::oriented_necklace, Family::rooted_tree}) {
    CHECK_THROWS_AS(enumerate_decorated(spec, f, 0), InvalidInput);
  }
  const auto tree = enumerate_decorated(spec, Family::rooted_tree, 2).classes().begin()->second.graph;
  CHECK(tree.num_vertices() == 1);
  CHECK(tree.num_legs() == 3);
}

TEST_CASE("census graphs have the advertised shape") {
  const auto spec = ModuleSpec::standard();
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : props::census_graphs(spec, Family::necklace, n)) {
      CHECK_NOTHROW(d.graph.validate());
      CHECK(d.graph.is_stable());
      CHECK(is_necklace(d.graph));
      CHECK(d.graph.num_legs() == n);
    }
    for (const auto& d : props::census_graphs(spec, Family::genus1_stable, n)) {
      CHECK_NOTHROW(d.graph.validate());
      CHECK(d.graph.is_stable());
      CHECK(is_connected(d.graph));
      int genus = betti1(d.graph);
      for (int g : d.graph.genus) genus += g;
      CHECK(genus == 1);
      CHECK(d.graph.num_legs() == n);
    }
    for (const auto& d : props::census_graphs(spec, Family::rooted_tree, n + 1)) {
      CHECK(betti1(d.graph) == 0);
      CHECK(is_connected(d.graph));
      CHECK(d.graph.num_legs() == n + 2);
    }
  }
}

TEST_CASE("oriented census covers the unordered one with fibres of size 1 or 2") {
  const auto spec = ModuleSpec::standard();
  for (int n = 1; n <= 4; ++n) {
    const auto oriented = enumerate_decorated(spec, Family::oriented_necklace, n).size();
    const auto unordered = enumerate_decorated(spec, Family::necklace, n).size();
    CHECK(oriented >= unordered);
    CHECK(oriented <= 2 * unordered);
    CHECK(unordered <= enumerate_decorated(spec, Family::genus1_stable, n).size());
  }
}

TEST_CASE("budgets") {
  const auto spec = ModuleSpec::standard();
  Budget small;
  small.max_half_edges = 14;
  CHECK_THROWS_AS(enumerate_decorated(spec, Family::necklace, 6, small), BudgetExceeded);
  Budget few_legs;
  few_legs.max_legs = 2;
  CHECK_THROWS_AS(enumerate_decorated(spec, Family::genus1_stable, 3, few_legs), BudgetExceeded);
  Budget few_classes;
  few_classes.max_classes = 3;
  CHECK_THROWS_AS(enumerate_decorated(spec, Family::genus1_stable, 2, few_classes), BudgetExceeded);
}

TEST_CASE("char_of_census examples") {
  ModuleSpec corolla;
  corolla.genus1[1] = {Partition{1}};
  CHECK(mv_char(corolla, 1, 3) == power_sum(1, 3));
  ModuleSpec ordered_pair;
  ordered_pair.genus1[2] = {Partition{1, 1}};
  CHECK(enumerate_decorated(ordered_pair, Family::genus1_stable, 2).size() == 2);
  CHECK(mv_char(ordered_pair, 2, 3) == sf(3, {{{1, 1}, "1"}}));
  ModuleSpec unordered_pair;
  unordered_pair.genus1[2] = {Partition{2}};
  CHECK(mv_char(unordered_pair, 2, 3) == h_gen(2, 3));
  CHECK(necklace_char_oracle(tri_spec(), 1, 3) == power_sum(1, 3));
  CHECK(cyclic_necklace_char_oracle(tri_spec(), 1, 3) == power_sum(1, 3));
  CHECK(tree_char_oracle(tri_spec(), 2, 3) == h_gen(2, 3));
}

TEST_CASE("fixed counts are integral and start at the class count") {
  const auto spec = ModuleSpec::standard();
  for (int n = 1; n <= 3; ++n) {
    const auto census = enumerate_decorated(spec, Family::genus1_stable, n);
    CHECK(fixed_class_count(census, Perm::identity(n)) == static_cast<long>(census.size()));
    const auto ch = char_of_census(census, n);
    for (const auto& [lambda, c] : ch.terms()) {
      CHECK(lambda.weight() == n);
      CHECK(is_integer(c * Rat(z_of(lambda))));
    }
    CHECK(ch.coefficient(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
          Rat(static_cast<long>(census.size())) / Rat(z_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(11);
  const auto spec = ModuleSpec::standard();
  for (int n = 1; n <= 3; ++n) {
    const auto census = enumerate_decorated(spec, Family::genus1_stable, n);
    for (const auto& [code, d] : census.classes()) {
      const auto cf = canonical_form(d);
      CHECK(cf.code == code);
      for (int t = 0; t < 3; ++t) {
        const auto other = canonical_form(random_relabel(d, rng));
        CHECK(other.code == cf.code);
        CHECK(other.graph == cf.graph);
      }
    }
  }
}

TEST_CASE("canonical form separates leg labelings") {
  ModuleSpec ordered_pair;
  ordered_pair.genus1[2] = {Partition{1, 1}};
  const auto census = enumerate_decorated(ordered_pair, Family::genus1_stable, 2);
  const auto& d = census.classes().begin()->second;
  const auto swapped = relabel_legs(d, Perm::rotation(2));
  CHECK(canonical_form(swapped).code != canonical_form(d).code);
  CHECK(canonical_form(relabel_legs(swapped, Perm::rotation(2))).code == canonical_form(d).code);
  CHECK_THROWS_AS(relabel_legs(d, Perm::identity(1)), InvalidInput);
  CHECK_THROWS_AS(relabel_half_edges(d, Perm::identity(1), Perm::identity(1)), InvalidInput);
}

TEST_CASE("IsoClassSet deduplicates isomorphic inputs") {
  std::mt19937_64 rng(3);
  const auto census = enumerate_decorated(tri_spec(), Family::necklace, 2);
  IsoClassSet set(Family::necklace, 2);
  for (const auto& [code, d] : census.classes()) {
    CHECK(set.insert(d));
    CHECK_FALSE(set.insert(random_relabel(d, rng)));
  }
  CHECK(set.size() == census.size());
}

TEST_CASE("hom_char orbit oracle") {
  const auto trivial = closure({Perm::identity(2)});
  const auto swap = closure({Perm::rotation(2)});
  CHECK(hom_char(trivial, Partition{4}, 2) == h_gen(2, 2));
  CHECK(hom_char(swap, Partition{4}, 2) == h_gen(2, 2));
  // Restricting the six [2,2]-tabloids to S2 on the last two points.
  CHECK(hom_char(trivial, Partition{2, 2}, 2) == sf(2, {{{1, 1}, "3"}, {{2}, "1"}}));
  CHECK_THROWS_AS(hom_char(trivial, Partition{1}, 2), InvalidInput);
  CHECK_THROWS_AS(hom_char(trivial, Partition{5}, 2), InvalidInput);
}

TEST_CASE("to_json_line") {
  const auto census = enumerate_decorated(tri_spec(), Family::necklace, 1);
  const auto line = to_json_line(census.classes().begin()->second);
  CHECK(line.find("\"vertex_of\"") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}
