#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plethys/graph.hpp"
#include "plethys/series.hpp"
#include "plethys/symfunc.hpp"

namespace plethys {

enum class Family { genus1_stable, necklace, oriented_necklace, rooted_tree };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Caps on brute-force enumeration. Exceeding any of them throws
/// BudgetExceeded rather than returning a partial census.
struct Budget {
  int max_half_edges = 18;
  int max_legs = 6;
  std::size_t max_classes = 1'000'000;
};

/// Isomorphism classes of decorated graphs keyed by canonical code, so
/// iteration order is deterministic.
class IsoClassSet {
 public:
  IsoClassSet(Family family, int legs) : family_(family), legs_(legs) {}

  Family family() const { return family_; }
  int legs() const { return legs_; }
  std::size_t size() const { return classes_.size(); }
  const std::map<std::vector<int>, DecoratedGraph>& classes() const { return classes_; }

  /// Inserts the class of `g`; returns false if it was already present.
  bool insert(const DecoratedGraph& g);

 private:
  Family family_;
  int legs_;
  std::map<std::vector<int>, DecoratedGraph> classes_;
};

/// All isomorphism classes of decorated stable graphs of a family with legs
/// labeled 1..n (rooted trees also carry the root leg 0):
///  - genus1_stable: connected, total genus 1 (one genus-1 vertex and a tree,
///    or a cycle of genus-0 vertices with trees attached);
///  - necklace: a cycle of genus-0 vertices, every leg on a cycle vertex;
///  - oriented_necklace: the same, up to rotations only;
///  - rooted_tree: trees of genus-0 vertices.
/// Decorations range over the module spec's Young modules.
IsoClassSet enumerate_decorated(const ModuleSpec& spec, Family family, int n,
                                const Budget& budget = {});

/// ch of the permutation module spanned by the classes, S_n acting on leg
/// labels 1..n: Σ_{λ ⊢ n} Fix(π_λ) p_λ / z_λ.
SymFunc char_of_census(const IsoClassSet& classes, int truncation);

/// Fix(π): classes isomorphic to their own relabeling by π.
long fixed_class_count(const IsoClassSet& classes, const Perm& pi);

/// ch MV((1, n)), all genus-one stable graphs.
SymFunc mv_char(const ModuleSpec& spec, int n, int truncation, const Budget& budget = {});
SymFunc necklace_char_oracle(const ModuleSpec& spec, int n, int truncation, const Budget& budget = {});
SymFunc cyclic_necklace_char_oracle(const ModuleSpec& spec, int n, int truncation,
                                    const Budget& budget = {});
/// Rooted trees with root leg 0, as an S_n-module on legs 1..n.
SymFunc tree_char_oracle(const ModuleSpec& spec, int n, int truncation, const Budget& budget = {});

/// Σ_{1 ≤ n ≤ N} of one of the oracles above.
SymFunc oracle_series(const ModuleSpec& spec, Family family, int truncation, const Budget& budget = {});

/// Orbit oracle for restriction-then-coinvariants. X is the set of tabloids
/// (ordered set partitions with block sizes μ) of k + m points, K ≤ S_k acts
/// on the first k points and S_m on the rest. Returns ch of the S_m-module
/// C[X]_K, computed by counting fixed tabloids of κ × π.
SymFunc hom_char(const GroupElements<Perm>& k_group, const Partition& mu, int truncation);

}  // namespace plethys
