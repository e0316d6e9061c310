#pragma once

#include <map>
#include <vector>

#include "plethys/partition.hpp"
#include "plethys/symfunc.hpp"

namespace plethys {

/// Test S-module data: for each genus g ∈ {0, 1} and arity n, a direct sum of
/// Young permutation modules Ind_{S_λ}^{S_n} 1, one per listed λ ⊢ n.
/// Repeating a partition adds another copy of the same summand.
struct ModuleSpec {
  std::map<int, std::vector<Partition>> genus0;  // n >= 3
  std::map<int, std::vector<Partition>> genus1;  // n >= 1

  /// Throws InvalidInput on an unstable arity or a λ that is not a partition of n.
  void validate() const;

  const std::vector<Partition>& summands(int genus, int arity) const;
  int max_arity(int genus) const;

  /// genus0 = {n: [[n]] for 3 <= n <= 6} plus [2,2] at n = 4;
  /// genus1 = {n: [[n]] for 1 <= n <= 4}.
  static ModuleSpec standard();

  bool operator==(const ModuleSpec&) const = default;
};

/// a_g = Σ_n ch V((g, n)) = Σ_n Σ_λ h_λ, truncated.
SymFunc a_series(const ModuleSpec& spec, int genus, int truncation);

/// Σ_{n ≤ N} ch Ass(n) as -Σ φ(n)/n log(1 - p_n).
SymFunc ass_series_closed(int truncation);
/// Σ_{n ≤ N} ch Ind_{Z/n}^{S_n} 1 by Burnside sums over the cyclic groups.
SymFunc ass_series_burnside(int truncation);

/// -Σ_n φ(n)/n log(1 - ψ_n(a₀'')): cyclically ordered necklaces of genus-zero
/// vertices. `a0` must be truncated at N + 2 or higher, with valuation >= 3.
SymFunc cyclic_necklace_series(const SymFunc& a0, int truncation);

enum class ReflectionCorrection { include, omit };

/// Unordered necklaces, assembled directly from the symmetric-function
/// primitives:
///   -½ Σ φ(n)/n log(1 - ψ_n(a₀'')) + (ȧ₀(1 + ȧ₀) + ¼ψ₂(a₀'')) / (1 - ψ₂(a₀'')).
/// `omit` drops the ¼ψ₂(a₀'') term and exists only as a regression control.
SymFunc necklace_series_direct(const SymFunc& a0, int truncation,
                               ReflectionCorrection correction = ReflectionCorrection::include);
/// Unordered necklaces through Λ(S₂): the Dih series acting on a₀ via ∘_{S₂}.
SymFunc necklace_series_wreath(const SymFunc& a0, int truncation);

/// h₁ + b₀': the solution f of f = p₁ + a₀' ∘ f with lowest term p₁, i.e.
/// rooted genus-zero trees plus the bare leg. `a0` must be truncated at N + 1
/// or higher, with valuation >= 3.
SymFunc tree_fixed_point(const SymFunc& a0, int truncation);

/// b₁ = (a₁ + necklaces) ∘ (h₁ + b₀').
SymFunc b1_series(const ModuleSpec& spec, int truncation);

/// Naive Σ_k ch Ind_{D_k ≤ S_k} 1 ∘ a₀'', which ignores that reflections
/// exchange the two marked legs. Used as a negative control.
SymFunc naive_dihedral_series(const SymFunc& a0, int truncation);

/// The generating series of one module spec at one truncation, with every
/// derived series computed once.
class GenSeries {
 public:
  GenSeries(const ModuleSpec& spec, int truncation);

  int truncation() const { return truncation_; }
  /// a₀ is held two degrees deeper than the rest so a₀'' and ȧ₀ are exact at N.
  const SymFunc& a0() const { return a0_; }
  const SymFunc& a1() const { return a1_; }
  const SymFunc& a0_second() const { return a0_second_; }
  const SymFunc& a0_dot() const { return a0_dot_; }
  const SymFunc& b0_prime() const { return b0_prime_; }
  const SymFunc& necklaces() const { return necklaces_; }
  const SymFunc& b1() const { return b1_; }

 private:
  int truncation_;
  SymFunc a0_, a1_, a0_second_, a0_dot_, b0_prime_, necklaces_, b1_;
};

}  // namespace plethys
