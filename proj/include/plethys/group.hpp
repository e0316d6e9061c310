#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "plethys/errors.hpp"
#include "plethys/partition.hpp"
#include "plethys/symfunc.hpp"
#include "plethys/wreath.hpp"

namespace plethys {

/// Permutation of {0, ..., n-1}; `image(i)` is where i goes.
/// Products compose right to left: (x * y)(i) = x(y(i)).
class Perm {
 public:
  Perm() = default;
  /// Throws InvalidInput unless `images` is a bijection of {0..n-1}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// The n-cycle i ↦ i+1 mod n.
  static Perm rotation(int n);
  /// The involution i ↦ n-1-i.
  static Perm reflection(int n);
  /// Builds a permutation from 1-based cycles, e.g. {{1,2},{3,4,5}}.
  static Perm from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }
  Perm inverse() const;
  bool is_identity() const;

  /// Cycles of the permutation, each listed from its smallest point.
  std::vector<std::vector<int>> cycles() const;

  friend Perm operator*(const Perm& x, const Perm& y);
  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// Element (s, x) of the hyperoctahedral group S₂ ≀ S_n = (S₂)^n ⋊ S_n.
///
/// It acts on {±1} × {0..n-1} by (s, x)·(ε, i) = (s_{x(i)} ε, x(i)), which
/// gives the product (s, x)(t, y) = (s · x(t), x y) with x(t)_j = t_{x⁻¹(j)}.
class SignedPerm {
 public:
  SignedPerm() = default;
  /// Throws InvalidInput unless lengths agree and every sign is ±1.
  SignedPerm(std::vector<int8_t> signs, Perm perm);

  static SignedPerm identity(int n);
  /// (c, x) with the constant sign vector c = (sign, ..., sign).
  static SignedPerm uniform(int sign, Perm perm);

  int degree() const { return perm_.degree(); }
  std::span<const int8_t> signs() const { return signs_; }
  int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }
  const Perm& perm() const { return perm_; }
  SignedPerm inverse() const;
  bool is_identity() const;

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
  bool operator==(const SignedPerm&) const = default;
  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int8_t> signs_;
  Perm perm_;
};

/// A finite group given extensionally: identity first, then the rest in
/// breadth-first discovery order.
template <class Element>
class GroupElements {
 public:
  explicit GroupElements(std::vector<Element> elements) : elements_(std::move(elements)) {}
  std::span<const Element> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  int degree() const { return elements_.empty() ? 0 : elements_.front().degree(); }

 private:
  std::vector<Element> elements_;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000;

/// Subgroup generated by `generators`, by breadth-first closure under right
/// multiplication by generators. Throws BudgetExceeded past `cap` elements and
/// InvalidInput on an empty list or mismatched degrees.
template <class Element>
GroupElements<Element> closure(std::span<const Element> generators,
                               std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw InvalidInput("closure: no generators");
  const int n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) throw InvalidInput("closure: generators have different degrees");
  }
  std::vector<Element> order{Element::identity(n)};
  std::set<Element> seen{order.front()};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : generators) {
      Element next = order[head] * g;
      if (seen.insert(next).second) {
        if (order.size() >= cap) throw BudgetExceeded("closure exceeds element cap");
        order.push_back(std::move(next));
      }
    }
  }
  return GroupElements<Element>(std::move(order));
}

template <class Element>
GroupElements<Element> closure(std::initializer_list<Element> generators,
                               std::size_t cap = kDefaultClosureCap) {
  return closure(std::span<const Element>(generators.begin(), generators.size()), cap);
}

Partition cycle_type(const Perm& x);

/// Ψ(x) = p_{cycle type of x}.
SymFunc cycle_map_sym(const Perm& x, int truncation);

/// Ψ(s, x) = Π over cycles of x of 𝔭_len or 𝔮_len, according to whether the
/// product of signs along the cycle is +1 or -1.
WreathSymFunc wreath_cycle_map(const SignedPerm& x, int truncation);

/// Z/n ≤ S_n generated by the rotation.
GroupElements<Perm> cyclic_subgroup(int n);
/// D_n ≤ S_n generated by the rotation and the reflection i ↦ n-1-i.
GroupElements<Perm> dihedral_in_sym(int n);
/// D_n ≤ S₂ ≀ S_n generated by (+1, rotation) and (-1, reflection).
GroupElements<SignedPerm> hyperoct_dihedral(int n);

/// ch Ind_H^{S_n} 1 = (1/|H|) Σ_{h ∈ H} Ψ(h).
SymFunc ind_trivial_char(const GroupElements<Perm>& group, int truncation);
/// ch Ind_H^{S₂≀S_n} 1 = (1/|H|) Σ_{h ∈ H} Ψ(h) in Λ(S₂).
WreathSymFunc ind_trivial_char_wreath(const GroupElements<SignedPerm>& group, int truncation);

std::string to_string(const Perm& x);

}  // namespace plethys
