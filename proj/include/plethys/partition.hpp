#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "plethys/rational.hpp"

namespace plethys {

/// An integer partition, stored as weakly decreasing positive parts.
///
/// Partitions double as monomial keys: `p_λ = p_{λ1} p_{λ2} ...`. Ordering is
/// the canonical term order used everywhere output is produced: by weight,
/// then lexicographically on the parts, so (1,1,1) < (2,1) < (3).
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws InvalidInput on a non-positive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int part) const;

  /// Multiset union of parts (the key of p_λ · p_μ).
  Partition merged(const Partition& other) const;
  /// Every part multiplied by k (the key of ψ_k(p_λ)).
  Partition scaled(int k) const;
  /// The partition with one copy of `part` removed; `part` must occur.
  Partition without_one(int part) const;

  bool operator==(const Partition& other) const = default;
  std::strong_ordering operator<=>(const Partition& other) const;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in canonical order: (1^n) first, (n) last.
std::vector<Partition> partitions_of(int n);

/// z_λ = Π_i i^{m_i} m_i!, the order of the centralizer of a permutation of
/// cycle type λ.
BigInt z_of(const Partition& lambda);

/// Euler's totient.
long euler_phi(long n);

}  // namespace plethys
