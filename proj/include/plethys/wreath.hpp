#pragma once

#include <compare>
#include <string>

#include "plethys/partition.hpp"
#include "plethys/symfunc.hpp"
#include "plethys/truncated_series.hpp"

namespace plethys {

/// Conjugacy class of S₂: the identity `e` or the transposition `t`.
enum class S2Class { e, t };

/// Monomial in the power sums of Λ(S₂): Π 𝔭_k (class e) · Π 𝔮_k (class t).
/// Each class keeps its own multiset of indices, stored as a Partition.
struct WreathMonomial {
  Partition identity_part;    // indices of the 𝔭 factors
  Partition transposition_part;  // indices of the 𝔮 factors

  int weight() const { return identity_part.weight() + transposition_part.weight(); }
  const Partition& part(S2Class c) const {
    return c == S2Class::e ? identity_part : transposition_part;
  }
  WreathMonomial merged(const WreathMonomial& other) const {
    return {identity_part.merged(other.identity_part),
            transposition_part.merged(other.transposition_part)};
  }

  bool operator==(const WreathMonomial&) const = default;
  std::strong_ordering operator<=>(const WreathMonomial& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) return c;
    if (auto c = transposition_part <=> other.transposition_part; c != 0) return c;
    return identity_part <=> other.identity_part;
  }
};

/// Truncated element of the ring Λ(S₂) of wreath product symmetric functions.
using WreathSymFunc = TruncatedSeries<WreathMonomial>;

/// The generator p_k(c): 𝔭_k for c = e, 𝔮_k for c = t.
WreathSymFunc wreath_power_sum(int k, S2Class c, int truncation);

/// Characteristic of Ind_{D_n}^{S₂≀S_n} 1 from its rotation and reflection
/// sums: (1/2n) Σ_{d|n} φ(d) 𝔭_d^{n/d}, plus ½ 𝔮₁ 𝔭₂^{(n-1)/2} for odd n or
/// ¼ (𝔮₁² 𝔭₂^{n/2-1} + 𝔭₂^{n/2}) for even n.
WreathSymFunc dih_char_closed(int n, int truncation);

/// -½ Σ_n φ(n)/n log(1 - 𝔭_n) + ((𝔮₁/2)(1 + 𝔮₁/2) + ¼𝔭₂) / (1 - 𝔭₂).
WreathSymFunc dih_series_closed(int truncation);

/// Action of Λ(S₂) on ordinary symmetric functions through the two marked
/// legs: 𝔭_n ↦ ψ_n(f''), 𝔮_n ↦ 2ψ_n(ḟ), extended multiplicatively.
///
/// Requires f.truncation() >= w.truncation() + 2 (the derivatives cost two
/// degrees) and throws DivergentSeries if f'' or ḟ has a constant term.
SymFunc specialize_s2(const WreathSymFunc& w, const SymFunc& f);

/// Degree-one isomorphism Λ(S_k)^1 → Λ^k: p_1(c_λ) ↦ p_λ.
SymFunc deg1_iso(const Partition& cycle_type, int truncation);

/// f ∘_{S_k} g^{(k)} for homogeneous f of degree k, computed as D(f) g.
SymFunc plethysm_deg1(const SymFunc& f, const SymFunc& g);

std::string to_string(const WreathSymFunc& w);

}  // namespace plethys
