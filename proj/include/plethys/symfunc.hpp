#pragma once

#include <string>

#include "plethys/partition.hpp"
#include "plethys/truncated_series.hpp"

namespace plethys {

/// A symmetric function in the power-sum basis, truncated at a fixed degree.
/// The key (λ1, λ2, ...) stands for p_{λ1} p_{λ2} ...; the empty partition is 1.
using SymFunc = TruncatedSeries<Partition>;

SymFunc power_sum(int k, int truncation);

/// h_n = Σ_{λ ⊢ n} p_λ / z_λ. Throws InvalidInput if n > truncation.
SymFunc h_gen(int n, int truncation);

/// h_λ = h_{λ1} h_{λ2} ..., the characteristic of the Young permutation
/// module of shape λ. Terms beyond the truncation are dropped.
SymFunc h_partition(const Partition& lambda, int truncation);

/// Plethysm f ∘ g: p_k ↦ ψ_k(g), extended as a ring homomorphism in f.
/// Rational coefficients are constants. g must have no constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Adams operation ψ_k: p_j ↦ p_{jk}.
SymFunc adams(int k, const SymFunc& f);

/// ∂f/∂p_k. The result is truncated at N - k, the highest degree that does
/// not depend on terms discarded from f.
SymFunc partial_p(int k, const SymFunc& f);

/// D(f) g with D(p_k) = k ∂/∂p_k, extended multiplicatively. f is taken as
/// the polynomial formed by its stored terms; the result is truncated at
/// g.truncation() - f.max_degree().
SymFunc d_operator(const SymFunc& f, const SymFunc& g);

/// Human-readable rendering, e.g. "p1 + 1/2*p1^2 + 1/2*p2".
std::string to_string(const SymFunc& f);

}  // namespace plethys
