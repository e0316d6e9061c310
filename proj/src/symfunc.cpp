#include "plethys/symfunc.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace plethys {

SymFunc power_sum(int k, int truncation) {
  if (k < 1) throw InvalidInput("power_sum: index must be positive");
  return SymFunc::monomial(Partition{k}, Rat(1), truncation);
}

SymFunc h_gen(int n, int truncation) {
  if (n < 0) throw InvalidInput("h_gen: n must be nonnegative");
  if (n > truncation) throw InvalidInput("h_gen: degree exceeds truncation");
  SymFunc out(truncation);
  for (const auto& lambda : partitions_of(n)) out.add_term(lambda, make_rat(BigInt(1), z_of(lambda)));
  return out;
}

SymFunc h_partition(const Partition& lambda, int truncation) {
  auto out = SymFunc::one(truncation);
  for (int part : lambda.parts()) {
    if (part > truncation) return SymFunc::zero(truncation);
    out *= h_gen(part, truncation);
  }
  return out;
}

SymFunc adams(int k, const SymFunc& f) {
  if (k < 1) throw InvalidInput("adams: k must be positive");
  SymFunc out(f.truncation());
  for (const auto& [key, c] : f.terms()) out.add_term(key.scaled(k), c);
  return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (f.truncation() != g.truncation()) {
    throw TruncationMismatch("plethysm: operands have different truncations");
  }
  if (g.constant_term() != 0) throw DivergentSeries("plethysm: inner argument has a constant term");
  const int n = f.truncation();
  std::vector<std::optional<SymFunc>> psi(static_cast<std::size_t>(n) + 1);
  auto adams_of_g = [&](int k) -> const SymFunc& {
    auto& slot = psi[static_cast<std::size_t>(k)];
    if (!slot) slot = adams(k, g);
    return *slot;
  };
  SymFunc out(n);
  for (const auto& [key, c] : f.terms()) {
    auto term = SymFunc::constant(c, n);
    // parts are weakly decreasing; each factor ψ_k(g) has valuation >= k
    for (int part : key.parts()) {
      term *= adams_of_g(part);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SymFunc partial_p(int k, const SymFunc& f) {
  if (k < 1) throw InvalidInput("partial_p: k must be positive");
  if (k > f.truncation()) {
    throw TruncationMismatch("partial_p: derivative order exceeds truncation");
  }
  SymFunc out(f.truncation() - k);
  for (const auto& [key, c] : f.terms()) {
    const int m = key.multiplicity(k);
    if (m > 0) out.add_term(key.without_one(k), c * m);
  }
  return out;
}

SymFunc d_operator(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero()) return SymFunc::zero(g.truncation());
  const int out_truncation = g.truncation() - f.max_degree();
  if (out_truncation < 0) {
    throw TruncationMismatch("d_operator: operator degree exceeds truncation of the operand");
  }
  SymFunc out(out_truncation);
  for (const auto& [key, c] : f.terms()) {
    SymFunc applied = g;
    for (int part : key.parts()) applied = partial_p(part, applied) * Rat(part);
    out += applied.truncated(out_truncation) * c;
  }
  return out;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (key.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    auto parts = key.parts();
    bool first_factor = true;
    // ascending index order reads more naturally: p1^2*p2
    for (std::size_t i = parts.size(); i-- > 0;) {
      if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
      const int m = key.multiplicity(parts[i]);
      os << (first_factor ? "" : "*") << 'p' << parts[i];
      if (m > 1) os << '^' << m;
      first_factor = false;
    }
  }
  return os.str();
}

}  // namespace plethys
