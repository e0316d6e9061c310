#include "plethys/series.hpp"

#include <string>

#include "plethys/errors.hpp"
#include "plethys/group.hpp"
#include "plethys/wreath.hpp"

namespace plethys {

void ModuleSpec::validate() const {
  auto check = [](const std::map<int, std::vector<Partition>>& table, int genus, int min_arity) {
    for (const auto& [n, lambdas] : table) {
      if (n < min_arity) {
        throw InvalidInput("genus-" + std::to_string(genus) + " arity " + std::to_string(n) +
                           " is unstable (need n >= " + std::to_string(min_arity) + ")");
      }
      for (const auto& lambda : lambdas) {
        if (lambda.weight() != n) {
          throw InvalidInput("genus-" + std::to_string(genus) + " entry " + lambda.to_string() +
                             " is not a partition of " + std::to_string(n));
        }
      }
    }
  };
  check(genus0, 0, 3);
  check(genus1, 1, 1);
}

const std::vector<Partition>& ModuleSpec::summands(int genus, int arity) const {
  static const std::vector<Partition> none;
  const auto& table = genus == 0 ? genus0 : genus1;
  auto it = table.find(arity);
  return it == table.end() ? none : it->second;
}

int ModuleSpec::max_arity(int genus) const {
  const auto& table = genus == 0 ? genus0 : genus1;
  return table.empty() ? 0 : table.rbegin()->first;
}

ModuleSpec ModuleSpec::standard() {
  ModuleSpec spec;
  for (int n = 3; n <= 6; ++n) spec.genus0[n] = {Partition{n}};
  spec.genus0[4].push_back(Partition{2, 2});
  for (int n = 1; n <= 4; ++n) spec.genus1[n] = {Partition{n}};
  return spec;
}

SymFunc a_series(const ModuleSpec& spec, int genus, int truncation) {
  if (genus != 0 && genus != 1) throw InvalidInput("a_series: genus must be 0 or 1");
  spec.validate();
  SymFunc out(truncation);
  for (const auto& [n, lambdas] : genus == 0 ? spec.genus0 : spec.genus1) {
    if (n > truncation) break;
    for (const auto& lambda : lambdas) out += h_partition(lambda, truncation);
  }
  return out;
}

SymFunc ass_series_closed(int truncation) {
  SymFunc out(truncation);
  for (int n = 1; n <= truncation; ++n) {
    out += log_inv(power_sum(n, truncation)) * make_rat(euler_phi(n), n);
  }
  return out;
}

SymFunc ass_series_burnside(int truncation) {
  SymFunc out(truncation);
  for (int n = 1; n <= truncation; ++n) out += ind_trivial_char(cyclic_subgroup(n), truncation);
  return out;
}

namespace {

void require_genus0_input(const SymFunc& a0, int truncation, int extra, const char* what) {
  if (auto v = a0.valuation(); v && *v < 3) {
    throw InvalidInput(std::string(what) + ": a0 must have valuation >= 3");
  }
  if (a0.truncation() < truncation + extra) {
    throw TruncationMismatch(std::string(what) + ": a0 must be truncated at N + " +
                             std::to_string(extra) + " or higher");
  }
}

SymFunc second_p1_derivative(const SymFunc& a0, int truncation) {
  return partial_p(1, partial_p(1, a0.truncated(truncation + 2)));
}

SymFunc p2_derivative(const SymFunc& a0, int truncation) {
  return partial_p(2, a0.truncated(truncation + 2));
}

// Σ_n φ(n)/n · (-log(1 - ψ_n(f)))
SymFunc rotation_sum(const SymFunc& f) {
  const int trunc = f.truncation();
  SymFunc out(trunc);
  for (int n = 1; n <= trunc; ++n) out += log_inv(adams(n, f)) * make_rat(euler_phi(n), n);
  return out;
}

}  // namespace

SymFunc cyclic_necklace_series(const SymFunc& a0, int truncation) {
  require_genus0_input(a0, truncation, 2, "cyclic_necklace_series");
  return rotation_sum(second_p1_derivative(a0, truncation));
}

SymFunc necklace_series_direct(const SymFunc& a0, int truncation, ReflectionCorrection correction) {
  require_genus0_input(a0, truncation, 2, "necklace_series");
  const auto a0_pp = second_p1_derivative(a0, truncation);
  const auto a0_dot = p2_derivative(a0, truncation);
  const auto psi2 = adams(2, a0_pp);

  auto numerator = a0_dot * (SymFunc::one(truncation) + a0_dot);
  if (correction == ReflectionCorrection::include) numerator += psi2 * make_rat(1, 4);
  return rotation_sum(a0_pp) * make_rat(1, 2) + numerator * geom(psi2);
}

SymFunc necklace_series_wreath(const SymFunc& a0, int truncation) {
  require_genus0_input(a0, truncation, 2, "necklace_series");
  return specialize_s2(dih_series_closed(truncation), a0.truncated(truncation + 2));
}

SymFunc tree_fixed_point(const SymFunc& a0, int truncation) {
  require_genus0_input(a0, truncation, 1, "tree_fixed_point");
  const auto a0_p = partial_p(1, a0.truncated(truncation + 1));
  const auto leg = power_sum(1, truncation);
  // a₀' has valuation >= 2, so each pass fixes at least one more degree
  auto f = leg;
  for (int iteration = 0; iteration <= truncation + 1; ++iteration) {
    auto next = leg + plethysm(a0_p, f);
    if (next == f) return f;
    f = std::move(next);
  }
  throw DivergentSeries("tree_fixed_point: iteration did not stabilize");
}

SymFunc naive_dihedral_series(const SymFunc& a0, int truncation) {
  require_genus0_input(a0, truncation, 2, "naive_dihedral_series");
  const auto a0_pp = second_p1_derivative(a0, truncation);
  SymFunc out(truncation);
  for (int k = 1; k <= truncation; ++k) {
    out += plethysm(ind_trivial_char(dihedral_in_sym(k), truncation), a0_pp);
  }
  return out;
}

GenSeries::GenSeries(const ModuleSpec& spec, int truncation)
    : truncation_(truncation),
      a0_(a_series(spec, 0, truncation + 2)),
      a1_(a_series(spec, 1, truncation)),
      a0_second_(second_p1_derivative(a0_, truncation)),
      a0_dot_(p2_derivative(a0_, truncation)),
      b0_prime_(tree_fixed_point(a0_, truncation) - power_sum(1, truncation)),
      necklaces_(necklace_series_direct(a0_, truncation)),
      b1_(plethysm(a1_ + necklaces_, b0_prime_ + power_sum(1, truncation))) {
  if (truncation < 1) throw InvalidInput("GenSeries: truncation must be positive");
}

SymFunc b1_series(const ModuleSpec& spec, int truncation) {
  return GenSeries(spec, truncation).b1();
}

}  // namespace plethys
