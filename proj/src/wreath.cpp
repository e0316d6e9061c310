#include "plethys/wreath.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace plethys {

WreathSymFunc wreath_power_sum(int k, S2Class c, int truncation) {
  if (k < 1) throw InvalidInput("wreath_power_sum: index must be positive");
  WreathMonomial key;
  (c == S2Class::e ? key.identity_part : key.transposition_part) = Partition{k};
  return WreathSymFunc::monomial(key, Rat(1), truncation);
}

WreathSymFunc dih_char_closed(int n, int truncation) {
  if (n < 1) throw InvalidInput("dih_char_closed: n must be positive");
  if (n > truncation) throw InvalidInput("dih_char_closed: n exceeds truncation");
  const int trunc = truncation;
  auto p = [&](int k) { return wreath_power_sum(k, S2Class::e, trunc); };
  auto q = [&](int k) { return wreath_power_sum(k, S2Class::t, trunc); };

  WreathSymFunc rotations(trunc);
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) rotations += power(p(d), n / d) * Rat(euler_phi(d));
  }
  rotations *= make_rat(1, 2L * n);

  WreathSymFunc reflections(trunc);
  if (n % 2 == 1) {
    reflections = q(1) * power(p(2), (n - 1) / 2) * make_rat(1, 2);
  } else {
    reflections = (power(q(1), 2) * power(p(2), n / 2 - 1) + power(p(2), n / 2)) * make_rat(1, 4);
  }
  return rotations + reflections;
}

WreathSymFunc dih_series_closed(int truncation) {
  if (truncation < 1) throw InvalidInput("dih_series_closed: truncation must be positive");
  const int trunc = truncation;
  auto p = [&](int k) { return wreath_power_sum(k, S2Class::e, trunc); };
  auto q1 = wreath_power_sum(1, S2Class::t, trunc);

  WreathSymFunc rotations(trunc);
  for (int n = 1; n <= trunc; ++n) {
    rotations += log_inv(p(n)) * make_rat(euler_phi(n), n);
  }
  rotations *= make_rat(1, 2);

  const auto half_q1 = q1 * make_rat(1, 2);
  auto numerator = half_q1 * (WreathSymFunc::one(trunc) + half_q1);
  auto quarter_p2 = trunc >= 2 ? p(2) * make_rat(1, 4) : WreathSymFunc::zero(trunc);
  numerator += quarter_p2;
  auto reflections = numerator * geom(trunc >= 2 ? p(2) : WreathSymFunc::zero(trunc));
  return rotations + reflections;
}

SymFunc specialize_s2(const WreathSymFunc& w, const SymFunc& f) {
  const int trunc = w.truncation();
  if (f.truncation() < trunc + 2) {
    throw TruncationMismatch("specialize_s2: f must be truncated at least two degrees above w");
  }
  const auto f_pp = partial_p(1, partial_p(1, f)).truncated(trunc);
  const auto f_dot = (partial_p(2, f) * Rat(2)).truncated(trunc);
  if (f_pp.constant_term() != 0 || f_dot.constant_term() != 0) {
    throw DivergentSeries("specialize_s2: f'' or f-dot has a constant term");
  }

  std::vector<std::optional<SymFunc>> image_e(static_cast<std::size_t>(trunc) + 1);
  std::vector<std::optional<SymFunc>> image_t(static_cast<std::size_t>(trunc) + 1);
  auto image = [&](int k, S2Class c) -> const SymFunc& {
    auto& slot = (c == S2Class::e ? image_e : image_t)[static_cast<std::size_t>(k)];
    if (!slot) slot = adams(k, c == S2Class::e ? f_pp : f_dot);
    return *slot;
  };

  SymFunc out(trunc);
  for (const auto& [key, c] : w.terms()) {
    auto term = SymFunc::constant(c, trunc);
    for (S2Class cls : {S2Class::e, S2Class::t}) {
      for (int k : key.part(cls).parts()) {
        term *= image(k, cls);
        if (term.is_zero()) break;
      }
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

SymFunc deg1_iso(const Partition& cycle_type, int truncation) {
  if (cycle_type.weight() > truncation) throw InvalidInput("deg1_iso: class degree exceeds truncation");
  return SymFunc::monomial(cycle_type, Rat(1), truncation);
}

SymFunc plethysm_deg1(const SymFunc& f, const SymFunc& g) {
  if (!f.is_homogeneous()) throw InvalidInput("plethysm_deg1: f must be homogeneous");
  return d_operator(f, g);
}

std::string to_string(const WreathSymFunc& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w.terms()) {
    Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (key.weight() == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    bool first_factor = true;
    for (auto [cls, letter] : {std::pair{S2Class::e, 'P'}, std::pair{S2Class::t, 'Q'}}) {
      const auto& part = key.part(cls);
      auto parts = part.parts();
      for (std::size_t i = parts.size(); i-- > 0;) {
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
        const int m = part.multiplicity(parts[i]);
        os << (first_factor ? "" : "*") << letter << parts[i];
        if (m > 1) os << '^' << m;
        first_factor = false;
      }
    }
  }
  return os.str();
}

}  // namespace plethys
