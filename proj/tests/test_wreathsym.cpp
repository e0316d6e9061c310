#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plethys/census.hpp"
#include "plethys/group.hpp"
#include "plethys/wreath.hpp"

using namespace plethys;
using oracle::sf;

namespace {

using W = WreathSymFunc;

W wmono(int truncation, Partition e, Partition t, const char* c) {
  return W::monomial(WreathMonomial{std::move(e), std::move(t)}, Rat(c), truncation);
}

W P(int k, int n) { return wreath_power_sum(k, S2Class::e, n); }
W Q(int k, int n) { return wreath_power_sum(k, S2Class::t, n); }

SymFunc sample_a0(int truncation) {
  return h_gen(3, truncation) + h_gen(4, truncation) + h_partition(Partition{2, 2}, truncation) +
         h_gen(5, truncation);
}

}  // namespace

TEST_CASE("wreath ring arithmetic") {
  CHECK(P(1, 3) * Q(1, 3) == wmono(3, {1}, {1}, "1"));
  const auto a = P(2, 3) + Q(1, 3) * Rat(3);
  CHECK(a + W::zero(3) == a);
  CHECK(P(2, 3) * P(2, 3) == W::zero(3));
  CHECK(P(2, 4) * P(2, 4) == wmono(4, {2, 2}, {}, "1"));
  CHECK_THROWS_AS(P(1, 3) * P(1, 4), TruncationMismatch);
  CHECK_THROWS_AS(wreath_power_sum(0, S2Class::e, 3), InvalidInput);
}

TEST_CASE("dih_char_closed examples") {
  CHECK(dih_char_closed(3, 3) ==
        wmono(3, {1, 1, 1}, {}, "1/6") + wmono(3, {3}, {}, "1/3") + wmono(3, {2}, {1}, "1/2"));
  CHECK(dih_char_closed(2, 3) ==
        wmono(3, {1, 1}, {}, "1/4") + wmono(3, {2}, {}, "1/2") + wmono(3, {}, {1, 1}, "1/4"));
  CHECK(dih_char_closed(1, 3) == wmono(3, {1}, {}, "1/2") + wmono(3, {}, {1}, "1/2"));
  CHECK_THROWS_AS(dih_char_closed(0, 3), InvalidInput);
  CHECK_THROWS_AS(dih_char_closed(4, 3), InvalidInput);
}

TEST_CASE("dih_char_closed equals Burnside over the dihedral subgroup") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(dih_char_closed(n, 8) == ind_trivial_char_wreath(hyperoct_dihedral(n), 8));
  }
}

TEST_CASE("dih_series_closed degree parts") {
  const int N = 7;
  const auto series = dih_series_closed(N);
  CHECK(series.constant_term() == 0);
  for (int n = 1; n <= N; ++n) CHECK(series.homogeneous_part(n) == dih_char_closed(n, N));
  CHECK_THROWS_AS(dih_series_closed(0), InvalidInput);
}

TEST_CASE("specialize_s2 on generators") {
  const int N = 5;
  const auto f = sample_a0(N + 2);
  const auto f_pp = partial_p(1, partial_p(1, f)).truncated(N);
  const auto two_f_dot = (partial_p(2, f) * Rat(2)).truncated(N);
  CHECK(specialize_s2(P(1, N), f) == f_pp);
  CHECK(specialize_s2(Q(1, N), f) == two_f_dot);
  CHECK(specialize_s2(Q(1, N) * P(2, N), f) == two_f_dot * adams(2, f_pp));
  CHECK(specialize_s2(W::one(N), f) == SymFunc::one(N));
  CHECK(specialize_s2(W::zero(N), f) == SymFunc::zero(N));
  for (int k = 1; k <= N; ++k) {
    CHECK(specialize_s2(P(k, N), f) == adams(k, f_pp));
    CHECK(specialize_s2(Q(k, N), f) == adams(k, two_f_dot));
  }
}

TEST_CASE("specialize_s2 is linear and multiplicative") {
  const int N = 6;
  const auto f = sample_a0(N + 2);
  const auto a = dih_char_closed(2, N) + P(3, N) * Rat(2);
  const auto b = Q(1, N) * make_rat(-1, 3) + P(1, N) * Q(2, N);
  CHECK(specialize_s2(a + b, f) == specialize_s2(a, f) + specialize_s2(b, f));
  CHECK(specialize_s2(a * b, f) == specialize_s2(a, f) * specialize_s2(b, f));
}

TEST_CASE("specialize_s2 preconditions") {
  CHECK_THROWS_AS(specialize_s2(P(1, 4), sample_a0(5)), TruncationMismatch);
  // h2'' = 1 has a constant term.
  CHECK_THROWS_AS(specialize_s2(P(1, 4), h_gen(2, 6)), DivergentSeries);
}

TEST_CASE("deg1_iso") {
  CHECK(deg1_iso(Partition{1, 1}, 3) == sf(3, {{{1, 1}, "1"}}));
  CHECK(deg1_iso(Partition{2}, 3) == power_sum(2, 3));
  CHECK(deg1_iso(Partition{1}, 3) == power_sum(1, 3));
  CHECK_THROWS_AS(deg1_iso(Partition{2, 2}, 3), InvalidInput);
}

TEST_CASE("plethysm_deg1") {
  const auto g = h_gen(4, 6) + h_partition(Partition{3, 2}, 6);
  CHECK(plethysm_deg1(deg1_iso(Partition{1, 1}, 2), g) == partial_p(1, partial_p(1, g)));
  CHECK(plethysm_deg1(power_sum(2, 2), g) == partial_p(2, g) * Rat(2));
  CHECK(plethysm_deg1(h_gen(2, 4), h_gen(4, 4)) == h_gen(2, 2));
  CHECK_THROWS_AS(plethysm_deg1(power_sum(1, 3) + power_sum(2, 3), h_gen(3, 3)), InvalidInput);
}

TEST_CASE("plethysm_deg1 matches orbit counting") {
  const auto trivial = closure({Perm::identity(2)});
  const auto swap = closure({Perm::rotation(2)});
  CHECK(plethysm_deg1(h_gen(2, 4), h_gen(4, 4)) == hom_char(swap, Partition{4}, 2));
  CHECK(plethysm_deg1(deg1_iso(Partition{1, 1}, 5), h_partition(Partition{3, 2}, 5)) ==
        hom_char(trivial, Partition{3, 2}, 3));
  CHECK(plethysm_deg1(h_gen(2, 5), h_partition(Partition{3, 2}, 5)) == hom_char(swap, Partition{3, 2}, 3));
}

TEST_CASE("to_string(WreathSymFunc)") {
  CHECK(to_string(W::zero(2)) == "0");
  CHECK(to_string(dih_char_closed(1, 1)) == "1/2*P1 + 1/2*Q1");
}
