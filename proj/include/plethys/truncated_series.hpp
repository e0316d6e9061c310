#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "plethys/errors.hpp"
#include "plethys/rational.hpp"

namespace plethys {

/// Graded polynomial ring truncated at a fixed total degree, with exact
/// rational coefficients.
///
/// `Key` is a monomial: it must provide `weight()` (its degree), `merged()`
/// (monomial product) and a total order whose first criterion is the weight.
/// Only keys of weight <= truncation are stored, and zero coefficients are
/// never stored, so structural equality is mathematical equality.
template <class Key>
class TruncatedSeries {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rat>;

  explicit TruncatedSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw InvalidInput("truncation degree must be nonnegative");
  }

  static TruncatedSeries zero(int truncation) { return TruncatedSeries(truncation); }
  static TruncatedSeries constant(const Rat& c, int truncation) {
    return monomial(Key{}, c, truncation);
  }
  static TruncatedSeries one(int truncation) { return constant(Rat(1), truncation); }
  static TruncatedSeries monomial(const Key& key, const Rat& c, int truncation) {
    TruncatedSeries s(truncation);
    s.add_term(key, c);
    return s;
  }

  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  Rat constant_term() const { return coefficient(Key{}); }

  /// Lowest degree carrying a nonzero coefficient; empty for the zero series.
  std::optional<int> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.weight();
  }
  /// Highest stored degree, -1 for the zero series.
  int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

  bool is_homogeneous() const {
    return terms_.empty() || *valuation() == max_degree();
  }

  TruncatedSeries homogeneous_part(int degree) const {
    TruncatedSeries out(truncation_);
    for (const auto& [k, c] : terms_) {
      if (k.weight() == degree) out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
  }

  /// Drops every term of degree > m; `m` may not exceed the current truncation.
  TruncatedSeries truncated(int m) const {
    if (m > truncation_) {
      throw TruncationMismatch("cannot raise truncation from " + std::to_string(truncation_) +
                               " to " + std::to_string(m));
    }
    TruncatedSeries out(m);
    for (const auto& [k, c] : terms_) {
      if (k.weight() > m) break;
      out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
  }

  /// Adds c·key, ignoring keys beyond the truncation.
  TruncatedSeries& add_term(const Key& key, const Rat& c) {
    if (key.weight() > truncation_ || c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    require_same_truncation(other, "add");
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    require_same_truncation(other, "subtract");
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  TruncatedSeries& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rat(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rat& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rat& c, TruncatedSeries a) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_truncation(b, "multiply");
    TruncatedSeries out(a.truncation_);
    for (const auto& [ka, ca] : a.terms_) {
      const int room = a.truncation_ - ka.weight();
      for (const auto& [kb, cb] : b.terms_) {
        if (kb.weight() > room) break;
        out.add_term(ka.merged(kb), ca * cb);
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }

  bool operator==(const TruncatedSeries& other) const {
    return truncation_ == other.truncation_ && terms_ == other.terms_;
  }

 private:
  void require_same_truncation(const TruncatedSeries& other, const char* what) const {
    if (truncation_ != other.truncation_) {
      throw TruncationMismatch(std::string("cannot ") + what + " series truncated at " +
                               std::to_string(truncation_) + " and " +
                               std::to_string(other.truncation_));
    }
  }

  int truncation_;
  Terms terms_;
};

template <class Key>
TruncatedSeries<Key> power(const TruncatedSeries<Key>& f, int exponent) {
  auto result = TruncatedSeries<Key>::one(f.truncation());
  auto base = f;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

namespace detail {
template <class Key>
void require_no_constant(const TruncatedSeries<Key>& f, const char* what) {
  if (f.constant_term() != 0) {
    throw DivergentSeries(std::string(what) + ": argument has a constant term");
  }
}
}  // namespace detail

/// -log(1 - f) = Σ_{k≥1} f^k / k.
template <class Key>
TruncatedSeries<Key> log_inv(const TruncatedSeries<Key>& f) {
  detail::require_no_constant(f, "log_inv");
  TruncatedSeries<Key> result(f.truncation());
  auto term = f;
  for (int k = 1; !term.is_zero(); ++k) {
    result += term * make_rat(1, k);
    term *= f;
  }
  return result;
}

/// 1 / (1 - f) = Σ_{k≥0} f^k.
template <class Key>
TruncatedSeries<Key> geom(const TruncatedSeries<Key>& f) {
  detail::require_no_constant(f, "geom");
  auto result = TruncatedSeries<Key>::one(f.truncation());
  auto term = f;
  while (!term.is_zero()) {
    result += term;
    term *= f;
  }
  return result;
}

}  // namespace plethys
