#include "plethys/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "plethys/errors.hpp"

namespace plethys {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::merged(const Partition& other) const {
  Partition out;
  out.parts_.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out.parts_), std::greater<>());
  out.weight_ = weight_ + other.weight_;
  return out;
}

Partition Partition::scaled(int k) const {
  Partition out = *this;
  for (int& p : out.parts_) p *= k;
  out.weight_ *= k;
  return out;
}

Partition Partition::without_one(int part) const {
  Partition out = *this;
  auto it = std::find(out.parts_.begin(), out.parts_.end(), part);
  if (it == out.parts_.end()) throw InvalidInput("part not present in partition");
  out.parts_.erase(it);
  out.weight_ -= part;
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  // smallest first part first, giving ascending lexicographic order
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInput("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt z_of(const Partition& lambda) {
  BigInt z = 1;
  auto parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= power * fact;
    i = j;
  }
  return z;
}

long euler_phi(long n) {
  if (n < 1) throw InvalidInput("euler_phi: n must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace plethys
