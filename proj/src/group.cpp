#include "plethys/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace plethys {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)]) {
      throw InvalidInput("Perm: images are not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Perm(std::move(images));
}

Perm Perm::rotation(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Perm(std::move(images));
}

Perm Perm::reflection(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - 1 - i;
  return Perm(std::move(images));
}

Perm Perm::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (const auto& cycle : cycles) {
    std::vector<int> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int from = pts[i] - 1;
      const int to = pts[(i + 1) % pts.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw InvalidInput("Perm: cycle point out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = image(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Perm operator*(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw InvalidInput("Perm: degree mismatch in product");
  std::vector<int> images(x.images_.size());
  for (int i = 0; i < x.degree(); ++i) images[static_cast<std::size_t>(i)] = x.image(y.image(i));
  return Perm(std::move(images));
}

SignedPerm::SignedPerm(std::vector<int8_t> signs, Perm perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  if (static_cast<int>(signs_.size()) != perm_.degree()) {
    throw InvalidInput("SignedPerm: sign vector length differs from permutation degree");
  }
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw InvalidInput("SignedPerm: signs must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(int n) { return uniform(1, Perm::identity(n)); }

SignedPerm SignedPerm::uniform(int sign, Perm perm) {
  std::vector<int8_t> signs(static_cast<std::size_t>(perm.degree()), static_cast<int8_t>(sign));
  return SignedPerm(std::move(signs), std::move(perm));
}

SignedPerm SignedPerm::inverse() const {
  // (s, x)^{-1} = (x^{-1}(s), x^{-1}); signs are self-inverse
  const Perm inv = perm_.inverse();
  std::vector<int8_t> signs(signs_.size());
  for (int j = 0; j < degree(); ++j) signs[static_cast<std::size_t>(j)] = signs_[static_cast<std::size_t>(perm_.image(j))];
  return SignedPerm(std::move(signs), inv);
}

bool SignedPerm::is_identity() const {
  return perm_.is_identity() && std::all_of(signs_.begin(), signs_.end(), [](int8_t s) { return s == 1; });
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.degree() != b.degree()) throw InvalidInput("SignedPerm: degree mismatch in product");
  const int n = a.degree();
  std::vector<int8_t> signs(static_cast<std::size_t>(n));
  // u_{x(i)} = s_{x(i)} t_i
  for (int i = 0; i < n; ++i) {
    const int j = a.perm_.image(i);
    signs[static_cast<std::size_t>(j)] = static_cast<int8_t>(a.sign(j) * b.sign(i));
  }
  return SignedPerm(std::move(signs), a.perm_ * b.perm_);
}

Partition cycle_type(const Perm& x) {
  std::vector<int> lengths;
  for (const auto& c : x.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

SymFunc cycle_map_sym(const Perm& x, int truncation) {
  if (x.degree() > truncation) throw InvalidInput("cycle_map_sym: degree exceeds truncation");
  return SymFunc::monomial(cycle_type(x), Rat(1), truncation);
}

WreathSymFunc wreath_cycle_map(const SignedPerm& x, int truncation) {
  if (x.degree() > truncation) throw InvalidInput("wreath_cycle_map: degree exceeds truncation");
  std::vector<int> even, odd;
  for (const auto& cycle : x.perm().cycles()) {
    int sign = 1;
    for (int i : cycle) sign *= x.sign(i);
    (sign == 1 ? even : odd).push_back(static_cast<int>(cycle.size()));
  }
  WreathMonomial key{Partition(std::move(even)), Partition(std::move(odd))};
  return WreathSymFunc::monomial(key, Rat(1), truncation);
}

GroupElements<Perm> cyclic_subgroup(int n) {
  if (n < 1) throw InvalidInput("cyclic_subgroup: n must be positive");
  return closure({Perm::rotation(n)});
}

GroupElements<Perm> dihedral_in_sym(int n) {
  if (n < 1) throw InvalidInput("dihedral_in_sym: n must be positive");
  return closure({Perm::rotation(n), Perm::reflection(n)});
}

GroupElements<SignedPerm> hyperoct_dihedral(int n) {
  if (n < 1) throw InvalidInput("hyperoct_dihedral: n must be positive");
  return closure({SignedPerm::uniform(1, Perm::rotation(n)), SignedPerm::uniform(-1, Perm::reflection(n))});
}

namespace {

// Burnside sums only depend on how many elements share each monomial.
template <class Element, class Key, class CycleMap>
TruncatedSeries<Key> average_cycle_map(const GroupElements<Element>& group, int truncation,
                                       CycleMap cycle_map) {
  if (group.order() == 0) throw InvalidInput("ind_trivial_char: empty group");
  std::map<Key, long> counts;
  for (const auto& h : group.elements()) {
    const auto psi = cycle_map(h, truncation);
    for (const auto& [key, c] : psi.terms()) counts[key] += 1;
  }
  TruncatedSeries<Key> out(truncation);
  const long order = static_cast<long>(group.order());
  for (const auto& [key, count] : counts) out.add_term(key, make_rat(count, order));
  return out;
}

}  // namespace

SymFunc ind_trivial_char(const GroupElements<Perm>& group, int truncation) {
  return average_cycle_map<Perm, Partition>(group, truncation, cycle_map_sym);
}

WreathSymFunc ind_trivial_char_wreath(const GroupElements<SignedPerm>& group, int truncation) {
  return average_cycle_map<SignedPerm, WreathMonomial>(group, truncation, wreath_cycle_map);
}

std::string to_string(const Perm& x) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : x.cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace plethys
