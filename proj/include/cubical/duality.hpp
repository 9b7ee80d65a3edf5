#pragma once

// Birkhoff duality between finite posets and finite distributive lattices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cubical/error.hpp"
#include "cubical/finite_lattice.hpp"

namespace cubical {

inline constexpr std::size_t max_lower_set_poset = 20;

/// The join-irreducible elements of a lattice, with their induced order.
struct JoinIrreducibles {
  FinitePoset poset;
  /// elements[i] is the lattice id of poset element i.
  std::vector<std::size_t> elements;
};

/// j is join-irreducible when j != bottom and j = a v b forces a = j or b = j.
inline JoinIrreducibles join_irreducibles(const FiniteLattice& lattice) {
  JoinIrreducibles out;
  const std::size_t n = lattice.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == lattice.bottom()) continue;
    bool irreducible = true;
    for (std::size_t a = 0; a < n && irreducible; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (lattice.join(a, b) == j && a != j && b != j) {
          irreducible = false;
          break;
        }
    if (irreducible) out.elements.push_back(j);
  }
  std::vector<std::string> names;
  OrderPairs pairs;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    names.push_back(lattice.name(out.elements[i]));
    for (std::size_t k = 0; k < out.elements.size(); ++k)
      if (lattice.leq(out.elements[i], out.elements[k])) pairs.emplace_back(i, k);
  }
  out.poset = FinitePoset::from_order(std::move(names), pairs);
  return out;
}

/// Down-closed subsets of `poset` as bitmasks, ordered by bitmask value.
inline std::vector<std::uint32_t> lower_set_masks(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  if (n > max_lower_set_poset) {
    throw CapacityError("lower sets of a poset with " + std::to_string(n) + " elements refused (cap " +
                        std::to_string(max_lower_set_poset) + ")");
  }
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (poset.leq(b, a)) below[a] |= std::uint32_t{1} << b;
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (((s >> a) & 1u) && (below[a] & ~s) != 0) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

inline std::string lower_set_name(const FinitePoset& poset, std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (!((mask >> a) & 1u)) continue;
    if (!first) s += ",";
    s += poset.name(a);
    first = false;
  }
  return s + "}";
}

/// The lattice of lower sets of `poset`, ordered by inclusion.
inline FiniteLattice lower_sets(const FinitePoset& poset) {
  const auto masks = lower_set_masks(poset);
  std::vector<std::string> names;
  OrderPairs pairs;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    names.push_back(lower_set_name(poset, masks[i]));
    for (std::size_t k = 0; k < masks.size(); ++k)
      if ((masks[i] & masks[k]) == masks[i]) pairs.emplace_back(i, k);
  }
  return FiniteLattice::from_order(std::move(names), pairs);
}

/// forward[i] is the image of element i; the map is a bijection preserving and reflecting order.
struct Isomorphism {
  std::vector<std::size_t> forward;
};

inline bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (std::size_t x : f) {
    if (x >= b.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

inline bool is_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b, const std::vector<std::size_t>& f) {
  if (!is_order_isomorphism(a.order(), b.order(), f)) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f[a.meet(x, y)] != b.meet(f[x], f[y]) || f[a.join(x, y)] != b.join(f[x], f[y])) return false;
  return true;
}

namespace detail {

// (elements below, elements above, lower covers, upper covers) of each element.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> poset_invariants(
    const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t down = 0, up = 0;
    for (std::size_t b = 0; b < n; ++b) {
      down += p.leq(b, a);
      up += p.leq(a, b);
    }
    std::get<0>(inv[a]) = down;
    std::get<1>(inv[a]) = up;
  }
  for (auto [a, b] : p.covers()) {
    ++std::get<3>(inv[a]);
    ++std::get<2>(inv[b]);
  }
  return inv;
}

}  // namespace detail

/// Poset isomorphism by invariant-guided backtracking; nullopt when none exists.
inline std::optional<Isomorphism> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  const auto ia = detail::poset_invariants(a);
  const auto ib = detail::poset_invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (ia[x] == ib[y]) candidates[x].push_back(y);
  // Most constrained first, then by rank.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::make_pair(candidates[x].size(), ia[x]) < std::make_pair(candidates[y].size(), ia[y]);
  });

  std::vector<std::size_t> f(n, n);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t x, std::size_t y) {
    for (std::size_t z = 0; z < n; ++z) {
      if (f[z] == n) continue;
      if (a.leq(x, z) != b.leq(y, f[z]) || a.leq(z, x) != b.leq(f[z], y)) return false;
    }
    return true;
  };
  auto search = [&](auto& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y : candidates[x]) {
      if (used[y] || !consistent(x, y)) continue;
      f[x] = y;
      used[y] = 1;
      if (self(self, depth + 1)) return true;
      f[x] = n;
      used[y] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Isomorphism{f};
}

inline std::optional<Isomorphism> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a.order(), b.order());
}

/// Witness that L is isomorphic to the lower sets of its join-irreducibles.
struct DualityWitness {
  JoinIrreducibles irreducibles;
  FiniteLattice dual;
  /// forward[x] is the id in `dual` of {j : j <= x}.
  Isomorphism iso;
};

/// Builds x -> {j in J(L) : j <= x} and verifies it is a lattice isomorphism.
inline DualityWitness duality_roundtrip(const FiniteLattice& lattice) {
  DualityWitness w{join_irreducibles(lattice), {}, {}};
  w.dual = lower_sets(w.irreducibles.poset);
  const auto masks = lower_set_masks(w.irreducibles.poset);
  std::unordered_map<std::uint32_t, std::size_t> id_of;
  for (std::size_t i = 0; i < masks.size(); ++i) id_of.emplace(masks[i], i);

  w.iso.forward.resize(lattice.size());
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < w.irreducibles.elements.size(); ++j)
      if (lattice.leq(w.irreducibles.elements[j], x)) mask |= std::uint32_t{1} << j;
    auto it = id_of.find(mask);
    if (it == id_of.end()) throw std::logic_error("duality map produced a set that is not down-closed");
    w.iso.forward[x] = it->second;
  }
  if (!is_lattice_isomorphism(lattice, w.dual, w.iso.forward)) {
    throw std::logic_error("duality map is not a lattice isomorphism; the lattice cannot be distributive");
  }
  return w;
}

/// A finite poset with an order-reversing involution.
class InvolutivePoset {
 public:
  static InvolutivePoset make(FinitePoset base, std::vector<std::size_t> inv) {
    const std::size_t n = base.size();
    if (inv.size() != n) throw InputError("involution must be defined on every element");
    for (std::size_t a = 0; a < n; ++a) {
      if (inv[a] >= n || inv[inv[a]] != a) throw InputError("map is not an involution at " + base.name(a));
      for (std::size_t b = 0; b < n; ++b)
        if (base.leq(a, b) && !base.leq(inv[b], inv[a])) {
          throw InputError("involution does not reverse order at " + base.name(a) + " <= " + base.name(b));
        }
    }
    InvolutivePoset p;
    p.base_ = std::move(base);
    p.inv_ = std::move(inv);
    return p;
  }

  const FinitePoset& base() const { return base_; }
  std::size_t involution(std::size_t a) const { return inv_.at(a); }

 private:
  FinitePoset base_;
  std::vector<std::size_t> inv_;
};

/// A finite distributive lattice with a De Morgan negation table.
class DeMorganLattice {
 public:
  using value_type = std::size_t;

  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t bottom() const { return lattice_.bottom(); }
  std::size_t top() const { return lattice_.top(); }
  std::size_t meet(std::size_t a, std::size_t b) const { return lattice_.meet(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return lattice_.join(a, b); }
  std::size_t negate(std::size_t a) const { return neg_.at(a); }

  /// Lower sets of an involutive poset with negation D -> {x : inv(x) not in D}.
  static DeMorganLattice from_involutive(const InvolutivePoset& p) {
    DeMorganLattice out;
    out.lattice_ = lower_sets(p.base());
    const auto masks = lower_set_masks(p.base());
    std::unordered_map<std::uint32_t, std::size_t> id_of;
    for (std::size_t i = 0; i < masks.size(); ++i) id_of.emplace(masks[i], i);
    for (std::uint32_t d : masks) {
      std::uint32_t neg = 0;
      for (std::size_t x = 0; x < p.base().size(); ++x)
        if (!((d >> p.involution(x)) & 1u)) neg |= std::uint32_t{1} << x;
      out.neg_.push_back(id_of.at(neg));
    }
    return out;
  }

 private:
  FiniteLattice lattice_;
  std::vector<std::size_t> neg_;
};

}  // namespace cubical
