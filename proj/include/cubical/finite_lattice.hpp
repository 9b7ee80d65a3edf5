#pragma once

// Explicit finite posets and finite bounded distributive lattices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubical/error.hpp"
#include "cubical/lattice.hpp"
#include "cubical/term.hpp"

namespace cubical {

using OrderPairs = std::vector<std::pair<std::size_t, std::size_t>>;

namespace detail {

inline void check_unique_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen.emplace(names[i], i).second) throw InputError("duplicate element name '" + names[i] + "'");
  }
}

// Reflexive-transitive closure of `pairs` as a dense matrix; rejects cycles.
inline std::vector<char> order_closure(std::size_t n, const OrderPairs& pairs) {
  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("order pair refers to an unknown element");
    rel[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i]) {
        throw InputError("order is not antisymmetric: elements " + std::to_string(i) + " and " +
                         std::to_string(j) + " are mutually below each other");
      }
  return rel;
}

}  // namespace detail

/// A finite partial order on elements 0..size()-1.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_order(std::vector<std::string> names, const OrderPairs& leq) {
    detail::check_unique_names(names);
    FinitePoset p;
    p.leq_ = detail::order_closure(names.size(), leq);
    p.names_ = std::move(names);
    return p;
  }

  /// The product order on {0,1}^n; element ids are bitmasks.
  static FinitePoset boolean_cube(unsigned n) {
    if (n > 16) throw CapacityError("boolean cube too large");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> names;
    OrderPairs pairs;
    for (std::size_t a = 0; a < size; ++a) {
      std::string s;
      for (unsigned i = 0; i < n; ++i) s += ((a >> i) & 1u) ? '1' : '0';
      names.push_back(s.empty() ? "()" : s);
      for (std::size_t b = 0; b < size; ++b)
        if ((a & b) == a) pairs.emplace_back(a, b);
    }
    return from_order(std::move(names), pairs);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }

  /// Strict covering pairs (Hasse diagram).
  OrderPairs covers() const {
    OrderPairs out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < size() && direct; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<char> leq_;
};

/// A finite bounded distributive lattice with precomputed meet and join tables.
///
/// Elements are ids 0..size()-1. The order is validated as a partial order,
/// meets and joins must exist for every pair, and distributivity is checked.
class FiniteLattice {
 public:
  using value_type = std::size_t;

  FiniteLattice() = default;

  static FiniteLattice from_order(std::vector<std::string> names, const OrderPairs& leq) {
    if (names.empty()) throw InputError("a bounded lattice needs at least one element");
    detail::check_unique_names(names);
    FiniteLattice l;
    l.n_ = names.size();
    l.leq_ = detail::order_closure(l.n_, leq);
    l.names_ = std::move(names);
    l.build_tables();
    return l;
  }

  /// The chain 0 < a < b < ... < 1 with k elements.
  static FiniteLattice chain(std::size_t k) {
    if (k == 0) throw InputError("a chain needs at least one element");
    if (k > 28) throw CapacityError("chain too long");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == 0) names.emplace_back("0");
      else if (i + 1 == k) names.emplace_back("1");
      else names.emplace_back(1, static_cast<char>('a' + (i - 1)));
    }
    OrderPairs pairs;
    for (std::size_t i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
    return from_order(std::move(names), pairs);
  }

  /// The Boolean lattice on `atoms` atoms; id = subset bitmask, atoms named a, b, c, ...
  static FiniteLattice boolean(unsigned atoms) {
    if (atoms > 6) throw CapacityError("Boolean lattice too large");
    const std::size_t size = std::size_t{1} << atoms;
    std::vector<std::string> names;
    OrderPairs pairs;
    for (std::size_t s = 0; s < size; ++s) {
      if (s == 0) names.emplace_back("0");
      else if (s + 1 == size) names.emplace_back("1");
      else {
        std::string nm;
        for (unsigned i = 0; i < atoms; ++i)
          if ((s >> i) & 1u) nm += static_cast<char>('a' + i);
        names.push_back(nm);
      }
      for (std::size_t t = 0; t < size; ++t)
        if ((s & t) == s) pairs.emplace_back(s, t);
    }
    return from_order(std::move(names), pairs);
  }

  /// DL(n) as an explicit lattice; element i is enumerate_free(n)[i].
  static FiniteLattice free(unsigned n) {
    const auto elems = enumerate_free(n);
    std::vector<std::string> names;
    OrderPairs pairs;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names.push_back(format(elems[i]));
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (cubical::leq(elems[i], elems[j])) pairs.emplace_back(i, j);
    }
    return from_order(std::move(names), pairs);
  }

  std::size_t size() const { return n_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(const std::string& nm) const {
    auto it = std::find(names_.begin(), names_.end(), nm);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t index_of(const std::string& nm) const {
    if (auto i = find(nm)) return *i;
    throw InputError("unknown lattice element '" + nm + "'");
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t bottom() const { return bot_; }
  std::size_t top() const { return top_; }

  bool is_chain() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (!leq(a, b) && !leq(b, a)) return false;
    return true;
  }

  FinitePoset order() const {
    OrderPairs pairs;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (leq(a, b)) pairs.emplace_back(a, b);
    return FinitePoset::from_order(names_, pairs);
  }

 private:
  void build_tables() {
    meet_.assign(n_ * n_, 0);
    join_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        meet_[a * n_ + b] = extremal_bound(a, b, /*lower=*/true);
        join_[a * n_ + b] = extremal_bound(a, b, /*lower=*/false);
      }
    bot_ = top_ = 0;
    for (std::size_t a = 1; a < n_; ++a) {
      bot_ = meet(bot_, a);
      top_ = join(top_, a);
    }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
            throw InputError("lattice is not distributive at (" + names_[a] + ", " + names_[b] + ", " +
                             names_[c] + ")");
          }
  }

  // Greatest common lower bound (lower) or least common upper bound.
  std::size_t extremal_bound(std::size_t a, std::size_t b, bool lower) const {
    auto below = [&](std::size_t x, std::size_t y) { return lower ? leq(x, y) : leq(y, x); };
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!below(c, a) || !below(c, b)) continue;
      if (!best || below(*best, c)) best = c;
    }
    if (best) {
      for (std::size_t c = 0; c < n_; ++c)
        if (below(c, a) && below(c, b) && !below(c, *best)) {
          best.reset();
          break;
        }
    }
    if (!best) {
      throw InputError(std::string("elements ") + names_[a] + " and " + names_[b] + " have no " +
                       (lower ? "meet" : "join"));
    }
    return *best;
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bot_ = 0, top_ = 0;
};

}  // namespace cubical
