#pragma once

// Free bounded distributive lattices DL(n) in antichain (monotone DNF) normal form.

#include <algorithm>
#include <bit>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cubical/error.hpp"

namespace cubical {

/// A clause is a meet of generators, stored as a bitmask of generator indices.
using Clause = std::uint64_t;

inline constexpr unsigned max_generators = 64;

/// Largest n for which DL(n) may be enumerated; |DL(5)| = 7581 is refused.
inline constexpr unsigned max_enumerable_generators = 4;

namespace detail {

// Lexicographic comparison of two clauses read as sorted index lists.
inline std::strong_ordering compare_clauses(Clause a, Clause b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la <=> lb;
    a &= a - 1;
    b &= b - 1;
  }
  return (a != 0) <=> (b != 0);
}

inline bool clause_less(Clause a, Clause b) { return compare_clauses(a, b) < 0; }

// Keeps the subset-minimal clauses and sorts them canonically.
inline std::vector<Clause> minimize(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end(), [](Clause a, Clause b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  for (Clause c : clauses) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                      [c](Clause k) { return (k & c) == k; });
    if (!absorbed) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), clause_less);
  return kept;
}

inline Clause generator_mask(unsigned n) {
  return n >= 64 ? ~Clause{0} : (Clause{1} << n) - 1;
}

}  // namespace detail

/// A bounded distributive lattice whose carrier is `value_type`.
template <class A>
concept LatticeAlgebra = requires(const A& alg, const typename A::value_type& x) {
  typename A::value_type;
  { alg.bottom() } -> std::convertible_to<typename A::value_type>;
  { alg.top() } -> std::convertible_to<typename A::value_type>;
  { alg.meet(x, x) } -> std::convertible_to<typename A::value_type>;
  { alg.join(x, x) } -> std::convertible_to<typename A::value_type>;
};

/// A lattice algebra that also has an order-reversing involution.
template <class A>
concept DeMorganAlgebra = LatticeAlgebra<A> && requires(const A& alg, const typename A::value_type& x) {
  { alg.negate(x) } -> std::convertible_to<typename A::value_type>;
};

/// Element of the free bounded distributive lattice on `generators()` generators.
///
/// The element is the join of its clauses; each clause is the meet of the
/// generators in its bitmask. Clauses form an antichain under inclusion and
/// are kept in canonical order, so two elements are equal as lattice elements
/// exactly when their clause vectors are identical. The empty clause vector is
/// bottom and the single empty clause is top.
class LatticeElement {
 public:
  LatticeElement() = default;

  static LatticeElement bottom(unsigned n) { return LatticeElement(n, {}); }
  static LatticeElement top(unsigned n) { return LatticeElement(n, {Clause{0}}); }

  static LatticeElement generator(unsigned n, unsigned i) {
    if (i >= n) {
      throw InputError("generator x" + std::to_string(i) + " out of range for " +
                       std::to_string(n) + " generators");
    }
    return LatticeElement(n, {Clause{1} << i});
  }

  /// Builds the normal form of the join of `clauses`.
  static LatticeElement from_clauses(unsigned n, std::vector<Clause> clauses) {
    check_generator_count(n);
    const Clause allowed = detail::generator_mask(n);
    for (Clause c : clauses) {
      if ((c & ~allowed) != 0) {
        throw InputError("clause uses generator x" + std::to_string(std::countr_zero(c & ~allowed)) +
                         " but only " + std::to_string(n) + " generators exist");
      }
    }
    return LatticeElement(n, detail::minimize(std::move(clauses)));
  }

  unsigned generators() const { return n_; }
  std::span<const Clause> clauses() const { return clauses_; }
  bool is_bottom() const { return clauses_.empty(); }
  bool is_top() const { return clauses_.size() == 1 && clauses_.front() == 0; }

  /// Generators occurring in some clause.
  Clause support() const {
    Clause s = 0;
    for (Clause c : clauses_) s |= c;
    return s;
  }

  /// Same element viewed over a larger generator set.
  LatticeElement widen(unsigned n) const {
    if (n < n_ && (support() & ~detail::generator_mask(n)) != 0) {
      throw InputError("cannot narrow an element that uses dropped generators");
    }
    LatticeElement e = *this;
    e.n_ = n;
    return e;
  }

  friend LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
    check_same_arity(a, b);
    std::vector<Clause> cs(a.clauses_);
    cs.insert(cs.end(), b.clauses_.begin(), b.clauses_.end());
    return LatticeElement(a.n_, detail::minimize(std::move(cs)));
  }

  friend LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
    check_same_arity(a, b);
    std::vector<Clause> cs;
    cs.reserve(a.clauses_.size() * b.clauses_.size());
    for (Clause x : a.clauses_)
      for (Clause y : b.clauses_) cs.push_back(x | y);
    return LatticeElement(a.n_, detail::minimize(std::move(cs)));
  }

  /// a <= b iff every clause of a contains some clause of b.
  friend bool leq(const LatticeElement& a, const LatticeElement& b) {
    check_same_arity(a, b);
    return std::all_of(a.clauses_.begin(), a.clauses_.end(), [&](Clause x) {
      return std::any_of(b.clauses_.begin(), b.clauses_.end(),
                         [x](Clause y) { return (y & x) == y; });
    });
  }

  friend bool operator==(const LatticeElement&, const LatticeElement&) = default;

  /// Canonical total order: generator count, then clause lists lexicographically.
  friend std::strong_ordering operator<=>(const LatticeElement& a, const LatticeElement& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.clauses_.begin(), a.clauses_.end(),
                                                  b.clauses_.begin(), b.clauses_.end(),
                                                  detail::compare_clauses);
  }

  std::size_t hash() const {
    std::size_t h = std::hash<unsigned>{}(n_);
    for (Clause c : clauses_) h ^= std::hash<Clause>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  LatticeElement(unsigned n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {}

  static void check_generator_count(unsigned n) {
    if (n > max_generators) {
      throw CapacityError("at most " + std::to_string(max_generators) + " generators are supported");
    }
  }

  static void check_same_arity(const LatticeElement& a, const LatticeElement& b) {
    if (a.n_ != b.n_) {
      throw InputError("lattice elements over " + std::to_string(a.n_) + " and " +
                       std::to_string(b.n_) + " generators cannot be combined");
    }
  }

  unsigned n_ = 0;
  std::vector<Clause> clauses_;
};

LatticeElement join(const LatticeElement& a, const LatticeElement& b);
LatticeElement meet(const LatticeElement& a, const LatticeElement& b);
bool leq(const LatticeElement& a, const LatticeElement& b);

struct LatticeElementHash {
  std::size_t operator()(const LatticeElement& e) const { return e.hash(); }
};

/// Homomorphic evaluation: clauses become meets, the clause set a join.
template <LatticeAlgebra A>
typename A::value_type evaluate(const LatticeElement& e, const A& alg,
                                std::span<const typename A::value_type> assignment) {
  if (assignment.size() != e.generators()) {
    throw InputError("assignment has " + std::to_string(assignment.size()) + " values but the element has " +
                     std::to_string(e.generators()) + " generators");
  }
  typename A::value_type result = alg.bottom();
  for (Clause c : e.clauses()) {
    typename A::value_type term = alg.top();
    for (Clause rest = c; rest != 0; rest &= rest - 1) {
      term = alg.meet(term, assignment[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    result = alg.join(result, term);
  }
  return result;
}

template <LatticeAlgebra A>
typename A::value_type evaluate(const LatticeElement& e, const A& alg,
                                const std::vector<typename A::value_type>& assignment) {
  return evaluate(e, alg, std::span<const typename A::value_type>(assignment));
}

/// DL(n) itself as an algebra; evaluating into it is substitution.
struct FreeLattice {
  using value_type = LatticeElement;
  unsigned n = 0;

  LatticeElement bottom() const { return LatticeElement::bottom(n); }
  LatticeElement top() const { return LatticeElement::top(n); }
  LatticeElement meet(const LatticeElement& a, const LatticeElement& b) const { return cubical::meet(a, b); }
  LatticeElement join(const LatticeElement& a, const LatticeElement& b) const { return cubical::join(a, b); }
};

/// The unit interval over an ordered scalar type: meet = min, join = max.
template <class T>
struct UnitInterval {
  using value_type = T;

  T bottom() const { return T(0); }
  T top() const { return T(1); }
  T meet(const T& a, const T& b) const { return std::min(a, b); }
  T join(const T& a, const T& b) const { return std::max(a, b); }
  T negate(const T& a) const { return T(1) - a; }
};

/// The grid {0, 1/steps, ..., 1} stored by integer numerator; min/max stay exact.
struct GridInterval {
  using value_type = int;
  int steps = 1;

  int bottom() const { return 0; }
  int top() const { return steps; }
  int meet(int a, int b) const { return std::min(a, b); }
  int join(int a, int b) const { return std::max(a, b); }
  int negate(int a) const { return steps - a; }
};

/// The two-element lattice.
struct TwoElement {
  using value_type = bool;

  bool bottom() const { return false; }
  bool top() const { return true; }
  bool meet(bool a, bool b) const { return a && b; }
  bool join(bool a, bool b) const { return a || b; }
  bool negate(bool a) const { return !a; }
};

/// Kleisli extension: replaces generator i of `e` by `images[i]`.
inline LatticeElement substitute(const LatticeElement& e, std::span<const LatticeElement> images) {
  if (images.size() != e.generators()) {
    throw InputError("substitution supplies " + std::to_string(images.size()) + " images for " +
                     std::to_string(e.generators()) + " generators");
  }
  const unsigned m = images.empty() ? 0 : images.front().generators();
  for (const auto& img : images) {
    if (img.generators() != m) throw InputError("substitution images disagree on generator count");
  }
  return evaluate(e, FreeLattice{m}, images);
}

inline LatticeElement substitute(const LatticeElement& e, unsigned target_generators,
                                 std::span<const LatticeElement> images) {
  if (images.empty()) {
    if (e.generators() != 0) throw InputError("substitution supplies no images");
    return e.is_bottom() ? LatticeElement::bottom(target_generators) : LatticeElement::top(target_generators);
  }
  if (images.front().generators() != target_generators) {
    throw InputError("substitution images do not live over the requested generator count");
  }
  return substitute(e, images);
}

/// All elements of DL(n), in canonical order. Refuses n > 4.
inline std::vector<LatticeElement> enumerate_free(unsigned n) {
  if (n > max_enumerable_generators) {
    throw CapacityError("enumeration of DL(" + std::to_string(n) + ") refused: at most " +
                        std::to_string(max_enumerable_generators) + " generators");
  }
  const unsigned clause_count = 1u << n;
  std::vector<LatticeElement> out;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << clause_count); ++pick) {
    std::vector<Clause> cs;
    for (unsigned c = 0; c < clause_count; ++c)
      if ((pick >> c) & 1u) cs.push_back(c);
    bool antichain = true;
    for (std::size_t i = 0; i < cs.size() && antichain; ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (i != j && (cs[i] & cs[j]) == cs[i]) {
          antichain = false;
          break;
        }
    if (antichain) out.push_back(LatticeElement::from_clauses(n, std::move(cs)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |DL(n)| for n <= 4 (the Dedekind numbers 2, 3, 6, 20, 168).
inline std::uint64_t free_lattice_size(unsigned n) {
  static constexpr std::uint64_t sizes[] = {2, 3, 6, 20, 168};
  if (n > max_enumerable_generators) {
    throw CapacityError("|DL(" + std::to_string(n) + ")| is beyond the supported range");
  }
  return sizes[n];
}

}  // namespace cubical

template <>
struct std::hash<cubical::LatticeElement> {
  std::size_t operator()(const cubical::LatticeElement& e) const { return e.hash(); }
};
