#pragma once

// Free De Morgan algebras DM(n), realized as DL(2n): generator 2i is x_i and
// generator 2i+1 is its conjugate x_i*.

#include <compare>
#include <string>
#include <vector>

#include "cubical/lattice.hpp"
#include "cubical/term.hpp"

namespace cubical {

/// Largest n for which DM(n) = DL(2n) may be enumerated.
inline constexpr unsigned max_enumerable_dm_generators = max_enumerable_generators / 2;

namespace detail {

inline Clause swap_conjugates(Clause c) {
  constexpr Clause even = 0x5555555555555555ULL;
  return ((c & even) << 1) | ((c >> 1) & even);
}

}  // namespace detail

class DeMorganElement {
 public:
  DeMorganElement() = default;

  /// Wraps an element of DL(2n).
  static DeMorganElement from_underlying(LatticeElement e) {
    if (e.generators() % 2 != 0) {
      throw InputError("a De Morgan element needs an even number of underlying generators");
    }
    return DeMorganElement(std::move(e));
  }

  static DeMorganElement bottom(unsigned n) { return DeMorganElement(LatticeElement::bottom(2 * n)); }
  static DeMorganElement top(unsigned n) { return DeMorganElement(LatticeElement::top(2 * n)); }

  static DeMorganElement generator(unsigned n, unsigned i) {
    if (i >= n) throw InputError("generator x" + std::to_string(i) + " out of range");
    return DeMorganElement(LatticeElement::generator(2 * n, 2 * i));
  }

  /// The conjugate generator x_i*.
  static DeMorganElement conjugate(unsigned n, unsigned i) {
    if (i >= n) throw InputError("generator x" + std::to_string(i) + " out of range");
    return DeMorganElement(LatticeElement::generator(2 * n, 2 * i + 1));
  }

  unsigned generators() const { return underlying_.generators() / 2; }
  const LatticeElement& underlying() const { return underlying_; }

  friend DeMorganElement join(const DeMorganElement& a, const DeMorganElement& b) {
    return DeMorganElement(join(a.underlying_, b.underlying_));
  }
  friend DeMorganElement meet(const DeMorganElement& a, const DeMorganElement& b) {
    return DeMorganElement(meet(a.underlying_, b.underlying_));
  }

  /// Swaps x_i and x_i*, exchanges meet with join and 0 with 1.
  friend DeMorganElement negate(const DeMorganElement& a) {
    const unsigned n2 = a.underlying_.generators();
    LatticeElement result = LatticeElement::top(n2);
    for (Clause c : a.underlying_.clauses()) {
      std::vector<Clause> literals;
      for (Clause rest = detail::swap_conjugates(c); rest != 0; rest &= rest - 1) {
        literals.push_back(rest & (~rest + 1));
      }
      result = meet(result, LatticeElement::from_clauses(n2, std::move(literals)));
    }
    return DeMorganElement(std::move(result));
  }

  friend bool leq(const DeMorganElement& a, const DeMorganElement& b) { return leq(a.underlying_, b.underlying_); }
  friend bool operator==(const DeMorganElement&, const DeMorganElement&) = default;
  friend std::strong_ordering operator<=>(const DeMorganElement& a, const DeMorganElement& b) {
    return a.underlying_ <=> b.underlying_;
  }

 private:
  explicit DeMorganElement(LatticeElement e) : underlying_(std::move(e)) {}

  LatticeElement underlying_;
};

DeMorganElement join(const DeMorganElement& a, const DeMorganElement& b);
DeMorganElement meet(const DeMorganElement& a, const DeMorganElement& b);
DeMorganElement negate(const DeMorganElement& a);
bool leq(const DeMorganElement& a, const DeMorganElement& b);

/// Normal form of a term that may use '~', over n De Morgan generators.
inline DeMorganElement normalize_dm(const Term& t, unsigned n) {
  switch (t.kind) {
    case Term::Kind::zero: return DeMorganElement::bottom(n);
    case Term::Kind::one: return DeMorganElement::top(n);
    case Term::Kind::var: return DeMorganElement::generator(n, t.index);
    case Term::Kind::meet: return meet(normalize_dm(t.args[0], n), normalize_dm(t.args[1], n));
    case Term::Kind::join: return join(normalize_dm(t.args[0], n), normalize_dm(t.args[1], n));
    case Term::Kind::negate: return negate(normalize_dm(t.args[0], n));
  }
  throw InputError("malformed term");
}

inline DeMorganElement normalize_dm(std::string_view text, unsigned n) { return normalize_dm(parse_term(text), n); }

inline std::string dm_generator_name(unsigned underlying_index) {
  return (underlying_index % 2 ? "~x" : "x") + std::to_string(underlying_index / 2);
}

inline std::string format(const DeMorganElement& e) { return format(e.underlying(), dm_generator_name); }

/// Evaluates in a De Morgan algebra; `assignment` has one value per x_i.
template <DeMorganAlgebra A>
typename A::value_type evaluate(const DeMorganElement& e, const A& alg,
                                const std::vector<typename A::value_type>& assignment) {
  if (assignment.size() != e.generators()) {
    throw InputError("assignment length does not match the De Morgan generator count");
  }
  std::vector<typename A::value_type> doubled;
  doubled.reserve(2 * assignment.size());
  for (const auto& v : assignment) {
    doubled.push_back(v);
    doubled.push_back(alg.negate(v));
  }
  return evaluate(e.underlying(), alg, doubled);
}

/// All elements of DM(n), n <= 2.
inline std::vector<DeMorganElement> enumerate_free_dm(unsigned n) {
  if (n > max_enumerable_dm_generators) {
    throw CapacityError("enumeration of DM(" + std::to_string(n) + ") refused: at most " +
                        std::to_string(max_enumerable_dm_generators) + " generators");
  }
  std::vector<DeMorganElement> out;
  for (auto& e : enumerate_free(2 * n)) out.push_back(DeMorganElement::from_underlying(std::move(e)));
  return out;
}

}  // namespace cubical
