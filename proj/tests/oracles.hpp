#pragma once

// Independent reference implementations used to check the library. They
// work on truth tables and brute force, never on normal forms.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "cubical/cubical.hpp"

namespace oracle {

/// Truth table over n <= 5 variables: bit a is the value at assignment a.
using Table = std::uint32_t;

inline Table all_ones(unsigned n) { return n == 5 ? ~Table{0} : (Table{1} << (1u << n)) - 1; }

inline bool is_monotone(Table f, unsigned n) {
  const unsigned points = 1u << n;
  for (unsigned a = 0; a < points; ++a)
    for (unsigned i = 0; i < n; ++i)
      if (!(a >> i & 1u) && (f >> a & 1u) && !(f >> (a | 1u << i) & 1u)) return false;
  return true;
}

/// Every monotone Boolean function of n variables, by scanning all 2^(2^n) tables.
inline std::vector<Table> monotone_functions(unsigned n) {
  std::vector<Table> out;
  const std::uint64_t total = std::uint64_t{1} << (1u << n);
  for (std::uint64_t f = 0; f < total; ++f)
    if (is_monotone(static_cast<Table>(f), n)) out.push_back(static_cast<Table>(f));
  return out;
}

/// Evaluates a term at every assignment of n variables (negation is Boolean complement).
inline Table truth_table(const cubical::Term& t, unsigned n) {
  using K = cubical::Term::Kind;
  switch (t.kind) {
    case K::zero: return 0;
    case K::one: return all_ones(n);
    case K::var: {
      Table f = 0;
      for (unsigned a = 0; a < (1u << n); ++a)
        if (a >> t.index & 1u) f |= Table{1} << a;
      return f;
    }
    case K::meet: return truth_table(t.args[0], n) & truth_table(t.args[1], n);
    case K::join: return truth_table(t.args[0], n) | truth_table(t.args[1], n);
    case K::negate: return ~truth_table(t.args[0], n) & all_ones(n);
  }
  return 0;
}

/// Truth table of a DL(n) element read directly from its clause list.
inline Table truth_table(const cubical::LatticeElement& e) {
  const unsigned n = e.generators();
  Table f = 0;
  for (unsigned a = 0; a < (1u << n); ++a)
    for (auto c : e.clauses())
      if ((c & a) == c) {
        f |= Table{1} << a;
        break;
      }
  return f;
}

/// The four-element De Morgan algebra 0 < n, b < 1 with ~n = n, ~b = b.
/// Free De Morgan algebras embed into its powers, so equality of term
/// functions over it decides equality in DM(n).
struct Diamond {
  // Pairs (t, f) in bits 0 and 1, ordered by t up and f down: 0 = (0,1), n = (0,0), b = (1,1), 1 = (1,0).
  using value_type = unsigned;
  static unsigned t(unsigned v) { return v & 1u; }
  static unsigned f(unsigned v) { return v >> 1 & 1u; }
  static unsigned make(unsigned tt, unsigned ff) { return tt | ff << 1; }
  unsigned bottom() const { return make(0, 1); }
  unsigned top() const { return make(1, 0); }
  unsigned meet(unsigned a, unsigned b) const { return make(t(a) & t(b), f(a) | f(b)); }
  unsigned join(unsigned a, unsigned b) const { return make(t(a) | t(b), f(a) & f(b)); }
  unsigned negate(unsigned a) const { return make(f(a), t(a)); }
};

inline unsigned eval_diamond(const cubical::Term& t, const std::vector<unsigned>& point) {
  using K = cubical::Term::Kind;
  const Diamond d;
  switch (t.kind) {
    case K::zero: return d.bottom();
    case K::one: return d.top();
    case K::var: return point.at(t.index);
    case K::meet: return d.meet(eval_diamond(t.args[0], point), eval_diamond(t.args[1], point));
    case K::join: return d.join(eval_diamond(t.args[0], point), eval_diamond(t.args[1], point));
    case K::negate: return d.negate(eval_diamond(t.args[0], point));
  }
  return 0;
}

/// The value table of a term over the diamond, at all 4^n points.
inline std::vector<unsigned> diamond_table(const cubical::Term& t, unsigned n) {
  std::vector<unsigned> out;
  std::vector<unsigned> point(n);
  for (unsigned code = 0; code < (1u << (2 * n)); ++code) {
    for (unsigned i = 0; i < n; ++i) point[i] = code >> (2 * i) & 3u;
    out.push_back(eval_diamond(t, point));
  }
  return out;
}

/// Reads a DM(n) element back as a term: underlying generator 2i is x_i, 2i+1 is ~x_i.
inline cubical::Term dm_term(const cubical::DeMorganElement& e) {
  using cubical::Term;
  Term out = Term::zero();
  for (auto c : e.underlying().clauses()) {
    Term conj = Term::one();
    for (unsigned g = 0; g < 64; ++g)
      if (c >> g & 1u) {
        Term lit = Term::var(g / 2);
        conj = Term::meet(conj, g % 2 ? Term::negate(lit) : lit);
      }
    out = Term::join(out, conj);
  }
  return out;
}

/// Fixed seed for every randomized test; override per test by mixing in a constant.
inline constexpr std::uint64_t seed = 0x5eedc0be;

inline cubical::CubeMorphism random_morphism(std::mt19937_64& rng, unsigned m, unsigned n,
                                             cubical::Theory t = cubical::Theory::dl) {
  std::vector<cubical::LatticeElement> comps;
  for (unsigned i = 0; i < n; ++i) {
    const auto term = cubical::random_term(rng, m, 3, t == cubical::Theory::dm);
    comps.push_back(t == cubical::Theory::dl ? cubical::normalize(term, m) : cubical::normalize_dm(term, m).underlying());
  }
  return cubical::CubeMorphism::from_components(m, std::move(comps), t);
}

}  // namespace oracle
