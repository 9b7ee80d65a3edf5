#pragma once

// Lattice term syntax: parsing, printing and normalization.
//
// Grammar (whitespace insignificant):
//   join  := meet ('v' meet)*
//   meet  := unary ('^' unary)*
//   unary := '~' unary | atom
//   atom  := '0' | '1' | 'x' digits | '(' join ')'

#include <bit>
#include <cctype>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/error.hpp"
#include "cubical/lattice.hpp"

namespace cubical {

struct Term {
  enum class Kind { zero, one, var, meet, join, negate };

  Kind kind = Kind::zero;
  unsigned index = 0;
  std::vector<Term> args;

  static Term zero() { return {Kind::zero, 0, {}}; }
  static Term one() { return {Kind::one, 0, {}}; }
  static Term var(unsigned i) { return {Kind::var, i, {}}; }
  static Term meet(Term a, Term b) { return {Kind::meet, 0, {std::move(a), std::move(b)}}; }
  static Term join(Term a, Term b) { return {Kind::join, 0, {std::move(a), std::move(b)}}; }
  static Term negate(Term a) { return {Kind::negate, 0, {std::move(a)}}; }

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parse_join();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  Term parse_join() {
    Term t = parse_meet();
    while (accept('v')) t = Term::join(std::move(t), parse_meet());
    return t;
  }

  Term parse_meet() {
    Term t = parse_unary();
    while (accept('^')) t = Term::meet(std::move(t), parse_unary());
    return t;
  }

  Term parse_unary() {
    if (accept('~')) return Term::negate(parse_unary());
    return parse_atom();
  }

  Term parse_atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of term");
    const char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == '(') {
      ++pos_;
      Term t = parse_join();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected generator index after 'x'");
      if (pos_ - start > 4) fail("generator index too large");
      return Term::var(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("term parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

/// Prints a term with full parenthesization of compound subterms.
inline std::string to_string(const Term& t) {
  auto wrap = [](const Term& s) {
    const bool compound = s.kind == Term::Kind::meet || s.kind == Term::Kind::join;
    return compound ? "(" + to_string(s) + ")" : to_string(s);
  };
  switch (t.kind) {
    case Term::Kind::zero: return "0";
    case Term::Kind::one: return "1";
    case Term::Kind::var: return "x" + std::to_string(t.index);
    case Term::Kind::meet: return wrap(t.args[0]) + " ^ " + wrap(t.args[1]);
    case Term::Kind::join: return wrap(t.args[0]) + " v " + wrap(t.args[1]);
    case Term::Kind::negate: return "~" + wrap(t.args[0]);
  }
  return {};
}

/// A random term of at most the given depth over n variables; `negation`
/// allows '~'. Deterministic for a given engine state.
template <class Rng>
Term random_term(Rng& rng, unsigned n, unsigned depth, bool negation = false) {
  std::uniform_int_distribution<unsigned> pick(0, 9);
  const unsigned r = pick(rng);
  if (depth == 0 || r < 3) {
    if (n == 0 || r == 0) return std::uniform_int_distribution<unsigned>(0, 1)(rng) ? Term::one() : Term::zero();
    return Term::var(std::uniform_int_distribution<unsigned>(0, n - 1)(rng));
  }
  if (negation && r == 9) return Term::negate(random_term(rng, n, depth - 1, negation));
  Term a = random_term(rng, n, depth - 1, negation);
  Term b = random_term(rng, n, depth - 1, negation);
  return r % 2 ? Term::meet(std::move(a), std::move(b)) : Term::join(std::move(a), std::move(b));
}

/// Normal form of a negation-free term over n generators.
inline LatticeElement normalize(const Term& t, unsigned n) {
  switch (t.kind) {
    case Term::Kind::zero: return LatticeElement::bottom(n);
    case Term::Kind::one: return LatticeElement::top(n);
    case Term::Kind::var: return LatticeElement::generator(n, t.index);
    case Term::Kind::meet: return meet(normalize(t.args[0], n), normalize(t.args[1], n));
    case Term::Kind::join: return join(normalize(t.args[0], n), normalize(t.args[1], n));
    case Term::Kind::negate:
      throw UnsupportedTheoryError("negation '~' needs the De Morgan theory");
  }
  throw InputError("malformed term");
}

inline LatticeElement normalize(std::string_view text, unsigned n) { return normalize(parse_term(text), n); }

/// Canonical printed form, e.g. `x0 v (x1 ^ x2)`. `name` renders generator i.
inline std::string format(const LatticeElement& e, const std::function<std::string(unsigned)>& name) {
  if (e.is_bottom()) return "0";
  if (e.is_top()) return "1";
  const auto clauses = e.clauses();
  std::string out;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    if (k > 0) out += " v ";
    const bool paren = clauses.size() > 1 && std::popcount(clauses[k]) > 1;
    if (paren) out += '(';
    bool first = true;
    for (Clause rest = clauses[k]; rest != 0; rest &= rest - 1) {
      if (!first) out += " ^ ";
      out += name(static_cast<unsigned>(std::countr_zero(rest)));
      first = false;
    }
    if (paren) out += ')';
  }
  return out;
}

inline std::string format(const LatticeElement& e) {
  return format(e, [](unsigned i) { return "x" + std::to_string(i); });
}

/// Turns a normal form back into a term (join of meets).
inline Term to_term(const LatticeElement& e) {
  if (e.is_bottom()) return Term::zero();
  Term out;
  bool have = false;
  for (Clause c : e.clauses()) {
    Term clause = Term::one();
    bool first = true;
    for (Clause rest = c; rest != 0; rest &= rest - 1) {
      Term v = Term::var(static_cast<unsigned>(std::countr_zero(rest)));
      clause = first ? std::move(v) : Term::meet(std::move(clause), std::move(v));
      first = false;
    }
    out = have ? Term::join(std::move(out), std::move(clause)) : std::move(clause);
    have = true;
  }
  return out;
}

}  // namespace cubical
