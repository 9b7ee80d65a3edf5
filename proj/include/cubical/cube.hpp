#pragma once

// The cube category: objects are dimensions, a morphism m -> n is an n-tuple
// of elements of DL(m) (the Kleisli category of the free distributive lattice
// monad). Semantically a morphism m -> n is the map I^m -> I^n obtained by
// evaluating each component; composition is substitution.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/demorgan.hpp"
#include "cubical/error.hpp"
#include "cubical/lattice.hpp"
#include "cubical/term.hpp"

namespace cubical {

/// Which algebraic theory the cube category is built from.
/// `dl`: distributive lattices (default). `dm`: De Morgan algebras, adding reversions.
enum class Theory { dl, dm };

inline std::string to_string(Theory t) { return t == Theory::dl ? "dl" : "dm"; }

inline Theory parse_theory(std::string_view s) {
  if (s == "dl") return Theory::dl;
  if (s == "dm") return Theory::dm;
  throw InputError("unknown theory '" + std::string(s) + "'");
}

/// Generators of the underlying free lattice for `dim` coordinates.
inline unsigned underlying_generators(unsigned dim, Theory t) { return t == Theory::dl ? dim : 2 * dim; }

inline constexpr std::uint64_t hom_cap = 5'000'000;

class CubeMorphism {
 public:
  CubeMorphism() = default;

  /// Components are elements over `underlying_generators(source, theory)` generators.
  static CubeMorphism from_components(unsigned source, std::vector<LatticeElement> components,
                                      Theory theory = Theory::dl) {
    const unsigned g = underlying_generators(source, theory);
    for (const auto& c : components) {
      if (c.generators() != g) {
        throw InputError("component over " + std::to_string(c.generators()) + " generators in a morphism from dimension " +
                         std::to_string(source));
      }
    }
    CubeMorphism f;
    f.src_ = source;
    f.dst_ = static_cast<unsigned>(components.size());
    f.theory_ = theory;
    f.components_ = std::move(components);
    return f;
  }

  static CubeMorphism identity(unsigned n, Theory t = Theory::dl) {
    std::vector<LatticeElement> cs;
    for (unsigned i = 0; i < n; ++i) cs.push_back(coordinate(n, i, t));
    return from_components(n, std::move(cs), t);
  }

  /// The coordinate function x_i on I^m.
  static LatticeElement coordinate(unsigned m, unsigned i, Theory t) {
    return LatticeElement::generator(underlying_generators(m, t), t == Theory::dl ? i : 2 * i);
  }

  static LatticeElement constant(unsigned m, bool value, Theory t) {
    const unsigned g = underlying_generators(m, t);
    return value ? LatticeElement::top(g) : LatticeElement::bottom(g);
  }

  unsigned source() const { return src_; }
  unsigned target() const { return dst_; }
  Theory theory() const { return theory_; }
  std::span<const LatticeElement> components() const { return components_; }
  const LatticeElement& component(std::size_t i) const { return components_.at(i); }

  bool is_identity() const { return *this == identity(src_, theory_) && src_ == dst_; }

  /// Kleisli composition: (g . f) first applies f, then g.
  friend CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f) {
    if (f.dst_ != g.src_) {
      throw InputError("cannot compose: inner morphism lands in dimension " + std::to_string(f.dst_) +
                       " but outer starts at " + std::to_string(g.src_));
    }
    if (f.theory_ != g.theory_) throw InputError("cannot compose morphisms of different theories");
    const unsigned target_gens = underlying_generators(f.src_, f.theory_);
    std::vector<LatticeElement> images;
    if (f.theory_ == Theory::dl) {
      images = f.components_;
    } else {
      for (const auto& c : f.components_) {
        images.push_back(c);
        images.push_back(negate(DeMorganElement::from_underlying(c)).underlying());
      }
    }
    std::vector<LatticeElement> out;
    out.reserve(g.components_.size());
    for (const auto& c : g.components_) out.push_back(substitute(c, target_gens, images));
    return from_components(f.src_, std::move(out), f.theory_);
  }

  /// Evaluates the morphism at a point of A^source.
  template <LatticeAlgebra A>
  std::vector<typename A::value_type> apply(const A& alg, const std::vector<typename A::value_type>& point) const {
    if (point.size() != src_) throw InputError("point dimension does not match morphism source");
    std::vector<typename A::value_type> out;
    out.reserve(dst_);
    if (theory_ == Theory::dl) {
      for (const auto& c : components_) out.push_back(evaluate(c, alg, point));
    } else {
      if constexpr (DeMorganAlgebra<A>) {
        for (const auto& c : components_) out.push_back(evaluate(DeMorganElement::from_underlying(c), alg, point));
      } else {
        throw UnsupportedTheoryError("De Morgan morphisms need an algebra with negation");
      }
    }
    return out;
  }

  friend bool operator==(const CubeMorphism&, const CubeMorphism&) = default;

  friend std::strong_ordering operator<=>(const CubeMorphism& a, const CubeMorphism& b) {
    if (auto c = a.theory_ <=> b.theory_; c != 0) return c;
    if (auto c = a.src_ <=> b.src_; c != 0) return c;
    if (auto c = a.dst_ <=> b.dst_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(),
                                                  b.components_.begin(), b.components_.end());
  }

  std::size_t hash() const {
    std::size_t h = (static_cast<std::size_t>(src_) << 8) ^ dst_ ^ (static_cast<std::size_t>(theory_) << 16);
    for (const auto& c : components_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  unsigned src_ = 0;
  unsigned dst_ = 0;
  Theory theory_ = Theory::dl;
  std::vector<LatticeElement> components_;
};

struct CubeMorphismHash {
  std::size_t operator()(const CubeMorphism& f) const { return f.hash(); }
};

/// Prints one component in the term grammar.
inline std::string format_component(const LatticeElement& c, Theory t) {
  return t == Theory::dl ? format(c) : format(DeMorganElement::from_underlying(c));
}

/// `[x0 v x1, 1]`
inline std::string format_components(const CubeMorphism& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.target(); ++i) {
    if (i > 0) s += ", ";
    s += format_component(f.component(i), f.theory());
  }
  return s + "]";
}

/// `cube 2 -> 1 : [x0 v x1]` (De Morgan morphisms use the prefix `dm`).
inline std::string to_string(const CubeMorphism& f) {
  return std::string(f.theory() == Theory::dl ? "cube " : "dm ") + std::to_string(f.source()) + " -> " +
         std::to_string(f.target()) + " : " + format_components(f);
}

/// Builds a morphism from component term strings over `source` coordinates.
inline CubeMorphism morphism_from_terms(unsigned source, const std::vector<std::string>& terms,
                                        Theory t = Theory::dl) {
  std::vector<LatticeElement> cs;
  for (const auto& s : terms) {
    cs.push_back(t == Theory::dl ? normalize(s, source) : normalize_dm(s, source).underlying());
  }
  return CubeMorphism::from_components(source, std::move(cs), t);
}

/// Splits the bracketed list `[t1, t2, ...]`.
inline std::vector<std::string> split_component_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InputError("expected a bracketed component list, got \"" + std::string(text) + "\"");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (piece.empty()) throw InputError("empty component in \"" + std::string(text) + "\"");
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Parses the textual morphism format `cube 2 -> 1 : [x0 v x1]`.
inline CubeMorphism parse_morphism(std::string_view text) {
  auto fail = [&](const std::string& what) -> CubeMorphism {
    throw InputError("morphism parse error: " + what + " in \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> unsigned {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 3) fail("expected a dimension");
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  skip();
  Theory t;
  if (text.substr(pos, 4) == "cube") {
    t = Theory::dl;
    pos += 4;
  } else if (text.substr(pos, 2) == "dm") {
    t = Theory::dm;
    pos += 2;
  } else {
    return fail("expected 'cube' or 'dm'");
  }
  const unsigned src = number();
  skip();
  if (text.substr(pos, 2) != "->") return fail("expected '->'");
  pos += 2;
  const unsigned dst = number();
  skip();
  if (pos >= text.size() || text[pos] != ':') return fail("expected ':'");
  ++pos;
  auto terms = split_component_list(text.substr(pos));
  if (terms.size() != dst) return fail("declared target " + std::to_string(dst) + " but " +
                                       std::to_string(terms.size()) + " components given");
  return morphism_from_terms(src, terms, t);
}

// Named generators. Dimensions refer to the semantic maps I^source -> I^target.

/// Face I^(n-1) -> I^n inserting the constant `endpoint` at coordinate i.
inline CubeMorphism face(unsigned n, unsigned i, bool endpoint, Theory t = Theory::dl) {
  if (i >= n) throw InputError("face index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  std::vector<LatticeElement> cs;
  for (unsigned j = 0; j < n; ++j) {
    if (j < i) cs.push_back(CubeMorphism::coordinate(n - 1, j, t));
    else if (j == i) cs.push_back(CubeMorphism::constant(n - 1, endpoint, t));
    else cs.push_back(CubeMorphism::coordinate(n - 1, j - 1, t));
  }
  return CubeMorphism::from_components(n - 1, std::move(cs), t);
}

/// Degeneracy I^n -> I^(n-1) forgetting coordinate i.
inline CubeMorphism degeneracy(unsigned n, unsigned i, Theory t = Theory::dl) {
  if (i >= n) throw InputError("degeneracy index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  std::vector<LatticeElement> cs;
  for (unsigned j = 0; j < n; ++j)
    if (j != i) cs.push_back(CubeMorphism::coordinate(n, j, t));
  return CubeMorphism::from_components(n, std::move(cs), t);
}

enum class ConnectionKind { meet, join };

/// Connection I^n -> I^(n-1): coordinate i becomes x_i ^ x_j (or v), coordinate j is dropped.
inline CubeMorphism connection(unsigned n, unsigned i, unsigned j, ConnectionKind kind, Theory t = Theory::dl) {
  if (!(i < j && j < n)) {
    throw InputError("connection needs i < j < n, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
                     " n=" + std::to_string(n));
  }
  std::vector<LatticeElement> cs;
  for (unsigned l = 0; l < n; ++l) {
    if (l == j) continue;
    if (l == i) {
      const auto a = CubeMorphism::coordinate(n, i, t);
      const auto b = CubeMorphism::coordinate(n, j, t);
      cs.push_back(kind == ConnectionKind::meet ? meet(a, b) : join(a, b));
    } else {
      cs.push_back(CubeMorphism::coordinate(n, l, t));
    }
  }
  return CubeMorphism::from_components(n, std::move(cs), t);
}

/// Diagonal I^n -> I^(n+1): a copy of coordinate i is inserted at position j.
inline CubeMorphism diagonal(unsigned n, unsigned i, unsigned j, Theory t = Theory::dl) {
  if (i >= n || j > n) throw InputError("diagonal indices out of range");
  std::vector<LatticeElement> cs;
  for (unsigned l = 0; l < n; ++l) cs.push_back(CubeMorphism::coordinate(n, l, t));
  cs.insert(cs.begin() + j, CubeMorphism::coordinate(n, i, t));
  return CubeMorphism::from_components(n, std::move(cs), t);
}

/// Symmetry I^n -> I^n with output coordinate k equal to x_perm[k].
inline CubeMorphism symmetry(std::span<const unsigned> perm, Theory t = Theory::dl) {
  const unsigned n = static_cast<unsigned>(perm.size());
  std::vector<char> seen(n, 0);
  for (unsigned p : perm) {
    if (p >= n || seen[p]) throw InputError("symmetry needs a permutation");
    seen[p] = 1;
  }
  std::vector<LatticeElement> cs;
  for (unsigned p : perm) cs.push_back(CubeMorphism::coordinate(n, p, t));
  return CubeMorphism::from_components(n, std::move(cs), t);
}

inline CubeMorphism symmetry(std::initializer_list<unsigned> perm, Theory t = Theory::dl) {
  return symmetry(std::span<const unsigned>(perm.begin(), perm.size()), t);
}

/// Reversion I^n -> I^n flipping coordinate i; De Morgan theory only.
inline CubeMorphism reversal(unsigned n, unsigned i, Theory t = Theory::dm) {
  if (t != Theory::dm) throw UnsupportedTheoryError("reversions exist only in the De Morgan cube category");
  if (i >= n) throw InputError("reversal index out of range");
  auto f = CubeMorphism::identity(n, t);
  std::vector<LatticeElement> cs(f.components().begin(), f.components().end());
  cs[i] = LatticeElement::generator(2 * n, 2 * i + 1);
  return CubeMorphism::from_components(n, std::move(cs), t);
}

/// Concatenates coordinates: f x g : I^(a+c) -> I^(b+d).
inline CubeMorphism product(const CubeMorphism& f, const CubeMorphism& g) {
  if (f.theory() != g.theory()) throw InputError("product of morphisms of different theories");
  const Theory t = f.theory();
  const unsigned src = f.source() + g.source();
  const unsigned gens = underlying_generators(src, t);
  const unsigned shift = underlying_generators(f.source(), t);
  std::vector<LatticeElement> cs;
  for (const auto& c : f.components()) cs.push_back(c.widen(gens));
  for (const auto& c : g.components()) {
    std::vector<Clause> shifted;
    for (Clause cl : c.clauses()) shifted.push_back(cl << shift);
    cs.push_back(LatticeElement::from_clauses(gens, std::move(shifted)));
  }
  return CubeMorphism::from_components(src, std::move(cs), t);
}

/// The number of morphisms m -> n: |DL(m)|^n, or |DM(m)|^n for De Morgan.
inline std::uint64_t hom_count(unsigned m, unsigned n, Theory t = Theory::dl) {
  const std::uint64_t base = free_lattice_size(underlying_generators(m, t));
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw CapacityError("hom(" + std::to_string(m) + ", " + std::to_string(n) + ") overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

/// All morphisms m -> n in lexicographic order of their component lists.
inline std::vector<CubeMorphism> enumerate_hom(unsigned m, unsigned n, Theory t = Theory::dl) {
  const std::uint64_t count = hom_count(m, n, t);
  if (count > hom_cap) {
    throw CapacityError("hom(" + std::to_string(m) + ", " + std::to_string(n) + ") has " + std::to_string(count) +
                        " elements, above the cap of " + std::to_string(hom_cap));
  }
  const auto elems = enumerate_free(underlying_generators(m, t));
  std::vector<CubeMorphism> out;
  out.reserve(count);
  std::vector<std::size_t> digits(n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<LatticeElement> cs;
    cs.reserve(n);
    for (unsigned i = 0; i < n; ++i) cs.push_back(elems[digits[i]]);
    out.push_back(CubeMorphism::from_components(m, std::move(cs), t));
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      if (++digits[i] < elems.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

/// Morphism of the bipointed cube category: each component is a coordinate or an endpoint.
class BipointedMorphism {
 public:
  struct Coordinate {
    enum class Kind { bottom, top, var };
    Kind kind = Kind::bottom;
    unsigned index = 0;

    static Coordinate bottom() { return {Kind::bottom, 0}; }
    static Coordinate top() { return {Kind::top, 0}; }
    static Coordinate var(unsigned i) { return {Kind::var, i}; }
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
    friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
  };

  static BipointedMorphism make(unsigned source, std::vector<Coordinate> components) {
    for (const auto& c : components)
      if (c.kind == Coordinate::Kind::var && c.index >= source) throw InputError("bipointed coordinate out of range");
    BipointedMorphism f;
    f.src_ = source;
    f.components_ = std::move(components);
    return f;
  }

  static BipointedMorphism identity(unsigned n) {
    std::vector<Coordinate> cs;
    for (unsigned i = 0; i < n; ++i) cs.push_back(Coordinate::var(i));
    return make(n, std::move(cs));
  }

  unsigned source() const { return src_; }
  unsigned target() const { return static_cast<unsigned>(components_.size()); }
  std::span<const Coordinate> components() const { return components_; }

  friend BipointedMorphism compose(const BipointedMorphism& g, const BipointedMorphism& f) {
    if (f.target() != g.source()) throw InputError("cannot compose bipointed morphisms: dimension mismatch");
    std::vector<Coordinate> cs;
    for (const auto& c : g.components_) cs.push_back(c.kind == Coordinate::Kind::var ? f.components_[c.index] : c);
    return make(f.src_, std::move(cs));
  }

  friend bool operator==(const BipointedMorphism&, const BipointedMorphism&) = default;
  friend auto operator<=>(const BipointedMorphism&, const BipointedMorphism&) = default;

 private:
  unsigned src_ = 0;
  std::vector<Coordinate> components_;
};

/// All (m+2)^n bipointed morphisms m -> n.
inline std::vector<BipointedMorphism> enumerate_bipointed(unsigned m, unsigned n) {
  using C = BipointedMorphism::Coordinate;
  std::vector<C> choices{C::bottom(), C::top()};
  for (unsigned i = 0; i < m; ++i) choices.push_back(C::var(i));
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    count *= choices.size();
    if (count > hom_cap) throw CapacityError("bipointed hom-set too large");
  }
  std::vector<BipointedMorphism> out;
  std::vector<std::size_t> digits(n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<C> cs;
    for (unsigned i = 0; i < n; ++i) cs.push_back(choices[digits[i]]);
    out.push_back(BipointedMorphism::make(m, std::move(cs)));
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
      if (++digits[i] < choices.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

/// Interprets coordinates as generators and the two points as bottom and top.
inline CubeMorphism from_bipointed(const BipointedMorphism& f) {
  using K = BipointedMorphism::Coordinate::Kind;
  std::vector<LatticeElement> cs;
  for (const auto& c : f.components()) {
    switch (c.kind) {
      case K::bottom: cs.push_back(LatticeElement::bottom(f.source())); break;
      case K::top: cs.push_back(LatticeElement::top(f.source())); break;
      case K::var: cs.push_back(LatticeElement::generator(f.source(), c.index)); break;
    }
  }
  return CubeMorphism::from_components(f.source(), std::move(cs));
}

inline std::string to_string(const BipointedMorphism& f) {
  using K = BipointedMorphism::Coordinate::Kind;
  std::string out = "bipointed " + std::to_string(f.source()) + " -> " + std::to_string(f.target()) + " : [";
  bool first = true;
  for (const auto& c : f.components()) {
    if (!first) out += ", ";
    out += c.kind == K::bottom ? "0" : c.kind == K::top ? "1" : "x" + std::to_string(c.index);
    first = false;
  }
  return out + "]";
}

struct BipointedHomComparison {
  unsigned m = 0;
  unsigned n = 0;
  std::size_t bipointed = 0;  // |H(m, n)|
  std::size_t image = 0;      // distinct images in the cube category
  std::size_t cube = 0;       // |hom(m, n)|
  bool injective() const { return image == bipointed; }
  bool surjective() const { return image == cube; }
};

/// Compares H(m, n) with hom(m, n) for all m, n <= max_dim.
inline std::vector<BipointedHomComparison> compare_bipointed(unsigned max_dim) {
  std::vector<BipointedHomComparison> out;
  for (unsigned m = 0; m <= max_dim; ++m)
    for (unsigned n = 0; n <= max_dim; ++n) {
      BipointedHomComparison c{m, n};
      std::vector<CubeMorphism> images;
      for (const auto& f : enumerate_bipointed(m, n)) {
        images.push_back(from_bipointed(f));
        ++c.bipointed;
      }
      std::sort(images.begin(), images.end());
      c.image = static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
      c.cube = static_cast<std::size_t>(hom_count(m, n));
      out.push_back(c);
    }
  return out;
}

}  // namespace cubical

template <>
struct std::hash<cubical::CubeMorphism> {
  std::size_t operator()(const cubical::CubeMorphism& f) const { return f.hash(); }
};
