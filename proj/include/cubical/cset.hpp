#pragma once

// Dimension-truncated cubical sets (presheaves on the cube category).
//
// Every cubical set built from a presentation is stored as its free closure:
// a cell at level m is an equivalence class of pairs (g, h) with g a
// generating cell and h : m -> dim(g) a cube morphism, the pair standing for
// g acted on by h. The action of f : m' -> m sends [(g, h)] to [(g, h . f)].
// Products are kept levelwise as pairs of cells with the diagonal action.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "cubical/cube.hpp"
#include "cubical/error.hpp"
#include "cubical/finite_lattice.hpp"

namespace cubical {

inline constexpr unsigned default_max_dim = 3;
inline constexpr std::size_t default_cell_budget = 2'000'000;

/// The generating cell `generator` acted on by `map` (map : k -> dim(generator)).
struct CellRef {
  std::size_t generator = 0;
  CubeMorphism map;
};

/// Identifies lhs with rhs; both maps share the same source dimension.
struct Relation {
  CellRef lhs;
  CellRef rhs;
  std::string label;
};

struct GeneratingCell {
  std::string name;
  unsigned dim = 0;
};

/// Generating cells with face identifications.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Theory theory, unsigned max_dim) : theory_(theory), max_dim_(max_dim) {}

  Theory theory() const { return theory_; }
  unsigned max_dim() const { return max_dim_; }
  const std::vector<GeneratingCell>& cells() const { return cells_; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::size_t add_cell(std::string name, unsigned dim) {
    if (name.empty()) throw InputError("cell names must be non-empty");
    if (find(name)) throw InputError("duplicate cell '" + name + "'");
    cells_.push_back({std::move(name), dim});
    return cells_.size() - 1;
  }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].name == name) return i;
    return std::nullopt;
  }

  std::size_t index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw InputError("undeclared cell '" + name + "'");
  }

  void add_relation(CellRef lhs, CellRef rhs, std::string label) {
    check_ref(lhs);
    check_ref(rhs);
    if (lhs.map.source() != rhs.map.source()) {
      throw InputError("relation '" + label + "' compares cells of different dimensions (" +
                       std::to_string(lhs.map.source()) + " vs " + std::to_string(rhs.map.source()) + ")");
    }
    relations_.push_back({std::move(lhs), std::move(rhs), std::move(label)});
  }

  /// Declares face (i, endpoint) of `cell` to be `target` acted on by `via`
  /// (via : dim(cell)-1 -> dim(target); identity when omitted).
  void set_face(const std::string& cell, unsigned i, bool endpoint, const std::string& target,
                std::optional<CubeMorphism> via = std::nullopt) {
    const std::size_t g = index_of(cell);
    const unsigned n = cells_[g].dim;
    if (n == 0) throw InputError("cell '" + cell + "' has dimension 0 and no faces");
    if (i >= n) throw InputError("face index " + std::to_string(i) + " out of range for cell '" + cell + "'");
    const std::size_t h = index_of(target);
    CubeMorphism map = via ? *via : CubeMorphism::identity(cells_[h].dim, theory_);
    if (map.source() != n - 1 || map.target() != cells_[h].dim) {
      throw InputError("face d" + std::to_string(i) + std::to_string(endpoint) + " of '" + cell + "' must be a " +
                       std::to_string(n - 1) + "-cell, but '" + target + "' gives dimension " +
                       std::to_string(map.target()) + " acted on from " + std::to_string(map.source()));
    }
    add_relation({g, face(n, i, endpoint, theory_)}, {h, std::move(map)},
                 cell + ".d" + std::to_string(i) + std::to_string(endpoint));
  }

  /// Declares `cell` equal to `target` acted on by `via` (an explicitly named, possibly degenerate cell).
  void set_alias(const std::string& cell, const std::string& target, CubeMorphism via) {
    const std::size_t g = index_of(cell);
    const std::size_t h = index_of(target);
    if (via.source() != cells_[g].dim || via.target() != cells_[h].dim) {
      throw InputError("alias of '" + cell + "' has the wrong dimensions");
    }
    add_relation({g, CubeMorphism::identity(cells_[g].dim, theory_)}, {h, std::move(via)}, cell + ".id");
  }

  bool is_alias(std::size_t g) const {
    return std::any_of(relations_.begin(), relations_.end(), [&](const Relation& r) {
      return r.lhs.generator == g && r.lhs.map.source() == cells_[g].dim;
    });
  }

 private:
  void check_ref(const CellRef& r) const {
    if (r.generator >= cells_.size()) throw InputError("relation refers to an undeclared cell");
    if (r.map.theory() != theory_) throw InputError("relation morphism uses the wrong theory");
    if (r.map.target() != cells_[r.generator].dim) {
      throw InputError("relation morphism does not land in the dimension of '" + cells_[r.generator].name + "'");
    }
  }

  Theory theory_ = Theory::dl;
  unsigned max_dim_ = default_max_dim;
  std::vector<GeneratingCell> cells_;
  std::vector<Relation> relations_;
};

namespace detail {

class CubicalSetImpl {
 public:
  CubicalSetImpl(Theory t, unsigned max_dim) : theory(t), max_dim(max_dim) {}
  virtual ~CubicalSetImpl() = default;

  virtual std::size_t size(unsigned level) const = 0;
  virtual std::string name(unsigned level, std::size_t cell) const = 0;
  virtual std::size_t act(const CubeMorphism& f, std::size_t cell) const = 0;

  Theory theory;
  unsigned max_dim;
  std::optional<Presentation> presentation;
};

// All morphisms m -> d with an index for lookup.
struct HomTable {
  std::vector<CubeMorphism> list;
  std::unordered_map<CubeMorphism, std::size_t, CubeMorphismHash> index;
};

class HomCache {
 public:
  explicit HomCache(Theory t) : theory_(t) {}

  const HomTable& get(unsigned m, unsigned d) {
    auto [it, fresh] = tables_.try_emplace({m, d});
    if (fresh) {
      it->second.list = enumerate_hom(m, d, theory_);
      for (std::size_t i = 0; i < it->second.list.size(); ++i) it->second.index.emplace(it->second.list[i], i);
    }
    return it->second;
  }

 private:
  Theory theory_;
  std::map<std::pair<unsigned, unsigned>, HomTable> tables_;
};

class GeneratedImpl final : public CubicalSetImpl {
 public:
  GeneratedImpl(const Presentation& p, std::size_t cell_budget)
      : CubicalSetImpl(p.theory(), p.max_dim()), homs_(p.theory()) {
    presentation = p;
    const auto& cells = p.cells();
    for (const auto& c : cells) {
      if (c.dim > max_dim) {
        throw InputError("cell '" + c.name + "' has dimension " + std::to_string(c.dim) + " above the truncation " +
                         std::to_string(max_dim));
      }
    }
    levels_.resize(max_dim + 1);
    std::size_t total = 0;
    for (unsigned m = 0; m <= max_dim; ++m) {
      auto& lv = levels_[m];
      lv.offset.resize(cells.size());
      for (std::size_t g = 0; g < cells.size(); ++g) {
        const std::uint64_t count = hom_count(m, cells[g].dim, theory);
        total += count;
        if (total > cell_budget) {
          throw CapacityError("cubical set closure needs more than " + std::to_string(cell_budget) + " cell slots");
        }
        lv.offset[g] = lv.pair_count;
        lv.pair_count += count;
      }
      lv.parent.resize(lv.pair_count);
      lv.rank.resize(lv.pair_count, 0);
      for (std::size_t i = 0; i < lv.pair_count; ++i) lv.parent[i] = i;
    }

    // Relations are applied in order of the dimension of their left-hand
    // cell; before a cell's relations are merged, every corner identity
    // between them is checked against the closure built so far.
    std::vector<std::size_t> order(p.relations().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cells[p.relations()[a].lhs.generator].dim < cells[p.relations()[b].lhs.generator].dim;
    });
    std::size_t k = 0;
    while (k < order.size()) {
      const std::size_t g = p.relations()[order[k]].lhs.generator;
      std::size_t end = k;
      std::vector<const Relation*> group;
      while (end < order.size() && p.relations()[order[end]].lhs.generator == g) {
        group.push_back(&p.relations()[order[end]]);
        ++end;
      }
      check_identities(p, group);
      for (const Relation* r : group) merge(*r);
      k = end;
    }

    for (unsigned m = 0; m <= max_dim; ++m) finalize_level(m);
  }

  std::size_t size(unsigned level) const override { return levels_.at(level).rep.size(); }

  std::string name(unsigned level, std::size_t cell) const override {
    const auto& ref = representative(level, cell);
    const auto& gen = presentation->cells()[ref.generator];
    if (ref.map.is_identity()) return gen.name;
    return gen.name + format_components(ref.map);
  }

  std::size_t act(const CubeMorphism& f, std::size_t cell) const override {
    if (f.theory() != theory) throw InputError("morphism theory does not match the cubical set");
    if (f.source() > max_dim || f.target() > max_dim) {
      throw InputError("morphism " + to_string(f) + " leaves the truncation at dimension " + std::to_string(max_dim));
    }
    const auto& ref = representative(f.target(), cell);
    return class_of(f.source(), ref.generator, compose(ref.map, f));
  }

  const CellRef& representative(unsigned level, std::size_t cell) const { return levels_.at(level).rep.at(cell); }

  std::size_t class_of(unsigned m, std::size_t g, const CubeMorphism& h) const {
    const auto& lv = levels_.at(m);
    const auto& table = homs_.get(m, presentation->cells()[g].dim);
    return lv.class_id[lv.offset[g] + table.index.at(h)];
  }

 private:
  struct Level {
    std::size_t pair_count = 0;
    std::vector<std::size_t> offset;
    std::vector<std::size_t> parent, rank;
    std::vector<std::size_t> class_id;
    std::vector<CellRef> rep;
  };

  std::size_t pair_index(unsigned m, std::size_t g, const CubeMorphism& h) const {
    const auto& table = homs_.get(m, presentation->cells()[g].dim);
    return levels_[m].offset[g] + table.index.at(h);
  }

  std::size_t find_root(unsigned m, std::size_t i) const {
    auto& lv = levels_[m];
    boost::disjoint_sets<std::size_t*, std::size_t*> ds(lv.rank.data(), lv.parent.data());
    return ds.find_set(i);
  }

  void unite(unsigned m, std::size_t a, std::size_t b) {
    auto& lv = levels_[m];
    boost::disjoint_sets<std::size_t*, std::size_t*> ds(lv.rank.data(), lv.parent.data());
    ds.union_set(a, b);
  }

  void merge(const Relation& r) {
    const unsigned k = r.lhs.map.source();
    for (unsigned m = 0; m <= max_dim; ++m) {
      for (const auto& f : homs_.get(m, k).list) {
        unite(m, pair_index(m, r.lhs.generator, compose(r.lhs.map, f)),
              pair_index(m, r.rhs.generator, compose(r.rhs.map, f)));
      }
    }
  }

  // For relations g.u1 = h1.v1 and g.u2 = h2.v2, whenever u1.p = u2.q for
  // faces or identities p, q, the closure must already have h1.(v1.p) = h2.(v2.q).
  void check_identities(const Presentation& p, const std::vector<const Relation*>& group) {
    auto probes = [&](unsigned k) {
      std::vector<std::pair<std::string, CubeMorphism>> out;
      out.emplace_back("id", CubeMorphism::identity(k, theory));
      for (unsigned i = 0; i < k; ++i)
        for (bool e : {false, true}) out.emplace_back("d" + std::to_string(i) + std::to_string(e), face(k, i, e, theory));
      return out;
    };
    for (const Relation* r1 : group) {
      for (const Relation* r2 : group) {
        for (const auto& [pn, pm] : probes(r1->lhs.map.source())) {
          for (const auto& [qn, qm] : probes(r2->lhs.map.source())) {
            if (pm.source() != qm.source()) continue;
            if (r1 == r2 && pn == qn) continue;
            if (compose(r1->lhs.map, pm) != compose(r2->lhs.map, qm)) continue;
            const unsigned m = pm.source();
            const std::size_t a = find_root(m, pair_index(m, r1->rhs.generator, compose(r1->rhs.map, pm)));
            const std::size_t b = find_root(m, pair_index(m, r2->rhs.generator, compose(r2->rhs.map, qm)));
            if (a != b) {
              const auto& cells = p.cells();
              throw PresentationError("inconsistent faces: " + r1->label + " then " + pn + " gives " +
                                      cells[r1->rhs.generator].name + format_components(compose(r1->rhs.map, pm)) +
                                      " but " + r2->label + " then " + qn + " gives " +
                                      cells[r2->rhs.generator].name + format_components(compose(r2->rhs.map, qm)));
            }
          }
        }
      }
    }
  }

  void finalize_level(unsigned m) {
    auto& lv = levels_[m];
    const auto& cells = presentation->cells();
    lv.class_id.assign(lv.pair_count, lv.pair_count);
    std::vector<std::size_t> root_class(lv.pair_count, lv.pair_count);
    std::vector<char> has_identity;
    for (std::size_t g = 0; g < cells.size(); ++g) {
      const auto& table = homs_.get(m, cells[g].dim);
      for (std::size_t i = 0; i < table.list.size(); ++i) {
        const std::size_t pi = lv.offset[g] + i;
        const std::size_t root = find_root(m, pi);
        if (root_class[root] == lv.pair_count) {
          root_class[root] = lv.rep.size();
          lv.rep.push_back({g, table.list[i]});
          has_identity.push_back(table.list[i].is_identity());
        } else if (!has_identity[root_class[root]] && table.list[i].is_identity()) {
          // Prefer naming a class after a generating cell.
          lv.rep[root_class[root]] = {g, table.list[i]};
          has_identity[root_class[root]] = 1;
        }
        lv.class_id[pi] = root_class[root];
      }
    }
  }

  mutable HomCache homs_;
  mutable std::vector<Level> levels_;
};

class ProductImpl final : public CubicalSetImpl {
 public:
  ProductImpl(std::shared_ptr<const CubicalSetImpl> x, std::shared_ptr<const CubicalSetImpl> y)
      : CubicalSetImpl(x->theory, x->max_dim), x_(std::move(x)), y_(std::move(y)) {}

  std::size_t size(unsigned level) const override { return x_->size(level) * y_->size(level); }

  std::string name(unsigned level, std::size_t cell) const override {
    const auto [a, b] = split(level, cell);
    return "(" + x_->name(level, a) + "," + y_->name(level, b) + ")";
  }

  std::size_t act(const CubeMorphism& f, std::size_t cell) const override {
    const auto [a, b] = split(f.target(), cell);
    return x_->act(f, a) * y_->size(f.source()) + y_->act(f, b);
  }

  std::pair<std::size_t, std::size_t> split(unsigned level, std::size_t cell) const {
    const std::size_t ny = y_->size(level);
    return {cell / ny, cell % ny};
  }

 private:
  std::shared_ptr<const CubicalSetImpl> x_, y_;
};

}  // namespace detail

/// An immutable truncated cubical set. Copies share the underlying data.
class CubicalSet {
 public:
  /// The free closure of a presentation, truncated at `p.max_dim()`.
  static CubicalSet from_presentation(const Presentation& p, std::size_t cell_budget = default_cell_budget) {
    return CubicalSet(std::make_shared<detail::GeneratedImpl>(p, cell_budget));
  }

  /// y(n) = hom(-, n), truncated at max_dim.
  static CubicalSet representable(unsigned n, unsigned max_dim = default_max_dim, Theory t = Theory::dl,
                                  std::size_t cell_budget = default_cell_budget) {
    if (n > max_dim) throw InputError("representable dimension exceeds the truncation");
    if (max_dim > default_max_dim) throw CapacityError("truncation above dimension 3 is not supported");
    Presentation p(t, max_dim);
    p.add_cell(n == 0 ? "pt" : "y" + std::to_string(n), n);
    return from_presentation(p, cell_budget);
  }

  /// The interval: y(1), with I(m) = DL(m).
  static CubicalSet interval(unsigned max_dim = default_max_dim, Theory t = Theory::dl) {
    return representable(1, max_dim, t);
  }

  /// One cell per level: y(0).
  static CubicalSet terminal(unsigned max_dim = default_max_dim, Theory t = Theory::dl) {
    return representable(0, max_dim, t);
  }

  Theory theory() const { return impl_->theory; }
  unsigned max_dim() const { return impl_->max_dim; }
  std::size_t size(unsigned level) const { return impl_->size(checked(level)); }
  std::string name(unsigned level, std::size_t cell) const { return impl_->name(checked(level), cell); }

  std::optional<std::size_t> find(unsigned level, const std::string& nm) const {
    for (std::size_t c = 0; c < size(level); ++c)
      if (name(level, c) == nm) return c;
    return std::nullopt;
  }

  std::size_t index_of(unsigned level, const std::string& nm) const {
    if (auto c = find(level, nm)) return *c;
    throw InputError("no cell named '" + nm + "' at level " + std::to_string(level));
  }

  /// The action of f : m -> n, sending a level-n cell to a level-m cell.
  std::size_t act(const CubeMorphism& f, std::size_t cell) const {
    if (cell >= size(f.target())) throw InputError("cell index out of range");
    return impl_->act(f, cell);
  }

  /// Dense action table of f: entry c is the image of level-n cell c.
  std::vector<std::size_t> action_table(const CubeMorphism& f) const {
    std::vector<std::size_t> t(size(f.target()));
    for (std::size_t c = 0; c < t.size(); ++c) t[c] = impl_->act(f, c);
    return t;
  }

  /// In the image of some degeneracy action.
  bool is_degenerate(unsigned level, std::size_t cell) const {
    for (unsigned i = 0; i < level; ++i) {
      const auto down = act(face(level, i, false, theory()), cell);
      if (act(degeneracy(level, i, theory()), down) == cell) return true;
    }
    return false;
  }

  /// The presentation this set was generated from, if any (products carry the product presentation).
  const std::optional<Presentation>& presentation() const { return impl_->presentation; }

  /// For sets built from a presentation: a (generator, morphism) pair naming the cell.
  const CellRef& representative(unsigned level, std::size_t cell) const {
    return generated().representative(checked(level), cell);
  }

  /// For sets built from a presentation: the cell g.h.
  std::size_t cell_of(std::size_t g, const CubeMorphism& h) const { return generated().class_of(h.source(), g, h); }

  /// For product sets: the two component cells.
  std::pair<std::size_t, std::size_t> components(unsigned level, std::size_t cell) const {
    auto p = std::dynamic_pointer_cast<const detail::ProductImpl>(impl_);
    if (!p) throw InputError("not a product cubical set");
    return p->split(checked(level), cell);
  }

  friend CubicalSet product(const CubicalSet& x, const CubicalSet& y);

 private:
  explicit CubicalSet(std::shared_ptr<const detail::CubicalSetImpl> impl) : impl_(std::move(impl)) {}

  unsigned checked(unsigned level) const {
    if (level > impl_->max_dim) {
      throw InputError("level " + std::to_string(level) + " is above the truncation " + std::to_string(impl_->max_dim));
    }
    return level;
  }

  const detail::GeneratedImpl& generated() const {
    auto g = dynamic_cast<const detail::GeneratedImpl*>(impl_.get());
    if (!g) throw InputError("cubical set was not built from a presentation");
    return *g;
  }

  std::shared_ptr<const detail::CubicalSetImpl> impl_;
};

/// Presentation of X x Y from presentations of X and Y: generators are pairs
/// of generators (dimensions add) and relations pair up with generators.
inline Presentation product_presentation(const Presentation& x, const Presentation& y) {
  Presentation out(x.theory(), x.max_dim());
  const auto& xc = x.cells();
  const auto& yc = y.cells();
  auto pair_id = [&](std::size_t a, std::size_t b) { return a * yc.size() + b; };
  for (const auto& a : xc)
    for (const auto& b : yc) out.add_cell("(" + a.name + "," + b.name + ")", a.dim + b.dim);
  for (const auto& r : x.relations())
    for (std::size_t b = 0; b < yc.size(); ++b) {
      const auto id = CubeMorphism::identity(yc[b].dim, x.theory());
      out.add_relation({pair_id(r.lhs.generator, b), product(r.lhs.map, id)},
                       {pair_id(r.rhs.generator, b), product(r.rhs.map, id)}, r.label + "x" + yc[b].name);
    }
  for (const auto& r : y.relations())
    for (std::size_t a = 0; a < xc.size(); ++a) {
      const auto id = CubeMorphism::identity(xc[a].dim, x.theory());
      out.add_relation({pair_id(a, r.lhs.generator), product(id, r.lhs.map)},
                       {pair_id(a, r.rhs.generator), product(id, r.rhs.map)}, xc[a].name + "x" + r.label);
    }
  return out;
}

/// Levelwise product with the diagonal action.
inline CubicalSet product(const CubicalSet& x, const CubicalSet& y) {
  if (x.max_dim() != y.max_dim()) throw InputError("product needs equal truncation levels");
  if (x.theory() != y.theory()) throw InputError("product needs equal theories");
  auto impl = std::make_shared<detail::ProductImpl>(x.impl_, y.impl_);
  if (x.presentation() && y.presentation()) impl->presentation = product_presentation(*x.presentation(), *y.presentation());
  return CubicalSet(std::move(impl));
}

/// The named generating morphisms with source and target at most max_dim.
inline std::vector<CubeMorphism> generator_morphisms(unsigned max_dim, Theory t = Theory::dl) {
  std::vector<CubeMorphism> out;
  for (unsigned n = 0; n <= max_dim; ++n) {
    for (unsigned i = 0; i < n; ++i) {
      out.push_back(face(n, i, false, t));
      out.push_back(face(n, i, true, t));
      out.push_back(degeneracy(n, i, t));
      if (t == Theory::dm) out.push_back(reversal(n, i, t));
      for (unsigned j = i + 1; j < n; ++j) {
        out.push_back(connection(n, i, j, ConnectionKind::meet, t));
        out.push_back(connection(n, i, j, ConnectionKind::join, t));
      }
      if (n + 1 <= max_dim)
        for (unsigned j = 0; j <= n; ++j) out.push_back(diagonal(n, i, j, t));
    }
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end())) out.push_back(symmetry(perm, t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct FunctorialityReport {
  std::size_t checks = 0;
  std::optional<std::string> failure;
  bool ok() const { return !failure; }
};

/// Checks action(id) = id and action(g . f) = action(f) . action(g) for all
/// generator morphisms and their composable pairs with dimensions <= up_to.
inline FunctorialityReport check_functoriality(const CubicalSet& x, unsigned up_to) {
  up_to = std::min(up_to, x.max_dim());
  FunctorialityReport report;
  const auto gens = generator_morphisms(up_to, x.theory());
  for (unsigned n = 0; n <= up_to; ++n) {
    const auto id = CubeMorphism::identity(n, x.theory());
    for (std::size_t c = 0; c < x.size(n); ++c, ++report.checks) {
      if (x.act(id, c) != c) {
        report.failure = "identity moves cell " + x.name(n, c);
        return report;
      }
    }
  }
  for (const auto& f : gens) {
    for (const auto& g : gens) {
      if (f.target() != g.source()) continue;
      const auto gf = compose(g, f);
      for (std::size_t c = 0; c < x.size(g.target()); ++c, ++report.checks) {
        if (x.act(gf, c) != x.act(f, x.act(g, c))) {
          report.failure = "action of " + to_string(gf) + " differs from the composite at cell " + x.name(g.target(), c);
          return report;
        }
      }
    }
  }
  return report;
}

/// Result of checking a map between cubical sets induced by images of generators.
struct InducedMapReport {
  bool well_defined = true;
  bool bijective = true;
  bool natural = true;
  /// map[level][cell of X] = cell of Y.
  std::vector<std::vector<std::size_t>> map;
  bool is_isomorphism() const { return well_defined && bijective && natural; }
};

/// For X generated by a presentation, the map sending [(g, h)] to
/// Y.act(h, images[g]). Checks it is well defined on classes, bijective on
/// every level, and commutes with all generator morphisms.
inline InducedMapReport induced_map(const CubicalSet& x, const CubicalSet& y, const std::vector<std::size_t>& images) {
  if (!x.presentation()) throw InputError("induced_map needs a generated source");
  const auto& p = *x.presentation();
  if (images.size() != p.cells().size()) throw InputError("one image per generator is required");
  const unsigned top = std::min(x.max_dim(), y.max_dim());
  InducedMapReport r;
  r.map.resize(top + 1);
  detail::HomCache homs(x.theory());
  for (unsigned m = 0; m <= top; ++m) {
    auto& mm = r.map[m];
    mm.assign(x.size(m), SIZE_MAX);
    for (std::size_t g = 0; g < p.cells().size(); ++g) {
      for (const auto& h : homs.get(m, p.cells()[g].dim).list) {
        const std::size_t src = x.cell_of(g, h);
        const std::size_t dst = y.act(h, images[g]);
        if (mm[src] == SIZE_MAX) mm[src] = dst;
        else if (mm[src] != dst) r.well_defined = false;
      }
    }
    std::vector<char> hit(y.size(m), 0);
    if (x.size(m) != y.size(m)) r.bijective = false;
    for (std::size_t v : mm) {
      if (v == SIZE_MAX || v >= hit.size() || hit[v]) r.bijective = false;
      else hit[v] = 1;
    }
  }
  for (const auto& f : generator_morphisms(top, x.theory())) {
    for (std::size_t c = 0; c < x.size(f.target()); ++c) {
      const std::size_t lhs = r.map[f.source()][x.act(f, c)];
      const std::size_t rhs = y.act(f, r.map[f.target()][c]);
      if (lhs != rhs) r.natural = false;
    }
  }
  return r;
}

/// Rebuilds a presentation from a generated set: each generator whose cell is
/// already named by another generator becomes an alias, the rest keep their
/// faces, read back from the closure.
inline Presentation canonical_presentation(const CubicalSet& x) {
  if (!x.presentation()) throw InputError("canonical_presentation needs a generated cubical set");
  const auto& p = *x.presentation();
  Presentation out(p.theory(), p.max_dim());
  for (const auto& c : p.cells()) out.add_cell(c.name, c.dim);
  for (std::size_t g = 0; g < p.cells().size(); ++g) {
    const unsigned n = p.cells()[g].dim;
    const auto id = CubeMorphism::identity(n, p.theory());
    const std::size_t cell = x.cell_of(g, id);
    const auto& rep = x.representative(n, cell);
    if (rep.generator != g) {
      out.add_relation({g, id}, rep, p.cells()[g].name + ".id");
      continue;
    }
    for (unsigned i = 0; i < n; ++i)
      for (bool e : {false, true}) {
        const auto d = face(n, i, e, p.theory());
        const auto& fr = x.representative(n - 1, x.act(d, cell));
        out.add_relation({g, d}, fr, p.cells()[g].name + ".d" + std::to_string(i) + std::to_string(e));
      }
  }
  return out;
}

/// S_D(f) : D^m -> D^n, componentwise evaluation of f's terms in D.
inline std::function<std::vector<std::size_t>(const std::vector<std::size_t>&)> cocubical_eval(
    const FiniteLattice& d, const CubeMorphism& f) {
  if (f.theory() != Theory::dl) throw UnsupportedTheoryError("cocubical evaluation needs a distributive-lattice morphism");
  return [d, f](const std::vector<std::size_t>& tuple) { return f.apply(d, tuple); };
}

struct YonedaReport {
  unsigned n = 0;
  unsigned m = 0;
  std::size_t representable_cells = 0;  // |y(n)(m)|
  std::size_t power_cells = 0;          // |I^n(m)|
  std::uint64_t expected = 0;           // |DL(m)|^n
  bool bijective = false;
  bool action_compatible = false;
  bool ok() const {
    return bijective && action_compatible && representable_cells == expected && power_cells == expected;
  }
};

namespace detail {

// Cell of the n-fold power of the interval at `level`, as its tuple of DL(level) elements.
// The power is the left-nested product ((I x I) x I) ..., so indices are mixed-radix digits.
inline std::vector<LatticeElement> interval_tuple(unsigned n, const CubicalSet& interval, unsigned level,
                                                  std::size_t cell) {
  std::vector<LatticeElement> out;
  std::vector<std::size_t> coords(n);
  std::size_t rest = cell;
  for (unsigned k = n; k-- > 1;) {
    const std::size_t ni = interval.size(level);
    coords[k] = rest % ni;
    rest /= ni;
  }
  if (n > 0) coords[0] = rest;
  for (std::size_t c : coords) out.push_back(interval.representative(level, c).map.component(0));
  return out;
}

}  // namespace detail

/// Verifies y(n)(m) = hom(m, n) ~ DL(m)^n = I^n(m), compatibly with the action
/// of every generator morphism between levels <= max(m, 1) (truncation 2).
inline YonedaReport yoneda_is_S_I(unsigned n, unsigned m) {
  constexpr unsigned trunc = 2;
  if (n > trunc || m > trunc) throw CapacityError("yoneda check is limited to n, m <= 2");
  YonedaReport rep;
  rep.n = n;
  rep.m = m;
  rep.expected = hom_count(m, n);
  const auto y = CubicalSet::representable(n, trunc);
  const auto interval = CubicalSet::interval(trunc);
  CubicalSet power = CubicalSet::terminal(trunc);
  if (n >= 1) {
    power = interval;
    for (unsigned k = 1; k < n; ++k) power = product(power, interval);
  }
  rep.representable_cells = y.size(m);
  rep.power_cells = power.size(m);

  auto y_tuple = [&](unsigned level, std::size_t c) {
    const auto& h = y.representative(level, c).map;
    return std::vector<LatticeElement>(h.components().begin(), h.components().end());
  };
  auto p_tuple = [&](unsigned level, std::size_t c) {
    if (n == 0) return std::vector<LatticeElement>{};
    return detail::interval_tuple(n, interval, level, c);
  };

  // Bijection at every level up to the truncation, matched by tuples.
  std::vector<std::vector<std::size_t>> phi(trunc + 1);
  rep.bijective = true;
  for (unsigned level = 0; level <= trunc; ++level) {
    std::map<std::vector<LatticeElement>, std::size_t> by_tuple;
    for (std::size_t c = 0; c < power.size(level); ++c) by_tuple.emplace(p_tuple(level, c), c);
    if (by_tuple.size() != power.size(level) || power.size(level) != y.size(level)) rep.bijective = false;
    phi[level].resize(y.size(level));
    for (std::size_t c = 0; c < y.size(level); ++c) {
      auto it = by_tuple.find(y_tuple(level, c));
      if (it == by_tuple.end()) {
        rep.bijective = false;
        phi[level][c] = SIZE_MAX;
      } else {
        phi[level][c] = it->second;
      }
    }
  }
  rep.action_compatible = rep.bijective;
  if (rep.bijective) {
    for (const auto& f : generator_morphisms(trunc)) {
      if (f.target() != m && f.source() != m) continue;
      for (std::size_t c = 0; c < y.size(f.target()); ++c)
        if (phi[f.source()][y.act(f, c)] != power.act(f, phi[f.target()][c])) rep.action_compatible = false;
    }
  }
  return rep;
}

}  // namespace cubical
