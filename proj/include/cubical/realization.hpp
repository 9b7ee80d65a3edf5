#pragma once

// Simplicial triangulation and numeric geometric realization of cubical sets
// given by presentations, with OFF/OBJ export.
//
// An n-cube is cut into n! simplices, one per maximal chain of {0,1}^n. Cube
// morphisms are monotone and linear on each such simplex, so they send chains
// to (possibly degenerate) chains, and a presentation's relations become
// identifications of chains. The numeric realization does the same on an
// s^n grid with the coordinates evaluated exactly as integer numerators.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "cubical/cset.hpp"
#include "cubical/error.hpp"

namespace cubical {

inline constexpr unsigned max_realization_dim = 3;
inline constexpr std::size_t default_point_cap = 1'000'000;

struct Simplex {
  /// Vertex ids in chain order (a Delta-complex: repeated vertex sets are allowed).
  std::vector<std::size_t> vertices;
  /// faces[i] is the id of the face omitting vertex i, one dimension down,
  /// or SIZE_MAX when that face collapsed to a degenerate simplex.
  std::vector<std::size_t> faces;
};

struct SimplicialComplex {
  /// simplices[p] holds the p-simplices; simplices[0][v].vertices == {v}.
  std::vector<std::vector<Simplex>> simplices;

  std::size_t count(unsigned p) const { return p < simplices.size() ? simplices[p].size() : 0; }
  std::size_t vertex_count() const { return count(0); }
  unsigned dimension() const {
    unsigned d = 0;
    for (unsigned p = 0; p < simplices.size(); ++p)
      if (!simplices[p].empty()) d = p;
    return d;
  }

  long euler_characteristic() const {
    long chi = 0;
    for (unsigned p = 0; p < simplices.size(); ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(simplices[p].size());
    return chi;
  }

  /// Simplices that are not a face of any other simplex.
  std::size_t top_simplex_count() const {
    std::size_t n = 0;
    for (unsigned p = 0; p < simplices.size(); ++p) {
      std::vector<char> is_face(simplices[p].size(), 0);
      if (p + 1 < simplices.size())
        for (const auto& s : simplices[p + 1])
          for (std::size_t f : s.faces)
            if (f < is_face.size()) is_face[f] = 1;
      n += static_cast<std::size_t>(std::count(is_face.begin(), is_face.end(), 0));
    }
    return n;
  }
};

namespace detail {

class UnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    rank_.push_back(0);
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t i) { return sets().find_set(i); }
  void unite(std::size_t a, std::size_t b) { sets().union_set(a, b); }
  std::size_t size() const { return parent_.size(); }

 private:
  boost::disjoint_sets<std::size_t*, std::size_t*> sets() { return {rank_.data(), parent_.data()}; }
  std::vector<std::size_t> parent_, rank_;
};

inline const Presentation& realizable_presentation(const CubicalSet& x) {
  if (!x.presentation()) throw InputError("realization needs a cubical set with a presentation");
  const auto& p = *x.presentation();
  if (p.theory() != Theory::dl) {
    throw UnsupportedTheoryError("realization is defined for distributive-lattice cubical sets only");
  }
  for (const auto& c : p.cells())
    if (c.dim > max_realization_dim) {
      throw InputError("cell '" + c.name + "' has dimension " + std::to_string(c.dim) + "; realization supports at most 3");
    }
  return p;
}

// Point of the s-grid on I^k as integer numerators over s - 1.
using GridPoint = std::vector<int>;

inline std::size_t grid_index(const GridPoint& p, int s) {
  std::size_t i = 0;
  for (int v : p) i = i * static_cast<std::size_t>(s) + static_cast<std::size_t>(v);
  return i;
}

inline GridPoint grid_point(std::size_t index, int s, unsigned dim) {
  GridPoint p(dim);
  for (unsigned i = dim; i-- > 0;) {
    p[i] = static_cast<int>(index % static_cast<std::size_t>(s));
    index /= static_cast<std::size_t>(s);
  }
  return p;
}

inline std::size_t grid_size(int s, unsigned dim) {
  std::size_t n = 1;
  for (unsigned i = 0; i < dim; ++i) n *= static_cast<std::size_t>(s);
  return n;
}

// All weakly increasing chains of length len in the grid order restricted to
// one unit subcube, as lists of grid indices. For s = 2 these are the chains of {0,1}^dim.
inline std::vector<std::vector<std::size_t>> subcube_chains(int s, unsigned dim, unsigned len) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t cells = grid_size(s - 1, dim);
  for (std::size_t c = 0; c < cells; ++c) {
    const GridPoint corner = grid_point(c, s - 1, dim);
    std::vector<std::size_t> chain;
    auto extend = [&](auto& self, unsigned mask) -> void {
      if (chain.size() == len) {
        out.insert(chain);
        return;
      }
      for (unsigned next = 0; next < (1u << dim); ++next) {
        if ((next & mask) != mask) continue;
        GridPoint p = corner;
        for (unsigned i = 0; i < dim; ++i) p[i] += (next >> i) & 1u;
        chain.push_back(grid_index(p, s));
        self(self, next);
        chain.pop_back();
      }
    };
    extend(extend, 0);
  }
  return {out.begin(), out.end()};
}

inline bool has_repeat(const std::vector<std::size_t>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i] == chain[i - 1]) return true;
  return false;
}

// Images of the grid points of I^k under f : k -> n, as grid indices.
inline std::vector<std::size_t> grid_table(const CubeMorphism& f, int s) {
  const GridInterval grid{s - 1};
  std::vector<std::size_t> out(grid_size(s, f.source()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = grid_index(f.apply(grid, grid_point(i, s, f.source())), s);
  return out;
}

// Chains of every generator's grid up to length dim + 1, glued along the
// relations. Used by both the combinatorial (s = 2) and numeric realization.
struct ChainQuotient {
  int s = 2;
  // chains[g][len - 1]: weakly increasing chains of that length for generator g.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> chains;
  std::vector<std::vector<std::map<std::vector<std::size_t>, std::size_t>>> slot;
  UnionFind uf;
  std::vector<char> slot_degenerate;
};

inline ChainQuotient build_chain_quotient(const Presentation& p, int s) {
  ChainQuotient q;
  q.s = s;
  const auto& cells = p.cells();
  q.chains.resize(cells.size());
  q.slot.resize(cells.size());
  for (std::size_t g = 0; g < cells.size(); ++g) {
    const unsigned n = cells[g].dim;
    q.chains[g].resize(max_realization_dim + 1);
    q.slot[g].resize(max_realization_dim + 1);
    for (unsigned len = 1; len <= max_realization_dim + 1; ++len) {
      q.chains[g][len - 1] = subcube_chains(s, n, len);
      for (const auto& c : q.chains[g][len - 1]) {
        q.slot[g][len - 1].emplace(c, q.uf.add());
        q.slot_degenerate.push_back(has_repeat(c));
      }
    }
  }
  for (const auto& r : p.relations()) {
    const unsigned k = r.lhs.map.source();
    const auto lt = grid_table(r.lhs.map, s);
    const auto rt = grid_table(r.rhs.map, s);
    for (unsigned len = 1; len <= max_realization_dim + 1; ++len) {
      for (const auto& c : subcube_chains(s, k, len)) {
        std::vector<std::size_t> a, b;
        for (std::size_t v : c) {
          a.push_back(lt[v]);
          b.push_back(rt[v]);
        }
        q.uf.unite(q.slot[r.lhs.generator][len - 1].at(a), q.slot[r.rhs.generator][len - 1].at(b));
      }
    }
  }
  return q;
}

}  // namespace detail

/// Simplicial triangulation: one simplex per class of chains in {0,1}^n over
/// the generating cells, keeping the classes with no degenerate member.
inline SimplicialComplex triangulate(const CubicalSet& x) {
  const auto& p = detail::realizable_presentation(x);
  auto q = detail::build_chain_quotient(p, 2);

  std::vector<char> class_degenerate(q.uf.size(), 0);
  for (std::size_t i = 0; i < q.uf.size(); ++i)
    if (q.slot_degenerate[i]) class_degenerate[q.uf.find(i)] = 1;

  SimplicialComplex out;
  out.simplices.resize(max_realization_dim + 1);
  std::vector<std::size_t> id(q.uf.size(), SIZE_MAX);
  for (unsigned len = 1; len <= max_realization_dim + 1; ++len) {
    for (std::size_t g = 0; g < p.cells().size(); ++g) {
      for (const auto& c : q.chains[g][len - 1]) {
        const std::size_t root = q.uf.find(q.slot[g][len - 1].at(c));
        if (class_degenerate[root] || id[root] != SIZE_MAX) continue;
        Simplex sx;
        for (std::size_t v : c) sx.vertices.push_back(id[q.uf.find(q.slot[g][0].at({v}))]);
        if (len > 1) {
          for (std::size_t i = 0; i < len; ++i) {
            auto face = c;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            sx.faces.push_back(id[q.uf.find(q.slot[g][len - 2].at(face))]);
          }
        }
        id[root] = out.simplices[len - 1].size();
        if (len == 1) sx.vertices = {id[root]};
        out.simplices[len - 1].push_back(std::move(sx));
      }
    }
  }
  while (!out.simplices.empty() && out.simplices.back().empty()) out.simplices.pop_back();
  return out;
}

struct MeshPoint {
  std::array<double, 3> position{};
  /// Provenance: generating cell and grid coordinates (numerators over samples - 1).
  std::string cell;
  std::vector<int> local;
};

struct Mesh {
  unsigned samples = 2;
  std::vector<MeshPoint> points;
  /// simplices[p]: point-index tuples of the p-simplices, sorted.
  std::vector<std::vector<std::vector<std::size_t>>> simplices;

  std::size_t count(unsigned p) const { return p < simplices.size() ? simplices[p].size() : 0; }
  unsigned dimension() const {
    unsigned d = 0;
    for (unsigned p = 0; p < simplices.size(); ++p)
      if (!simplices[p].empty()) d = p;
    return d;
  }
  long euler_characteristic() const {
    long chi = 0;
    for (unsigned p = 0; p < simplices.size(); ++p) chi += (p % 2 ? -1L : 1L) * static_cast<long>(simplices[p].size());
    return chi;
  }
};

/// Numeric realization on an s^n grid per generating cell, glued along the
/// relations with exact grid arithmetic (meet = min, join = max), and cut
/// into simplices per grid subcube. Simplices are identified by their
/// ordered tuples of glued points; tuples with a repeated point are dropped.
inline Mesh realize_numeric(const CubicalSet& x, unsigned samples, std::size_t point_cap = default_point_cap) {
  if (samples < 2) throw InputError("realization needs at least 2 samples per axis");
  const auto& p = detail::realizable_presentation(x);
  const int s = static_cast<int>(samples);
  const auto& cells = p.cells();

  std::size_t total = 0;
  for (const auto& c : cells) {
    total += detail::grid_size(s, c.dim);
    if (total > point_cap) {
      throw CapacityError("realization needs more than " + std::to_string(point_cap) + " grid points");
    }
  }
  auto q = detail::build_chain_quotient(p, s);

  // Generators that are declared equal to another cell contribute no geometry of their own.
  std::vector<char> alias(cells.size());
  std::vector<std::size_t> rank(cells.size(), 0);
  std::size_t next_rank = 0;
  for (std::size_t g = 0; g < cells.size(); ++g) {
    alias[g] = p.is_alias(g);
    if (!alias[g]) rank[g] = next_rank++;
  }

  struct Member {
    std::size_t generator;
    detail::GridPoint local;
  };
  std::map<std::size_t, std::vector<Member>> members;  // point class root -> members
  for (std::size_t g = 0; g < cells.size(); ++g) {
    for (std::size_t i = 0; i < detail::grid_size(s, cells[g].dim); ++i) {
      const std::size_t root = q.uf.find(q.slot[g][0].at({i}));
      auto& list = members[root];
      if (!alias[g]) list.push_back({g, detail::grid_point(i, s, cells[g].dim)});
    }
  }

  struct Provenance {
    std::size_t generator;
    detail::GridPoint local;
    std::size_t root;
    bool operator<(const Provenance& o) const {
      return std::tie(generator, local, root) < std::tie(o.generator, o.local, o.root);
    }
  };
  std::vector<Provenance> order;
  for (auto& [root, list] : members) {
    if (list.empty()) throw std::logic_error("glued point with no non-alias member");
    const auto it = std::min_element(list.begin(), list.end(), [](const Member& a, const Member& b) {
      return std::tie(a.generator, a.local) < std::tie(b.generator, b.local);
    });
    order.push_back({it->generator, it->local, root});
  }
  std::sort(order.begin(), order.end());

  Mesh mesh;
  mesh.samples = samples;
  std::map<std::size_t, std::size_t> point_of;
  for (const auto& pr : order) {
    MeshPoint mp;
    mp.cell = cells[pr.generator].name;
    mp.local = pr.local;
    const auto& list = members[pr.root];
    for (const auto& m : list) {
      mp.position[0] += 2.0 * static_cast<double>(rank[m.generator]);
      for (std::size_t i = 0; i < m.local.size(); ++i) mp.position[i] += m.local[i] / double(s - 1);
    }
    for (double& c : mp.position) c /= static_cast<double>(list.size());
    point_of.emplace(pr.root, mesh.points.size());
    mesh.points.push_back(std::move(mp));
  }

  mesh.simplices.resize(max_realization_dim + 1);
  for (unsigned len = 1; len <= max_realization_dim + 1; ++len) {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t g = 0; g < cells.size(); ++g) {
      for (const auto& c : q.chains[g][len - 1]) {
        if (detail::has_repeat(c)) continue;
        std::vector<std::size_t> tuple;
        for (std::size_t v : c) tuple.push_back(point_of.at(q.uf.find(q.slot[g][0].at({v}))));
        bool repeated = false;
        for (std::size_t i = 0; i < tuple.size() && !repeated; ++i)
          for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j]) repeated = true;
        if (!repeated) seen.insert(std::move(tuple));
      }
    }
    mesh.simplices[len - 1].assign(seen.begin(), seen.end());
  }
  while (!mesh.simplices.empty() && mesh.simplices.back().empty()) mesh.simplices.pop_back();
  return mesh;
}

enum class MeshFormat { off, obj };

inline MeshFormat parse_mesh_format(std::string_view s) {
  if (s == "off") return MeshFormat::off;
  if (s == "obj") return MeshFormat::obj;
  throw InputError("unknown mesh format '" + std::string(s) + "' (expected off or obj)");
}

/// OFF or OBJ text. Triangles are faces; edges that bound no triangle are
/// emitted as 2-gons (OFF) or line records (OBJ). Coordinates use 6 decimals.
inline std::string export_mesh(const Mesh& mesh, MeshFormat format) {
  if (mesh.simplices.size() > max_realization_dim + 1) throw InputError("mesh dimension above 3 cannot be exported");
  std::vector<std::vector<std::size_t>> triangles, lines;
  if (mesh.simplices.size() > 2) triangles = mesh.simplices[2];
  if (mesh.simplices.size() > 1) {
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (const auto& t : triangles)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) covered.insert(std::minmax(t[i], t[j]));
    for (const auto& e : mesh.simplices[1])
      if (!covered.count(std::minmax(e[0], e[1]))) lines.push_back(e);
  }
  std::string out;
  char buf[128];
  auto coords = [&](const MeshPoint& p) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f", p.position[0], p.position[1], p.position[2]);
    return std::string(buf);
  };
  if (format == MeshFormat::off) {
    out += "OFF\n" + std::to_string(mesh.points.size()) + " " + std::to_string(triangles.size() + lines.size()) + " 0\n";
    for (const auto& p : mesh.points) out += coords(p) + "\n";
    for (const auto& t : triangles)
      out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + "\n";
    for (const auto& e : lines) out += "2 " + std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
  } else {
    for (const auto& p : mesh.points) out += "v " + coords(p) + "\n";
    for (const auto& t : triangles)
      out += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1) + "\n";
    for (const auto& e : lines) out += "l " + std::to_string(e[0] + 1) + " " + std::to_string(e[1] + 1) + "\n";
  }
  return out;
}

/// Grid map of f on s samples per axis: entry i is the image of grid point i.
inline std::vector<std::size_t> grid_map(const CubeMorphism& f, unsigned samples) {
  if (samples < 2) throw InputError("grid needs at least 2 samples per axis");
  if (f.theory() != Theory::dl) throw UnsupportedTheoryError("grid maps are defined for distributive-lattice morphisms");
  return detail::grid_table(f, static_cast<int>(samples));
}

}  // namespace cubical
