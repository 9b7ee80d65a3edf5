#pragma once

// Moore paths in a cubical set: composable lists of nondegenerate edges,
// with reversal (De Morgan theory) and contraction by the join connection.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cubical/cset.hpp"
#include "cubical/error.hpp"

namespace cubical {

inline std::size_t edge_source(const CubicalSet& x, std::size_t edge) {
  return x.act(face(1, 0, false, x.theory()), edge);
}

inline std::size_t edge_target(const CubicalSet& x, std::size_t edge) {
  return x.act(face(1, 0, true, x.theory()), edge);
}

/// The constant edge at a vertex.
inline std::size_t constant_edge(const CubicalSet& x, std::size_t vertex) {
  return x.act(degeneracy(1, 0, x.theory()), vertex);
}

inline bool is_degenerate_edge(const CubicalSet& x, std::size_t edge) {
  return edge == constant_edge(x, edge_source(x, edge));
}

class MoorePath {
 public:
  /// Validates composability and drops degenerate edges.
  static MoorePath make(CubicalSet ambient, std::size_t source, const std::vector<std::size_t>& edges) {
    if (ambient.max_dim() < 1) throw CapacityError("Moore paths need a cubical set truncated at 1 or above");
    if (source >= ambient.size(0)) throw InputError("path source is not a vertex");
    MoorePath p(std::move(ambient), source);
    std::size_t at = source;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::size_t e = edges[k];
      if (e >= p.ambient_.size(1)) throw InputError("edge index out of range");
      if (edge_source(p.ambient_, e) != at) {
        throw InputError("edge " + std::to_string(k) + " (" + p.ambient_.name(1, e) + ") starts at " +
                         p.ambient_.name(0, edge_source(p.ambient_, e)) + " but the path is at " +
                         p.ambient_.name(0, at));
      }
      at = edge_target(p.ambient_, e);
      if (!is_degenerate_edge(p.ambient_, e)) p.edges_.push_back(e);
    }
    p.target_ = at;
    return p;
  }

  /// The zero-length path at a vertex.
  static MoorePath identity(CubicalSet ambient, std::size_t vertex) { return make(std::move(ambient), vertex, {}); }

  const CubicalSet& ambient() const { return ambient_; }
  std::size_t source() const { return source_; }
  std::size_t target() const { return target_; }
  const std::vector<std::size_t>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }

  friend bool operator==(const MoorePath& a, const MoorePath& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.edges_ == b.edges_;
  }

 private:
  MoorePath(CubicalSet ambient, std::size_t source) : ambient_(std::move(ambient)), source_(source), target_(source) {}

  CubicalSet ambient_;
  std::size_t source_;
  std::size_t target_;
  std::vector<std::size_t> edges_;
};

inline MoorePath concat(const MoorePath& p, const MoorePath& q) {
  if (p.target() != q.source()) {
    throw InputError("cannot concatenate: first path ends at " + p.ambient().name(0, p.target()) +
                     " but second starts at " + q.ambient().name(0, q.source()));
  }
  std::vector<std::size_t> edges = p.edges();
  edges.insert(edges.end(), q.edges().begin(), q.edges().end());
  return MoorePath::make(p.ambient(), p.source(), edges);
}

/// Reverses the list and applies the reversal x -> ~x to every edge.
inline MoorePath reverse(const MoorePath& p) {
  const auto& x = p.ambient();
  if (x.theory() != Theory::dm) throw UnsupportedTheoryError("path reversal needs the De Morgan theory");
  const auto r = reversal(1, 0);
  std::vector<std::size_t> edges;
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) edges.push_back(x.act(r, *it));
  return MoorePath::make(x, p.target(), edges);
}

/// Every path of length at most max_length, ordered by length, source, then edges.
inline std::vector<MoorePath> enumerate_paths(const CubicalSet& x, std::size_t max_length) {
  std::vector<std::size_t> nondegenerate;
  for (std::size_t e = 0; e < x.size(1); ++e)
    if (!is_degenerate_edge(x, e)) nondegenerate.push_back(e);
  std::vector<MoorePath> out;
  std::vector<MoorePath> frontier;
  for (std::size_t v = 0; v < x.size(0); ++v) frontier.push_back(MoorePath::identity(x, v));
  out = frontier;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<MoorePath> grown;
    for (const auto& p : frontier)
      for (std::size_t e : nondegenerate)
        if (edge_source(x, e) == p.target()) {
          auto edges = p.edges();
          edges.push_back(e);
          grown.push_back(MoorePath::make(x, p.source(), edges));
        }
    out.insert(out.end(), grown.begin(), grown.end());
    frontier = std::move(grown);
  }
  return out;
}

/// A 2-cell with its faces: faces[0], faces[1] at x0 = 0, 1 and faces[2], faces[3] at x1 = 0, 1.
struct PathSquare {
  std::size_t cell = 0;
  std::array<std::size_t, 4> faces{};
};

inline PathSquare make_square(const CubicalSet& x, std::size_t cell) {
  PathSquare s;
  s.cell = cell;
  for (unsigned i = 0; i < 2; ++i)
    for (bool e : {false, true}) s.faces[2 * i + e] = x.act(face(2, i, e, x.theory()), cell);
  return s;
}

namespace detail {

inline void require_squares(const CubicalSet& x) {
  if (x.max_dim() < 2) throw CapacityError("contraction needs a cubical set truncated at 2 or above");
}

// The map 2 -> 1 with the single component x_i.
inline CubeMorphism projection_2(unsigned i, Theory t) { return degeneracy(2, 1 - i, t); }

}  // namespace detail

/// The square edge(x0 v x1): p at x0 = 0 and at x1 = 0, constant at the target on the other two sides.
inline PathSquare contract_edge(const CubicalSet& x, std::size_t edge) {
  detail::require_squares(x);
  return make_square(x, x.act(connection(2, 0, 1, ConnectionKind::join, x.theory()), edge));
}

/// Rows of the staircase contracting p to the constant path at its target.
/// Row k has one square per edge: edge k squashed along x1 for the edges
/// before it, the contraction of edge k, and the later edges held constant in x1.
inline std::vector<std::vector<PathSquare>> contract_path(const MoorePath& p) {
  const auto& x = p.ambient();
  detail::require_squares(x);
  const auto along_time = detail::projection_2(1, x.theory());
  const auto along_path = detail::projection_2(0, x.theory());
  const auto& e = p.edges();
  std::vector<std::vector<PathSquare>> rows;
  for (std::size_t k = 0; k < e.size(); ++k) {
    std::vector<PathSquare> row;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i < k) row.push_back(make_square(x, x.act(along_time, e[k])));
      else if (i == k) row.push_back(contract_edge(x, e[k]));
      else row.push_back(make_square(x, x.act(along_path, e[i])));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Checks that neighbouring squares share sides, that consecutive rows
/// share their top and bottom edges, and that the staircase runs from p
/// (bottom of the first row) to constant edges at the target (top of the last).
inline bool check_staircase(const MoorePath& p, const std::vector<std::vector<PathSquare>>& rows) {
  const auto& x = p.ambient();
  if (rows.size() != p.length()) return false;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    if (row.size() != p.length()) return false;
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i].faces[1] != row[i + 1].faces[0]) return false;
    if (k + 1 < rows.size())
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i].faces[3] != rows[k + 1][i].faces[2]) return false;
  }
  if (rows.empty()) return true;
  for (std::size_t i = 0; i < rows.front().size(); ++i)
    if (rows.front()[i].faces[2] != p.edges()[i]) return false;
  const std::size_t rest = constant_edge(x, p.target());
  for (const auto& sq : rows.back())
    if (sq.faces[3] != rest) return false;
  return true;
}

}  // namespace cubical
