#pragma once

// Small named presentations used by the tests, the CLI and data/.

#include <algorithm>
#include <string>
#include <vector>

#include "cubical/cset.hpp"

namespace cubical::corpus {

/// One vertex.
inline Presentation point(unsigned max_dim = default_max_dim) {
  Presentation p(Theory::dl, max_dim);
  p.add_cell("pt", 0);
  return p;
}

/// Two vertices joined by an edge.
inline Presentation interval(unsigned max_dim = default_max_dim) {
  Presentation p(Theory::dl, max_dim);
  p.add_cell("v0", 0);
  p.add_cell("v1", 0);
  p.add_cell("e", 1);
  p.set_face("e", 0, false, "v0");
  p.set_face("e", 0, true, "v1");
  return p;
}

/// One vertex and one loop.
inline Presentation circle(unsigned max_dim = default_max_dim, Theory t = Theory::dl) {
  Presentation p(t, max_dim);
  p.add_cell("v", 0);
  p.add_cell("e", 1);
  p.set_face("e", 0, false, "v");
  p.set_face("e", 0, true, "v");
  return p;
}

/// Vertices v0..vk and edges e1..ek with e_i from v_{i-1} to v_i.
inline Presentation path(unsigned edges, unsigned max_dim = default_max_dim) {
  Presentation p(Theory::dl, max_dim);
  for (unsigned i = 0; i <= edges; ++i) p.add_cell("v" + std::to_string(i), 0);
  for (unsigned i = 1; i <= edges; ++i) {
    const auto e = "e" + std::to_string(i);
    p.add_cell(e, 1);
    p.set_face(e, 0, false, "v" + std::to_string(i - 1));
    p.set_face(e, 0, true, "v" + std::to_string(i));
  }
  return p;
}

/// Faces of the n-cube of dimension at most `up_to`, named by patterns over
/// {0, 1, *}: "0*1" is the edge with x0 = 0, x2 = 1 and x1 free. Local
/// coordinate i of a cell is its i-th free position.
inline Presentation cube_skeleton(unsigned n, unsigned up_to, unsigned max_dim = default_max_dim) {
  Presentation p(Theory::dl, max_dim);
  std::vector<std::vector<std::string>> by_dim(up_to + 1);
  unsigned total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;
  for (unsigned code = 0; code < total; ++code) {
    std::string pat;
    unsigned c = code;
    unsigned free = 0;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned digit = c % 3;
      c /= 3;
      pat += digit == 2 ? '*' : static_cast<char>('0' + digit);
      free += digit == 2;
    }
    if (free <= up_to) by_dim[free].push_back(pat);
  }
  for (unsigned d = 0; d <= up_to; ++d)
    for (const auto& pat : by_dim[d]) p.add_cell(pat, d);
  for (unsigned d = 1; d <= up_to; ++d) {
    for (const auto& pat : by_dim[d]) {
      unsigned local = 0;
      for (std::size_t pos = 0; pos < pat.size(); ++pos) {
        if (pat[pos] != '*') continue;
        for (bool e : {false, true}) {
          std::string f = pat;
          f[pos] = e ? '1' : '0';
          p.set_face(pat, local, e, f);
        }
        ++local;
      }
    }
  }
  return p;
}

inline Presentation square_boundary(unsigned max_dim = default_max_dim) { return cube_skeleton(2, 1, max_dim); }
inline Presentation square(unsigned max_dim = default_max_dim) { return cube_skeleton(2, 2, max_dim); }
inline Presentation cube_boundary(unsigned max_dim = default_max_dim) { return cube_skeleton(3, 2, max_dim); }

/// One vertex, two loops a and b, one square with opposite sides identified.
inline Presentation torus(unsigned max_dim = default_max_dim) {
  Presentation p(Theory::dl, max_dim);
  p.add_cell("v", 0);
  p.add_cell("a", 1);
  p.add_cell("b", 1);
  p.add_cell("s", 2);
  for (const char* e : {"a", "b"}) {
    p.set_face(e, 0, false, "v");
    p.set_face(e, 0, true, "v");
  }
  p.set_face("s", 0, false, "b");
  p.set_face("s", 0, true, "b");
  p.set_face("s", 1, false, "a");
  p.set_face("s", 1, true, "a");
  return p;
}

/// Names accepted by `by_name`.
inline std::vector<std::string> names() {
  return {"point", "interval", "circle", "path3", "square-boundary", "square", "torus", "cube-boundary", "dm-circle"};
}

inline Presentation by_name(const std::string& name, unsigned max_dim = default_max_dim) {
  if (name == "point") return point(max_dim);
  if (name == "interval") return interval(max_dim);
  if (name == "circle") return circle(max_dim);
  if (name == "path3") return path(3, max_dim);
  if (name == "square-boundary") return square_boundary(max_dim);
  if (name == "square") return square(max_dim);
  if (name == "torus") return torus(max_dim);
  if (name == "cube-boundary") return cube_boundary(max_dim);
  if (name == "dm-circle") return circle(std::min(max_dim, 2u), Theory::dm);
  throw InputError("unknown corpus presentation '" + name + "'");
}

}  // namespace cubical::corpus
