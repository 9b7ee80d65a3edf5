#pragma once

// JSON reading and writing for lattices, posets, presentations, morphisms,
// flatness reports, meshes and Moore paths. Uses nlohmann/json.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubical/cset.hpp"
#include "cubical/duality.hpp"
#include "cubical/error.hpp"
#include "cubical/finite_lattice.hpp"
#include "cubical/flatness.hpp"
#include "cubical/moore.hpp"
#include "cubical/realization.hpp"

namespace cubical::json_io {

using json = nlohmann::json;

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + " is missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(what + ": bad \"" + key + "\": " + e.what());
  }
}

struct NamedOrder {
  std::vector<std::string> names;
  OrderPairs pairs;
};

inline NamedOrder read_order(const json& j, const std::string& what) {
  NamedOrder o;
  o.names = get<std::vector<std::string>>(j, "elements", what);
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < o.names.size(); ++i) id[o.names[i]] = i;
  auto leq = get<std::vector<std::vector<std::string>>>(j, "leq", what);
  for (const auto& pr : leq) {
    if (pr.size() != 2) throw InputError(what + ": each \"leq\" entry must be a pair");
    auto a = id.find(pr[0]), b = id.find(pr[1]);
    if (a == id.end() || b == id.end()) throw InputError(what + ": \"leq\" names an unknown element");
    o.pairs.emplace_back(a->second, b->second);
  }
  return o;
}

inline json write_order(const std::vector<std::string>& names, const FinitePoset& order) {
  json leq = json::array();
  for (auto [a, b] : order.covers()) leq.push_back({names[a], names[b]});
  return {{"elements", names}, {"leq", leq}};
}

}  // namespace detail

/// {"elements": [...], "leq": [[a, b], ...]}; the order is the reflexive-transitive closure.
inline FiniteLattice lattice_from_json(const json& j) {
  auto o = detail::read_order(j, "lattice");
  return FiniteLattice::from_order(std::move(o.names), o.pairs);
}

inline FinitePoset poset_from_json(const json& j) {
  auto o = detail::read_order(j, "poset");
  return FinitePoset::from_order(std::move(o.names), o.pairs);
}

/// A poset with an extra "involution": {name: name} object.
inline InvolutivePoset involutive_poset_from_json(const json& j) {
  auto base = poset_from_json(j);
  auto inv = detail::get<std::map<std::string, std::string>>(j, "involution", "involutive poset");
  std::vector<std::size_t> map(base.size(), base.size());
  auto index = [&](const std::string& n) {
    for (std::size_t i = 0; i < base.size(); ++i)
      if (base.name(i) == n) return i;
    throw InputError("involution names an unknown element '" + n + "'");
  };
  for (const auto& [a, b] : inv) map[index(a)] = index(b);
  return InvolutivePoset::make(std::move(base), std::move(map));
}

/// Covering pairs only, so the output reads back as the same lattice.
inline json to_json(const FiniteLattice& l) { return detail::write_order(l.names(), l.order()); }
inline json to_json(const FinitePoset& p) { return detail::write_order(p.names(), p); }

/// A lattice argument: "chain:K", "boolean:A", "free:N" or a JSON file path.
inline FiniteLattice lattice_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "chain" || kind == "boolean" || kind == "free") {
      if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InputError("bad size in lattice spec '" + spec + "'");
      }
      const unsigned n = static_cast<unsigned>(std::stoul(arg));
      if (kind == "chain") return FiniteLattice::chain(n);
      if (kind == "boolean") return FiniteLattice::boolean(n);
      return FiniteLattice::free(n);
    }
  }
  return lattice_from_json(read_file(spec));
}

/// "name" or "name:[t1, t2, ...]" with terms over `dim` variables.
inline CellRef parse_cell_ref(const Presentation& p, const std::string& text, unsigned dim) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::size_t g = p.index_of(name);
  const unsigned target = p.cells()[g].dim;
  if (colon == std::string::npos) {
    if (target != dim) {
      throw InputError("'" + name + "' has dimension " + std::to_string(target) + " where a " + std::to_string(dim) +
                       "-cell is needed; give the map as " + name + ":[...]");
    }
    return {g, CubeMorphism::identity(dim, p.theory())};
  }
  auto terms = split_component_list(text.substr(colon + 1));
  auto f = morphism_from_terms(dim, terms, p.theory());
  if (f.target() != target) {
    throw InputError("map for '" + name + "' has " + std::to_string(f.target()) + " components but the cell has dimension " +
                     std::to_string(target));
  }
  return {g, std::move(f)};
}

/// {"dims": N, "theory": "dl"|"dm", "cells": {"0": [...], ...},
///  "faces": {cell: {"d<i><e>": ref, "id": ref}}} where ref is "name" or
/// "name:[terms]". The "id" entry declares the cell equal to ref.
inline Presentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw InputError("presentation must be a JSON object");
  const Theory t = j.contains("theory") ? parse_theory(detail::get<std::string>(j, "theory", "presentation")) : Theory::dl;
  const auto cells = detail::get<std::map<std::string, std::vector<std::string>>>(j, "cells", "presentation");
  unsigned top = 0;
  for (const auto& [k, v] : cells) {
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](unsigned char c) { return std::isdigit(c); }) || k.size() > 2) {
      throw InputError("cell dimension key '" + k + "' is not a small number");
    }
    if (!v.empty()) top = std::max(top, static_cast<unsigned>(std::stoul(k)));
  }
  const unsigned dims = j.contains("dims") ? detail::get<unsigned>(j, "dims", "presentation") : top;
  if (dims < top) throw InputError("\"dims\" is below the dimension of a declared cell");
  Presentation p(t, dims);
  std::vector<std::pair<unsigned, std::vector<std::string>>> ordered;
  for (const auto& [k, v] : cells) ordered.emplace_back(static_cast<unsigned>(std::stoul(k)), v);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [d, names] : ordered)
    for (const auto& n : names) p.add_cell(n, d);

  if (!j.contains("faces")) return p;
  const auto faces = detail::get<std::map<std::string, std::map<std::string, std::string>>>(j, "faces", "presentation");
  for (const auto& [cell, entries] : faces) {
    const std::size_t g = p.index_of(cell);
    const unsigned n = p.cells()[g].dim;
    for (const auto& [key, ref] : entries) {
      if (key == "id") {
        auto r = parse_cell_ref(p, ref, n);
        p.set_alias(cell, p.cells()[r.generator].name, r.map);
        continue;
      }
      if (key.size() < 3 || key[0] != 'd' || (key.back() != '0' && key.back() != '1') ||
          !std::all_of(key.begin() + 1, key.end() - 1, [](unsigned char c) { return std::isdigit(c); })) {
        throw InputError("face key '" + key + "' of '" + cell + "' is not of the form d<i><0|1>");
      }
      const unsigned i = static_cast<unsigned>(std::stoul(key.substr(1, key.size() - 2)));
      const bool e = key.back() == '1';
      if (n == 0) throw InputError("cell '" + cell + "' has dimension 0 and no faces");
      auto r = parse_cell_ref(p, ref, n - 1);
      p.set_face(cell, i, e, p.cells()[r.generator].name, r.map);
    }
  }
  return p;
}

inline std::string cell_ref_text(const Presentation& p, const CellRef& r) {
  const auto& name = p.cells()[r.generator].name;
  return r.map.is_identity() ? name : name + ":" + format_components(r.map);
}

/// Inverse of presentation_from_json for relations that are faces or aliases.
inline json to_json(const Presentation& p) {
  json cells = json::object();
  for (const auto& c : p.cells()) cells[std::to_string(c.dim)].push_back(c.name);
  json faces = json::object();
  for (const auto& r : p.relations()) {
    const auto& cell = p.cells()[r.lhs.generator];
    std::string key;
    if (r.lhs.map.is_identity()) {
      key = "id";
    } else {
      for (unsigned i = 0; i < cell.dim && key.empty(); ++i)
        for (bool e : {false, true})
          if (r.lhs.map == face(cell.dim, i, e, p.theory())) key = "d" + std::to_string(i) + (e ? "1" : "0");
    }
    if (key.empty()) throw InputError("relation '" + r.label + "' is neither a face nor an alias");
    faces[cell.name][key] = cell_ref_text(p, r.rhs);
  }
  return {{"dims", p.max_dim()}, {"theory", to_string(p.theory())}, {"cells", cells}, {"faces", faces}};
}

inline json to_json(const CubeMorphism& f) {
  json comps = json::array();
  for (const auto& c : f.components()) comps.push_back(format_component(c, f.theory()));
  return {{"source", f.source()}, {"target", f.target()}, {"theory", to_string(f.theory())}, {"components", comps}};
}

inline CubeMorphism morphism_from_json(const json& j) {
  const auto source = detail::get<unsigned>(j, "source", "morphism");
  const Theory t = j.contains("theory") ? parse_theory(detail::get<std::string>(j, "theory", "morphism")) : Theory::dl;
  auto f = morphism_from_terms(source, detail::get<std::vector<std::string>>(j, "components", "morphism"), t);
  if (j.contains("target") && detail::get<unsigned>(j, "target", "morphism") != f.target()) {
    throw InputError("morphism \"target\" does not match its component count");
  }
  return f;
}

inline json tuple_to_json(const FiniteLattice& l, const std::vector<std::size_t>& d) {
  json out = json::array();
  for (std::size_t v : d) out.push_back(l.name(v));
  return out;
}

inline std::vector<std::size_t> tuple_from_json(const FiniteLattice& l, const json& j) {
  if (!j.is_array()) throw InputError("tuple must be a JSON array of element names");
  std::vector<std::size_t> d;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError("tuple entries must be element names");
    d.push_back(l.index_of(v.get<std::string>()));
  }
  return d;
}

inline json to_json(const FiniteLattice& l, const FlatnessInstance& inst) {
  return {{"alpha", to_json(inst.alpha)}, {"beta", to_json(inst.beta)}, {"d", tuple_to_json(l, inst.d)}};
}

inline FlatnessInstance instance_from_json(const FiniteLattice& l, const json& j) {
  FlatnessInstance inst{morphism_from_json(j.at("alpha")), morphism_from_json(j.at("beta")), {}};
  if (!j.contains("d")) throw InputError("instance is missing \"d\"");
  inst.d = tuple_from_json(l, j.at("d"));
  if (inst.d.size() != inst.alpha.source()) throw InputError("\"d\" must have one entry per variable of alpha");
  return inst;
}

inline json to_json(const FiniteLattice& l, const FlatnessWitness& w) {
  return {{"gamma", to_json(w.gamma)}, {"d_prime", tuple_to_json(l, w.d_prime)}};
}

inline json to_json(const FiniteLattice& l, const FlatnessReport& r) {
  json j = {{"status", r.flat_up_to_bounds ? "flat_up_to_bounds" : "counterexample"},
            {"bounds", {r.bounds.n_max, r.bounds.m_max, r.bounds.k_max}},
            {"inhabited", r.inhabited},
            {"transitive", r.transitive},
            {"pairs_checked", r.pairs_checked},
            {"instances_checked", r.instances_checked},
            {"counterexample", nullptr},
            {"witness", nullptr}};
  if (r.counterexample) j["counterexample"] = to_json(l, *r.counterexample);
  return j;
}

inline json to_json(const SimplicialComplex& c) {
  json counts = json::array();
  for (unsigned p = 0; p < c.simplices.size(); ++p) counts.push_back(c.count(p));
  json simplices = json::array();
  for (unsigned p = 1; p < c.simplices.size(); ++p) {
    json level = json::array();
    for (const auto& s : c.simplices[p]) level.push_back(s.vertices);
    simplices.push_back(level);
  }
  return {{"counts", counts},
          {"euler_characteristic", c.euler_characteristic()},
          {"top_simplices", c.top_simplex_count()},
          {"simplices", simplices}};
}

inline json to_json(const Mesh& m) {
  json points = json::array();
  for (const auto& p : m.points) {
    points.push_back({{"position", p.position}, {"cell", p.cell}, {"local", p.local}});
  }
  json counts = json::array();
  for (unsigned p = 0; p < m.simplices.size(); ++p) counts.push_back(m.count(p));
  return {{"samples", m.samples},
          {"points", points},
          {"counts", counts},
          {"euler_characteristic", m.euler_characteristic()},
          {"simplices", m.simplices}};
}

/// {"source": vertex, "edges": [edge, ...]} by cell name.
inline json to_json(const MoorePath& p) {
  json edges = json::array();
  for (std::size_t e : p.edges()) edges.push_back(p.ambient().name(1, e));
  return {{"source", p.ambient().name(0, p.source())}, {"target", p.ambient().name(0, p.target())}, {"edges", edges}};
}

inline MoorePath path_from_json(const CubicalSet& x, const json& j) {
  auto edges = detail::get<std::vector<std::string>>(j, "edges", "path");
  std::vector<std::size_t> ids;
  for (const auto& e : edges) ids.push_back(x.index_of(1, e));
  std::size_t source;
  if (j.contains("source")) source = x.index_of(0, detail::get<std::string>(j, "source", "path"));
  else if (!ids.empty()) source = edge_source(x, ids.front());
  else throw InputError("a zero-length path needs a \"source\"");
  auto p = MoorePath::make(x, source, ids);
  if (j.contains("target") && p.target() != x.index_of(0, detail::get<std::string>(j, "target", "path"))) {
    throw InputError("path \"target\" does not match its edges");
  }
  return p;
}

inline json to_json(const CubicalSet& x, const PathSquare& s) {
  json faces = json::array();
  for (std::size_t f : s.faces) faces.push_back(x.name(1, f));
  return {{"cell", x.name(2, s.cell)}, {"faces", faces}};
}

}  // namespace cubical::json_io
