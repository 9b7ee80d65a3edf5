// Command-line front end for the cubical library.
//
// Exit codes: 0 success, 1 property refuted, 2 input error (including bad
// flags), 3 capacity or budget exceeded, 4 internal failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubical/cubical.hpp"

namespace {

using cubical::json_io::json;

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_input = 2;
constexpr int exit_capacity = 3;
constexpr int exit_internal = 4;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

cubical::FlatnessBounds parse_bounds(const std::string& text) {
  std::vector<unsigned> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3) {
      throw cubical::InputError("--bounds expects n,m,k with small non-negative integers");
    }
    v.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (v.size() != 3) throw cubical::InputError("--bounds expects exactly three numbers n,m,k");
  if (v[0] == 0) throw cubical::InputError("--bounds needs n >= 1");
  return {v[0], v[1], v[2]};
}

// "corpus:NAME" or a JSON presentation file.
cubical::Presentation load_presentation(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) return cubical::corpus::by_name(arg.substr(7));
  return cubical::json_io::presentation_from_json(cubical::json_io::read_file(arg));
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

struct Options {
  unsigned n = 1;
  unsigned m = 1;
  std::string theory = "dl";
  bool count = false;
  std::string term;
  unsigned random = 0;
  std::uint64_t seed = 20260101;
  unsigned sample = 0;
  unsigned max_dim = 2;
  std::string lattice;
  std::string poset;
  std::string involutive;
  std::string bounds = "1,2,2";
  unsigned threads = 0;
  std::string instance;
  bool linear = false;
  std::string presentation;
  unsigned samples = 3;
  std::string format = "off";
  std::string output;
  std::string path;
  std::string edges;
  std::string source;
  bool reverse = false;
  bool contract = false;
  int enumerate_paths = -1;
};

int run_normalize(const Options& o) {
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (unsigned i = 0; i < o.random; ++i) {
      const auto t = cubical::random_term(rng, o.n, 4, o.theory == "dm");
      const std::string nf = o.theory == "dm" ? cubical::format(cubical::normalize_dm(t, o.n))
                                              : cubical::format(cubical::normalize(t, o.n));
      std::cout << cubical::to_string(t) << " => " << nf << "\n";
    }
    return exit_ok;
  }
  if (o.term.empty()) throw cubical::InputError("normalize needs a term (or --random K)");
  if (o.theory == "dm") std::cout << cubical::format(cubical::normalize_dm(o.term, o.n)) << "\n";
  else std::cout << cubical::format(cubical::normalize(o.term, o.n)) << "\n";
  return exit_ok;
}

int run_enumerate(const Options& o) {
  if (o.theory == "dm") {
    const auto all = cubical::enumerate_free_dm(o.n);
    if (o.count) std::cout << all.size() << "\n";
    else
      for (const auto& e : all) std::cout << cubical::format(e) << "\n";
    return exit_ok;
  }
  const auto all = cubical::enumerate_free(o.n);
  if (o.count) std::cout << all.size() << "\n";
  else
    for (const auto& e : all) std::cout << cubical::format(e) << "\n";
  return exit_ok;
}

int run_hom(const Options& o) {
  if (o.theory == "bipointed") {
    const auto all = cubical::enumerate_bipointed(o.m, o.n);
    if (o.count) std::cout << all.size() << "\n";
    else
      for (const auto& f : all) std::cout << cubical::to_string(f) << "\n";
    return exit_ok;
  }
  const auto t = cubical::parse_theory(o.theory);
  if (o.count) {
    std::cout << cubical::hom_count(o.m, o.n, t) << "\n";
    return exit_ok;
  }
  const auto all = cubical::enumerate_hom(o.m, o.n, t);
  if (o.sample > 0) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (unsigned i = 0; i < o.sample; ++i) std::cout << cubical::to_string(all[pick(rng)]) << "\n";
    return exit_ok;
  }
  for (const auto& f : all) std::cout << cubical::to_string(f) << "\n";
  return exit_ok;
}

int run_compare_bipointed(const Options& o) {
  json rows = json::array();
  bool faithful = true, full = true;
  for (const auto& c : cubical::compare_bipointed(o.max_dim)) {
    rows.push_back({{"m", c.m},
                    {"n", c.n},
                    {"bipointed", c.bipointed},
                    {"image", c.image},
                    {"cube", c.cube},
                    {"injective", c.injective()}});
    faithful = faithful && c.injective();
    full = full && c.surjective();
  }
  print_json({{"max_dim", o.max_dim}, {"faithful", faithful}, {"full", full}, {"hom_sets", rows}});
  return exit_ok;
}

int run_dual(const Options& o) {
  const int given = !o.lattice.empty() + !o.poset.empty() + !o.involutive.empty();
  if (given != 1) throw cubical::InputError("dual needs exactly one of --lattice, --poset, --involutive");
  if (!o.poset.empty()) {
    const auto p = cubical::json_io::poset_from_json(cubical::json_io::read_file(o.poset));
    print_json(cubical::json_io::to_json(cubical::lower_sets(p)));
    return exit_ok;
  }
  if (!o.involutive.empty()) {
    const auto p = cubical::json_io::involutive_poset_from_json(cubical::json_io::read_file(o.involutive));
    const auto dm = cubical::DeMorganLattice::from_involutive(p);
    json neg = json::object();
    for (std::size_t i = 0; i < dm.lattice().size(); ++i) neg[dm.lattice().name(i)] = dm.lattice().name(dm.negate(i));
    print_json({{"lattice", cubical::json_io::to_json(dm.lattice())}, {"negation", neg}});
    return exit_ok;
  }
  const auto l = cubical::json_io::lattice_from_spec(o.lattice);
  const auto w = cubical::duality_roundtrip(l);
  json iso = json::object();
  for (std::size_t x = 0; x < l.size(); ++x) iso[l.name(x)] = w.dual.name(w.iso.forward[x]);
  print_json({{"join_irreducibles", cubical::json_io::to_json(w.irreducibles.poset)},
              {"lower_sets", cubical::json_io::to_json(w.dual)},
              {"isomorphism", iso},
              {"verified", true}});
  return exit_ok;
}

int run_flat(const Options& o) {
  if (o.lattice.empty()) throw cubical::InputError("flat needs --lattice");
  const auto l = cubical::json_io::lattice_from_spec(o.lattice);
  const auto bounds = parse_bounds(o.bounds);
  if (!o.instance.empty()) {
    auto j = cubical::json_io::read_file(o.instance);
    if (j.contains("counterexample")) j = j.at("counterexample");
    const auto inst = cubical::json_io::instance_from_json(l, j);
    std::optional<cubical::FlatnessWitness> w;
    if (o.linear) w = cubical::linear_order_witness(l, inst);
    else w = cubical::find_witness(l, inst, bounds.k_max);
    json out = {{"status", w ? "witness" : "no_witness_up_to_bounds"},
                {"bounds", {bounds.n_max, bounds.m_max, bounds.k_max}},
                {"counterexample", nullptr},
                {"witness", nullptr},
                {"instance", cubical::json_io::to_json(l, inst)}};
    if (w) out["witness"] = cubical::json_io::to_json(l, *w);
    else out["counterexample"] = cubical::json_io::to_json(l, inst);
    print_json(out);
    return w ? exit_ok : exit_refuted;
  }
  const auto report = cubical::check_flatness_bounded(l, bounds, o.threads);
  print_json(cubical::json_io::to_json(l, report));
  return report.flat_up_to_bounds ? exit_ok : exit_refuted;
}

int run_disjunction(const Options& o) {
  if (o.lattice.empty()) throw cubical::InputError("disjunction needs --lattice");
  const auto l = cubical::json_io::lattice_from_spec(o.lattice);
  const auto r = cubical::check_disjunction_property(l);
  json out = {{"status", r.holds ? "holds" : "counterexample"}, {"counterexample", nullptr}};
  if (r.counterexample) out["counterexample"] = {l.name(r.counterexample->first), l.name(r.counterexample->second)};
  print_json(out);
  return r.holds ? exit_ok : exit_refuted;
}

int run_realize(const Options& o) {
  const auto x = cubical::CubicalSet::from_presentation(load_presentation(o.presentation));
  const auto mesh = cubical::realize_numeric(x, o.samples);
  std::string text = o.format == "json" ? cubical::json_io::to_json(mesh).dump(2) + "\n"
                                        : cubical::export_mesh(mesh, cubical::parse_mesh_format(o.format));
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw cubical::InputError("cannot write '" + o.output + "'");
    out << text;
  }
  return exit_ok;
}

int run_triangulate(const Options& o) {
  const auto x = cubical::CubicalSet::from_presentation(load_presentation(o.presentation));
  print_json(cubical::json_io::to_json(cubical::triangulate(x)));
  return exit_ok;
}

int run_moore(const Options& o) {
  const auto x = cubical::CubicalSet::from_presentation(load_presentation(o.presentation));
  if (o.enumerate_paths >= 0) {
    json paths = json::array();
    for (const auto& p : cubical::enumerate_paths(x, static_cast<std::size_t>(o.enumerate_paths)))
      paths.push_back(cubical::json_io::to_json(p));
    print_json({{"max_length", o.enumerate_paths}, {"count", paths.size()}, {"paths", paths}});
    return exit_ok;
  }
  json spec;
  if (!o.path.empty()) {
    spec = cubical::json_io::read_file(o.path);
    if (spec.contains("path")) spec = spec.at("path");
  } else {
    spec["edges"] = split_names(o.edges);
    if (!o.source.empty()) spec["source"] = o.source;
  }
  const auto p = cubical::json_io::path_from_json(x, spec);
  json out = {{"path", cubical::json_io::to_json(p)}};
  if (o.reverse) out["reverse"] = cubical::json_io::to_json(cubical::reverse(p));
  if (o.contract) {
    const auto rows = cubical::contract_path(p);
    json js = json::array();
    for (const auto& row : rows) {
      json jr = json::array();
      for (const auto& sq : row) jr.push_back(cubical::json_io::to_json(x, sq));
      js.push_back(jr);
    }
    out["staircase"] = js;
    out["staircase_ok"] = cubical::check_staircase(p, rows);
  }
  print_json(out);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free distributive lattices, the cube category and cubical sets"};
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of a lattice term");
  normalize->add_option("-n", o.n, "Number of generators")->required();
  normalize->add_option("--theory", o.theory, "dl or dm")->check(CLI::IsMember({"dl", "dm"}));
  normalize->add_option("term", o.term, "Term, e.g. \"x0 ^ (x1 v x0)\"");
  normalize->add_option("--random", o.random, "Print K random terms with their normal forms");
  normalize->add_option("--seed", o.seed, "Seed for --random");

  auto* enumerate = app.add_subcommand("enumerate", "List the elements of DL(n) or DM(n)");
  enumerate->add_option("-n", o.n, "Number of generators")->required();
  enumerate->add_option("--theory", o.theory, "dl or dm")->check(CLI::IsMember({"dl", "dm"}));
  enumerate->add_flag("--count", o.count, "Print only the number of elements");

  auto* hom = app.add_subcommand("hom", "List cube morphisms m -> n");
  hom->add_option("-m", o.m, "Source dimension")->required();
  hom->add_option("-n", o.n, "Target dimension")->required();
  hom->add_option("--theory", o.theory, "dl, dm or bipointed")->check(CLI::IsMember({"dl", "dm", "bipointed"}));
  hom->add_flag("--count", o.count, "Print only the number of morphisms");
  hom->add_option("--sample", o.sample, "Print K morphisms drawn uniformly at random");
  hom->add_option("--seed", o.seed, "Seed for --sample");

  auto* dual = app.add_subcommand("dual", "Birkhoff duality between finite posets and lattices");
  dual->add_option("--lattice", o.lattice, "chain:K, boolean:A, free:N or a lattice JSON file");
  dual->add_option("--poset", o.poset, "Poset JSON file; prints its lattice of lower sets");
  dual->add_option("--involutive", o.involutive, "Poset JSON file with an \"involution\" map");

  auto* flat = app.add_subcommand("flat", "Bounded check of the freeness condition");
  flat->add_option("--lattice", o.lattice, "chain:K, boolean:A, free:N or a lattice JSON file")->required();
  flat->add_option("--bounds", o.bounds, "n,m,k bounds (default 1,2,2)");
  flat->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
  flat->add_option("--instance", o.instance, "Check one instance (JSON with alpha, beta, d)");
  flat->add_flag("--linear", o.linear, "With --instance: build the chain witness");

  auto* disjunction = app.add_subcommand("disjunction", "Check a v b = 1 => a = 1 or b = 1");
  disjunction->add_option("--lattice", o.lattice, "chain:K, boolean:A, free:N or a lattice JSON file")->required();

  auto* realize = app.add_subcommand("realize", "Numeric geometric realization as a mesh");
  realize->add_option("presentation", o.presentation, "Presentation JSON file or corpus:NAME")->required();
  realize->add_option("--samples", o.samples, "Grid points per axis (>= 2)");
  realize->add_option("--format", o.format, "off, obj or json")->check(CLI::IsMember({"off", "obj", "json"}));
  realize->add_option("-o,--output", o.output, "Write to a file instead of stdout");

  auto* triangulate = app.add_subcommand("triangulate", "Simplicial triangulation");
  triangulate->add_option("presentation", o.presentation, "Presentation JSON file or corpus:NAME")->required();

  auto* moore = app.add_subcommand("moore", "Moore paths: normal form, reversal, contraction");
  moore->add_option("presentation", o.presentation, "Presentation JSON file or corpus:NAME")->required();
  moore->add_option("--path", o.path, "Path JSON file {\"source\", \"edges\"}");
  moore->add_option("--edges", o.edges, "Comma-separated edge names");
  moore->add_option("--source", o.source, "Start vertex (needed for zero-length paths)");
  moore->add_flag("--reverse", o.reverse, "Also print the reversed path (De Morgan sets)");
  moore->add_flag("--contract", o.contract, "Also print the contraction staircase");
  moore->add_option("--enumerate", o.enumerate_paths, "List all paths up to this length");

  auto* compare = app.add_subcommand("compare-bipointed", "Compare bipointed hom-sets with cube hom-sets");
  compare->add_option("--max", o.max_dim, "Largest dimension (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.front()->help());
    return exit_input;
  }

  try {
    if (*normalize) return run_normalize(o);
    if (*enumerate) return run_enumerate(o);
    if (*hom) return run_hom(o);
    if (*dual) return run_dual(o);
    if (*flat) return run_flat(o);
    if (*disjunction) return run_disjunction(o);
    if (*realize) return run_realize(o);
    if (*triangulate) return run_triangulate(o);
    if (*moore) return run_moore(o);
    if (*compare) return run_compare_bipointed(o);
  } catch (const cubical::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return exit_capacity;
  } catch (const cubical::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_input;
}
