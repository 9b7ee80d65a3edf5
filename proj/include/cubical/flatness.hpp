#pragma once

// Bounded checking of the freeness (filtering) condition for finite
// distributive lattices, plus the explicit witness for chains.
//
// An instance is a pair alpha, beta : m -> n of cube morphisms (n-tuples of
// DL(m) terms) and d in D^m with alpha(d) = beta(d). A witness is
// gamma : k -> m with alpha . gamma = beta . gamma and d' in D^k with
// gamma(d') = d.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubical/cube.hpp"
#include "cubical/error.hpp"
#include "cubical/finite_lattice.hpp"

namespace cubical {

struct FlatnessInstance {
  CubeMorphism alpha;
  CubeMorphism beta;
  std::vector<std::size_t> d;
};

struct FlatnessWitness {
  CubeMorphism gamma;
  std::vector<std::size_t> d_prime;
};

struct FlatnessBounds {
  unsigned n_max = 1;
  unsigned m_max = 1;
  unsigned k_max = 1;
};

struct FlatnessBudget {
  std::uint64_t max_gammas = 100'000;      // candidate gamma : k -> m, summed over k
  std::uint64_t max_tuples = 1u << 16;     // |D|^m and |D|^k
  std::uint64_t max_pairs = 2'000'000;     // unordered pairs alpha, beta per (n, m)
};

struct FlatnessReport {
  FlatnessBounds bounds;
  bool flat_up_to_bounds = true;
  std::optional<FlatnessInstance> counterexample;
  std::uint64_t pairs_checked = 0;
  std::uint64_t instances_checked = 0;
  // Always true for algebras of a Lawvere theory; reported, not searched.
  bool inhabited = true;
  bool transitive = true;
};

struct DisjunctionResult {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// First pair (a, b), a < b by id, with a v b = 1 and neither equal to 1.
inline DisjunctionResult check_disjunction_property(const FiniteLattice& d) {
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b)
      if (d.join(a, b) == d.top() && a != d.top() && b != d.top()) return {false, std::make_pair(a, b)};
  return {};
}

inline bool hypothesis_holds(const FiniteLattice& lattice, const FlatnessInstance& inst) {
  if (inst.alpha.theory() != Theory::dl || inst.beta.theory() != Theory::dl) {
    throw UnsupportedTheoryError("flatness instances use distributive-lattice terms");
  }
  if (inst.alpha.source() != inst.beta.source() || inst.alpha.target() != inst.beta.target()) {
    throw InputError("alpha and beta must be parallel");
  }
  for (std::size_t v : inst.d)
    if (v >= lattice.size()) throw InputError("tuple entry out of range");
  return inst.alpha.apply(lattice, inst.d) == inst.beta.apply(lattice, inst.d);
}

/// alpha . gamma = beta . gamma as normal forms and gamma(d') = d.
inline bool validate_witness(const FiniteLattice& lattice, const FlatnessInstance& inst, const FlatnessWitness& w) {
  if (w.gamma.target() != inst.alpha.source() || w.gamma.source() != w.d_prime.size()) return false;
  if (compose(inst.alpha, w.gamma) != compose(inst.beta, w.gamma)) return false;
  return w.gamma.apply(lattice, w.d_prime) == inst.d;
}

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap, const std::string& what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1)) throw CapacityError(what);
    r *= base;
  }
  return r;
}

// Index of d in D^m, first coordinate most significant (so index order is lexicographic).
inline std::size_t tuple_index(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t i = 0;
  for (std::size_t v : d) i = i * base + v;
  return i;
}

inline std::vector<std::size_t> tuple_at(std::size_t index, std::size_t base, unsigned len) {
  std::vector<std::size_t> d(len);
  for (unsigned i = len; i-- > 0;) {
    d[i] = index % base;
    index /= base;
  }
  return d;
}

struct FreeTable {
  std::vector<LatticeElement> elements;
  std::unordered_map<LatticeElement, std::size_t, LatticeElementHash> index;
  // eval[e * tuples + t]: element e evaluated at the t-th tuple of D^n.
  std::vector<std::uint16_t> eval;
  std::size_t tuples = 0;
};

inline FreeTable free_table(unsigned n, const FiniteLattice& lattice, std::size_t tuples) {
  FreeTable t;
  t.elements = enumerate_free(n);
  for (std::size_t i = 0; i < t.elements.size(); ++i) t.index.emplace(t.elements[i], i);
  t.tuples = tuples;
  t.eval.resize(t.elements.size() * tuples);
  for (std::size_t p = 0; p < tuples; ++p) {
    const auto point = tuple_at(p, lattice.size(), n);
    for (std::size_t e = 0; e < t.elements.size(); ++e)
      t.eval[e * tuples + p] = static_cast<std::uint16_t>(evaluate(t.elements[e], lattice, point));
  }
  return t;
}

using Bitset = std::vector<std::uint64_t>;

inline void set_bit(Bitset& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
inline bool test_bit(const Bitset& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

// Candidate gamma : k -> m for one k: substitution tables and images.
struct GammaBlock {
  unsigned k = 0;
  std::vector<CubeMorphism> gammas;
  // sub[g * |DL(m)| + e]: index in DL(k) of e . gamma_g.
  std::vector<std::uint16_t> sub;
  // Bitset over D^m of gamma_g(D^k).
  std::vector<Bitset> image;
};

}  // namespace detail

/// Exhaustive bounded search for a witness to one instance: k increasing,
/// then gamma in canonical hom order, then d' lexicographically.
inline std::optional<FlatnessWitness> find_witness(const FiniteLattice& lattice, const FlatnessInstance& inst,
                                                   unsigned k_max) {
  if (!hypothesis_holds(lattice, inst)) throw InputError("instance does not satisfy alpha(d) = beta(d)");
  const unsigned m = inst.alpha.source();
  for (unsigned k = 0; k <= k_max; ++k) {
    if (hom_count(k, m) > FlatnessBudget{}.max_gammas) {
      throw CapacityError("k_max=" + std::to_string(k_max) + " gives too many candidate gammas");
    }
    const std::uint64_t tuples = detail::checked_power(lattice.size(), k, FlatnessBudget{}.max_tuples,
                                                       "k_max=" + std::to_string(k_max) + " gives too many tuples");
    for (const auto& g : enumerate_hom(k, m)) {
      if (compose(inst.alpha, g) != compose(inst.beta, g)) continue;
      for (std::size_t p = 0; p < tuples; ++p) {
        auto dp = detail::tuple_at(p, lattice.size(), k);
        if (g.apply(lattice, dp) == inst.d) return FlatnessWitness{g, std::move(dp)};
      }
    }
  }
  return std::nullopt;
}

/// Searches every instance with 1 <= n <= n_max, 0 <= m <= m_max for a
/// witness with k <= k_max. Instances are ordered by n, m, alpha (hom
/// order), beta < alpha, then d lexicographically; the least instance
/// without a witness is reported. Work is split over `threads` workers and
/// merged deterministically.
inline FlatnessReport check_flatness_bounded(const FiniteLattice& lattice, FlatnessBounds bounds,
                                             unsigned threads = 0, FlatnessBudget budget = {}) {
  if (bounds.m_max > max_enumerable_generators) {
    throw CapacityError("m_max=" + std::to_string(bounds.m_max) + " exceeds the enumerable range");
  }
  if (bounds.k_max > max_enumerable_generators) {
    throw CapacityError("k_max=" + std::to_string(bounds.k_max) + " exceeds the enumerable range");
  }
  if (lattice.size() > 0xffff) throw CapacityError("lattice too large for flatness search");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  FlatnessReport report;
  report.bounds = bounds;
  const std::size_t base = lattice.size();

  for (unsigned m = 0; m <= bounds.m_max; ++m) {
    detail::checked_power(base, m, budget.max_tuples, "m_max=" + std::to_string(bounds.m_max) + " gives more than " +
                                                          std::to_string(budget.max_tuples) + " tuples");
  }
  for (unsigned k = 0; k <= bounds.k_max; ++k) {
    detail::checked_power(base, k, budget.max_tuples, "k_max=" + std::to_string(bounds.k_max) + " gives more than " +
                                                          std::to_string(budget.max_tuples) + " tuples");
  }

  // Tables of DL(k) per k, reused for every m.
  std::vector<detail::FreeTable> free_k;
  for (unsigned k = 0; k <= bounds.k_max; ++k) {
    std::size_t tuples = 1;
    for (unsigned i = 0; i < k; ++i) tuples *= base;
    free_k.push_back(detail::free_table(k, lattice, tuples));
  }

  struct Found {
    std::size_t pair = SIZE_MAX;
    std::size_t d = 0;
  };

  for (unsigned n = 1; n <= bounds.n_max; ++n) {
    for (unsigned m = 0; m <= bounds.m_max; ++m) {
      std::uint64_t gamma_total = 0;
      for (unsigned k = 0; k <= bounds.k_max; ++k) gamma_total += hom_count(k, m);
      if (gamma_total > budget.max_gammas) {
        throw CapacityError("k_max=" + std::to_string(bounds.k_max) + " needs " + std::to_string(gamma_total) +
                            " candidate gammas at m=" + std::to_string(m) + " (budget " +
                            std::to_string(budget.max_gammas) + ")");
      }
      const std::uint64_t alphas = hom_count(m, n);
      const std::uint64_t pairs = alphas * (alphas - 1) / 2;
      if (pairs > budget.max_pairs) {
        throw CapacityError("n_max=" + std::to_string(bounds.n_max) + " gives " + std::to_string(pairs) +
                            " term pairs at m=" + std::to_string(m) + " (budget " + std::to_string(budget.max_pairs) +
                            ")");
      }
      const std::size_t tuples = detail::checked_power(base, m, budget.max_tuples, "m_max");
      const std::size_t words = (tuples + 63) / 64;
      const auto dl_m = detail::free_table(m, lattice, tuples);
      const std::size_t dl_m_size = dl_m.elements.size();

      // alpha as tuples of DL(m) indices, in hom order.
      const auto homs = enumerate_hom(m, n);
      std::vector<std::vector<std::uint16_t>> terms(homs.size());
      for (std::size_t a = 0; a < homs.size(); ++a)
        for (const auto& c : homs[a].components()) terms[a].push_back(static_cast<std::uint16_t>(dl_m.index.at(c)));

      std::vector<detail::GammaBlock> blocks;
      for (unsigned k = 0; k <= bounds.k_max; ++k) {
        detail::GammaBlock blk;
        blk.k = k;
        blk.gammas = enumerate_hom(k, m);
        const auto& fk = free_k[k];
        blk.sub.resize(blk.gammas.size() * dl_m_size);
        blk.image.assign(blk.gammas.size(), detail::Bitset(words, 0));
        for (std::size_t g = 0; g < blk.gammas.size(); ++g) {
          const auto comps = blk.gammas[g].components();
          for (std::size_t e = 0; e < dl_m_size; ++e)
            blk.sub[g * dl_m_size + e] = static_cast<std::uint16_t>(fk.index.at(substitute(dl_m.elements[e], k, comps)));
          std::vector<std::size_t> comp_ids;
          for (const auto& c : comps) comp_ids.push_back(fk.index.at(c));
          for (std::size_t p = 0; p < fk.tuples; ++p) {
            std::size_t di = 0;
            for (std::size_t c : comp_ids) di = di * base + fk.eval[c * fk.tuples + p];
            detail::set_bit(blk.image[g], di);
          }
        }
        blocks.push_back(std::move(blk));
      }

      // Pair p enumerates alpha = a, beta = b < a in order.
      auto check_pair = [&](std::size_t a, std::size_t b, std::size_t& instances) -> std::optional<std::size_t> {
        detail::Bitset need(words, 0), covered(words, 0);
        bool any = false;
        for (std::size_t t = 0; t < tuples; ++t) {
          bool eq = true;
          for (std::size_t i = 0; i < n && eq; ++i)
            eq = dl_m.eval[terms[a][i] * tuples + t] == dl_m.eval[terms[b][i] * tuples + t];
          if (eq) {
            detail::set_bit(need, t);
            any = true;
            ++instances;
          }
        }
        if (!any) return std::nullopt;
        auto done = [&] {
          for (std::size_t w = 0; w < words; ++w)
            if (need[w] & ~covered[w]) return false;
          return true;
        };
        for (const auto& blk : blocks) {
          for (std::size_t g = 0; g < blk.gammas.size(); ++g) {
            const std::uint16_t* s = &blk.sub[g * dl_m_size];
            bool equalized = true;
            for (std::size_t i = 0; i < n && equalized; ++i) equalized = s[terms[a][i]] == s[terms[b][i]];
            if (!equalized) continue;
            for (std::size_t w = 0; w < words; ++w) covered[w] |= blk.image[g][w];
            if (done()) return std::nullopt;
          }
        }
        for (std::size_t t = 0; t < tuples; ++t)
          if (detail::test_bit(need, t) && !detail::test_bit(covered, t)) return t;
        return std::nullopt;
      };

      // pair index p <-> (a, b) with a = 1.., b < a: p = a(a-1)/2 + b.
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> best_pair{SIZE_MAX};
      std::vector<Found> found(threads);
      std::vector<std::uint64_t> inst_counts(threads, 0), pair_counts(threads, 0);
      constexpr std::size_t chunk = 64;
      auto worker = [&](unsigned id) {
        std::size_t a = 1, b = 0, cursor = 0;
        for (;;) {
          const std::size_t start = next.fetch_add(chunk);
          if (start >= pairs || start >= best_pair.load()) return;
          // Locate (a, b) for `start` from the current cursor (start only grows).
          while (cursor < start) {
            if (++b == a) {
              ++a;
              b = 0;
            }
            ++cursor;
          }
          for (std::size_t p = start; p < std::min<std::size_t>(start + chunk, pairs); ++p) {
            if (p >= best_pair.load()) return;
            std::size_t inst = 0;
            auto bad = check_pair(a, b, inst);
            inst_counts[id] += inst;
            ++pair_counts[id];
            if (bad) {
              if (p < found[id].pair) found[id] = {p, *bad};
              std::size_t cur = best_pair.load();
              while (p < cur && !best_pair.compare_exchange_weak(cur, p)) {
              }
              return;
            }
            if (++b == a) {
              ++a;
              b = 0;
            }
            ++cursor;
          }
        }
      };
      if (threads == 1) {
        worker(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
      }
      Found best;
      for (const auto& f : found)
        if (f.pair < best.pair) best = f;
      for (unsigned t = 0; t < threads; ++t) {
        report.instances_checked += inst_counts[t];
        report.pairs_checked += pair_counts[t];
      }
      if (best.pair != SIZE_MAX) {
        std::size_t a = 1;
        while ((a + 1) * a / 2 <= best.pair) ++a;
        const std::size_t b = best.pair - a * (a - 1) / 2;
        report.flat_up_to_bounds = false;
        report.counterexample = FlatnessInstance{homs[a], homs[b], detail::tuple_at(best.d, base, m)};
        return report;
      }
    }
  }
  return report;
}

namespace detail {

inline void require_chain(const FiniteLattice& lattice) {
  if (!lattice.is_chain()) throw InputError("linear order witness needs a chain");
}

}  // namespace detail

/// The chain witness for d: d' lists the distinct entries of d strictly
/// between 0 and 1 in increasing order, gamma = gamma1 . gamma2 with gamma2
/// the cumulative joins (x0, x0 v x1, ...) and gamma1 picking the position
/// of each entry of d in d' (endpoints become the constants 0 and 1).
inline FlatnessWitness linear_order_witness(const FiniteLattice& lattice, const std::vector<std::size_t>& d) {
  detail::require_chain(lattice);
  for (std::size_t v : d)
    if (v >= lattice.size()) throw InputError("tuple entry out of range");
  std::vector<std::size_t> dp;
  for (std::size_t v : d)
    if (v != lattice.bottom() && v != lattice.top()) dp.push_back(v);
  std::sort(dp.begin(), dp.end(), [&](std::size_t a, std::size_t b) { return lattice.leq(a, b) && a != b; });
  dp.erase(std::unique(dp.begin(), dp.end()), dp.end());
  const auto k = static_cast<unsigned>(dp.size());

  std::vector<LatticeElement> g1;
  for (std::size_t v : d) {
    if (v == lattice.bottom()) g1.push_back(LatticeElement::bottom(k));
    else if (v == lattice.top()) g1.push_back(LatticeElement::top(k));
    else {
      const auto pos = static_cast<unsigned>(std::find(dp.begin(), dp.end(), v) - dp.begin());
      g1.push_back(LatticeElement::generator(k, pos));
    }
  }
  std::vector<LatticeElement> g2;
  LatticeElement acc = LatticeElement::bottom(k);
  for (unsigned i = 0; i < k; ++i) {
    acc = join(acc, LatticeElement::generator(k, i));
    g2.push_back(acc);
  }
  const auto gamma1 = CubeMorphism::from_components(k, std::move(g1));
  const auto gamma2 = CubeMorphism::from_components(k, std::move(g2));
  return {compose(gamma1, gamma2), std::move(dp)};
}

/// The chain witness for an instance, validated before it is returned.
inline FlatnessWitness linear_order_witness(const FiniteLattice& lattice, const FlatnessInstance& inst) {
  detail::require_chain(lattice);
  if (!hypothesis_holds(lattice, inst)) throw InputError("instance does not satisfy alpha(d) = beta(d)");
  auto w = linear_order_witness(lattice, inst.d);
  if (!validate_witness(lattice, inst, w)) throw std::logic_error("chain witness failed to validate");
  return w;
}

}  // namespace cubical
