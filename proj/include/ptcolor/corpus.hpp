#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ptcolor/detect.hpp"
#include "ptcolor/dimacs.hpp"
#include "ptcolor/graph.hpp"

namespace ptc {

/// Per-instance generator: mt19937_64 seeded with mix(seed, id). Only raw
/// engine output is consumed, never std:: distributions, so streams agree
/// across standard libraries.
class InstanceRng {
public:
    InstanceRng(std::uint64_t seed, std::uint64_t id);
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

struct CorpusEntry {
    int id = 0;
    /// "random", "grown", "planted_c5" or "planted_c7bar".
    std::string kind;
    Graph graph;
};

/// Deletes a certificate vertex (never one in `protect`) until `g` is in
/// `cls` and, with `forbid_c5`, also C5-free. Returns the surviving original
/// ids; `g` is replaced by the induced subgraph on them.
std::vector<int> repair_into_class(Graph& g, GraphClass cls, InstanceRng& rng, const std::vector<int>& protect = {},
                                   bool forbid_c5 = false);

/// `count` graphs with at most `n` vertices (n <= 20), all passing
/// class_violation. Ids cycle through four kinds: G(n, p) repaired by vertex
/// deletion, graphs grown vertex by vertex inside the class, and C5 / C7
/// complement bases grown the same way. The C7 complement plants are kept
/// C5-free so they reach their own route.
std::vector<CorpusEntry> gen_corpus(int n, int count, std::uint64_t seed,
                                    GraphClass cls = GraphClass::P6_banner_free);

/// Random 3-CNF with pairwise distinct variables per clause.
CnfFormula random_cnf(int n_vars, int m, InstanceRng& rng);

}  // namespace ptc
