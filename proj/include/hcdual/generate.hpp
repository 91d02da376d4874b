#pragma once

// Deterministic generators for the experiment corpus. All randomness comes
// from raw std::mt19937_64 draws (the engine output sequence is pinned by
// the standard), so a (kind, params, seed) triple names one graph forever.

#include <optional>
#include <random>
#include <vector>

#include "hcdual/errors.hpp"
#include "hcdual/graph.hpp"
#include "hcdual/rational.hpp"

namespace hcdual {

enum class GenKind { cycle, complete, path, petersen, gnp, planted_hamiltonian };

struct GenResult {
    Graph graph;
    // present for planted_hamiltonian: the embedded cycle, for verification
    std::optional<std::vector<int>> planted_cycle;
};

namespace detail {

inline bool bernoulli_draw(std::mt19937_64& rng, const Rational& p) {
    // accept iff u < p * 2^64, evaluated exactly
    BigInt u = rng();
    return u * rat_den(p) < rat_num(p) * pow2(64);
}

inline void check_probability(const Rational& p) {
    if (p < 0 || p > 1) throw contract_error("generate: probability outside [0,1]");
}

} // namespace detail

inline GenResult generate_cycle(int n) {
    if (n < 3) throw contract_error("generate: cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {Graph(n, e), std::nullopt};
}

inline GenResult generate_complete(int n) {
    if (n < 3) throw contract_error("generate: complete needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return {Graph(n, e), std::nullopt};
}

inline GenResult generate_path(int n) {
    if (n < 3) throw contract_error("generate: path needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {Graph(n, e), std::nullopt};
}

inline GenResult generate_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer pentagon
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return {Graph(10, e), std::nullopt};
}

inline GenResult generate_gnp(int n, const Rational& p, unsigned long long seed) {
    if (n < 1) throw contract_error("generate: gnp needs n >= 1");
    detail::check_probability(p);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::bernoulli_draw(rng, p)) e.emplace_back(u, v);
    return {Graph(n, e), std::nullopt};
}

inline GenResult generate_planted_hamiltonian(int n, const Rational& p, unsigned long long seed) {
    if (n < 3) throw contract_error("generate: planted_hamiltonian needs n >= 3");
    detail::check_probability(p);
    std::mt19937_64 rng(seed);
    // random cycle through all vertices: 0 followed by a shuffle of 1..n-1
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i >= 2; --i) {
        int j = 1 + (int)(rng() % (unsigned long long)i); // swap within 1..i
        std::swap(order[i], order[j]);
    }
    std::vector<std::vector<bool>> on_cycle(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        int u = order[i], v = order[(i + 1) % n];
        on_cycle[u][v] = on_cycle[v][u] = true;
        e.emplace_back(u, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (on_cycle[u][v]) continue;
            if (detail::bernoulli_draw(rng, p)) e.emplace_back(u, v);
        }
    return {Graph(n, e), order};
}

struct GenParams {
    int n = 0;
    Rational p = 0;
    unsigned long long seed = 0;
};

inline GenResult generate(GenKind kind, const GenParams& params) {
    switch (kind) {
        case GenKind::cycle: return generate_cycle(params.n);
        case GenKind::complete: return generate_complete(params.n);
        case GenKind::path: return generate_path(params.n);
        case GenKind::petersen: return generate_petersen();
        case GenKind::gnp: return generate_gnp(params.n, params.p, params.seed);
        case GenKind::planted_hamiltonian:
            return generate_planted_hamiltonian(params.n, params.p, params.seed);
    }
    throw contract_error("generate: unknown kind");
}

inline GenKind parse_gen_kind(const std::string& s) {
    if (s == "cycle") return GenKind::cycle;
    if (s == "complete") return GenKind::complete;
    if (s == "path") return GenKind::path;
    if (s == "petersen") return GenKind::petersen;
    if (s == "gnp") return GenKind::gnp;
    if (s == "planted" || s == "planted_hamiltonian") return GenKind::planted_hamiltonian;
    throw parse_error("unknown generator kind '" + s + "'");
}

} // namespace hcdual
