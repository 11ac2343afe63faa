#pragma once

#include "popstack/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

namespace popstack {

inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Calls fn(pi) for every pi in S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(std::vector<int>(v)));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// Calls fn(pi) for every pi in S_n with pi_1 = first, in lexicographic order.
template <class F>
void for_each_permutation_with_first(int n, int first, F&& fn) {
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(n));
    rest.push_back(first);
    for (int v = 1; v <= n; ++v) {
        if (v != first) rest.push_back(v);
    }
    do {
        fn(Permutation(std::vector<int>(rest)));
    } while (std::next_permutation(rest.begin() + 1, rest.end()));
}

/// Sweeps S_n partitioned by first letter across `jobs` threads. Each worker
/// owns one accumulator of type Acc (fn mutates it per permutation); partials
/// are merged in first-letter order, so totals are schedule-independent.
template <class Acc, class F, class Merge>
Acc sweep_permutations(int n, int jobs, Acc init, F&& fn, Merge&& merge) {
    if (n == 0) {
        Acc acc = init;
        fn(acc, Permutation());
        return acc;
    }
    jobs = std::min(resolve_jobs(jobs), n);
    if (jobs <= 1) {
        Acc acc = init;
        for_each_permutation(n, [&](const Permutation& pi) { fn(acc, pi); });
        return acc;
    }
    std::vector<Acc> partials(static_cast<size_t>(n), init);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (int first = w + 1; first <= n; first += jobs) {
                for_each_permutation_with_first(n, first, [&](const Permutation& pi) {
                    fn(partials[static_cast<size_t>(first - 1)], pi);
                });
            }
        });
    }
    for (auto& t : workers) t.join();
    Acc acc = init;
    for (const Acc& part : partials) merge(acc, part);
    return acc;
}

} // namespace popstack
