#include "popstack/popstack.hpp"

#include <algorithm>
#include <stdexcept>

namespace popstack {

Permutation pop_pass(const Permutation& pi) {
    std::vector<int> out(pi.values());
    const int n = pi.size();
    int i = 0;
    while (i < n) {
        int j = i;
        while (j + 1 < n && out[static_cast<size_t>(j)] > out[static_cast<size_t>(j + 1)]) ++j;
        std::reverse(out.begin() + i, out.begin() + j + 1);
        i = j + 1;
    }
    return Permutation(std::move(out));
}

namespace {

std::vector<int> pop_pass_rec(std::span<const int> word) {
    if (word.size() <= 1) return {word.begin(), word.end()};
    size_t i = 0;
    while (i + 1 < word.size() && word[i] > word[i + 1]) ++i;
    std::vector<int> out(word.begin(), word.begin() + static_cast<long>(i) + 1);
    std::reverse(out.begin(), out.end());
    std::vector<int> rest = pop_pass_rec(word.subspan(i + 1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace

Permutation pop_pass_recursive(const Permutation& pi) {
    return Permutation(pop_pass_rec(std::span<const int>(pi.values())));
}

bool is_sortable(const Permutation& pi, int passes) {
    Permutation current = pi;
    for (int i = 0; i < passes && !current.is_identity(); ++i) {
        current = pop_pass(current);
    }
    return current.is_identity();
}

SortTrace sort_trace(const Permutation& pi) {
    SortTrace trace;
    trace.stages.push_back(pi);
    const int cap = pi.size() * (pi.size() - 1) / 2 + 1;
    while (!trace.stages.back().is_identity()) {
        if (static_cast<int>(trace.stages.size()) > cap) {
            throw std::logic_error("sort_trace: pass bound exceeded");
        }
        trace.stages.push_back(pop_pass(trace.stages.back()));
    }
    return trace;
}

int min_passes(const Permutation& pi) {
    return sort_trace(pi).passes();
}

bool is_layered(const Permutation& pi) {
    // Blocks of a layered permutation are its layers: each block is a run of
    // consecutive values sitting directly above everything before it.
    int offset = 0;
    for (const Block& b : blocks(pi).blocks) {
        if (b.max() != offset + b.length() || b.min() != offset + 1) return false;
        offset += b.length();
    }
    return true;
}

} // namespace popstack
