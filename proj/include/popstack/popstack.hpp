#pragma once

#include "popstack/permutation.hpp"

namespace popstack {

/// One deterministic pass through a pop stack: every maximal decreasing run
/// (block) of pi is reversed in place. Fixed points are exactly the identity.
Permutation pop_pass(const Permutation& pi);

/// The definitional form: reverse the longest decreasing prefix, recurse on
/// the rest. Agrees with pop_pass everywhere; kept as a cross-check.
Permutation pop_pass_recursive(const Permutation& pi);

/// True iff `passes` applications of pop_pass send pi to the identity.
bool is_sortable(const Permutation& pi, int passes);

/// pi, P(pi), P(P(pi)), ... ending at the identity.
struct SortTrace {
    std::vector<Permutation> stages;

    int passes() const { return static_cast<int>(stages.size()) - 1; }
};

/// Runs pop_pass to the identity. Each pass strictly decreases the inversion
/// count, so at most n(n-1)/2 passes happen; exceeding that bound throws
/// std::logic_error.
SortTrace sort_trace(const Permutation& pi);

/// Number of passes needed to sort pi (0 for the identity).
int min_passes(const Permutation& pi);

/// Direct sum of decreasing permutations, i.e. one-pop-stack sortable,
/// i.e. avoids 231 and 312.
bool is_layered(const Permutation& pi);

} // namespace popstack
