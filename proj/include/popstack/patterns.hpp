#pragma once

#include "popstack/permutation.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace popstack {

struct ClassicalPattern {
    Permutation pattern;

    int size() const { return pattern.size(); }
};

/// A pattern permutation with bars over some entries. pi contains the barred
/// pattern when it has an occurrence of the non-barred part that cannot be
/// extended (one extra letter per barred slot, in the pattern's position and
/// value order) to an occurrence of the full pattern.
struct BarredPattern {
    Permutation pattern;
    std::vector<bool> barred;  // one flag per pattern position

    /// Text form uses '~' before a barred entry: "4~1352" bars the 1.
    static BarredPattern from_string(std::string_view text);
    std::string to_string() const;

    /// reduce() of the non-barred entries.
    Permutation reduced_nonbarred() const;
    /// 1-based pattern positions that are not barred, in order.
    std::vector<int> nonbarred_positions() const;
};

/// A pattern permutation cut into segments by bars, e.g. 3|21. An occurrence
/// must place each segment inside a single block of the host and consecutive
/// segments in distinct, strictly later blocks.
struct DividedPattern {
    std::vector<std::vector<int>> segments;

    static DividedPattern from_string(std::string_view text);  // "2|3|1"
    std::string to_string() const;
    Permutation underlying() const;
};

bool contains_classical(const Permutation& pi, const ClassicalPattern& rho);

/// Witness positions (1-based, strictly increasing) of one occurrence, or
/// nullopt if pi avoids rho.
std::optional<std::vector<int>> find_occurrence(const Permutation& pi,
                                                const ClassicalPattern& rho);

bool contains_barred(const Permutation& pi, const BarredPattern& rho);

/// Positions of an occurrence of the non-barred part that does not extend,
/// or nullopt when every occurrence extends (pi avoids rho).
std::optional<std::vector<int>> find_barred_witness(const Permutation& pi,
                                                    const BarredPattern& rho);

bool contains_divided(const Permutation& pi, const DividedPattern& rho);

/// The characterizations of two-pop-stack sortability. All three agree with
/// two-pass simulation on every permutation.
bool is_sortable_by_blocks(const Permutation& pi);    // max(B_i) <= min(B_{i+1}) + 1
bool is_sortable_by_divided(const Permutation& pi);   // avoids 2|3|1, 32|1, 3|1|2, 3|21
bool is_sortable_by_patterns(const Permutation& pi);  // avoids the eight patterns

/// The six classical forbidden patterns: 2341, 3412, 3421, 4123, 4231, 4312.
const std::vector<ClassicalPattern>& forbidden_classical();
/// The two barred forbidden patterns: 4~1352 and 413~52.
const std::vector<BarredPattern>& forbidden_barred();

struct ForbiddenWitness {
    std::string pattern;         // text form of the violated pattern
    std::vector<int> positions;  // 1-based occurrence positions in pi
};

/// For an unsortable pi, one forbidden-pattern occurrence; nullopt otherwise.
std::optional<ForbiddenWitness> find_forbidden_witness(const Permutation& pi);

/// |{pi in S_n : pi avoids every pattern in the set}| by exhaustive check.
mpz_class count_avoiders(const std::vector<ClassicalPattern>& patterns, int n, int jobs = 1);

} // namespace popstack
