#pragma once

#include "popstack/errors.hpp"
#include "popstack/permutation.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace popstack {

/// A polyomino on the twisted cylinder of width w, stored as spiral cell
/// indices: cell (x, y) of the first-quadrant drawing is index (y-1)*w + x,
/// and the identification (x, y) ~ (x-w, y+1) collapses to plain integers.
/// Two cells are adjacent iff their indices differ by 1 or by w.
/// Canonical form anchors the smallest cell at 1.
struct CylinderPolyomino {
    int width = 0;
    std::vector<int> cells;  // strictly increasing, cells.front() == 1

    int size() const { return static_cast<int>(cells.size()); }

    /// Text form "w:i1,i2,...", e.g. "3:1,2,3,4,6".
    static CylinderPolyomino from_string(std::string_view text);
    std::string to_string() const;

    bool operator==(const CylinderPolyomino&) const = default;
};

class DisconnectedError : public std::domain_error {
public:
    DisconnectedError(std::string what, std::vector<std::vector<int>> components)
        : std::domain_error(std::move(what)), components_(std::move(components)) {}

    const std::vector<std::vector<int>>& components() const { return components_; }

private:
    std::vector<std::vector<int>> components_;
};

/// Shifts the cells so the minimum is 1 and validates connectivity.
/// Throws DisconnectedError (carrying the components) if the set is not
/// edge-connected on the cylinder.
CylinderPolyomino canonicalize(std::vector<int> cells, int width);

/// The run/gap view of a polyomino strip: runs of consecutive occupied cells
/// and the number of empty cells (1 or 2) between consecutive runs. Width-2
/// strips only ever have single-cell gaps; on width 3 a single-cell gap never
/// separates two singleton runs (connectivity would fail).
struct StripEncoding {
    std::vector<int> runs;
    std::vector<int> gaps;  // gaps[i] = empty cells between runs i and i+1

    bool operator==(const StripEncoding&) const = default;
};

StripEncoding strip_encoding(const CylinderPolyomino& p);
CylinderPolyomino strip_to_polyomino(const StripEncoding& enc, int width);

struct PolyominoPolicy {
    int size_cap = 13;
    int jobs = 1;
};

/// Number of size-n polyominoes on the width-w twisted cylinder, generated
/// independently of the permutation bijections: all increment sequences in
/// {1..w}^(n-1) from cell 1, filtered by connectivity. Policy-capped.
mpz_class enumerate_polyominoes(int width, int n, const PolyominoPolicy& policy = {});

/// Same filter, returning the canonical polyominoes.
std::vector<CylinderPolyomino> list_polyominoes(int width, int n,
                                                const PolyominoPolicy& policy = {});

/// Cells with no occupied cell at the next spiral index. Always >= 1 for a
/// nonempty polyomino; equals asc(pi) + 1 across the bijections.
int right_free_count(const CylinderPolyomino& p);

/// The strip bijection. Width 2 requires a layered permutation; width 3
/// requires a two-pop-stack sortable one (std::domain_error otherwise).
/// Blocks become runs; on width 3 the gap is one cell when
/// max(B_i) = min(B_{i+1}) + 1 and two cells when max(B_i) < min(B_{i+1}).
CylinderPolyomino perm_to_polyomino(const Permutation& pi, int width);

/// Inverse direction, defined for every connected canonical polyomino of
/// width 2 or 3.
Permutation polyomino_to_perm(const CylinderPolyomino& p);

/// ASCII rendering of the wrapped strip, one row of the cylinder per line,
/// highest row first: '#' occupied, '.' empty.
std::string render_strip(const CylinderPolyomino& p);

} // namespace popstack
