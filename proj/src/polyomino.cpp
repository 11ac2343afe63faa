#include "popstack/polyomino.hpp"

#include "popstack/patterns.hpp"
#include "popstack/popstack.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace popstack {

namespace {

void check_width(int width) {
    if (width < 2) throw std::invalid_argument("cylinder width must be >= 2");
}

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

std::vector<std::vector<int>> connected_components(const std::vector<int>& cells, int width) {
    Dsu dsu(static_cast<int>(cells.size()));
    for (size_t i = 0; i < cells.size(); ++i) {
        for (int delta : {1, width}) {
            auto it = std::lower_bound(cells.begin(), cells.end(), cells[i] + delta);
            if (it != cells.end() && *it == cells[i] + delta) {
                dsu.unite(static_cast<int>(i), static_cast<int>(it - cells.begin()));
            }
        }
    }
    std::vector<std::vector<int>> components;
    std::vector<int> root_index(cells.size(), -1);
    for (size_t i = 0; i < cells.size(); ++i) {
        const int root = dsu.find(static_cast<int>(i));
        if (root_index[static_cast<size_t>(root)] < 0) {
            root_index[static_cast<size_t>(root)] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[static_cast<size_t>(root_index[static_cast<size_t>(root)])].push_back(cells[i]);
    }
    return components;
}

// Bitmask flood fill; valid while the largest cell index is < 64.
bool connected_mask(uint64_t mask, int width) {
    if (mask == 0) return false;
    const uint64_t seed = mask & ~(mask - 1);
    uint64_t visited = seed;
    for (;;) {
        uint64_t next = visited;
        next |= (visited << 1) & mask;
        next |= (visited >> 1) & mask;
        next |= (visited << width) & mask;
        next |= (visited >> width) & mask;
        if (next == visited) break;
        visited = next;
    }
    return visited == mask;
}

} // namespace

CylinderPolyomino CylinderPolyomino::from_string(std::string_view text) {
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("polyomino text must look like 'w:i1,i2,...'");
    }
    int width = 0;
    {
        const std::string_view head = text.substr(0, colon);
        auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), width);
        if (ec != std::errc() || ptr != head.data() + head.size()) {
            throw std::invalid_argument("bad polyomino width '" + std::string(head) + "'");
        }
    }
    std::vector<int> cells;
    std::string_view rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string_view::npos) comma = rest.size();
        const std::string_view token = rest.substr(pos, comma - pos);
        int cell = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), cell);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad polyomino cell '" + std::string(token) + "'");
        }
        cells.push_back(cell);
        pos = comma + 1;
    }
    return canonicalize(std::move(cells), width);
}

std::string CylinderPolyomino::to_string() const {
    std::string out = std::to_string(width) + ':';
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cells[i]);
    }
    return out;
}

CylinderPolyomino canonicalize(std::vector<int> cells, int width) {
    check_width(width);
    if (cells.empty()) throw std::invalid_argument("polyomino must have at least one cell");
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
        throw std::invalid_argument("duplicate polyomino cell");
    }
    const int shift = cells.front() - 1;
    for (int& c : cells) c -= shift;
    auto components = connected_components(cells, width);
    if (components.size() != 1) {
        throw DisconnectedError("polyomino cells are not connected on the width-" +
                                    std::to_string(width) + " cylinder",
                                std::move(components));
    }
    return CylinderPolyomino{width, std::move(cells)};
}

StripEncoding strip_encoding(const CylinderPolyomino& p) {
    StripEncoding enc;
    size_t i = 0;
    while (i < p.cells.size()) {
        size_t j = i;
        while (j + 1 < p.cells.size() && p.cells[j + 1] == p.cells[j] + 1) ++j;
        enc.runs.push_back(static_cast<int>(j - i + 1));
        if (j + 1 < p.cells.size()) {
            enc.gaps.push_back(p.cells[j + 1] - p.cells[j] - 1);
        }
        i = j + 1;
    }
    return enc;
}

CylinderPolyomino strip_to_polyomino(const StripEncoding& enc, int width) {
    if (enc.runs.empty() || enc.gaps.size() + 1 != enc.runs.size()) {
        throw std::invalid_argument("strip encoding must have one more run than gaps");
    }
    std::vector<int> cells;
    int next = 1;
    for (size_t i = 0; i < enc.runs.size(); ++i) {
        if (enc.runs[i] < 1) throw std::invalid_argument("strip runs must be positive");
        for (int j = 0; j < enc.runs[i]; ++j) cells.push_back(next++);
        if (i < enc.gaps.size()) {
            if (enc.gaps[i] < 1) throw std::invalid_argument("strip gaps must be positive");
            next += enc.gaps[i];
        }
    }
    return canonicalize(std::move(cells), width);
}

namespace {

mpz_class count_with_first_increment(int width, int n, int first) {
    // Remaining increments enumerated in odometer order.
    const int steps = n - 2;  // increments after the first
    mpz_class count = 0;
    std::vector<int> inc(static_cast<size_t>(std::max(steps, 0)), 1);
    for (;;) {
        uint64_t mask = 1;  // cell 1
        int cell = 1 + first;
        mask |= uint64_t(1) << (cell - 1);
        for (int s = 0; s < steps; ++s) {
            cell += inc[static_cast<size_t>(s)];
            mask |= uint64_t(1) << (cell - 1);
        }
        if (connected_mask(mask, width)) ++count;
        int s = steps - 1;
        while (s >= 0 && inc[static_cast<size_t>(s)] == width) {
            inc[static_cast<size_t>(s)] = 1;
            --s;
        }
        if (s < 0) break;
        ++inc[static_cast<size_t>(s)];
    }
    return count;
}

void check_size(int width, int n, const PolyominoPolicy& policy) {
    check_width(width);
    if (n < 1) throw std::invalid_argument("polyomino size must be >= 1");
    if (n > policy.size_cap) {
        throw PolicyError("polyomino enumeration: size " + std::to_string(n) +
                          " exceeds the configured cap " + std::to_string(policy.size_cap));
    }
    if (1 + (n - 1) * width > 63) {
        throw PolicyError("polyomino enumeration: strip span too large for the cell mask");
    }
}

} // namespace

mpz_class enumerate_polyominoes(int width, int n, const PolyominoPolicy& policy) {
    check_size(width, n, policy);
    if (n == 1) return 1;
    const int jobs = std::min(std::max(policy.jobs, 1), width);
    if (jobs <= 1) {
        mpz_class total = 0;
        for (int first = 1; first <= width; ++first) {
            total += count_with_first_increment(width, n, first);
        }
        return total;
    }
    std::vector<mpz_class> partial(static_cast<size_t>(width), 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (int first = w + 1; first <= width; first += jobs) {
                partial[static_cast<size_t>(first - 1)] =
                    count_with_first_increment(width, n, first);
            }
        });
    }
    for (auto& t : workers) t.join();
    mpz_class total = 0;
    for (const mpz_class& part : partial) total += part;
    return total;
}

std::vector<CylinderPolyomino> list_polyominoes(int width, int n, const PolyominoPolicy& policy) {
    check_size(width, n, policy);
    std::vector<CylinderPolyomino> out;
    std::vector<int> cells(static_cast<size_t>(n));
    cells[0] = 1;
    std::vector<int> inc(static_cast<size_t>(std::max(n - 1, 0)), 1);
    for (;;) {
        uint64_t mask = 1;
        for (int s = 0; s < n - 1; ++s) {
            cells[static_cast<size_t>(s + 1)] = cells[static_cast<size_t>(s)] + inc[static_cast<size_t>(s)];
            mask |= uint64_t(1) << (cells[static_cast<size_t>(s + 1)] - 1);
        }
        if (connected_mask(mask, width)) {
            out.push_back(CylinderPolyomino{width, cells});
        }
        int s = n - 2;
        while (s >= 0 && inc[static_cast<size_t>(s)] == width) {
            inc[static_cast<size_t>(s)] = 1;
            --s;
        }
        if (s < 0) break;
        ++inc[static_cast<size_t>(s)];
    }
    return out;
}

int right_free_count(const CylinderPolyomino& p) {
    int count = 0;
    for (size_t i = 0; i < p.cells.size(); ++i) {
        const bool has_right = i + 1 < p.cells.size() && p.cells[i + 1] == p.cells[i] + 1;
        if (!has_right) ++count;
    }
    return count;
}

CylinderPolyomino perm_to_polyomino(const Permutation& pi, int width) {
    if (width != 2 && width != 3) {
        throw std::invalid_argument("strip bijection is defined for widths 2 and 3");
    }
    if (pi.empty()) throw std::domain_error("strip bijection needs a nonempty permutation");
    const BlockDecomposition decomp = blocks(pi);
    StripEncoding enc;
    if (width == 2) {
        if (!is_layered(pi)) {
            throw std::domain_error("width-2 bijection requires a layered permutation");
        }
        for (const Block& b : decomp.blocks) enc.runs.push_back(b.length());
        enc.gaps.assign(decomp.size() - 1, 1);
    } else {
        if (!is_sortable_by_blocks(pi)) {
            throw std::domain_error("width-3 bijection requires a two-pop-stack sortable permutation");
        }
        for (const Block& b : decomp.blocks) enc.runs.push_back(b.length());
        for (size_t i = 0; i + 1 < decomp.size(); ++i) {
            enc.gaps.push_back(decomp[i].max() == decomp[i + 1].min() + 1 ? 1 : 2);
        }
    }
    return strip_to_polyomino(enc, width);
}

Permutation polyomino_to_perm(const CylinderPolyomino& p) {
    if (p.width == 2) {
        // Runs are layer lengths: every junction on width 2 is an ascent.
        Composition c;
        c.parts = strip_encoding(p).runs;
        return layered_from_composition(c);
    }
    if (p.width != 3) {
        throw std::invalid_argument("strip bijection is defined for widths 2 and 3");
    }
    const StripEncoding enc = strip_encoding(p);
    const size_t runs = enc.runs.size();
    const int n = p.size();

    // Single-cell gaps are junction descents in the first-pass output
    // rev(B_1)...rev(B_l); two-cell gaps are junction ascents. Slot t of that
    // output is bound to slot t-1 when they share a layer.
    std::vector<bool> bound(static_cast<size_t>(n), false);
    {
        size_t t = 0;
        for (size_t i = 0; i + 1 < runs; ++i) {
            t += static_cast<size_t>(enc.runs[i]);
            if (enc.gaps[i] == 1) {
                if (enc.runs[i] == 1 && enc.runs[i + 1] == 1) {
                    throw std::logic_error(
                        "polyomino_to_perm: single-cell gap between singleton runs");
                }
                bound[t] = true;
            } else if (enc.gaps[i] != 2) {
                throw std::logic_error("polyomino_to_perm: connected width-3 strip with gap > 2");
            }
        }
    }

    // Assign each layer a consecutive value range, decreasing within.
    std::vector<int> first_pass(static_cast<size_t>(n), 0);
    int next_value = 1;
    size_t start = 0;
    while (start < static_cast<size_t>(n)) {
        size_t end = start + 1;
        while (end < static_cast<size_t>(n) && bound[end]) ++end;
        const size_t len = end - start;
        if (len > 3) throw std::logic_error("polyomino_to_perm: layer longer than 3");
        for (size_t j = 0; j < len; ++j) {
            first_pass[start + j] = next_value + static_cast<int>(len - 1 - j);
        }
        next_value += static_cast<int>(len);
        start = end;
    }

    // Undo the pop pass: each block of pi is its first-pass segment reversed.
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    size_t offset = 0;
    for (size_t i = 0; i < runs; ++i) {
        const size_t len = static_cast<size_t>(enc.runs[i]);
        for (size_t j = 0; j < len; ++j) values.push_back(first_pass[offset + len - 1 - j]);
        offset += len;
    }
    Permutation result(std::move(values));
    if (!is_sortable_by_blocks(result)) {
        throw std::logic_error("polyomino_to_perm: reconstruction is not sortable");
    }
    return result;
}

std::string render_strip(const CylinderPolyomino& p) {
    const int max_cell = p.cells.back();
    const int rows = (max_cell + p.width - 1) / p.width;
    std::string out;
    for (int r = rows; r >= 1; --r) {
        for (int x = 1; x <= p.width; ++x) {
            const int idx = (r - 1) * p.width + x;
            const bool filled = std::binary_search(p.cells.begin(), p.cells.end(), idx);
            out += filled ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

} // namespace popstack
