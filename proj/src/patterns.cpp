#include "popstack/patterns.hpp"

#include "popstack/sweep.hpp"

#include <algorithm>
#include <stdexcept>

namespace popstack {

namespace {

// Depth-first embedding search shared by the classical and barred matchers.
// pins[t] > 0 forces slot t onto that 1-based position of pi. on_match is
// called with the chosen positions once all slots are placed; returning true
// stops the whole search.
template <class OnMatch>
bool search_embeddings(const std::vector<int>& host, const std::vector<int>& pattern,
                       const std::vector<int>& pins, std::vector<int>& chosen, size_t slot,
                       OnMatch&& on_match) {
    const size_t k = pattern.size();
    if (slot == k) return on_match(chosen);
    const size_t n = host.size();
    const size_t lo = slot == 0 ? 1 : static_cast<size_t>(chosen[slot - 1]) + 1;
    for (size_t pos = lo; pos + (k - slot - 1) <= n; ++pos) {
        if (pins[slot] > 0 && pos != static_cast<size_t>(pins[slot])) continue;
        const int v = host[pos - 1];
        bool ok = true;
        for (size_t s = 0; s < slot; ++s) {
            const bool host_less = v < host[static_cast<size_t>(chosen[s]) - 1];
            const bool pat_less = pattern[slot] < pattern[s];
            if (host_less != pat_less) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[slot] = static_cast<int>(pos);
        if (search_embeddings(host, pattern, pins, chosen, slot + 1, on_match)) return true;
    }
    return false;
}

template <class OnMatch>
bool for_each_occurrence(const Permutation& pi, const std::vector<int>& pattern,
                         OnMatch&& on_match) {
    if (pattern.empty()) return on_match(std::vector<int>{});
    std::vector<int> pins(pattern.size(), 0);
    std::vector<int> chosen(pattern.size(), 0);
    return search_embeddings(pi.values(), pattern, pins, chosen, 0, on_match);
}

bool has_pinned_embedding(const Permutation& pi, const std::vector<int>& pattern,
                          const std::vector<int>& pins) {
    std::vector<int> chosen(pattern.size(), 0);
    return search_embeddings(pi.values(), pattern, pins, chosen, 0,
                             [](const std::vector<int>&) { return true; });
}

} // namespace

BarredPattern BarredPattern::from_string(std::string_view text) {
    BarredPattern out;
    std::vector<int> values;
    bool bar_next = false;
    for (char c : text) {
        if (c == '~') {
            if (bar_next) throw std::invalid_argument("doubled '~' in barred pattern");
            bar_next = true;
        } else if (c >= '1' && c <= '9') {
            values.push_back(c - '0');
            out.barred.push_back(bar_next);
            bar_next = false;
        } else {
            throw std::invalid_argument(std::string("bad character '") + c + "' in barred pattern");
        }
    }
    if (bar_next) throw std::invalid_argument("trailing '~' in barred pattern");
    out.pattern = Permutation(std::move(values));
    if (std::all_of(out.barred.begin(), out.barred.end(), [](bool b) { return b; }) &&
        !out.barred.empty()) {
        throw std::invalid_argument("barred positions must be a strict subset");
    }
    return out;
}

std::string BarredPattern::to_string() const {
    std::string out;
    for (int i = 1; i <= pattern.size(); ++i) {
        if (barred[static_cast<size_t>(i - 1)]) out += '~';
        out += std::to_string(pattern.at(i));
    }
    return out;
}

Permutation BarredPattern::reduced_nonbarred() const {
    std::vector<int> entries;
    for (int i = 1; i <= pattern.size(); ++i) {
        if (!barred[static_cast<size_t>(i - 1)]) entries.push_back(pattern.at(i));
    }
    return reduce(entries);
}

std::vector<int> BarredPattern::nonbarred_positions() const {
    std::vector<int> out;
    for (int i = 1; i <= pattern.size(); ++i) {
        if (!barred[static_cast<size_t>(i - 1)]) out.push_back(i);
    }
    return out;
}

DividedPattern DividedPattern::from_string(std::string_view text) {
    DividedPattern out;
    std::vector<int> current;
    for (char c : text) {
        if (c == '|') {
            if (current.empty()) throw std::invalid_argument("empty segment in divided pattern");
            out.segments.push_back(std::move(current));
            current.clear();
        } else if (c >= '1' && c <= '9') {
            current.push_back(c - '0');
        } else {
            throw std::invalid_argument(std::string("bad character '") + c +
                                        "' in divided pattern");
        }
    }
    if (current.empty()) throw std::invalid_argument("empty segment in divided pattern");
    out.segments.push_back(std::move(current));
    out.underlying();  // validates the concatenation
    return out;
}

std::string DividedPattern::to_string() const {
    std::string out;
    for (size_t s = 0; s < segments.size(); ++s) {
        if (s) out += '|';
        for (int v : segments[s]) out += std::to_string(v);
    }
    return out;
}

Permutation DividedPattern::underlying() const {
    std::vector<int> all;
    for (const auto& seg : segments) all.insert(all.end(), seg.begin(), seg.end());
    return Permutation(std::move(all));
}

bool contains_classical(const Permutation& pi, const ClassicalPattern& rho) {
    return for_each_occurrence(pi, rho.pattern.values(),
                               [](const std::vector<int>&) { return true; });
}

std::optional<std::vector<int>> find_occurrence(const Permutation& pi,
                                                const ClassicalPattern& rho) {
    std::optional<std::vector<int>> witness;
    for_each_occurrence(pi, rho.pattern.values(), [&](const std::vector<int>& positions) {
        witness = positions;
        return true;
    });
    return witness;
}

std::optional<std::vector<int>> find_barred_witness(const Permutation& pi,
                                                    const BarredPattern& rho) {
    const bool any_bar = std::any_of(rho.barred.begin(), rho.barred.end(), [](bool b) { return b; });
    if (!any_bar) {
        // No bars: plain classical containment.
        return find_occurrence(pi, ClassicalPattern{rho.pattern});
    }
    const Permutation part = rho.reduced_nonbarred();
    const std::vector<int> slots = rho.nonbarred_positions();
    std::optional<std::vector<int>> witness;
    for_each_occurrence(pi, part.values(), [&](const std::vector<int>& positions) {
        std::vector<int> pins(static_cast<size_t>(rho.pattern.size()), 0);
        for (size_t j = 0; j < slots.size(); ++j) {
            pins[static_cast<size_t>(slots[j] - 1)] = positions[j];
        }
        if (!has_pinned_embedding(pi, rho.pattern.values(), pins)) {
            witness = positions;  // this occurrence cannot be extended
            return true;
        }
        return false;
    });
    return witness;
}

bool contains_barred(const Permutation& pi, const BarredPattern& rho) {
    return find_barred_witness(pi, rho).has_value();
}

bool contains_divided(const Permutation& pi, const DividedPattern& rho) {
    const Permutation underlying = rho.underlying();
    const size_t k = static_cast<size_t>(underlying.size());
    if (k > static_cast<size_t>(pi.size())) return false;

    // Block index (0-based) of each position of pi.
    std::vector<int> block_of(static_cast<size_t>(pi.size()) + 1, 0);
    const BlockDecomposition decomp = blocks(pi);
    for (size_t b = 0; b < decomp.size(); ++b) {
        for (int off = 0; off < decomp[b].length(); ++off) {
            block_of[static_cast<size_t>(decomp[b].start + off)] = static_cast<int>(b);
        }
    }
    // Segment index of each pattern slot.
    std::vector<int> segment_of(k);
    {
        size_t t = 0;
        for (size_t s = 0; s < rho.segments.size(); ++s) {
            for (size_t j = 0; j < rho.segments[s].size(); ++j) segment_of[t++] = static_cast<int>(s);
        }
    }

    const std::vector<int>& host = pi.values();
    const std::vector<int>& pattern = underlying.values();
    std::vector<int> chosen(k, 0);

    auto dfs = [&](auto&& self, size_t slot) -> bool {
        if (slot == k) return true;
        const size_t lo = slot == 0 ? 1 : static_cast<size_t>(chosen[slot - 1]) + 1;
        for (size_t pos = lo; pos + (k - slot - 1) <= host.size(); ++pos) {
            if (slot > 0) {
                const int prev_block = block_of[static_cast<size_t>(chosen[slot - 1])];
                const int cur_block = block_of[pos];
                if (segment_of[slot] == segment_of[slot - 1]) {
                    if (cur_block != prev_block) break;  // left the block, no later pos returns
                } else {
                    if (cur_block <= prev_block) continue;
                }
            }
            const int v = host[pos - 1];
            bool ok = true;
            for (size_t s = 0; s < slot; ++s) {
                const bool host_less = v < host[static_cast<size_t>(chosen[s]) - 1];
                const bool pat_less = pattern[slot] < pattern[s];
                if (host_less != pat_less) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[slot] = static_cast<int>(pos);
            if (self(self, slot + 1)) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool is_sortable_by_blocks(const Permutation& pi) {
    const BlockDecomposition decomp = blocks(pi);
    for (size_t i = 0; i + 1 < decomp.size(); ++i) {
        if (decomp[i].max() > decomp[i + 1].min() + 1) return false;
    }
    return true;
}

namespace {

const std::vector<DividedPattern>& forbidden_divided() {
    static const std::vector<DividedPattern> patterns = {
        DividedPattern::from_string("2|3|1"),
        DividedPattern::from_string("32|1"),
        DividedPattern::from_string("3|1|2"),
        DividedPattern::from_string("3|21"),
    };
    return patterns;
}

} // namespace

bool is_sortable_by_divided(const Permutation& pi) {
    for (const DividedPattern& rho : forbidden_divided()) {
        if (contains_divided(pi, rho)) return false;
    }
    return true;
}

const std::vector<ClassicalPattern>& forbidden_classical() {
    static const std::vector<ClassicalPattern> patterns = {
        ClassicalPattern{Permutation({2, 3, 4, 1})}, ClassicalPattern{Permutation({3, 4, 1, 2})},
        ClassicalPattern{Permutation({3, 4, 2, 1})}, ClassicalPattern{Permutation({4, 1, 2, 3})},
        ClassicalPattern{Permutation({4, 2, 3, 1})}, ClassicalPattern{Permutation({4, 3, 1, 2})},
    };
    return patterns;
}

const std::vector<BarredPattern>& forbidden_barred() {
    static const std::vector<BarredPattern> patterns = {
        BarredPattern::from_string("4~1352"),
        BarredPattern::from_string("413~52"),
    };
    return patterns;
}

bool is_sortable_by_patterns(const Permutation& pi) {
    for (const ClassicalPattern& rho : forbidden_classical()) {
        if (contains_classical(pi, rho)) return false;
    }
    for (const BarredPattern& rho : forbidden_barred()) {
        if (contains_barred(pi, rho)) return false;
    }
    return true;
}

std::optional<ForbiddenWitness> find_forbidden_witness(const Permutation& pi) {
    for (const ClassicalPattern& rho : forbidden_classical()) {
        if (auto occ = find_occurrence(pi, rho)) {
            return ForbiddenWitness{rho.pattern.to_string(), *occ};
        }
    }
    for (const BarredPattern& rho : forbidden_barred()) {
        if (auto occ = find_barred_witness(pi, rho)) {
            return ForbiddenWitness{rho.to_string(), *occ};
        }
    }
    return std::nullopt;
}

mpz_class count_avoiders(const std::vector<ClassicalPattern>& patterns, int n, int jobs) {
    auto avoids_all = [&](const Permutation& pi) {
        for (const ClassicalPattern& rho : patterns) {
            if (contains_classical(pi, rho)) return false;
        }
        return true;
    };
    return sweep_permutations<mpz_class>(
        n, jobs, mpz_class(0),
        [&](mpz_class& acc, const Permutation& pi) {
            if (avoids_all(pi)) ++acc;
        },
        [](mpz_class& acc, const mpz_class& part) { acc += part; });
}

} // namespace popstack
