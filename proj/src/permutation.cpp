#include "popstack/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace popstack {

namespace {

void validate_one_line(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation letter " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("duplicate letter " + std::to_string(v) +
                                        " in permutation");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    validate_one_line(values_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::from_string(std::string_view text) {
    std::vector<int> values;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        // tolerate surrounding spaces
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) {
            throw std::invalid_argument("empty entry in permutation text");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad permutation entry '" + std::string(token) + "'");
        }
        values.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
        if (pos == text.size()) {
            throw std::invalid_argument("trailing comma in permutation text");
        }
    }
    return Permutation(std::move(values));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (values_[static_cast<size_t>(i)] != i + 1) return false;
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Permutation reduce(std::span<const int> word) {
    std::vector<int> sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("reduce: entries must be pairwise distinct");
    }
    std::vector<int> out(word.size());
    for (size_t i = 0; i < word.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), word[i]);
        out[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(out));
}

Permutation reduce(const std::vector<int>& word) {
    return reduce(std::span<const int>(word));
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(alpha.size() + beta.size()));
    out.insert(out.end(), alpha.values().begin(), alpha.values().end());
    for (int v : beta.values()) out.push_back(v + alpha.size());
    return Permutation(std::move(out));
}

int ascent_count(const Permutation& pi) {
    int count = 0;
    for (int i = 1; i < pi.size(); ++i) {
        if (pi.at(i) < pi.at(i + 1)) ++count;
    }
    return count;
}

int descent_count(const Permutation& pi) {
    return pi.size() >= 1 ? pi.size() - 1 - ascent_count(pi) : 0;
}

int inversion_count(const Permutation& pi) {
    int count = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        for (int j = i + 1; j <= pi.size(); ++j) {
            if (pi.at(i) > pi.at(j)) ++count;
        }
    }
    return count;
}

BlockDecomposition blocks(const Permutation& pi) {
    BlockDecomposition out;
    const int n = pi.size();
    int i = 1;
    while (i <= n) {
        Block b;
        b.start = i;
        b.values.push_back(pi.at(i));
        while (i + 1 <= n && pi.at(i) > pi.at(i + 1)) {
            ++i;
            b.values.push_back(pi.at(i));
        }
        out.blocks.push_back(std::move(b));
        ++i;
    }
    return out;
}

std::vector<std::pair<int, int>> graph_points(const Permutation& pi) {
    std::vector<std::pair<int, int>> points;
    points.reserve(static_cast<size_t>(pi.size()));
    for (int i = 1; i <= pi.size(); ++i) points.emplace_back(i, pi.at(i));
    return points;
}

Permutation layered_from_composition(const Composition& c) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(c.total()));
    int offset = 0;
    for (int part : c.parts) {
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
        for (int v = offset + part; v > offset; --v) out.push_back(v);
        offset += part;
    }
    return Permutation(std::move(out));
}

Composition to_composition(const Permutation& pi) {
    // Layers of a layered permutation are exactly its blocks, and block i must
    // cover the value range just above block i-1.
    Composition c;
    int offset = 0;
    for (const Block& b : blocks(pi).blocks) {
        if (b.max() != offset + b.length() || b.min() != offset + 1) {
            throw std::domain_error("to_composition: permutation is not layered");
        }
        c.parts.push_back(b.length());
        offset += b.length();
    }
    return c;
}

} // namespace popstack
