#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace popstack {

/// A permutation of {1..n}, stored one-line: values()[i] is the letter at
/// position i+1. Positions and values are 1-based throughout the API, matching
/// the usual combinatorics conventions. The empty permutation (n = 0) is valid.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a bijection {1..n} -> {1..n}.
    /// Throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);    // 1 2 ... n
    static Permutation decreasing(int n);  // n ... 2 1

    /// Parses comma-separated one-line notation, e.g. "6,4,3,2,1,5".
    /// An empty string parses as the empty permutation.
    static Permutation from_string(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Letter at 1-based position `pos`.
    int at(int pos) const { return values_[static_cast<size_t>(pos) - 1]; }

    const std::vector<int>& values() const { return values_; }

    bool is_identity() const;

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// A maximal contiguous strictly decreasing run. `start` is the 1-based
/// position of the first letter.
struct Block {
    int start = 0;
    std::vector<int> values;

    int length() const { return static_cast<int>(values.size()); }
    int max() const { return values.front(); }  // first letter of the run
    int min() const { return values.back(); }   // last letter of the run
};

/// The ordered list of blocks of a permutation. Concatenating the blocks
/// reproduces the permutation; boundaries sit exactly at the ascents, so
/// block count = ascents + 1 for n >= 1.
struct BlockDecomposition {
    std::vector<Block> blocks;

    size_t size() const { return blocks.size(); }
    const Block& operator[](size_t i) const { return blocks[i]; }
};

/// An ordered sequence of positive parts; encodes the layer lengths of a
/// layered permutation.
struct Composition {
    std::vector<int> parts;

    int total() const;
    bool operator==(const Composition&) const = default;
};

/// Order-isomorphic relabeling: the i-th smallest letter becomes i.
/// Accepts any pairwise-distinct integer word, not only permutations.
/// Throws std::invalid_argument on duplicate entries.
Permutation reduce(std::span<const int> word);
Permutation reduce(const std::vector<int>& word);

/// alpha followed by beta with beta's letters shifted up by |alpha|.
Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

int ascent_count(const Permutation& pi);
int descent_count(const Permutation& pi);
int inversion_count(const Permutation& pi);

BlockDecomposition blocks(const Permutation& pi);

/// The point set {(i, pi_i)}, ordered by column.
std::vector<std::pair<int, int>> graph_points(const Permutation& pi);

/// Direct sum of decreasing runs with the given lengths.
Permutation layered_from_composition(const Composition& c);

/// Layer lengths of a layered permutation.
/// Throws std::domain_error if `pi` is not layered.
Composition to_composition(const Permutation& pi);

} // namespace popstack
