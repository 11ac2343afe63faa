#include "popstack/enumeration.hpp"

#include "popstack/popstack.hpp"
#include "popstack/patterns.hpp"
#include "popstack/sweep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace popstack {

namespace {

const mpz_class kZero = 0;

void check_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw PolicyError(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the configured cap " + std::to_string(cap));
    }
}

} // namespace

const mpz_class& CountTriangle::at(int n, int k) const {
    if (n < 0 || k < 0 || n >= static_cast<int>(rows_.size())) return kZero;
    const auto& row = rows_[static_cast<size_t>(n)];
    if (k >= static_cast<int>(row.size())) return kZero;
    return row[static_cast<size_t>(k)];
}

void CountTriangle::set(int n, int k, mpz_class value) {
    if (n < 0 || k < 0) throw std::invalid_argument("CountTriangle::set: negative index");
    if (n >= static_cast<int>(rows_.size())) rows_.resize(static_cast<size_t>(n) + 1);
    auto& row = rows_[static_cast<size_t>(n)];
    if (k >= static_cast<int>(row.size())) row.resize(static_cast<size_t>(k) + 1, 0);
    row[static_cast<size_t>(k)] = std::move(value);
}

mpz_class CountTriangle::row_sum(int n) const {
    mpz_class sum = 0;
    for (const mpz_class& v : row(n)) sum += v;
    return sum;
}

AscentTables ascent_tables(int max_n) {
    if (max_n < 0) throw std::invalid_argument("ascent_tables: max_n must be >= 0");
    AscentTables t{CountTriangle(max_n), CountTriangle(max_n)};
    t.a.set(0, 0, 1);
    t.b.set(0, 0, 0);
    // column_sums[k] = sum_{i=1}^{n-1} a(i,k), updated as rows are produced
    std::vector<mpz_class> column_sums(static_cast<size_t>(std::max(max_n, 1)), 0);
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            if (k == 0 || k == n - 1) {
                t.a.set(n, k, 1);
            } else {
                t.a.set(n, k, 2 * column_sums[static_cast<size_t>(k - 1)] - t.b.at(n - 1, k - 1));
            }
            if (k == n - 1) {
                t.b.set(n, k, 1);
            } else if (k < 1) {
                t.b.set(n, k, 0);
            } else {
                t.b.set(n, k, 2 * t.a.at(n - 1, k - 1) - t.b.at(n - 1, k - 1));
            }
        }
        for (int k = 0; k <= n - 1; ++k) {
            column_sums[static_cast<size_t>(k)] += t.a.at(n, k);
        }
    }
    return t;
}

CountTriangle a_table(int max_n) { return ascent_tables(max_n).a; }
CountTriangle b_table(int max_n) { return ascent_tables(max_n).b; }

namespace {

PolyY poly_mul(const PolyY& lhs, const PolyY& rhs) {
    if (lhs.empty() || rhs.empty()) return {};
    PolyY out(lhs.size() + rhs.size() - 1, 0);
    for (size_t i = 0; i < lhs.size(); ++i) {
        for (size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
    }
    return out;
}

void poly_sub_inplace(PolyY& lhs, const PolyY& rhs) {
    if (rhs.size() > lhs.size()) lhs.resize(rhs.size(), 0);
    for (size_t i = 0; i < rhs.size(); ++i) lhs[i] -= rhs[i];
}

void poly_trim(PolyY& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

BivariateRationalGF two_pop_ascent_gf() {
    BivariateRationalGF gf;
    gf.numerator = {{1}, {0, -1}, {0, -1}, {0, 1, -2}};
    gf.denominator = {{1}, {-1, -1}, {0, -1}, {0, 0, -2}};
    return gf;
}

CountTriangle expand_bivariate(const BivariateRationalGF& gf, int max_n) {
    if (gf.denominator.empty()) throw std::invalid_argument("expand_bivariate: empty denominator");
    PolyY d0 = gf.denominator[0];
    poly_trim(d0);
    if (d0 != PolyY{1}) {
        throw std::invalid_argument("expand_bivariate: denominator constant term must be 1");
    }
    CountTriangle triangle(max_n);
    std::vector<PolyY> series(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        PolyY coeff = static_cast<size_t>(n) < gf.numerator.size()
                          ? gf.numerator[static_cast<size_t>(n)]
                          : PolyY{};
        for (int j = 1; j <= n && j < static_cast<int>(gf.denominator.size()); ++j) {
            poly_sub_inplace(coeff, poly_mul(gf.denominator[static_cast<size_t>(j)],
                                             series[static_cast<size_t>(n - j)]));
        }
        poly_trim(coeff);
        series[static_cast<size_t>(n)] = coeff;
        for (size_t k = 0; k < coeff.size(); ++k) {
            triangle.set(n, static_cast<int>(k), coeff[k]);
        }
        if (triangle.row(n).empty()) triangle.set(n, 0, 0);
    }
    return triangle;
}

UnivariateRationalGF two_pop_count_gf() {
    return UnivariateRationalGF{{1, -1, -1, -1}, {1, -2, -1, -2}};
}

std::vector<mpz_class> expand_univariate(const UnivariateRationalGF& gf, int max_n) {
    if (gf.denominator.empty() || gf.denominator[0] != 1) {
        throw std::invalid_argument("expand_univariate: denominator constant term must be 1");
    }
    std::vector<mpz_class> series(static_cast<size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
        mpz_class coeff = static_cast<size_t>(n) < gf.numerator.size()
                              ? gf.numerator[static_cast<size_t>(n)]
                              : mpz_class(0);
        for (int j = 1; j <= n && j < static_cast<int>(gf.denominator.size()); ++j) {
            coeff -= gf.denominator[static_cast<size_t>(j)] * series[static_cast<size_t>(n - j)];
        }
        series[static_cast<size_t>(n)] = coeff;
    }
    return series;
}

CountMethod count_method_from_string(const std::string& name) {
    if (name == "recurrence") return CountMethod::Recurrence;
    if (name == "gf") return CountMethod::GeneratingFunction;
    if (name == "bruteforce") return CountMethod::BruteForce;
    if (name == "prefix") return CountMethod::Prefix;
    throw std::invalid_argument("unknown counting method '" + name + "'");
}

std::string count_method_name(CountMethod method) {
    switch (method) {
        case CountMethod::Recurrence: return "recurrence";
        case CountMethod::GeneratingFunction: return "gf";
        case CountMethod::BruteForce: return "bruteforce";
        case CountMethod::Prefix: return "prefix";
    }
    return "?";
}

std::vector<mpz_class> total_counts(int max_n, CountMethod method, const EnumPolicy& policy) {
    std::vector<mpz_class> counts(static_cast<size_t>(max_n) + 1, 0);
    switch (method) {
        case CountMethod::Recurrence: {
            // Seeds: every permutation of length <= 3 sorts in two passes.
            const mpz_class seeds[4] = {1, 1, 2, 6};
            for (int n = 0; n <= std::min(max_n, 3); ++n) counts[static_cast<size_t>(n)] = seeds[n];
            for (int n = 4; n <= max_n; ++n) {
                counts[static_cast<size_t>(n)] = 2 * counts[static_cast<size_t>(n - 1)] +
                                                 counts[static_cast<size_t>(n - 2)] +
                                                 2 * counts[static_cast<size_t>(n - 3)];
            }
            break;
        }
        case CountMethod::GeneratingFunction:
            counts = expand_univariate(two_pop_count_gf(), max_n);
            break;
        case CountMethod::BruteForce: {
            check_cap(max_n, policy.brute_force_cap, "total_counts(bruteforce)");
            for (int n = 0; n <= max_n; ++n) {
                counts[static_cast<size_t>(n)] = sweep_permutations<mpz_class>(
                    n, policy.jobs, mpz_class(0),
                    [](mpz_class& acc, const Permutation& pi) {
                        if (is_sortable(pi, 2)) ++acc;
                    },
                    [](mpz_class& acc, const mpz_class& part) { acc += part; });
            }
            break;
        }
        case CountMethod::Prefix: {
            check_cap(max_n, policy.brute_force_cap, "total_counts(prefix)");
            for (int n = 0; n <= max_n; ++n) {
                counts[static_cast<size_t>(n)] = generate_sortable(n, policy).size();
            }
            break;
        }
    }
    return counts;
}

TriangleRows brute_force_triangle(int n, const EnumPolicy& policy) {
    check_cap(n, policy.brute_force_cap, "brute_force_triangle");
    const size_t width = static_cast<size_t>(std::max(n, 1));
    TriangleRows init{std::vector<mpz_class>(width, 0), std::vector<mpz_class>(width, 0)};
    return sweep_permutations<TriangleRows>(
        n, policy.jobs, init,
        [](TriangleRows& acc, const Permutation& pi) {
            if (!is_sortable(pi, 2)) return;
            const size_t k = static_cast<size_t>(ascent_count(pi));
            ++acc.a_row[k];
            if (pi.size() >= 1 && blocks(pi).blocks.back().length() == 1) ++acc.b_row[k];
        },
        [](TriangleRows& acc, const TriangleRows& part) {
            for (size_t k = 0; k < acc.a_row.size(); ++k) {
                acc.a_row[k] += part.a_row[k];
                acc.b_row[k] += part.b_row[k];
            }
        });
}

namespace {

std::vector<int> shifted_values(const Permutation& pi, int shift) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(pi.size()));
    for (int v : pi.values()) out.push_back(v + shift);
    return out;
}

int first_block_length(const Permutation& pi) {
    int len = 1;
    while (len < pi.size() && pi.at(len) > pi.at(len + 1)) ++len;
    return pi.empty() ? 0 : len;
}

// The six inverse constructions. Each takes a sortable child sigma and emits
// the unique sortable parent of that case.

Permutation build_case1(const Permutation& sigma) {
    return direct_sum(Permutation({1}), sigma);
}

// Insert the new minimum at the end of the first block.
Permutation build_case2(const Permutation& sigma) {
    const int d = first_block_length(sigma);
    std::vector<int> out = shifted_values(sigma, 1);
    out.insert(out.begin() + d, 1);
    return Permutation(std::move(out));
}

Permutation build_case3(const Permutation& sigma) {
    return direct_sum(Permutation({3, 1, 2}), sigma);
}

// Parent starts 4 1 3; the child's letters land on {2, 5, 6, ...}.
Permutation build_case4(const Permutation& sigma) {
    std::vector<int> out = {4, 1, 3};
    for (int v : sigma.values()) out.push_back(v == 1 ? 2 : v + 3);
    return Permutation(std::move(out));
}

// Parent is 2, s+3, 1, s+2, ... where s is the child's first letter; the
// remaining letters land on {3..n} minus s+2.
Permutation build_case5(const Permutation& sigma) {
    const int s = sigma.at(1);
    std::vector<int> out = {2, s + 3, 1, s + 2};
    for (int i = 2; i <= sigma.size(); ++i) {
        const int v = sigma.at(i);
        out.push_back(v < s ? v + 2 : v + 3);
    }
    return Permutation(std::move(out));
}

// Prefix 2, then the child shifted up by 2 with the new minimum inserted at
// the end of its first block.
Permutation build_case6(const Permutation& sigma) {
    const int d = first_block_length(sigma);
    std::vector<int> out = shifted_values(sigma, 2);
    out.insert(out.begin() + d, 1);
    out.insert(out.begin(), 2);
    return Permutation(std::move(out));
}

std::vector<int> erase_positions(const Permutation& pi, std::initializer_list<int> positions) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(pi.size()));
    for (int i = 1; i <= pi.size(); ++i) {
        if (std::find(positions.begin(), positions.end(), i) == positions.end()) {
            out.push_back(pi.at(i));
        }
    }
    return out;
}

} // namespace

Permutation apply_prefix_case(int case_id, const Permutation& child) {
    switch (case_id) {
        case 1: return build_case1(child);
        case 2: return build_case2(child);
        case 3: return build_case3(child);
        case 4: return build_case4(child);
        case 5: return build_case5(child);
        case 6: return build_case6(child);
    }
    throw std::invalid_argument("apply_prefix_case: case id must be 1..6");
}

PrefixCase classify_prefix(const Permutation& pi) {
    const int n = pi.size();
    if (n < 4) throw std::domain_error("classify_prefix: defined for n >= 4");
    if (!is_sortable_by_blocks(pi)) {
        throw std::domain_error("classify_prefix: permutation is not two-pop-stack sortable");
    }
    const BlockDecomposition decomp = blocks(pi);
    int pos1 = 0;
    for (int i = 1; i <= n; ++i) {
        if (pi.at(i) == 1) {
            pos1 = i;
            break;
        }
    }

    PrefixCase result;
    const int b1_len = decomp[0].length();
    if (pos1 <= b1_len) {
        // 1 sits in the first block, necessarily at its end.
        if (pos1 != b1_len) throw std::logic_error("classify_prefix: 1 not at block end");
        if (b1_len == 1) {
            result = {1, reduce(erase_positions(pi, {1}))};
        } else if (pos1 == n || pi.at(pos1 - 1) < pi.at(pos1 + 1)) {
            result = {2, reduce(erase_positions(pi, {pos1}))};
        } else if (pi.at(1) == 3) {
            if (pos1 != 2 || pi.at(3) != 2) throw std::logic_error("classify_prefix: bad case 3 shape");
            result = {3, reduce(erase_positions(pi, {1, 2, 3}))};
        } else if (pi.at(1) == 4) {
            if (pos1 != 2 || pi.at(3) != 3) throw std::logic_error("classify_prefix: bad case 4 shape");
            result = {4, reduce(erase_positions(pi, {1, 2, 3}))};
        } else {
            // A sortable permutation cannot have a longer descent across the 1.
            throw std::logic_error("classify_prefix: no case applies");
        }
    } else {
        // 1 must sit in the second block (forced for sortable permutations).
        const Block& b2 = decomp[1];
        if (pos1 != b2.start + b2.length() - 1) {
            throw std::logic_error("classify_prefix: 1 beyond the second block");
        }
        if (pi.at(1) != 2) throw std::logic_error("classify_prefix: first letter is not 2");
        if (b2.length() == 2 && pos1 == 3 && pi.at(4) < pi.at(2)) {
            if (pi.at(4) != pi.at(2) - 1) throw std::logic_error("classify_prefix: bad case 5 shape");
            std::vector<int> word = {pi.at(2)};
            for (int i = 5; i <= n; ++i) word.push_back(pi.at(i));
            result = {5, reduce(word)};
        } else {
            result = {6, reduce(erase_positions(pi, {1, pos1}))};
        }
    }

    if (!is_sortable_by_blocks(result.child)) {
        throw std::logic_error("classify_prefix: child is not sortable");
    }
    return result;
}

std::vector<Permutation> generate_sortable(int n, const EnumPolicy& policy) {
    if (n < 0) throw std::invalid_argument("generate_sortable: n must be >= 0");
    check_cap(n, policy.brute_force_cap, "generate_sortable");

    std::vector<std::vector<Permutation>> sets(static_cast<size_t>(n) + 1);
    sets[0] = {Permutation()};
    for (int m = 1; m <= std::min(n, 3); ++m) {
        // Every permutation of length <= 3 is two-pop-stack sortable.
        for_each_permutation(m, [&](const Permutation& pi) { sets[static_cast<size_t>(m)].push_back(pi); });
    }
    for (int m = 4; m <= n; ++m) {
        std::set<Permutation> out;
        size_t built = 0;
        auto emit = [&](const Permutation& parent) {
            if (!is_sortable_by_blocks(parent)) {
                throw std::logic_error("generate_sortable: construction produced unsortable output");
            }
            out.insert(parent);
            ++built;
        };
        for (const Permutation& sigma : sets[static_cast<size_t>(m - 1)]) {
            emit(build_case1(sigma));
            emit(build_case2(sigma));
        }
        for (const Permutation& sigma : sets[static_cast<size_t>(m - 2)]) {
            emit(build_case6(sigma));
        }
        for (const Permutation& sigma : sets[static_cast<size_t>(m - 3)]) {
            emit(build_case3(sigma));
            if (sigma.size() >= 2 && sigma.at(1) > sigma.at(2)) emit(build_case4(sigma));
            if (sigma.size() == 1 || (sigma.size() >= 2 && sigma.at(1) < sigma.at(2))) {
                emit(build_case5(sigma));
            }
        }
        if (built != out.size()) {
            throw std::logic_error("generate_sortable: case images are not disjoint");
        }
        sets[static_cast<size_t>(m)].assign(out.begin(), out.end());
    }
    return sets[static_cast<size_t>(n)];
}

std::string triangle_csv(const CountTriangle& t) {
    std::string out = "n,k,count\n";
    for (int n = 0; n <= t.max_n(); ++n) {
        const auto& row = t.row(n);
        for (size_t k = 0; k < row.size(); ++k) {
            out += std::to_string(n) + ',' + std::to_string(k) + ',' + row[k].get_str() + '\n';
        }
    }
    return out;
}

std::string sequence_bfile(const std::vector<mpz_class>& counts) {
    std::string out;
    for (size_t n = 1; n < counts.size(); ++n) {
        out += std::to_string(n) + ' ' + counts[n].get_str() + '\n';
    }
    return out;
}

} // namespace popstack
