#pragma once

#include "popstack/errors.hpp"
#include "popstack/permutation.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace popstack {

/// Exact-integer table (n, k) -> count, n >= 0, k >= 0. Entries never written
/// read as 0, except that constructors of the standard tables set (0,0)
/// explicitly. Rows are ragged; at() is total.
class CountTriangle {
public:
    CountTriangle() = default;
    explicit CountTriangle(int max_n) : rows_(static_cast<size_t>(max_n) + 1) {}

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

    const mpz_class& at(int n, int k) const;
    void set(int n, int k, mpz_class value);

    const std::vector<mpz_class>& row(int n) const { return rows_[static_cast<size_t>(n)]; }
    mpz_class row_sum(int n) const;

private:
    std::vector<std::vector<mpz_class>> rows_;
};

/// a(n,k): two-pop-stack sortable permutations of length n with k ascents.
/// b(n,k): those whose last block is a singleton. Filled by the mutual
/// recurrences
///   a(n,k) = 1                                    if k=0 or k=n-1
///          = 2 * sum_{i=1}^{n-1} a(i,k-1) - b(n-1,k-1)   otherwise
///   b(n,k) = 1                                    if k=n-1
///          = 0                                    if k<1 or k>=n
///          = 2 a(n-1,k-1) - b(n-1,k-1)            otherwise
/// with a(0,0) = 1.
struct AscentTables {
    CountTriangle a;
    CountTriangle b;
};

AscentTables ascent_tables(int max_n);
CountTriangle a_table(int max_n);
CountTriangle b_table(int max_n);

/// Polynomial in y with integer coefficients; index = power of y.
using PolyY = std::vector<mpz_class>;

/// Ratio of polynomials in x whose coefficients are integer polynomials in y.
/// Series expansion requires the denominator's constant term to be 1.
struct BivariateRationalGF {
    std::vector<PolyY> numerator;    // index = power of x
    std::vector<PolyY> denominator;
};

/// sum a(n,k) x^n y^k = (1 - xy - x^2 y + x^3 y - 2 x^3 y^2)
///                      / (1 - x - xy - x^2 y - 2 x^3 y^2).
BivariateRationalGF two_pop_ascent_gf();

/// Coefficients of x^n y^k for n <= max_n by exact series division.
/// Throws std::invalid_argument if the denominator constant term is not 1.
CountTriangle expand_bivariate(const BivariateRationalGF& gf, int max_n);

struct UnivariateRationalGF {
    std::vector<mpz_class> numerator;
    std::vector<mpz_class> denominator;
};

/// sum |P_{2,n}| x^n = (1 - x - x^2 - x^3) / (1 - 2x - x^2 - 2x^3).
UnivariateRationalGF two_pop_count_gf();

std::vector<mpz_class> expand_univariate(const UnivariateRationalGF& gf, int max_n);

struct EnumPolicy {
    int brute_force_cap = 11;  // largest n swept exhaustively or generated
    int jobs = 1;              // 0 = hardware concurrency
};

enum class CountMethod { Recurrence, GeneratingFunction, BruteForce, Prefix };

CountMethod count_method_from_string(const std::string& name);
std::string count_method_name(CountMethod method);

/// |P_{2,n}| for 0 <= n <= max_n.
///  - Recurrence: |P_{2,n}| = 2|P_{2,n-1}| + |P_{2,n-2}| + 2|P_{2,n-3}|
///  - GeneratingFunction: series expansion of two_pop_count_gf()
///  - BruteForce: two-pass simulation over all of S_n (policy-capped)
///  - Prefix: size of generate_sortable(n) (policy-capped)
std::vector<mpz_class> total_counts(int max_n, CountMethod method, const EnumPolicy& policy = {});

/// Sortable counts of length n bucketed by ascents, via simulation over S_n;
/// b_row restricts to last block of size 1. Policy-capped.
struct TriangleRows {
    std::vector<mpz_class> a_row;
    std::vector<mpz_class> b_row;
};

TriangleRows brute_force_triangle(int n, const EnumPolicy& policy = {});

/// The six-way decomposition of a sortable permutation by its prefix shape.
/// `child` is the reduced smaller sortable permutation the case peels off:
/// length n-1 (cases 1, 2), n-3 (cases 3, 4, 5) or n-2 (case 6).
struct PrefixCase {
    int case_id = 0;
    Permutation child;
};

/// Classifies a sortable permutation of length >= 4 into its unique case.
/// Throws std::domain_error for unsortable input or n < 4.
PrefixCase classify_prefix(const Permutation& pi);

/// Inverse of classify_prefix: rebuilds the parent from a case id and child.
Permutation apply_prefix_case(int case_id, const Permutation& child);

/// All of P_{2,n}, built recursively by inverting the six prefix cases.
/// Result is sorted lexicographically. Policy-capped.
std::vector<Permutation> generate_sortable(int n, const EnumPolicy& policy = {});

/// Output helpers for the triangle and row-sum sequence.
std::string triangle_csv(const CountTriangle& t);
std::string sequence_bfile(const std::vector<mpz_class>& counts);  // offset 1

} // namespace popstack
