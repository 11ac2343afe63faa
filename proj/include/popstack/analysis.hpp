#pragma once

#include "popstack/enumeration.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace popstack {

struct Counterexample {
    std::string instance;
    std::string expected;
    std::string actual;
};

/// Outcome of one machine check. A failed check always carries at least one
/// concrete counterexample.
struct CheckReport {
    std::string name;
    std::string range;
    bool passed = true;
    int instances_checked = 0;
    std::vector<Counterexample> counterexamples;

    std::string status() const { return passed ? "pass" : "fail"; }
    std::string to_text() const;
};

/// The three eight-pattern classical classes that AAB put in bijection with
/// width-3 cylinder polyominoes; all must match |P_{2,n}| for n <= n_max.
/// Brute force, so n_max is capped (default 9).
CheckReport wilf_check(int n_max, int jobs = 1, int cap = 9);

/// The four closed-form identities for small a/b entries:
///   (1) a(n,n-2) = 4(n-2)        for n >= 3
///   (2) a(n,1)   = 2(n-2)        for n >= 4
///   (3) a(n,2)   = 2n(n-3)       for n >= 4
///   (4) b(n,n-2) = b(n,2) = 4(n-3)+2  for n >= 4
/// One report per identity. Identity (2) fails against the tables (first at
/// n = 4, where a(4,1) = 6); the report carries the counterexample verbatim.
std::vector<CheckReport> basic_identities_check(int n_max);

/// a(n,k)^2 >= a(n,k-1) a(n,k+1) for 1 <= k <= n-2, n <= n_max.
CheckReport log_concavity_check(int n_max);

/// a(2n+1,n) against two independent evaluations for 1 <= n <= n_max:
/// the alternating binomial sum and the series of sqrt((1+x)/(1-7x)).
/// A non-integral series coefficient throws std::logic_error.
CheckReport central_sequence_check(int n_max);

/// a(2n+1,n) = 2 b(2n+1,n) for 1 <= n <= n_max.
CheckReport half_check(int n_max);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Coefficients x^0..x^max_n of sqrt((1+x)/(1-7x)), computed by exact
/// rational binomial series multiplication. Throws std::logic_error if a
/// coefficient is not an integer.
std::vector<mpz_class> sqrt_ratio_series(int max_n);

} // namespace popstack
