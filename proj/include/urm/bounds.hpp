#pragma once

// Closed-form lower and upper bounds on g(n, m), the largest size of a
// multiset of subsets of [m] that splits into n exact covers in exactly
// one way, plus the exactly-known regimes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace urm::bounds {

/// -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0. x must be in [0,1].
[[nodiscard]] double binary_entropy(double x);

struct HammingBallBound {
    std::int64_t exact_sum;  // sum_{i<=floor(m/k)} C(m, i)
    double entropy_cap;      // 2^{m H(1/k)}, always >= exact_sum
};

/// Requires k >= 2 and m >= 1.
[[nodiscard]] HammingBallBound hamming_ball_bound(int m, int k);

/// k = 1 + the largest q with (n+1)^q <= 2^{m+1-2q}; the class size the
/// n(m+1)/(log2(n+1)+2) lower bound argument picks. Computed with integer
/// arithmetic so floor boundaries cannot drift.
[[nodiscard]] int theorem23_k(int n, int m);

struct LowerBound {
    std::int64_t constructive;  // k_used * n, realized by a construction
    double analytic;            // n(m+1) / (log2(n+1) + 2), strictly below
    int k_used;                 // the chosen class size; 2 is the fallback
    bool used_theorem23_k;      // false when the regime forced the fallback
};

/// Requires 1 <= n <= 2^{m-1} - 1.
[[nodiscard]] LowerBound lower_bound(int n, int m);

/// Smallest k in [2, m] with n > 2^{m H(1/k)}, giving g <= kn; nullopt
/// when no such k exists.
[[nodiscard]] std::optional<int> counting_cutoff_k(int n, int m);

/// ceil((n/c)(6 - 3.2 log2 c)) with c = log2(n)/m; requires n >= 2.
[[nodiscard]] std::int64_t density_upper_bound(int n, int m);

/// The k = ceil((1.6/eps) ln(1/eps)), eps = c ln2 / 2, that the density
/// bound's argument uses; it always satisfies n > 2^{m H(1/k)}.
[[nodiscard]] int density_proof_k(double c);

struct UpperBound {
    std::int64_t value;
    std::optional<int> k_used;  // set when the counting cutoff won
};

/// Requires 1 <= n <= 2^{m-1} - 1. Minimum of the counting cutoff, the
/// density bound, the trivial cap nm, and the exact value when known.
[[nodiscard]] UpperBound upper_bound(int n, int m);

/// g(n, m) where it is known exactly: n = 1 (m), n = 2 (m+1), the mixed
/// regime (2n + floor((2^{m-1}-1-n)/2)), and n >= 2^{m-1}-1
/// (n + 2^{m-1}-1). nullopt elsewhere.
[[nodiscard]] std::optional<std::int64_t> exact_value(int n, int m);

enum class Regime { N_EQUALS_2, SMALL, THEOREM29, AT_OR_ABOVE_BOUNDARY };

[[nodiscard]] const char* to_string(Regime r);

struct BoundsReport {
    int n;
    int m;
    std::int64_t lower;
    double lower_analytic;
    std::int64_t upper;
    std::optional<std::int64_t> exact;
    Regime regime;
    std::vector<std::string> sources;
};

[[nodiscard]] BoundsReport bounds_report(int n, int m);

} // namespace urm::bounds
