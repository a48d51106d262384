#include "urm/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "urm/constructions.hpp"
#include "urm/mask.hpp"

namespace urm::bounds {

namespace {

std::uint64_t boundary(int m) { return (std::uint64_t{1} << (m - 1)) - 1; } // 2^{m-1} - 1

void check_bound_regime(int n, int m) {
    check_ground_size(m);
    if (n < 1 || static_cast<std::uint64_t>(n) > boundary(m))
        throw regime_error("bounds need 1 <= n <= 2^{m-1}-1 = " + std::to_string(boundary(m)) +
                           ", got n = " + std::to_string(n));
}

double pow2(double x) { return std::exp2(x); }

std::int64_t binomial(int m, int i) {
    // m <= 24 here, so the running product stays far below overflow
    std::int64_t v = 1;
    for (int j = 1; j <= i; ++j) v = v * (m - j + 1) / j;
    return v;
}

} // namespace

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw malformed_input_error("binary entropy argument must lie in [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

HammingBallBound hamming_ball_bound(int m, int k) {
    check_ground_size(m);
    if (k < 2) throw malformed_input_error("hamming ball bound needs k >= 2, got " + std::to_string(k));
    HammingBallBound out{0, 0.0};
    for (int i = 0; i <= m / k; ++i) out.exact_sum += binomial(m, i);
    out.entropy_cap = pow2(m * binary_entropy(1.0 / k));
    if (static_cast<double>(out.exact_sum) > out.entropy_cap * (1.0 + 1e-12))
        throw std::logic_error("hamming ball sum exceeded its entropy cap");
    return out;
}

int theorem23_k(int n, int m) {
    // largest q with (n+1)^q <= 2^{m+1-2q}, checked in exact integer arithmetic
    int q = 0;
    while (true) {
        const int e = m + 1 - 2 * (q + 1);
        if (e < 0) break;
        const unsigned __int128 cap = static_cast<unsigned __int128>(1) << e;
        unsigned __int128 p = 1;
        bool fits = true;
        for (int i = 0; i < q + 1; ++i) {
            p *= static_cast<unsigned>(n + 1);
            if (p > cap) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        ++q;
    }
    return q + 1;
}

LowerBound lower_bound(int n, int m) {
    check_bound_regime(n, m);
    LowerBound out{};
    out.analytic = n * (m + 1) / (std::log2(n + 1.0) + 2.0);
    const int kt = theorem23_k(n, m);
    if (kt == 2 || (kt >= 3 && constructions::central_regime_ok(n, m, kt))) {
        out.k_used = kt;
        out.used_theorem23_k = true;
    } else {
        out.k_used = 2; // complement pairs always fit this regime
        out.used_theorem23_k = false;
    }
    out.constructive = static_cast<std::int64_t>(out.k_used) * n;
    return out;
}

std::optional<int> counting_cutoff_k(int n, int m) {
    for (int k = 2; k <= m; ++k)
        if (static_cast<double>(n) > pow2(m * binary_entropy(1.0 / k))) return k;
    return std::nullopt;
}

std::int64_t density_upper_bound(int n, int m) {
    if (n < 2) throw malformed_input_error("density bound needs n >= 2");
    const double c = std::log2(static_cast<double>(n)) / m;
    return static_cast<std::int64_t>(std::ceil((n / c) * (6.0 - 3.2 * std::log2(c))));
}

int density_proof_k(double c) {
    if (!(c > 0.0 && c < 1.0)) throw malformed_input_error("density exponent must lie in (0,1)");
    const double eps = c * std::log(2.0) / 2.0;
    return static_cast<int>(std::ceil((1.6 / eps) * std::log(1.0 / eps)));
}

UpperBound upper_bound(int n, int m) {
    check_bound_regime(n, m);
    UpperBound out{};
    out.value = static_cast<std::int64_t>(n) * m; // trivial cap
    if (auto k = counting_cutoff_k(n, m)) {
        std::int64_t v = static_cast<std::int64_t>(*k) * n;
        if (v < out.value) {
            out.value = v;
            out.k_used = *k;
        }
    }
    if (n >= 2) {
        std::int64_t v = density_upper_bound(n, m);
        if (v < out.value) {
            out.value = v;
            out.k_used.reset();
        }
    }
    if (auto ex = exact_value(n, m); ex && *ex < out.value) {
        out.value = *ex;
        out.k_used.reset();
    }
    return out;
}

std::optional<std::int64_t> exact_value(int n, int m) {
    check_ground_size(m);
    if (n < 1) throw malformed_input_error("need n >= 1, got " + std::to_string(n));
    const std::int64_t hi = static_cast<std::int64_t>(boundary(m));
    if (n == 2) return static_cast<std::int64_t>(m) + 1;
    if (n == 1) return static_cast<std::int64_t>(m);
    if (constructions::mixed_regime_ok(n, m)) return 2 * static_cast<std::int64_t>(n) + (hi - n) / 2;
    if (n >= hi) return n + hi;
    return std::nullopt;
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::N_EQUALS_2: return "N_EQUALS_2";
        case Regime::SMALL: return "SMALL";
        case Regime::THEOREM29: return "THEOREM29";
        case Regime::AT_OR_ABOVE_BOUNDARY: return "AT_OR_ABOVE_BOUNDARY";
    }
    return "?";
}

BoundsReport bounds_report(int n, int m) {
    check_ground_size(m);
    if (n < 1) throw malformed_input_error("need n >= 1, got " + std::to_string(n));
    const std::int64_t hi = static_cast<std::int64_t>(boundary(m));

    BoundsReport rep{};
    rep.n = n;
    rep.m = m;
    rep.exact = exact_value(n, m);
    rep.lower_analytic = n * (m + 1) / (std::log2(n + 1.0) + 2.0);

    if (n == 2)
        rep.regime = Regime::N_EQUALS_2;
    else if (constructions::mixed_regime_ok(n, m))
        rep.regime = Regime::THEOREM29;
    else if (n >= hi)
        rep.regime = Regime::AT_OR_ABOVE_BOUNDARY;
    else
        rep.regime = Regime::SMALL;

    if (n <= hi) {
        LowerBound lb = lower_bound(n, m);
        UpperBound ub = upper_bound(n, m);
        rep.lower = lb.constructive;
        rep.upper = ub.value;
        if (lb.used_theorem23_k && lb.k_used >= 3)
            rep.sources.push_back("lower LEMMA22 k=" + std::to_string(lb.k_used) + " via THEOREM23");
        else
            rep.sources.push_back("lower LEMMA15 pairs");
        if (ub.k_used)
            rep.sources.push_back("upper LEMMA26 k=" + std::to_string(*ub.k_used));
        else if (ub.value == static_cast<std::int64_t>(n) * m && !rep.exact)
            rep.sources.push_back("upper TRIVIAL_CAP");
        else if (!rep.exact)
            rep.sources.push_back("upper THEOREM27");
    } else {
        rep.lower = *rep.exact; // shift construction realizes it
        rep.upper = *rep.exact;
        rep.sources.push_back("REMARK14 shift");
    }

    if (rep.exact) {
        if (rep.lower < *rep.exact) rep.lower = *rep.exact; // exact values are constructive
        if (*rep.exact < rep.upper) rep.upper = *rep.exact;
        switch (rep.regime) {
            case Regime::N_EQUALS_2: rep.sources.push_back("exact THEOREM12"); break;
            case Regime::THEOREM29: rep.sources.push_back("exact THEOREM29"); break;
            case Regime::AT_OR_ABOVE_BOUNDARY: rep.sources.push_back("exact REMARK16"); break;
            case Regime::SMALL:
                rep.sources.push_back(n == 1 ? "exact SINGLETONS (derived, not from a cited result)"
                                             : "exact");
                break;
        }
    }
    return rep;
}

} // namespace urm::bounds
