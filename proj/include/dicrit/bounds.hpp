#pragma once

#include "dicrit/digraph.hpp"
#include "dicrit/rational.hpp"

namespace dicrit {

// Arc-count lower bound for 3-dicritical oriented graphs: (7n+2)/3.
inline Rational lower_bound_o3(long long n) {
    return Rational(BigInt(7 * n + 2), BigInt(3));
}

// Arc-count lower bound for k-dicritical oriented graphs, k >= 3:
//   (k - 3/4 - 1/(4k-6)) n + 3/(4(2k-3)).
// For k = 3 this is (25/12) n + 1/4.
inline Rational lower_bound_ok(int k, long long n) {
    if (k < 3) throw KTooSmallError("the bound is stated for k >= 3");
    Rational slope = Rational(k) - Rational(3, 4) - Rational(1, 4 * k - 6);
    Rational constant(3, BigInt(4) * (2 * k - 3));
    return slope * Rational(n) + constant;
}

// Vertex and arc counts of the G^i_k family, evaluated by the defining
// recurrences in arbitrary precision (n^1_k >= 2^(k-1), so fixed-width
// integers overflow near k = 60).
struct FamilySizes {
    BigInt n_ik;
    BigInt m_ik;
};

inline FamilySizes family_sizes(int i, int k) {
    if (i < 1) throw SizeTooSmallError("family_sizes needs i >= 1");
    if (k < 2) throw KTooSmallError("family_sizes needs k >= 2");
    BigInt n1 = 3, m1 = 3;         // G^1_2 = directed triangle
    BigInt ni = i + 2, mi = i + 2; // G^i_2 = directed cycle of length i+2
    for (int j = 3; j <= k; ++j) {
        BigInt c = BigInt(j) * (j - 1) / 2;
        BigInt knob1 = 2 * n1 + m1 + 1; // arcs contributed by one G^1-knob
        BigInt n1_next = c * n1 + j;
        BigInt m1_next = c * knob1;
        BigInt ni_next = (c - 1) * n1 + ni + j;
        BigInt mi_next = (c - 1) * knob1 + (2 * ni + mi + 1);
        n1 = n1_next;
        m1 = m1_next;
        ni = ni_next;
        mi = mi_next;
    }
    return {ni, mi};
}

// Exact comparisons of a digraph against the arc-count bounds.
struct BoundsReport {
    int k = 0;
    long long n = 0;
    long long m = 0;
    bool oriented = false;

    BigInt upper;            // (2k-3) n
    bool upper_ok = false;   // m <= (2k-3) n
    bool upper_strict = false;

    Rational lower_k;               // lower_bound_ok(k, n), for k >= 3
    bool lower_k_applicable = false; // k >= 3 and oriented
    bool lower_k_ok = false;

    Rational lower_o3;               // (7n+2)/3, for k = 3
    bool lower_o3_applicable = false; // k == 3 and oriented
    bool lower_o3_ok = false;
};

inline BoundsReport audit_bounds(const Digraph& d, int k) {
    BoundsReport r;
    r.k = k;
    r.n = d.n();
    r.m = static_cast<long long>(d.m());
    r.oriented = is_oriented(d);
    r.upper = BigInt(2 * k - 3) * r.n;
    r.upper_ok = BigInt(r.m) <= r.upper;
    r.upper_strict = BigInt(r.m) < r.upper;
    if (k >= 3) {
        r.lower_k = lower_bound_ok(k, r.n);
        r.lower_k_applicable = r.oriented;
        r.lower_k_ok = Rational(r.m) >= r.lower_k;
    }
    if (k == 3) {
        r.lower_o3 = lower_bound_o3(r.n);
        r.lower_o3_applicable = r.oriented;
        r.lower_o3_ok = Rational(r.m) >= r.lower_o3;
    }
    return r;
}

} // namespace dicrit
