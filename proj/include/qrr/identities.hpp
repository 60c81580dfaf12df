#pragma once

#include <vector>

#include "qrr/rr.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// A product/quotient of family members. Specs need not share a modulus;
/// when they do, the quotient cancels exactly at the exponent level.
struct QuotientExpression {
    std::vector<RRSpec> numerator;
    std::vector<RRSpec> denominator;
};

/// Expands the quotient through q^T. Same-modulus expressions combine their
/// exponent vectors first; otherwise each factor is expanded and the series
/// are multiplied and divided.
ZSeries evaluate_quotient(const QuotientExpression& expr, int T);

/// Index of the first differing coefficient through the common order, or -1.
int first_disagreement(const ZSeries& a, const ZSeries& b);

struct IdentityReport {
    bool ok = false;
    int first_mismatch = -1;  // -1 when the sides agree
    ZSeries lhs{0};
    ZSeries rhs{0};
};

/// m even, m >= 8:
/// R_(1,0)(2, m/2-3) * R_(2,-2)(m/2-2, 2) / R_(2,-2)(m/2-3, 3) = Psi_m.
IdentityReport verify_even_identity(int m, int T);

/// m = 1 (mod 4), m >= 9:
/// R_(1,-1)((m-1)/2-1, 1) * R_(2,-1)((m-1)/4, (m-1)/4)
///   / R_(2,-1)((m-1)/4+1, (m-1)/4-1) = Psi_m.
IdentityReport verify_odd_identity(int m, int T);

/// m = 3 (mod 4), m >= 11: the quotient
/// R_(1,-1)((m-3)/2-1, 2) * R_(2,-1)((m-3)/4, (m-3)/4+1)
///   / (R_(1,-1)(1, (m-3)/2) * R_(2,-1)(1, (m-3)/2) * R_(2,-1)((m-3)/4-1, (m-3)/4+2))
/// collapses to 1.
IdentityReport verify_kernel_identity(int m, int T);

/// Dyson's identity R_(1,-1)(2,2) = Psi_9.
IdentityReport dyson_check(int T);

struct GHProductReport {
    bool series_match = false;
    int first_mismatch = -1;
    bool congruence_holds = false;  // d_5(5n+4) = 0 (mod 5) for represented n
    long first_bad_argument = -1;
    ZSeries product{0};
};

/// G * H = Psi_5 plus the Ramanujan congruence on its coefficients.
GHProductReport gh_product_check(int T);

/// Depth-k truncation of 1/(1 + q/(1 + q^2/(1 + q^3/...))), the innermost
/// tail replaced by 1, expanded through q^T. Built as an exact polynomial
/// numerator/denominator pair before the final series division.
ZSeries cf_convergent(int k, int T);

}  // namespace qrr
