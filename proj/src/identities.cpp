#include "qrr/identities.hpp"

#include <stdexcept>

#include "qrr/partitions.hpp"

namespace qrr {

namespace {

ZSeries regular_partition_series(int m, int T) {
    // Psi_m from the m-regular counting DP; intentionally a different route
    // than expanding the product exponents.
    std::vector<Int> counts = m_regular_table(m, T);
    return ZSeries(T, std::move(counts));
}

IdentityReport compare(ZSeries lhs, ZSeries rhs) {
    IdentityReport rep;
    rep.first_mismatch = first_disagreement(lhs, rhs);
    rep.ok = rep.first_mismatch < 0;
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

}  // namespace

int first_disagreement(const ZSeries& a, const ZSeries& b) {
    const int T = std::min(a.order(), b.order());
    for (int n = 0; n <= T; ++n)
        if (a[n] != b[n]) return n;
    return -1;
}

ZSeries evaluate_quotient(const QuotientExpression& expr, int T) {
    bool uniform = true;
    int kappa = 0;
    for (const RRSpec& s : expr.numerator) {
        if (kappa == 0) kappa = s.kappa();
        uniform = uniform && s.kappa() == kappa;
    }
    for (const RRSpec& s : expr.denominator) {
        if (kappa == 0) kappa = s.kappa();
        uniform = uniform && s.kappa() == kappa;
    }
    if (kappa == 0) return ZSeries::one(T);

    if (uniform) {
        PeriodicExponents total(kappa);
        for (const RRSpec& s : expr.numerator) total += c_table(s);
        for (const RRSpec& s : expr.denominator) total -= c_table(s);
        return total.expand(T);
    }
    ZSeries result = ZSeries::one(T);
    for (const RRSpec& s : expr.numerator) result = result * product_side(s, T);
    for (const RRSpec& s : expr.denominator) result = result * product_side(s, T).inverse();
    return result;
}

IdentityReport verify_even_identity(int m, int T) {
    if (m < 8 || m % 2 != 0)
        throw std::invalid_argument("verify_even_identity: need even m >= 8");
    QuotientExpression expr;
    expr.numerator.emplace_back(Nu::of(1, 0), 2, m / 2 - 3);
    expr.numerator.emplace_back(Nu::of(2, -2), m / 2 - 2, 2);
    expr.denominator.emplace_back(Nu::of(2, -2), m / 2 - 3, 3);
    return compare(evaluate_quotient(expr, T), regular_partition_series(m, T));
}

IdentityReport verify_odd_identity(int m, int T) {
    if (m < 9 || m % 4 != 1)
        throw std::invalid_argument("verify_odd_identity: need m = 1 (mod 4), m >= 9");
    const int q = (m - 1) / 4;
    QuotientExpression expr;
    expr.numerator.emplace_back(Nu::of(1, -1), (m - 1) / 2 - 1, 1);
    expr.numerator.emplace_back(Nu::of(2, -1), q, q);
    expr.denominator.emplace_back(Nu::of(2, -1), q + 1, q - 1);
    return compare(evaluate_quotient(expr, T), regular_partition_series(m, T));
}

IdentityReport verify_kernel_identity(int m, int T) {
    if (m < 11 || m % 4 != 3)
        throw std::invalid_argument("verify_kernel_identity: need m = 3 (mod 4), m >= 11");
    const int s = (m - 3) / 2;
    const int q = (m - 3) / 4;
    QuotientExpression expr;
    expr.numerator.emplace_back(Nu::of(1, -1), s - 1, 2);
    expr.numerator.emplace_back(Nu::of(2, -1), q, q + 1);
    expr.denominator.emplace_back(Nu::of(1, -1), 1, s);
    expr.denominator.emplace_back(Nu::of(2, -1), 1, s);
    expr.denominator.emplace_back(Nu::of(2, -1), q - 1, q + 2);
    return compare(evaluate_quotient(expr, T), ZSeries::one(T));
}

IdentityReport dyson_check(int T) {
    return compare(product_side(RRSpec(Nu::of(1, -1), 2, 2), T),
                   regular_partition_series(9, T));
}

GHProductReport gh_product_check(int T) {
    GHProductReport rep;
    ZSeries gh = product_side(RRSpec(Nu::of(1, -1), 1, 1), T) *
                 product_side(RRSpec(Nu::of(2, -1), 1, 1), T);
    const ZSeries psi5 = regular_partition_series(5, T);
    rep.first_mismatch = first_disagreement(gh, psi5);
    rep.series_match = rep.first_mismatch < 0;
    rep.congruence_holds = true;
    for (long arg = 4; arg <= T; arg += 5) {
        if (gh[static_cast<int>(arg)] % 5 != 0) {
            rep.congruence_holds = false;
            rep.first_bad_argument = arg;
            break;
        }
    }
    rep.product = std::move(gh);
    return rep;
}

ZSeries cf_convergent(int k, int T) {
    if (k < 0) throw std::invalid_argument("cf_convergent: depth must be >= 0");
    // V_j = 1 + q^j / V_{j+1} with V_{k+1} = 1, kept as a polynomial pair
    // N/D; the convergent is 1/V_1 = D_1/N_1.
    std::vector<Int> num{Int(1)}, den{Int(1)};
    for (int j = k; j >= 1; --j) {
        std::vector<Int> shifted(den.size() + static_cast<std::size_t>(j));
        for (std::size_t i = 0; i < den.size(); ++i) shifted[i + static_cast<std::size_t>(j)] = den[i];
        std::vector<Int> new_num(std::max(num.size(), shifted.size()));
        for (std::size_t i = 0; i < num.size(); ++i) new_num[i] += num[i];
        for (std::size_t i = 0; i < shifted.size(); ++i) new_num[i] += shifted[i];
        den = std::move(num);
        num = std::move(new_num);
    }
    ZSeries top(T), bottom(T);
    for (std::size_t i = 0; i < den.size() && i <= static_cast<std::size_t>(T); ++i)
        top.set(static_cast<int>(i), den[i]);
    for (std::size_t i = 0; i < num.size() && i <= static_cast<std::size_t>(T); ++i)
        bottom.set(static_cast<int>(i), num[i]);
    return top * bottom.inverse();
}

}  // namespace qrr
