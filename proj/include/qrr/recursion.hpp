#pragma once

#include <functional>
#include <vector>

#include "qrr/numeric.hpp"

namespace qrr {

/// One monomial of the universal polynomial F_n: a multiplicity vector
/// (m_1, ..., m_{n-1}) with sum i*m_i = n and the exact coefficient
/// (-1)^{sum m_i} (sum m_i - 1)! / prod m_i!.
struct FhatTerm {
    std::vector<int> multiplicities;
    Rat coefficient;
};

/// All terms of F_n (n >= 2); there are p(n) - 1 of them, one per partition
/// of n with largest part <= n-1.
std::vector<FhatTerm> fhat_terms(int n);

/// F_n(x_1, ..., x_{n-1}) evaluated in exact rationals.
Rat fhat_eval(int n, const std::vector<Rat>& x);

/// b(n) = sum over divisors d of n of c(d) * d.
Int b_from_c(const std::function<long(long)>& c, long n);

/// Coefficients a(0)=1, a(1..count) of prod (1-q^t)^{c(t)} via the recursion
/// a(n) = F_n(a(1),...,a(n-1)) - b(n)/n, with a(1) = -c(1). Intermediate
/// values are exact rationals; each a(n) is asserted integral (a failure
/// would signal an implementation bug, not bad input).
std::vector<Int> recurse_coefficients(const std::function<long(long)>& c, int count);

/// Power sums s_1..s_n from elementary symmetric values sigma_1..sigma_n by
/// the Newton recurrence s_k = sum_{j<k} (-1)^{j+1} sigma_j s_{k-j} + (-1)^{k+1} k sigma_k.
std::vector<Rat> power_sums_from_elementary(const std::vector<Rat>& sigma);

/// The same power sums by the explicit partition-indexed sum
/// s_n = n * sum (-1)^{m_2+m_4+...} ((sum m - 1)! / prod m!) prod sigma_j^{m_j};
/// kept as an independent route for cross-validation.
std::vector<Rat> power_sums_explicit(const std::vector<Rat>& sigma);

}  // namespace qrr
