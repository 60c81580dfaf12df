#pragma once

#include <unordered_map>
#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// One branch of the Hall-Littlewood expansion over the last variable:
/// `child` interlaces the parent (parent_i >= child_i >= parent_{i+1}),
/// `boxes` is |parent| - |child|, and the skew coefficient is
/// psi(t) = prod over psi_exponents m of (1 - t^m).
///
/// The exponent rule: a factor (1 - t^{m_i(child)}) for every column index
/// i >= 1 such that the strip parent/child has a box in column i+1 but none
/// in column i. The convention is pinned by the equivalence tests against
/// the symmetrization definition rather than taken on faith.
struct StripChild {
    Partition child;
    int boxes = 0;
    std::vector<int> psi_exponents;
};

struct HorizontalStripExpansion {
    Partition parent;
    std::vector<StripChild> children;  // lexicographically decreasing child order
};

HorizontalStripExpansion horizontal_strip_children(const Partition& lambda);

/// Dense coefficient vector (in t) of psi(t) = prod (1 - t^m).
std::vector<Int> psi_polynomial(const StripChild& child);

Rat psi_evaluate(const StripChild& child, const Rat& t);

/// P_lambda(x; t) straight from the symmetrization definition over all |x|!
/// permutations, in exact rational arithmetic. This is the correctness oracle
/// for every faster evaluation path. Requires pairwise distinct points,
/// |x| >= l(lambda), and v_lambda(t) != 0.
Rat hl_direct_at_points(const Partition& lambda, const std::vector<Rat>& x, const Rat& t);

/// Same value computed by recursing on the branching rule; used to validate
/// the StripChild coefficient convention against hl_direct_at_points.
Rat hl_branching_at_points(const Partition& lambda, const std::vector<Rat>& x, const Rat& t);

/// Principal specializations in bulk: the series P_mu(1, q, ..., q^{num_vars-1}; q^e)
/// through q^T for every partition mu with parts <= max_part and
/// min_principal_degree <= T (all others vanish through q^T).
std::unordered_map<Partition, ZSeries, PartitionHash>
principal_specializations(int max_part, int e, int T, int num_vars);

/// P_lambda(1, q, q^2, ...; q^e) through q^T, computed with T+1 variables;
/// adding further variables only changes coefficients beyond q^T.
ZSeries hl_principal(const Partition& lambda, int e, int T);

/// Same, with an explicit variable count (used by the stability tests).
ZSeries hl_principal_with_vars(const Partition& lambda, int e, int T, int num_vars);

}  // namespace qrr
