#include "qrr/hall_littlewood.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qrr {

namespace {

// Does the skew shape lambda/mu have a box in column c?
bool strip_has_box_in_column(const std::vector<int>& lam, const std::vector<int>& mu, int c) {
    for (std::size_t j = 0; j < lam.size(); ++j) {
        const int mj = j < mu.size() ? mu[j] : 0;
        if (mj < c && c <= lam[j]) return true;
    }
    return false;
}

void strip_rec(const std::vector<int>& lam, std::size_t row, std::vector<int>& cur,
               HorizontalStripExpansion& out) {
    if (row == lam.size()) {
        StripChild sc;
        std::vector<int> child_parts;
        for (int v : cur)
            if (v > 0) child_parts.push_back(v);
        sc.child = Partition(child_parts);
        sc.boxes = static_cast<int>(std::accumulate(lam.begin(), lam.end(), 0L) -
                                    std::accumulate(cur.begin(), cur.end(), 0L));
        const int max_col = lam.empty() ? 0 : lam[0];
        for (int i = 1; i < max_col; ++i) {
            if (!strip_has_box_in_column(lam, cur, i) && strip_has_box_in_column(lam, cur, i + 1))
                sc.psi_exponents.push_back(sc.child.multiplicity(i));
        }
        out.children.push_back(std::move(sc));
        return;
    }
    const int hi = lam[row];
    const int lo = row + 1 < lam.size() ? lam[row + 1] : 0;
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        strip_rec(lam, row + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

HorizontalStripExpansion horizontal_strip_children(const Partition& lambda) {
    HorizontalStripExpansion out{lambda, {}};
    std::vector<int> cur;
    strip_rec(lambda.parts(), 0, cur, out);
    return out;
}

std::vector<Int> psi_polynomial(const StripChild& child) {
    std::vector<Int> poly{Int(1)};
    for (int m : child.psi_exponents) {
        std::vector<Int> next(poly.size() + static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + static_cast<std::size_t>(m)] -= poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

Rat psi_evaluate(const StripChild& child, const Rat& t) {
    Rat v(1);
    for (int m : child.psi_exponents) v *= Rat(1) - pow_rat(t, static_cast<unsigned long>(m));
    return v;
}

namespace {

// (q)_m / (1-q)^m evaluated at q = t, written as prod_{j<=m} (1 + t + ... + t^{j-1})
// so that t = 1 needs no special casing.
Rat q_factorial_at(int m, const Rat& t) {
    Rat v(1);
    Rat bracket(0);
    Rat tpow(1);
    for (int j = 1; j <= m; ++j) {
        bracket += tpow;  // 1 + t + ... + t^{j-1}
        tpow *= t;
        v *= bracket;
    }
    return v;
}

}  // namespace

Rat hl_direct_at_points(const Partition& lambda, const std::vector<Rat>& x, const Rat& t) {
    const int n = static_cast<int>(x.size());
    if (n < lambda.length())
        throw std::invalid_argument("hl_direct_at_points: fewer variables than parts");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[i] == x[j]) throw std::invalid_argument("hl_direct_at_points: repeated points");

    // v_lambda(t) with the m_0 = n - l(lambda) factor included.
    Rat v = q_factorial_at(n - lambda.length(), t);
    {
        int i = 0;
        while (i < lambda.length()) {
            int j = i;
            while (j < lambda.length() && lambda.part(j) == lambda.part(i)) ++j;
            v *= q_factorial_at(j - i, t);
            i = j;
        }
    }
    if (v == 0) throw std::domain_error("hl_direct_at_points: v_lambda(t) vanishes");

    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    Rat total(0);
    do {
        Rat term(1);
        for (int i = 0; i < n; ++i) {
            const int li = lambda.part(i);
            if (li > 0) term *= pow_rat(x[w[i]], static_cast<unsigned long>(li));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                term *= (x[w[i]] - t * x[w[j]]) / (x[w[i]] - x[w[j]]);
        total += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return total / v;
}

Rat hl_branching_at_points(const Partition& lambda, const std::vector<Rat>& x, const Rat& t) {
    if (static_cast<int>(x.size()) < lambda.length()) return Rat(0);
    if (x.empty()) return Rat(lambda.empty() ? 1 : 0);
    std::vector<Rat> rest(x.begin(), x.end() - 1);
    Rat total(0);
    for (const StripChild& sc : horizontal_strip_children(lambda).children) {
        Rat term = psi_evaluate(sc, t);
        if (term == 0) continue;
        if (sc.boxes > 0) term *= pow_rat(x.back(), static_cast<unsigned long>(sc.boxes));
        total += term * hl_branching_at_points(sc.child, rest, t);
    }
    return total;
}

namespace {

struct BatchChild {
    int child_index;
    int boxes;
    std::vector<int> psi_exponents;
};

// Partitions with parts <= max_part and min_principal_degree <= T, together
// with their strip children (the set is closed under taking children).
struct BatchUniverse {
    std::vector<Partition> mus;
    std::unordered_map<Partition, int, PartitionHash> index;
    std::vector<std::vector<BatchChild>> children;
};

void universe_rec(int max_part, long T, std::vector<int>& prefix, long degree,
                  std::vector<Partition>& out) {
    out.emplace_back(prefix);
    const int hi = prefix.empty() ? max_part : std::min(max_part, prefix.back());
    const long row = static_cast<long>(prefix.size());  // next part lands in this row (0-based)
    for (int p = hi; p >= 1; --p) {
        const long d = degree + row * p;
        if (d > T) continue;
        prefix.push_back(p);
        universe_rec(max_part, T, prefix, d, out);
        prefix.pop_back();
    }
}

BatchUniverse build_universe(int max_part, int T) {
    BatchUniverse u;
    std::vector<int> prefix;
    universe_rec(max_part, T, prefix, 0, u.mus);
    for (std::size_t i = 0; i < u.mus.size(); ++i) u.index.emplace(u.mus[i], static_cast<int>(i));
    u.children.resize(u.mus.size());
    for (std::size_t i = 0; i < u.mus.size(); ++i) {
        for (StripChild& sc : horizontal_strip_children(u.mus[i]).children) {
            // children have smaller parts and degree, so the set is closed
            u.children[i].push_back(
                {u.index.at(sc.child), sc.boxes, std::move(sc.psi_exponents)});
        }
    }
    return u;
}

}  // namespace

std::unordered_map<Partition, ZSeries, PartitionHash>
principal_specializations(int max_part, int e, int T, int num_vars) {
    if (max_part < 0) throw std::invalid_argument("principal_specializations: max_part < 0");
    if (e < 1) throw std::invalid_argument("principal_specializations: need e >= 1");
    if (T < 0) throw std::invalid_argument("principal_specializations: need T >= 0");
    if (num_vars < 0) throw std::invalid_argument("principal_specializations: need num_vars >= 0");

    const BatchUniverse u = build_universe(max_part, T);
    const std::size_t count = u.mus.size();

    // f[i] = P_{mu_i}(x_1..x_n; q^e) through q^T, built one variable at a time
    // with x_n = q^{n-1}; `live` marks entries that are not identically zero.
    std::vector<ZSeries> cur(count, ZSeries(T)), next(count, ZSeries(T));
    std::vector<char> cur_live(count, 0), next_live(count, 0);
    cur[u.index.at(Partition())] = ZSeries::one(T);
    cur_live[u.index.at(Partition())] = 1;

    ZSeries scratch(T);
    for (int n = 1; n <= num_vars; ++n) {
        const long xpow = n - 1;  // x_n = q^{n-1}
        for (std::size_t i = 0; i < count; ++i) {
            next_live[i] = 0;
            if (u.mus[i].length() > n) continue;
            bool any = false;
            for (const BatchChild& bc : u.children[i]) {
                if (!cur_live[static_cast<std::size_t>(bc.child_index)]) continue;
                const long shift = xpow * bc.boxes;
                if (shift > T) continue;
                scratch = cur[static_cast<std::size_t>(bc.child_index)].shifted(static_cast<int>(shift));
                for (int m : bc.psi_exponents) {
                    const long tt = static_cast<long>(e) * m;
                    if (tt <= T) scratch.mul_binomial(static_cast<int>(tt));
                }
                if (!any) {
                    next[i] = scratch;
                    any = true;
                } else {
                    next[i] += scratch;
                }
            }
            if (any && next[i].is_zero()) any = false;
            next_live[i] = any ? 1 : 0;  // dead entries are never read
        }
        std::swap(cur, next);
        std::swap(cur_live, next_live);
    }

    std::unordered_map<Partition, ZSeries, PartitionHash> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        if (cur_live[i]) out.emplace(u.mus[i], std::move(cur[i]));
    return out;
}

ZSeries hl_principal_with_vars(const Partition& lambda, int e, int T, int num_vars) {
    if (e < 1) throw std::invalid_argument("hl_principal: need e >= 1");
    if (T < 0) throw std::invalid_argument("hl_principal: need T >= 0");
    if (lambda.empty()) return num_vars >= 0 ? ZSeries::one(T) : ZSeries(T);
    if (lambda.min_principal_degree() > T || lambda.length() > num_vars) return ZSeries(T);
    auto table = principal_specializations(lambda.part(0), e, T, num_vars);
    auto it = table.find(lambda);
    return it == table.end() ? ZSeries(T) : it->second;
}

ZSeries hl_principal(const Partition& lambda, int e, int T) {
    return hl_principal_with_vars(lambda, e, T, T + 1);
}

}  // namespace qrr
