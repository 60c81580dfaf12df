#include "qrr/recursion.hpp"

#include <stdexcept>

#include "qrr/partitions.hpp"

namespace qrr {

namespace {

// (-1)^{sum m} (sum m - 1)! / prod m_i!, from the multiplicities of a partition.
Rat multiplicity_coefficient(const Partition& p, bool sign_by_even_indices) {
    long total = p.length();
    Int den(1);
    long even_index_count = 0;
    int i = 0;
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && p.part(j) == p.part(i)) ++j;
        den *= factorial(static_cast<unsigned long>(j - i));
        if (p.part(i) % 2 == 0) even_index_count += j - i;
        i = j;
    }
    Int num = factorial(static_cast<unsigned long>(total - 1));
    const long sign_count = sign_by_even_indices ? even_index_count : total;
    if (sign_count % 2 != 0) num = -num;
    return make_rat(std::move(num), std::move(den));
}

}  // namespace

std::vector<FhatTerm> fhat_terms(int n) {
    if (n < 2) throw std::invalid_argument("fhat_terms: defined only for n >= 2");
    std::vector<FhatTerm> out;
    for (const Partition& p : enumerate_partitions(n, n - 1)) {
        FhatTerm term;
        term.multiplicities.assign(static_cast<std::size_t>(n - 1), 0);
        for (int part : p.parts()) term.multiplicities[static_cast<std::size_t>(part - 1)] += 1;
        term.coefficient = multiplicity_coefficient(p, /*sign_by_even_indices=*/false);
        out.push_back(std::move(term));
    }
    return out;
}

Rat fhat_eval(int n, const std::vector<Rat>& x) {
    if (n < 2) throw std::invalid_argument("fhat_eval: defined only for n >= 2");
    if (static_cast<int>(x.size()) < n - 1)
        throw std::invalid_argument("fhat_eval: need n-1 argument values");
    Rat total(0);
    for (const Partition& p : enumerate_partitions(n, n - 1)) {
        Rat term = multiplicity_coefficient(p, false);
        int i = 0;
        while (i < p.length()) {
            int j = i;
            while (j < p.length() && p.part(j) == p.part(i)) ++j;
            term *= pow_rat(x[static_cast<std::size_t>(p.part(i) - 1)],
                            static_cast<unsigned long>(j - i));
            i = j;
        }
        total += term;
    }
    return total;
}

Int b_from_c(const std::function<long(long)>& c, long n) {
    if (n < 1) throw std::invalid_argument("b_from_c: n must be >= 1");
    Int sum(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += Int(c(d)) * d;
        const long e = n / d;
        if (e != d) sum += Int(c(e)) * e;
    }
    return sum;
}

std::vector<Int> recurse_coefficients(const std::function<long(long)>& c, int count) {
    if (count < 0) throw std::invalid_argument("recurse_coefficients: count must be >= 0");
    std::vector<Rat> a(static_cast<std::size_t>(count) + 1);
    a[0] = 1;
    if (count >= 1) a[1] = -c(1);
    for (int n = 2; n <= count; ++n) {
        const std::vector<Rat> prev(a.begin() + 1, a.begin() + n);
        Rat bn(b_from_c(c, n));
        a[static_cast<std::size_t>(n)] = fhat_eval(n, prev) - bn / n;
    }
    std::vector<Int> out;
    out.reserve(a.size());
    for (const Rat& v : a) out.push_back(require_integral(v, "recurse_coefficients"));
    return out;
}

std::vector<Rat> power_sums_from_elementary(const std::vector<Rat>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<Rat> s(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Rat acc = sigma[static_cast<std::size_t>(k - 1)] * k;
        if (k % 2 == 0) acc = -acc;
        for (int j = 1; j < k; ++j) {
            Rat term = sigma[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(k - j - 1)];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        s[static_cast<std::size_t>(k - 1)] = acc;
    }
    return s;
}

std::vector<Rat> power_sums_explicit(const std::vector<Rat>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<Rat> s(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Rat total(0);
        for (const Partition& p : enumerate_partitions(k, k)) {
            Rat term = multiplicity_coefficient(p, /*sign_by_even_indices=*/true);
            int i = 0;
            while (i < p.length()) {
                int j = i;
                while (j < p.length() && p.part(j) == p.part(i)) ++j;
                term *= pow_rat(sigma[static_cast<std::size_t>(p.part(i) - 1)],
                                static_cast<unsigned long>(j - i));
                i = j;
            }
            total += term;
        }
        s[static_cast<std::size_t>(k - 1)] = total * k;
    }
    return s;
}

}  // namespace qrr
