#include "qrr/congruences.hpp"

#include <stdexcept>

namespace qrr {

ZSeries psi_series(int m, int T) {
    if (m < 2) throw std::invalid_argument("psi_series: m must be >= 2");
    return expand_exponent_product([m](long t) { return t % m == 0 ? 0L : -1L; }, T);
}

ClaimReport verify_claim(const CongruenceClaim& claim, long T) {
    if (claim.m < 2) throw std::invalid_argument("verify_claim: m must be >= 2");
    if (claim.stride < 1 || claim.offset < 0 || claim.offset >= claim.stride)
        throw std::invalid_argument("verify_claim: need A >= 1 and 0 <= B < A");
    if (claim.prime < 2) throw std::invalid_argument("verify_claim: p must be >= 2");

    ClaimReport rep;
    if (claim.offset > T) return rep;
    const auto dm = modp::regular_counts_mod(claim.m, T,
                                             static_cast<std::uint32_t>(claim.prime));
    for (long n = 0;; ++n) {
        const long arg = claim.stride * n + claim.offset;
        if (arg > T) break;
        ++rep.samples_checked;
        rep.verified_through = arg;
        if (dm[static_cast<std::size_t>(arg)] != 0 && !rep.counterexample) {
            rep.counterexample = Counterexample{n, arg, dm[static_cast<std::size_t>(arg)]};
        }
    }
    return rep;
}

std::vector<CongruenceClaim> scan_progressions(int m, long p, long A_max, long T,
                                               long min_samples) {
    if (min_samples < 1) throw std::invalid_argument("scan_progressions: min_samples >= 1");
    const auto dm = modp::regular_counts_mod(m, T, static_cast<std::uint32_t>(p));
    std::vector<CongruenceClaim> found;
    for (long A = 1; A <= A_max; ++A) {
        for (long B = 0; B < A; ++B) {
            if (B > T) continue;
            const long samples = (T - B) / A + 1;
            if (samples < min_samples) continue;
            bool all_zero = true;
            for (long arg = B; arg <= T; arg += A) {
                if (dm[static_cast<std::size_t>(arg)] != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) found.push_back({m, A, B, p});
        }
    }
    return found;  // (A, B) loop order is already the deterministic sort order
}

long gamma0_index(long N) {
    if (N < 1) throw std::invalid_argument("gamma0_index: N must be >= 1");
    long index = N;
    long n = N;
    for (long r = 2; r * r <= n; ++r) {
        if (n % r != 0) continue;
        index = index / r * (r + 1);
        while (n % r == 0) n /= r;
    }
    if (n > 1) index = index / n * (n + 1);
    return index;
}

long sturm_bound(int k, long N) {
    if (k < 1) throw std::invalid_argument("sturm_bound: k must be >= 1");
    const long idx = gamma0_index(N);
    return (static_cast<long>(k) * idx + 11) / 12;
}

EtaConditionsReport eta_quotient_conditions(const EtaQuotientSpec& spec) {
    if (spec.level < 1) throw std::invalid_argument("eta_quotient_conditions: level >= 1");
    EtaConditionsReport rep;
    long r_sum = 0;
    long delta_sum_mod24 = 0;
    long codelta_sum_mod24 = 0;
    rep.s = 1;
    for (const auto& [delta, r] : spec.exponents) {
        if (delta < 1 || spec.level % delta != 0)
            throw std::invalid_argument("eta_quotient_conditions: delta must divide the level");
        r_sum += r;
        delta_sum_mod24 = (delta_sum_mod24 + (delta % 24) * (r % 24)) % 24;
        codelta_sum_mod24 = (codelta_sum_mod24 + ((spec.level / delta) % 24) * (r % 24)) % 24;
        const Rat dpow = pow_rat(Rat(delta), static_cast<unsigned long>(r < 0 ? -r : r));
        rep.s *= r < 0 ? Rat(1) / dpow : dpow;
    }
    rep.weight = make_rat(Int(r_sum), Int(2));
    rep.integral_weight = r_sum % 2 == 0;
    rep.cond24_delta = ((delta_sum_mod24 % 24) + 24) % 24 == 0;
    rep.cond24_codelta = ((codelta_sum_mod24 % 24) + 24) % 24 == 0;
    if (rep.integral_weight) {
        // (-1)^k s; for fractional s the symbol only depends on num*den
        const long k = r_sum / 2;
        Int disc = rep.s.get_num() * rep.s.get_den();
        if (k % 2 != 0) disc = -disc;
        rep.character_discriminant = disc;
    }
    return rep;
}

int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<Int> eta_power_series(int m, long T) {
    if (m < 2) throw std::invalid_argument("eta_power_series: m must be >= 2");
    if (T < 0) throw std::invalid_argument("eta_power_series: T must be >= 0");
    std::vector<Int> out(static_cast<std::size_t>(T) + 1);
    if (T < m - 1) return out;
    const int inner_T = static_cast<int>((T - (m - 1)) / 24);
    const ZSeries core =
        expand_exponent_product([m](long) { return static_cast<long>(m - 1); }, inner_T);
    for (int n = 0; n <= inner_T; ++n)
        out[static_cast<std::size_t>(24L * n + m - 1)] = core[n];
    return out;
}

std::vector<Int> hecke_apply(const HeckeInput& input) {
    if (input.p < 2) throw std::invalid_argument("hecke_apply: p must be >= 2");
    if (input.weight < 1) throw std::invalid_argument("hecke_apply: weight must be >= 1");
    const long T = static_cast<long>(input.coefficients.size()) - 1;
    if (T < 0) return {};
    const Int p_pow = pow_int(Int(input.p), static_cast<unsigned long>(input.weight - 1));
    const int chi_p = input.chi ? input.chi(input.p) : 1;
    std::vector<Int> out(static_cast<std::size_t>(T / input.p) + 1);
    for (long n = 0; n <= T / input.p; ++n) {
        Int c = input.coefficients[static_cast<std::size_t>(n * input.p)];
        if (n % input.p == 0)
            c += chi_p * p_pow * input.coefficients[static_cast<std::size_t>(n / input.p)];
        out[static_cast<std::size_t>(n)] = std::move(c);
    }
    return out;
}

ZSeries jacobi_theta_series(int T) {
    ZSeries s = ZSeries::one(T);
    for (long n = 1; n * n <= T; ++n) s.set(static_cast<int>(n * n), Int(2));
    return s;
}

}  // namespace qrr
