#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qrr/modp.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// Psi_m = prod (1-q^{mt})/(1-q^t) = sum d_m(n) q^n through q^T, where
/// d_m(n) counts m-regular partitions of n.
ZSeries psi_series(int m, int T);

/// Assertion that d_m(A n + B) = 0 (mod p) for all n >= 0; verified here only
/// up to a stated bound, never proven.
struct CongruenceClaim {
    int m = 2;
    long stride = 1;   // A >= 1
    long offset = 0;   // 0 <= B < A
    long prime = 2;    // p
};

struct Counterexample {
    long n = 0;
    long argument = 0;        // stride*n + offset
    std::uint32_t residue = 0;  // d_m(argument) mod p
};

struct ClaimReport {
    long samples_checked = 0;
    long verified_through = 0;  // largest argument examined
    std::optional<Counterexample> counterexample;
    bool verified() const { return !counterexample.has_value(); }
};

/// Checks d_m(An+B) mod p for every argument An+B <= T. The counting DP is
/// run mod p (reduction commutes with the DP), with the word-level kernels
/// from qrr::modp.
ClaimReport verify_claim(const CongruenceClaim& claim, long T);

/// All progressions (A <= A_max, B < A) whose sampled values d_m(An+B),
/// An+B <= T, are all 0 mod p, provided at least min_samples arguments were
/// seen. Output is empirical evidence only, deterministically ordered by (A, B).
std::vector<CongruenceClaim> scan_progressions(int m, long p, long A_max, long T,
                                               long min_samples);

/// Index of the level-N congruence subgroup: N * prod_{primes r | N} (1 + 1/r).
long gamma0_index(long N);

/// ceil(k/12 * gamma0_index(N)): number of initial coefficients whose
/// vanishing mod p certifies a weight-k form on the level-N group is 0 mod p.
long sturm_bound(int k, long N);

/// A formal eta quotient prod_{delta | N} eta(delta z)^{r_delta}.
struct EtaQuotientSpec {
    long level = 1;                                // N
    std::vector<std::pair<long, long>> exponents;  // (delta, r_delta)
};

struct EtaConditionsReport {
    Rat weight;               // (1/2) sum r_delta
    bool integral_weight = false;
    bool cond24_delta = false;     // sum delta * r_delta = 0 (mod 24)
    bool cond24_codelta = false;   // sum (N/delta) * r_delta = 0 (mod 24)
    Rat s;                         // prod delta^{r_delta}
    std::optional<Int> character_discriminant;  // (-1)^k * s, integral weight only
};

EtaConditionsReport eta_quotient_conditions(const EtaQuotientSpec& spec);

/// Kronecker symbol (a | n), the completely multiplicative extension of the
/// Legendre symbol to all integers.
int kronecker_symbol(const Int& a, const Int& n);

/// Coefficients b_m(0..T) of q^{m-1} prod (1-q^{24t})^{m-1}: supported on the
/// residue class m-1 mod 24, with b_m(24n+m-1) = [q^n] prod (1-q^t)^{m-1}.
std::vector<Int> eta_power_series(int m, long T);

/// Coefficient action of the weight-k Hecke operator at p:
/// c(n) = a(pn) + chi(p) p^{k-1} a(n/p), with a(n/p) read as 0 when p does
/// not divide n; defined through floor(T/p).
struct HeckeInput {
    std::vector<Int> coefficients;  // a(0..T)
    long p = 2;
    int weight = 1;                 // k >= 1
    std::function<int(long)> chi;   // character values; defaults to 1
};

std::vector<Int> hecke_apply(const HeckeInput& input);

/// sum_{n in Z} q^{n^2} = 1 + 2q + 2q^4 + 2q^9 + ... truncated at T.
ZSeries jacobi_theta_series(int T);

}  // namespace qrr
