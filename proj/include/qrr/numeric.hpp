#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qrr {

// Exact coefficient types. Int is an unbounded integer, Rat an always-reduced
// rational; gmpxx keeps canonical form through arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // powers of a canonical rational stay canonical
}

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

/// Converts an exactly-integral rational to Int; throws if a denominator survived.
inline Int require_integral(const Rat& x, const std::string& context) {
    if (!is_integral(x))
        throw std::logic_error(context + ": expected integral value, got " + x.get_str());
    return x.get_num();
}

// Unit tests for series inversion: which constants admit an exact inverse in
// the coefficient ring, and what that inverse is.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Int> {
    static bool is_unit(const Int& c) { return c == 1 || c == -1; }
    static Int unit_inverse(const Int& c) { return c; }  // +-1 are self-inverse
};

template <>
struct CoeffTraits<Rat> {
    static bool is_unit(const Rat& c) { return c != 0; }
    static Rat unit_inverse(const Rat& c) { return Rat(1) / c; }
};

}  // namespace qrr
