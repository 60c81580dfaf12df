#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qrr/numeric.hpp"

namespace qrr {

/// Formal power series in q with exact coefficients, truncated inclusively at
/// a fixed order T: exactly the coefficients of q^0..q^T are stored.
///
/// Binary operations on series of different orders truncate to the smaller
/// order. The representation is canonical: two series compare equal iff their
/// orders and all coefficients match.
template <class C>
class TruncatedSeries {
public:
    /// Zero series through q^order.
    explicit TruncatedSeries(int order) : coeff_(checked_order(order) + 1) {}

    TruncatedSeries(int order, std::vector<C> coeff) : coeff_(std::move(coeff)) {
        checked_order(order);
        if (static_cast<int>(coeff_.size()) != order + 1)
            throw std::invalid_argument("TruncatedSeries: need exactly order+1 coefficients");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeff_[0] = C(1);
        return s;
    }

    static TruncatedSeries monomial(int order, int degree, C value = C(1)) {
        TruncatedSeries s(order);
        if (degree < 0) throw std::invalid_argument("monomial: negative degree");
        if (degree <= order) s.coeff_[degree] = std::move(value);
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const C& operator[](int n) const { return coeff_[checked_index(n)]; }
    void set(int n, C v) { coeff_[checked_index(n)] = std::move(v); }
    const std::vector<C>& coefficients() const { return coeff_; }

    bool is_zero() const {
        for (const C& c : coeff_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (int n = 0; n <= order(); ++n) r.coeff_[n] = -coeff_[n];
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int T = std::min(a.order(), b.order());
        TruncatedSeries r(T);
        for (int n = 0; n <= T; ++n) r.coeff_[n] = a.coeff_[n] + b.coeff_[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int T = std::min(a.order(), b.order());
        TruncatedSeries r(T);
        for (int n = 0; n <= T; ++n) r.coeff_[n] = a.coeff_[n] - b.coeff_[n];
        return r;
    }

    /// Cauchy product truncated at min(order, other.order).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int T = std::min(a.order(), b.order());
        TruncatedSeries r(T);
        for (int i = 0; i <= T; ++i) {
            if (a.coeff_[i] == 0) continue;
            for (int j = 0; j + i <= T; ++j) {
                if (b.coeff_[j] == 0) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        if (o.order() < order()) coeff_.resize(o.order() + 1);
        for (int n = 0; n <= order(); ++n) coeff_[n] += o.coeff_[n];
        return *this;
    }

    /// this += q^shift * o, at this truncation order.
    void add_shifted(const TruncatedSeries& o, int shift) {
        if (shift < 0) throw std::invalid_argument("add_shifted: negative shift");
        const int T = order();
        for (int n = shift; n <= T; ++n) {
            const int m = n - shift;
            if (m > o.order()) break;
            coeff_[n] += o.coeff_[m];
        }
    }

    TruncatedSeries scaled(const C& s) const {
        TruncatedSeries r(order());
        for (int n = 0; n <= order(); ++n) r.coeff_[n] = coeff_[n] * s;
        return r;
    }

    /// Multiplication by q^k at the same truncation (top k coefficients fall off).
    TruncatedSeries shifted(int k) const {
        if (k < 0) throw std::invalid_argument("shifted: negative shift");
        TruncatedSeries r(order());
        for (int n = order(); n >= k; --n) r.coeff_[n] = coeff_[n - k];
        return r;
    }

    /// Restriction to a smaller truncation order.
    TruncatedSeries truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::invalid_argument("truncated: order must be in [0, current order]");
        return TruncatedSeries(new_order,
                               std::vector<C>(coeff_.begin(), coeff_.begin() + new_order + 1));
    }

    /// In-place multiplication by (1 - q^t).
    void mul_binomial(int t) {
        if (t < 1) throw std::invalid_argument("mul_binomial: t must be >= 1");
        for (int n = order(); n >= t; --n) coeff_[n] -= coeff_[n - t];
    }

    /// In-place division by (1 - q^t), i.e. multiplication by 1 + q^t + q^{2t} + ...
    void div_binomial(int t) {
        if (t < 1) throw std::invalid_argument("div_binomial: t must be >= 1");
        for (int n = t; n <= order(); ++n) coeff_[n] += coeff_[n - t];
    }

    /// Multiplicative inverse; requires the constant term to be a unit of the
    /// coefficient ring (+-1 for integers, nonzero for rationals).
    TruncatedSeries inverse() const {
        if (!CoeffTraits<C>::is_unit(coeff_[0]))
            throw std::domain_error("inverse: constant term is not a unit");
        const C c0inv = CoeffTraits<C>::unit_inverse(coeff_[0]);
        TruncatedSeries r(order());
        r.coeff_[0] = c0inv;
        for (int n = 1; n <= order(); ++n) {
            C acc(0);
            for (int k = 1; k <= n; ++k) acc += coeff_[k] * r.coeff_[n - k];
            r.coeff_[n] = -c0inv * acc;
        }
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int n = 0; n <= order(); ++n) {
            if (coeff_[n] == 0) continue;
            if (!first) os << " + ";
            os << coeff_[n];
            if (n > 0) os << "*q^" << n;
            first = false;
        }
        if (first) os << "0";
        os << " + O(q^" << order() + 1 << ")";
        return os.str();
    }

private:
    static int checked_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
        return order;
    }
    int checked_index(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries: index out of range");
        return n;
    }

    std::vector<C> coeff_;
};

using ZSeries = TruncatedSeries<Int>;
using QSeries = TruncatedSeries<Rat>;

inline QSeries to_rational(const ZSeries& s) {
    QSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.set(n, Rat(s[n]));
    return r;
}

inline ZSeries to_integral(const QSeries& s) {
    ZSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.set(n, require_integral(s[n], "to_integral"));
    return r;
}

/// (1 - q^t)^e through q^T. Nonnegative e expands by binomial coefficients;
/// negative e is the inverse of the expanded positive power, so all
/// intermediate arithmetic stays integral.
inline ZSeries expand_binomial_power(int t, long e, int T) {
    if (t < 1) throw std::invalid_argument("expand_binomial_power: t must be >= 1");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    ZSeries s(T);
    for (unsigned long k = 0; static_cast<long>(k) * t <= T; ++k) {
        if (k > mag) break;
        Int c = binomial(mag, k);
        if (k % 2 == 1) c = -c;
        s.set(static_cast<int>(k * t), std::move(c));
    }
    if (mag == 0) return ZSeries::one(T);
    return e < 0 ? s.inverse() : s;
}

/// prod_{t=1}^{T} (1 - q^t)^{c(t)} through q^T; factors with t > T cannot
/// affect the result.
inline ZSeries expand_exponent_product(const std::function<long(long)>& c, int T) {
    ZSeries s = ZSeries::one(T);
    for (int t = 1; t <= T; ++t) {
        long e = c(t);
        for (; e > 0; --e) s.mul_binomial(t);
        for (; e < 0; ++e) s.div_binomial(t);
    }
    return s;
}

/// (q^s; q^kappa)_infinity = prod_{n>=0} (1 - q^{kappa n + s}) through q^T.
inline ZSeries pochhammer_expand(int s, int kappa, int T) {
    if (s < 1 || kappa < 1) throw std::invalid_argument("pochhammer_expand: need s >= 1, kappa >= 1");
    ZSeries r = ZSeries::one(T);
    for (long t = s; t <= T; t += kappa) r.mul_binomial(static_cast<int>(t));
    return r;
}

}  // namespace qrr
