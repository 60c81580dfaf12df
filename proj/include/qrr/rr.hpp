#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qrr/partitions.hpp"
#include "qrr/series.hpp"

namespace qrr {

/// The family label nu = (c, d): c scales the weight in the sum side, d fixes
/// the Hall-Littlewood parameter t = q^{2b+d}. Only the four pairs for which
/// the series has a periodic product form are constructible.
class Nu {
public:
    static Nu of(int c, int d);
    int c() const { return c_; }
    int d() const { return d_; }
    static const std::array<Nu, 4>& all();
    std::string label() const;
    friend bool operator==(const Nu&, const Nu&) = default;

private:
    Nu(int c, int d) : c_(c), d_(d) {}
    int c_;
    int d_;
};

/// One member of a Rogers-Ramanujan family: nu together with a, b >= 1.
/// The (2,-2) family additionally requires b >= 2.
struct RRSpec {
    RRSpec(Nu nu, int a, int b);

    Nu nu;
    int a;
    int b;

    /// Modulus of the periodic product exponents:
    /// 2a+2b+1 for (1,-1) and (2,-1); 2a+2b+2 for (1,0); 2a+2b for (2,-2).
    int kappa() const;

    int weight_scale() const { return nu.c(); }     // c
    int hl_t_exponent() const { return 2 * b + nu.d(); }  // always >= 1

    std::string to_string() const;
};

/// Exponent vector of a product prod_{t>=1} (1-q^t)^{c(t)} with c periodic:
/// modulus kappa plus one integer exponent per residue class.
class PeriodicExponents {
public:
    explicit PeriodicExponents(int kappa);

    int modulus() const { return static_cast<int>(exp_.size()); }
    long at_residue(int r) const;
    void add_at_residue(int r, long delta);

    /// c(t) for t >= 1.
    long at(long t) const { return exp_[static_cast<std::size_t>(t % modulus())]; }

    const std::vector<long>& exponents() const { return exp_; }

    PeriodicExponents& operator+=(const PeriodicExponents& o);
    PeriodicExponents& operator-=(const PeriodicExponents& o);
    friend PeriodicExponents operator+(PeriodicExponents a, const PeriodicExponents& b) {
        return a += b;
    }
    friend PeriodicExponents operator-(PeriodicExponents a, const PeriodicExponents& b) {
        return a -= b;
    }
    friend bool operator==(const PeriodicExponents&, const PeriodicExponents&) = default;

    bool is_zero() const;

    ZSeries expand(int T) const;

private:
    std::vector<long> exp_;
};

/// theta(q^s; q^kappa) = (q^s; q^kappa)_inf (q^{kappa-s}; q^kappa)_inf as
/// exponents: +1 at residues s and kappa-s (accumulating to +2 when they
/// coincide). s = 0 mod kappa is rejected.
PeriodicExponents theta_exponents(int s, int kappa);

/// Each framework product formula has two displays, one running over b
/// ("B-indexed") and one over a ("A-indexed"); they expand to the same
/// exponent vector.
enum class ProductForm { AIndexed, BIndexed };

PeriodicExponents product_exponents(const RRSpec& spec,
                                    ProductForm form = ProductForm::AIndexed);

/// The exponent table c_nu(a,b; t) as a periodic vector (A-indexed display;
/// agreement of the two displays is covered by the duality tests).
PeriodicExponents c_table(const RRSpec& spec);

/// Closed-form exponent vector for the single-parameter cases of the (1,-1)
/// and (2,-1) families (zeros at 0 and one +-pair of residues, -1 elsewhere);
/// std::nullopt when no closed form applies.
std::optional<PeriodicExponents> closed_form_exponents(const RRSpec& spec);

/// Series side: sum over partitions lambda with lambda_1 <= a of
/// q^{c|lambda|} P_{2 lambda}(1, q, q^2, ...; q^{2b+d}), through q^T.
ZSeries sum_side(const RRSpec& spec, int T);

/// Product side: prod (1-q^t)^{c_nu(a,b;t)} through q^T.
ZSeries product_side(const RRSpec& spec, int T);

}  // namespace qrr
