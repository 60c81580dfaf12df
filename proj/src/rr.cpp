#include "qrr/rr.hpp"

#include <stdexcept>

#include "qrr/hall_littlewood.hpp"

namespace qrr {

Nu Nu::of(int c, int d) {
    for (const Nu& nu : all())
        if (nu.c_ == c && nu.d_ == d) return nu;
    throw std::invalid_argument("Nu: (" + std::to_string(c) + "," + std::to_string(d) +
                                ") is not one of (1,-1),(2,-1),(1,0),(2,-2)");
}

const std::array<Nu, 4>& Nu::all() {
    static const std::array<Nu, 4> table{Nu(1, -1), Nu(2, -1), Nu(1, 0), Nu(2, -2)};
    return table;
}

std::string Nu::label() const {
    return "(" + std::to_string(c_) + "," + std::to_string(d_) + ")";
}

RRSpec::RRSpec(Nu nu_, int a_, int b_) : nu(nu_), a(a_), b(b_) {
    if (a < 1 || b < 1) throw std::invalid_argument("RRSpec: need a >= 1 and b >= 1");
    if (nu == Nu::of(2, -2) && b < 2)
        throw std::invalid_argument("RRSpec: family (2,-2) requires b >= 2");
}

int RRSpec::kappa() const {
    if (nu == Nu::of(1, 0)) return 2 * a + 2 * b + 2;
    if (nu == Nu::of(2, -2)) return 2 * a + 2 * b;
    return 2 * a + 2 * b + 1;
}

std::string RRSpec::to_string() const {
    return "R_" + nu.label() + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

PeriodicExponents::PeriodicExponents(int kappa) : exp_(static_cast<std::size_t>(kappa)) {
    if (kappa < 1) throw std::invalid_argument("PeriodicExponents: kappa must be >= 1");
}

long PeriodicExponents::at_residue(int r) const {
    if (r < 0 || r >= modulus()) throw std::out_of_range("PeriodicExponents: residue");
    return exp_[static_cast<std::size_t>(r)];
}

void PeriodicExponents::add_at_residue(int r, long delta) {
    if (r < 0 || r >= modulus()) throw std::out_of_range("PeriodicExponents: residue");
    exp_[static_cast<std::size_t>(r)] += delta;
}

PeriodicExponents& PeriodicExponents::operator+=(const PeriodicExponents& o) {
    if (o.modulus() != modulus())
        throw std::invalid_argument("PeriodicExponents: modulus mismatch");
    for (int r = 0; r < modulus(); ++r) exp_[static_cast<std::size_t>(r)] += o.exp_[static_cast<std::size_t>(r)];
    return *this;
}

PeriodicExponents& PeriodicExponents::operator-=(const PeriodicExponents& o) {
    if (o.modulus() != modulus())
        throw std::invalid_argument("PeriodicExponents: modulus mismatch");
    for (int r = 0; r < modulus(); ++r) exp_[static_cast<std::size_t>(r)] -= o.exp_[static_cast<std::size_t>(r)];
    return *this;
}

bool PeriodicExponents::is_zero() const {
    for (long e : exp_)
        if (e != 0) return false;
    return true;
}

ZSeries PeriodicExponents::expand(int T) const {
    return expand_exponent_product([this](long t) { return at(t); }, T);
}

PeriodicExponents theta_exponents(int s, int kappa) {
    if (kappa < 1) throw std::invalid_argument("theta_exponents: kappa must be >= 1");
    const int r = ((s % kappa) + kappa) % kappa;
    if (r == 0) throw std::invalid_argument("theta_exponents: s = 0 (mod kappa) degenerates");
    PeriodicExponents pe(kappa);
    pe.add_at_residue(r, 1);
    pe.add_at_residue(kappa - r, 1);
    return pe;
}

namespace {

// (q^kappa; q^kappa)_inf^e / (q)_inf^e: +e at residue 0, -e at every residue.
void add_prefactor(PeriodicExponents& pe, int e) {
    const int kappa = pe.modulus();
    pe.add_at_residue(0, e);
    for (int r = 0; r < kappa; ++r) pe.add_at_residue(r, -e);
}

// theta(q^s; q^{kappa/2}) folded into a modulus-kappa vector (kappa even).
void add_half_modulus_theta(PeriodicExponents& pe, int s) {
    const int kappa = pe.modulus();
    const int h = kappa / 2;
    const int r = ((s % h) + h) % h;
    if (r == 0) throw std::invalid_argument("theta_exponents: s = 0 (mod kappa/2) degenerates");
    for (int base : {r, h - r}) {
        pe.add_at_residue(base % kappa, 1);
        pe.add_at_residue((base + h) % kappa, 1);
    }
}

}  // namespace

PeriodicExponents product_exponents(const RRSpec& spec, ProductForm form) {
    const int kappa = spec.kappa();
    PeriodicExponents pe(kappa);
    const Nu nu = spec.nu;
    const bool a_indexed = form == ProductForm::AIndexed;

    if (nu == Nu::of(1, -1)) {
        if (a_indexed) {
            add_prefactor(pe, spec.a);
            for (int i = 1; i <= spec.a; ++i) pe += theta_exponents(i + 1, kappa);
            for (int i = 1; i <= spec.a; ++i)
                for (int j = i + 1; j <= spec.a; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j + 1, kappa);
        } else {
            add_prefactor(pe, spec.b);
            for (int i = 1; i <= spec.b; ++i) pe += theta_exponents(i + spec.a, kappa);
            for (int i = 1; i <= spec.b; ++i)
                for (int j = i + 1; j <= spec.b; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j - 1, kappa);
        }
    } else if (nu == Nu::of(2, -1)) {
        // both displays have the same shape, indexed by a and b respectively
        const int n = a_indexed ? spec.a : spec.b;
        add_prefactor(pe, n);
        for (int i = 1; i <= n; ++i) pe += theta_exponents(i, kappa);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                pe += theta_exponents(j - i, kappa) + theta_exponents(i + j, kappa);
    } else if (nu == Nu::of(1, 0)) {
        if (a_indexed) {
            add_prefactor(pe, spec.a);
            for (int i = 1; i <= spec.a; ++i) pe += theta_exponents(i + 1, kappa);
            for (int i = 1; i <= spec.a; ++i)
                for (int j = i + 1; j <= spec.a; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j + 1, kappa);
        } else {
            // (q^2;q^2)(q^{k/2};q^{k/2})(q^k;q^k)^{b-1} / (q)^{b+1}, with the
            // 2- and kappa/2-periodic factors folded into the kappa-vector.
            for (int r = 0; r < kappa; r += 2) pe.add_at_residue(r, 1);
            pe.add_at_residue(0, 1);
            pe.add_at_residue(kappa / 2, 1);
            pe.add_at_residue(0, spec.b - 1);
            for (int r = 0; r < kappa; ++r) pe.add_at_residue(r, -(spec.b + 1));
            for (int i = 1; i <= spec.b; ++i) add_half_modulus_theta(pe, i);
            for (int i = 1; i <= spec.b; ++i)
                for (int j = i + 1; j <= spec.b; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j, kappa);
        }
    } else {  // (2,-2)
        if (a_indexed) {
            add_prefactor(pe, spec.a);
            for (int i = 1; i <= spec.a; ++i) pe += theta_exponents(i, kappa);
            for (int i = 1; i <= spec.a; ++i)
                for (int j = i + 1; j <= spec.a; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j, kappa);
        } else {
            // (q^k;q^k)^b / ((q^2;q^2)(q)^{b-1})
            pe.add_at_residue(0, spec.b);
            for (int r = 0; r < kappa; r += 2) pe.add_at_residue(r, -1);
            for (int r = 0; r < kappa; ++r) pe.add_at_residue(r, -(spec.b - 1));
            for (int i = 1; i <= spec.b; ++i)
                for (int j = i + 1; j <= spec.b; ++j)
                    pe += theta_exponents(j - i, kappa) + theta_exponents(i + j - 1, kappa);
        }
    }
    return pe;
}

PeriodicExponents c_table(const RRSpec& spec) {
    return product_exponents(spec, ProductForm::AIndexed);
}

std::optional<PeriodicExponents> closed_form_exponents(const RRSpec& spec) {
    const int kappa = spec.kappa();
    int zero_pair = 0;
    if (spec.nu == Nu::of(2, -1) && (spec.a == 1 || spec.b == 1)) {
        zero_pair = 1;
    } else if (spec.nu == Nu::of(1, -1) && spec.b == 1) {
        zero_pair = spec.a + 1;
    } else if (spec.nu == Nu::of(1, -1) && spec.a == 1) {
        zero_pair = 2;
    } else {
        return std::nullopt;
    }
    PeriodicExponents pe(kappa);
    for (int r = 1; r < kappa; ++r) pe.add_at_residue(r, -1);
    pe.add_at_residue(zero_pair % kappa, 1);
    pe.add_at_residue(kappa - zero_pair % kappa, 1);
    return pe;
}

ZSeries product_side(const RRSpec& spec, int T) { return c_table(spec).expand(T); }

ZSeries sum_side(const RRSpec& spec, int T) {
    if (T < 0) throw std::invalid_argument("sum_side: need T >= 0");
    const int c = spec.weight_scale();
    const int e = spec.hl_t_exponent();
    const auto table = principal_specializations(2 * spec.a, e, T, T + 1);

    ZSeries out(T);
    // partitions lambda with parts <= a and c|lambda| <= T; deeper pruning is
    // left to the vanishing of the principal specializations themselves
    std::vector<int> prefix;
    auto rec = [&](auto&& self, long weight, int max_next) -> void {
        Partition lam(prefix);
        auto it = table.find(lam.doubled());
        if (it != table.end()) out.add_shifted(it->second, static_cast<int>(c * weight));
        const long cap = T / c - weight;  // c*|lambda| <= T
        for (int p = static_cast<int>(std::min<long>(max_next, cap)); p >= 1; --p) {
            prefix.push_back(p);
            self(self, weight + p, p);
            prefix.pop_back();
        }
    };
    rec(rec, 0, spec.a);
    return out;
}

}  // namespace qrr
