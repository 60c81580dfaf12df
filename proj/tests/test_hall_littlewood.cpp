#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qrr/hall_littlewood.hpp"

using namespace qrr;

namespace {

bool has_child(const HorizontalStripExpansion& exp, const Partition& mu) {
    for (const StripChild& sc : exp.children)
        if (sc.child == mu) return true;
    return false;
}

}  // namespace

TEST_CASE("empty partition evaluates to 1") {
    oracles::RatGen gen(1001);
    const auto x = gen.distinct_points(3);
    CHECK(hl_direct_at_points(Partition(), x, make_rat(Int(2), Int(3))) == 1);
    CHECK(hl_branching_at_points(Partition(), x, make_rat(Int(2), Int(3))) == 1);
}

TEST_CASE("two-variable closed forms") {
    oracles::RatGen gen(1002);
    const Rat t = make_rat(Int(3), Int(5));
    for (int iter = 0; iter < 5; ++iter) {
        const auto x = gen.distinct_points(2);
        // P_(1,1) = e_2
        CHECK(hl_direct_at_points(Partition::of({1, 1}), x, t) == x[0] * x[1]);
        // P_(2) = x1^2 + x2^2 + (1-t) x1 x2
        CHECK(hl_direct_at_points(Partition::of({2}), x, t) ==
              x[0] * x[0] + x[1] * x[1] + (Rat(1) - t) * x[0] * x[1]);
    }
}

TEST_CASE("direct oracle input validation") {
    const Rat t = make_rat(Int(1), Int(2));
    const std::vector<Rat> repeated{Rat(1), Rat(1)};
    CHECK_THROWS_AS(hl_direct_at_points(Partition::of({1}), repeated, t), std::invalid_argument);
    const std::vector<Rat> single{Rat(2)};
    CHECK_THROWS_AS(hl_direct_at_points(Partition::of({1, 1}), single, t), std::invalid_argument);
    // v_lambda(t) = 0 at t = -1 when a multiplicity reaches 2
    const std::vector<Rat> two{Rat(2), Rat(3)};
    CHECK_THROWS_AS(hl_direct_at_points(Partition::of({1, 1}), two, Rat(-1)), std::domain_error);
}

TEST_CASE("homogeneity of the direct oracle") {
    oracles::RatGen gen(1003);
    const Rat t = make_rat(Int(-2), Int(7));
    for (const auto& lam : {Partition::of({2}), Partition::of({2, 1}), Partition::of({3, 1})}) {
        const auto x = gen.distinct_points(3);
        const Rat s = make_rat(Int(3), Int(2));
        std::vector<Rat> scaled;
        for (const Rat& xi : x) scaled.push_back(s * xi);
        CHECK(hl_direct_at_points(lam, scaled, t) ==
              pow_rat(s, static_cast<unsigned long>(lam.weight())) * hl_direct_at_points(lam, x, t));
    }
}

TEST_CASE("horizontal strip children") {
    const auto from_empty = horizontal_strip_children(Partition());
    REQUIRE(from_empty.children.size() == 1);
    CHECK(from_empty.children[0].child.empty());
    CHECK(from_empty.children[0].boxes == 0);
    CHECK(from_empty.children[0].psi_exponents.empty());

    const auto from_one = horizontal_strip_children(Partition::of({1}));
    REQUIRE(from_one.children.size() == 2);
    CHECK(has_child(from_one, Partition::of({1})));
    CHECK(has_child(from_one, Partition()));

    const auto from_22 = horizontal_strip_children(Partition::of({2, 2}));
    REQUIRE(from_22.children.size() == 3);
    CHECK(has_child(from_22, Partition::of({2, 2})));
    CHECK(has_child(from_22, Partition::of({2, 1})));
    CHECK(has_child(from_22, Partition::of({2})));

    // interlacing lambda_i >= mu_i >= lambda_{i+1} for every child
    for (long n = 0; n <= 6; ++n) {
        for (const Partition& lam : enumerate_partitions(n, n)) {
            for (const StripChild& sc : horizontal_strip_children(lam).children) {
                for (int i = 0; i < lam.length(); ++i) {
                    CHECK(sc.child.part(i) <= lam.part(i));
                    CHECK(sc.child.part(i) >= lam.part(i + 1));
                }
                CHECK(sc.boxes == lam.weight() - sc.child.weight());
            }
        }
    }
}

TEST_CASE("psi polynomial expands the factored form") {
    StripChild sc;
    sc.psi_exponents = {1, 2};
    // (1 - t)(1 - t^2) = 1 - t - t^2 + t^3
    const auto poly = psi_polynomial(sc);
    REQUIRE(poly.size() == 4);
    CHECK(poly[0] == 1);
    CHECK(poly[1] == -1);
    CHECK(poly[2] == -1);
    CHECK(poly[3] == 1);
    CHECK(psi_evaluate(sc, Rat(2)) == Rat(3));  // (1-2)(1-4)
}

TEST_CASE("branching agrees with the direct definition") {
    oracles::RatGen gen(424242);
    for (long size = 0; size <= 5; ++size) {
        for (const Partition& lam : enumerate_partitions(size, size)) {
            for (int n = std::max(1, lam.length()); n <= 4; ++n) {
                const auto x = gen.distinct_points(n);
                Rat t = gen.next();
                while (t == 1 || t == -1) t = gen.next();
                CHECK(hl_branching_at_points(lam, x, t) == hl_direct_at_points(lam, x, t));
            }
        }
    }
}

TEST_CASE("principal specialization basics") {
    CHECK(hl_principal(Partition(), 1, 8) == ZSeries::one(8));

    // P_(2)(1,q,...;q) = 1/(1-q)
    ZSeries geo = ZSeries::one(10);
    geo.div_binomial(1);
    CHECK(hl_principal(Partition::of({2}), 1, 10) == geo);

    // P_(2,2)(1,q,...;q) = q^2/((1-q)(1-q^2))
    ZSeries rhs = ZSeries::one(12);
    rhs.div_binomial(1);
    rhs.div_binomial(2);
    CHECK(hl_principal(Partition::of({2, 2}), 1, 12) == rhs.shifted(2));
}

TEST_CASE("column of twos matches the explicit quotient") {
    const int T = 30;
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> parts(static_cast<std::size_t>(n), 2);
        const ZSeries lhs = hl_principal(Partition(parts), 1, T).shifted(n);
        ZSeries rhs = ZSeries::one(T);
        for (int k = 1; k <= n; ++k) rhs.div_binomial(k);
        rhs = rhs.shifted(n * n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("stability in the number of variables") {
    const int T = 30;
    for (long size = 0; size <= 6; ++size) {
        for (const Partition& lam : enumerate_partitions(size, size)) {
            for (int e = 1; e <= 3; ++e) {
                CHECK(hl_principal_with_vars(lam, e, T, T + 1) ==
                      hl_principal_with_vars(lam, e, T, T + 5));
            }
        }
    }
}

TEST_CASE("partitions vanish when the minimal degree exceeds the truncation") {
    // (1^5) has minimal principal degree 10
    const Partition lam = Partition::of({1, 1, 1, 1, 1});
    CHECK(hl_principal(lam, 1, 9).is_zero());
    CHECK_FALSE(hl_principal(lam, 1, 10).is_zero());
}
