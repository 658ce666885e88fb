#include <doctest.h>

#include "waring/identities.hpp"
#include "waring/partition.hpp"

#include <vector>

using namespace waring;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("thm1_rhs slices") {
    auto e_slices = thm1_rhs(Basis::e, 1, 1);
    CHECK(e_slices[0] == SymExpr::atom(Basis::e, P({1})));
    SymExpr t1(Basis::e);
    t1.add_term(P({1, 1}), ZPoly(1));
    t1.add_term(P({2}), ZPoly(Rational(-2)));
    CHECK(e_slices[1] == t1);

    auto h_slices = thm1_rhs(Basis::h, 1, 0);
    CHECK(h_slices[0] == SymExpr::atom(Basis::h, P({1})));

    CHECK_THROWS_AS(thm1_rhs(Basis::m, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(thm1_rhs(Basis::e, 0, 1), std::invalid_argument);
}

TEST_CASE("thm2_rhs slices") {
    auto h_slices = thm2_rhs(Basis::h, 1, 3);
    auto e_slices = thm2_rhs(Basis::e, 1, 3);
    for (int d = 0; d <= 3; ++d) {
        CHECK(h_slices[d] == SymExpr::atom(Basis::p, P({d + 1})));
        CHECK(e_slices[d] == h_slices[d]);
    }

    auto h2 = thm2_rhs(Basis::h, 2, 0);
    SymExpr expected(Basis::p);
    expected.add_term(P({1, 1}), ZPoly(Rational(1, 2)));
    expected.add_term(P({2}), ZPoly(Rational(1, 2)));
    CHECK(h2[0] == expected);
}

TEST_CASE("F_direct low coefficients") {
    BiSeries f = F_direct(3, 2, 2);
    CHECK(f.coeff(0, 0) == MultiPoly::constant(3, Rational(1)));
    CHECK(f.coeff(1, 1) == expand(SymExpr::atom(Basis::p, P({1})), 3));
    CHECK(f.coeff(0, 1) == MultiPoly::constant(3, ZPoly::variable()));
}

TEST_CASE("F_expansion low coefficients") {
    CHECK(F_expansion(FVariant::monomial, 1, 1) == SymExpr::atom(Basis::m, P({1})));
    CHECK(F_expansion(FVariant::power_weight_shift, 1, 1) == SymExpr::atom(Basis::p, P({1})));
    for (int j = 1; j <= 4; ++j) {
        CHECK(F_expansion(FVariant::monomial, 0, j).is_zero());
        CHECK(F_expansion(FVariant::power_weight_shift, 0, j).is_zero());
        CHECK(F_expansion(FVariant::power_count_shift, 0, j).is_zero());
    }
}

TEST_CASE("cor4 sides") {
    auto [l1, r1] = cor4_sides(1, 1, P({1}));
    CHECK(l1 == ZPoly(1));
    CHECK(r1 == ZPoly(1));

    auto [l2, r2] = cor4_sides(2, 2, P({1, 1}));
    CHECK(l2 == ZPoly(1));
    CHECK(l2 == r2);

    // min(i,j) < l(mu) kills every term on both sides
    auto [l3, r3] = cor4_sides(1, 3, P({1, 1, 1}));
    CHECK(l3.is_zero());
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(cor4_sides(1, 2, P({1})), std::invalid_argument);
}

TEST_CASE("cor5 sides") {
    for (int j = 1; j <= 4; ++j) {
        auto [left, right] = cor5_sides(1, j, 4);
        CHECK(left == monomial_poly(P({j}), 4));
        CHECK(right == expand(SymExpr::atom(Basis::p, P({j})), 4));
    }
    auto [lz, rz] = cor5_sides(4, 3, 4);
    CHECK(lz.is_zero());
    CHECK(rz.is_zero());

    auto [l22, r22] = cor5_sides(2, 2, 2);
    CHECK(l22 == monomial_poly(P({1, 1}), 2));
    CHECK(l22 == r22);

    CHECK_THROWS_AS(cor5_sides(2, 3, 2), std::invalid_argument);
}

TEST_CASE("thm5 sides") {
    auto [l1, r1] = thm5_sides(P({1}), Rational(5, 7), 4);
    // both sides are exactly 1 - x w
    for (int d = 0; d <= 4; ++d) {
        ZPoly expected = d == 0 ? ZPoly(1)
                                : (d == 1 ? ZPoly::from_coeffs({Rational(0), Rational(-1)})
                                          : ZPoly());
        CHECK(l1[d] == expected);
        CHECK(r1[d] == expected);
    }

    auto [l0, r0] = thm5_sides(P({3, 2, 1}), Rational(-3, 2), 3);
    CHECK(l0[0] == ZPoly(1));
    CHECK(r0[0] == ZPoly(1));

    CHECK_THROWS_AS(thm5_sides(P({2}), Rational(0), 3), std::invalid_argument);
}

TEST_CASE("thm5 numeric spot-check lambda=(2), alpha=1") {
    // closed form at (x, y) = (1, 3): (2*3)/(3*4) = 1/2
    auto [left, right] = thm5_sides(P({2}), Rational(1), 6);
    CHECK(left == right);
    Rational w(1, 3);
    Rational value(0);
    Rational wpow(1);
    for (const auto& c : left) {
        value += c.eval(Rational(1)) * wpow;
        wpow *= w;
    }
    Rational closed(1, 2);
    Rational err = (value - closed).abs();
    // series is (1-w)/(1+w) = 1 - 2w + 2w^2 - ..., so the tail past w^6 at
    // w = 1/3 sums to exactly 1/1458
    CHECK(err == Rational(1, 1458));
}

TEST_CASE("thm6 sides") {
    auto [l11, r11] = thm6_sides(1, 1, 2, 3);
    // both are z + sum_k u^k p_k(Y)
    CHECK(l11[0] == MultiPoly::constant(2, ZPoly::variable()));
    for (int k = 1; k <= 3; ++k) CHECK(l11[k] == power_poly(k, 2));
    CHECK(l11 == r11);

    // r > n forces both sides to vanish
    auto [lz, rz] = thm6_sides(1, 2, 2, 3);
    for (const auto& c : lz) CHECK(c.is_zero());
    for (const auto& c : rz) CHECK(c.is_zero());

    // n=2, r=1: u^0 coefficient is z on both sides
    auto [l21, r21] = thm6_sides(2, 1, 2, 2);
    CHECK(l21[0] == MultiPoly::constant(2, ZPoly::variable()));
    CHECK(r21[0] == MultiPoly::constant(2, ZPoly::variable()));
}

TEST_CASE("appendix factorization, small instance") {
    IdentityReport report = appendix_factorization_check(2, 2, 2, 2);
    CHECK(report.verified);
    CHECK(report.identity == "app_factorization");
    CHECK_FALSE(report.discrepancy.has_value());
}

TEST_CASE("verify dispatch") {
    VerifyParams p;
    p.k = 2;
    p.t_order = 4;
    p.vars = 6;
    IdentityReport r1 = verify("thm1_e", p);
    CHECK(r1.verified);
    CHECK(r1.vars == 6);
    CHECK(r1.checked_degree == 6);
    CHECK(r1.params.at("k") == "2");

    VerifyParams p2;
    p2.i = 3;
    p2.j = 4;
    p2.mu = P({2, 1, 1});
    CHECK(verify("cor4", p2).verified);

    VerifyParams p3;
    p3.lambda = P({2, 1});
    p3.alpha = Rational(2);
    p3.w_order = 5;
    IdentityReport r3 = verify("thm5", p3);
    CHECK(r3.verified);
    CHECK(r3.params.at("alpha") == "2");

    VerifyParams bad;
    CHECK_THROWS_AS(verify("thm1_e", bad), std::invalid_argument);
    CHECK_THROWS_AS(verify("nope", bad), std::invalid_argument);
}

TEST_CASE("discrepancy reporting picks the graded-lex first difference") {
    MultiPoly a = power_poly(2, 2);                       // x1^2 + x2^2
    MultiPoly b = a + monomial_poly(P({1, 1}), 2);        // extra x1*x2 term
    auto diff = first_discrepancy(a, b, "t^3: ");
    REQUIRE(diff.has_value());
    CHECK(diff->monomial == "t^3: x1*x2");
    CHECK(diff->expected == "0");
    CHECK(diff->actual == "1");

    MultiPoly c = a + MultiPoly::constant(2, Rational(5));
    auto diff2 = first_discrepancy(a, c);
    REQUIRE(diff2.has_value());
    CHECK(diff2->monomial == "1");

    CHECK_FALSE(first_discrepancy(a, a).has_value());

    auto zdiff = first_discrepancy(binom_z(0, 2), binom_z(1, 2), "z");
    REQUIRE(zdiff.has_value());

    // failed reports carry the discrepancy and serialize it
    VerifyParams p;
    p.k = 1;
    IdentityReport fake = verify("thm1_e", p);
    fake.verified = false;
    fake.discrepancy = *diff;
    CHECK(fake.to_json().find("discrepancy") != std::string::npos);
    CHECK(fake.to_text().find("t^3: x1*x2") != std::string::npos);
}

TEST_CASE("identity catalog is complete and unique") {
    const auto& catalog = identity_catalog();
    CHECK(catalog.size() == 13);
    std::vector<std::string> ids;
    for (const auto& info : catalog) ids.push_back(info.id);
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}
