#include <doctest.h>

#include "waring/partition.hpp"

#include <set>
#include <vector>

using namespace waring;

namespace {

// Independent oracle: Euler's pentagonal number recurrence for p(n).
std::vector<long> partition_counts(int n_max) {
    std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= n) total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition construction and statistics") {
    Partition mu({3, 3, 1});
    CHECK(mu.weight() == 7);
    CHECK(mu.length() == 3);
    CHECK(mu.multiplicity(3) == 2);
    CHECK(mu.multiplicity(2) == 0);
    CHECK(mu.str() == "[3,3,1]");
    CHECK(Partition().str() == "[]");
    CHECK(Partition::from_string("[3,3,1]") == mu);
    CHECK(Partition::from_string("3,3,1") == mu);
    CHECK(Partition::from_string("[]") == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("2,x"), std::invalid_argument);
}

TEST_CASE("partitions_of enumeration") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = partitions_of(4);
    std::vector<Partition> expected = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                       P({1, 1, 1, 1})};
    CHECK(p4 == expected);

    CHECK(partitions_of(10).size() == 42);

    auto counts = partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        auto parts = partitions_of(n);
        CHECK(static_cast<long>(parts.size()) == counts[static_cast<std::size_t>(n)]);
        std::set<std::vector<int>> seen;
        for (const auto& mu : parts) {
            CHECK(mu.weight() == n);
            seen.insert(mu.parts());
        }
        CHECK(seen.size() == parts.size());
    }
}

TEST_CASE("z_mu") {
    CHECK(z_of(P({1, 1, 1})) == 6);
    CHECK(z_of(P({2, 1})) == 2);
    CHECK(z_of(P({3, 3, 1})) == 18);
    CHECK(z_of(Partition()) == 1);
}

TEST_CASE("lassalle binomial, composition route") {
    CHECK(lassalle_binom(P({2, 1}), 2) == 2);
    CHECK(lassalle_binom(P({2, 1}), 3) == 1);
    CHECK(lassalle_binom(P({2, 1}), 1) == 0);
    CHECK(lassalle_binom(Partition(), 0) == 1);
    CHECK(lassalle_binom(Partition(), 2) == 0);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(Rational(lassalle_binom(P({n}), k)) == binom_int(n, k));
}

TEST_CASE("lassalle binomial generating polynomial") {
    CHECK(lassalle_binom_genfun(P({2, 1}), 3) ==
          ZPoly::from_coeffs({Rational(0), Rational(0), Rational(2), Rational(1)}));
    CHECK(lassalle_binom_genfun(P({1, 1}), 2) ==
          ZPoly::from_coeffs({Rational(0), Rational(0), Rational(1)}));
    CHECK(lassalle_binom_genfun(Partition(), 0) == ZPoly(1));
    CHECK_THROWS_AS(lassalle_binom_genfun(P({2, 1}), 2), std::invalid_argument);
}

TEST_CASE("dual-algorithm agreement and summation identities up to weight 10") {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& mu : partitions_of(n)) {
            ZPoly gen = lassalle_binom_genfun(mu, n);
            mpz_class total = 0;
            for (int k = 0; k <= n; ++k) {
                mpz_class direct = lassalle_binom(mu, k);
                CHECK(Rational(direct) == gen.coeff(k));
                total += direct;
            }
            // sum_k <mu/k> = prod_i (2^i - 1)^{m_i}
            mpz_class expected_total = 1;
            for (const auto& [part, mult] : mu.multiplicities()) {
                mpz_class base = (mpz_class(1) << part) - 1;
                for (int s = 0; s < mult; ++s) expected_total *= base;
            }
            CHECK(total == expected_total);
            if (!mu.empty()) {
                CHECK(lassalle_binom(mu, n) == 1);
                mpz_class prod_parts = 1;
                for (int part : mu.parts()) prod_parts *= part;
                CHECK(lassalle_binom(mu, mu.length()) == prod_parts);
            }
        }
    }
}

TEST_CASE("lassalle binomial beyond the composition-route cutoff") {
    // |mu| = 14, so k = 13, 14 take the generating-function route; values by
    // hand: dropping one cell from a row with at least two leaves 5+4+3+2
    // choices, dropping none leaves one
    Partition mu({5, 4, 3, 2});
    // two drops, no row emptied: C(5,2)+C(4,2)+C(3,2) + sum_{r<s} mu_r*mu_s
    CHECK(lassalle_binom(mu, 12) == 90);
    CHECK(lassalle_binom(mu, 13) == 14);
    CHECK(lassalle_binom(mu, 14) == 1);
    CHECK(lassalle_binom(mu, 15) == 0);
}

TEST_CASE("signed specialization anchoring the (-1)^(r-l) pattern") {
    // prod_i (1 - (1-q)^i)^{m_i} = sum_r (-1)^{r-l(mu)} <mu/r> q^r
    for (int n = 0; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            ZPoly lhs(1);
            for (const auto& [part, mult] : mu.multiplicities()) {
                std::vector<Rational> c(static_cast<std::size_t>(part) + 1);
                for (int s = 1; s <= part; ++s) {
                    int sign = (s + 1) % 2 == 0 ? 1 : -1;
                    c[static_cast<std::size_t>(s)] = Rational(sign) * binom_int(part, s);
                }
                lhs *= ZPoly::from_coeffs(std::move(c)).pow(static_cast<unsigned>(mult));
            }
            ZPoly rhs;
            for (int r = 0; r <= n; ++r) {
                int sign = ((r - mu.length()) % 2 + 2) % 2 == 0 ? 1 : -1;
                std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
                c[static_cast<std::size_t>(r)] = Rational(sign) * Rational(lassalle_binom(mu, r));
                rhs += ZPoly::from_coeffs(std::move(c));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ferrers alphabets") {
    auto single = ferrers_alphabet(P({1}), Rational(7, 2));
    CHECK(single.values == std::vector<Rational>{Rational(0)});

    auto hook = ferrers_alphabet(P({2, 1}), Rational(1));
    CHECK(hook.values == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});

    auto square = ferrers_alphabet(P({2, 2}), Rational(2));
    CHECK(square.values ==
          std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)});

    CHECK(ferrers_alphabet(Partition(), Rational(1)).values.empty());
    CHECK_THROWS_AS(ferrers_alphabet(P({1}), Rational(0)), std::invalid_argument);

    // power sums count multiplicity: lambda=(2,2), alpha=1 has cells {0,1,-1,0}
    auto rep = ferrers_alphabet(P({2, 2}), Rational(1));
    CHECK(power_sum(rep, 2) == Rational(2));
    CHECK(power_sum(rep, 1) == Rational(0));
    CHECK(power_sum(rep, P({2, 2})) == Rational(4));
    CHECK(power_sum(rep, Partition()) == Rational(1));
}

TEST_CASE("generalized Pochhammer") {
    ZPoly x = ZPoly::variable();

    // one-row partitions reduce to the rising factorial
    for (int n = 0; n <= 5; ++n) {
        Partition row = n == 0 ? Partition() : P({n});
        for (const Rational& a : {Rational(1), Rational(-5, 3), Rational(2)}) {
            CHECK(pochhammer(Rational(7, 2), row, a) ==
                  rising_factorial(Rational(7, 2), static_cast<unsigned long>(n)));
            CHECK(pochhammer(Rational(-2), row, a) ==
                  rising_factorial(Rational(-2), static_cast<unsigned long>(n)));
        }
    }

    CHECK(pochhammer(x, P({1, 1}), Rational(1)) ==
          ZPoly::from_coeffs({Rational(0), Rational(-1), Rational(1)}));
    CHECK(pochhammer(x, Partition(), Rational(3)) == ZPoly(1));
    CHECK(pochhammer(Rational(1), P({3}), Rational(5)) == Rational(6));
    CHECK_THROWS_AS(pochhammer(x, P({2}), Rational(0)), std::invalid_argument);

    // polynomial and scalar routes agree after evaluation
    Partition lam({3, 1});
    Rational a(-3, 2);
    ZPoly poly = pochhammer(x, lam, a);
    for (long v = -3; v <= 3; ++v)
        CHECK(poly.eval(Rational(v)) == pochhammer(Rational(v), lam, a));
}

TEST_CASE("canonical partition order groups by weight then reverse-lex") {
    std::vector<Partition> all;
    for (int n = 0; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) all.push_back(mu);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
}
