// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "waring/dsl.hpp"
#include "waring/identities.hpp"
#include "waring/partition.hpp"
#include "waring/symfunc.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace waring;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::ostringstream&)> run;  // appends failures to the stream
};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

void waring_baseline(std::ostringstream& fail) {
    for (int n = 1; n <= 6; ++n) {
        if (expand(power_in_elementary(n), 6) != power_poly(n, 6))
            fail << "power_in_elementary(" << n << ") ";
        if (expand(power_in_homogeneous(n), 6) != power_poly(n, 6))
            fail << "power_in_homogeneous(" << n << ") ";
    }
}

void theorem1(std::ostringstream& fail) {
    for (int k = 1; k <= 4; ++k) {
        BiSeries lhs = transformed_basis_series(Basis::p, k, 6, 6);
        for (Basis variant : {Basis::e, Basis::h}) {
            auto slices = thm1_rhs(variant, k, 6);
            for (int d = 0; d <= 6; ++d) {
                if (lhs.coeff(d, 0) != expand(slices[d], 6, false))
                    fail << "k=" << k << " variant=" << basis_letter(variant) << " t^" << d << " ";
            }
        }
    }
}

void theorem2(std::ostringstream& fail) {
    for (int k = 1; k <= 4; ++k) {
        for (Basis variant : {Basis::h, Basis::e}) {
            BiSeries lhs = transformed_basis_series(variant, k, 6, 6);
            auto slices = thm2_rhs(variant, k, 6);
            for (int d = 0; d <= 6; ++d) {
                if (lhs.coeff(d, 0) != expand(slices[d], 6, false))
                    fail << "k=" << k << " variant=" << basis_letter(variant) << " t^" << d << " ";
            }
        }
    }
}

void theorem3(std::ostringstream& fail) {
    BiSeries f = F_direct(6, 6, 6);
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            MultiPoly direct = f.coeff(j, i);
            MultiPoly via_m = expand(F_expansion(FVariant::monomial, i, j), 6);
            MultiPoly via_p1 = expand(F_expansion(FVariant::power_weight_shift, i, j), 6);
            MultiPoly via_p2 = expand(F_expansion(FVariant::power_count_shift, i, j), 6);
            if (via_m != direct) fail << "monomial(i=" << i << ",j=" << j << ") ";
            if (via_p1 != direct) fail << "p1(i=" << i << ",j=" << j << ") ";
            if (via_p2 != direct) fail << "p2(i=" << i << ",j=" << j << ") ";
        }
}

void corollary4(std::ostringstream& fail) {
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (const auto& mu : partitions_of(j)) {
                auto [left, right] = cor4_sides(i, j, mu);
                if (left != right) fail << "(i=" << i << ",j=" << j << ",mu=" << mu.str() << ") ";
            }
}

void corollary5(std::ostringstream& fail) {
    for (int j = 1; j <= 6; ++j)
        for (int k = 1; k <= j; ++k) {
            auto [left, right] = cor5_sides(k, j, 6);
            if (left != right) fail << "(k=" << k << ",j=" << j << ") ";
        }
}

void theorem5(std::ostringstream& fail) {
    const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(1, 2),
                                          Rational(-3, 2)};
    for (int w = 0; w <= 4; ++w)
        for (const auto& lambda : partitions_of(w))
            for (const auto& alpha : alphas) {
                auto [left, right] = thm5_sides(lambda, alpha, 6);
                if (left != right)
                    fail << "(lambda=" << lambda.str() << ",alpha=" << alpha.str() << ") ";
            }

    // spot-checks against the closed rational prod (y-x+c)/(y+c) at (1,3);
    // frozen exact truncation errors, each below 3^-6
    struct Spot {
        Partition lambda;
        Rational expected_err;
    };
    const std::vector<Spot> spots = {
        {P({2}), Rational(1, 1458)},
        {P({1, 1}), Rational(0)},
        {P({2, 1}), Rational(1, 972)},
    };
    for (const auto& spot : spots) {
        auto [left, right] = thm5_sides(spot.lambda, Rational(1), 6);
        Rational w(1, 3);
        Rational series_value(0), wpow(1);
        for (const auto& c : left) {
            series_value += c.eval(Rational(1)) * wpow;
            wpow *= w;
        }
        Rational closed(1);
        for (const auto& c : ferrers_alphabet(spot.lambda, Rational(1)).values)
            closed *= (Rational(3) - Rational(1) + c) / (Rational(3) + c);
        Rational err = (series_value - closed).abs();
        if (err != spot.expected_err)
            fail << "spot(" << spot.lambda.str() << ") err=" << err.str() << " ";
        if (err > Rational(1, 729)) fail << "spot(" << spot.lambda.str() << ") above 3^-6 ";
    }
}

void theorem6(std::ostringstream& fail) {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            auto [left, right] = thm6_sides(n, r, 3, 4);
            if (left != right) fail << "(n=" << n << ",r=" << r << ") ";
            if (r > n) {
                for (const auto& c : left)
                    if (!c.is_zero()) fail << "(n=" << n << ",r=" << r << ") lhs not 0 ";
                for (const auto& c : right)
                    if (!c.is_zero()) fail << "(n=" << n << ",r=" << r << ") rhs not 0 ";
            }
        }
}

void appendix(std::ostringstream& fail) {
    for (int w = 0; w <= 8; ++w)
        for (const auto& mu : partitions_of(w)) {
            ZPoly gen = lassalle_binom_genfun(mu, w);
            for (int k = 0; k <= w; ++k)
                if (gen.coeff(k) != Rational(lassalle_binom(mu, k)))
                    fail << "genfun(mu=" << mu.str() << ",k=" << k << ") ";
        }
    IdentityReport report = appendix_factorization_check(3, 2, 2, 2);
    if (!report.verified) fail << "factorization: " << report.discrepancy->monomial << " ";
}

void degeneration(std::ostringstream& fail) {
    for (int k = 1; k <= 5; ++k) {
        if (thm1_rhs(Basis::e, k, 0)[0] != power_in_elementary(k)) fail << "thm1_e k=" << k << " ";
        if (thm1_rhs(Basis::h, k, 0)[0] != power_in_homogeneous(k)) fail << "thm1_h k=" << k << " ";
        if (thm2_rhs(Basis::h, k, 0)[0] != complete_in_power(k)) fail << "thm2_h k=" << k << " ";
        if (thm2_rhs(Basis::e, k, 0)[0] != elementary_in_power(k)) fail << "thm2_e k=" << k << " ";
    }
}

std::string golden_report(int which) {
    if (which == 0) {
        VerifyParams p;
        p.k = 2;
        p.t_order = 4;
        p.vars = 6;
        return verify("thm1_e", p).to_json() + "\n";
    }
    if (which == 1) {
        VerifyParams p;
        p.i = 3;
        p.j = 4;
        p.mu = P({2, 1, 1});
        return verify("cor4", p).to_json() + "\n";
    }
    VerifyParams p;
    p.lambda = P({2, 1});
    p.alpha = Rational(2);
    p.w_order = 5;
    return verify("thm5", p).to_json() + "\n";
}

void parser_and_goldens(std::ostringstream& fail) {
    const std::vector<std::string> corpus = {
        "p[2](X)", "h[1](X)", "e[3](X)", "m[2,1](X)", "p[3](X/(1-t*X))",
        "h[2,2](X/(1-t*X))", "e[1,1,1](X)", "1/2", "7", "2*e[2](X)",
        "3/2*p[1](X)*p[2](X)", "p[2](X) + e[2](X)", "p[2](X) - e[1,1](X) + 2*e[2](X)",
        "p[1](X)^3", "(p[1](X) + p[2](X))^2", "p[1](X)^2^2",
        "(p[1](X) - 1)*(p[1](X) + 1)", "h[1](X/(1-t*X)) - p[1](X/(1-t*X))",
        "m[1,1](X) - e[2](X)", "e[2](X)*e[1](X)*e[1](X)", "p[4,3,2,1](X)", "m[5](X)",
        "h[2](X)*h[2](X) - h[4](X)", "1/3*p[3](X) + 2/3*p[1](X)", "(e[1](X))",
        "p[2](X)*(e[1](X) + 1)", "p[1](X) + p[2](X) + p[3](X) + p[4](X)",
        "p[1](X) - p[2](X) - p[3](X)", "2*(p[1](X) + 1)^2", "m[3,3,1](X)",
        "e[2,1](X/(1-t*X))*h[1](X)", "5/4*h[3](X/(1-t*X))^2",
    };
    for (const auto& text : corpus) {
        auto first = dsl::parse(text);
        std::string printed = dsl::to_string(*first);
        if (!dsl::equal(*first, *dsl::parse(printed))) fail << "round-trip '" << text << "' ";
    }

    const std::vector<std::string> files = {"report_thm1_e.json", "report_cor4.json",
                                            "report_thm5.json"};
    for (int which = 0; which < 3; ++which) {
        std::string once = golden_report(which);
        std::string twice = golden_report(which);
        if (once != twice) fail << "report " << files[which] << " not run-stable ";
        std::ifstream in(std::string(WARING_GOLDEN_DIR) + "/" + files[which], std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        if (!in.good() && buf.str().empty()) {
            fail << "missing golden " << files[which] << " ";
        } else if (buf.str() != once) {
            fail << "golden mismatch " << files[which] << " ";
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"waring_baseline", 1.0, waring_baseline},
        {"theorem1_transformed_p", 30.0, theorem1},
        {"theorem2_transformed_h_e", 30.0, theorem2},
        {"theorem3_three_expansions", 60.0, theorem3},
        {"corollary4_binomial_sums", 5.0, corollary4},
        {"corollary5_monomial_sum", 10.0, corollary5},
        {"theorem5_pochhammer_ratio", 30.0, theorem5},
        {"theorem6_generalized", 60.0, theorem6},
        {"appendix_genfun_factorization", 60.0, appendix},
        {"t0_degeneration", 5.0, degeneration},
        {"parser_roundtrip_goldens", 10.0, parser_and_goldens},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::ostringstream fail;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(fail);
        } catch (const std::exception& e) {
            fail << "exception: " << e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = fail.str().empty();
        if (seconds > criterion.budget_seconds) {
            ok = false;
            fail << "over budget (" << criterion.budget_seconds << " s) ";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f", seconds);
        std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion.name << "  (" << timing << " s)";
        if (!ok) std::cout << "  " << fail.str();
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
