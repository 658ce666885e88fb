#include "waring/identities.hpp"

#include "waring/partition.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

int parity_sign(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

std::string power_str(const std::string& var, int k) {
    if (k == 0) return "1";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace

std::optional<Discrepancy> first_discrepancy(const MultiPoly& expected, const MultiPoly& actual,
                                             const std::string& prefix) {
    GrlexLess less;
    auto ia = expected.terms().begin();
    auto ib = actual.terms().begin();
    const auto ea = expected.terms().end();
    const auto eb = actual.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && less(ia->first, ib->first))) {
            return Discrepancy{prefix + MultiPoly::monomial_str(ia->first), ia->second.str(), "0"};
        }
        if (ia == ea || less(ib->first, ia->first)) {
            return Discrepancy{prefix + MultiPoly::monomial_str(ib->first), "0", ib->second.str()};
        }
        if (ia->second != ib->second) {
            return Discrepancy{prefix + MultiPoly::monomial_str(ia->first), ia->second.str(),
                               ib->second.str()};
        }
        ++ia, ++ib;
    }
    return std::nullopt;
}

std::optional<Discrepancy> first_discrepancy(const ZPoly& expected, const ZPoly& actual,
                                             const std::string& var, const std::string& prefix) {
    int top = std::max(expected.degree(), actual.degree());
    for (int k = 0; k <= top; ++k) {
        if (expected.coeff(k) != actual.coeff(k)) {
            return Discrepancy{prefix + power_str(var, k), expected.coeff(k).str(),
                               actual.coeff(k).str()};
        }
    }
    return std::nullopt;
}

std::optional<Discrepancy> first_discrepancy(const BiSeries& expected, const BiSeries& actual) {
    if (expected.nvars() != actual.nvars() || expected.t_order() != actual.t_order() ||
        expected.u_order() != actual.u_order())
        throw std::invalid_argument("first_discrepancy: series shapes differ");
    for (int dt = 0; dt <= expected.t_order(); ++dt)
        for (int du = 0; du <= expected.u_order(); ++du) {
            std::string prefix =
                "t^" + std::to_string(dt) + " u^" + std::to_string(du) + ": ";
            auto diff = first_discrepancy(expected.coeff(dt, du), actual.coeff(dt, du), prefix);
            if (diff) return diff;
        }
    return std::nullopt;
}

std::string IdentityReport::to_text() const {
    std::ostringstream out;
    out << identity << " [";
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) out << " ";
        first = false;
        out << key << "=" << value;
    }
    out << "]: " << (verified ? "verified" : "FAILED") << " (checked_degree=" << checked_degree
        << ", vars=" << vars << ")";
    if (discrepancy) {
        out << "\n  first discrepancy at " << discrepancy->monomial << ": expected "
            << discrepancy->expected << ", got " << discrepancy->actual;
    }
    return out.str();
}

std::string IdentityReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["params"] = nlohmann::json::object();
    for (const auto& [key, value] : params) j["params"][key] = value;
    j["status"] = verified ? "verified" : "failed";
    j["checked_degree"] = checked_degree;
    j["vars"] = vars;
    if (discrepancy) {
        j["discrepancy"] = {{"monomial", discrepancy->monomial},
                            {"expected", discrepancy->expected},
                            {"actual", discrepancy->actual}};
    }
    return j.dump(2);
}

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> catalog = {
        {"thm1_e", "p_k on X/(1-tX) expanded over e_mu(X)", "--k [--t-order --vars]"},
        {"thm1_h", "p_k on X/(1-tX) expanded over h_mu(X)", "--k [--t-order --vars]"},
        {"thm2_h", "h_k on X/(1-tX) expanded over p_mu(X)", "--k [--t-order --vars]"},
        {"thm2_e", "e_k on X/(1-tX) expanded over p_mu(X)", "--k [--t-order --vars]"},
        {"thm3_m", "u^i t^j coefficient of F(t,u): monomial expansion", "--i --j [--vars]"},
        {"thm3_p1", "u^i t^j coefficient of F(t,u): power sums, binom(z-j, i-k)",
         "--i --j [--vars]"},
        {"thm3_p2", "u^i t^j coefficient of F(t,u): power sums, binom(z-k, i-k)",
         "--i --j [--vars]"},
        {"cor4", "two binomial sums over <mu/k> agree as polynomials in z", "--i --j --mu"},
        {"cor5", "sum of m_mu over l(mu)=k equals a signed p_mu sum", "--k --j [--vars]"},
        {"thm5", "(y-x)_lambda/(y)_lambda as a series in 1/y", "--lambda --alpha [--w-order]"},
        {"thm6", "signed <mu/r> sum of z-shifted products equals its u-series",
         "--n --r [--u-order --vars]"},
        {"app_genfun", "sum_r <mu/r> q^r equals prod_i ((1+q)^i - 1)^{m_i}", "[--mu | --n]"},
        {"app_factorization", "generating function of the thm6 left sides factorizes",
         "[--n --r --u-order --vars]"},
    };
    return catalog;
}

std::vector<SymExpr> thm1_rhs(Basis variant, int k, int t_order) {
    if (variant != Basis::e && variant != Basis::h)
        throw std::invalid_argument("thm1_rhs: variant must be e or h");
    if (k < 1) throw std::invalid_argument("thm1_rhs: k must be >= 1");
    if (t_order < 0) throw std::invalid_argument("thm1_rhs: negative t_order");
    std::vector<SymExpr> slices;
    for (int d = 0; d <= t_order; ++d) {
        SymExpr slice(variant);
        for (const auto& mu : partitions_of(k + d)) {
            int l = mu.length();
            int sign = variant == Basis::e ? parity_sign(mu.weight() - l) : parity_sign(l - 1);
            Rational c = binom_int(mu.weight(), k) * Rational(sign) * Rational(k) *
                         factorial(static_cast<unsigned long>(l - 1));
            for (const auto& [part, mult] : mu.multiplicities())
                c /= factorial(static_cast<unsigned long>(mult));
            slice.add_term(mu, ZPoly(c));
        }
        slices.push_back(std::move(slice));
    }
    return slices;
}

std::vector<SymExpr> thm2_rhs(Basis variant, int k, int t_order) {
    if (variant != Basis::h && variant != Basis::e)
        throw std::invalid_argument("thm2_rhs: variant must be h or e");
    if (k < 1) throw std::invalid_argument("thm2_rhs: k must be >= 1");
    if (t_order < 0) throw std::invalid_argument("thm2_rhs: negative t_order");
    std::vector<SymExpr> slices;
    for (int d = 0; d <= t_order; ++d) {
        SymExpr slice(Basis::p);
        for (const auto& mu : partitions_of(k + d)) {
            mpz_class b = lassalle_binom(mu, k);
            if (b == 0) continue;
            Rational c(b, z_of(mu));
            if (variant == Basis::e) c *= Rational(parity_sign(k - mu.length()));
            slice.add_term(mu, ZPoly(c));
        }
        slices.push_back(std::move(slice));
    }
    return slices;
}

BiSeries F_direct(int nvars, int t_order, int u_order) {
    const BiSeries one = BiSeries::constant(nvars, t_order, u_order, ZPoly(1));
    BiSeries u_series(nvars, t_order, u_order);
    if (u_order >= 1) u_series.set_coeff(0, 1, MultiPoly::constant(nvars, Rational(1)));
    const BiSeries inv_one_plus_u = series_geom_inverse(one + u_series);
    BiSeries prod = one;
    for (int r = 0; r < nvars; ++r) {
        BiSeries tx(nvars, t_order, u_order);
        if (t_order >= 1) tx.set_coeff(1, 0, MultiPoly::variable(nvars, r));
        BiSeries tail = tx * series_geom_inverse(one - tx);
        prod *= one + u_series * inv_one_plus_u * tail;
    }
    BiSeries prefactor(nvars, t_order, u_order);
    for (int i = 0; i <= u_order; ++i)
        prefactor.set_coeff(0, i, MultiPoly::constant(nvars, binom_z(0, i)));
    return prod * prefactor;
}

SymExpr F_expansion(FVariant variant, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("F_expansion: negative indices");
    if (variant == FVariant::monomial) {
        SymExpr e(Basis::m);
        for (const auto& mu : partitions_of(j)) {
            int l = mu.length();
            if (l > i) continue;
            e.add_term(mu, binom_z(-l, i - l));
        }
        return e;
    }
    SymExpr e(Basis::p);
    for (int k = 0; k <= std::min(i, j); ++k) {
        ZPoly zb = variant == FVariant::power_weight_shift ? binom_z(-j, i - k)
                                                           : binom_z(-k, i - k);
        if (zb.is_zero()) continue;
        for (const auto& mu : partitions_of(j)) {
            mpz_class b = lassalle_binom(mu, k);
            if (b == 0) continue;
            Rational c(b, z_of(mu));
            if (variant == FVariant::power_count_shift)
                c *= Rational(parity_sign(k - mu.length()));
            e.add_term(mu, zb * c);
        }
    }
    return e;
}

std::pair<ZPoly, ZPoly> cor4_sides(int i, int j, const Partition& mu) {
    if (i < 1 || j < 1) throw std::invalid_argument("cor4_sides: i and j must be >= 1");
    if (mu.weight() != j) throw std::invalid_argument("cor4_sides: mu must be a partition of j");
    ZPoly left, right;
    for (int k = 0; k <= std::min(i, j); ++k) {
        mpz_class b = lassalle_binom(mu, k);
        if (b == 0) continue;
        Rational c{b};
        left += binom_z(-j, i - k) * c;
        right += binom_z(-k, i - k) * (c * Rational(parity_sign(k - mu.length())));
    }
    return {left, right};
}

std::pair<MultiPoly, MultiPoly> cor5_sides(int k, int j, int nvars) {
    if (k < 1 || j < 1) throw std::invalid_argument("cor5_sides: k and j must be >= 1");
    if (nvars < j) throw std::invalid_argument("cor5_sides: need at least j variables");
    MultiPoly left(nvars);
    for (const auto& mu : partitions_of(j))
        if (mu.length() == k) left += monomial_poly(mu, nvars);
    SymExpr rhs(Basis::p);
    for (const auto& mu : partitions_of(j)) {
        mpz_class b = lassalle_binom(mu, k);
        if (b == 0) continue;
        rhs.add_term(mu, ZPoly(Rational(b, z_of(mu)) * Rational(parity_sign(k - mu.length()))));
    }
    return {left, expand(rhs, nvars)};
}

namespace {

// w-convolution of truncated coefficient vectors.
template <typename T>
std::vector<T> series_conv(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    std::vector<T> out(a.size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

std::pair<std::vector<ZPoly>, std::vector<ZPoly>> thm5_sides(const Partition& lambda,
                                                             const Rational& alpha, int w_order) {
    if (w_order < 0) throw std::invalid_argument("thm5_sides: negative w_order");
    FerrersAlphabet z = ferrers_alphabet(lambda, alpha);

    // Left: prod over cell values c of (1 - x w/(1 + c w)), geometric in w.
    std::vector<ZPoly> left(static_cast<std::size_t>(w_order) + 1);
    left[0] = ZPoly(1);
    for (const auto& c : z.values) {
        std::vector<ZPoly> factor(static_cast<std::size_t>(w_order) + 1);
        factor[0] = ZPoly(1);
        Rational geo(1);  // (-c)^{d-1}
        for (int d = 1; d <= w_order; ++d) {
            factor[static_cast<std::size_t>(d)] =
                ZPoly::from_coeffs({Rational(0), -geo});  // -x (-c)^{d-1}
            geo *= -c;
        }
        left = series_conv(left, factor, ZPoly());
    }

    // Right: the double sum with Ferrers power sums as exact scalars.
    std::vector<ZPoly> right(static_cast<std::size_t>(w_order) + 1);
    int weight = lambda.weight();
    for (int i = 0; i <= weight; ++i) {
        for (int j = 0; i + j <= w_order; ++j) {
            Rational scalar(0);
            for (int k = 0; k <= std::min(i, j); ++k) {
                Rational zb = binom_int(weight - j, i - k);
                if (zb.is_zero()) continue;
                Rational inner(0);
                for (const auto& mu : partitions_of(j)) {
                    mpz_class b = lassalle_binom(mu, k);
                    if (b == 0) continue;
                    inner += Rational(b, z_of(mu)) * power_sum(z, mu);
                }
                scalar += zb * inner;
            }
            if (scalar.is_zero()) continue;
            std::vector<Rational> xpow(static_cast<std::size_t>(i) + 1);
            xpow[static_cast<std::size_t>(i)] = Rational(parity_sign(i + j)) * scalar;
            right[static_cast<std::size_t>(i + j)] += ZPoly::from_coeffs(std::move(xpow));
        }
    }
    return {left, right};
}

std::vector<MultiPoly> thm6_lhs(int n, int r, int yvars, int u_order) {
    if (n < 1 || r < 1) throw std::invalid_argument("thm6: n and r must be >= 1");
    if (yvars < 1 || u_order < 0) throw std::invalid_argument("thm6: bad orders");
    const MultiPoly zero(yvars);
    std::vector<MultiPoly> lhs(static_cast<std::size_t>(u_order) + 1, zero);
    for (const auto& mu : partitions_of(n)) {
        mpz_class b = lassalle_binom(mu, r);
        if (b == 0) continue;
        Rational c0 = Rational(b, z_of(mu)) * Rational(parity_sign(r - mu.length()));
        std::vector<MultiPoly> acc(static_cast<std::size_t>(u_order) + 1, zero);
        acc[0] = MultiPoly::constant(yvars, Rational(1));
        for (const auto& [part, mult] : mu.multiplicities()) {
            std::vector<MultiPoly> factor(static_cast<std::size_t>(u_order) + 1, zero);
            factor[0] = MultiPoly::constant(yvars, ZPoly::variable());  // z
            for (int k = 1; k <= u_order; ++k) {
                Rational coef = rising_factorial(Rational(part), static_cast<unsigned long>(k)) /
                                factorial(static_cast<unsigned long>(k));
                factor[static_cast<std::size_t>(k)] = power_poly(k, yvars) * coef;
            }
            for (int s = 0; s < mult; ++s) acc = series_conv(acc, factor, zero);
        }
        for (std::size_t d = 0; d < lhs.size(); ++d) lhs[d] += acc[d] * c0;
    }
    return lhs;
}

namespace {

std::vector<MultiPoly> thm6_rhs(int n, int r, int yvars, int u_order) {
    const MultiPoly zero(yvars);
    std::vector<MultiPoly> rhs(static_cast<std::size_t>(u_order) + 1, zero);
    for (int j = 0; j <= u_order; ++j) {
        Rational c1 = binom_int(n + j - 1, n - r);
        if (c1.is_zero()) continue;
        MultiPoly inner(yvars);
        for (int k = 0; k <= std::min(r, j); ++k) {
            ZPoly zb = binom_z(-j, r - k);
            if (zb.is_zero()) continue;
            MultiPoly msum(yvars);
            for (const auto& mu : partitions_of(j)) {
                mpz_class b = lassalle_binom(mu, k);
                if (b == 0) continue;
                msum += expand(SymExpr::atom(Basis::p, mu), yvars, /*require_faithful=*/false) *
                        Rational(b, z_of(mu));
            }
            inner += msum * zb;
        }
        rhs[static_cast<std::size_t>(j)] = inner * c1;
    }
    return rhs;
}

}  // namespace

std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> thm6_sides(int n, int r, int yvars,
                                                                     int u_order) {
    return {thm6_lhs(n, r, yvars, u_order), thm6_rhs(n, r, yvars, u_order)};
}

namespace {

// Divide a truncated t-series by t; any nonzero t^0 coefficient means the
// y_j/t substitution failed to cancel and is reported as a fault.
BiSeries shift_down_t(const BiSeries& s) {
    for (int du = 0; du <= s.u_order(); ++du)
        if (!s.coeff(0, du).is_zero())
            throw std::domain_error("appendix factorization: negative powers of t remain");
    BiSeries out(s.nvars(), s.t_order() - 1, s.u_order());
    for (int dt = 1; dt <= s.t_order(); ++dt)
        for (int du = 0; du <= s.u_order(); ++du) out.set_coeff(dt - 1, du, s.coeff(dt, du));
    return out;
}

using QSeries = std::vector<BiSeries>;  // index = degree in q

QSeries q_conv(const QSeries& a, const QSeries& b) {
    QSeries out(a.size(), BiSeries(a[0].nvars(), a[0].t_order(), a[0].u_order()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

IdentityReport appendix_factorization_check(int t_order, int q_order, int yvars, int u_order) {
    if (t_order < 1 || q_order < 1) throw std::invalid_argument("appendix: orders must be >= 1");
    if (yvars < 1 || u_order < 0) throw std::invalid_argument("appendix: bad orders");
    const BiSeries zero(yvars, t_order, u_order);
    const BiSeries one = BiSeries::constant(yvars, t_order, u_order, ZPoly(1));

    // Left: 1 + sum_{n,r >= 1} t^n q^r * (thm6 left side at (n, r)).
    QSeries lhs(static_cast<std::size_t>(q_order) + 1, zero);
    lhs[0] = one;
    for (int r = 1; r <= q_order; ++r)
        for (int n = 1; n <= t_order; ++n) {
            auto slices = thm6_lhs(n, r, yvars, u_order);
            for (int d = 0; d <= u_order; ++d) lhs[static_cast<std::size_t>(r)].add_to_coeff(n, d, slices[d]);
        }

    // Right: (1+Tq)^z prod_j (1 + Tq/(1+Tq) * Tu z_j/(1 - Tu z_j)),
    // T = t/(1-t) and z_j = y_j/t.
    BiSeries T(yvars, t_order, u_order);
    for (int m = 1; m <= t_order; ++m) T.set_coeff(m, 0, MultiPoly::constant(yvars, Rational(1)));
    std::vector<BiSeries> t_pow{one};
    for (int s = 1; s <= q_order; ++s) t_pow.push_back(t_pow.back() * T);

    QSeries prod(static_cast<std::size_t>(q_order) + 1, zero);
    for (int s = 0; s <= q_order; ++s)
        prod[static_cast<std::size_t>(s)] = t_pow[static_cast<std::size_t>(s)] * binom_z(0, s);

    for (int j = 0; j < yvars; ++j) {
        // T * u y_j at one extra t-order, then the explicit division by t.
        BiSeries t_ext(yvars, t_order + 1, u_order);
        for (int m = 1; m <= t_order + 1; ++m)
            t_ext.set_coeff(m, 0, MultiPoly::constant(yvars, Rational(1)));
        BiSeries uy(yvars, t_order + 1, u_order);
        if (u_order >= 1) uy.set_coeff(0, 1, MultiPoly::variable(yvars, j));
        BiSeries tuz = shift_down_t(t_ext * uy);

        BiSeries geom(yvars, t_order, u_order);  // sum_{s>=1} (Tu z_j)^s
        for (int s = 1; s <= u_order; ++s) geom += tuz.pow(static_cast<unsigned>(s));

        QSeries factor(static_cast<std::size_t>(q_order) + 1, zero);
        factor[0] = one;
        for (int s = 1; s <= q_order; ++s)
            factor[static_cast<std::size_t>(s)] =
                t_pow[static_cast<std::size_t>(s)] * geom * Rational(parity_sign(s - 1));
        prod = q_conv(prod, factor);
    }

    IdentityReport report;
    report.identity = "app_factorization";
    report.params = {{"n", std::to_string(t_order)},
                     {"r", std::to_string(q_order)},
                     {"u_order", std::to_string(u_order)},
                     {"yvars", std::to_string(yvars)}};
    report.checked_degree = t_order + q_order + u_order;
    report.vars = yvars;
    report.verified = true;
    for (int r = 0; r <= q_order && report.verified; ++r)
        for (int n = 0; n <= t_order && report.verified; ++n)
            for (int d = 0; d <= u_order && report.verified; ++d) {
                std::string prefix = "t^" + std::to_string(n) + " q^" + std::to_string(r) +
                                     " u^" + std::to_string(d) + ": ";
                auto diff = first_discrepancy(lhs[static_cast<std::size_t>(r)].coeff(n, d),
                                              prod[static_cast<std::size_t>(r)].coeff(n, d),
                                              prefix);
                if (diff) {
                    report.verified = false;
                    report.discrepancy = diff;
                }
            }
    return report;
}

namespace {

int require_param(const std::optional<int>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("verify: missing parameter ") + name);
    return *v;
}

IdentityReport verify_transformed_series(const std::string& id, Basis target, Basis variant,
                                         bool thm1, int k, int t_order, int vars) {
    IdentityReport report;
    report.identity = id;
    report.params = {{"k", std::to_string(k)},
                     {"t_order", std::to_string(t_order)},
                     {"vars", std::to_string(vars)}};
    report.checked_degree = k + t_order;
    report.vars = vars;
    report.verified = true;
    BiSeries lhs = transformed_basis_series(target, k, vars, t_order);
    auto slices = thm1 ? thm1_rhs(variant, k, t_order) : thm2_rhs(variant, k, t_order);
    for (int d = 0; d <= t_order; ++d) {
        MultiPoly actual = expand(slices[static_cast<std::size_t>(d)], vars,
                                  /*require_faithful=*/false);
        auto diff = first_discrepancy(lhs.coeff(d, 0), actual, "t^" + std::to_string(d) + ": ");
        if (diff) {
            report.verified = false;
            report.discrepancy = diff;
            break;
        }
    }
    return report;
}

template <typename Side>
IdentityReport compare_indexed_sides(IdentityReport report, const std::vector<Side>& lhs,
                                     const std::vector<Side>& rhs, const std::string& var,
                                     const std::string& zvar) {
    report.verified = true;
    for (std::size_t d = 0; d < lhs.size(); ++d) {
        std::optional<Discrepancy> diff;
        std::string prefix = var + "^" + std::to_string(d) + ": ";
        if constexpr (std::is_same_v<Side, ZPoly>) {
            diff = first_discrepancy(lhs[d], rhs[d], zvar, prefix);
        } else {
            diff = first_discrepancy(lhs[d], rhs[d], prefix);
        }
        if (diff) {
            report.verified = false;
            report.discrepancy = diff;
            break;
        }
    }
    return report;
}

}  // namespace

IdentityReport verify(const std::string& identity_id, const VerifyParams& p) {
    if (identity_id == "thm1_e" || identity_id == "thm1_h" || identity_id == "thm2_h" ||
        identity_id == "thm2_e") {
        int k = require_param(p.k, "k");
        int t_order = p.t_order.value_or(6);
        int vars = p.vars.value_or(6);
        bool thm1 = identity_id[3] == '1';
        Basis variant = identity_id.back() == 'e' ? Basis::e : Basis::h;
        Basis target = thm1 ? Basis::p : variant;
        return verify_transformed_series(identity_id, target, variant, thm1, k, t_order, vars);
    }
    if (identity_id == "thm3_m" || identity_id == "thm3_p1" || identity_id == "thm3_p2") {
        int i = require_param(p.i, "i");
        int j = require_param(p.j, "j");
        int vars = p.vars.value_or(6);
        if (vars < j) throw std::invalid_argument("verify: thm3 needs vars >= j");
        FVariant variant = identity_id == "thm3_m"    ? FVariant::monomial
                           : identity_id == "thm3_p1" ? FVariant::power_weight_shift
                                                      : FVariant::power_count_shift;
        IdentityReport report;
        report.identity = identity_id;
        report.params = {{"i", std::to_string(i)},
                         {"j", std::to_string(j)},
                         {"vars", std::to_string(vars)}};
        report.checked_degree = i + j;
        report.vars = vars;
        report.verified = true;
        MultiPoly expected = F_direct(vars, j, i).coeff(j, i);
        MultiPoly actual = expand(F_expansion(variant, i, j), vars);
        auto diff = first_discrepancy(expected, actual,
                                      "u^" + std::to_string(i) + " t^" + std::to_string(j) + ": ");
        if (diff) {
            report.verified = false;
            report.discrepancy = diff;
        }
        return report;
    }
    if (identity_id == "cor4") {
        int i = require_param(p.i, "i");
        int j = require_param(p.j, "j");
        if (!p.mu) throw std::invalid_argument("verify: missing parameter mu");
        auto [left, right] = cor4_sides(i, j, *p.mu);
        IdentityReport report;
        report.identity = identity_id;
        report.params = {{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"mu", p.mu->str()}};
        report.checked_degree = i;
        report.vars = 0;
        report.verified = true;
        if (auto diff = first_discrepancy(left, right)) {
            report.verified = false;
            report.discrepancy = diff;
        }
        return report;
    }
    if (identity_id == "cor5") {
        int k = require_param(p.k, "k");
        int j = require_param(p.j, "j");
        int vars = p.vars.value_or(std::max(j, 1));
        auto [left, right] = cor5_sides(k, j, vars);
        IdentityReport report;
        report.identity = identity_id;
        report.params = {{"k", std::to_string(k)},
                         {"j", std::to_string(j)},
                         {"vars", std::to_string(vars)}};
        report.checked_degree = j;
        report.vars = vars;
        report.verified = true;
        if (auto diff = first_discrepancy(left, right)) {
            report.verified = false;
            report.discrepancy = diff;
        }
        return report;
    }
    if (identity_id == "thm5") {
        if (!p.lambda) throw std::invalid_argument("verify: missing parameter lambda");
        if (!p.alpha) throw std::invalid_argument("verify: missing parameter alpha");
        int w_order = p.w_order.value_or(6);
        auto [left, right] = thm5_sides(*p.lambda, *p.alpha, w_order);
        IdentityReport report;
        report.identity = identity_id;
        report.params = {{"lambda", p.lambda->str()},
                         {"alpha", p.alpha->str()},
                         {"w_order", std::to_string(w_order)}};
        report.checked_degree = w_order;
        report.vars = 0;
        return compare_indexed_sides(std::move(report), left, right, "w", "x");
    }
    if (identity_id == "thm6") {
        int n = require_param(p.n, "n");
        int r = require_param(p.r, "r");
        int u_order = p.u_order.value_or(4);
        int yvars = p.yvars ? *p.yvars : p.vars.value_or(3);
        auto [left, right] = thm6_sides(n, r, yvars, u_order);
        IdentityReport report;
        report.identity = identity_id;
        report.params = {{"n", std::to_string(n)},
                         {"r", std::to_string(r)},
                         {"u_order", std::to_string(u_order)},
                         {"yvars", std::to_string(yvars)}};
        report.checked_degree = u_order;
        report.vars = yvars;
        return compare_indexed_sides(std::move(report), left, right, "u", "z");
    }
    if (identity_id == "app_genfun") {
        IdentityReport report;
        report.identity = identity_id;
        report.vars = 0;
        report.verified = true;
        std::vector<Partition> domain;
        if (p.mu) {
            domain.push_back(*p.mu);
            report.params = {{"mu", p.mu->str()}};
            report.checked_degree = p.mu->weight();
        } else {
            int n = p.n.value_or(8);
            for (int w = 0; w <= n; ++w)
                for (const auto& mu : partitions_of(w)) domain.push_back(mu);
            report.params = {{"n", std::to_string(n)}};
            report.checked_degree = n;
        }
        for (const auto& mu : domain) {
            std::vector<Rational> expected(static_cast<std::size_t>(mu.weight()) + 1);
            for (int k = 0; k <= mu.weight(); ++k)
                expected[static_cast<std::size_t>(k)] = Rational(lassalle_binom(mu, k));
            ZPoly by_counting = ZPoly::from_coeffs(std::move(expected));
            ZPoly by_product = lassalle_binom_genfun(mu, mu.weight());
            auto diff = first_discrepancy(by_counting, by_product, "q", "mu=" + mu.str() + " ");
            if (diff) {
                report.verified = false;
                report.discrepancy = diff;
                break;
            }
        }
        return report;
    }
    if (identity_id == "app_factorization") {
        int t_order = p.n.value_or(3);
        int q_order = p.r.value_or(2);
        int u_order = p.u_order.value_or(2);
        int yvars = p.yvars ? *p.yvars : p.vars.value_or(2);
        return appendix_factorization_check(t_order, q_order, yvars, u_order);
    }
    throw std::invalid_argument("verify: unknown identity '" + identity_id + "'");
}

}  // namespace waring
