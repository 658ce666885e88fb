#pragma once

#include "waring/biseries.hpp"
#include "waring/symfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// First differing coefficient of a failed comparison, in graded-lex order
// (series cells are walked lowest (t,u,w) degree first).
struct Discrepancy {
    std::string monomial;
    std::string expected;
    std::string actual;
};

struct IdentityReport {
    std::string identity;
    std::map<std::string, std::string> params;  // echo of the instance
    bool verified = false;
    int checked_degree = 0;
    int vars = 0;  // 0 when the identity involves no x-alphabet
    std::optional<Discrepancy> discrepancy;

    std::string to_text() const;
    std::string to_json() const;  // stable machine interface
};

struct IdentityInfo {
    std::string id;
    std::string summary;
    std::string params_help;
};

// The verifiable identity ids, one per statement.
const std::vector<IdentityInfo>& identity_catalog();

// Right side of the transformed power sum expansion, collected by t-degree:
// slice d sums over mu |- k+d the coefficient
//   C(|mu|,k) (-1)^{|mu|-l} k (l-1)!/prod m_i!   times e_mu   (variant e)
//   C(|mu|,k) (-1)^{l-1}    k (l-1)!/prod m_i!   times h_mu   (variant h)
std::vector<SymExpr> thm1_rhs(Basis variant, int k, int t_order);

// Right side of the transformed h_k / e_k expansion, slice d over mu |- k+d:
//   <mu/k>/z_mu p_mu            (variant h)
//   (-1)^{k-l} <mu/k>/z_mu p_mu (variant e)
std::vector<SymExpr> thm2_rhs(Basis variant, int k, int t_order);

// F(t,u) = (1+u)^z prod_r (1 + u/(1+u) * t x_r/(1 - t x_r)) with the inverses
// expanded as truncated geometric series; coefficients are ZPoly-valued.
BiSeries F_direct(int nvars, int t_order, int u_order);

// The three expansions of the u^i t^j coefficient of F(t,u).
enum class FVariant {
    monomial,            // sum over l(mu) <= i, |mu| = j of binom(z-l, i-l) m_mu
    power_weight_shift,  // sum_k binom(z-j, i-k) sum_{mu |- j} <mu/k>/z_mu p_mu
    power_count_shift,   // sum_k binom(z-k, i-k) (-1)^{k-l} <mu/k>/z_mu p_mu
};

SymExpr F_expansion(FVariant variant, int i, int j);

// Both sides of the pure binomial identity
//   sum_k binom(z-j, i-k) <mu/k> = sum_k (-1)^{k-l} binom(z-k, i-k) <mu/k>.
std::pair<ZPoly, ZPoly> cor4_sides(int i, int j, const Partition& mu);

// sum_{l(mu)=k, |mu|=j} m_mu = sum_{mu |- j} (-1)^{k-l} <mu/k>/z_mu p_mu,
// both expanded into N >= j variables.
std::pair<MultiPoly, MultiPoly> cor5_sides(int k, int j, int nvars);

// (y-x)_lambda / (y)_lambda as a truncated series in w = 1/y with
// polynomial-in-x coefficients (index = w-degree): the cell product on the
// left, the double sum with the Ferrers power sums on the right.
std::pair<std::vector<ZPoly>, std::vector<ZPoly>> thm5_sides(const Partition& lambda,
                                                             const Rational& alpha,
                                                             int w_order);

// The Pochhammer identity with x_i = p_i(Y), Y = y_1..y_M; both sides are
// u-series (index = u-degree) with coefficients polynomial in z and Y. The
// left side alone is exposed for the generating function check.
std::vector<MultiPoly> thm6_lhs(int n, int r, int yvars, int u_order);
std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> thm6_sides(int n, int r, int yvars,
                                                                     int u_order);

// Checks that sum_{n,r>=1} t^n q^r * thm6_lhs(n,r) equals the closed product
// (1+Tq)^z prod_j (1 + Tq/(1+Tq) * Tu z_j/(1 - Tu z_j)), T = t/(1-t),
// z_j = y_j/t, as truncated series in t, q, u. The z_j substitution divides
// the truncated series by t explicitly; a nonzero residue at t^0 throws.
IdentityReport appendix_factorization_check(int t_order, int q_order, int yvars, int u_order);

// Parameters accepted by verify(); each identity uses the subset it needs.
struct VerifyParams {
    std::optional<int> k, i, j, n, r;
    std::optional<Partition> mu, lambda;
    std::optional<Rational> alpha;
    std::optional<int> vars, yvars, t_order, u_order, w_order;
};

// Builds both sides of the named identity, reduces them to concrete
// polynomials, compares exactly and reports the first discrepancy if any.
// Throws std::invalid_argument for unknown ids or invalid parameters.
IdentityReport verify(const std::string& identity_id, const VerifyParams& p);

// Exact comparison helpers shared by the verifiers and the test suites.
std::optional<Discrepancy> first_discrepancy(const MultiPoly& expected, const MultiPoly& actual,
                                             const std::string& prefix = "");
std::optional<Discrepancy> first_discrepancy(const ZPoly& expected, const ZPoly& actual,
                                             const std::string& var = "z",
                                             const std::string& prefix = "");
std::optional<Discrepancy> first_discrepancy(const BiSeries& expected, const BiSeries& actual);

}  // namespace waring
