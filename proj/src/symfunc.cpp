#include "waring/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace waring {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
    }
    throw std::logic_error("basis_letter: bad basis");
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 'm': return Basis::m;
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
    }
    throw std::invalid_argument(std::string("unknown basis letter '") + c + "'");
}

SymExpr SymExpr::atom(Basis b, const Partition& mu, const ZPoly& coeff) {
    SymExpr e(b);
    e.add_term(mu, coeff);
    return e;
}

void SymExpr::add_term(const Partition& mu, const ZPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int SymExpr::total_degree() const {
    int d = 0;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
    return d;
}

SymExpr SymExpr::degree_slice(int d) const {
    SymExpr slice(basis_);
    for (const auto& [mu, c] : terms_)
        if (mu.weight() == d) slice.add_term(mu, c);
    return slice;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("SymExpr: basis mismatch");
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
    if (basis_ != o.basis_) throw std::invalid_argument("SymExpr: basis mismatch");
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
}

SymExpr& SymExpr::operator*=(const ZPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, c] : terms_) c *= s;
    return *this;
}

SymExpr SymExpr::operator-() const {
    SymExpr r(basis_);
    for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
    return r;
}

std::string SymExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        std::string atom = std::string(1, basis_letter(basis_)) + mu.str();
        if (c.is_constant()) {
            Rational r = c.coeff(0);
            Rational a = r.abs();
            if (first) {
                if (r.sign() < 0) out << "-";
                first = false;
            } else {
                out << (r.sign() < 0 ? " - " : " + ");
            }
            if (!a.is_one()) out << a.str() << "*";
            out << atom;
        } else {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")*" << atom;
        }
    }
    return out.str();
}

MultiPoly power_poly(int n, int nvars) {
    if (n < 1) throw std::invalid_argument("power_poly: n must be >= 1");
    if (nvars < 1) throw std::invalid_argument("power_poly: need at least one variable");
    MultiPoly p(nvars);
    for (int r = 0; r < nvars; ++r) {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        exps[static_cast<std::size_t>(r)] = n;
        p.add_term(exps, ZPoly(1));
    }
    return p;
}

MultiPoly elementary_poly(int n, int nvars) {
    if (n < 0) throw std::invalid_argument("elementary_poly: n must be >= 0");
    MultiPoly p(nvars);
    if (n > nvars) return p;  // not enough letters
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> pick = [&](int from, int remaining) {
        if (remaining == 0) {
            p.add_term(exps, ZPoly(1));
            return;
        }
        for (int r = from; r <= nvars - remaining; ++r) {
            exps[static_cast<std::size_t>(r)] = 1;
            pick(r + 1, remaining - 1);
            exps[static_cast<std::size_t>(r)] = 0;
        }
    };
    pick(0, n);
    return p;
}

MultiPoly complete_poly(int n, int nvars) {
    if (n < 0) throw std::invalid_argument("complete_poly: n must be >= 0");
    if (nvars < 1) throw std::invalid_argument("complete_poly: need at least one variable");
    MultiPoly p(nvars);
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> spread = [&](int pos, int remaining) {
        if (pos == nvars - 1) {
            exps[static_cast<std::size_t>(pos)] = remaining;
            p.add_term(exps, ZPoly(1));
            exps[static_cast<std::size_t>(pos)] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            exps[static_cast<std::size_t>(pos)] = v;
            spread(pos + 1, remaining - v);
        }
        exps[static_cast<std::size_t>(pos)] = 0;
    };
    spread(0, n);
    return p;
}

MultiPoly monomial_poly(const Partition& mu, int nvars) {
    if (mu.length() > nvars)
        throw std::invalid_argument("monomial_poly: more parts than variables");
    MultiPoly p(nvars);
    std::vector<int> exps(mu.parts().begin(), mu.parts().end());
    exps.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(exps.begin(), exps.end());
    do {
        p.add_term(exps, ZPoly(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return p;
}

namespace {

MultiPoly basis_element_poly(Basis b, const Partition& mu, int nvars) {
    if (b == Basis::m) {
        // A pattern with more parts than variables has no representative.
        if (mu.length() > nvars) return MultiPoly(nvars);
        return monomial_poly(mu, nvars);
    }
    MultiPoly acc = MultiPoly::constant(nvars, Rational(1));
    for (int part : mu.parts()) {
        switch (b) {
            case Basis::p: acc *= power_poly(part, nvars); break;
            case Basis::e: acc *= elementary_poly(part, nvars); break;
            case Basis::h: acc *= complete_poly(part, nvars); break;
            default: break;
        }
        if (acc.is_zero()) break;
    }
    return acc;
}

}  // namespace

MultiPoly expand(const SymExpr& expr, int nvars, bool require_faithful) {
    if (nvars < 0) throw std::invalid_argument("expand: negative variable count");
    if (require_faithful && nvars < expr.total_degree())
        throw std::invalid_argument("expand: fewer variables than the total degree " +
                                    std::to_string(expr.total_degree()));
    MultiPoly acc(nvars);
    for (const auto& [mu, c] : expr.terms()) acc += basis_element_poly(expr.basis(), mu, nvars) * c;
    return acc;
}

SymExpr complete_in_power(int n) {
    if (n < 0) throw std::invalid_argument("complete_in_power: n must be >= 0");
    SymExpr e(Basis::p);
    for (const auto& mu : partitions_of(n)) e.add_term(mu, ZPoly(Rational(1, z_of(mu))));
    return e;
}

SymExpr elementary_in_power(int n) {
    if (n < 0) throw std::invalid_argument("elementary_in_power: n must be >= 0");
    SymExpr e(Basis::p);
    for (const auto& mu : partitions_of(n)) {
        int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
        e.add_term(mu, ZPoly(Rational(sign, z_of(mu))));
    }
    return e;
}

namespace {

// n (l(lambda)-1)! / prod_i m_i(lambda)!, the unsigned Waring coefficient.
Rational waring_coefficient(int n, const Partition& lambda) {
    Rational c = Rational(n) * factorial(static_cast<unsigned long>(lambda.length() - 1));
    for (const auto& [part, mult] : lambda.multiplicities())
        c /= factorial(static_cast<unsigned long>(mult));
    return c;
}

}  // namespace

SymExpr power_in_elementary(int n) {
    if (n < 1) throw std::invalid_argument("power_in_elementary: n must be >= 1");
    SymExpr e(Basis::e);
    for (const auto& lambda : partitions_of(n)) {
        int sign = (n - lambda.length()) % 2 == 0 ? 1 : -1;
        e.add_term(lambda, ZPoly(Rational(sign) * waring_coefficient(n, lambda)));
    }
    return e;
}

SymExpr power_in_homogeneous(int n) {
    if (n < 1) throw std::invalid_argument("power_in_homogeneous: n must be >= 1");
    SymExpr e(Basis::h);
    for (const auto& lambda : partitions_of(n)) {
        int sign = (lambda.length() - 1) % 2 == 0 ? 1 : -1;
        e.add_term(lambda, ZPoly(Rational(sign) * waring_coefficient(n, lambda)));
    }
    return e;
}

namespace {

// x_r/(1 - t x_r) = sum_{m>=1} t^{m-1} x_r^m, truncated at t_order.
BiSeries transformed_letter(int r, int nvars, int t_order) {
    BiSeries s(nvars, t_order, 0);
    for (int m = 1; m <= t_order + 1; ++m) {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        exps[static_cast<std::size_t>(r)] = m;
        s.set_coeff(m - 1, 0, MultiPoly::monomial(nvars, std::move(exps), ZPoly(1)));
    }
    return s;
}

// Sum of products of the letters over k-subsets (strict = true) or
// k-multisets (strict = false), by literal enumeration.
BiSeries selection_sum(const std::vector<BiSeries>& letters, int k, bool strict, int nvars,
                       int t_order) {
    BiSeries total(nvars, t_order, 0);
    std::function<void(std::size_t, int, const BiSeries&)> walk =
        [&](std::size_t from, int remaining, const BiSeries& prod) {
            if (remaining == 0) {
                total += prod;
                return;
            }
            for (std::size_t r = from; r < letters.size(); ++r)
                walk(r + (strict ? 1 : 0), remaining - 1, prod * letters[r]);
        };
    walk(0, k, BiSeries::constant(nvars, t_order, 0, ZPoly(1)));
    return total;
}

}  // namespace

BiSeries transformed_basis_series(Basis b, int k, int nvars, int t_order) {
    if (k < 1) throw std::invalid_argument("transformed_basis_series: k must be >= 1");
    if (nvars < 1) throw std::invalid_argument("transformed_basis_series: need variables");
    std::vector<BiSeries> letters;
    letters.reserve(static_cast<std::size_t>(nvars));
    for (int r = 0; r < nvars; ++r) letters.push_back(transformed_letter(r, nvars, t_order));
    switch (b) {
        case Basis::p: {
            BiSeries total(nvars, t_order, 0);
            for (const auto& letter : letters) total += letter.pow(static_cast<unsigned>(k));
            return total;
        }
        case Basis::e:
            if (k > nvars) return BiSeries(nvars, t_order, 0);
            return selection_sum(letters, k, /*strict=*/true, nvars, t_order);
        case Basis::h:
            return selection_sum(letters, k, /*strict=*/false, nvars, t_order);
        case Basis::m:
            throw std::invalid_argument("transformed_basis_series: basis must be p, h or e");
    }
    throw std::logic_error("transformed_basis_series: bad basis");
}

BiSeries shifted_power_series(int k, int nvars, int t_order) {
    if (k < 1) throw std::invalid_argument("shifted_power_series: k must be >= 1");
    BiSeries s(nvars, t_order, 0);
    for (int j = k; j <= k + t_order; ++j) {
        Rational c = binom_int(j - 1, k - 1);
        s.set_coeff(j - k, 0, power_poly(j, nvars) * c);
    }
    return s;
}

}  // namespace waring
