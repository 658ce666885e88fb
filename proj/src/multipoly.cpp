#include "waring/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace waring {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;  // x1-major within a degree
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const ZPoly& c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly: variable index");
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(exps), ZPoly(1));
}

MultiPoly MultiPoly::monomial(int nvars, std::vector<int> exps, const ZPoly& c) {
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& exps = terms_.rbegin()->first;  // grlex max has the max degree
    return std::accumulate(exps.begin(), exps.end(), 0);
}

ZPoly MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? ZPoly() : it->second;
}

void MultiPoly::add_term(const std::vector<int>& exps, const ZPoly& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("MultiPoly: exponent vector length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [exps, c] : o.terms_) add_term(exps, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const ZPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly prod(a.nvars_);
    std::vector<int> exps(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = ea[v] + eb[v];
            prod.add_term(exps, ca * cb);
        }
    }
    return prod;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [exps, c] : terms_) r.terms_.emplace(exps, -c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly acc = constant(nvars_, Rational(1));
    for (unsigned s = 0; s < exponent; ++s) acc *= *this;
    return acc;
}

std::string MultiPoly::monomial_str(const std::vector<int>& exps) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "x" << (v + 1);
        if (exps[v] > 1) out << "^" << exps[v];
    }
    if (first) return "1";
    return out.str();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        bool constant_exps = true;
        for (int e : exps) constant_exps = constant_exps && e == 0;
        std::string mono = monomial_str(exps);
        if (c.is_constant()) {
            Rational r = c.coeff(0);
            Rational a = r.abs();
            if (first) {
                if (r.sign() < 0) out << "-";
                first = false;
            } else {
                out << (r.sign() < 0 ? " - " : " + ");
            }
            if (constant_exps) {
                out << a.str();
            } else {
                if (!a.is_one()) out << a.str() << "*";
                out << mono;
            }
        } else {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")";
            if (!constant_exps) out << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace waring
