#include "waring/dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace waring::dsl {

ExprPtr Expr::literal(const Rational& v) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::literal;
    e->value = v;
    return e;
}

ExprPtr Expr::atom(Basis b, Partition mu, bool transformed) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::atom;
    e->basis = b;
    e->index = std::move(mu);
    e->transformed = transformed;
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::sub;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::mul;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::pow(ExprPtr base, int exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = NodeKind::pow;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::literal: return a.value == b.value;
        case NodeKind::atom:
            return a.basis == b.basis && a.index == b.index && a.transformed == b.transformed;
        case NodeKind::add:
        case NodeKind::sub:
        case NodeKind::mul: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        case NodeKind::pow: return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
    }
    return false;
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, rbracket, comma, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::end;
            current_.text = "";
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                take();
            current_.kind = Tok::number;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
                take();
            current_.kind = Tok::ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        take();
        current_.text = std::string(1, c);
        switch (c) {
            case '+': current_.kind = Tok::plus; return;
            case '-': current_.kind = Tok::minus; return;
            case '*': current_.kind = Tok::star; return;
            case '/': current_.kind = Tok::slash; return;
            case '^': current_.kind = Tok::caret; return;
            case '(': current_.kind = Tok::lparen; return;
            case ')': current_.kind = Tok::rparen; return;
            case '[': current_.kind = Tok::lbracket; return;
            case ']': current_.kind = Tok::rbracket; return;
            case ',': current_.kind = Tok::comma; return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", current_.line,
                         current_.col);
    }

    void take() {
        ++pos_;
        ++col_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::end)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
        return e;
    }

  private:
    [[noreturn]] void fail(const Token& t, const std::string& message) {
        throw ParseError(message, t.line, t.col);
    }

    Token expect(Tok kind, const std::string& what) {
        Token t = lex_.next();
        if (t.kind != kind) fail(t, "expected " + what + ", found '" + t.text + "'");
        return t;
    }

    long expect_nat(const std::string& what) {
        Token t = expect(Tok::number, what);
        return std::stol(t.text);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Tok op = lex_.next().kind;
            ExprPtr r = term();
            e = op == Tok::plus ? Expr::add(std::move(e), std::move(r))
                                : Expr::sub(std::move(e), std::move(r));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.next();
            e = Expr::mul(std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr e = primary();
        while (lex_.peek().kind == Tok::caret) {
            lex_.next();
            e = Expr::pow(std::move(e), static_cast<int>(expect_nat("an exponent")));
        }
        return e;
    }

    ExprPtr primary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                Token num = lex_.next();
                if (lex_.peek().kind == Tok::slash) {
                    lex_.next();
                    Token den = expect(Tok::number, "a denominator");
                    if (mpz_class(den.text) == 0) fail(den, "zero denominator");
                    return Expr::literal(Rational(mpz_class(num.text), mpz_class(den.text)));
                }
                return Expr::literal(Rational(mpz_class(num.text)));
            }
            case Tok::lparen: {
                lex_.next();
                ExprPtr e = expr();
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::ident: return atom();
            default: fail(t, "expected a rational, a basis atom or '('");
        }
    }

    ExprPtr atom() {
        Token name = lex_.next();
        if (name.text.size() != 1 ||
            (name.text[0] != 'p' && name.text[0] != 'h' && name.text[0] != 'e' &&
             name.text[0] != 'm'))
            fail(name, "unknown basis letter '" + name.text + "'");
        Basis basis = basis_from_letter(name.text[0]);
        Token open = expect(Tok::lbracket, "'['");
        std::vector<int> parts;
        parts.push_back(static_cast<int>(expect_nat("a part")));
        while (lex_.peek().kind == Tok::comma) {
            lex_.next();
            parts.push_back(static_cast<int>(expect_nat("a part")));
        }
        expect(Tok::rbracket, "']'");
        Partition mu;
        try {
            mu = Partition(std::move(parts));
        } catch (const std::invalid_argument& err) {
            fail(open, std::string("malformed partition: ") + err.what());
        }
        expect(Tok::lparen, "'('");
        Token alpha = expect(Tok::ident, "an alphabet");
        if (alpha.text != "X") fail(alpha, "unknown alphabet '" + alpha.text + "'");
        bool transformed = false;
        if (lex_.peek().kind == Tok::slash) {
            lex_.next();
            expect(Tok::lparen, "'('");
            Token one = expect(Tok::number, "'1'");
            if (one.text != "1") fail(one, "expected '1' in the transformed alphabet");
            expect(Tok::minus, "'-'");
            Token tvar = expect(Tok::ident, "'t'");
            if (tvar.text != "t") fail(tvar, "expected 't' in the transformed alphabet");
            expect(Tok::star, "'*'");
            Token xvar = expect(Tok::ident, "'X'");
            if (xvar.text != "X") fail(xvar, "expected 'X' in the transformed alphabet");
            expect(Tok::rparen, "')'");
            transformed = true;
        }
        expect(Tok::rparen, "')'");
        return Expr::atom(basis, std::move(mu), transformed);
    }

    Lexer lex_;
};

int level(const Expr& e) {
    switch (e.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul: return 2;
        case NodeKind::pow: return 3;
        default: return 4;
    }
}

void print_node(std::ostringstream& out, const Expr& e, int min_level) {
    bool parens = level(e) < min_level;
    if (parens) out << "(";
    switch (e.kind) {
        case NodeKind::literal: out << e.value.str(); break;
        case NodeKind::atom: {
            out << basis_letter(e.basis) << e.index.str();
            out << (e.transformed ? "(X/(1-t*X))" : "(X)");
            break;
        }
        case NodeKind::add:
            print_node(out, *e.lhs, 1);
            out << " + ";
            print_node(out, *e.rhs, 2);
            break;
        case NodeKind::sub:
            print_node(out, *e.lhs, 1);
            out << " - ";
            print_node(out, *e.rhs, 2);
            break;
        case NodeKind::mul:
            print_node(out, *e.lhs, 2);
            out << "*";
            print_node(out, *e.rhs, 3);
            break;
        case NodeKind::pow:
            print_node(out, *e.lhs, 3);
            out << "^" << e.exponent;
            break;
    }
    if (parens) out << ")";
}

int max_atom_weight(const Expr& e) {
    switch (e.kind) {
        case NodeKind::literal: return 0;
        case NodeKind::atom: return e.index.weight();
        case NodeKind::pow: return max_atom_weight(*e.lhs);
        default: return std::max(max_atom_weight(*e.lhs), max_atom_weight(*e.rhs));
    }
}

BiSeries eval_node(const Expr& e, int nvars, int t_order) {
    switch (e.kind) {
        case NodeKind::literal: {
            return BiSeries::constant(nvars, t_order, 0, e.value);
        }
        case NodeKind::atom: {
            if (!e.transformed) {
                BiSeries s(nvars, t_order, 0);
                s.set_coeff(0, 0, expand(SymExpr::atom(e.basis, e.index), nvars));
                return s;
            }
            if (e.basis == Basis::m)
                throw std::invalid_argument(
                    "eval: the transformed alphabet supports p, h and e atoms only");
            BiSeries prod = BiSeries::constant(nvars, t_order, 0, ZPoly(1));
            for (int part : e.index.parts())
                prod *= transformed_basis_series(e.basis, part, nvars, t_order);
            return prod;
        }
        case NodeKind::add: return eval_node(*e.lhs, nvars, t_order) + eval_node(*e.rhs, nvars, t_order);
        case NodeKind::sub: return eval_node(*e.lhs, nvars, t_order) - eval_node(*e.rhs, nvars, t_order);
        case NodeKind::mul: return eval_node(*e.lhs, nvars, t_order) * eval_node(*e.rhs, nvars, t_order);
        case NodeKind::pow:
            if (e.exponent < 0) throw std::invalid_argument("eval: negative exponent");
            return eval_node(*e.lhs, nvars, t_order).pow(static_cast<unsigned>(e.exponent));
    }
    throw std::logic_error("eval: bad node");
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expr& e) {
    std::ostringstream out;
    print_node(out, e, 1);
    return out.str();
}

BiSeries eval(const Expr& e, int nvars, int t_order) {
    if (nvars < 1) throw std::invalid_argument("eval: need at least one variable");
    if (t_order < 0) throw std::invalid_argument("eval: negative t_order");
    int need = max_atom_weight(e);
    if (nvars < need)
        throw std::invalid_argument("eval: " + std::to_string(nvars) +
                                    " variables cannot carry a degree-" + std::to_string(need) +
                                    " basis atom faithfully");
    return eval_node(e, nvars, t_order);
}

}  // namespace waring::dsl
