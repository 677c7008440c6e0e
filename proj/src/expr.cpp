#include "arlab/expr.hpp"

#include "arlab/errors.hpp"

#include <cctype>

namespace arlab {

namespace {

constexpr unsigned long kExponentCap = 1'000'000;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprAst run() {
        ExprAst e = parse_expr();
        skip_ws();
        if (i_ < s_.size()) fail(i_, "unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(std::size_t off, const std::string& msg) { throw ParseError(off, msg); }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    BigInt digits(const char* what) {
        skip_ws();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) fail(start, std::string("expected ") + what);
        return BigInt(std::string(s_.substr(start, i_ - start)), 10);
    }

    ExprAst parse_expr() {
        ExprAst lhs = parse_term();
        while (true) {
            if (eat('+')) {
                ExprAst rhs = parse_term();
                ExprAst add;
                add.kind = ExprAst::Kind::Add;
                add.kids = {std::move(lhs), std::move(rhs)};
                lhs = std::move(add);
            } else if (eat('-')) {
                ExprAst rhs = parse_term();
                ExprAst neg;
                neg.kind = ExprAst::Kind::Neg;
                neg.kids = {std::move(rhs)};
                ExprAst add;
                add.kind = ExprAst::Kind::Add;
                add.kids = {std::move(lhs), std::move(neg)};
                lhs = std::move(add);
            } else {
                return lhs;
            }
        }
    }

    ExprAst parse_term() {
        ExprAst lhs = parse_factor();
        while (eat('*')) {
            ExprAst rhs = parse_factor();
            ExprAst mul;
            mul.kind = ExprAst::Kind::Mul;
            mul.kids = {std::move(lhs), std::move(rhs)};
            lhs = std::move(mul);
        }
        return lhs;
    }

    ExprAst parse_factor() {
        if (eat('-')) {
            ExprAst neg;
            neg.kind = ExprAst::Kind::Neg;
            neg.kids = {parse_factor()};
            return neg;
        }
        ExprAst base = parse_atom();
        skip_ws();
        if (eat('^')) {
            ExprAst pow;
            pow.kind = ExprAst::Kind::Pow;
            pow.exponent = parse_exponent();
            pow.kids = {std::move(base)};
            return pow;
        }
        return base;
    }

    unsigned long parse_exponent() {
        skip_ws();
        const std::size_t at = i_;
        bool paren = eat('(');
        skip_ws();
        if (i_ < s_.size() && s_[i_] == '-') fail(i_, "negative exponent rejected");
        BigInt e = digits("exponent");
        skip_ws();
        if (i_ < s_.size() && s_[i_] == '/') fail(i_, "fractional exponent rejected");
        if (paren && !eat(')')) fail(i_, "expected ')' after exponent");
        if (e > kExponentCap) fail(at, "exponent exceeds the desk-scale cap");
        return e.get_ui();
    }

    ExprAst parse_atom() {
        skip_ws();
        if (i_ >= s_.size()) fail(i_, "unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            ExprAst e = parse_expr();
            if (!eat(')')) fail(i_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = digits("number");
            BigInt den = 1;
            skip_ws();
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                const std::size_t at = i_;
                den = digits("denominator");
                if (den == 0) fail(at, "zero denominator");
            }
            ExprAst k;
            k.kind = ExprAst::Kind::Constant;
            k.value = make_rat(num, den);
            return k;
        }
        if (c == 'T') {
            ++i_;
            ExprAst v;
            v.kind = ExprAst::Kind::Variable;
            v.var = 0;
            return v;
        }
        if (c == 'X') {
            const std::size_t at = i_;
            ++i_;
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                fail(at, "expected variable index after 'X'");
            BigInt idx = digits("variable index");
            if (idx < 1) fail(at, "variable index must be >= 1");
            if (idx > 64) fail(at, "variable index exceeds the desk-scale cap");
            ExprAst v;
            v.kind = ExprAst::Kind::Variable;
            v.var = static_cast<int>(idx.get_ui());
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail(i_, "unknown identifier");
        fail(i_, "unexpected character");
    }
};

} // namespace

ExprAst parse(std::string_view text) { return Parser(text).run(); }

int max_var_index(const ExprAst& ast) {
    int m = ast.kind == ExprAst::Kind::Variable ? ast.var : 0;
    for (const ExprAst& k : ast.kids) m = std::max(m, max_var_index(k));
    return m;
}

bool uses_t(const ExprAst& ast) {
    if (ast.kind == ExprAst::Kind::Variable && ast.var == 0) return true;
    for (const ExprAst& k : ast.kids) {
        if (uses_t(k)) return true;
    }
    return false;
}

UPoly to_upoly(const ExprAst& ast) {
    switch (ast.kind) {
    case ExprAst::Kind::Constant: return UPoly::constant(ast.value);
    case ExprAst::Kind::Variable:
        if (ast.var != 0)
            throw std::invalid_argument("to_upoly: multivariate input (X variables) not allowed");
        return UPoly::variable();
    case ExprAst::Kind::Add: return to_upoly(ast.kids[0]) + to_upoly(ast.kids[1]);
    case ExprAst::Kind::Mul: return to_upoly(ast.kids[0]) * to_upoly(ast.kids[1]);
    case ExprAst::Kind::Neg: return -to_upoly(ast.kids[0]);
    case ExprAst::Kind::Pow: return to_upoly(ast.kids[0]).pow(ast.exponent);
    }
    throw std::logic_error("to_upoly: bad node");
}

MPoly to_mpoly(const ExprAst& ast, int arity) {
    switch (ast.kind) {
    case ExprAst::Kind::Constant: return MPoly::constant(arity, ast.value);
    case ExprAst::Kind::Variable:
        if (ast.var == 0)
            throw std::invalid_argument("to_mpoly: variable T not allowed in a multivariate context");
        if (ast.var > arity) throw std::invalid_argument("to_mpoly: arity mismatch");
        return MPoly::var(arity, ast.var);
    case ExprAst::Kind::Add: return to_mpoly(ast.kids[0], arity) + to_mpoly(ast.kids[1], arity);
    case ExprAst::Kind::Mul: return to_mpoly(ast.kids[0], arity) * to_mpoly(ast.kids[1], arity);
    case ExprAst::Kind::Neg: return -to_mpoly(ast.kids[0], arity);
    case ExprAst::Kind::Pow: return to_mpoly(ast.kids[0], arity).pow(ast.exponent);
    }
    throw std::logic_error("to_mpoly: bad node");
}

namespace {

// Shared term formatting: sign handling, 1-coefficient elision.
void append_term(std::string& out, const Rat& coeff, const std::string& mono) {
    const bool first = out.empty();
    const Rat a = coeff < 0 ? Rat(-coeff) : coeff;
    if (first) {
        if (coeff < 0) out += "-";
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
        out += rat_to_string(a);
    } else if (a == 1) {
        out += mono;
    } else {
        out += rat_to_string(a) + "*" + mono;
    }
}

} // namespace

std::string print_canonical(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg(); k >= 0; --k) {
        const Rat c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        std::string mono;
        if (k == 1) mono = "T";
        else if (k > 1) mono = "T^" + std::to_string(k);
        append_term(out, c, mono);
    }
    return out;
}

std::string print_canonical(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        append_term(out, c, mono);
    }
    return out;
}

} // namespace arlab
