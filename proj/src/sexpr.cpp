#include "cpaths/sexpr.hpp"

#include <cctype>

#include "cpaths/error.hpp"

namespace cpaths {

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    SExpr read_top() {
        skip_ws();
        SExpr s = read();
        skip_ws();
        if (i_ < text_.size()) fail("unexpected trailing input");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, col_, what); }

    void advance() {
        if (text_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws() {
        while (i_ < text_.size()) {
            const char c = text_[i_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == ';') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    SExpr read() {
        if (i_ >= text_.size()) fail("unexpected end of input");
        SExpr s;
        s.line = line_;
        s.column = col_;
        const char c = text_[i_];
        if (c == '(') {
            advance();
            for (;;) {
                skip_ws();
                if (i_ >= text_.size()) fail("unclosed '('");
                if (text_[i_] == ')') {
                    advance();
                    return s;
                }
                s.items.push_back(read());
            }
        }
        if (c == ')') fail("unexpected ')'");
        s.is_atom = true;
        while (i_ < text_.size()) {
            const char d = text_[i_];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
            s.atom += d;
            advance();
        }
        return s;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void shape_error(const SExpr& s, const std::string& what) {
    throw SyntaxError(s.line, s.column, what);
}

const std::string& head(const SExpr& s, const char* what) {
    if (s.is_atom || s.items.empty() || !s.items[0].is_atom) shape_error(s, std::string("expected ") + what);
    return s.items[0].atom;
}

void expect_arity(const SExpr& s, std::size_t n) {
    if (s.items.size() != n + 1) {
        shape_error(s, "'" + s.items[0].atom + "' takes " + std::to_string(n) + " argument(s)");
    }
}

const std::string& identifier(const SExpr& s) {
    if (!s.is_atom || !is_identifier(s.atom)) shape_error(s, "expected an identifier");
    return s.atom;
}

void print(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::Var: out += "(var " + e.name() + ")"; return;
        case Expr::Kind::Const: out += "(const " + e.name() + ")"; return;
        case Expr::Kind::Lam:
            out += "(lam " + e.name() + " ";
            print(e.body(), out);
            out += ")";
            return;
        case Expr::Kind::App:
            out += "(app ";
            print(e.fun(), out);
            out += " ";
            print(e.arg(), out);
            out += ")";
            return;
    }
}

void print(const Path& p, std::string& out) {
    switch (p.kind()) {
        case Path::Kind::Refl: out += "(refl "; print(p.expr(), out); break;
        case Path::Kind::Beta: out += "(beta "; print(p.expr(), out); break;
        case Path::Kind::Eta: out += "(eta "; print(p.expr(), out); break;
        case Path::Kind::Symm: out += "(symm "; print(p.sub(), out); break;
        case Path::Kind::Trans:
            out += "(trans ";
            print(p.left(), out);
            out += " ";
            print(p.right(), out);
            break;
        case Path::Kind::Xi:
            out += "(xi " + p.binder() + " ";
            print(p.sub(), out);
            break;
        case Path::Kind::Nu:
            out += "(nu ";
            print(p.sub(), out);
            out += " ";
            print(p.expr(), out);
            break;
        case Path::Kind::Mu:
            out += "(mu ";
            print(p.expr(), out);
            out += " ";
            print(p.sub(), out);
            break;
    }
    out += ")";
}

}  // namespace

SExpr read_sexpr(std::string_view text) { return Reader(text).read_top(); }

std::string to_sexpr(const Expr& e) {
    std::string out;
    print(e, out);
    return out;
}

std::string to_sexpr(const Path& p) {
    std::string out;
    print(p, out);
    return out;
}

Expr expr_from_sexpr(const SExpr& s) {
    const std::string& h = head(s, "an expression");
    if (h == "var") {
        expect_arity(s, 1);
        return Expr::var(identifier(s.items[1]));
    }
    if (h == "const") {
        expect_arity(s, 1);
        return Expr::constant(identifier(s.items[1]));
    }
    if (h == "lam") {
        expect_arity(s, 2);
        return Expr::lam(identifier(s.items[1]), expr_from_sexpr(s.items[2]));
    }
    if (h == "app") {
        expect_arity(s, 2);
        return Expr::app(expr_from_sexpr(s.items[1]), expr_from_sexpr(s.items[2]));
    }
    shape_error(s, "unknown expression form '" + h + "'");
}

Path path_from_sexpr(const SExpr& s) {
    const std::string& h = head(s, "a path");
    if (h == "refl") {
        expect_arity(s, 1);
        return Path::refl(expr_from_sexpr(s.items[1]));
    }
    if (h == "beta") {
        expect_arity(s, 1);
        return Path::beta(expr_from_sexpr(s.items[1]));
    }
    if (h == "eta") {
        expect_arity(s, 1);
        return Path::eta(expr_from_sexpr(s.items[1]));
    }
    if (h == "symm") {
        expect_arity(s, 1);
        return Path::symm(path_from_sexpr(s.items[1]));
    }
    if (h == "trans") {
        expect_arity(s, 2);
        return Path::trans(path_from_sexpr(s.items[1]), path_from_sexpr(s.items[2]));
    }
    if (h == "xi") {
        expect_arity(s, 2);
        return Path::xi(identifier(s.items[1]), path_from_sexpr(s.items[2]));
    }
    if (h == "nu") {
        expect_arity(s, 2);
        return Path::nu(path_from_sexpr(s.items[1]), expr_from_sexpr(s.items[2]));
    }
    if (h == "mu") {
        expect_arity(s, 2);
        return Path::mu(expr_from_sexpr(s.items[1]), path_from_sexpr(s.items[2]));
    }
    shape_error(s, "unknown path form '" + h + "'");
}

Expr parse_expr(std::string_view text) { return expr_from_sexpr(read_sexpr(text)); }

Path parse_path_unchecked(std::string_view text) { return path_from_sexpr(read_sexpr(text)); }

Path parse_path(std::string_view text) {
    Path p = parse_path_unchecked(text);
    (void)p.src();  // throws IllFormed
    return p;
}

}  // namespace cpaths
