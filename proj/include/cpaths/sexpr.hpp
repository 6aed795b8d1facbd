#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpaths/expr.hpp"
#include "cpaths/path.hpp"

namespace cpaths {

/// Raw s-expression: an atom or a parenthesised list.
struct SExpr {
    bool is_atom = false;
    std::string atom;
    std::vector<SExpr> items;
    int line = 1;
    int column = 1;
};

/// Reads exactly one s-expression; trailing non-whitespace is an error.
SExpr read_sexpr(std::string_view text);

std::string to_sexpr(const Expr& e);
std::string to_sexpr(const Path& p);

Expr expr_from_sexpr(const SExpr& s);
/// Builds the path without checking well-formedness.
Path path_from_sexpr(const SExpr& s);

Expr parse_expr(std::string_view text);
/// Parses and validates; throws SyntaxError or IllFormed.
Path parse_path(std::string_view text);
/// Parses without validating, for tools that report ill-formed input.
Path parse_path_unchecked(std::string_view text);

}  // namespace cpaths
