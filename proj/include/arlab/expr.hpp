#pragma once

#include "arlab/mpoly.hpp"
#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arlab {

/// Parse tree of the expression grammar:
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := atom ('^' uint)? | '-' factor ; atom := rational | var | '(' expr ')' ;
///   rational := int ('/' uint)? ; var := 'T' | 'X' uint .
/// Subtraction is desugared to add + neg.
struct ExprAst {
    enum class Kind { Constant, Variable, Add, Mul, Neg, Pow };
    Kind kind = Kind::Constant;
    Rat value;                   // Constant
    int var = 0;                 // Variable: 0 = T, k >= 1 = Xk
    unsigned long exponent = 0;  // Pow
    std::vector<ExprAst> kids;
};

ExprAst parse(std::string_view text);

/// Largest X index in the tree; 0 when none occurs.
int max_var_index(const ExprAst& ast);
bool uses_t(const ExprAst& ast);

UPoly to_upoly(const ExprAst& ast);
MPoly to_mpoly(const ExprAst& ast, int arity);

std::string print_canonical(const UPoly& p);
std::string print_canonical(const MPoly& p);

} // namespace arlab
