#pragma once
// Parsing and canonical printing of the ASCII surface syntax.
//
//   stmt  := ineqs [ "=>" ( ineqs | "E" ident+ "." ineqs ) ]
//   ineqs := ineq ( "&" ineq )*
//   ineq  := fm ( "<=" | "prec" ) fm
//   fm    := T | F | ident | @ident | "~" fm | un fm | fm op fm | "(" fm ")"
//
// Precedence, tightest first: prefix operators, /\, \/, -> (right associative).
// '#' starts a comment that runs to the end of the line.

#include <stdexcept>
#include <string>
#include <string_view>

#include "alba/statement.hpp"

namespace alba {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Statement parse_statement(std::string_view text);
Formula parse_formula(std::string_view text);
Inequality parse_inequality(std::string_view text);
QuasiInequality parse_quasi(std::string_view text);  // a bare inequality becomes T <= T => it

std::string render(const Formula& f);
std::string render(const Inequality& i);
std::string render(const std::vector<Inequality>& is);  // joined by " & "
std::string render(const MetaConjunction& m);
std::string render(const QuasiInequality& q);
std::string render(const Pi2Statement& s);
std::string render(const Statement& s);

// "forall @i @j. A & B => C" with nominals bound in order of first occurrence
std::string render_closed(const QuasiInequality& q);

}  // namespace alba
