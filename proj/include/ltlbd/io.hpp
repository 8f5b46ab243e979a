/*!
  \file io.hpp
  \brief Text formats: SNF formulas, model tables and DIMACS graphs.

  SNF files are line based. `#` starts a comment.

    operators: F P *
    init: s, x
    clause: ~[*]x | [F]y | z

  A literal is an optional `~`, an optional tag ([F], [P] or [*]) and a
  name matching [A-Za-z][A-Za-z0-9_]*. The constant-false literal `0` may
  appear in a clause and is dropped.

  Model tables:

    vars: a b
    start: 0
    left: 0 1
    world 0: 1 1
    right: 0 0
*/

#pragma once

#include <ltlbd/formula.hpp>
#include <ltlbd/interp.hpp>
#include <ltlbd/reductions.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltlbd
{

class ParseError : public std::runtime_error
{
public:
  ParseError( std::size_t line, std::size_t column, std::string const& what );

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

struct SnfDocument
{
  SnfFormula formula;
  /* well-formed syntax that is not in normal form, e.g. nested tags */
  std::vector<std::string> violations;
};

SnfDocument parse_snf_document( std::istream& in );
SnfDocument parse_snf_document_string( std::string const& text );

/* As above, but any violation is reported as a ParseError. */
SnfFormula parse_snf( std::istream& in );
SnfFormula parse_snf_string( std::string const& text );

void print_snf( std::ostream& out, SnfFormula const& phi );
std::string snf_to_string( SnfFormula const& phi );

FiniteWindowInterpretation parse_model( std::istream& in );
FiniteWindowInterpretation parse_model_string( std::string const& text );
void print_model( std::ostream& out, FiniteWindowInterpretation const& m );
std::string model_to_string( FiniteWindowInterpretation const& m );

Graph parse_dimacs_col( std::istream& in );
Graph parse_dimacs_col_string( std::string const& text );
void print_dimacs_col( std::ostream& out, Graph const& g );

/* comma-separated, no spaces */
std::string join_variables( std::vector<std::string> const& vars );
std::vector<std::string> split_variables( std::string const& text );

} // namespace ltlbd
