/*!
  \file oracle.hpp
  \brief Ground-truth satisfiability for small formulas.

  star_sat_oracle is exact for always-only formulas: it enumerates the
  global part g (which [*]v hold) and scans the worlds compatible with g.
  window_sat_oracle searches eventually-constant interpretations whose
  explicit window is [0, W]; a negative answer only means that no such model
  exists, never that the formula is unsatisfiable.
*/

#pragma once

#include <ltlbd/formula.hpp>
#include <ltlbd/interp.hpp>

#include <optional>
#include <string>

namespace ltlbd
{

inline constexpr std::size_t star_enumeration_variable_budget = 12;
inline constexpr std::size_t star_oracle_variable_budget = 256;
inline constexpr std::size_t window_oracle_cell_budget = 4096;

enum class OracleVerdict
{
  sat,
  unsat,
  no_model_within_window,
};

std::string to_string( OracleVerdict v );

struct OracleResult
{
  OracleVerdict verdict = OracleVerdict::unsat;
  std::optional<FiniteWindowInterpretation> model;
  std::size_t candidates = 0; /* g candidates (star) or solver calls (window) */
};

/*! \brief Exact oracle for always-only formulas.

  Satisfiable iff some global part g has a world satisfying the facts and,
  for every v with [*]v false, a world where v is false, all among the
  worlds that agree with g and satisfy every clause. The witness is the one
  of the least g (bit i = i-th variable in sorted order, compared as a
  number), with the least qualifying world for each role. The search runs on
  a clause encoding with one world copy per role.

  Throws std::invalid_argument on past/future operators and
  std::length_error beyond star_oracle_variable_budget variables.
*/
OracleResult star_sat_oracle( SnfFormula const& phi );

/* The same oracle by plain enumeration of g and the worlds; at most
   star_enumeration_variable_budget variables. Returns the same witness. */
OracleResult star_sat_enumerate( SnfFormula const& phi );

/*! \brief Search for a model with window [0, W] plus two frozen rows.

  The start world may be any world of the window. Among all such models
  the result is the first one in the order (start world, left row, window
  rows, right row), each row read variable by variable with 0 before 1.
  Throws std::length_error when (W+3)*|vars| exceeds window_oracle_cell_budget.
*/
OracleResult window_sat_oracle( SnfFormula const& phi, int w );

} // namespace ltlbd
