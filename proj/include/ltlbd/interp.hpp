/*!
  \file interp.hpp
  \brief Eventually-constant temporal interpretations over the integers.

  An interpretation is fixed to the `left` assignment on every world below
  `lo`, lists one assignment per world in [lo, hi], and is fixed to the
  `right` assignment on every world above `hi`. Evaluation is exact on the
  sentinel range [lo-2, hi+2]; for non-nested literals every world below
  lo-2 (above hi+2) behaves like lo-2 (hi+2).
*/

#pragma once

#include <ltlbd/formula.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ltlbd
{

/* One value per variable, in the owning container's variable order. */
using WorldAssignment = std::vector<bool>;

class FiniteWindowInterpretation
{
public:
  FiniteWindowInterpretation( std::vector<std::string> vars, WorldAssignment left, std::vector<WorldAssignment> window,
                              int lo, WorldAssignment right, int start );

  std::vector<std::string> const& variables() const { return vars_; }
  std::optional<std::size_t> index_of( std::string_view var ) const;

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>( window_.size() ) - 1; }
  int start() const { return start_; }

  WorldAssignment const& left() const { return left_; }
  WorldAssignment const& right() const { return right_; }
  std::vector<WorldAssignment> const& window() const { return window_; }

  /* valid for every integer world */
  bool value( int world, std::size_t var ) const;
  WorldAssignment const& row( int world ) const;

  /* same rows, all world indices moved by `delta` */
  FiniteWindowInterpretation shifted( int delta ) const;

  friend bool operator==( FiniteWindowInterpretation const&, FiniteWindowInterpretation const& ) = default;

private:
  std::vector<std::string> vars_;
  WorldAssignment left_;
  std::vector<WorldAssignment> window_;
  int lo_;
  WorldAssignment right_;
  int start_;
};

/* Throws std::out_of_range outside [lo-2, hi+2]. */
bool holds_literal( FiniteWindowInterpretation const& m, int world, Literal const& lit );
bool holds_clause( FiniteWindowInterpretation const& m, int world, Clause const& c );

/*! \brief M, start |= phi.

  Every initial fact must hold at the start world and every clause at every
  world of the sentinel range. Throws std::invalid_argument when the formula
  mentions a variable the interpretation does not define.
*/
bool models( FiniteWindowInterpretation const& m, SnfFormula const& phi );

/* The assignment holding at world z; throws outside the sentinel range. */
WorldAssignment assign( FiniteWindowInterpretation const& m, int z );

/*! \brief Worlds whose assignment agrees with `theta`, clipped to [lo-1, hi+1].

  lo-1 stands for the whole left-frozen region and hi+1 for the right one.
*/
std::vector<int> worlds( FiniteWindowInterpretation const& m, std::vector<std::pair<std::string, bool>> const& theta );

/*! \brief A set of world assignments with a designated initial member. */
struct AssignmentSet
{
  std::vector<std::string> vars;
  std::vector<WorldAssignment> members;
  std::size_t initial = 0;

  WorldAssignment const& initial_member() const { return members.at( initial ); }
};

/* Restriction of every member to `v` (kept in `a.vars` order); duplicates collapse. */
AssignmentSet project( AssignmentSet const& a, std::vector<std::string> const& v );

/*! \brief The model built from an assignment set.

  Worlds 0..k-1 list the initial member first and the remaining distinct
  members in lexicographic order; the left region repeats the initial member
  and the right region repeats the last listed one. The start world is 0.
*/
FiniteWindowInterpretation from_assignment_set( AssignmentSet const& a );

/*! \brief Propositional check of the assignment-set characterisation.

  The initial member satisfies every fact, and every member satisfies every
  clause when [*]v is read as "v holds in every member".
  Requires an always-only formula.
*/
bool assignment_set_conditions_hold( SnfFormula const& phi, AssignmentSet const& a );

} // namespace ltlbd
