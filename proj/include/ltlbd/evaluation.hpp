/*!
  \file evaluation.hpp
  \brief Satisfiability of always-only formulas from a strong HORN backdoor.

  For every nonempty set Theta of assignments to the backdoor X and every
  designated theta0 in Theta, a propositional Horn formula F is built whose
  models correspond to assignment sets A with A|X = Theta, an initial member
  projecting to theta0, and at most |R|+1 members per theta (R = vars \ X).
  The formula is satisfiable iff one of these Horn formulas is.
*/

#pragma once

#include <ltlbd/detection.hpp>
#include <ltlbd/formula.hpp>
#include <ltlbd/interp.hpp>
#include <ltlbd/propsat.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ltlbd
{

/* Bit j of a backdoor assignment is the value of X[j]. */
using BackdoorAssignment = std::uint32_t;

inline constexpr std::size_t evaluation_backdoor_budget = 5;

struct ThetaSet
{
  VariableSet backdoor;                     /* X, sorted */
  std::vector<BackdoorAssignment> members;  /* sorted, unique, nonempty */
  std::size_t designated = 0;               /* index of theta0 in members */

  BackdoorAssignment theta0() const { return members.at( designated ); }
};

/* Canonical label of a backdoor assignment: one 0/1 character per X variable. */
std::string label_of( BackdoorAssignment theta, std::size_t width );

/*! \brief [*]v is true iff v is true in every member. With `theta`, the plain
    variables of `vars` additionally copy theta. */
std::map<PropAtom, bool> glassign( std::vector<std::map<std::string, bool>> const& members,
                                   std::vector<std::string> const& vars,
                                   std::optional<std::map<std::string, bool>> const& theta = std::nullopt );

/* glassign(Theta, X, theta) as an assignment over X and [*]X, ready for reducts. */
ConsistentAssignment glassign_backdoor( ThetaSet const& theta_set, BackdoorAssignment theta );

/*! \brief Propositional reading: [*]x becomes global(x), x becomes plain(x).
    Throws on past/future literals. */
PropCnf propF( std::vector<Clause> const& phi );

/*! \brief Replace every plain atom over `vars` by copy(v, i, label). */
PropCnf mcopy( PropCnf const& f, VariableSet const& vars, int i, std::string const& label );

/* Clause-count bound 2^|X|(|R|+1)(|Phi|+|Psi|) + 2*2^|X|(|R|+1)^2. */
std::size_t horn_star_length_bound( std::size_t backdoor_size, std::size_t rest_size, std::size_t clause_count,
                                    std::size_t fact_count );

/*! \brief The Horn formula F for (Theta, theta0).

  Requires an always-only operator set and a verified HORN backdoor; throws
  std::invalid_argument otherwise.
*/
PropCnf build_F( SnfFormula const& phi, ThetaSet const& theta_set );

enum class Verdict
{
  sat,
  unsat,
};

struct EvalWitness
{
  ThetaSet theta_set;
  PropModel horn_model;
  AssignmentSet assignments;
};

struct EvalStats
{
  std::size_t candidates = 0;      /* (Theta, theta0) pairs examined */
  std::size_t max_formula_size = 0;
  std::size_t length_bound = 0;
  std::size_t max_members_per_theta = 0;
};

struct EvalResult
{
  Verdict verdict = Verdict::unsat;
  std::optional<EvalWitness> witness;
  EvalStats stats;
};

/*! \brief Enumerate Theta by increasing size then lexicographically, theta0
    in member order, and stop at the first satisfiable Horn formula.

  Valid clauses are removed first (as in detection), so a backdoor of the
  cleaned formula is accepted; the witness still covers every variable of
  `phi` and is checked against `phi` itself.

  `on_formula`, when set, observes every constructed F (for dumps and
  instrumentation).
*/
EvalResult evaluate_horn_star( SnfFormula const& phi, VariableSet const& backdoor,
                               std::function<void( ThetaSet const&, PropCnf const& )> const& on_formula = {} );

/* Members of the assignment set that project to theta on X. */
std::size_t members_matching( AssignmentSet const& a, VariableSet const& backdoor, BackdoorAssignment theta );

} // namespace ltlbd
