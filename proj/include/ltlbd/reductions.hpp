/*!
  \file reductions.hpp
  \brief 3-colouring gadgets: an always-only formula with a 2-variable KROM
         backdoor, and a past/future formula with a 4-variable HORN backdoor.

  Vertices are numbered 1..n. Variable names:
    star-krom: b1, b2, v<i>, e<i>_<j>_b1b2, e<i>_<j>_nb1b2, e<i>_<j>_b1nb2
    fp-horn:   c1, c2, c3, pprime, s, v<i>_<c>, p<i>
  In the fp-horn formula "the i-th world" is start + i - 1.
*/

#pragma once

#include <ltlbd/detection.hpp>
#include <ltlbd/formula.hpp>
#include <ltlbd/interp.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ltlbd
{

struct Graph
{
  int n = 0;
  std::vector<std::pair<int, int>> edges; /* i < j, sorted, unique */

  /* normalises edge orientation; throws on loops, duplicates and bad indices */
  static Graph make( int n, std::vector<std::pair<int, int>> edges );
  static Graph complete( int n );
};

/* colour of vertex i (1-based) is colours[i-1], each in {1,2,3} */
using Colouring = std::vector<int>;

bool is_proper( Graph const& g, Colouring const& f );

inline constexpr int brute_3col_vertex_budget = 10;

/* First proper colouring in lexicographic order (vertex 1 most significant). */
std::optional<Colouring> brute_3col( Graph const& g );

enum class ReductionTarget
{
  star_krom,
  fp_horn,
};

std::string to_string( ReductionTarget t );

struct Reduction
{
  SnfFormula formula;
  VariableSet backdoor; /* sorted */
};

Reduction threecol_to_star_krom( Graph const& g );
Reduction threecol_to_fp_horn( Graph const& g );
Reduction reduce( Graph const& g, ReductionTarget t );

namespace names
{
std::string vertex( int i );                  /* star-krom v<i> */
std::string edge( int i, int j, char kind ); /* kind: 'a' b1b2, 'b' nb1b2, 'c' b1nb2 */
std::string colour_copy( int i, int c );      /* fp-horn v<i>_<c> */
std::string position( int i );                /* fp-horn p<i> */
} // namespace names

/*! \brief The model from the hardness proofs for a proper colouring.

  star-krom uses worlds 1..3 as the three colours; fp-horn uses worlds 1..n
  starting at world 1. Unconstrained cells are 0, except that the frozen
  fp-horn rows set c1 so that exactly one colour bit holds everywhere.
*/
FiniteWindowInterpretation model_from_coloring( Graph const& g, Colouring const& f, ReductionTarget t );

/* Throws std::invalid_argument when m does not satisfy the reduced formula. */
Colouring coloring_from_model( Graph const& g, FiniteWindowInterpretation const& m, ReductionTarget t );

/*! \brief Structural claims about fp-horn models, checked on every world of
    the sentinel range. Returns one message per violated claim (empty if all
    hold). */
std::vector<std::string> check_fp_horn_claims( Graph const& g, FiniteWindowInterpretation const& m );

} // namespace ltlbd
