/*!
  \file detection.hpp
  \brief Strong backdoor detection into HORN (vertex cover) and KROM
         (3-hitting set), backdoor verification, and a brute-force oracle.

  Both detectors first drop every clause satisfied by all consistent
  assignments (see remove_valid_clauses); their guarantees refer to that
  cleaned formula, which is equisatisfiable with the input.
*/

#pragma once

#include <ltlbd/formula.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ltlbd
{

using VariableSet = std::vector<std::string>; /* sorted, unique */

struct ConflictGraph
{
  std::vector<std::string> vertices;                      /* sorted */
  std::vector<std::pair<std::string, std::string>> edges; /* first <= second, sorted, unique */

  bool has_self_loop( std::string const& v ) const;
};

struct HittingFamily
{
  std::vector<std::string> universe;        /* sorted */
  std::vector<std::vector<std::string>> sets; /* each sorted, size 1..3; family sorted, unique */
};

/* Branching instrumentation for the bounded search trees. */
struct SearchStats
{
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
};

/* Edge {x,y} iff some clause has two distinct positive literals over x and y. */
ConflictGraph build_horn_conflict_graph( SnfFormula const& phi );

bool is_vertex_cover( ConflictGraph const& g, VariableSet const& cover );

/*! \brief Bounded search tree: self-loop vertices are forced, then branch on
    the endpoints of the first uncovered edge. Depth never exceeds k. */
std::optional<VariableSet> vertex_cover( ConflictGraph const& g, std::size_t k, SearchStats* stats = nullptr );

/* One set Vars(C) per selection C of three distinct literals of a clause. */
HittingFamily build_krom_hitting_family( SnfFormula const& phi );

bool is_hitting_set( HittingFamily const& f, VariableSet const& s );

/*! \brief 3^k branching on the elements of the first unhit set. */
std::optional<VariableSet> hitting_set_3( HittingFamily const& f, std::size_t k, SearchStats* stats = nullptr );

std::optional<VariableSet> detect_horn_backdoor( SnfFormula const& phi, std::size_t k, SearchStats* stats = nullptr );
std::optional<VariableSet> detect_krom_backdoor( SnfFormula const& phi, std::size_t k, SearchStats* stats = nullptr );
std::optional<VariableSet> detect_backdoor( SnfFormula const& phi, TargetClass target, std::size_t k,
                                            SearchStats* stats = nullptr );

/*! \brief True iff phi[theta] is in the target class for every consistent
    assignment theta over X and its modal copies. Throws when X is not a
    subset of the formula's variables. */
bool verify_backdoor( SnfFormula const& phi, VariableSet const& x, TargetClass target );

inline constexpr std::size_t brute_backdoor_variable_budget = 12;

/*! \brief Smallest backdoor by exhaustive search over subsets of increasing
    size, ties broken lexicographically. Throws std::length_error above the
    variable budget. */
VariableSet minimal_backdoor_bruteforce( SnfFormula const& phi, TargetClass target );

} // namespace ltlbd
