/*!
  \file cdcl.hpp
  \brief A small deterministic conflict-driven clause-learning solver used
         as the search engine behind the bounded-window oracle.

  Variables are 1-based; literals use the DIMACS sign convention. Decisions
  prefer the most active unassigned variable with ties broken by the lowest
  index, phases default to false, and restarts follow the Luby sequence, so
  identical inputs always produce identical models.
*/

#pragma once

#include <cstdint>
#include <vector>

namespace ltlbd
{

class CdclSolver
{
public:
  int new_var();
  int num_vars() const { return static_cast<int>( assigns_.size() ); }

  /* Must be called between solves (the solver is back at level 0). */
  void add_clause( std::vector<int> lits );

  /* false means unsatisfiable under the assumptions (or outright) */
  bool solve( std::vector<int> const& assumptions = {} );

  /* Value of `var` in the last model. */
  bool model_value( int var ) const { return model_.at( static_cast<std::size_t>( var - 1 ) ); }

  std::size_t conflicts() const { return conflicts_; }

private:
  using Lit = std::uint32_t; /* 2*var + (negative ? 1 : 0), var 0-based */
  static constexpr std::int8_t undef = -1;
  static constexpr int no_reason = -1;

  static Lit encode( int dimacs );
  std::int8_t value( Lit l ) const;
  int level_of( Lit l ) const { return level_[l >> 1]; }
  int decision_level() const { return static_cast<int>( trail_lim_.size() ); }

  void enqueue( Lit l, int reason );
  int propagate();
  void analyze( int conflict, std::vector<Lit>& learnt, int& backjump );
  void cancel_until( int level );
  void bump( std::uint32_t var );
  int pick_branch() const;
  int attach( std::vector<Lit> lits );

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> phase_;
  std::vector<double> activity_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  double bump_inc_ = 1.0;
  bool inconsistent_ = false;
  std::size_t conflicts_ = 0;
  std::vector<bool> model_;
  std::vector<bool> seen_;
};

} // namespace ltlbd
