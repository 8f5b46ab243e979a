// Shared helpers for the test binaries: random instances, brute-force
// reference oracles written independently of the library code they check,
// and the two model tables from the hardness constructions.

#pragma once

#include <ltlbd/detection.hpp>
#include <ltlbd/formula.hpp>
#include <ltlbd/interp.hpp>
#include <ltlbd/propsat.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace support
{

using namespace ltlbd;

inline std::uint64_t below( std::mt19937_64& rng, std::uint64_t n )
{
  return rng() % n;
}

inline std::vector<std::string> names( std::size_t n, char prefix = 'x' )
{
  std::vector<std::string> out;
  for ( std::size_t i = 1; i <= n; ++i )
    out.push_back( std::string( 1, prefix ) + std::to_string( i ) );
  return out;
}

inline std::vector<Modality> literal_modalities( OperatorSet ops )
{
  std::vector<Modality> out{ Modality::none };
  for ( auto m : ops.members() )
    out.push_back( m );
  return out;
}

inline Literal random_literal( std::mt19937_64& rng, std::vector<std::string> const& vars, OperatorSet ops )
{
  auto const mods = literal_modalities( ops );
  return Literal{ vars[below( rng, vars.size() )], mods[below( rng, mods.size() )], below( rng, 2 ) == 1 };
}

/* facts are drawn from the variables that occur in clauses */
inline SnfFormula random_formula( std::mt19937_64& rng, std::size_t nvars, std::size_t nclauses,
                                  std::size_t max_len, OperatorSet ops, unsigned fact_percent = 30 )
{
  auto const vars = names( nvars );
  std::vector<Clause> cls;
  for ( std::size_t c = 0; c < nclauses; ++c )
  {
    std::vector<Literal> lits;
    std::size_t const len = 1 + below( rng, max_len );
    for ( std::size_t l = 0; l < len; ++l )
      lits.push_back( random_literal( rng, vars, ops ) );
    cls.emplace_back( std::move( lits ) );
  }
  SnfFormula phi( ops, {}, std::move( cls ) );
  std::vector<std::string> facts;
  for ( auto const& v : phi.variables() )
    if ( below( rng, 100 ) < fact_percent )
      facts.push_back( v );
  phi.initial = facts;
  return phi;
}

/* ---- always-only semantics over an explicit assignment set ---- */

/* member bit i = value of the i-th sorted variable */
inline bool set_satisfies( SnfFormula const& phi, std::vector<std::uint32_t> const& members, std::uint32_t alpha0 )
{
  auto const vars = phi.variables();
  auto bit = [&]( std::string const& v ) {
    return std::uint32_t{ 1 } << ( std::find( vars.begin(), vars.end(), v ) - vars.begin() );
  };
  std::uint32_t everywhere = ~std::uint32_t{ 0 };
  for ( auto m : members )
    everywhere &= m;
  for ( auto const& f : phi.initial )
    if ( !( alpha0 & bit( f ) ) )
      return false;
  for ( auto alpha : members )
    for ( auto const& c : phi.clauses )
    {
      bool sat = false;
      for ( auto const& l : c.literals() )
      {
        bool const v = l.modality == Modality::always ? ( everywhere & bit( l.var ) ) : ( alpha & bit( l.var ) );
        sat = sat || v == l.positive;
      }
      if ( !sat )
        return false;
    }
  return true;
}

/* Direct search over every assignment set of size <= |vars|+1 with a designated
   initial member. Only for a handful of variables. */
inline bool star_condition_direct( SnfFormula const& phi )
{
  std::size_t const n = phi.variables().size();
  std::uint32_t const worlds = std::uint32_t{ 1 } << n;
  std::size_t const max_size = n + 1;
  std::vector<std::uint32_t> pick;
  bool found = false;
  auto rec = [&]( auto&& self, std::uint32_t next ) -> void {
    if ( found )
      return;
    if ( !pick.empty() )
      for ( auto a0 : pick )
        if ( set_satisfies( phi, pick, a0 ) )
        {
          found = true;
          return;
        }
    if ( pick.size() == max_size )
      return;
    for ( std::uint32_t w = next; w < worlds && !found; ++w )
    {
      pick.push_back( w );
      self( self, w + 1 );
      pick.pop_back();
    }
  };
  rec( rec, 0 );
  return found;
}

/* ---- window models by plain enumeration ----
   Order: start world, then all cells (left row, worlds 0..W, right row,
   variable by variable), the first cell most significant, 0 before 1. */
inline std::optional<FiniteWindowInterpretation> brute_window( SnfFormula const& phi, int w )
{
  auto const vars = phi.variables();
  std::size_t const n = vars.size();
  std::size_t const rows = static_cast<std::size_t>( w ) + 3;
  std::size_t const cells = rows * n;
  if ( cells > 20 )
    throw std::length_error( "brute_window: too many cells" );
  for ( int start = 0; start <= w; ++start )
    for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << cells ); ++code )
    {
      auto cell = [&]( std::size_t r, std::size_t v ) {
        std::size_t const k = r * n + v;
        return static_cast<bool>( ( code >> ( cells - 1 - k ) ) & 1u );
      };
      auto row = [&]( std::size_t r ) {
        WorldAssignment out( n );
        for ( std::size_t v = 0; v < n; ++v )
          out[v] = cell( r, v );
        return out;
      };
      std::vector<WorldAssignment> window;
      for ( std::size_t r = 1; r + 1 < rows; ++r )
        window.push_back( row( r ) );
      FiniteWindowInterpretation m( vars, row( 0 ), window, 0, row( rows - 1 ), start );
      if ( models( m, phi ) )
        return m;
    }
  return std::nullopt;
}

/* ---- covers and hitting sets by subset enumeration ---- */

inline std::size_t brute_min_cover( ConflictGraph const& g )
{
  std::size_t const n = g.vertices.size();
  std::size_t best = n;
  for ( std::uint32_t mask = 0; mask < ( 1u << n ); ++mask )
  {
    VariableSet s;
    for ( std::size_t i = 0; i < n; ++i )
      if ( ( mask >> i ) & 1u )
        s.push_back( g.vertices[i] );
    if ( s.size() < best && is_vertex_cover( g, s ) )
      best = s.size();
  }
  return best;
}

inline std::size_t brute_min_hitting( HittingFamily const& f )
{
  std::size_t const n = f.universe.size();
  std::size_t best = n;
  for ( std::uint32_t mask = 0; mask < ( 1u << n ); ++mask )
  {
    VariableSet s;
    for ( std::size_t i = 0; i < n; ++i )
      if ( ( mask >> i ) & 1u )
        s.push_back( f.universe[i] );
    if ( s.size() < best && is_hitting_set( f, s ) )
      best = s.size();
  }
  return best;
}

/* ---- the two tables of the hardness constructions (triangle, colouring 1,2,3) ---- */

inline WorldAssignment bits( std::string const& s )
{
  WorldAssignment out;
  for ( char c : s )
    if ( c == '0' || c == '1' )
      out.push_back( c == '1' );
  return out;
}

/* columns: b1 b2 v1 v2 v3, then per edge 12,13,23 the b1b2 / nb1b2 / b1nb2 copies;
   "-" cells are 0 and the region outside 1..3 repeats the boundary rows */
inline FiniteWindowInterpretation krom_triangle_table()
{
  std::vector<std::string> vars{ "b1",         "b2",          "v1",          "v2",         "v3",
                                 "e1_2_b1b2",  "e1_2_nb1b2",  "e1_2_b1nb2",  "e1_3_b1b2",  "e1_3_nb1b2",
                                 "e1_3_b1nb2", "e2_3_b1b2",   "e2_3_nb1b2",  "e2_3_b1nb2" };
  auto const w1 = bits( "0 0 0 1 1 1 0 0 1 0 0 0 1 0" );
  auto const w2 = bits( "1 0 1 0 1 1 0 0 1 0 0 0 1 0" );
  auto const w3 = bits( "0 1 1 1 0 1 0 0 1 0 0 0 1 0" );
  return FiniteWindowInterpretation( vars, w1, { w1, w2, w3 }, 1, w3, 1 );
}

/* columns as in the table: s c1 c2 c3 p' v1^1..v3^3 p1 p2 p3. The colour
   bits of the frozen rows are "-" in the table but clause c1|c2|c3 needs
   one of them, so they are filled with c1. */
inline FiniteWindowInterpretation horn_triangle_table( bool frozen_colour_bits_zero = false )
{
  std::vector<std::string> vars{ "s",    "c1",   "c2",   "c3",   "pprime", "v1_1", "v1_2", "v1_3", "v2_1",
                                 "v2_2", "v2_3", "v3_1", "v3_2", "v3_3",   "p1",   "p2",   "p3" };
  auto const frozen = frozen_colour_bits_zero ? bits( "0 0 0 0 0 1 0 0 0 1 0 0 0 1 1 1 1" )
                                              : bits( "0 1 0 0 0 1 0 0 0 1 0 0 0 1 1 1 1" );
  auto const w1 = bits( "1 1 0 0 0 1 0 0 0 1 0 0 0 1 0 1 1" );
  auto const w2 = bits( "0 0 1 0 0 1 0 0 0 1 0 0 0 1 1 0 1" );
  auto const w3 = bits( "0 0 0 1 1 1 0 0 0 1 0 0 0 1 1 1 0" );
  return FiniteWindowInterpretation( vars, frozen, { w1, w2, w3 }, 1, frozen, 1 );
}

} // namespace support
