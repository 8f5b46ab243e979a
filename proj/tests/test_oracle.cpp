#include "support.hpp"

#include <ltlbd/cdcl.hpp>
#include <ltlbd/oracle.hpp>
#include <ltlbd/reductions.hpp>

#include <doctest.h>

using namespace ltlbd;
using M = Modality;

TEST_SUITE( "oracle" )
{
  TEST_CASE( "cdcl agrees with brute force" )
  {
    std::mt19937_64 rng( 41 );
    for ( int round = 0; round < 400; ++round )
    {
      int const n = 1 + static_cast<int>( support::below( rng, 12 ) );
      std::size_t const m = support::below( rng, 5 * n );
      CdclSolver s;
      for ( int i = 0; i < n; ++i )
        s.new_var();
      PropCnf f;
      std::vector<std::vector<int>> raw;
      for ( std::size_t c = 0; c < m; ++c )
      {
        std::vector<int> cl;
        PropClause pc;
        for ( std::size_t l = 0; l < 1 + support::below( rng, 3 ); ++l )
        {
          int const v = 1 + static_cast<int>( support::below( rng, n ) );
          bool const pos = support::below( rng, 2 );
          cl.push_back( pos ? v : -v );
          pc.push_back( { PropAtom::plain( "a" + std::to_string( v ) ), pos } );
        }
        raw.push_back( cl );
        s.add_clause( cl );
        f.add( pc );
      }
      bool const expected = brute_sat( f ).has_value();
      REQUIRE( s.solve() == expected );
      if ( expected )
        for ( auto const& cl : raw )
        {
          bool sat = false;
          for ( int l : cl )
            sat = sat || s.model_value( std::abs( l ) ) == ( l > 0 );
          CHECK( sat );
        }
      /* assumptions: forcing var 1 both ways matches brute force with a unit */
      for ( int sign : { 1, -1 } )
      {
        PropCnf g = f;
        g.add( { { PropAtom::plain( "a1" ), sign > 0 } } );
        CHECK( s.solve( { sign } ) == brute_sat( g ).has_value() );
      }
    }
  }

  TEST_CASE( "cdcl on a pigeonhole instance" )
  {
    /* 5 pigeons, 4 holes */
    CdclSolver s;
    auto var = [&]( int p, int h ) { return p * 4 + h + 1; };
    for ( int i = 0; i < 20; ++i )
      s.new_var();
    for ( int p = 0; p < 5; ++p )
      s.add_clause( { var( p, 0 ), var( p, 1 ), var( p, 2 ), var( p, 3 ) } );
    for ( int h = 0; h < 4; ++h )
      for ( int p = 0; p < 5; ++p )
        for ( int q = p + 1; q < 5; ++q )
          s.add_clause( { -var( p, h ), -var( q, h ) } );
    CHECK_FALSE( s.solve() );
  }

  TEST_CASE( "verdict names" )
  {
    CHECK( to_string( OracleVerdict::sat ) == "SAT" );
    CHECK( to_string( OracleVerdict::unsat ) == "UNSAT" );
    CHECK( to_string( OracleVerdict::no_model_within_window ) == "NO_MODEL_WITHIN_WINDOW" );
  }

  TEST_CASE( "star oracle examples" )
  {
    OperatorSet const s{ M::always };
    CHECK( star_sat_oracle( SnfFormula( s, { "x" }, { { Literal::neg( "x" ) } } ) ).verdict == OracleVerdict::unsat );
    auto const r = star_sat_oracle( SnfFormula( s, { "x" }, { { Literal::neg( "x", M::always ), Literal::neg( "x" ) } } ) );
    REQUIRE( r.verdict == OracleVerdict::sat );
    CHECK( r.model->value( 0, 0 ) );
    CHECK( star_sat_oracle( SnfFormula::make_true( s ) ).verdict == OracleVerdict::sat );
    CHECK( star_sat_oracle( SnfFormula::make_false( s ) ).verdict == OracleVerdict::unsat );
    CHECK_THROWS_AS( star_sat_oracle( SnfFormula( OperatorSet::all(), {}, {} ) ), std::invalid_argument );
    auto const tri = threecol_to_star_krom( Graph::complete( 3 ) ).formula;
    auto const t = star_sat_oracle( tri );
    REQUIRE( t.verdict == OracleVerdict::sat );
    CHECK( models( *t.model, tri ) );
    /* ~[*]x forces a world with x false, x | y and ~y everywhere forbid it */
    CHECK( star_sat_oracle( SnfFormula( s, {}, { { Literal::neg( "x", M::always ) },
                                                 { Literal::pos( "x" ), Literal::pos( "y" ) },
                                                 { Literal::neg( "y" ) } } ) )
               .verdict == OracleVerdict::unsat );
  }

  TEST_CASE( "star oracle matches enumeration and direct search" )
  {
    std::mt19937_64 rng( 43 );
    for ( int round = 0; round < 400; ++round )
    {
      std::size_t const n = 1 + support::below( rng, 6 );
      auto const phi = support::random_formula( rng, n, 1 + support::below( rng, 6 ), 3, OperatorSet{ M::always } );
      auto const a = star_sat_oracle( phi );
      auto const b = star_sat_enumerate( phi );
      REQUIRE( a.verdict == b.verdict );
      if ( a.model )
      {
        CHECK( *a.model == *b.model );
        CHECK( models( *a.model, phi ) );
      }
      if ( phi.variables().size() <= 4 )
        CHECK( ( a.verdict == OracleVerdict::sat ) == support::star_condition_direct( phi ) );
    }
  }

  TEST_CASE( "star oracle budget" )
  {
    std::vector<Clause> cls;
    for ( std::size_t i = 0; i <= star_oracle_variable_budget; ++i )
      cls.push_back( { Literal::pos( "a" + std::to_string( i ) ) } );
    SnfFormula big( OperatorSet{ M::always }, {}, cls );
    CHECK_THROWS_AS( star_sat_oracle( big ), std::length_error );
    CHECK_THROWS_AS( star_sat_enumerate( big ), std::length_error );
  }

  TEST_CASE( "window oracle matches plain enumeration" )
  {
    std::mt19937_64 rng( 47 );
    for ( int round = 0; round < 200; ++round )
    {
      std::size_t const n = 1 + support::below( rng, 3 );
      int const w = static_cast<int>( support::below( rng, 14 / n - 2 ) );
      auto const phi = support::random_formula( rng, n, 1 + support::below( rng, 4 ), 3, OperatorSet::all() );
      if ( phi.variables().size() * static_cast<std::size_t>( w + 3 ) > 14 )
        continue;
      auto const got = window_sat_oracle( phi, w );
      auto const want = support::brute_window( phi, w );
      REQUIRE( ( got.verdict == OracleVerdict::sat ) == want.has_value() );
      if ( want )
        CHECK( *got.model == *want );
      else
        CHECK( got.verdict == OracleVerdict::no_model_within_window );
    }
  }

  TEST_CASE( "window oracle is monotone in the window" )
  {
    std::mt19937_64 rng( 53 );
    for ( int round = 0; round < 60; ++round )
    {
      auto const phi = support::random_formula( rng, 3, 4, 3, OperatorSet::all() );
      bool seen = false;
      for ( int w = 0; w <= 5; ++w )
      {
        bool const sat = window_sat_oracle( phi, w ).verdict == OracleVerdict::sat;
        CHECK( ( !seen || sat ) );
        seen = seen || sat;
      }
    }
  }

  TEST_CASE( "window oracle examples" )
  {
    auto const tri = threecol_to_fp_horn( Graph::complete( 3 ) );
    auto const r = window_sat_oracle( tri.formula, 5 );
    REQUIRE( r.verdict == OracleVerdict::sat );
    CHECK( models( *r.model, tri.formula ) );
    CHECK( window_sat_oracle( tri.formula, 1 ).verdict == OracleVerdict::no_model_within_window );
    CHECK_THROWS_AS( window_sat_oracle( tri.formula, -1 ), std::invalid_argument );
    CHECK_THROWS_AS( window_sat_oracle( tri.formula, 1000 ), std::length_error );

    SnfFormula never( OperatorSet{ M::always }, { "s" }, { { Literal::neg( "s", M::always ) }, { Literal::neg( "s" ) } } );
    for ( int w = 0; w <= 6; ++w )
      CHECK( window_sat_oracle( never, w ).verdict == OracleVerdict::no_model_within_window );

    /* the star fragment: window results agree with the exact oracle */
    std::mt19937_64 rng( 59 );
    for ( int round = 0; round < 80; ++round )
    {
      auto const phi = support::random_formula( rng, 3, 4, 3, OperatorSet{ M::always } );
      bool const exact = star_sat_oracle( phi ).verdict == OracleVerdict::sat;
      CHECK( ( window_sat_oracle( phi, 4 ).verdict == OracleVerdict::sat ) == exact );
    }
  }

  TEST_CASE( "removing valid clauses keeps the verdict" )
  {
    std::mt19937_64 rng( 61 );
    for ( int round = 0; round < 100; ++round )
    {
      auto const phi = support::random_formula( rng, 3, 4, 4, OperatorSet::all() );
      auto const a = window_sat_oracle( phi, 3 ).verdict;
      CHECK( window_sat_oracle( remove_tautologies( phi ), 3 ).verdict == a );
      CHECK( window_sat_oracle( remove_valid_clauses( phi ), 3 ).verdict == a );
    }
  }
}
