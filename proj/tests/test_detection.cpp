#include "support.hpp"

#include <ltlbd/generate.hpp>
#include <ltlbd/reductions.hpp>

#include <doctest.h>

using namespace ltlbd;
using M = Modality;

namespace
{

SnfFormula star( std::vector<Clause> cls )
{
  return SnfFormula( OperatorSet::all(), {}, std::move( cls ) );
}

ConflictGraph graph_of( std::size_t n, std::vector<std::pair<int, int>> const& edges )
{
  ConflictGraph g;
  g.vertices = support::names( n, 'u' );
  std::sort( g.vertices.begin(), g.vertices.end() );
  for ( auto [i, j] : edges )
    g.edges.emplace_back( std::minmax( "u" + std::to_string( i ), "u" + std::to_string( j ) ) );
  std::sort( g.edges.begin(), g.edges.end() );
  g.edges.erase( std::unique( g.edges.begin(), g.edges.end() ), g.edges.end() );
  return g;
}

} // namespace

TEST_SUITE( "detection" )
{
  TEST_CASE( "conflict graph" )
  {
    auto g = build_horn_conflict_graph( star( { { Literal::pos( "x" ), Literal::pos( "y" ), Literal::neg( "z" ) } } ) );
    CHECK( g.edges == std::vector<std::pair<std::string, std::string>>{ { "x", "y" } } );
    auto loop = build_horn_conflict_graph( star( { { Literal::pos( "x" ), Literal::pos( "x", M::future ) } } ) );
    CHECK( loop.has_self_loop( "x" ) );
    auto none = build_horn_conflict_graph( star( { { Literal::neg( "x" ), Literal::pos( "y" ) } } ) );
    CHECK( none.edges.empty() );
  }

  TEST_CASE( "vertex cover" )
  {
    auto tri = graph_of( 3, { { 1, 2 }, { 2, 3 }, { 1, 3 } } );
    auto two = vertex_cover( tri, 2 );
    REQUIRE( two );
    CHECK( two->size() == 2 );
    CHECK( is_vertex_cover( tri, *two ) );
    CHECK_FALSE( vertex_cover( tri, 1 ) );

    std::mt19937_64 rng( 5 );
    for ( int round = 0; round < 60; ++round )
    {
      std::size_t const n = 1 + support::below( rng, 10 );
      std::vector<std::pair<int, int>> edges;
      for ( std::size_t e = 0; e < n + 3; ++e )
      {
        int const i = 1 + static_cast<int>( support::below( rng, n ) );
        int const j = 1 + static_cast<int>( support::below( rng, n ) );
        edges.emplace_back( i, j );
      }
      auto g = graph_of( n, edges );
      auto const best = support::brute_min_cover( g );
      CHECK( vertex_cover( g, best ).has_value() );
      if ( best > 0 )
        CHECK_FALSE( vertex_cover( g, best - 1 ).has_value() );
    }
  }

  TEST_CASE( "hitting family" )
  {
    auto f = build_krom_hitting_family(
        star( { { Literal::neg( "x" ), Literal::pos( "y" ), Literal::pos( "z", M::future ) } } ) );
    CHECK( f.sets == std::vector<std::vector<std::string>>{ { "x", "y", "z" } } );
    CHECK( build_krom_hitting_family( star( { { Literal::neg( "x" ), Literal::pos( "y" ) } } ) ).sets.empty() );
    auto four = build_krom_hitting_family(
        star( { { Literal::pos( "a" ), Literal::pos( "b" ), Literal::pos( "c" ), Literal::pos( "d" ) } } ) );
    CHECK( four.sets.size() == 4 );
  }

  TEST_CASE( "3-hitting set" )
  {
    HittingFamily f{ { "a", "b", "c", "d", "e" }, { { "a", "b", "c" }, { "a", "d", "e" } } };
    CHECK( hitting_set_3( f, 1 ) == VariableSet{ "a" } );
    HittingFamily g{ { "a", "b" }, { { "a" }, { "b" } } };
    CHECK_FALSE( hitting_set_3( g, 1 ) );

    std::mt19937_64 rng( 9 );
    for ( int round = 0; round < 60; ++round )
    {
      HittingFamily h;
      std::size_t const n = 1 + support::below( rng, 10 );
      h.universe = support::names( n, 'u' );
      std::sort( h.universe.begin(), h.universe.end() );
      for ( std::size_t s = 0; s < 1 + support::below( rng, 8 ); ++s )
      {
        std::vector<std::string> set;
        for ( int k = 0; k < 3; ++k )
          set.push_back( h.universe[support::below( rng, n )] );
        std::sort( set.begin(), set.end() );
        set.erase( std::unique( set.begin(), set.end() ), set.end() );
        h.sets.push_back( set );
      }
      std::sort( h.sets.begin(), h.sets.end() );
      h.sets.erase( std::unique( h.sets.begin(), h.sets.end() ), h.sets.end() );
      auto const best = support::brute_min_hitting( h );
      CHECK( hitting_set_3( h, best ).has_value() );
      if ( best > 0 )
        CHECK_FALSE( hitting_set_3( h, best - 1 ).has_value() );
    }
  }

  TEST_CASE( "detection on examples" )
  {
    auto const horn_formula = star( { { Literal::neg( "x" ), Literal::pos( "y" ) } } );
    CHECK( detect_horn_backdoor( horn_formula, 0 ) == VariableSet{} );
    CHECK_FALSE( detect_horn_backdoor( star( { { Literal::pos( "x" ), Literal::pos( "y" ) } } ), 0 ) );
    CHECK( detect_krom_backdoor( horn_formula, 0 ) == VariableSet{} );
    CHECK_FALSE( detect_krom_backdoor(
        star( { { Literal::pos( "x" ), Literal::pos( "y" ), Literal::pos( "z" ) } } ), 0 ) );
    /* a valid clause never needs a backdoor */
    auto const taut = star( { { Literal::neg( "x", M::always ), Literal::pos( "x", M::future ), Literal::pos( "y" ) } } );
    CHECK( detect_horn_backdoor( taut, 0 ) == VariableSet{} );
  }

  TEST_CASE( "reduction backdoors" )
  {
    for ( int n = 1; n <= 5; ++n )
    {
      auto const g = Graph::complete( n );
      auto const k = threecol_to_star_krom( g );
      CHECK( verify_backdoor( k.formula, k.backdoor, TargetClass::krom ) );
      auto const dk = detect_krom_backdoor( k.formula, 2 );
      REQUIRE( dk );
      CHECK( verify_backdoor( k.formula, *dk, TargetClass::krom ) );
      auto const h = threecol_to_fp_horn( g );
      CHECK( verify_backdoor( h.formula, h.backdoor, TargetClass::horn ) );
      auto const dh = detect_horn_backdoor( h.formula, 4 );
      REQUIRE( dh );
      CHECK( dh->size() <= 4 );
      CHECK( verify_backdoor( h.formula, *dh, TargetClass::horn ) );
    }
  }

  TEST_CASE( "verification" )
  {
    auto const phi = star( { { Literal::pos( "x" ), Literal::pos( "y" ) } } );
    CHECK_FALSE( verify_backdoor( phi, {}, TargetClass::horn ) );
    CHECK( verify_backdoor( phi, { "x" }, TargetClass::horn ) );
    CHECK_THROWS_AS( verify_backdoor( phi, { "q" }, TargetClass::horn ), std::invalid_argument );
    CHECK( minimal_backdoor_bruteforce( phi, TargetClass::horn ) == VariableSet{ "x" } );
    CHECK( minimal_backdoor_bruteforce( star( { { Literal::neg( "x" ) } } ), TargetClass::horn ).empty() );
  }

  TEST_CASE( "planted backdoors verify" )
  {
    for ( std::uint64_t seed = 1; seed <= 80; ++seed )
    {
      GenOptions opt;
      opt.seed = seed;
      opt.vars = 3 + seed % 6;
      opt.clauses = 2 + seed % 9;
      opt.backdoor_size = seed % 4;
      opt.target = seed % 2 ? TargetClass::horn : TargetClass::krom;
      opt.ops = seed % 3 ? OperatorSet::all() : OperatorSet{ M::always };
      auto const inst = generate_planted( opt );
      CHECK( verify_backdoor( inst.formula, inst.backdoor, opt.target ) );
      auto const found = detect_backdoor( inst.formula, opt.target, inst.backdoor.size() );
      REQUIRE( found );
      CHECK( verify_backdoor( remove_valid_clauses( inst.formula ), *found, opt.target ) );
    }
  }

  TEST_CASE( "detection is optimal on random formulas" )
  {
    std::mt19937_64 rng( 21 );
    for ( int round = 0; round < 80; ++round )
    {
      auto const phi = remove_valid_clauses(
          support::random_formula( rng, 2 + support::below( rng, 5 ), 1 + support::below( rng, 5 ), 4,
                                   OperatorSet::all() ) );
      for ( auto target : { TargetClass::horn, TargetClass::krom } )
      {
        auto const best = minimal_backdoor_bruteforce( phi, target ).size();
        CHECK( detect_backdoor( phi, target, best ).has_value() );
        if ( best > 0 )
          CHECK_FALSE( detect_backdoor( phi, target, best - 1 ).has_value() );
      }
    }
  }
}
