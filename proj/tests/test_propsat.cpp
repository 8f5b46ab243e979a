#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace ltlbd;

namespace
{

PropLiteral lit( std::string const& v, bool positive = true )
{
  return { PropAtom::plain( v ), positive };
}

PropCnf cnf( std::vector<PropClause> cls )
{
  PropCnf f;
  for ( auto& c : cls )
    f.add( c );
  return f;
}

} // namespace

TEST_SUITE( "propsat" )
{
  TEST_CASE( "atoms" )
  {
    CHECK( to_string( PropAtom::plain( "x" ) ) == "x" );
    CHECK( to_string( PropAtom::global( "x" ) ) == "*x" );
    CHECK( to_string( PropAtom::copy( "x", 2, "01" ) ) == "x^2_01" );
    CHECK_THROWS( PropAtom::copy( "x", 0, "-" ) );
    CHECK( PropAtom::copy( "x", 1, "0" ) != PropAtom::copy( "x", 1, "1" ) );
  }

  TEST_CASE( "horn examples" )
  {
    CHECK_FALSE( horn_sat( cnf( { { lit( "x" ) }, { lit( "x", false ), lit( "y" ) }, { lit( "y", false ) } } ) ) );
    auto m = horn_sat( PropCnf{} );
    REQUIRE( m );
    CHECK( m->empty() );
    CHECK_THROWS_AS( horn_sat( cnf( { { lit( "x" ), lit( "y" ) } } ) ), std::invalid_argument );
    auto least = horn_sat( cnf( { { lit( "x" ) }, { lit( "x", false ), lit( "y" ) }, { lit( "z", false ) } } ) );
    REQUIRE( least );
    CHECK( ( *least )[PropAtom::plain( "x" )] );
    CHECK( ( *least )[PropAtom::plain( "y" )] );
    CHECK_FALSE( ( *least )[PropAtom::plain( "z" )] );
  }

  TEST_CASE( "2-sat examples" )
  {
    CHECK_FALSE( two_sat( cnf( { { lit( "x" ), lit( "y" ) },
                                 { lit( "x", false ), lit( "y" ) },
                                 { lit( "x" ), lit( "y", false ) },
                                 { lit( "x", false ), lit( "y", false ) } } ) ) );
    auto m = two_sat( cnf( { { lit( "x" ), lit( "y" ) } } ) );
    REQUIRE( m );
    CHECK( satisfies( *m, cnf( { { lit( "x" ), lit( "y" ) } } ) ) );
    CHECK_THROWS_AS( two_sat( cnf( { { lit( "x" ), lit( "y" ), lit( "z" ) } } ) ), std::invalid_argument );
  }

  TEST_CASE( "brute force examples" )
  {
    CHECK( brute_sat( PropCnf{} ) );
    CHECK_FALSE( brute_sat( cnf( { { lit( "x" ) }, { lit( "x", false ) } } ) ) );
    PropCnf big;
    for ( int i = 0; i < 25; ++i )
      big.add( { lit( "a" + std::to_string( i ) ) } );
    CHECK_THROWS_AS( brute_sat( big ), std::length_error );
  }

  TEST_CASE( "empty clause" )
  {
    PropCnf f;
    f.add( {} );
    CHECK_FALSE( horn_sat( f ) );
    CHECK_FALSE( two_sat( f ) );
    CHECK_FALSE( brute_sat( f ) );
  }

  TEST_CASE( "random agreement and least models" )
  {
    std::mt19937_64 rng( 3 );
    for ( int round = 0; round < 400; ++round )
    {
      std::size_t const atoms = 1 + support::below( rng, 10 );
      std::size_t const clauses = support::below( rng, 14 );
      PropCnf horn, krom;
      for ( std::size_t c = 0; c < clauses; ++c )
      {
        PropClause h, k;
        std::size_t const len = 1 + support::below( rng, 4 );
        bool pos_used = false;
        for ( std::size_t l = 0; l < len; ++l )
        {
          auto const v = "a" + std::to_string( support::below( rng, atoms ) );
          bool positive = support::below( rng, 2 );
          if ( positive && pos_used )
            positive = false;
          pos_used = pos_used || positive;
          h.push_back( lit( v, positive ) );
          if ( l < 2 )
            k.push_back( lit( v, support::below( rng, 2 ) ) );
        }
        horn.add( h );
        krom.add( k );
      }
      auto const hb = brute_sat( horn );
      auto const hm = horn_sat( horn );
      REQUIRE( hb.has_value() == hm.has_value() );
      if ( hm )
      {
        CHECK( satisfies( *hm, horn ) );
        for ( auto const& [a, v] : *hm )
          if ( v )
          {
            auto flipped = *hm;
            flipped[a] = false;
            CHECK_FALSE( satisfies( flipped, horn ) );
          }
      }
      auto const kb = brute_sat( krom );
      auto const km = two_sat( krom );
      REQUIRE( kb.has_value() == km.has_value() );
      if ( km )
        CHECK( satisfies( *km, krom ) );
    }
  }

  TEST_CASE( "dimacs export" )
  {
    std::ostringstream c, n;
    write_dimacs( c, n, cnf( { { lit( "x" ), lit( "y", false ) }, { { PropAtom::global( "y" ), true } } } ) );
    CHECK( c.str().rfind( "p cnf 3 2\n", 0 ) == 0 );
    CHECK( n.str().find( "*y" ) != std::string::npos );
  }
}
