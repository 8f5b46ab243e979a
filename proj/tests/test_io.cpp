#include "support.hpp"

#include <ltlbd/generate.hpp>
#include <ltlbd/io.hpp>
#include <ltlbd/reductions.hpp>

#include <doctest.h>

#include <sstream>

using namespace ltlbd;
using M = Modality;

namespace
{

std::size_t error_line( std::string const& text )
{
  try
  {
    parse_snf_document_string( text );
  }
  catch ( ParseError const& e )
  {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_SUITE( "io" )
{
  TEST_CASE( "snf parsing" )
  {
    auto const phi = parse_snf_string( "# comment\noperators: F *\ninit: s\nclause: ~[*]x | [F]y | s\nclause: ~s | 0\n" );
    CHECK( phi.operators == OperatorSet{ M::future, M::always } );
    CHECK( phi.initial == std::vector<std::string>{ "s" } );
    REQUIRE( phi.clauses.size() == 2 );
    CHECK( phi.clauses[0] == Clause{ Literal::neg( "x", M::always ), Literal::pos( "y", M::future ), Literal::pos( "s" ) } );
    CHECK( phi.clauses[1] == Clause{ Literal::neg( "s" ) } );
    auto const empty_ops = parse_snf_string( "operators:\nclause: x\n" );
    CHECK( empty_ops.operators.empty() );
    auto const falsum = parse_snf_string( "operators: *\nclause:\n" );
    CHECK( falsum.is_false() );
  }

  TEST_CASE( "snf syntax errors" )
  {
    CHECK( error_line( "" ) == 1 );
    CHECK( error_line( "operators: *\nclause: x |\n" ) == 2 );
    CHECK( error_line( "operators: *\nclause: [G]x\n" ) == 2 );
    CHECK( error_line( "clause: x\n" ) == 1 );
    CHECK( error_line( "operators: *\noperators: *\n" ) == 2 );
    CHECK( error_line( "operators: *\nclause: x\nbogus\n" ) == 3 );
    CHECK( error_line( "operators: * Q\n" ) == 1 );
    try
    {
      parse_snf_string( "operators: *\nclause: x | 1y\n" );
      FAIL( "expected a parse error" );
    }
    catch ( ParseError const& e )
    {
      CHECK( e.line() == 2 );
      CHECK( e.column() == 13 );
    }
  }

  TEST_CASE( "nesting is reported as a violation" )
  {
    auto const doc = parse_snf_document_string( "operators: F *\nclause: [F][*]x\n" );
    CHECK( doc.violations.size() == 1 );
    CHECK_THROWS( parse_snf_string( "operators: F *\nclause: [F][*]x\n" ) );
  }

  TEST_CASE( "snf printing is canonical" )
  {
    SnfFormula phi( OperatorSet::all(), { "s" }, { { Literal::pos( "b" ), Literal::neg( "a", M::past ) } } );
    CHECK( snf_to_string( phi ) == "operators: F P *\ninit: s\nclause: ~[P]a | b\n" );
    CHECK( parse_snf_string( snf_to_string( phi ) ) == phi );
    CHECK( snf_to_string( SnfFormula::make_false( OperatorSet{} ) ) == "operators:\nclause:\n" );
  }

  TEST_CASE( "round trips of generated and reduced formulas" )
  {
    for ( std::uint64_t seed = 1; seed <= 40; ++seed )
    {
      GenOptions opt;
      opt.seed = seed;
      opt.ops = seed % 2 ? OperatorSet::all() : OperatorSet{ M::always };
      opt.target = seed % 3 ? TargetClass::horn : TargetClass::krom;
      auto const phi = generate_planted( opt ).formula;
      auto const text = snf_to_string( phi );
      CHECK( parse_snf_string( text ) == phi );
      CHECK( snf_to_string( parse_snf_string( text ) ) == text );
    }
    for ( int n = 1; n <= 4; ++n )
      for ( auto t : { ReductionTarget::star_krom, ReductionTarget::fp_horn } )
      {
        auto const phi = reduce( Graph::complete( n ), t ).formula;
        CHECK( parse_snf_string( snf_to_string( phi ) ) == phi );
      }
  }

  TEST_CASE( "model tables" )
  {
    auto const m = support::horn_triangle_table();
    auto const text = model_to_string( m );
    CHECK( parse_model_string( text ) == m );
    auto const small = parse_model_string( "vars: a b\nstart: 0\nleft: 0 1\nworld 0: 1 1\nworld 1: 0 0\nright: 1 0\n" );
    CHECK( small.lo() == 0 );
    CHECK( small.hi() == 1 );
    CHECK( small.value( 5, 0 ) );
    CHECK_THROWS_AS( parse_model_string( "vars: a\nstart: 0\nleft: 0\nworld 0: 1\nworld 2: 1\nright: 0\n" ),
                     ParseError );
    CHECK_THROWS_AS( parse_model_string( "vars: a\nstart: 0\nleft: 0 1\nworld 0: 1\nright: 0\n" ), ParseError );
    CHECK_THROWS_AS( parse_model_string( "vars: a\nstart: 0\nleft: 0\nright: 0\n" ), ParseError );
  }

  TEST_CASE( "dimacs graphs" )
  {
    auto const g = parse_dimacs_col_string( "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n" );
    CHECK( g.n == 3 );
    CHECK( g.edges.size() == 3 );
    std::ostringstream out;
    print_dimacs_col( out, g );
    CHECK( parse_dimacs_col_string( out.str() ).edges == g.edges );
    CHECK_THROWS_AS( parse_dimacs_col_string( "p edge 3 2\ne 1 2\n" ), ParseError );
    CHECK_THROWS_AS( parse_dimacs_col_string( "p edge 2 1\ne 1 3\n" ), ParseError );
    CHECK_THROWS_AS( parse_dimacs_col_string( "e 1 2\n" ), ParseError );
  }

  TEST_CASE( "variable lists" )
  {
    CHECK( split_variables( "" ).empty() );
    CHECK( split_variables( "b1,b2" ) == std::vector<std::string>{ "b1", "b2" } );
    CHECK( join_variables( { "b1", "b2" } ) == "b1,b2" );
  }

  TEST_CASE( "generator" )
  {
    GenOptions opt;
    opt.seed = 5;
    CHECK( snf_to_string( generate_planted( opt ).formula ) == snf_to_string( generate_planted( opt ).formula ) );
    opt.backdoor_size = 0;
    for ( auto target : { TargetClass::horn, TargetClass::krom } )
    {
      opt.target = target;
      CHECK( generate_planted( opt ).formula.in_class( target ) );
    }
    opt.backdoor_size = 7;
    CHECK_THROWS_AS( generate_planted( opt ), std::invalid_argument );
    opt.vars = 0;
    opt.backdoor_size = 0;
    CHECK_THROWS_AS( generate_planted( opt ), std::invalid_argument );
  }
}
