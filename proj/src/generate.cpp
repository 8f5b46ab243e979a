#include <ltlbd/generate.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ltlbd
{

std::uint64_t draw_below( std::mt19937_64& rng, std::uint64_t n )
{
  if ( n == 0 )
    throw std::invalid_argument( "draw_below: empty range" );
  return rng() % n;
}

PlantedInstance generate_planted( GenOptions const& opt )
{
  if ( opt.vars == 0 )
    throw std::invalid_argument( "generator needs at least one variable" );
  if ( opt.backdoor_size > opt.vars )
    throw std::invalid_argument( "backdoor larger than the variable set" );
  if ( opt.max_literals == 0 )
    throw std::invalid_argument( "clauses need at least one literal" );

  std::mt19937_64 rng( opt.seed );
  std::vector<std::string> vars;
  for ( std::size_t i = 1; i <= opt.vars; ++i )
    vars.push_back( "x" + std::to_string( i ) );

  /* partial Fisher-Yates for the planted set */
  std::vector<std::size_t> order( opt.vars );
  for ( std::size_t i = 0; i < order.size(); ++i )
    order[i] = i;
  for ( std::size_t i = 0; i < opt.backdoor_size; ++i )
    std::swap( order[i], order[i + draw_below( rng, order.size() - i )] );
  std::vector<bool> in_x( opt.vars, false );
  VariableSet backdoor;
  for ( std::size_t i = 0; i < opt.backdoor_size; ++i )
  {
    in_x[order[i]] = true;
    backdoor.push_back( vars[order[i]] );
  }
  std::sort( backdoor.begin(), backdoor.end() );

  std::vector<Modality> modalities{ Modality::none };
  for ( auto m : opt.ops.members() )
    modalities.push_back( m );

  std::vector<Clause> clauses;
  std::set<std::string> used;
  for ( std::size_t c = 0; c < opt.clauses; ++c )
  {
    std::size_t const len = 1 + draw_below( rng, opt.max_literals );
    std::vector<Literal> lits;
    std::size_t outside = 0, outside_pos = 0;
    for ( std::size_t l = 0; l < len; ++l )
    {
      std::size_t v = draw_below( rng, opt.vars );
      auto const m = modalities[draw_below( rng, modalities.size() )];
      bool positive = draw_below( rng, 2 ) == 1;
      if ( !in_x[v] )
      {
        if ( opt.target == TargetClass::krom && outside == 2 )
        {
          if ( opt.backdoor_size == 0 )
            break;
          v = order[draw_below( rng, opt.backdoor_size )];
        }
        else if ( opt.target == TargetClass::horn && positive && outside_pos == 1 )
          positive = false;
      }
      if ( !in_x[v] )
      {
        ++outside;
        outside_pos += positive ? 1 : 0;
      }
      used.insert( vars[v] );
      lits.push_back( Literal{ vars[v], m, positive } );
    }
    clauses.emplace_back( std::move( lits ) );
  }

  std::vector<std::string> facts;
  for ( auto const& v : used )
    if ( draw_below( rng, 100 ) < opt.fact_percent )
      facts.push_back( v );

  /* the planted set must only name variables of the formula */
  VariableSet x;
  for ( auto const& v : backdoor )
    if ( used.contains( v ) )
      x.push_back( v );
  return { SnfFormula( opt.ops, std::move( facts ), std::move( clauses ) ), std::move( x ) };
}

} // namespace ltlbd
