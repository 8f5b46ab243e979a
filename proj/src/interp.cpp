#include <ltlbd/interp.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ltlbd
{

FiniteWindowInterpretation::FiniteWindowInterpretation( std::vector<std::string> vars, WorldAssignment left,
                                                        std::vector<WorldAssignment> window, int lo,
                                                        WorldAssignment right, int start )
    : vars_( std::move( vars ) ),
      left_( std::move( left ) ),
      window_( std::move( window ) ),
      lo_( lo ),
      right_( std::move( right ) ),
      start_( start )
{
  if ( window_.empty() )
    throw std::invalid_argument( "interpretation window must contain at least one world" );
  if ( start_ < lo_ || start_ > hi() )
    throw std::invalid_argument( "start world must lie inside the explicit window" );
  std::set<std::string> seen( vars_.begin(), vars_.end() );
  if ( seen.size() != vars_.size() )
    throw std::invalid_argument( "duplicate variable in interpretation" );
  auto check = [&]( WorldAssignment const& row ) {
    if ( row.size() != vars_.size() )
      throw std::invalid_argument( "interpretation row width does not match the variable count" );
  };
  check( left_ );
  check( right_ );
  for ( auto const& row : window_ )
    check( row );
}

std::optional<std::size_t> FiniteWindowInterpretation::index_of( std::string_view var ) const
{
  auto it = std::find( vars_.begin(), vars_.end(), var );
  if ( it == vars_.end() )
    return std::nullopt;
  return static_cast<std::size_t>( it - vars_.begin() );
}

WorldAssignment const& FiniteWindowInterpretation::row( int world ) const
{
  if ( world < lo_ )
    return left_;
  if ( world > hi() )
    return right_;
  return window_[static_cast<std::size_t>( world - lo_ )];
}

bool FiniteWindowInterpretation::value( int world, std::size_t var ) const
{
  return row( world )[var];
}

FiniteWindowInterpretation FiniteWindowInterpretation::shifted( int delta ) const
{
  return FiniteWindowInterpretation( vars_, left_, window_, lo_ + delta, right_, start_ + delta );
}

namespace
{

void check_range( FiniteWindowInterpretation const& m, int world )
{
  if ( world < m.lo() - 2 || world > m.hi() + 2 )
    throw std::out_of_range( "world " + std::to_string( world ) + " is outside the sentinel range" );
}

bool holds_at_index( FiniteWindowInterpretation const& m, int z, std::size_t p, Modality mod )
{
  auto all_window = [&]( int from, int to ) {
    for ( int k = std::max( from, m.lo() ); k <= std::min( to, m.hi() ); ++k )
      if ( !m.value( k, p ) )
        return false;
    return true;
  };
  switch ( mod )
  {
  case Modality::none:
    return m.value( z, p );
  case Modality::future:
    if ( z + 1 < m.lo() && !m.left()[p] )
      return false;
    return all_window( z + 1, m.hi() ) && m.right()[p];
  case Modality::past:
    if ( z - 1 > m.hi() && !m.right()[p] )
      return false;
    return m.left()[p] && all_window( m.lo(), z - 1 );
  case Modality::always:
    return m.left()[p] && m.right()[p] && all_window( m.lo(), m.hi() );
  }
  return false;
}

std::size_t require_index( FiniteWindowInterpretation const& m, std::string const& var )
{
  auto idx = m.index_of( var );
  if ( !idx )
    throw std::invalid_argument( "interpretation does not define variable '" + var + "'" );
  return *idx;
}

} // namespace

bool holds_literal( FiniteWindowInterpretation const& m, int world, Literal const& lit )
{
  check_range( m, world );
  return holds_at_index( m, world, require_index( m, lit.var ), lit.modality ) == lit.positive;
}

bool holds_clause( FiniteWindowInterpretation const& m, int world, Clause const& c )
{
  return std::any_of( c.literals().begin(), c.literals().end(),
                      [&]( Literal const& lit ) { return holds_literal( m, world, lit ); } );
}

bool models( FiniteWindowInterpretation const& m, SnfFormula const& phi )
{
  for ( auto const& f : phi.initial )
    if ( !m.value( m.start(), require_index( m, f ) ) )
      return false;

  struct Compiled
  {
    std::size_t var;
    Modality mod;
    bool positive;
  };
  std::vector<std::vector<Compiled>> compiled;
  compiled.reserve( phi.clauses.size() );
  for ( auto const& c : phi.clauses )
  {
    auto& out = compiled.emplace_back();
    for ( auto const& lit : c.literals() )
      out.push_back( { require_index( m, lit.var ), lit.modality, lit.positive } );
  }

  for ( int z = m.lo() - 2; z <= m.hi() + 2; ++z )
    for ( auto const& c : compiled )
    {
      bool sat = false;
      for ( auto const& l : c )
        if ( holds_at_index( m, z, l.var, l.mod ) == l.positive )
        {
          sat = true;
          break;
        }
      if ( !sat )
        return false;
    }
  return true;
}

WorldAssignment assign( FiniteWindowInterpretation const& m, int z )
{
  check_range( m, z );
  return m.row( z );
}

std::vector<int> worlds( FiniteWindowInterpretation const& m, std::vector<std::pair<std::string, bool>> const& theta )
{
  std::vector<std::pair<std::size_t, bool>> idx;
  for ( auto const& [var, val] : theta )
    idx.emplace_back( require_index( m, var ), val );

  std::vector<int> out;
  for ( int z = m.lo() - 1; z <= m.hi() + 1; ++z )
  {
    auto const& row = m.row( z );
    if ( std::all_of( idx.begin(), idx.end(), [&]( auto const& p ) { return row[p.first] == p.second; } ) )
      out.push_back( z );
  }
  return out;
}

AssignmentSet project( AssignmentSet const& a, std::vector<std::string> const& v )
{
  std::vector<std::size_t> keep;
  AssignmentSet out;
  for ( std::size_t i = 0; i < a.vars.size(); ++i )
    if ( std::find( v.begin(), v.end(), a.vars[i] ) != v.end() )
    {
      keep.push_back( i );
      out.vars.push_back( a.vars[i] );
    }

  auto restrict = [&]( WorldAssignment const& row ) {
    WorldAssignment r;
    for ( auto i : keep )
      r.push_back( row[i] );
    return r;
  };

  if ( a.members.empty() )
    throw std::invalid_argument( "assignment set is empty" );
  auto const init = restrict( a.initial_member() );
  std::set<WorldAssignment> rest;
  for ( auto const& row : a.members )
    rest.insert( restrict( row ) );
  rest.erase( init );
  out.members.push_back( init );
  out.members.insert( out.members.end(), rest.begin(), rest.end() );
  out.initial = 0;
  return out;
}

FiniteWindowInterpretation from_assignment_set( AssignmentSet const& a )
{
  if ( a.members.empty() || a.initial >= a.members.size() )
    throw std::invalid_argument( "assignment set needs a designated member" );
  auto const& init = a.initial_member();
  std::set<WorldAssignment> rest( a.members.begin(), a.members.end() );
  rest.erase( init );

  std::vector<WorldAssignment> window{ init };
  window.insert( window.end(), rest.begin(), rest.end() );
  auto right = window.back();
  return FiniteWindowInterpretation( a.vars, init, std::move( window ), 0, std::move( right ), 0 );
}

bool assignment_set_conditions_hold( SnfFormula const& phi, AssignmentSet const& a )
{
  if ( phi.operators.contains( Modality::past ) || phi.operators.contains( Modality::future ) )
    throw std::invalid_argument( "assignment-set characterisation applies to always-only formulas" );
  if ( a.members.empty() || a.initial >= a.members.size() )
    return false;

  std::map<std::string, std::size_t> index;
  for ( std::size_t i = 0; i < a.vars.size(); ++i )
    index[a.vars[i]] = i;
  auto at = [&]( std::string const& v ) {
    auto it = index.find( v );
    if ( it == index.end() )
      throw std::invalid_argument( "assignment set does not define variable '" + v + "'" );
    return it->second;
  };

  std::vector<bool> global( a.vars.size(), true );
  for ( auto const& row : a.members )
    for ( std::size_t i = 0; i < row.size(); ++i )
      if ( !row[i] )
        global[i] = false;

  for ( auto const& f : phi.initial )
    if ( !a.initial_member()[at( f )] )
      return false;

  for ( auto const& row : a.members )
    for ( auto const& c : phi.clauses )
    {
      bool sat = false;
      for ( auto const& lit : c.literals() )
      {
        bool const v = lit.modality == Modality::always ? global[at( lit.var )] : row[at( lit.var )];
        if ( v == lit.positive )
        {
          sat = true;
          break;
        }
      }
      if ( !sat )
        return false;
    }
  return true;
}

} // namespace ltlbd
