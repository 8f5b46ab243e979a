#include <ltlbd/propsat.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ltlbd
{

PropAtom PropAtom::copy( std::string v, int i, std::string label )
{
  if ( i < 1 )
    throw std::invalid_argument( "copy index must be at least 1" );
  return { AtomKind::copy, std::move( v ), i, std::move( label ) };
}

std::string to_string( PropAtom const& a )
{
  switch ( a.kind )
  {
  case AtomKind::plain:
    return a.var;
  case AtomKind::global:
    return "*" + a.var;
  case AtomKind::copy:
    return a.var + "^" + std::to_string( a.index ) + "_" + a.label;
  }
  return "?";
}

void PropCnf::add( PropClause c )
{
  std::sort( c.begin(), c.end() );
  c.erase( std::unique( c.begin(), c.end() ), c.end() );
  clauses.push_back( std::move( c ) );
}

void PropCnf::append( PropCnf const& other )
{
  clauses.insert( clauses.end(), other.clauses.begin(), other.clauses.end() );
}

bool PropCnf::is_horn() const
{
  return std::all_of( clauses.begin(), clauses.end(), []( PropClause const& c ) {
    return std::count_if( c.begin(), c.end(), []( auto const& l ) { return l.positive; } ) <= 1;
  } );
}

bool PropCnf::is_krom() const
{
  return std::all_of( clauses.begin(), clauses.end(), []( PropClause const& c ) { return c.size() <= 2; } );
}

std::size_t PropCnf::literal_count() const
{
  std::size_t n = 0;
  for ( auto const& c : clauses )
    n += c.size();
  return n;
}

std::vector<PropAtom> PropCnf::atoms() const
{
  std::vector<PropAtom> out;
  for ( auto const& c : clauses )
    for ( auto const& l : c )
      out.push_back( l.atom );
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return out;
}

bool satisfies( PropModel const& model, PropCnf const& f )
{
  auto value = [&]( PropAtom const& a ) {
    auto it = model.find( a );
    return it != model.end() && it->second;
  };
  return std::all_of( f.clauses.begin(), f.clauses.end(), [&]( PropClause const& c ) {
    return std::any_of( c.begin(), c.end(), [&]( auto const& l ) { return value( l.atom ) == l.positive; } );
  } );
}

namespace
{

/* Clauses over dense atom indices; literal code 2*i for positive, 2*i+1 for negative. */
struct Indexed
{
  std::vector<PropAtom> atoms;
  std::vector<std::vector<std::size_t>> clauses;

  explicit Indexed( PropCnf const& f ) : atoms( f.atoms() )
  {
    clauses.reserve( f.clauses.size() );
    for ( auto const& c : f.clauses )
    {
      auto& out = clauses.emplace_back();
      for ( auto const& l : c )
      {
        auto const idx = static_cast<std::size_t>( std::lower_bound( atoms.begin(), atoms.end(), l.atom ) - atoms.begin() );
        out.push_back( 2 * idx + ( l.positive ? 0 : 1 ) );
      }
    }
  }

  PropModel model( std::vector<bool> const& values ) const
  {
    PropModel m;
    for ( std::size_t i = 0; i < atoms.size(); ++i )
      m.emplace( atoms[i], values[i] );
    return m;
  }
};

} // namespace

std::optional<PropModel> horn_sat( PropCnf const& f, std::size_t* literal_visits )
{
  if ( !f.is_horn() )
    throw std::invalid_argument( "horn_sat requires a Horn formula" );

  Indexed const ix( f );
  std::size_t const n = ix.atoms.size();
  constexpr std::size_t no_head = static_cast<std::size_t>( -1 );

  std::vector<std::size_t> pending( ix.clauses.size(), 0 );
  std::vector<std::size_t> head( ix.clauses.size(), no_head );
  std::vector<std::vector<std::size_t>> watchers( n );
  std::size_t visits = 0;

  for ( std::size_t ci = 0; ci < ix.clauses.size(); ++ci )
    for ( auto code : ix.clauses[ci] )
    {
      ++visits;
      if ( code % 2 == 0 )
        head[ci] = code / 2;
      else
      {
        ++pending[ci];
        watchers[code / 2].push_back( ci );
      }
    }

  std::vector<bool> value( n, false );
  std::vector<std::size_t> queue;
  auto fire = [&]( std::size_t ci ) {
    if ( head[ci] == no_head )
      return false;
    if ( !value[head[ci]] )
    {
      value[head[ci]] = true;
      queue.push_back( head[ci] );
    }
    return true;
  };

  for ( std::size_t ci = 0; ci < ix.clauses.size(); ++ci )
    if ( pending[ci] == 0 && !fire( ci ) )
    {
      if ( literal_visits )
        *literal_visits = visits;
      return std::nullopt;
    }

  for ( std::size_t qi = 0; qi < queue.size(); ++qi )
    for ( auto ci : watchers[queue[qi]] )
    {
      ++visits;
      if ( --pending[ci] == 0 && !fire( ci ) )
      {
        if ( literal_visits )
          *literal_visits = visits;
        return std::nullopt;
      }
    }

  if ( literal_visits )
    *literal_visits = visits;
  return ix.model( value );
}

std::optional<PropModel> two_sat( PropCnf const& f )
{
  if ( !f.is_krom() )
    throw std::invalid_argument( "two_sat requires a Krom formula" );

  Indexed const ix( f );
  std::size_t const nodes = 2 * ix.atoms.size();
  std::vector<std::vector<std::size_t>> succ( nodes );
  for ( auto const& c : ix.clauses )
  {
    if ( c.empty() )
      return std::nullopt;
    auto const a = c.front();
    auto const b = c.size() == 2 ? c.back() : c.front();
    succ[a ^ 1u].push_back( b );
    succ[b ^ 1u].push_back( a );
  }

  /* iterative Tarjan; components are numbered in reverse topological order */
  constexpr std::size_t unvisited = static_cast<std::size_t>( -1 );
  std::vector<std::size_t> index( nodes, unvisited ), low( nodes, 0 ), comp( nodes, unvisited );
  std::vector<bool> on_stack( nodes, false );
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call; /* node, next successor */
  std::size_t counter = 0, comps = 0;

  for ( std::size_t root = 0; root < nodes; ++root )
  {
    if ( index[root] != unvisited )
      continue;
    call.emplace_back( root, 0 );
    index[root] = low[root] = counter++;
    stack.push_back( root );
    on_stack[root] = true;
    while ( !call.empty() )
    {
      auto& [v, next] = call.back();
      if ( next < succ[v].size() )
      {
        auto const w = succ[v][next++];
        if ( index[w] == unvisited )
        {
          index[w] = low[w] = counter++;
          stack.push_back( w );
          on_stack[w] = true;
          call.emplace_back( w, 0 );
        }
        else if ( on_stack[w] )
          low[v] = std::min( low[v], index[w] );
        continue;
      }
      if ( low[v] == index[v] )
      {
        std::size_t w;
        do
        {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while ( w != v );
        ++comps;
      }
      auto const finished = v;
      call.pop_back();
      if ( !call.empty() )
        low[call.back().first] = std::min( low[call.back().first], low[finished] );
    }
  }

  std::vector<bool> value( ix.atoms.size() );
  for ( std::size_t i = 0; i < ix.atoms.size(); ++i )
  {
    if ( comp[2 * i] == comp[2 * i + 1] )
      return std::nullopt;
    value[i] = comp[2 * i] < comp[2 * i + 1];
  }
  return ix.model( value );
}

std::optional<PropModel> brute_sat( PropCnf const& f )
{
  Indexed const ix( f );
  std::size_t const n = ix.atoms.size();
  if ( n > brute_sat_atom_budget )
    throw std::length_error( "brute_sat: atom budget exceeded" );

  std::vector<bool> value( n );
  for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << n ); ++code )
  {
    for ( std::size_t i = 0; i < n; ++i )
      value[i] = ( code >> ( n - 1 - i ) ) & 1u;
    bool const ok = std::all_of( ix.clauses.begin(), ix.clauses.end(), [&]( auto const& c ) {
      return std::any_of( c.begin(), c.end(), [&]( std::size_t code ) { return value[code / 2] == ( code % 2 == 0 ); } );
    } );
    if ( ok )
      return ix.model( value );
  }
  return std::nullopt;
}

void write_dimacs( std::ostream& cnf, std::ostream& names, PropCnf const& f )
{
  Indexed const ix( f );
  for ( std::size_t i = 0; i < ix.atoms.size(); ++i )
    names << ( i + 1 ) << ' ' << to_string( ix.atoms[i] ) << '\n';
  cnf << "p cnf " << ix.atoms.size() << ' ' << ix.clauses.size() << '\n';
  for ( auto const& c : ix.clauses )
  {
    for ( auto code : c )
      cnf << ( code % 2 == 0 ? "" : "-" ) << ( code / 2 + 1 ) << ' ';
    cnf << "0\n";
  }
}

} // namespace ltlbd
