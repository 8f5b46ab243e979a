#include <ltlbd/reductions.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ltlbd
{

Graph Graph::make( int n, std::vector<std::pair<int, int>> edges )
{
  if ( n < 0 )
    throw std::invalid_argument( "graph: negative vertex count" );
  Graph g;
  g.n = n;
  std::set<std::pair<int, int>> seen;
  for ( auto [i, j] : edges )
  {
    if ( i < 1 || j < 1 || i > n || j > n )
      throw std::invalid_argument( "graph: edge endpoint out of range" );
    if ( i == j )
      throw std::invalid_argument( "graph: self-loop on vertex " + std::to_string( i ) );
    if ( !seen.insert( std::minmax( i, j ) ).second )
      throw std::invalid_argument( "graph: duplicate edge " + std::to_string( i ) + "-" + std::to_string( j ) );
  }
  g.edges.assign( seen.begin(), seen.end() );
  return g;
}

Graph Graph::complete( int n )
{
  std::vector<std::pair<int, int>> e;
  for ( int i = 1; i <= n; ++i )
    for ( int j = i + 1; j <= n; ++j )
      e.emplace_back( i, j );
  return make( n, std::move( e ) );
}

bool is_proper( Graph const& g, Colouring const& f )
{
  if ( f.size() != static_cast<std::size_t>( g.n ) )
    return false;
  if ( std::any_of( f.begin(), f.end(), []( int c ) { return c < 1 || c > 3; } ) )
    return false;
  return std::all_of( g.edges.begin(), g.edges.end(), [&]( auto const& e ) {
    return f[static_cast<std::size_t>( e.first - 1 )] != f[static_cast<std::size_t>( e.second - 1 )];
  } );
}

namespace
{

bool extend( Graph const& g, std::vector<std::vector<int>> const& earlier, Colouring& f, std::size_t i )
{
  if ( i == f.size() )
    return true;
  for ( int c = 1; c <= 3; ++c )
  {
    bool ok = std::none_of( earlier[i].begin(), earlier[i].end(),
                            [&]( int u ) { return f[static_cast<std::size_t>( u )] == c; } );
    if ( !ok )
      continue;
    f[i] = c;
    if ( extend( g, earlier, f, i + 1 ) )
      return true;
  }
  f[i] = 0;
  return false;
}

} // namespace

std::optional<Colouring> brute_3col( Graph const& g )
{
  if ( g.n > brute_3col_vertex_budget )
    throw std::length_error( "brute_3col: vertex budget exceeded" );
  /* neighbours with a smaller index, so the search prunes in order */
  std::vector<std::vector<int>> earlier( static_cast<std::size_t>( g.n ) );
  for ( auto [i, j] : g.edges )
    earlier[static_cast<std::size_t>( j - 1 )].push_back( i - 1 );
  Colouring f( static_cast<std::size_t>( g.n ), 0 );
  if ( !extend( g, earlier, f, 0 ) )
    return std::nullopt;
  return f;
}

std::string to_string( ReductionTarget t )
{
  return t == ReductionTarget::star_krom ? "star-krom" : "fp-horn";
}

namespace names
{

std::string vertex( int i )
{
  return "v" + std::to_string( i );
}

std::string edge( int i, int j, char kind )
{
  std::string const base = "e" + std::to_string( i ) + "_" + std::to_string( j ) + "_";
  switch ( kind )
  {
  case 'a':
    return base + "b1b2";
  case 'b':
    return base + "nb1b2";
  case 'c':
    return base + "b1nb2";
  }
  throw std::invalid_argument( "unknown edge variable kind" );
}

std::string colour_copy( int i, int c )
{
  return "v" + std::to_string( i ) + "_" + std::to_string( c );
}

std::string position( int i )
{
  return "p" + std::to_string( i );
}

} // namespace names

namespace
{

using M = Modality;
Literal pos( std::string v, M m = M::none )
{
  return Literal::pos( std::move( v ), m );
}
Literal neg( std::string v, M m = M::none )
{
  return Literal::neg( std::move( v ), m );
}

} // namespace

Reduction threecol_to_star_krom( Graph const& g )
{
  if ( g.n < 1 )
    throw std::invalid_argument( "reduction needs at least one vertex" );
  std::vector<Clause> cls;
  for ( int i = 1; i <= g.n; ++i )
    cls.push_back( { neg( names::vertex( i ), M::always ) } );
  for ( auto [i, j] : g.edges )
  {
    auto const vi = names::vertex( i ), vj = names::vertex( j );
    auto const a = names::edge( i, j, 'a' ), b = names::edge( i, j, 'b' ), c = names::edge( i, j, 'c' );
    cls.push_back( { pos( vi ), pos( a, M::always ), pos( "b1" ), pos( "b2" ) } );
    cls.push_back( { pos( vi ), pos( b, M::always ), neg( "b1" ), pos( "b2" ) } );
    cls.push_back( { pos( vi ), pos( c, M::always ), pos( "b1" ), neg( "b2" ) } );
    cls.push_back( { pos( vj ), neg( a, M::always ), pos( "b1" ), pos( "b2" ) } );
    cls.push_back( { pos( vj ), neg( b, M::always ), neg( "b1" ), pos( "b2" ) } );
    cls.push_back( { pos( vj ), neg( c, M::always ), pos( "b1" ), neg( "b2" ) } );
  }
  cls.push_back( { neg( "b1" ), neg( "b2" ) } );
  return { SnfFormula( OperatorSet{ M::always }, {}, std::move( cls ) ), { "b1", "b2" } };
}

Reduction threecol_to_fp_horn( Graph const& g )
{
  if ( g.n < 1 )
    throw std::invalid_argument( "reduction needs at least one vertex" );
  int const n = g.n;
  auto p = []( int i ) { return names::position( i ); };
  std::vector<Clause> cls;

  /* exactly one colour bit per world */
  cls.push_back( { pos( "c1" ), pos( "c2" ), pos( "c3" ) } );
  cls.push_back( { neg( "c1" ), neg( "c2" ), neg( "c3" ) } );
  cls.push_back( { pos( "c1" ), neg( "c2" ), neg( "c3" ) } );
  cls.push_back( { neg( "c1" ), neg( "c2" ), pos( "c3" ) } );
  cls.push_back( { neg( "c1" ), pos( "c2" ), neg( "c3" ) } );

  /* colour copies are constant over time */
  for ( int i = 1; i <= n; ++i )
    for ( int c = 1; c <= 3; ++c )
    {
      auto const v = names::colour_copy( i, c );
      cls.push_back( { neg( v ), pos( v, M::future ) } );
      cls.push_back( { neg( v ), pos( v, M::past ) } );
    }

  /* p_i is false exactly at the i-th world */
  cls.push_back( { neg( "s" ), neg( p( 1 ) ) } );
  cls.push_back( { neg( "s" ), pos( p( 1 ), M::future ) } );
  cls.push_back( { neg( "s" ), pos( p( 1 ), M::past ) } );
  for ( int i = 1; i < n; ++i )
    cls.push_back( { neg( p( i ) ), neg( p( i ), M::future ), pos( p( i + 1 ), M::future ) } );
  for ( int i = 1; i < n; ++i )
    cls.push_back( { pos( p( i ) ), neg( p( i + 1 ), M::future ) } );
  cls.push_back( { pos( p( n ) ), neg( p( n ), M::future ), pos( "pprime" ) } );
  cls.push_back( { neg( p( n ) ), neg( "pprime" ) } );
  cls.push_back( { pos( p( n ), M::future ), neg( "pprime" ) } );
  cls.push_back( { neg( "pprime" ), pos( p( n ), M::past ) } );
  for ( int i = 2; i <= n; ++i )
    cls.push_back( { neg( p( i ) ), neg( p( i ), M::past ), pos( p( i - 1 ), M::past ) } );

  /* at the i-th world the colour bits copy vertex i */
  for ( int i = 1; i <= n; ++i )
    for ( int j = 1; j <= 3; ++j )
    {
      auto const c = "c" + std::to_string( j );
      auto const v = names::colour_copy( i, j );
      cls.push_back( { neg( p( i ), M::future ), neg( p( i ), M::past ), neg( v ), pos( c ) } );
      cls.push_back( { neg( p( i ), M::future ), neg( p( i ), M::past ), neg( c ), pos( v ) } );
    }

  for ( auto [i, j] : g.edges )
    for ( int c = 1; c <= 3; ++c )
      cls.push_back( { neg( names::colour_copy( i, c ) ), neg( names::colour_copy( j, c ) ) } );

  return { SnfFormula( OperatorSet{ M::future, M::past }, { "s" }, std::move( cls ) ),
           { "c1", "c2", "c3", "pprime" } };
}

Reduction reduce( Graph const& g, ReductionTarget t )
{
  return t == ReductionTarget::star_krom ? threecol_to_star_krom( g ) : threecol_to_fp_horn( g );
}

namespace
{

/* rows built by name, then laid out in the formula's variable order */
struct RowBuilder
{
  std::vector<std::string> vars;
  std::vector<WorldAssignment> rows;

  RowBuilder( std::vector<std::string> v, std::size_t count )
      : vars( std::move( v ) ), rows( count, WorldAssignment( vars.size(), false ) )
  {
  }
  void set( std::size_t row, std::string const& var, bool value )
  {
    auto it = std::lower_bound( vars.begin(), vars.end(), var );
    if ( it == vars.end() || *it != var )
      throw std::logic_error( "unknown gadget variable " + var );
    rows[row][static_cast<std::size_t>( it - vars.begin() )] = value;
  }
};

} // namespace

FiniteWindowInterpretation model_from_coloring( Graph const& g, Colouring const& f, ReductionTarget t )
{
  if ( !is_proper( g, f ) )
    throw std::invalid_argument( "model_from_coloring: colouring is not proper" );
  auto const phi = reduce( g, t ).formula;
  auto const vars = phi.variables();
  auto colour = [&]( int i ) { return f[static_cast<std::size_t>( i - 1 )]; };

  if ( t == ReductionTarget::star_krom )
  {
    /* rows: left, worlds 1..3, right; world k stands for colour k */
    RowBuilder b( vars, 5 );
    for ( std::size_t r = 0; r < 5; ++r )
    {
      int const world = static_cast<int>( r ); /* 0 = left, 4 = right */
      for ( int i = 1; i <= g.n; ++i )
        b.set( r, names::vertex( i ), world != colour( i ) );
      b.set( r, "b1", world == 2 );
      b.set( r, "b2", world == 3 );
      for ( auto [i, j] : g.edges )
      {
        b.set( r, names::edge( i, j, 'a' ), colour( i ) == 1 );
        b.set( r, names::edge( i, j, 'b' ), colour( i ) == 2 );
        b.set( r, names::edge( i, j, 'c' ), colour( i ) == 3 );
      }
    }
    return FiniteWindowInterpretation( vars, b.rows[0], { b.rows[1], b.rows[2], b.rows[3] }, 1, b.rows[4], 1 );
  }

  std::size_t const count = static_cast<std::size_t>( g.n ) + 2;
  RowBuilder b( vars, count );
  for ( std::size_t r = 0; r < count; ++r )
  {
    int const world = static_cast<int>( r ); /* 0 = left, n+1 = right */
    bool const inside = world >= 1 && world <= g.n;
    b.set( r, "s", world == 1 );
    for ( int j = 1; j <= 3; ++j )
      b.set( r, "c" + std::to_string( j ), inside ? colour( world ) == j : j == 1 );
    b.set( r, "pprime", world == g.n );
    for ( int i = 1; i <= g.n; ++i )
    {
      for ( int c = 1; c <= 3; ++c )
        b.set( r, names::colour_copy( i, c ), colour( i ) == c );
      b.set( r, names::position( i ), world != i );
    }
  }
  std::vector<WorldAssignment> window( b.rows.begin() + 1, b.rows.end() - 1 );
  return FiniteWindowInterpretation( vars, b.rows.front(), std::move( window ), 1, b.rows.back(), 1 );
}

Colouring coloring_from_model( Graph const& g, FiniteWindowInterpretation const& m, ReductionTarget t )
{
  auto const phi = reduce( g, t ).formula;
  if ( !models( m, phi ) )
    throw std::invalid_argument( "coloring_from_model: interpretation does not satisfy the formula" );
  auto idx = [&]( std::string const& v ) {
    auto i = m.index_of( v );
    if ( !i )
      throw std::invalid_argument( "coloring_from_model: interpretation lacks '" + v + "'" );
    return *i;
  };

  Colouring f( static_cast<std::size_t>( g.n ), 0 );
  if ( t == ReductionTarget::star_krom )
  {
    auto const b1 = idx( "b1" ), b2 = idx( "b2" );
    for ( int i = 1; i <= g.n; ++i )
    {
      auto const v = idx( names::vertex( i ) );
      for ( int z = m.lo() - 2; z <= m.hi() + 2; ++z )
        if ( !m.value( z, v ) )
        {
          bool const x1 = m.value( z, b1 ), x2 = m.value( z, b2 );
          f[static_cast<std::size_t>( i - 1 )] = !x1 && !x2 ? 1 : ( x1 && !x2 ? 2 : 3 );
          break;
        }
    }
  }
  else
  {
    for ( int i = 1; i <= g.n; ++i )
      for ( int c = 1; c <= 3; ++c )
        if ( m.value( m.start(), idx( names::colour_copy( i, c ) ) ) )
        {
          f[static_cast<std::size_t>( i - 1 )] = c;
          break;
        }
  }
  if ( !is_proper( g, f ) )
    throw std::logic_error( "coloring_from_model: extracted colouring is not proper" );
  return f;
}

std::vector<std::string> check_fp_horn_claims( Graph const& g, FiniteWindowInterpretation const& m )
{
  std::vector<std::string> out;
  auto idx = [&]( std::string const& v ) {
    auto i = m.index_of( v );
    if ( !i )
      throw std::invalid_argument( "interpretation lacks '" + v + "'" );
    return *i;
  };
  int const first = m.lo() - 2, last = m.hi() + 2;
  auto const c1 = idx( "c1" ), c2 = idx( "c2" ), c3 = idx( "c3" );

  for ( int z = first; z <= last; ++z )
    if ( m.value( z, c1 ) + m.value( z, c2 ) + m.value( z, c3 ) != 1 )
      out.push_back( "M1: world " + std::to_string( z ) + " does not have exactly one colour bit" );

  for ( int i = 1; i <= g.n; ++i )
    for ( int c = 1; c <= 3; ++c )
    {
      auto const v = idx( names::colour_copy( i, c ) );
      for ( int z = first; z <= last; ++z )
        if ( m.value( z, v ) != m.value( first, v ) )
        {
          out.push_back( "M2: " + names::colour_copy( i, c ) + " is not constant" );
          break;
        }
    }

  for ( int i = 1; i <= g.n; ++i )
  {
    auto const p = idx( names::position( i ) );
    int const at = m.start() + i - 1;
    for ( int z = first; z <= last; ++z )
      if ( m.value( z, p ) != ( z != at ) )
      {
        out.push_back( "M3: " + names::position( i ) + " is wrong at world " + std::to_string( z ) );
        break;
      }
    for ( int j = 1; j <= 3; ++j )
      if ( m.value( at, idx( "c" + std::to_string( j ) ) ) != m.value( at, idx( names::colour_copy( i, j ) ) ) )
        out.push_back( "M4: c" + std::to_string( j ) + " differs from " + names::colour_copy( i, j ) + " at world " +
                       std::to_string( at ) );
  }
  return out;
}

} // namespace ltlbd
