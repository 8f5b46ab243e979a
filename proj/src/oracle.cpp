#include <ltlbd/oracle.hpp>

#include <ltlbd/cdcl.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>

namespace ltlbd
{

std::string to_string( OracleVerdict v )
{
  switch ( v )
  {
  case OracleVerdict::sat:
    return "SAT";
  case OracleVerdict::unsat:
    return "UNSAT";
  case OracleVerdict::no_model_within_window:
    return "NO_MODEL_WITHIN_WINDOW";
  }
  return "?";
}

namespace
{

/* a clause restricted to plain literals once the global atoms are fixed */
struct MaskClause
{
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

bool satisfied( MaskClause const& c, std::uint32_t alpha )
{
  return ( alpha & c.pos ) || ( ~alpha & c.neg );
}

void require_always_only( SnfFormula const& phi )
{
  if ( phi.operators.contains( Modality::past ) || phi.operators.contains( Modality::future ) )
    throw std::invalid_argument( "star oracle: only the always operator is supported, got '" +
                                 to_string( phi.operators ) + "'" );
}

} // namespace

OracleResult star_sat_enumerate( SnfFormula const& phi )
{
  require_always_only( phi );
  auto const vars = phi.variables();
  std::size_t const n = vars.size();
  if ( n > star_enumeration_variable_budget )
    throw std::length_error( "star_sat_enumerate: variable budget exceeded" );

  auto bit = [&]( std::string const& v ) {
    return std::uint32_t{ 1 } << ( std::lower_bound( vars.begin(), vars.end(), v ) - vars.begin() );
  };
  std::uint32_t facts = 0;
  for ( auto const& f : phi.initial )
    facts |= bit( f );

  std::uint32_t const full = ( std::uint32_t{ 1 } << n ) - 1;
  OracleResult result;

  for ( std::uint32_t g = 0; g <= full; ++g )
  {
    ++result.candidates;
    std::vector<MaskClause> reduced;
    bool dead = false;
    for ( auto const& c : phi.clauses )
    {
      MaskClause mc;
      bool sat = false;
      for ( auto const& l : c.literals() )
      {
        auto const b = bit( l.var );
        if ( l.modality == Modality::always )
        {
          if ( static_cast<bool>( g & b ) == l.positive )
            sat = true;
        }
        else if ( g & b )
        {
          /* x is forced true wherever [*]x holds */
          if ( l.positive )
            sat = true;
        }
        else if ( l.positive )
          mc.pos |= b;
        else
          mc.neg |= b;
      }
      if ( sat )
        continue;
      if ( !mc.pos && !mc.neg )
      {
        dead = true;
        break;
      }
      reduced.push_back( mc );
    }
    if ( dead )
      continue;

    /* W_g: supersets of g satisfying every reduced clause */
    std::optional<std::uint32_t> alpha0;
    std::vector<std::optional<std::uint32_t>> zero( n );
    std::uint32_t const free = full & ~g;
    std::uint32_t sub = 0;
    while ( true )
    {
      std::uint32_t const alpha = g | sub;
      if ( std::all_of( reduced.begin(), reduced.end(), [&]( auto const& c ) { return satisfied( c, alpha ); } ) )
      {
        if ( !alpha0 && ( alpha & facts ) == facts )
          alpha0 = alpha;
        for ( std::size_t i = 0; i < n; ++i )
          if ( !zero[i] && !( ( alpha >> i ) & 1u ) )
            zero[i] = alpha;
      }
      if ( sub == free )
        break;
      sub = ( sub - free ) & free;
    }
    if ( !alpha0 )
      continue;
    bool complete = true;
    for ( std::size_t i = 0; i < n; ++i )
      if ( !( ( g >> i ) & 1u ) && !zero[i] )
        complete = false;
    if ( !complete )
      continue;

    AssignmentSet a;
    a.vars = vars;
    auto row_of = [&]( std::uint32_t alpha ) {
      WorldAssignment row( n );
      for ( std::size_t i = 0; i < n; ++i )
        row[i] = ( alpha >> i ) & 1u;
      return row;
    };
    a.members.push_back( row_of( *alpha0 ) );
    for ( std::size_t i = 0; i < n; ++i )
      if ( !( ( g >> i ) & 1u ) )
        a.members.push_back( row_of( *zero[i] ) );
    auto model = from_assignment_set( a );
    if ( !models( model, phi ) )
      throw std::logic_error( "star_sat_enumerate: witness failed the model check" );
    result.verdict = OracleVerdict::sat;
    result.model = std::move( model );
    return result;
  }
  result.verdict = OracleVerdict::unsat;
  return result;
}

OracleResult star_sat_oracle( SnfFormula const& phi )
{
  require_always_only( phi );
  auto const vars = phi.variables();
  std::size_t const n = vars.size();
  if ( n > star_oracle_variable_budget )
    throw std::length_error( "star_sat_oracle: variable budget exceeded" );
  auto index = [&]( std::string const& v ) {
    return static_cast<std::size_t>( std::lower_bound( vars.begin(), vars.end(), v ) - vars.begin() );
  };

  /* global atoms, then copy 0 (facts) and copy 1+i (zero witness for variable i) */
  CdclSolver s;
  std::vector<int> glob( n );
  for ( auto& x : glob )
    x = s.new_var();
  std::vector<std::vector<int>> copy( n + 1, std::vector<int>( n ) );
  for ( auto& row : copy )
    for ( auto& x : row )
      x = s.new_var();

  for ( std::size_t j = 0; j <= n; ++j )
  {
    for ( std::size_t i = 0; i < n; ++i )
      s.add_clause( { -glob[i], copy[j][i] } );
    for ( auto const& c : phi.clauses )
    {
      std::vector<int> lits;
      for ( auto const& l : c.literals() )
      {
        auto const i = index( l.var );
        int const x = l.modality == Modality::always ? glob[i] : copy[j][i];
        lits.push_back( l.positive ? x : -x );
      }
      s.add_clause( lits );
    }
  }
  for ( auto const& f : phi.initial )
    s.add_clause( { copy[0][index( f )] } );
  for ( std::size_t i = 0; i < n; ++i )
    s.add_clause( { glob[i], -copy[i + 1][i] } );

  OracleResult result;
  ++result.candidates;
  if ( !s.solve() )
  {
    result.verdict = OracleVerdict::unsat;
    return result;
  }

  /* least g, then least world per copy; the most significant bit is the last variable */
  std::vector<int> fixed;
  auto minimise = [&]( std::vector<int> const& bits ) {
    for ( std::size_t k = bits.size(); k-- > 0; )
    {
      int const x = bits[k];
      if ( !s.model_value( x ) )
      {
        fixed.push_back( -x );
        continue;
      }
      ++result.candidates;
      auto trial = fixed;
      trial.push_back( -x );
      if ( s.solve( trial ) )
        fixed = std::move( trial );
      else
        fixed.push_back( x );
    }
  };
  minimise( glob );
  for ( auto const& row : copy )
    minimise( row );
  if ( !s.solve( fixed ) )
    throw std::logic_error( "star_sat_oracle: lost its model" );

  AssignmentSet a;
  a.vars = vars;
  auto row_of = [&]( std::vector<int> const& row ) {
    WorldAssignment out( n );
    for ( std::size_t i = 0; i < n; ++i )
      out[i] = s.model_value( row[i] );
    return out;
  };
  a.members.push_back( row_of( copy[0] ) );
  for ( std::size_t i = 0; i < n; ++i )
    if ( !s.model_value( glob[i] ) )
      a.members.push_back( row_of( copy[i + 1] ) );
  auto model = from_assignment_set( a );
  if ( !models( model, phi ) )
    throw std::logic_error( "star_sat_oracle: witness failed the model check" );
  result.verdict = OracleVerdict::sat;
  result.model = std::move( model );
  return result;
}

namespace
{

class WindowEncoding
{
public:
  WindowEncoding( SnfFormula const& phi, int w ) : phi_( phi ), vars_( phi.variables() ), w_( w )
  {
    rows_ = static_cast<std::size_t>( w_ ) + 3;
    for ( std::size_t r = 0; r < rows_; ++r )
      for ( std::size_t v = 0; v < vars_.size(); ++v )
        cells_.push_back( solver_.new_var() );
    for ( int z = 0; z <= w_; ++z )
      start_.push_back( solver_.new_var() );

    std::vector<int> some( start_.begin(), start_.end() );
    solver_.add_clause( some );
    for ( std::size_t i = 0; i < start_.size(); ++i )
      for ( std::size_t j = i + 1; j < start_.size(); ++j )
        solver_.add_clause( { -start_[i], -start_[j] } );

    for ( int z = 0; z <= w_; ++z )
      for ( auto const& f : phi_.initial )
        solver_.add_clause( { -start_[static_cast<std::size_t>( z )], cell( z, index( f ) ) } );

    for ( int z = -2; z <= w_ + 2; ++z )
      for ( auto const& c : phi_.clauses )
      {
        std::vector<int> lits;
        for ( auto const& l : c.literals() )
        {
          int const x = literal_var( z, l );
          lits.push_back( l.positive ? x : -x );
        }
        solver_.add_clause( lits );
      }
  }

  OracleResult solve()
  {
    OracleResult result;
    ++result.candidates;
    if ( !solver_.solve() )
    {
      result.verdict = OracleVerdict::no_model_within_window;
      return result;
    }

    /* lexicographically first model by greedy fixing */
    std::vector<int> fixed;
    int start = -1;
    for ( std::size_t z = 0; z < start_.size() && start < 0; ++z )
    {
      ++result.candidates;
      auto trial = fixed;
      trial.push_back( start_[z] );
      if ( solver_.solve( trial ) )
      {
        fixed = trial;
        start = static_cast<int>( z );
      }
    }
    if ( start < 0 )
      throw std::logic_error( "window search lost its model" );

    for ( int x : cells_ )
    {
      if ( !solver_.model_value( x ) )
      {
        fixed.push_back( -x );
        continue;
      }
      ++result.candidates;
      auto trial = fixed;
      trial.push_back( -x );
      if ( solver_.solve( trial ) )
        fixed = trial;
      else
        fixed.push_back( x );
    }
    /* refresh the model under the complete assignment */
    if ( !solver_.solve( fixed ) )
      throw std::logic_error( "window search lost its model" );

    auto row = [&]( std::size_t r ) {
      WorldAssignment out( vars_.size() );
      for ( std::size_t v = 0; v < vars_.size(); ++v )
        out[v] = solver_.model_value( cells_[r * vars_.size() + v] );
      return out;
    };
    std::vector<WorldAssignment> window;
    for ( int z = 0; z <= w_; ++z )
      window.push_back( row( static_cast<std::size_t>( z ) + 1 ) );
    FiniteWindowInterpretation m( vars_, row( 0 ), std::move( window ), 0, row( rows_ - 1 ), start );
    if ( !models( m, phi_ ) )
      throw std::logic_error( "window_sat_oracle: witness failed the model check" );
    result.verdict = OracleVerdict::sat;
    result.model = std::move( m );
    return result;
  }

private:
  std::size_t index( std::string const& v ) const
  {
    return static_cast<std::size_t>( std::lower_bound( vars_.begin(), vars_.end(), v ) - vars_.begin() );
  }

  /* row 0 = left, rows 1..W+1 = worlds 0..W, last row = right */
  std::size_t row_of_world( int z ) const
  {
    if ( z < 0 )
      return 0;
    if ( z > w_ )
      return rows_ - 1;
    return static_cast<std::size_t>( z ) + 1;
  }

  int cell_row( std::size_t r, std::size_t v ) const { return cells_[r * vars_.size() + v]; }
  int cell( int z, std::size_t v ) const { return cell_row( row_of_world( z ), v ); }

  /* a <-> conjunction of the given rows at v */
  int conjunction( std::vector<std::size_t> rows, std::size_t v )
  {
    std::sort( rows.begin(), rows.end() );
    rows.erase( std::unique( rows.begin(), rows.end() ), rows.end() );
    auto key = std::make_pair( rows, v );
    if ( auto it = aux_.find( key ); it != aux_.end() )
      return it->second;
    int const a = solver_.new_var();
    std::vector<int> back{ a };
    for ( auto r : rows )
    {
      solver_.add_clause( { -a, cell_row( r, v ) } );
      back.push_back( -cell_row( r, v ) );
    }
    solver_.add_clause( back );
    aux_.emplace( std::move( key ), a );
    return a;
  }

  int literal_var( int z, Literal const& l )
  {
    auto const v = index( l.var );
    std::vector<std::size_t> rows;
    switch ( l.modality )
    {
    case Modality::none:
      return cell( z, v );
    case Modality::future:
      /* every world after z */
      if ( z + 1 < 0 )
        rows.push_back( 0 );
      for ( int y = std::max( z + 1, 0 ); y <= w_; ++y )
        rows.push_back( row_of_world( y ) );
      rows.push_back( rows_ - 1 );
      break;
    case Modality::past:
      rows.push_back( 0 );
      for ( int y = 0; y <= std::min( z - 1, w_ ); ++y )
        rows.push_back( row_of_world( y ) );
      if ( z - 1 > w_ )
        rows.push_back( rows_ - 1 );
      break;
    case Modality::always:
      for ( std::size_t r = 0; r < rows_; ++r )
        rows.push_back( r );
      break;
    }
    return conjunction( std::move( rows ), v );
  }

  SnfFormula const& phi_;
  std::vector<std::string> vars_;
  int w_;
  std::size_t rows_ = 0;
  CdclSolver solver_;
  std::vector<int> cells_;
  std::vector<int> start_;
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, int> aux_;
};

} // namespace

OracleResult window_sat_oracle( SnfFormula const& phi, int w )
{
  if ( w < 0 )
    throw std::invalid_argument( "window_sat_oracle: window bound must be non-negative" );
  auto const n = phi.variables().size();
  if ( ( static_cast<std::size_t>( w ) + 3 ) * n > window_oracle_cell_budget )
    throw std::length_error( "window_sat_oracle: cell budget exceeded" );
  WindowEncoding enc( phi, w );
  return enc.solve();
}

} // namespace ltlbd
