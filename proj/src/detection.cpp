#include <ltlbd/detection.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ltlbd
{

bool ConflictGraph::has_self_loop( std::string const& v ) const
{
  return std::binary_search( edges.begin(), edges.end(), std::make_pair( v, v ) );
}

ConflictGraph build_horn_conflict_graph( SnfFormula const& phi )
{
  ConflictGraph g;
  g.vertices = phi.variables();
  std::set<std::pair<std::string, std::string>> edges;
  for ( auto const& c : phi.clauses )
  {
    std::vector<Literal const*> pos;
    for ( auto const& l : c.literals() )
      if ( l.positive )
        pos.push_back( &l );
    for ( std::size_t i = 0; i < pos.size(); ++i )
      for ( std::size_t j = i + 1; j < pos.size(); ++j )
        edges.insert( std::minmax( pos[i]->var, pos[j]->var ) );
  }
  g.edges.assign( edges.begin(), edges.end() );
  return g;
}

bool is_vertex_cover( ConflictGraph const& g, VariableSet const& cover )
{
  auto in = [&]( std::string const& v ) { return std::find( cover.begin(), cover.end(), v ) != cover.end(); };
  return std::all_of( g.edges.begin(), g.edges.end(), [&]( auto const& e ) { return in( e.first ) || in( e.second ); } );
}

namespace
{

bool cover_search( ConflictGraph const& g, std::set<std::string>& chosen, std::size_t budget, std::size_t depth,
                   SearchStats* stats )
{
  if ( stats )
  {
    ++stats->nodes;
    stats->max_depth = std::max( stats->max_depth, depth );
  }
  auto it = std::find_if( g.edges.begin(), g.edges.end(), [&]( auto const& e ) {
    return !chosen.contains( e.first ) && !chosen.contains( e.second );
  } );
  if ( it == g.edges.end() )
    return true;
  if ( budget == 0 )
    return false;
  for ( auto const& v : { it->first, it->second } )
  {
    chosen.insert( v );
    if ( cover_search( g, chosen, budget - 1, depth + 1, stats ) )
      return true;
    chosen.erase( v );
  }
  return false;
}

bool hitting_search( HittingFamily const& f, std::set<std::string>& chosen, std::size_t budget, std::size_t depth,
                     SearchStats* stats )
{
  if ( stats )
  {
    ++stats->nodes;
    stats->max_depth = std::max( stats->max_depth, depth );
  }
  auto it = std::find_if( f.sets.begin(), f.sets.end(), [&]( auto const& s ) {
    return std::none_of( s.begin(), s.end(), [&]( auto const& v ) { return chosen.contains( v ); } );
  } );
  if ( it == f.sets.end() )
    return true;
  if ( budget == 0 )
    return false;
  for ( auto const& v : *it )
  {
    chosen.insert( v );
    if ( hitting_search( f, chosen, budget - 1, depth + 1, stats ) )
      return true;
    chosen.erase( v );
  }
  return false;
}

} // namespace

std::optional<VariableSet> vertex_cover( ConflictGraph const& g, std::size_t k, SearchStats* stats )
{
  std::set<std::string> chosen;
  for ( auto const& [u, v] : g.edges )
    if ( u == v )
      chosen.insert( u );
  if ( chosen.size() > k )
    return std::nullopt;
  if ( !cover_search( g, chosen, k - chosen.size(), 0, stats ) )
    return std::nullopt;
  return VariableSet( chosen.begin(), chosen.end() );
}

HittingFamily build_krom_hitting_family( SnfFormula const& phi )
{
  HittingFamily f;
  f.universe = phi.variables();
  std::set<std::vector<std::string>> sets;
  for ( auto const& c : phi.clauses )
  {
    auto const lits = c.literals();
    for ( std::size_t i = 0; i < lits.size(); ++i )
      for ( std::size_t j = i + 1; j < lits.size(); ++j )
        for ( std::size_t k = j + 1; k < lits.size(); ++k )
        {
          std::vector<std::string> s{ lits[i].var, lits[j].var, lits[k].var };
          std::sort( s.begin(), s.end() );
          s.erase( std::unique( s.begin(), s.end() ), s.end() );
          sets.insert( std::move( s ) );
        }
  }
  f.sets.assign( sets.begin(), sets.end() );
  return f;
}

bool is_hitting_set( HittingFamily const& f, VariableSet const& s )
{
  return std::all_of( f.sets.begin(), f.sets.end(), [&]( auto const& set ) {
    return std::any_of( set.begin(), set.end(),
                        [&]( auto const& v ) { return std::find( s.begin(), s.end(), v ) != s.end(); } );
  } );
}

std::optional<VariableSet> hitting_set_3( HittingFamily const& f, std::size_t k, SearchStats* stats )
{
  std::set<std::string> chosen;
  if ( !hitting_search( f, chosen, k, 0, stats ) )
    return std::nullopt;
  return VariableSet( chosen.begin(), chosen.end() );
}

std::optional<VariableSet> detect_horn_backdoor( SnfFormula const& phi, std::size_t k, SearchStats* stats )
{
  return vertex_cover( build_horn_conflict_graph( remove_valid_clauses( phi ) ), k, stats );
}

std::optional<VariableSet> detect_krom_backdoor( SnfFormula const& phi, std::size_t k, SearchStats* stats )
{
  return hitting_set_3( build_krom_hitting_family( remove_valid_clauses( phi ) ), k, stats );
}

std::optional<VariableSet> detect_backdoor( SnfFormula const& phi, TargetClass target, std::size_t k,
                                            SearchStats* stats )
{
  return target == TargetClass::horn ? detect_horn_backdoor( phi, k, stats ) : detect_krom_backdoor( phi, k, stats );
}

bool verify_backdoor( SnfFormula const& phi, VariableSet const& x, TargetClass target )
{
  auto const vars = phi.variables();
  for ( auto const& v : x )
    if ( !std::binary_search( vars.begin(), vars.end(), v ) )
      throw std::invalid_argument( "backdoor variable '" + v + "' does not occur in the formula" );

  /* clauses untouched by X reduce to themselves under every theta */
  std::vector<Clause const*> touched;
  for ( auto const& c : phi.clauses )
  {
    bool const hits = std::any_of( c.literals().begin(), c.literals().end(), [&]( Literal const& l ) {
      return std::find( x.begin(), x.end(), l.var ) != x.end();
    } );
    if ( hits )
      touched.push_back( &c );
    else if ( !clause_in_class( c, target ) )
      return false;
  }

  bool ok = true;
  for_each_consistent_assignment( x, phi.operators, [&]( ConsistentAssignment const& theta ) {
    for ( auto const* c : touched )
    {
      auto r = reduce_clause( *c, theta );
      if ( r && !clause_in_class( *r, target ) )
      {
        ok = false;
        return false;
      }
    }
    return true;
  } );
  return ok;
}

VariableSet minimal_backdoor_bruteforce( SnfFormula const& phi, TargetClass target )
{
  auto const vars = phi.variables();
  if ( vars.size() > brute_backdoor_variable_budget )
    throw std::length_error( "minimal_backdoor_bruteforce: variable budget exceeded" );

  std::size_t const n = vars.size();
  for ( std::size_t size = 0; size <= n; ++size )
  {
    /* combinations in lexicographic order */
    std::vector<std::size_t> pick( size );
    for ( std::size_t i = 0; i < size; ++i )
      pick[i] = i;
    while ( true )
    {
      VariableSet x;
      for ( auto i : pick )
        x.push_back( vars[i] );
      if ( verify_backdoor( phi, x, target ) )
        return x;
      std::size_t i = size;
      while ( i > 0 && pick[i - 1] == n - size + i - 1 )
        --i;
      if ( i == 0 )
        break;
      ++pick[i - 1];
      for ( std::size_t j = i; j < size; ++j )
        pick[j] = pick[j - 1] + 1;
    }
  }
  return vars; /* unreachable: the full variable set is always a backdoor */
}

} // namespace ltlbd
