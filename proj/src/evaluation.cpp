#include <ltlbd/evaluation.hpp>

#include <algorithm>
#include <stdexcept>

namespace ltlbd
{

namespace
{

void require_always_only( SnfFormula const& phi )
{
  if ( phi.operators.contains( Modality::past ) || phi.operators.contains( Modality::future ) )
    throw std::invalid_argument( "backdoor evaluation supports only the always operator; operators are '" +
                                 to_string( phi.operators ) + "'" );
}

VariableSet rest_variables( SnfFormula const& phi, VariableSet const& backdoor )
{
  VariableSet rest;
  for ( auto const& v : phi.variables() )
    if ( !std::binary_search( backdoor.begin(), backdoor.end(), v ) )
      rest.push_back( v );
  return rest;
}

PropCnf build_F_unchecked( SnfFormula const& phi, ThetaSet const& ts, VariableSet const& rest )
{
  int const copies = static_cast<int>( rest.size() ) + 1;
  std::size_t const width = ts.backdoor.size();
  PropCnf f;

  for ( auto theta : ts.members )
  {
    auto const ga = glassign_backdoor( ts, theta );
    std::vector<Clause> reduced;
    for ( auto const& c : phi.clauses )
      if ( auto r = reduce_clause( c, ga ) )
        reduced.push_back( std::move( *r ) );
    auto const block = propF( reduced );
    auto const label = label_of( theta, width );

    for ( int i = 1; i <= copies; ++i )
    {
      if ( i == 1 && theta == ts.theta0() )
      {
        /* Psi[theta0]: facts over X are decided by theta0, facts over R become units on copy 1 */
        PropCnf facts;
        for ( auto const& fact : phi.initial )
        {
          auto it = std::lower_bound( ts.backdoor.begin(), ts.backdoor.end(), fact );
          if ( it != ts.backdoor.end() && *it == fact )
          {
            if ( !( ( theta >> ( it - ts.backdoor.begin() ) ) & 1u ) )
              facts.add( {} );
          }
          else
            facts.add( { PropLiteral{ PropAtom::plain( fact ), true } } );
        }
        f.append( mcopy( facts, rest, 1, label ) );
      }
      f.append( mcopy( block, rest, i, label ) );
    }
  }

  /* consistency between global atoms and the local copies */
  for ( auto const& v : rest )
  {
    PropClause some_false{ PropLiteral{ PropAtom::global( v ), true } };
    for ( auto theta : ts.members )
    {
      auto const label = label_of( theta, width );
      for ( int i = 1; i <= copies; ++i )
      {
        auto const local = PropAtom::copy( v, i, label );
        f.add( { PropLiteral{ PropAtom::global( v ), false }, PropLiteral{ local, true } } );
        some_false.push_back( PropLiteral{ local, false } );
      }
    }
    f.add( std::move( some_false ) );
  }
  return f;
}

void check_theta_set( ThetaSet const& ts )
{
  if ( ts.members.empty() || ts.designated >= ts.members.size() )
    throw std::invalid_argument( "theta set needs a designated member" );
  if ( !std::is_sorted( ts.backdoor.begin(), ts.backdoor.end() ) )
    throw std::invalid_argument( "backdoor must be sorted" );
}

} // namespace

std::string label_of( BackdoorAssignment theta, std::size_t width )
{
  if ( width == 0 )
    return "-";
  std::string out;
  for ( std::size_t j = 0; j < width; ++j )
    out += ( ( theta >> j ) & 1u ) ? '1' : '0';
  return out;
}

std::map<PropAtom, bool> glassign( std::vector<std::map<std::string, bool>> const& members,
                                   std::vector<std::string> const& vars,
                                   std::optional<std::map<std::string, bool>> const& theta )
{
  std::map<PropAtom, bool> out;
  for ( auto const& v : vars )
  {
    bool all = true;
    for ( auto const& m : members )
    {
      auto it = m.find( v );
      if ( it == m.end() )
        throw std::invalid_argument( "assignment does not define '" + v + "'" );
      all = all && it->second;
    }
    out[PropAtom::global( v )] = all;
    if ( theta )
    {
      auto it = theta->find( v );
      if ( it == theta->end() )
        throw std::invalid_argument( "theta does not define '" + v + "'" );
      out[PropAtom::plain( v )] = it->second;
    }
  }
  return out;
}

ConsistentAssignment glassign_backdoor( ThetaSet const& ts, BackdoorAssignment theta )
{
  ConsistentAssignment ga( ts.backdoor, OperatorSet{ Modality::always } );
  for ( std::size_t j = 0; j < ts.backdoor.size(); ++j )
  {
    bool const all = std::all_of( ts.members.begin(), ts.members.end(),
                                  [j]( BackdoorAssignment m ) { return ( m >> j ) & 1u; } );
    ga.set_at( j, Modality::always, all );
    ga.set_at( j, Modality::none, ( theta >> j ) & 1u );
  }
  return ga;
}

PropCnf propF( std::vector<Clause> const& phi )
{
  PropCnf out;
  for ( auto const& c : phi )
  {
    PropClause pc;
    for ( auto const& l : c.literals() )
    {
      switch ( l.modality )
      {
      case Modality::none:
        pc.push_back( { PropAtom::plain( l.var ), l.positive } );
        break;
      case Modality::always:
        pc.push_back( { PropAtom::global( l.var ), l.positive } );
        break;
      default:
        throw std::invalid_argument( "propF: literal " + to_string( l ) + " uses a past/future operator" );
      }
    }
    out.add( std::move( pc ) );
  }
  return out;
}

PropCnf mcopy( PropCnf const& f, VariableSet const& vars, int i, std::string const& label )
{
  PropCnf out;
  for ( auto const& c : f.clauses )
  {
    PropClause pc;
    for ( auto const& l : c )
    {
      if ( l.atom.kind == AtomKind::plain && std::find( vars.begin(), vars.end(), l.atom.var ) != vars.end() )
        pc.push_back( { PropAtom::copy( l.atom.var, i, label ), l.positive } );
      else
        pc.push_back( l );
    }
    out.add( std::move( pc ) );
  }
  return out;
}

std::size_t horn_star_length_bound( std::size_t backdoor_size, std::size_t rest_size, std::size_t clause_count,
                                    std::size_t fact_count )
{
  std::size_t const thetas = std::size_t{ 1 } << backdoor_size;
  std::size_t const r = rest_size + 1;
  return thetas * r * ( clause_count + fact_count ) + 2 * thetas * r * r;
}

PropCnf build_F( SnfFormula const& phi, ThetaSet const& theta_set )
{
  require_always_only( phi );
  check_theta_set( theta_set );
  if ( !verify_backdoor( phi, theta_set.backdoor, TargetClass::horn ) )
    throw std::invalid_argument( "the given set is not a strong HORN backdoor" );
  return build_F_unchecked( phi, theta_set, rest_variables( phi, theta_set.backdoor ) );
}

std::size_t members_matching( AssignmentSet const& a, VariableSet const& backdoor, BackdoorAssignment theta )
{
  std::vector<std::size_t> idx;
  for ( auto const& x : backdoor )
  {
    auto it = std::find( a.vars.begin(), a.vars.end(), x );
    if ( it == a.vars.end() )
      throw std::invalid_argument( "assignment set does not define '" + x + "'" );
    idx.push_back( static_cast<std::size_t>( it - a.vars.begin() ) );
  }
  return static_cast<std::size_t>( std::count_if( a.members.begin(), a.members.end(), [&]( auto const& row ) {
    for ( std::size_t j = 0; j < idx.size(); ++j )
      if ( row[idx[j]] != static_cast<bool>( ( theta >> j ) & 1u ) )
        return false;
    return true;
  } ) );
}

EvalResult evaluate_horn_star( SnfFormula const& phi_in, VariableSet const& backdoor_in,
                               std::function<void( ThetaSet const&, PropCnf const& )> const& on_formula )
{
  require_always_only( phi_in );
  auto const all_vars = phi_in.variables();
  for ( auto const& x : backdoor_in )
    if ( !std::binary_search( all_vars.begin(), all_vars.end(), x ) )
      throw std::invalid_argument( "backdoor variable '" + x + "' does not occur in the formula" );

  /* valid clauses constrain nothing; drop them and the backdoor variables they alone mention */
  auto const phi = remove_valid_clauses( phi_in );
  auto const vars = phi.variables();
  VariableSet backdoor;
  for ( auto const& x : backdoor_in )
    if ( std::binary_search( vars.begin(), vars.end(), x ) )
      backdoor.push_back( x );
  std::sort( backdoor.begin(), backdoor.end() );
  backdoor.erase( std::unique( backdoor.begin(), backdoor.end() ), backdoor.end() );
  if ( backdoor.size() > evaluation_backdoor_budget )
    throw std::length_error( "evaluate_horn_star: backdoor larger than the supported budget" );
  if ( !verify_backdoor( phi, backdoor, TargetClass::horn ) )
    throw std::invalid_argument( "the given set is not a strong HORN backdoor" );

  auto const rest = rest_variables( phi, backdoor );
  int const copies = static_cast<int>( rest.size() ) + 1;
  std::size_t const universe = std::size_t{ 1 } << backdoor.size();

  EvalResult result;
  result.stats.length_bound = horn_star_length_bound( backdoor.size(), rest.size(), phi.clauses.size(),
                                                      phi.initial.size() );

  for ( std::size_t card = 1; card <= universe; ++card )
  {
    std::vector<BackdoorAssignment> pick( card );
    for ( std::size_t i = 0; i < card; ++i )
      pick[i] = static_cast<BackdoorAssignment>( i );
    while ( true )
    {
      for ( std::size_t d = 0; d < card; ++d )
      {
        ThetaSet ts{ backdoor, pick, d };
        auto const f = build_F_unchecked( phi, ts, rest );
        ++result.stats.candidates;
        result.stats.max_formula_size = std::max( result.stats.max_formula_size, f.size() );
        if ( on_formula )
          on_formula( ts, f );
        if ( !f.is_horn() )
          throw std::logic_error( "constructed formula is not Horn" );

        auto model = horn_sat( f );
        if ( !model )
          continue;

        AssignmentSet a;
        a.vars = vars;
        for ( auto theta : ts.members )
        {
          auto const label = label_of( theta, backdoor.size() );
          for ( int i = 1; i <= copies; ++i )
          {
            if ( theta == ts.theta0() && i == 1 )
              a.initial = a.members.size();
            WorldAssignment row( vars.size() );
            for ( std::size_t vi = 0; vi < vars.size(); ++vi )
            {
              auto bit = std::lower_bound( backdoor.begin(), backdoor.end(), vars[vi] );
              if ( bit != backdoor.end() && *bit == vars[vi] )
                row[vi] = ( theta >> ( bit - backdoor.begin() ) ) & 1u;
              else
              {
                auto it = model->find( PropAtom::copy( vars[vi], i, label ) );
                row[vi] = it != model->end() && it->second;
              }
            }
            a.members.push_back( std::move( row ) );
          }
        }

        for ( auto theta : ts.members )
          result.stats.max_members_per_theta =
              std::max( result.stats.max_members_per_theta, members_matching( a, backdoor, theta ) );

        if ( vars.size() != all_vars.size() )
        {
          /* variables of dropped clauses: any value works, use 0 */
          AssignmentSet full;
          full.vars = all_vars;
          full.initial = a.initial;
          for ( auto const& row : a.members )
          {
            WorldAssignment wide( all_vars.size(), false );
            for ( std::size_t vi = 0; vi < vars.size(); ++vi )
              wide[static_cast<std::size_t>( std::lower_bound( all_vars.begin(), all_vars.end(), vars[vi] ) -
                                             all_vars.begin() )] = row[vi];
            full.members.push_back( std::move( wide ) );
          }
          a = std::move( full );
        }
        if ( !assignment_set_conditions_hold( phi_in, a ) || !models( from_assignment_set( a ), phi_in ) )
          throw std::logic_error( "reconstructed assignment set does not satisfy the formula" );

        result.verdict = Verdict::sat;
        result.witness = EvalWitness{ std::move( ts ), std::move( *model ), std::move( a ) };
        return result;
      }

      std::size_t i = card;
      while ( i > 0 && pick[i - 1] == universe - card + i - 1 )
        --i;
      if ( i == 0 )
        break;
      ++pick[i - 1];
      for ( std::size_t j = i; j < card; ++j )
        pick[j] = pick[j - 1] + 1;
    }
  }
  result.verdict = Verdict::unsat;
  return result;
}

} // namespace ltlbd
