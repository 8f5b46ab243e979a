#include <ltlbd/formula.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ltlbd
{

namespace
{

constexpr std::uint8_t bit_of( Modality m )
{
  return static_cast<std::uint8_t>( 1u << static_cast<unsigned>( m ) );
}

void sort_unique( std::vector<std::string>& v )
{
  std::sort( v.begin(), v.end() );
  v.erase( std::unique( v.begin(), v.end() ), v.end() );
}

} // namespace

std::string_view modality_tag( Modality m )
{
  switch ( m )
  {
  case Modality::none:
    return "";
  case Modality::past:
    return "[P]";
  case Modality::future:
    return "[F]";
  case Modality::always:
    return "[*]";
  }
  return "?";
}

OperatorSet::OperatorSet( std::initializer_list<Modality> ops )
{
  for ( auto m : ops )
    insert( m );
}

OperatorSet OperatorSet::all()
{
  return { Modality::past, Modality::future, Modality::always };
}

bool OperatorSet::contains( Modality m ) const
{
  return m != Modality::none && ( bits_ & bit_of( m ) ) != 0;
}

void OperatorSet::insert( Modality m )
{
  if ( m == Modality::none )
    throw std::invalid_argument( "the plain modality is not an operator" );
  bits_ |= bit_of( m );
}

std::size_t OperatorSet::size() const
{
  return members().size();
}

std::vector<Modality> OperatorSet::members() const
{
  std::vector<Modality> out;
  for ( auto m : { Modality::past, Modality::future, Modality::always } )
    if ( contains( m ) )
      out.push_back( m );
  return out;
}

std::string to_string( OperatorSet ops )
{
  std::string out;
  auto add = [&]( char const* s ) {
    if ( !out.empty() )
      out += ' ';
    out += s;
  };
  if ( ops.contains( Modality::future ) )
    add( "F" );
  if ( ops.contains( Modality::past ) )
    add( "P" );
  if ( ops.contains( Modality::always ) )
    add( "*" );
  return out;
}

bool is_valid_variable_name( std::string_view name )
{
  if ( name.empty() || !std::isalpha( static_cast<unsigned char>( name.front() ) ) )
    return false;
  return std::all_of( name.begin(), name.end(), []( char ch ) {
    return std::isalnum( static_cast<unsigned char>( ch ) ) || ch == '_';
  } );
}

std::strong_ordering operator<=>( Literal const& a, Literal const& b )
{
  if ( a.positive != b.positive )
    return a.positive ? std::strong_ordering::greater : std::strong_ordering::less;
  if ( auto c = a.var.compare( b.var ); c != 0 )
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.modality <=> b.modality;
}

std::string to_string( Literal const& lit )
{
  std::string out = lit.positive ? "" : "~";
  out += modality_tag( lit.modality );
  out += lit.var;
  return out;
}

Clause::Clause( std::vector<Literal> literals ) : lits_( std::move( literals ) )
{
  std::sort( lits_.begin(), lits_.end() );
  lits_.erase( std::unique( lits_.begin(), lits_.end() ), lits_.end() );
}

std::size_t Clause::positive_count() const
{
  return static_cast<std::size_t>(
      std::count_if( lits_.begin(), lits_.end(), []( auto const& l ) { return l.positive; } ) );
}

std::vector<std::string> Clause::variables() const
{
  std::vector<std::string> out;
  out.reserve( lits_.size() );
  for ( auto const& l : lits_ )
    out.push_back( l.var );
  sort_unique( out );
  return out;
}

bool Clause::contains( Literal const& lit ) const
{
  return std::binary_search( lits_.begin(), lits_.end(), lit );
}

std::string to_string( Clause const& c )
{
  std::string out;
  for ( auto const& l : c.literals() )
  {
    if ( !out.empty() )
      out += " | ";
    out += to_string( l );
  }
  return out;
}

bool clause_is_horn( Clause const& c )
{
  return c.positive_count() <= 1;
}

bool clause_is_krom( Clause const& c )
{
  return c.size() <= 2;
}

bool clause_in_class( Clause const& c, TargetClass target )
{
  return target == TargetClass::horn ? clause_is_horn( c ) : clause_is_krom( c );
}

SnfFormula::SnfFormula( OperatorSet ops, std::vector<std::string> init, std::vector<Clause> cls )
    : operators( ops ), initial( std::move( init ) ), clauses( std::move( cls ) )
{
  sort_unique( initial );
}

bool SnfFormula::is_false() const
{
  return std::any_of( clauses.begin(), clauses.end(), []( auto const& c ) { return c.empty(); } );
}

std::vector<std::string> SnfFormula::variables() const
{
  std::vector<std::string> out = initial;
  for ( auto const& c : clauses )
    for ( auto const& l : c.literals() )
      out.push_back( l.var );
  sort_unique( out );
  return out;
}

bool SnfFormula::in_class( TargetClass target ) const
{
  return std::all_of( clauses.begin(), clauses.end(),
                      [target]( auto const& c ) { return clause_in_class( c, target ); } );
}

ConsistentAssignment::ConsistentAssignment( std::vector<std::string> domain, OperatorSet ops )
    : domain_( std::move( domain ) ), ops_( ops )
{
  sort_unique( domain_ );
  bits_.assign( domain_.size() * 4u, 0u );
}

std::optional<std::size_t> ConsistentAssignment::index_of( std::string_view var ) const
{
  auto it = std::lower_bound( domain_.begin(), domain_.end(), var );
  if ( it == domain_.end() || *it != var )
    return std::nullopt;
  return static_cast<std::size_t>( it - domain_.begin() );
}

std::optional<bool> ConsistentAssignment::value( std::string_view var, Modality m ) const
{
  auto idx = index_of( var );
  if ( !idx )
    return std::nullopt;
  return value_at( *idx, m );
}

bool ConsistentAssignment::value_at( std::size_t index, Modality m ) const
{
  if ( !ops_.admits( m ) )
    throw std::invalid_argument( std::string( "modality " ) + std::string( modality_tag( m ) ) +
                                 " is not in the operator set of the assignment" );
  return bits_[index * 4u + static_cast<std::size_t>( m )] != 0;
}

void ConsistentAssignment::set( std::string_view var, Modality m, bool v )
{
  auto idx = index_of( var );
  if ( !idx )
    throw std::invalid_argument( "variable '" + std::string( var ) + "' is not in the assignment domain" );
  set_at( *idx, m, v );
}

void ConsistentAssignment::set_at( std::size_t index, Modality m, bool v )
{
  if ( !ops_.admits( m ) )
    throw std::invalid_argument( "modality is not in the operator set of the assignment" );
  bits_[index * 4u + static_cast<std::size_t>( m )] = v ? 1u : 0u;
}

bool ConsistentAssignment::is_consistent() const
{
  if ( !ops_.contains( Modality::always ) )
    return true;
  for ( std::size_t i = 0; i < domain_.size(); ++i )
  {
    if ( !value_at( i, Modality::always ) )
      continue;
    if ( !value_at( i, Modality::none ) )
      return false;
    for ( auto m : ops_.members() )
      if ( !value_at( i, m ) )
        return false;
  }
  return true;
}

std::optional<bool> ConsistentAssignment::evaluate( Literal const& lit ) const
{
  auto v = value( lit.var, lit.modality );
  if ( !v )
    return std::nullopt;
  return *v == lit.positive;
}

std::size_t consistent_patterns_per_variable( OperatorSet ops )
{
  std::size_t const slots = 1u + ops.size();
  std::size_t const raw = std::size_t{ 1 } << slots;
  if ( !ops.contains( Modality::always ) )
    return raw;
  /* [*]x = 0 leaves the other slots free; [*]x = 1 fixes them */
  return raw / 2 + 1;
}

void for_each_consistent_assignment( std::vector<std::string> domain, OperatorSet ops,
                                     std::function<bool( ConsistentAssignment const& )> const& visit )
{
  ConsistentAssignment theta( std::move( domain ), ops );
  std::size_t const n = theta.domain().size();

  std::vector<Modality> keys{ Modality::none };
  for ( auto m : ops.members() )
    keys.push_back( m );

  /* consistent local patterns of one variable in lexicographic order over `keys` */
  std::vector<std::vector<bool>> patterns;
  for ( std::size_t code = 0; code < ( std::size_t{ 1 } << keys.size() ); ++code )
  {
    std::vector<bool> p( keys.size() );
    for ( std::size_t j = 0; j < keys.size(); ++j )
      p[j] = ( code >> ( keys.size() - 1 - j ) ) & 1u;
    bool const star_set = [&] {
      for ( std::size_t j = 0; j < keys.size(); ++j )
        if ( keys[j] == Modality::always )
          return static_cast<bool>( p[j] );
      return false;
    }();
    if ( star_set && !std::all_of( p.begin(), p.end(), []( bool b ) { return b; } ) )
      continue;
    patterns.push_back( std::move( p ) );
  }

  std::vector<std::size_t> digit( n, 0 );
  auto apply = [&]( std::size_t var ) {
    auto const& p = patterns[digit[var]];
    for ( std::size_t j = 0; j < keys.size(); ++j )
      theta.set_at( var, keys[j], p[j] );
  };
  for ( std::size_t v = 0; v < n; ++v )
    apply( v );

  while ( true )
  {
    if ( !visit( theta ) )
      return;
    /* odometer with the first variable most significant */
    std::size_t pos = n;
    while ( pos > 0 )
    {
      --pos;
      if ( ++digit[pos] < patterns.size() )
      {
        apply( pos );
        break;
      }
      digit[pos] = 0;
      apply( pos );
      if ( pos == 0 )
        return;
    }
    if ( n == 0 )
      return;
  }
}

std::vector<ConsistentAssignment> consistent_assignments( std::vector<std::string> domain, OperatorSet ops )
{
  std::vector<ConsistentAssignment> out;
  for_each_consistent_assignment( std::move( domain ), ops, [&]( auto const& theta ) {
    out.push_back( theta );
    return true;
  } );
  return out;
}

std::optional<Clause> reduce_clause( Clause const& c, ConsistentAssignment const& theta )
{
  std::vector<Literal> rest;
  for ( auto const& lit : c.literals() )
  {
    auto v = theta.evaluate( lit );
    if ( !v )
      rest.push_back( lit );
    else if ( *v )
      return std::nullopt;
  }
  return Clause( std::move( rest ) );
}

SnfFormula reduct( SnfFormula const& phi, ConsistentAssignment const& theta )
{
  auto const vars = phi.variables();
  for ( auto const& x : theta.domain() )
    if ( !std::binary_search( vars.begin(), vars.end(), x ) )
      throw std::invalid_argument( "assignment mentions variable '" + x + "' which does not occur in the formula" );

  std::vector<std::string> facts;
  for ( auto const& f : phi.initial )
  {
    auto v = theta.value( f, Modality::none );
    if ( !v )
      facts.push_back( f );
    else if ( !*v )
      return SnfFormula::make_false( phi.operators );
  }

  std::vector<Clause> rest;
  for ( auto const& c : phi.clauses )
  {
    auto r = reduce_clause( c, theta );
    if ( !r )
      continue;
    if ( r->empty() )
      return SnfFormula::make_false( phi.operators );
    rest.push_back( std::move( *r ) );
  }
  return SnfFormula( phi.operators, std::move( facts ), std::move( rest ) );
}

bool is_always_tautology( Clause const& c )
{
  for ( auto const& lit : c.literals() )
  {
    if ( lit.positive || lit.modality != Modality::always )
      continue;
    for ( auto m : { Modality::none, Modality::past, Modality::future } )
      if ( c.contains( Literal::pos( lit.var, m ) ) )
        return true;
  }
  return false;
}

bool has_complementary_pair( Clause const& c )
{
  for ( auto const& lit : c.literals() )
    if ( !lit.positive && c.contains( lit.negated() ) )
      return true;
  return false;
}

namespace
{

template<typename Pred>
SnfFormula drop_clauses( SnfFormula const& phi, Pred&& drop )
{
  std::vector<Clause> kept;
  for ( auto const& c : phi.clauses )
    if ( !drop( c ) )
      kept.push_back( c );
  return SnfFormula( phi.operators, phi.initial, std::move( kept ) );
}

} // namespace

SnfFormula remove_tautologies( SnfFormula const& phi )
{
  return drop_clauses( phi, is_always_tautology );
}

SnfFormula remove_complementary_clauses( SnfFormula const& phi )
{
  return drop_clauses( phi, has_complementary_pair );
}

SnfFormula remove_valid_clauses( SnfFormula const& phi )
{
  return drop_clauses( phi, []( Clause const& c ) { return is_always_tautology( c ) || has_complementary_pair( c ); } );
}

std::vector<std::string> validate_normal_form( SnfFormula const& phi )
{
  std::vector<std::string> out;
  std::set<std::string> clause_vars;
  for ( std::size_t i = 0; i < phi.clauses.size(); ++i )
  {
    for ( auto const& lit : phi.clauses[i].literals() )
    {
      clause_vars.insert( lit.var );
      if ( !is_valid_variable_name( lit.var ) )
        out.push_back( "clause " + std::to_string( i + 1 ) + ": invalid variable name '" + lit.var + "'" );
      if ( !phi.operators.admits( lit.modality ) )
        out.push_back( "clause " + std::to_string( i + 1 ) + ": operator " + std::string( modality_tag( lit.modality ) ) +
                       " is not declared (literal " + to_string( lit ) + ")" );
    }
  }
  for ( auto const& f : phi.initial )
  {
    if ( !is_valid_variable_name( f ) )
      out.push_back( "initial fact: invalid variable name '" + f + "'" );
    if ( !clause_vars.contains( f ) )
      out.push_back( "initial fact '" + f + "' does not occur in any clause" );
  }
  return out;
}

} // namespace ltlbd
