#include <ltlbd/cdcl.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ltlbd
{

namespace
{

double luby( std::size_t i )
{
  /* i-th element (0-based) of 1,1,2,1,1,2,4,... */
  std::size_t size = 1, seq = 0;
  while ( size < i + 1 )
  {
    ++seq;
    size = 2 * size + 1;
  }
  while ( size - 1 != i )
  {
    size = ( size - 1 ) / 2;
    --seq;
    i = i % size;
  }
  return static_cast<double>( std::size_t{ 1 } << seq );
}

} // namespace

CdclSolver::Lit CdclSolver::encode( int dimacs )
{
  if ( dimacs == 0 )
    throw std::invalid_argument( "literal 0 is not a variable" );
  auto const var = static_cast<Lit>( std::abs( dimacs ) - 1 );
  return 2 * var + ( dimacs < 0 ? 1u : 0u );
}

std::int8_t CdclSolver::value( Lit l ) const
{
  auto const a = assigns_[l >> 1];
  if ( a == undef )
    return undef;
  return static_cast<std::int8_t>( a ^ static_cast<std::int8_t>( l & 1u ) );
}

int CdclSolver::new_var()
{
  assigns_.push_back( undef );
  level_.push_back( 0 );
  reason_.push_back( no_reason );
  phase_.push_back( false );
  activity_.push_back( 0.0 );
  seen_.push_back( false );
  watches_.emplace_back();
  watches_.emplace_back();
  return num_vars();
}

void CdclSolver::enqueue( Lit l, int reason )
{
  assigns_[l >> 1] = static_cast<std::int8_t>( ( l & 1u ) ? 0 : 1 );
  level_[l >> 1] = decision_level();
  reason_[l >> 1] = reason;
  trail_.push_back( l );
}

int CdclSolver::attach( std::vector<Lit> lits )
{
  int const ci = static_cast<int>( clauses_.size() );
  watches_[lits[0]].push_back( ci );
  watches_[lits[1]].push_back( ci );
  clauses_.push_back( std::move( lits ) );
  return ci;
}

void CdclSolver::add_clause( std::vector<int> dimacs )
{
  if ( decision_level() != 0 )
    throw std::logic_error( "clauses can only be added at the root level" );
  if ( inconsistent_ )
    return;
  std::vector<Lit> lits;
  for ( int d : dimacs )
  {
    if ( std::abs( d ) > num_vars() )
      throw std::invalid_argument( "literal refers to an unknown variable" );
    lits.push_back( encode( d ) );
  }
  std::sort( lits.begin(), lits.end() );
  lits.erase( std::unique( lits.begin(), lits.end() ), lits.end() );
  std::vector<Lit> kept;
  for ( std::size_t i = 0; i < lits.size(); ++i )
  {
    if ( i + 1 < lits.size() && ( lits[i] ^ 1u ) == lits[i + 1] )
      return; /* tautology */
    auto const v = value( lits[i] );
    if ( v == 1 )
      return;
    if ( v == undef )
      kept.push_back( lits[i] );
  }
  if ( kept.empty() )
  {
    inconsistent_ = true;
    return;
  }
  if ( kept.size() == 1 )
  {
    enqueue( kept[0], no_reason );
    if ( propagate() != no_reason )
      inconsistent_ = true;
    return;
  }
  attach( std::move( kept ) );
}

int CdclSolver::propagate()
{
  while ( qhead_ < trail_.size() )
  {
    Lit const p = trail_[qhead_++];
    Lit const false_lit = p ^ 1u;
    auto& ws = watches_[false_lit];
    std::size_t j = 0;
    for ( std::size_t i = 0; i < ws.size(); ++i )
    {
      int const ci = ws[i];
      auto& c = clauses_[static_cast<std::size_t>( ci )];
      if ( c[0] == false_lit )
        std::swap( c[0], c[1] );
      if ( value( c[0] ) == 1 )
      {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for ( std::size_t k = 2; k < c.size(); ++k )
        if ( value( c[k] ) != 0 )
        {
          std::swap( c[1], c[k] );
          watches_[c[1]].push_back( ci );
          moved = true;
          break;
        }
      if ( moved )
        continue;
      ws[j++] = ci;
      if ( value( c[0] ) == 0 )
      {
        for ( ++i; i < ws.size(); ++i )
          ws[j++] = ws[i];
        ws.resize( j );
        qhead_ = trail_.size();
        return ci;
      }
      enqueue( c[0], ci );
    }
    ws.resize( j );
  }
  return no_reason;
}

void CdclSolver::bump( std::uint32_t var )
{
  activity_[var] += bump_inc_;
  if ( activity_[var] > 1e100 )
  {
    for ( auto& a : activity_ )
      a *= 1e-100;
    bump_inc_ *= 1e-100;
  }
}

void CdclSolver::analyze( int conflict, std::vector<Lit>& learnt, int& backjump )
{
  learnt.assign( 1, 0 );
  int path = 0;
  Lit p = 0;
  bool have_p = false;
  std::size_t idx = trail_.size();
  int ci = conflict;

  do
  {
    for ( Lit q : clauses_[static_cast<std::size_t>( ci )] )
    {
      if ( have_p && q == p )
        continue;
      auto const v = q >> 1;
      if ( seen_[v] || level_[v] == 0 )
        continue;
      seen_[v] = true;
      bump( v );
      if ( level_[v] == decision_level() )
        ++path;
      else
        learnt.push_back( q );
    }
    do
      --idx;
    while ( !seen_[trail_[idx] >> 1] );
    p = trail_[idx];
    have_p = true;
    ci = reason_[p >> 1];
    seen_[p >> 1] = false;
    --path;
  } while ( path > 0 );
  learnt[0] = p ^ 1u;

  backjump = 0;
  std::size_t max_i = 1;
  for ( std::size_t i = 1; i < learnt.size(); ++i )
  {
    seen_[learnt[i] >> 1] = false;
    if ( level_of( learnt[i] ) > backjump )
    {
      backjump = level_of( learnt[i] );
      max_i = i;
    }
  }
  if ( learnt.size() > 1 )
    std::swap( learnt[1], learnt[max_i] );
  bump_inc_ /= 0.95;
}

void CdclSolver::cancel_until( int level )
{
  if ( decision_level() <= level )
    return;
  auto const stop = trail_lim_[static_cast<std::size_t>( level )];
  for ( std::size_t i = trail_.size(); i > stop; --i )
  {
    auto const v = trail_[i - 1] >> 1;
    phase_[v] = assigns_[v] == 1;
    assigns_[v] = undef;
    reason_[v] = no_reason;
  }
  trail_.resize( stop );
  trail_lim_.resize( static_cast<std::size_t>( level ) );
  qhead_ = trail_.size();
}

int CdclSolver::pick_branch() const
{
  int best = -1;
  for ( std::size_t v = 0; v < assigns_.size(); ++v )
    if ( assigns_[v] == undef && ( best < 0 || activity_[v] > activity_[static_cast<std::size_t>( best )] ) )
      best = static_cast<int>( v );
  return best;
}

bool CdclSolver::solve( std::vector<int> const& assumptions )
{
  if ( inconsistent_ )
    return false;
  std::vector<Lit> assume;
  for ( int a : assumptions )
    assume.push_back( encode( a ) );

  if ( propagate() != no_reason )
  {
    inconsistent_ = true;
    return false;
  }

  std::size_t restart_index = 0;
  std::size_t budget = static_cast<std::size_t>( 64 * luby( restart_index ) );
  std::size_t since_restart = 0;
  std::vector<Lit> learnt;

  while ( true )
  {
    int const confl = propagate();
    if ( confl != no_reason )
    {
      ++conflicts_;
      ++since_restart;
      if ( decision_level() == 0 )
      {
        inconsistent_ = true;
        return false;
      }
      int backjump = 0;
      analyze( confl, learnt, backjump );
      cancel_until( backjump );
      if ( learnt.size() == 1 )
        enqueue( learnt[0], no_reason );
      else
      {
        int const ci = attach( learnt );
        enqueue( learnt[0], ci );
      }
      continue;
    }

    if ( since_restart >= budget )
    {
      cancel_until( 0 );
      since_restart = 0;
      budget = static_cast<std::size_t>( 64 * luby( ++restart_index ) );
      continue;
    }

    Lit next = 0;
    bool have_next = false;
    while ( static_cast<std::size_t>( decision_level() ) < assume.size() )
    {
      Lit const a = assume[static_cast<std::size_t>( decision_level() )];
      if ( value( a ) == 1 )
        trail_lim_.push_back( trail_.size() );
      else if ( value( a ) == 0 )
      {
        cancel_until( 0 );
        return false;
      }
      else
      {
        next = a;
        have_next = true;
        break;
      }
    }
    if ( !have_next )
    {
      int const v = pick_branch();
      if ( v < 0 )
      {
        model_.assign( assigns_.size(), false );
        for ( std::size_t i = 0; i < assigns_.size(); ++i )
          model_[i] = assigns_[i] == 1;
        cancel_until( 0 );
        return true;
      }
      next = 2 * static_cast<Lit>( v ) + ( phase_[static_cast<std::size_t>( v )] ? 0u : 1u );
    }
    trail_lim_.push_back( trail_.size() );
    enqueue( next, no_reason );
  }
}

} // namespace ltlbd
