#include <ltlbd/io.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace ltlbd
{

ParseError::ParseError( std::size_t line, std::size_t column, std::string const& what )
    : std::runtime_error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + what ),
      line_( line ),
      column_( column )
{
}

namespace
{

bool is_space( char c )
{
  return c == ' ' || c == '\t' || c == '\r';
}

/* [begin, end) of the line after comment removal and trimming; columns are 1-based */
struct Span
{
  std::string_view text;
  std::size_t column;
};

Span trim( Span s )
{
  std::size_t b = 0, e = s.text.size();
  while ( b < e && is_space( s.text[b] ) )
    ++b;
  while ( e > b && is_space( s.text[e - 1] ) )
    --e;
  return { s.text.substr( b, e - b ), s.column + b };
}

std::vector<Span> split( Span s, char sep )
{
  std::vector<Span> out;
  std::size_t start = 0;
  for ( std::size_t i = 0; i <= s.text.size(); ++i )
    if ( i == s.text.size() || s.text[i] == sep )
    {
      out.push_back( trim( { s.text.substr( start, i - start ), s.column + start } ) );
      start = i + 1;
    }
  return out;
}

/* strip "# ..." and return the directive keyword and its argument */
struct Directive
{
  std::string keyword;
  Span arg;
  std::size_t column;
};

std::optional<Directive> directive( std::string const& raw, std::size_t line )
{
  std::string_view text( raw );
  if ( auto h = text.find( '#' ); h != std::string_view::npos )
    text = text.substr( 0, h );
  auto s = trim( { text, 1 } );
  if ( s.text.empty() )
    return std::nullopt;
  auto colon = s.text.find( ':' );
  if ( colon == std::string_view::npos )
    throw ParseError( line, s.column, "expected 'keyword:'" );
  auto key = trim( { s.text.substr( 0, colon ), s.column } );
  return Directive{ std::string( key.text ), trim( { s.text.substr( colon + 1 ), s.column + colon + 1 } ),
                    s.column };
}

std::size_t parse_name( std::string_view text, std::size_t pos )
{
  std::size_t end = pos;
  if ( end < text.size() && std::isalpha( static_cast<unsigned char>( text[end] ) ) )
  {
    ++end;
    while ( end < text.size() &&
            ( std::isalnum( static_cast<unsigned char>( text[end] ) ) || text[end] == '_' ) )
      ++end;
  }
  return end;
}

std::string checked_name( Span s, std::size_t line )
{
  if ( s.text.empty() )
    throw ParseError( line, s.column, "missing variable name" );
  auto const end = parse_name( s.text, 0 );
  if ( end != s.text.size() )
    throw ParseError( line, s.column + end, "invalid variable name '" + std::string( s.text ) + "'" );
  return std::string( s.text );
}

/* nullopt for the constant-false literal */
std::optional<Literal> parse_literal( Span s, std::size_t line, std::vector<std::string>& violations )
{
  if ( s.text.empty() )
    throw ParseError( line, s.column, "empty literal" );
  std::size_t i = 0;
  auto skip = [&] {
    while ( i < s.text.size() && is_space( s.text[i] ) )
      ++i;
  };
  bool positive = true;
  if ( s.text[i] == '~' )
  {
    positive = false;
    ++i;
    skip();
  }
  std::vector<Modality> tags;
  while ( i < s.text.size() && s.text[i] == '[' )
  {
    if ( i + 2 >= s.text.size() || s.text[i + 2] != ']' )
      throw ParseError( line, s.column + i, "malformed operator tag" );
    switch ( s.text[i + 1] )
    {
    case 'F':
      tags.push_back( Modality::future );
      break;
    case 'P':
      tags.push_back( Modality::past );
      break;
    case '*':
      tags.push_back( Modality::always );
      break;
    default:
      throw ParseError( line, s.column + i + 1, std::string( "unknown operator tag '" ) + s.text[i + 1] + "'" );
    }
    i += 3;
    skip();
  }
  auto const rest = trim( { s.text.substr( i ), s.column + i } );
  if ( rest.text == "0" )
  {
    if ( !tags.empty() || !positive )
      throw ParseError( line, s.column, "the constant 0 takes no operator or negation" );
    return std::nullopt;
  }
  auto name = checked_name( rest, line );
  if ( tags.size() > 1 )
    violations.push_back( "line " + std::to_string( line ) + ", column " + std::to_string( s.column ) +
                          ": nested temporal operators in '" + std::string( s.text ) + "'" );
  return Literal{ std::move( name ), tags.empty() ? Modality::none : tags.front(), positive };
}

OperatorSet parse_operators( Span arg, std::size_t line )
{
  OperatorSet ops;
  std::size_t i = 0;
  while ( i < arg.text.size() )
  {
    if ( is_space( arg.text[i] ) )
    {
      ++i;
      continue;
    }
    std::size_t j = i;
    while ( j < arg.text.size() && !is_space( arg.text[j] ) )
      ++j;
    auto const tok = arg.text.substr( i, j - i );
    if ( tok == "F" )
      ops.insert( Modality::future );
    else if ( tok == "P" )
      ops.insert( Modality::past );
    else if ( tok == "*" )
      ops.insert( Modality::always );
    else
      throw ParseError( line, arg.column + i, "unknown operator '" + std::string( tok ) + "'" );
    i = j;
  }
  return ops;
}

std::vector<bool> parse_bits( Span arg, std::size_t line, std::size_t width )
{
  std::vector<bool> out;
  std::size_t i = 0;
  while ( i < arg.text.size() )
  {
    if ( is_space( arg.text[i] ) )
    {
      ++i;
      continue;
    }
    if ( arg.text[i] != '0' && arg.text[i] != '1' )
      throw ParseError( line, arg.column + i, "expected 0 or 1" );
    if ( i + 1 < arg.text.size() && !is_space( arg.text[i + 1] ) )
      throw ParseError( line, arg.column + i + 1, "values must be separated by spaces" );
    out.push_back( arg.text[i] == '1' );
    ++i;
  }
  if ( out.size() != width )
    throw ParseError( line, arg.column, "expected " + std::to_string( width ) + " values, got " +
                                            std::to_string( out.size() ) );
  return out;
}

long parse_int( std::string_view text, std::size_t line, std::size_t column )
{
  long v = 0;
  auto const* b = text.data();
  auto const* e = text.data() + text.size();
  auto [ptr, ec] = std::from_chars( b, e, v );
  if ( ec != std::errc() || ptr != e || text.empty() )
    throw ParseError( line, column, "expected an integer, got '" + std::string( text ) + "'" );
  return v;
}

} // namespace

SnfDocument parse_snf_document( std::istream& in )
{
  SnfDocument doc;
  std::optional<OperatorSet> ops;
  bool have_init = false;
  std::vector<std::string> init;
  std::vector<Clause> clauses;
  std::string raw;
  std::size_t line = 0;
  while ( std::getline( in, raw ) )
  {
    ++line;
    auto d = directive( raw, line );
    if ( !d )
      continue;
    if ( d->keyword == "operators" )
    {
      if ( ops )
        throw ParseError( line, d->column, "duplicate operators header" );
      if ( have_init || !clauses.empty() )
        throw ParseError( line, d->column, "operators header must come first" );
      ops = parse_operators( d->arg, line );
    }
    else if ( d->keyword == "init" )
    {
      if ( !ops )
        throw ParseError( line, d->column, "missing operators header" );
      if ( have_init )
        throw ParseError( line, d->column, "duplicate init line" );
      have_init = true;
      if ( !d->arg.text.empty() )
        for ( auto const& s : split( d->arg, ',' ) )
          init.push_back( checked_name( s, line ) );
    }
    else if ( d->keyword == "clause" )
    {
      if ( !ops )
        throw ParseError( line, d->column, "missing operators header" );
      std::vector<Literal> lits;
      if ( !d->arg.text.empty() )
        for ( auto const& s : split( d->arg, '|' ) )
          if ( auto l = parse_literal( s, line, doc.violations ) )
            lits.push_back( std::move( *l ) );
      clauses.emplace_back( std::move( lits ) );
    }
    else
      throw ParseError( line, d->column, "unknown directive '" + d->keyword + "'" );
  }
  if ( !ops )
    throw ParseError( line + 1, 1, "missing operators header" );
  doc.formula = SnfFormula( *ops, std::move( init ), std::move( clauses ) );
  return doc;
}

SnfDocument parse_snf_document_string( std::string const& text )
{
  std::istringstream in( text );
  return parse_snf_document( in );
}

SnfFormula parse_snf( std::istream& in )
{
  auto doc = parse_snf_document( in );
  if ( !doc.violations.empty() )
    throw std::runtime_error( doc.violations.front() );
  return std::move( doc.formula );
}

SnfFormula parse_snf_string( std::string const& text )
{
  std::istringstream in( text );
  return parse_snf( in );
}

void print_snf( std::ostream& out, SnfFormula const& phi )
{
  auto const ops = to_string( phi.operators );
  out << "operators:" << ( ops.empty() ? "" : " " ) << ops << '\n';
  if ( !phi.initial.empty() )
  {
    out << "init:";
    for ( std::size_t i = 0; i < phi.initial.size(); ++i )
      out << ( i ? ", " : " " ) << phi.initial[i];
    out << '\n';
  }
  for ( auto const& c : phi.clauses )
  {
    out << "clause:";
    for ( std::size_t i = 0; i < c.size(); ++i )
      out << ( i ? " | " : " " ) << to_string( c.literals()[i] );
    out << '\n';
  }
}

std::string snf_to_string( SnfFormula const& phi )
{
  std::ostringstream out;
  print_snf( out, phi );
  return out.str();
}

FiniteWindowInterpretation parse_model( std::istream& in )
{
  std::optional<std::vector<std::string>> vars;
  std::optional<long> start;
  std::optional<WorldAssignment> left, right;
  std::vector<WorldAssignment> window;
  std::optional<long> lo;
  std::string raw;
  std::size_t line = 0;

  auto need_vars = [&]( Directive const& d ) {
    if ( !vars )
      throw ParseError( line, d.column, "missing vars header" );
  };

  while ( std::getline( in, raw ) )
  {
    ++line;
    auto d = directive( raw, line );
    if ( !d )
      continue;
    if ( d->keyword == "vars" )
    {
      if ( vars )
        throw ParseError( line, d->column, "duplicate vars header" );
      vars.emplace();
      std::set<std::string> seen;
      std::istringstream toks{ std::string( d->arg.text ) };
      std::string v;
      while ( toks >> v )
      {
        checked_name( { v, d->arg.column }, line );
        if ( !seen.insert( v ).second )
          throw ParseError( line, d->arg.column, "duplicate variable '" + v + "'" );
        vars->push_back( v );
      }
    }
    else if ( d->keyword == "start" )
    {
      if ( start )
        throw ParseError( line, d->column, "duplicate start line" );
      start = parse_int( d->arg.text, line, d->arg.column );
    }
    else if ( d->keyword == "left" )
    {
      need_vars( *d );
      if ( left || !window.empty() )
        throw ParseError( line, d->column, "left row must come once, before the worlds" );
      left = parse_bits( d->arg, line, vars->size() );
    }
    else if ( d->keyword == "right" )
    {
      need_vars( *d );
      if ( right || window.empty() )
        throw ParseError( line, d->column, "right row must come once, after the worlds" );
      right = parse_bits( d->arg, line, vars->size() );
    }
    else if ( d->keyword.rfind( "world", 0 ) == 0 )
    {
      need_vars( *d );
      if ( !left || right )
        throw ParseError( line, d->column, "world rows go between left and right" );
      auto idx = trim( { std::string_view( d->keyword ).substr( 5 ), d->column + 5 } );
      long const k = parse_int( idx.text, line, idx.column );
      if ( !lo )
        lo = k;
      else if ( k != *lo + static_cast<long>( window.size() ) )
        throw ParseError( line, idx.column, "world indices must be consecutive" );
      window.push_back( parse_bits( d->arg, line, vars->size() ) );
    }
    else
      throw ParseError( line, d->column, "unknown directive '" + d->keyword + "'" );
  }
  if ( !vars || !start || !left || !right || window.empty() )
    throw ParseError( line + 1, 1, "model table needs vars, start, left, world and right lines" );
  try
  {
    return FiniteWindowInterpretation( std::move( *vars ), std::move( *left ), std::move( window ),
                                       static_cast<int>( *lo ), std::move( *right ), static_cast<int>( *start ) );
  }
  catch ( std::invalid_argument const& e )
  {
    throw ParseError( line + 1, 1, e.what() );
  }
}

FiniteWindowInterpretation parse_model_string( std::string const& text )
{
  std::istringstream in( text );
  return parse_model( in );
}

void print_model( std::ostream& out, FiniteWindowInterpretation const& m )
{
  auto row = [&]( WorldAssignment const& r ) {
    for ( bool b : r )
      out << ' ' << ( b ? '1' : '0' );
    out << '\n';
  };
  out << "vars:";
  for ( auto const& v : m.variables() )
    out << ' ' << v;
  out << '\n' << "start: " << m.start() << '\n' << "left:";
  row( m.left() );
  for ( int z = m.lo(); z <= m.hi(); ++z )
  {
    out << "world " << z << ':';
    row( m.row( z ) );
  }
  out << "right:";
  row( m.right() );
}

std::string model_to_string( FiniteWindowInterpretation const& m )
{
  std::ostringstream out;
  print_model( out, m );
  return out.str();
}

Graph parse_dimacs_col( std::istream& in )
{
  std::optional<std::pair<int, std::size_t>> header;
  std::vector<std::pair<int, int>> edges;
  std::string raw;
  std::size_t line = 0;
  while ( std::getline( in, raw ) )
  {
    ++line;
    std::istringstream toks( raw );
    std::string kind;
    if ( !( toks >> kind ) || kind == "c" )
      continue;
    if ( kind == "p" )
    {
      std::string format;
      long n = 0, m = 0;
      if ( header )
        throw ParseError( line, 1, "duplicate problem line" );
      if ( !( toks >> format >> n >> m ) || ( format != "edge" && format != "col" ) || n < 0 || m < 0 )
        throw ParseError( line, 1, "expected 'p edge <n> <m>'" );
      header.emplace( static_cast<int>( n ), static_cast<std::size_t>( m ) );
    }
    else if ( kind == "e" )
    {
      long i = 0, j = 0;
      if ( !header )
        throw ParseError( line, 1, "edge before problem line" );
      if ( !( toks >> i >> j ) )
        throw ParseError( line, 1, "expected 'e <i> <j>'" );
      edges.emplace_back( static_cast<int>( i ), static_cast<int>( j ) );
    }
    else
      throw ParseError( line, 1, "unknown line type '" + kind + "'" );
    std::string extra;
    if ( toks >> extra )
      throw ParseError( line, 1, "trailing token '" + extra + "'" );
  }
  if ( !header )
    throw ParseError( line + 1, 1, "missing problem line" );
  if ( edges.size() != header->second )
    throw ParseError( line + 1, 1, "problem line announces " + std::to_string( header->second ) + " edges, found " +
                                       std::to_string( edges.size() ) );
  try
  {
    return Graph::make( header->first, std::move( edges ) );
  }
  catch ( std::invalid_argument const& e )
  {
    throw ParseError( line + 1, 1, e.what() );
  }
}

Graph parse_dimacs_col_string( std::string const& text )
{
  std::istringstream in( text );
  return parse_dimacs_col( in );
}

void print_dimacs_col( std::ostream& out, Graph const& g )
{
  out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
  for ( auto [i, j] : g.edges )
    out << "e " << i << ' ' << j << '\n';
}

std::string join_variables( std::vector<std::string> const& vars )
{
  std::string out;
  for ( std::size_t i = 0; i < vars.size(); ++i )
    out += ( i ? "," : "" ) + vars[i];
  return out;
}

std::vector<std::string> split_variables( std::string const& text )
{
  std::vector<std::string> out;
  for ( auto const& s : split( { text, 1 }, ',' ) )
  {
    if ( s.text.empty() )
    {
      if ( text.find_first_not_of( " \t" ) == std::string::npos )
        break;
      throw std::invalid_argument( "empty variable name in list '" + text + "'" );
    }
    if ( parse_name( s.text, 0 ) != s.text.size() )
      throw std::invalid_argument( "invalid variable name '" + std::string( s.text ) + "'" );
    out.emplace_back( s.text );
  }
  return out;
}

} // namespace ltlbd
