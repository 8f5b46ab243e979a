// ltlbd: backdoor detection, evaluation and model checking for clausal
// temporal formulas.
//
// Payload goes to stdout (or -o), the run report to stderr as "key: value"
// lines. Exit codes: 0 success, 1 negative answer, 2 input error,
// 3 contract violation.

#include <ltlbd/detection.hpp>
#include <ltlbd/evaluation.hpp>
#include <ltlbd/generate.hpp>
#include <ltlbd/io.hpp>
#include <ltlbd/oracle.hpp>
#include <ltlbd/reductions.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ltlbd;

namespace
{

enum Exit
{
  exit_ok = 0,
  exit_negative = 1,
  exit_input = 2,
  exit_contract = 3,
};

struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct Report
{
  std::string command;
  std::string verdict;
  std::vector<std::string> certificates;
  std::vector<std::pair<std::string, std::string>> stats;

  void stat( std::string key, std::string value ) { stats.emplace_back( std::move( key ), std::move( value ) ); }
  void stat( std::string key, std::size_t value ) { stat( std::move( key ), std::to_string( value ) ); }

  void instance( SnfFormula const& phi )
  {
    stat( "vars", phi.variables().size() );
    stat( "clauses", phi.clauses.size() );
    stat( "facts", phi.initial.size() );
  }
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw InputError( "cannot open '" + path + "'" );
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file( std::string const& path, std::string const& text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << text ) )
    throw InputError( "cannot write '" + path + "'" );
}

/* payload to -o when given, stdout otherwise */
void emit( std::string const& out_path, std::string const& text, Report& r )
{
  if ( out_path.empty() )
    std::cout << text;
  else
  {
    write_file( out_path, text );
    r.certificates.push_back( out_path );
  }
}

SnfFormula load_formula( std::string const& path )
{
  auto doc = parse_snf_document_string( read_file( path ) );
  if ( !doc.violations.empty() )
    throw InputError( doc.violations.front() );
  auto const issues = validate_normal_form( doc.formula );
  if ( !issues.empty() )
    throw InputError( "not in normal form: " + issues.front() );
  return std::move( doc.formula );
}

OperatorSet parse_ops_flag( std::string const& text )
{
  OperatorSet ops;
  for ( char c : text )
  {
    if ( c == 'F' )
      ops.insert( Modality::future );
    else if ( c == 'P' )
      ops.insert( Modality::past );
    else if ( c == '*' )
      ops.insert( Modality::always );
    else if ( c != ' ' && c != ',' )
      throw InputError( std::string( "unknown operator '" ) + c + "' in --ops" );
  }
  return ops;
}

TargetClass parse_class( std::string const& s )
{
  if ( s == "horn" )
    return TargetClass::horn;
  if ( s == "krom" )
    return TargetClass::krom;
  throw InputError( "class must be horn or krom" );
}

/* ---- subcommands; each returns the exit code and fills the report ---- */

int cmd_validate( std::string const& file, Report& r )
{
  auto doc = parse_snf_document_string( read_file( file ) );
  auto issues = doc.violations;
  for ( auto const& s : validate_normal_form( doc.formula ) )
    issues.push_back( s );
  r.instance( doc.formula );
  for ( auto const& s : issues )
    std::cout << s << '\n';
  r.verdict = issues.empty() ? "VALID" : "INVALID";
  return issues.empty() ? exit_ok : exit_negative;
}

int cmd_detect( std::string const& file, std::string const& cls, std::size_t k, Report& r )
{
  auto const phi = load_formula( file );
  r.instance( phi );
  SearchStats stats;
  auto x = detect_backdoor( phi, parse_class( cls ), k, &stats );
  r.stat( "search_nodes", stats.nodes );
  if ( !x )
  {
    r.verdict = "NONE";
    return exit_negative;
  }
  if ( !verify_backdoor( remove_valid_clauses( phi ), *x, parse_class( cls ) ) )
    throw std::logic_error( "detected set failed verification" );
  r.verdict = "BACKDOOR_FOUND";
  r.stat( "backdoor_size", x->size() );
  std::cout << join_variables( *x ) << '\n';
  return exit_ok;
}

int cmd_evaluate( std::string const& file, std::string const& backdoor, std::string const& out,
                  std::string const& dump, Report& r )
{
  auto const phi = load_formula( file );
  r.instance( phi );
  VariableSet x;
  try
  {
    x = split_variables( backdoor );
  }
  catch ( std::invalid_argument const& e )
  {
    throw InputError( e.what() );
  }
  r.stat( "backdoor_size", x.size() );

  std::size_t dumped = 0;
  std::function<void( ThetaSet const&, PropCnf const& )> on_formula;
  if ( !dump.empty() )
    on_formula = [&]( ThetaSet const&, PropCnf const& f ) {
      auto const base = dump + std::to_string( ++dumped );
      std::ostringstream cnf, names;
      write_dimacs( cnf, names, f );
      write_file( base + ".cnf", cnf.str() );
      write_file( base + ".names", names.str() );
    };

  auto const res = evaluate_horn_star( phi, x, on_formula );
  r.stat( "candidates", res.stats.candidates );
  r.stat( "max_formula_clauses", res.stats.max_formula_size );
  r.stat( "clause_bound", res.stats.length_bound );
  if ( res.verdict == Verdict::unsat )
  {
    r.verdict = "UNSAT";
    return exit_negative;
  }
  r.verdict = "SAT";
  emit( out, model_to_string( from_assignment_set( res.witness->assignments ) ), r );
  return exit_ok;
}

int cmd_solve( std::string const& file, std::string const& oracle, int window, std::string const& out, Report& r )
{
  auto const phi = load_formula( file );
  r.instance( phi );
  OracleResult res;
  if ( oracle == "star" )
    res = star_sat_oracle( phi );
  else if ( oracle == "window" )
  {
    res = window_sat_oracle( phi, window );
    r.stat( "window", std::to_string( window ) );
  }
  else
    throw InputError( "oracle must be star or window" );
  r.stat( "candidates", res.candidates );
  r.verdict = to_string( res.verdict );
  if ( res.verdict != OracleVerdict::sat )
    return exit_negative;
  emit( out, model_to_string( *res.model ), r );
  return exit_ok;
}

int cmd_reduce( std::string const& file, std::string const& target, std::string const& out, Report& r )
{
  auto const g = parse_dimacs_col_string( read_file( file ) );
  ReductionTarget t;
  if ( target == "star-krom" )
    t = ReductionTarget::star_krom;
  else if ( target == "fp-horn" )
    t = ReductionTarget::fp_horn;
  else
    throw InputError( "target must be star-krom or fp-horn" );
  auto const red = reduce( g, t );
  r.instance( red.formula );
  r.stat( "backdoor", join_variables( red.backdoor ) );
  emit( out, snf_to_string( red.formula ), r );
  if ( !out.empty() )
  {
    write_file( out + ".backdoor", join_variables( red.backdoor ) + "\n" );
    r.certificates.push_back( out + ".backdoor" );
  }
  r.verdict = "VALID";
  return exit_ok;
}

int cmd_check_model( std::string const& formula, std::string const& model, Report& r )
{
  auto const phi = load_formula( formula );
  auto const m = parse_model_string( read_file( model ) );
  r.instance( phi );
  auto vars = m.variables();
  std::sort( vars.begin(), vars.end() );
  if ( vars != phi.variables() )
    throw InputError( "model variables do not match the formula's variables" );
  bool const ok = models( m, phi );
  r.verdict = ok ? "VALID" : "INVALID";
  return ok ? exit_ok : exit_negative;
}

int cmd_gen( GenOptions const& opt, std::string const& out, Report& r )
{
  auto const inst = generate_planted( opt );
  if ( !verify_backdoor( inst.formula, inst.backdoor, opt.target ) )
    throw std::logic_error( "generated formula does not have the planted backdoor" );
  r.instance( inst.formula );
  r.stat( "backdoor", join_variables( inst.backdoor ) );
  r.stat( "backdoor_size", inst.backdoor.size() );
  emit( out, snf_to_string( inst.formula ), r );
  if ( !out.empty() )
  {
    write_file( out + ".backdoor", join_variables( inst.backdoor ) + "\n" );
    r.certificates.push_back( out + ".backdoor" );
  }
  r.verdict = "VALID";
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Strong backdoors for clausal temporal formulas" };
  app.require_subcommand( 1 );

  std::string file, second, cls = "horn", backdoor, out, dump, oracle = "star", target = "star-krom",
                            ops_text = "*", plant = "horn";
  std::size_t k = 0;
  int window = 4;
  GenOptions gen;

  auto* validate = app.add_subcommand( "validate", "parse and check normal form" );
  validate->add_option( "file", file, "SNF file" )->required();

  auto* detect = app.add_subcommand( "detect", "find a strong backdoor of size at most k" );
  detect->add_option( "file", file, "SNF file" )->required();
  detect->add_option( "--class", cls, "horn or krom" );
  detect->add_option( "-k", k, "size bound" )->required();

  auto* evaluate = app.add_subcommand( "evaluate", "decide an always-only formula from a HORN backdoor" );
  evaluate->add_option( "file", file, "SNF file" )->required();
  evaluate->add_option( "--backdoor", backdoor, "comma-separated backdoor variables, may be empty" )
    ->required()
    ->expected( 0, 1 );
  evaluate->add_option( "-o,--model-out", out, "write the witness model here" );
  evaluate->add_option( "--dump-cnf", dump, "write every Horn formula as <prefix><n>.cnf/.names" );

  auto* solve = app.add_subcommand( "solve", "run a satisfiability oracle" );
  solve->add_option( "file", file, "SNF file" )->required();
  solve->add_option( "--oracle", oracle, "star or window" );
  solve->add_option( "--window", window, "window bound W (worlds 0..W)" );
  solve->add_option( "-o,--model-out", out, "write the witness model here" );

  auto* reduce_cmd = app.add_subcommand( "reduce", "3-colouring instance to a formula" );
  reduce_cmd->add_option( "graph", file, "DIMACS graph" )->required();
  reduce_cmd->add_option( "--target", target, "star-krom or fp-horn" );
  reduce_cmd->add_option( "-o,--out", out, "SNF output (backdoor goes to <out>.backdoor)" );

  auto* check = app.add_subcommand( "check-model", "check a model table against a formula" );
  check->add_option( "formula", file, "SNF file" )->required();
  check->add_option( "model", second, "model table" )->required();

  auto* gen_cmd = app.add_subcommand( "gen", "random formula with a planted backdoor" );
  gen_cmd->add_option( "--vars", gen.vars, "variable count" );
  gen_cmd->add_option( "--clauses", gen.clauses, "clause count" );
  gen_cmd->add_option( "--plant", plant, "horn or krom" );
  gen_cmd->add_option( "--backdoor-size", gen.backdoor_size, "planted backdoor size" );
  gen_cmd->add_option( "--ops", ops_text, "operators, e.g. '*' or 'FP'" );
  gen_cmd->add_option( "--seed", gen.seed, "random seed" );
  gen_cmd->add_option( "--max-literals", gen.max_literals, "literals per clause at most" );
  gen_cmd->add_option( "-o,--out", out, "SNF output (backdoor goes to <out>.backdoor)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e );
    return code == 0 ? exit_ok : exit_input;
  }

  Report r;
  for ( int i = 0; i < argc; ++i )
    r.command += ( i ? " " : "" ) + std::string( argv[i] );

  auto const t0 = std::chrono::steady_clock::now();
  int code = exit_ok;
  try
  {
    if ( *validate )
      code = cmd_validate( file, r );
    else if ( *detect )
      code = cmd_detect( file, cls, k, r );
    else if ( *evaluate )
      code = cmd_evaluate( file, backdoor, out, dump, r );
    else if ( *solve )
      code = cmd_solve( file, oracle, window, out, r );
    else if ( *reduce_cmd )
      code = cmd_reduce( file, target, out, r );
    else if ( *check )
      code = cmd_check_model( file, second, r );
    else if ( *gen_cmd )
    {
      gen.target = parse_class( plant );
      gen.ops = parse_ops_flag( ops_text );
      code = cmd_gen( gen, out, r );
    }
  }
  catch ( InputError const& e )
  {
    r.verdict = "ERROR";
    r.stat( "error", e.what() );
    code = exit_input;
  }
  catch ( ParseError const& e )
  {
    r.verdict = "ERROR";
    r.stat( "error", e.what() );
    code = exit_input;
  }
  catch ( std::length_error const& e )
  {
    r.verdict = "ERROR";
    r.stat( "error", e.what() );
    code = exit_input;
  }
  catch ( std::invalid_argument const& e )
  {
    r.verdict = "ERROR";
    r.stat( "error", e.what() );
    code = exit_contract;
  }
  catch ( std::exception const& e )
  {
    r.verdict = "ERROR";
    r.stat( "error", std::string( "internal: " ) + e.what() );
    code = exit_contract;
  }
  auto const ms =
      std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - t0 ).count();

  std::cerr << "command: " << r.command << '\n' << "verdict: " << r.verdict << '\n';
  for ( auto const& c : r.certificates )
    std::cerr << "certificate: " << c << '\n';
  std::cerr << "time_ms: " << ms << '\n';
  for ( auto const& [key, value] : r.stats )
    std::cerr << key << ": " << value << '\n';
  return code;
}
