/*!
  \file formula.hpp
  \brief Clausal temporal formulas: literals, clauses, operator sets,
         consistent assignments and reducts.

  A formula is a conjunction of initial facts (bare variables that must
  hold at the starting world) and a set of clauses that hold at every
  world. Clause literals carry at most one modality and are never nested.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ltlbd
{

/* Declaration order is the canonical order: none < past < future < always. */
enum class Modality : std::uint8_t
{
  none = 0,
  past = 1,
  future = 2,
  always = 3,
};

inline constexpr Modality all_modalities[] = { Modality::none, Modality::past, Modality::future, Modality::always };

/* "", "[P]", "[F]", "[*]" */
std::string_view modality_tag( Modality m );

/*! \brief A subset of the three temporal operators. */
class OperatorSet
{
public:
  constexpr OperatorSet() = default;
  OperatorSet( std::initializer_list<Modality> ops );

  static OperatorSet all();

  /* `none` is never a member; use admits() for occurrence checks. */
  bool contains( Modality m ) const;
  bool admits( Modality m ) const { return m == Modality::none || contains( m ); }
  void insert( Modality m );
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool is_subset_of( OperatorSet other ) const { return ( bits_ & ~other.bits_ ) == 0; }

  /* members in canonical order (past, future, always) */
  std::vector<Modality> members() const;

  friend bool operator==( OperatorSet, OperatorSet ) = default;

private:
  std::uint8_t bits_ = 0;
};

/* Header form, e.g. "F P *". */
std::string to_string( OperatorSet ops );

bool is_valid_variable_name( std::string_view name );

struct Literal
{
  std::string var;
  Modality modality = Modality::none;
  bool positive = true;

  static Literal pos( std::string var, Modality m = Modality::none ) { return { std::move( var ), m, true }; }
  static Literal neg( std::string var, Modality m = Modality::none ) { return { std::move( var ), m, false }; }

  Literal negated() const { return { var, modality, !positive }; }

  /* negatives first, then by variable name, then by modality */
  friend std::strong_ordering operator<=>( Literal const& a, Literal const& b );
  friend bool operator==( Literal const& a, Literal const& b ) = default;
};

std::string to_string( Literal const& lit );

/*! \brief A disjunction of temporal literals, stored sorted and duplicate-free. */
class Clause
{
public:
  Clause() = default;
  Clause( std::vector<Literal> literals );
  Clause( std::initializer_list<Literal> literals ) : Clause( std::vector<Literal>( literals ) ) {}

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  std::size_t positive_count() const;
  std::size_t negative_count() const { return size() - positive_count(); }

  /* sorted, unique */
  std::vector<std::string> variables() const;

  bool contains( Literal const& lit ) const;

  friend bool operator==( Clause const&, Clause const& ) = default;

private:
  std::vector<Literal> lits_;
};

std::string to_string( Clause const& c );

bool clause_is_horn( Clause const& c );
bool clause_is_krom( Clause const& c );

enum class TargetClass
{
  horn,
  krom,
};

bool clause_in_class( Clause const& c, TargetClass target );

/*! \brief Initial facts plus always-holding clauses over a declared operator set.

  The TRUE marker is a formula without clauses and facts; the FALSE marker is
  a formula whose only clause is empty.
*/
struct SnfFormula
{
  OperatorSet operators;
  std::vector<std::string> initial; /* sorted, unique */
  std::vector<Clause> clauses;

  SnfFormula() = default;
  SnfFormula( OperatorSet ops, std::vector<std::string> init, std::vector<Clause> cls );

  static SnfFormula make_true( OperatorSet ops ) { return SnfFormula( ops, {}, {} ); }
  static SnfFormula make_false( OperatorSet ops ) { return SnfFormula( ops, {}, { Clause{} } ); }

  bool is_true() const { return clauses.empty() && initial.empty(); }
  bool is_false() const;

  /* sorted union of fact and clause variables */
  std::vector<std::string> variables() const;

  bool in_class( TargetClass target ) const;

  friend bool operator==( SnfFormula const&, SnfFormula const& ) = default;
};

/*! \brief A truth assignment over X and the modal copies Ox (O in the operator set).

  Values are addressed by (variable, modality). Consistency requires that a
  true [*]x forces x and every other declared [O]x to be true.
*/
class ConsistentAssignment
{
public:
  ConsistentAssignment() = default;
  /* all values false; domain is sorted and deduplicated */
  ConsistentAssignment( std::vector<std::string> domain, OperatorSet ops );

  std::vector<std::string> const& domain() const { return domain_; }
  OperatorSet operators() const { return ops_; }

  std::optional<std::size_t> index_of( std::string_view var ) const;
  bool in_domain( std::string_view var ) const { return index_of( var ).has_value(); }

  /* nullopt when `var` is outside the domain; throws when `m` is not admitted */
  std::optional<bool> value( std::string_view var, Modality m ) const;
  bool value_at( std::size_t index, Modality m ) const;
  void set( std::string_view var, Modality m, bool v );
  void set_at( std::size_t index, Modality m, bool v );

  bool is_consistent() const;

  /* nullopt if the literal is unassigned */
  std::optional<bool> evaluate( Literal const& lit ) const;

  friend bool operator==( ConsistentAssignment const&, ConsistentAssignment const& ) = default;

private:
  std::vector<std::string> domain_;
  OperatorSet ops_;
  std::vector<std::uint8_t> bits_; /* 4 slots per variable, indexed by modality */
};

/*! \brief Visit every consistent assignment over X in canonical order.

  Keys are ordered by variable name, then modality (none < past < future <
  always); assignments are visited in lexicographic order with 0 before 1.
  The visitor returns false to stop early.
*/
void for_each_consistent_assignment( std::vector<std::string> domain, OperatorSet ops,
                                     std::function<bool( ConsistentAssignment const& )> const& visit );

std::vector<ConsistentAssignment> consistent_assignments( std::vector<std::string> domain, OperatorSet ops );

/* Number of consistent local patterns of a single variable. */
std::size_t consistent_patterns_per_variable( OperatorSet ops );

/* nullopt if the clause is satisfied; otherwise the clause with falsified literals removed */
std::optional<Clause> reduce_clause( Clause const& c, ConsistentAssignment const& theta );

/*! \brief phi[theta]: drop satisfied clauses, drop falsified literals.

  An emptied clause (or a false fact) collapses the result to the FALSE
  marker. Throws std::invalid_argument when the domain of theta mentions a
  variable absent from phi.
*/
SnfFormula reduct( SnfFormula const& phi, ConsistentAssignment const& theta );

/* Clauses containing ~[*]x together with a positive x, [P]x or [F]x. */
bool is_always_tautology( Clause const& c );
SnfFormula remove_tautologies( SnfFormula const& phi );

/* Clauses containing a literal and its complement. Not part of the default pipeline. */
bool has_complementary_pair( Clause const& c );
SnfFormula remove_complementary_clauses( SnfFormula const& phi );

/* Both passes: afterwards every clause is falsified by some consistent assignment. */
SnfFormula remove_valid_clauses( SnfFormula const& phi );

std::vector<std::string> validate_normal_form( SnfFormula const& phi );

} // namespace ltlbd
