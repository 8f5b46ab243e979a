/*!
  \file propsat.hpp
  \brief Propositional CNF over structured atoms with Horn, 2-SAT and
         brute-force backends.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ltlbd
{

enum class AtomKind : std::uint8_t
{
  plain,
  global, /* stand-in for [*]v */
  copy,   /* v^index_label */
};

/* Identity is structural on (kind, var, index, label). */
struct PropAtom
{
  AtomKind kind = AtomKind::plain;
  std::string var;
  int index = 0;
  std::string label;

  static PropAtom plain( std::string v ) { return { AtomKind::plain, std::move( v ), 0, {} }; }
  static PropAtom global( std::string v ) { return { AtomKind::global, std::move( v ), 0, {} }; }
  static PropAtom copy( std::string v, int i, std::string label );

  friend auto operator<=>( PropAtom const&, PropAtom const& ) = default;
};

std::string to_string( PropAtom const& a );

struct PropLiteral
{
  PropAtom atom;
  bool positive = true;

  friend auto operator<=>( PropLiteral const&, PropLiteral const& ) = default;
};

using PropClause = std::vector<PropLiteral>;

struct PropCnf
{
  std::vector<PropClause> clauses;

  /* sorts and deduplicates the literals */
  void add( PropClause c );
  void append( PropCnf const& other );

  bool is_horn() const;
  bool is_krom() const;
  std::size_t size() const { return clauses.size(); }
  std::size_t literal_count() const;

  /* sorted, unique */
  std::vector<PropAtom> atoms() const;
};

/* Atoms absent from the map are false. */
using PropModel = std::map<PropAtom, bool>;

bool satisfies( PropModel const& model, PropCnf const& f );

/*! \brief Horn-SAT by counter-based unit propagation.

  Returns the least model (true exactly on the atoms forced by propagation)
  or nullopt. Throws std::invalid_argument on non-Horn input. Each literal
  occurrence is touched a bounded number of times; `literal_visits`, when
  given, receives the count for instrumentation.
*/
std::optional<PropModel> horn_sat( PropCnf const& f, std::size_t* literal_visits = nullptr );

/*! \brief 2-SAT on the implication graph; throws on non-Krom input. */
std::optional<PropModel> two_sat( PropCnf const& f );

inline constexpr std::size_t brute_sat_atom_budget = 24;

/*! \brief Exhaustive search in sorted atom order, first atom most significant,
    0 before 1. Throws std::length_error above the atom budget. */
std::optional<PropModel> brute_sat( PropCnf const& f );

/*! \brief DIMACS-CNF with atoms numbered 1.. in sorted order; `names`
    receives one "<index> <atom>" line per atom. */
void write_dimacs( std::ostream& cnf, std::ostream& names, PropCnf const& f );

} // namespace ltlbd
