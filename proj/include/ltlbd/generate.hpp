/*!
  \file generate.hpp
  \brief Random formulas with a planted strong backdoor.

  Only the literals over the planted set X may break the target class, so
  every reduct by an assignment to X is in the class. Output depends only on
  the options (the random draws avoid implementation-defined distributions).
*/

#pragma once

#include <ltlbd/detection.hpp>
#include <ltlbd/formula.hpp>

#include <cstdint>
#include <random>

namespace ltlbd
{

struct GenOptions
{
  std::size_t vars = 6;
  std::size_t clauses = 8;
  TargetClass target = TargetClass::horn;
  std::size_t backdoor_size = 1;
  OperatorSet ops{ Modality::always };
  std::uint64_t seed = 1;
  std::size_t max_literals = 4;
  unsigned fact_percent = 25;
};

struct PlantedInstance
{
  SnfFormula formula;
  VariableSet backdoor; /* sorted */
};

/* Throws std::invalid_argument when backdoor_size > vars or vars == 0. */
PlantedInstance generate_planted( GenOptions const& opt );

/* uniform in [0, n) from a single 64-bit draw */
std::uint64_t draw_below( std::mt19937_64& rng, std::uint64_t n );

} // namespace ltlbd
