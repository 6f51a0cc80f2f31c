#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace sekwl {

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Node 0 is the center, 1..n-1 are leaves.
Graph star_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Z4 x Z4, adjacent iff same row or same column.
Graph rook4x4();
/// Z4 x Z4, adjacent iff the difference is one of ±(1,0), ±(0,1), ±(1,1).
Graph shrikhande();
/// Uniform simple r-regular graph via the pairing model with full restart.
Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Generator spec grammar:
///   spec   := term ('+' term)*            ('+' is disjoint union)
///   term   := kind (':' key '=' value (',' key '=' value)*)?
///   kind   := cycle | complete | star | path | rook4x4 | shrikhande
///           | random_regular | erdos_renyi
/// Randomised kinds take `seed=`; when absent, term i (0-based) uses
/// derive_seed(default_seed, 0, i).
Graph generate(std::string_view spec, std::uint64_t default_seed = 0);

extern const char* const kGeneratorGrammar;

}  // namespace sekwl
