#pragma once

#include <cstdint>

#include "domina/graph.hpp"

namespace domina {

// Exact floor/ceiling of sqrt(n) in pure integer arithmetic.
std::uint64_t isqrt_floor(std::uint64_t n);
std::uint64_t isqrt_ceil(std::uint64_t n);

enum class TypeVerdict { TYPE_I, TYPE_II, SCC2_UNDECIDED };

enum class TypeReason {
  G_DISCONNECTED,
  GBAR_DISCONNECTED,
  DIAM_G_GE_3,
  DIAM_GBAR_GE_3,
  RAD_OR_DIAM_G_IS_1,
  RAD_OR_DIAM_GBAR_IS_1,
  NONE,
};

const char* to_string(TypeVerdict v);
const char* to_string(TypeReason r);

// Verdict of the polynomial-time decision tree plus the branch that fired.
// SCC2_UNDECIDED <=> reason NONE <=> the graph is in SCC(2).
struct TypeDecision {
  TypeVerdict verdict;
  TypeReason reason;
};

struct NGRecord {
  int gamma_g;
  int gamma_gbar;
  int n;
  bool product_ok;  // gamma_g * gamma_gbar <= n
};

// Exact gamma on both sides and the product test.
NGRecord nordhaus_gaddum_check(const Graph& g);

// True iff radius and diameter of both g and its complement are finite and
// equal t.
bool is_scc(const Graph& g, int t);

// Decision tree over connectivity, diameter and radius of g and its
// complement; never calls the exponential solver. A TYPE_I verdict certifies
// gamma(g) <= floor(sqrt(n)), TYPE_II the same for the complement; the graph
// may additionally belong to the other type. Requires n >= 2 (TooSmall).
TypeDecision classify_fast(const Graph& g);

struct ExactTypes {
  bool type_i;   // gamma(g) <= floor(sqrt(n))
  bool type_ii;  // gamma(complement) <= floor(sqrt(n))
  int gamma_g;
  int gamma_gbar;
};

// Both type flags via the exact solver; at least one is always true.
ExactTypes classify_exact(const Graph& g);

}  // namespace domina
