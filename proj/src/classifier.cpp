#include "domina/classifier.hpp"

#include "domina/domination.hpp"
#include "domina/error.hpp"

namespace domina {

std::uint64_t isqrt_floor(std::uint64_t n) {
  if (n < 2) return n;
  // Newton iteration on integers, then settle on the exact floor. Floating
  // point would misplace perfect-square boundaries.
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while (x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
  const std::uint64_t f = isqrt_floor(n);
  return f * f == n ? f : f + 1;
}

const char* to_string(TypeVerdict v) {
  switch (v) {
    case TypeVerdict::TYPE_I: return "TYPE_I";
    case TypeVerdict::TYPE_II: return "TYPE_II";
    case TypeVerdict::SCC2_UNDECIDED: return "SCC2_UNDECIDED";
  }
  return "?";
}

const char* to_string(TypeReason r) {
  switch (r) {
    case TypeReason::G_DISCONNECTED: return "G_DISCONNECTED";
    case TypeReason::GBAR_DISCONNECTED: return "GBAR_DISCONNECTED";
    case TypeReason::DIAM_G_GE_3: return "DIAM_G_GE_3";
    case TypeReason::DIAM_GBAR_GE_3: return "DIAM_GBAR_GE_3";
    case TypeReason::RAD_OR_DIAM_G_IS_1: return "RAD_OR_DIAM_G_IS_1";
    case TypeReason::RAD_OR_DIAM_GBAR_IS_1: return "RAD_OR_DIAM_GBAR_IS_1";
    case TypeReason::NONE: return "NONE";
  }
  return "?";
}

NGRecord nordhaus_gaddum_check(const Graph& g) {
  if (g.order() == 0) fail(Errc::EmptyGraph, "Nordhaus-Gaddum check needs n >= 1");
  const int gg = gamma(g).value;
  const int gc = gamma(g.complement()).value;
  const int n = g.order();
  return NGRecord{gg, gc, n, static_cast<long long>(gg) * gc <= n};
}

bool is_scc(const Graph& g, int t) {
  const Metrics mg = metrics(g);
  if (mg.radius != t || mg.diameter != t) return false;
  const Metrics mc = metrics(g.complement());
  return mc.radius == t && mc.diameter == t;
}

TypeDecision classify_fast(const Graph& g) {
  if (g.order() <= 1) fail(Errc::TooSmall, "classification needs n >= 2");

  if (!is_connected(g)) return {TypeVerdict::TYPE_II, TypeReason::G_DISCONNECTED};
  const Graph gbar = g.complement();
  if (!is_connected(gbar)) return {TypeVerdict::TYPE_I, TypeReason::GBAR_DISCONNECTED};

  const Metrics mg = metrics(g);
  const Metrics mc = metrics(gbar);
  if (*mg.diameter >= 3) return {TypeVerdict::TYPE_II, TypeReason::DIAM_G_GE_3};
  if (*mc.diameter >= 3) return {TypeVerdict::TYPE_I, TypeReason::DIAM_GBAR_GE_3};
  if (*mg.diameter == 1 || *mg.radius == 1)
    return {TypeVerdict::TYPE_I, TypeReason::RAD_OR_DIAM_G_IS_1};
  if (*mc.diameter == 1 || *mc.radius == 1)
    return {TypeVerdict::TYPE_II, TypeReason::RAD_OR_DIAM_GBAR_IS_1};

  // Every branch above failed, so rad = diam = 2 on both sides.
  return {TypeVerdict::SCC2_UNDECIDED, TypeReason::NONE};
}

ExactTypes classify_exact(const Graph& g) {
  if (g.order() == 0) fail(Errc::EmptyGraph, "classification needs n >= 1");
  const auto root = static_cast<int>(isqrt_floor(static_cast<std::uint64_t>(g.order())));
  const int gg = gamma(g).value;
  const int gc = gamma(g.complement()).value;
  return ExactTypes{gg <= root, gc <= root, gg, gc};
}

}  // namespace domina
