#pragma once

#include "veronese/numeric.hpp"
#include "veronese/serialization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace veronese {

struct RunConfig {
  ResourceLimits limits;
  std::string format = "json";
  std::uint64_t seed = 20260101;
};

/// Overrides for the ratios suite; everything else runs at fixed parameters.
struct VerifyOptions {
  std::optional<std::string> theorem;
  std::optional<int> p, b, n;
  std::optional<int> d_min, d_max, d_step;
  std::optional<Rational> tolerance;
};

std::vector<std::string> verify_suites();

/// Runs a named suite: {"suite", "pass", "checks": [{"name", "pass", "detail"}]}.
/// The output depends only on the suite, the options and the seed.
Json run_verify(const std::string& suite, const RunConfig& cfg, const VerifyOptions& opt = {});

/// |value - target| <= tol * |target|
bool within_relative(const Rational& value, const Rational& target, const Rational& tol);

/// Exact value of a decimal literal such as "0.35" or "1/3".
Rational parse_rational(const std::string& s);

}  // namespace veronese
