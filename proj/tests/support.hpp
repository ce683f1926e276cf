#pragma once

#include "oracles.hpp"
#include "veronese/characters.hpp"

namespace test {

inline std::map<oracle::Vec, oracle::Int> terms(const veronese::SchurExpansion& e) {
  std::map<oracle::Vec, oracle::Int> out;
  for (const auto& [l, m] : e.terms()) out[l.parts()] = m;
  return out;
}

inline veronese::Partition P(const oracle::Vec& v) { return veronese::Partition(v); }

}  // namespace test
