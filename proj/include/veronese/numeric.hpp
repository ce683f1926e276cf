#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace veronese {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a computation would exceed a configured resource cap.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps applied by the expensive constructions (weight tables, Koszul blocks,
/// lattice enumeration). Exceeding a cap throws ResourceCapExceeded.
struct ResourceLimits {
  std::size_t max_entries = 5'000'000;     // weight-table / basis entries
  std::size_t max_dim = 20'000;            // side length of one differential block
  std::uint64_t max_nodes = 2'000'000'000; // enumeration nodes
  unsigned threads = 1;

  void check_entries(std::size_t n, const char* what) const;
  void check_dim(std::size_t n, const char* what) const;
  void check_nodes(std::uint64_t n, const char* what) const;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& r);  // "a/b", or "a" for integers
double to_double(const Rational& r);

/// Floor and ceiling of a rational as a machine integer.
long floor_to_long(const Rational& r);
long ceil_to_long(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace veronese
