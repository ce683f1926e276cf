#include "veronese/numeric.hpp"

#include <sstream>

namespace veronese {

namespace {
[[noreturn]] void cap_error(const char* what, std::size_t got, std::size_t cap) {
  std::ostringstream os;
  os << what << ": " << got << " exceeds cap " << cap;
  throw ResourceCapExceeded(os.str());
}
}  // namespace

void ResourceLimits::check_entries(std::size_t n, const char* what) const {
  if (n > max_entries) cap_error(what, n, max_entries);
}
void ResourceLimits::check_dim(std::size_t n, const char* what) const {
  if (n > max_dim) cap_error(what, n, max_dim);
}
void ResourceLimits::check_nodes(std::uint64_t n, const char* what) const {
  if (n > max_nodes) cap_error(what, static_cast<std::size_t>(n), static_cast<std::size_t>(max_nodes));
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

long floor_to_long(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q.convert_to<long>();
}

long ceil_to_long(const Rational& r) { return -floor_to_long(-r); }

}  // namespace veronese
