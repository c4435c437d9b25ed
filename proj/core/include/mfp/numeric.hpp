#ifndef MFP_NUMERIC_HPP_
#define MFP_NUMERIC_HPP_

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mfp {

// Every count and identity in this library is exact; there is no floating
// point anywhere in the computation paths.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would emit more objects than the configured cap.
class EnumCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

// C(n, k) with the usual conventions: zero for k < 0 or k > n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (n - k < k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // always exact at this point
  }
  return result;
}

// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("exact_div: " + a.str() + " is not divisible by " + b.str());
  return q;
}

}  // namespace mfp

#endif  // MFP_NUMERIC_HPP_
