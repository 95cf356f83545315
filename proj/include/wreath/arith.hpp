#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

// All multiplicities, dimensions, traces and character values are exact
// integers; nothing in this library touches floating point.
using Integer = boost::multiprecision::cpp_int;

// Thrown when a computation is refused because it exceeds a documented size
// budget.  Refusing loudly beats silently grinding forever.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

// Quotient that refuses to round.
inline Integer exact_div(const Integer& num, const Integer& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::logic_error(std::string("non-exact division in ") + what + ": " +
                               num.str() + " / " + den.str());
    return num / den;
}

// Checked narrowing, for handing values to fixed-width consumers.
inline long long to_int64(const Integer& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::logic_error(std::string(what) + ": value does not fit in 64 bits");
    return v.convert_to<long long>();
}

}  // namespace wreath
