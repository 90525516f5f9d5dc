#ifndef OMEGA_INTEGER_HPP
#define OMEGA_INTEGER_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace omega {

  // Expression templates off: values bound to auto must own their storage.
  using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                                boost::multiprecision::et_off>;
  using Rational
      = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                          boost::multiprecision::cpp_int_backend<>>,
                                      boost::multiprecision::et_off>;

  // Search kernels run on 64-bit words.  Every conversion into that range is
  // checked, and every update inside a kernel goes through the checked_*
  // helpers, so an instance that would overflow is reported as a resource
  // limit instead of producing a wrong answer.
  inline std::int64_t to_word(Integer const& x, char const* what = "value") {
    if (x > std::numeric_limits<std::int64_t>::max()
        || x < std::numeric_limits<std::int64_t>::min()) {
      raise(errc::resource_limit,
            std::string(what) + " " + x.str()
                + " exceeds the 64-bit working range of the search kernels");
    }
    return static_cast<std::int64_t>(x);
  }

  inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      raise(errc::resource_limit, "64-bit overflow in search kernel");
    }
    return r;
  }

  inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      raise(errc::resource_limit, "64-bit overflow in search kernel");
    }
    return r;
  }

  inline Integer gcd(Integer const& a, Integer const& b) {
    return boost::multiprecision::gcd(a, b);
  }

  inline Integer lcm(Integer const& a, Integer const& b) {
    if (a == 0 || b == 0) {
      return 0;
    }
    return boost::multiprecision::abs(a / gcd(a, b) * b);
  }

  // Floor and ceiling division for a positive divisor.
  inline Integer floor_div(Integer const& a, Integer const& b) {
    Integer q = a / b;
    if ((a % b != 0) && (a < 0)) {
      --q;
    }
    return q;
  }

  inline Integer ceil_div(Integer const& a, Integer const& b) {
    Integer q = a / b;
    if ((a % b != 0) && (a > 0)) {
      ++q;
    }
    return q;
  }

  inline std::string to_string(Rational const& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) {
      return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
  }

}  // namespace omega

#endif  // OMEGA_INTEGER_HPP
