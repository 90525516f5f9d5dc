#ifndef OMEGA_ERROR_HPP
#define OMEGA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

  enum class errc {
    parse,
    invalid_spec,
    empty_generators,
    not_reduced,
    invalid_two_gen,
    mixed_arity,
    gcd_not_one,
    not_member,
    unsound_bound,
    unsupported_mode,
    not_numerical,
    not_quasi_archimedean,
    resource_limit,
    invariant_violation
  };

  constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
      case errc::parse: return "ParseError";
      case errc::invalid_spec: return "InvalidSpec";
      case errc::empty_generators: return "EmptyGenerators";
      case errc::not_reduced: return "NotReduced";
      case errc::invalid_two_gen: return "InvalidTwoGen";
      case errc::mixed_arity: return "MixedArity";
      case errc::gcd_not_one: return "GcdNotOne";
      case errc::not_member: return "NotMember";
      case errc::unsound_bound: return "UnsoundBound";
      case errc::unsupported_mode: return "UnsupportedMode";
      case errc::not_numerical: return "NotNumerical";
      case errc::not_quasi_archimedean: return "NotQuasiArchimedean";
      case errc::resource_limit: return "ResourceLimit";
      case errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
  }

  // Process exit status used by the command line tool for each error kind.
  constexpr int exit_status(errc code) noexcept {
    switch (code) {
      case errc::unsupported_mode:
      case errc::not_numerical:
      case errc::not_quasi_archimedean: return 3;
      case errc::resource_limit: return 4;
      case errc::invariant_violation: return 5;
      default: return 2;
    }
  }

  class omega_error : public std::runtime_error {
   public:
    omega_error(errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    errc code() const noexcept {
      return _code;
    }

   private:
    errc _code;
  };

  [[noreturn]] inline void raise(errc code, std::string const& what) {
    throw omega_error(code, what);
  }

}  // namespace omega

#endif  // OMEGA_ERROR_HPP
