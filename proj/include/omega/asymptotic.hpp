#ifndef OMEGA_ASYMPTOTIC_HPP
#define OMEGA_ASYMPTOTIC_HPP

// Asymptotic omega-primality of quasi-Archimedean monoids,
// omega_bar(x) = lim omega(n x) / n, as exact rationals.

#include <cstddef>
#include <vector>

#include "k_vector.hpp"
#include "omega.hpp"

namespace omega {

  // sum_i gamma_i kmax / k_i for any expression gamma of the element.
  inline Rational asymptotic_omega_element(SemigroupSpec const& spec,
                                           Element const&       elem,
                                           SearchLimits const&  limits = {}) {
    auto const kv    = k_vector(spec);
    auto const gamma = resolve_expression(spec, elem, limits);
    Rational   r     = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      r += Rational(gamma[i] * kv.kmax, kv.k[i]);
    }
    return r;
  }

  // The maximum over atoms, attained at the smallest k_i.
  inline Rational asymptotic_omega_semigroup(SemigroupSpec const& spec) {
    auto const kv   = k_vector(spec);
    Integer    kmin = kv.kmax;
    for (auto const& k : kv.k) {
      kmin = std::min(kmin, k);
    }
    return Rational(kv.kmax, kmin);
  }

  // (omega(n gamma) / n) for n = 1, ..., nmax.  Bounded below termwise by
  // the limit, since the sequence omega(n gamma) is subadditive.
  inline std::vector<Rational> empirical_ratio_sequence(SemigroupSpec const& spec,
                                                        Element const&       elem,
                                                        std::size_t          nmax,
                                                        OmegaOptions const&  options = {}) {
    if (nmax == 0) {
      raise(errc::invalid_spec, "nmax must be at least 1");
    }
    auto const            gamma = resolve_expression(spec, elem, options.engine.limits);
    std::vector<Rational> out;
    out.reserve(nmax);
    for (std::size_t n = 1; n <= nmax; ++n) {
      auto const r = omega_element(spec, Element::expression(Integer(n) * gamma), options);
      out.emplace_back(r.value, Integer(n));
    }
    return out;
  }

}  // namespace omega

#endif  // OMEGA_ASYMPTOTIC_HPP
