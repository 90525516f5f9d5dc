#ifndef OMEGA_K_VECTOR_HPP
#define OMEGA_K_VECTOR_HPP

// Common multiples of the generators of quasi-Archimedean monoids:
// k_1 [e_1] = ... = k_p [e_p].

#include <cstddef>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace omega {

  struct KVector {
    NVec        k;
    Integer     kmax;
    // First index attaining kmax.
    std::size_t kmax_index = 0;

    Integer product() const {
      Integer K = 1;
      for (auto const& x : k) {
        K *= x;
      }
      return K;
    }
  };

  namespace detail {
    inline KVector make_k_vector(std::vector<Integer> k) {
      KVector kv{NVec(std::move(k)), 0, 0};
      for (std::size_t i = 0; i < kv.k.size(); ++i) {
        if (kv.k[i] > kv.kmax) {
          kv.kmax       = kv.k[i];
          kv.kmax_index = i;
        }
      }
      return kv;
    }

    [[noreturn]] inline void not_quasi_archimedean(std::string const& why) {
      raise(errc::not_quasi_archimedean, why);
    }
  }  // namespace detail

  // Componentwise-minimal k with k_i [e_i] all equal.
  inline KVector k_vector(SemigroupSpec const& spec) {
    switch (spec.mode()) {
      case Mode::numerical: {
        auto const& g = spec.as_numerical().generators;
        Integer     L = 1;
        for (auto const& s : g) {
          L = lcm(L, s);
        }
        std::vector<Integer> k;
        for (auto const& s : g) {
          k.push_back(L / s);
        }
        return detail::make_k_vector(std::move(k));
      }
      case Mode::affine: {
        // Quasi-Archimedean iff every column is a positive multiple c_i u of
        // one primitive direction u; then k_i = lcm(c) / c_i.
        auto const& cols = spec.as_affine().columns;
        std::vector<Integer> scale;
        std::vector<Integer> direction;
        for (auto const& a : cols) {
          Integer c = 0;
          for (auto const& x : a) {
            c = gcd(c, x);
          }
          std::vector<Integer> u;
          for (auto const& x : a) {
            u.push_back(x / c);
          }
          if (direction.empty()) {
            direction = u;
          } else if (u != direction) {
            detail::not_quasi_archimedean(
                "affine generators span more than one direction");
          }
          scale.push_back(c);
        }
        Integer L = 1;
        for (auto const& c : scale) {
          L = lcm(L, c);
        }
        std::vector<Integer> k;
        for (auto const& c : scale) {
          k.push_back(L / c);
        }
        return detail::make_k_vector(std::move(k));
      }
      case Mode::two_gen:
        return detail::make_k_vector(
            {spec.as_two_gen().alpha, spec.as_two_gen().beta});
      case Mode::lattice: {
        auto const& l     = spec.as_lattice();
        auto const  basis = hermite_normal_form(l.basis);
        if (l.arity == 1 && basis.empty()) {
          return detail::make_k_vector({Integer(1)});
        }
        if (l.arity == 2 && basis.size() == 1) {
          auto const& b = basis.front();
          if (b[0] > 0 && b[1] < 0) {
            return detail::make_k_vector({b[0], -b[1]});
          }
        }
        detail::not_quasi_archimedean(
            "only two-generated rank-one lattice presentations are recognized "
            "as quasi-Archimedean");
      }
    }
    detail::not_quasi_archimedean("unknown mode");
  }

  inline bool is_quasi_archimedean(SemigroupSpec const& spec) {
    try {
      k_vector(spec);
      return true;
    } catch (omega_error const& e) {
      if (e.code() == errc::not_quasi_archimedean) {
        return false;
      }
      throw;
    }
  }

  // Checks k_1 [e_1] = ... = k_p [e_p] in the monoid itself.
  inline bool verify_k_vector(SemigroupSpec const& spec, KVector const& kv) {
    auto const p = spec.arity();
    if (kv.k.size() != p) {
      return false;
    }
    if (spec.has_ambient()) {
      auto const first = spec.evaluate(kv.k[0] * NVec::unit(p, 0));
      for (std::size_t i = 1; i < p; ++i) {
        if (spec.evaluate(kv.k[i] * NVec::unit(p, i)) != first) {
          return false;
        }
      }
      return true;
    }
    // k_i e_i - k_0 e_0 must lie in G: equivalently each is dominated by G in
    // both directions, which for a reduced monoid means equality of classes.
    auto const basis = spec.lattice_basis();
    for (std::size_t i = 1; i < p; ++i) {
      ZVec d(std::vector<Integer>(p, Integer(0)));
      d[i] += kv.k[i];
      d[0] -= kv.k[0];
      ZVec nd(std::vector<Integer>(p, Integer(0)));
      nd[i] -= kv.k[i];
      nd[0] += kv.k[0];
      if (!detail::lattice_dominated(basis, d, {})
          || !detail::lattice_dominated(basis, nd, {})) {
        return false;
      }
    }
    return true;
  }

}  // namespace omega

#endif  // OMEGA_K_VECTOR_HPP
