#ifndef OMEGA_DIOPHANTINE_HPP
#define OMEGA_DIOPHANTINE_HPP

// Minimals of the preimage E([gamma] + S) of a principal ideal, membership
// in that preimage, the quasi-Archimedean search bound and the bounded
// brute-force oracle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "k_vector.hpp"
#include "linear_search.hpp"
#include "semigroup.hpp"

namespace omega {

  // automatic: residue sweep for numerical semigroups, linear systems for
  // everything else.  linear_system forces the linear-system route.
  enum class EngineRoute { automatic, linear_system };

  struct EngineOptions {
    SearchLimits limits;
    EngineRoute  route = EngineRoute::automatic;
  };

  namespace detail {

    inline void check_arity(SemigroupSpec const& spec, NVec const& v, char const* what) {
      if (v.size() != spec.arity()) {
        raise(errc::mixed_arity, std::string(what) + " has length "
                                     + std::to_string(v.size()) + ", expected "
                                     + std::to_string(spec.arity()));
      }
    }

    inline std::int64_t numerical_value(std::vector<std::int64_t> const& gens,
                                        NVec const&                      x) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        v = checked_add(v, checked_mul(gens[i], to_word(x[i], "exponent")));
      }
      return v;
    }

    // Numerical semigroups: x is minimal in E(a + S) iff v = <x, s> has
    // v - a in S and v - s_i - a not in S for every i in supp(x).  The
    // second condition forces v <= a + F(S) + max s_i, so it suffices to
    // sweep that window of values and, for each, list the factorizations of
    // v supported on T(v) = {i : v - s_i - a not in S}.
    class numerical_sweep {
     public:
      numerical_sweep(std::vector<std::int64_t> gens, SearchLimits limits)
          : _gens(std::move(gens)), _base(_gens), _limits(limits) {}

      std::vector<word_vector> minimals(std::int64_t a) {
        std::vector<word_vector> out;
        if (a == 0) {
          out.emplace_back(_gens.size(), 0);
          return out;
        }
        auto const& ap   = _base.apery();
        auto const  g    = _base.gcd();
        auto const  frob = checked_mul(g, *std::max_element(ap.begin(), ap.end()) - _base.modulus());
        auto const  smax = *std::max_element(_gens.begin(), _gens.end());
        auto const  vmax = checked_add(checked_add(a, frob), smax);
        for (std::int64_t v = a; v <= vmax; v += g) {
          if (!_base.contains(v - a)) {
            continue;
          }
          std::vector<std::size_t> support;
          for (std::size_t i = 0; i < _gens.size(); ++i) {
            if (!_base.contains(v - _gens[i] - a)) {
              support.push_back(i);
            }
          }
          if (!support.empty()) {
            enumerate(v, support, out);
          }
        }
        return out;
      }

     private:
      // Tables for the suffixes {T_j, ..., T_last} of a support set.
      std::vector<NumericalTables> const& suffixes(std::vector<std::size_t> const& support) {
        auto it = _cache.find(support);
        if (it != _cache.end()) {
          return it->second;
        }
        std::vector<NumericalTables> tabs(support.size());
        for (std::size_t j = 0; j < support.size(); ++j) {
          std::vector<std::int64_t> sub;
          for (std::size_t k = j; k < support.size(); ++k) {
            sub.push_back(_gens[support[k]]);
          }
          tabs[j] = NumericalTables(std::move(sub));
        }
        return _cache.emplace(support, std::move(tabs)).first->second;
      }

      void enumerate(std::int64_t                     v,
                     std::vector<std::size_t> const&  support,
                     std::vector<word_vector>&        out) {
        auto const& tabs = suffixes(support);
        if (!tabs.front().contains(v)) {
          return;
        }
        word_vector x(_gens.size(), 0);
        descend(0, v, support, tabs, x, out);
      }

      void descend(std::size_t                         j,
                   std::int64_t                        rem,
                   std::vector<std::size_t> const&     support,
                   std::vector<NumericalTables> const& tabs,
                   word_vector&                        x,
                   std::vector<word_vector>&           out) {
        auto const i = support[j];
        auto const s = _gens[i];
        if (j + 1 == support.size()) {
          if (rem % s == 0) {
            x[i] = static_cast<std::uint32_t>(rem / s);
            if (out.size() >= _limits.max_nodes) {
              raise(errc::resource_limit, "minimal set exceeds the node limit");
            }
            out.push_back(x);
            x[i] = 0;
          }
          return;
        }
        for (std::int64_t c = 0; c * s <= rem; ++c) {
          if (tabs[j + 1].contains(rem - c * s)) {
            x[i] = static_cast<std::uint32_t>(c);
            descend(j + 1, rem - c * s, support, tabs, x, out);
          }
        }
        x[i] = 0;
      }

      std::vector<std::int64_t> _gens;
      NumericalTables           _base;
      SearchLimits              _limits;
      std::map<std::vector<std::size_t>, std::vector<NumericalTables>> _cache;
    };

    // A x - A y = A gamma over (x, y).  In a reduced monoid A d = 0 with d
    // natural forces d = 0, so every minimal x of the ideal is the x-part of
    // some minimal (x, y) solution; projecting and filtering is exact.
    inline std::vector<word_vector> matrix_route(IntMatrix const&    A,
                                                 NVec const&         gamma,
                                                 SearchLimits const& limits) {
      auto const p    = A.cols();
      auto const cols = columns_of(A);
      std::vector<std::vector<std::int64_t>> sys = cols;
      for (auto const& c : cols) {
        std::vector<std::int64_t> neg(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
          neg[k] = -c[k];
        }
        sys.push_back(std::move(neg));
      }
      std::vector<std::int64_t> b(A.rows(), 0);
      for (std::size_t k = 0; k < A.rows(); ++k) {
        for (std::size_t j = 0; j < p; ++j) {
          b[k] = checked_add(b[k], checked_mul(cols[j][k], to_word(gamma[j], "exponent")));
        }
      }
      frontier_options opt;
      opt.max_nodes  = limits.max_nodes;
      opt.prefix_len = p;
      // (e_i, e_i) is a solution of the homogeneous part.
      opt.prune = [p](std::span<std::uint32_t const> x) {
        for (std::size_t i = 0; i < p; ++i) {
          if (x[i] && x[p + i]) {
            return true;
          }
        }
        return false;
      };
      auto sols = inhomogeneous_search(std::move(sys), b, opt);
      for (auto& s : sols) {
        s.resize(p);
      }
      return sols;
    }

    // x - delta - B z+ + B z- = gamma over (x, delta, z+, z-).
    inline std::vector<word_vector> lattice_route(std::size_t              p,
                                                  std::vector<ZVec> const& basis,
                                                  NVec const&              gamma,
                                                  SearchLimits const&      limits) {
      auto const r = basis.size();
      std::vector<std::vector<std::int64_t>> sys;
      for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < p; ++i) {
          std::vector<std::int64_t> c(p, 0);
          c[i] = sign;
          sys.push_back(std::move(c));
        }
      }
      for (int sign : {-1, 1}) {
        for (auto const& g : basis) {
          std::vector<std::int64_t> c(p);
          for (std::size_t k = 0; k < p; ++k) {
            c[k] = checked_mul(sign, to_word(g[k], "lattice entry"));
          }
          sys.push_back(std::move(c));
        }
      }
      std::vector<std::int64_t> b;
      for (auto const& x : gamma) {
        b.push_back(to_word(x, "exponent"));
      }
      frontier_options opt;
      opt.max_nodes  = limits.max_nodes;
      opt.prefix_len = p;
      opt.prune      = [p, r](std::span<std::uint32_t const> x) {
        for (std::size_t i = 0; i < p; ++i) {
          if (x[i] && x[p + i]) {
            return true;
          }
        }
        for (std::size_t j = 0; j < r; ++j) {
          if (x[2 * p + j] && x[2 * p + r + j]) {
            return true;
          }
        }
        return false;
      };
      auto sols = inhomogeneous_search(std::move(sys), b, opt);
      for (auto& s : sols) {
        s.resize(p);
      }
      return sols;
    }

  }  // namespace detail

  // Minimals({x in N^p : [x] in [gamma] + S}).
  inline Antichain ideal_preimage_minimals(SemigroupSpec const& spec,
                                           NVec const&          gamma,
                                           EngineOptions const& options = {}) {
    detail::check_arity(spec, gamma, "exponent vector");
    if (gamma.is_zero()) {
      return minimals_filter({gamma});
    }
    switch (spec.mode()) {
      case Mode::numerical:
        if (options.route == EngineRoute::automatic) {
          auto gens = detail::words_of(spec.as_numerical().generators);
          auto a    = detail::numerical_value(gens, gamma);
          detail::numerical_sweep sweep(std::move(gens), options.limits);
          return detail::to_antichain(sweep.minimals(a));
        }
        [[fallthrough]];
      case Mode::affine:
        return detail::to_antichain(
            detail::matrix_route(spec.generator_matrix(), gamma, options.limits));
      case Mode::two_gen:
      case Mode::lattice:
        return detail::to_antichain(detail::lattice_route(
            spec.arity(), spec.lattice_basis(), gamma, options.limits));
    }
    return {};
  }

  // Is [x] in [gamma] + S?
  inline bool e_membership(SemigroupSpec const& spec,
                           NVec const&          gamma,
                           NVec const&          x,
                           SearchLimits const&  limits = {}) {
    detail::check_arity(spec, gamma, "exponent vector");
    detail::check_arity(spec, x, "candidate vector");
    switch (spec.mode()) {
      case Mode::numerical: {
        auto const gens = detail::words_of(spec.as_numerical().generators);
        auto const d = detail::numerical_value(gens, x) - detail::numerical_value(gens, gamma);
        return NumericalTables(gens).contains(d);
      }
      case Mode::affine: {
        ZVec d = spec.evaluate(x);
        auto const g = spec.evaluate(gamma);
        for (std::size_t k = 0; k < d.size(); ++k) {
          d[k] -= g[k];
        }
        return detail::affine_factorization(spec.generator_matrix(), d, limits).has_value();
      }
      default: {
        ZVec d(x);
        for (std::size_t k = 0; k < d.size(); ++k) {
          d[k] -= gamma[k];
        }
        return detail::lattice_dominated(spec.lattice_basis(), d, limits);
      }
    }
  }

  // Right-hand side of the bound  sum_i (K/k_i) x_i <= sum_i K/k_i
  // + (p-1) K + n sum_i (K/k_i) gamma_i  (K = k_1 ... k_p) satisfied by
  // every minimal element of E(n[gamma] + S).
  inline Integer qa_search_bound(NVec const& k, NVec const& gamma, Integer const& n) {
    if (k.size() != gamma.size()) {
      raise(errc::mixed_arity, "k and gamma differ in length");
    }
    Integer K = 1;
    for (auto const& ki : k) {
      if (ki < 1) {
        raise(errc::invalid_spec, "k entries must be positive");
      }
      K *= ki;
    }
    Integer weights = 0, weighted_gamma = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      weights += K / k[i];
      weighted_gamma += (K / k[i]) * gamma[i];
    }
    return weights + Integer(k.size() - 1) * K + n * weighted_gamma;
  }

  // The least bound brute_minimals_bounded accepts, in the metric of the
  // mode: sum_i s_i x_i for numerical semigroups, sum_i (K/k_i) x_i for the
  // other quasi-Archimedean modes.
  inline Integer required_search_bound(SemigroupSpec const& spec, NVec const& gamma) {
    detail::check_arity(spec, gamma, "exponent vector");
    if (spec.mode() == Mode::numerical) {
      auto const& g   = spec.as_numerical().generators;
      Integer     val = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        val += g[i] * gamma[i];
      }
      return val + frobenius(spec) + *std::max_element(g.begin(), g.end());
    }
    return qa_search_bound(k_vector(spec).k, gamma, 1);
  }

  // Independent oracle: enumerate every x under the bound, keep those in the
  // ideal, take minimals.
  inline Antichain brute_minimals_bounded(SemigroupSpec const& spec,
                                          NVec const&          gamma,
                                          Integer const&       bound,
                                          SearchLimits const&  limits = {}) {
    auto const required = required_search_bound(spec, gamma);
    if (bound < required) {
      raise(errc::unsound_bound, "bound " + bound.str() + " is below the sound bound "
                                     + required.str());
    }
    auto const p = spec.arity();
    std::vector<std::int64_t> weights;
    std::function<bool(std::vector<std::int64_t> const&, std::int64_t)> keep;
    auto const bw = to_word(bound, "search bound");

    if (spec.mode() == Mode::numerical) {
      weights = detail::words_of(spec.as_numerical().generators);
      // Plain reachability table over [0, bound].
      std::vector<char> in_s(static_cast<std::size_t>(bw) + 1, 0);
      in_s[0] = 1;
      for (std::int64_t v = 1; v <= bw; ++v) {
        for (auto s : weights) {
          if (v >= s && in_s[v - s]) {
            in_s[v] = 1;
            break;
          }
        }
      }
      auto const a = detail::numerical_value(weights, gamma);
      keep = [in_s = std::move(in_s), a](std::vector<std::int64_t> const&, std::int64_t v) {
        return v >= a && in_s[v - a];
      };
    } else {
      auto const kv = k_vector(spec);
      auto const K  = kv.product();
      for (auto const& ki : kv.k) {
        weights.push_back(to_word(K / ki, "weight"));
      }
      keep = [&spec, &gamma, &limits](std::vector<std::int64_t> const& x, std::int64_t) {
        std::vector<Integer> xi(x.begin(), x.end());
        return e_membership(spec, gamma, NVec(std::move(xi)), limits);
      };
    }

    std::vector<NVec>         found;
    std::vector<std::int64_t> x(p, 0);
    std::uint64_t             visited = 0;
    auto recurse = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
      if (i == p) {
        if (++visited > limits.max_nodes) {
          raise(errc::resource_limit, "oracle enumeration exceeds the node limit");
        }
        if (keep(x, used)) {
          found.emplace_back(std::vector<Integer>(x.begin(), x.end()));
        }
        return;
      }
      for (std::int64_t c = 0; used + c * weights[i] <= bw; ++c) {
        x[i] = c;
        self(self, i + 1, used + c * weights[i]);
      }
      x[i] = 0;
    };
    recurse(recurse, 0, 0);
    return minimals_filter(std::move(found));
  }

  inline Antichain brute_minimals_bounded(SemigroupSpec const& spec,
                                          NVec const&          gamma,
                                          SearchLimits const&  limits = {}) {
    return brute_minimals_bounded(spec, gamma, required_search_bound(spec, gamma), limits);
  }

}  // namespace omega

#endif  // OMEGA_DIOPHANTINE_HPP
