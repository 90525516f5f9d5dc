#ifndef OMEGA_OMEGA_HPP
#define OMEGA_OMEGA_HPP

// omega-primality of elements and of monoids.  omega([gamma]) is the
// largest norm of a minimal element of E([gamma] + S).

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "diophantine.hpp"
#include "semigroup.hpp"

namespace omega {

  enum class Method { engine, two_gen_closed, oracle };

  constexpr char const* to_string(Method m) noexcept {
    switch (m) {
      case Method::engine: return "engine";
      case Method::two_gen_closed: return "two-gen-closed";
      case Method::oracle: return "oracle";
    }
    return "unknown";
  }

  struct CrossCheck {
    std::string label;
    Integer     value;
    // Diagnostic values are reported but not required to agree.
    bool diagnostic = false;
  };

  struct OmegaReport {
    Integer   value;
    // The full minimal set Minimals(E([gamma] + S)).
    Antichain witnesses;
    Method    method = Method::engine;
    std::chrono::duration<double, std::milli> elapsed{0};
    // The exponent vector gamma the computation ran on.
    NVec                    expression;
    std::vector<CrossCheck> cross_checks;
  };

  struct OmegaOptions {
    EngineOptions engine;
    // Run every applicable method and fail on disagreement.
    bool cross_check = false;
    // Use the engine even where a closed form exists.
    bool force_engine = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Two-generated monoids N^2 / <((alpha, 0), (0, beta))>
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void check_two_gen(Integer const& alpha, Integer const& beta, NVec const& gamma) {
      if (alpha <= 1 || beta <= 1) {
        raise(errc::invalid_two_gen, "alpha and beta must both exceed 1");
      }
      if (gamma.size() != 2) {
        raise(errc::mixed_arity, "two-generated elements have two coordinates");
      }
    }
  }  // namespace detail

  // Minimals of E([gamma]) together with the two axis points of the ideal.
  // E([gamma]) = {gamma + l (alpha, -beta) : -floor(g1/alpha) <= l <=
  // floor(g2/beta)}; when beta | g2 (resp. alpha | g1) the axis point comes
  // from E([gamma]) itself and the shifted one is dominated.
  inline Antichain two_gen_minimals(Integer const& alpha,
                                    Integer const& beta,
                                    NVec const&    gamma) {
    detail::check_two_gen(alpha, beta, gamma);
    auto const&       g1 = gamma[0];
    auto const&       g2 = gamma[1];
    std::vector<NVec> pts;
    for (Integer l = -(g1 / alpha); l <= g2 / beta; ++l) {
      pts.push_back(NVec(std::vector<Integer>{g1 + l * alpha, g2 - l * beta}));
    }
    pts.push_back(NVec(std::vector<Integer>{0, g2 + (g1 / alpha + 1) * beta}));
    pts.push_back(NVec(std::vector<Integer>{g1 + (g2 / beta + 1) * alpha, 0}));
    return minimals_filter(std::move(pts));
  }

  // omega = max(Tx, Ty), where Tx is g1 + g2 alpha / beta if beta | g2 and
  // g1 + (floor(g2/beta) + 1) alpha otherwise (Ty symmetrically).
  inline Integer omega_two_gen_closed(Integer const& alpha,
                                      Integer const& beta,
                                      NVec const&    gamma) {
    detail::check_two_gen(alpha, beta, gamma);
    if (gamma.is_zero()) {
      return 0;
    }
    auto const& g1 = gamma[0];
    auto const& g2 = gamma[1];
    Integer tx = g2 % beta == 0 ? g1 + g2 / beta * alpha : g1 + (g2 / beta + 1) * alpha;
    Integer ty = g1 % alpha == 0 ? g2 + g1 / alpha * beta : g2 + (g1 / alpha + 1) * beta;
    return std::max(tx, ty);
  }

  // max{g2 + (floor(g1/alpha) + 1) beta, g1 + (floor(g2/beta) + 1) alpha}
  // without the divisibility cases.  Overestimates omega when alpha | g1 or
  // beta | g2 (e.g. 6 instead of 3 for the element 3 of <3,5>); kept only
  // as a cross-check diagnostic.
  inline Integer two_gen_axis_formula(Integer const& alpha,
                                      Integer const& beta,
                                      NVec const&    gamma) {
    detail::check_two_gen(alpha, beta, gamma);
    auto const& g1 = gamma[0];
    auto const& g2 = gamma[1];
    return std::max(g2 + (g1 / alpha + 1) * beta, g1 + (g2 / beta + 1) * alpha);
  }

  struct TwoGenParameters {
    Integer alpha;
    Integer beta;
  };

  // (alpha, beta) when the monoid is N^2 / <(alpha, -beta)> with both
  // exceeding 1, the generators kept in order: a two-generated spec, a
  // numerical <s1, s2> with gcd 1 (alpha = s2, beta = s1), or a lattice spec
  // of rank one on two generators.
  inline std::optional<TwoGenParameters> two_gen_parameters(SemigroupSpec const& spec) {
    std::optional<TwoGenParameters> out;
    switch (spec.mode()) {
      case Mode::two_gen: out = {spec.as_two_gen().alpha, spec.as_two_gen().beta}; break;
      case Mode::numerical: {
        auto const& g = spec.as_numerical().generators;
        if (g.size() == 2 && gcd(g[0], g[1]) == 1) {
          out = {g[1], g[0]};
        }
        break;
      }
      case Mode::lattice: {
        auto const& l = spec.as_lattice();
        if (l.arity == 2) {
          auto const basis = hermite_normal_form(l.basis);
          if (basis.size() == 1 && basis[0][0] > 0 && basis[0][1] < 0) {
            out = {basis[0][0], -basis[0][1]};
          }
        }
        break;
      }
      case Mode::affine: break;
    }
    if (out && (out->alpha <= 1 || out->beta <= 1)) {
      out.reset();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  // The exponent vector of an element: as given, or a factorization of an
  // ambient value.
  inline NVec resolve_expression(SemigroupSpec const& spec,
                                 Element const&       elem,
                                 SearchLimits const&  limits = {}) {
    if (elem.is_expression()) {
      detail::check_arity(spec, elem.vector(), "expression");
      return elem.vector();
    }
    auto gamma = membership(spec, elem.vector(), limits);
    if (!gamma) {
      raise(errc::not_member, elem.vector().str() + " is not in " + spec.describe());
    }
    return *gamma;
  }

  // The minimal set of E([gamma] + S) computed by one specific method.
  inline Antichain minimals_by_method(SemigroupSpec const& spec,
                                      NVec const&          gamma,
                                      Method               method,
                                      EngineOptions const& engine = {}) {
    switch (method) {
      case Method::engine: return ideal_preimage_minimals(spec, gamma, engine);
      case Method::two_gen_closed: {
        auto const t = two_gen_parameters(spec);
        if (!t) {
          raise(errc::unsupported_mode, "closed form needs a two-generated monoid");
        }
        return two_gen_minimals(t->alpha, t->beta, gamma);
      }
      case Method::oracle: return brute_minimals_bounded(spec, gamma, engine.limits);
    }
    return {};
  }

  // The value computed by one specific method.
  inline Integer omega_by_method(SemigroupSpec const& spec,
                                 NVec const&          gamma,
                                 Method               method,
                                 Antichain const&     minimals) {
    if (method == Method::two_gen_closed) {
      auto const t = two_gen_parameters(spec);
      return omega_two_gen_closed(t->alpha, t->beta, gamma);
    }
    return minimals.max_norm();
  }

  // Whether a method applies to the spec at all.
  inline bool method_applies(SemigroupSpec const& spec, Method method) {
    switch (method) {
      case Method::engine: return true;
      case Method::two_gen_closed: return two_gen_parameters(spec).has_value();
      case Method::oracle:
        return spec.mode() == Mode::numerical || is_quasi_archimedean(spec);
    }
    return false;
  }

  inline OmegaReport omega_element(SemigroupSpec const& spec,
                                   Element const&       elem,
                                   OmegaOptions const&  options = {}) {
    auto const  start = std::chrono::steady_clock::now();
    OmegaReport report;
    report.expression = resolve_expression(spec, elem, options.engine.limits);
    auto const& gamma = report.expression;

    bool const closed = spec.mode() == Mode::two_gen && !options.force_engine;
    report.method     = closed ? Method::two_gen_closed : Method::engine;
    if (closed) {
      auto const& t     = spec.as_two_gen();
      report.value      = omega_two_gen_closed(t.alpha, t.beta, gamma);
      report.witnesses  = two_gen_minimals(t.alpha, t.beta, gamma);
    } else {
      report.witnesses = ideal_preimage_minimals(spec, gamma, options.engine);
      report.value     = report.witnesses.max_norm();
    }

    if (options.cross_check) {
      for (auto m : {Method::engine, Method::two_gen_closed, Method::oracle}) {
        if (m == report.method || !method_applies(spec, m)) {
          continue;
        }
        auto const other = minimals_by_method(spec, gamma, m, options.engine);
        auto const value = omega_by_method(spec, gamma, m, other);
        report.cross_checks.push_back({to_string(m), value, false});
        if (value != report.value || other != report.witnesses) {
          raise(errc::invariant_violation,
                std::string("cross-check mismatch: ") + to_string(report.method) + " gives "
                    + report.value.str() + " with " + std::to_string(report.witnesses.size())
                    + " minimals, " + to_string(m) + " gives " + value.str() + " with "
                    + std::to_string(other.size()) + " minimals");
        }
      }
      if (auto const t = two_gen_parameters(spec)) {
        report.cross_checks.push_back(
            {"two-gen-axis-formula", two_gen_axis_formula(t->alpha, t->beta, gamma), true});
      }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  struct SemigroupOmega {
    Integer              value;
    std::vector<Integer> per_generator;
  };

  // omega(S): the maximum of omega over the atoms [e_1], ..., [e_p].
  inline SemigroupOmega omega_semigroup(SemigroupSpec const& spec,
                                        OmegaOptions const&  options = {}) {
    SemigroupOmega out{0, {}};
    for (std::size_t i = 0; i < spec.arity(); ++i) {
      auto const r = omega_element(
          spec, Element::expression(NVec::unit(spec.arity(), i)), options);
      out.per_generator.push_back(r.value);
      out.value = std::max(out.value, r.value);
    }
    return out;
  }

}  // namespace omega

#endif  // OMEGA_OMEGA_HPP
