#ifndef OMEGA_SEMIGROUP_HPP
#define OMEGA_SEMIGROUP_HPP

// Semigroup descriptions (numerical, affine, two-generated presentation,
// lattice presentation), canonicalization, membership, and numerical
// semigroup utilities.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lattice.hpp"
#include "linear_search.hpp"
#include "vec.hpp"

namespace omega {

  enum class Mode { numerical, affine, two_gen, lattice };

  constexpr char const* to_string(Mode m) noexcept {
    switch (m) {
      case Mode::numerical: return "numerical";
      case Mode::affine: return "affine";
      case Mode::two_gen: return "twogen";
      case Mode::lattice: return "lattice";
    }
    return "unknown";
  }

  // N^p / sigma, described in one of four ways.  Factories only record the
  // input; normalize_spec validates and canonicalizes it.
  class SemigroupSpec {
   public:
    struct Numerical {
      std::vector<Integer> generators;
    };
    struct Affine {
      std::vector<NVec> columns;
    };
    // sigma = <((alpha, 0), (0, beta))>
    struct TwoGen {
      Integer alpha, beta;
    };
    // x sigma y iff x - y lies in the subgroup spanned by `basis`
    struct Lattice {
      std::size_t       arity;
      std::vector<ZVec> basis;
    };

    static SemigroupSpec numerical(std::vector<Integer> generators) {
      return SemigroupSpec(Numerical{std::move(generators)});
    }
    static SemigroupSpec affine(std::vector<NVec> columns) {
      return SemigroupSpec(Affine{std::move(columns)});
    }
    static SemigroupSpec two_gen(Integer alpha, Integer beta) {
      return SemigroupSpec(TwoGen{std::move(alpha), std::move(beta)});
    }
    static SemigroupSpec lattice(std::size_t arity, std::vector<ZVec> basis) {
      return SemigroupSpec(Lattice{arity, std::move(basis)});
    }

    Mode mode() const noexcept {
      return static_cast<Mode>(_data.index());
    }

    // Number p of minimal generators (length of exponent vectors).
    std::size_t arity() const {
      switch (mode()) {
        case Mode::numerical: return as_numerical().generators.size();
        case Mode::affine: return as_affine().columns.size();
        case Mode::two_gen: return 2;
        case Mode::lattice: return as_lattice().arity;
      }
      return 0;
    }

    // Dimension of ambient values: 1 for numerical, d for affine, 0 when
    // the monoid has no ambient embedding.
    std::size_t ambient_dimension() const {
      switch (mode()) {
        case Mode::numerical: return 1;
        case Mode::affine:
          return as_affine().columns.empty() ? 0
                                             : as_affine().columns.front().size();
        default: return 0;
      }
    }

    Numerical const& as_numerical() const {
      return std::get<Numerical>(_data);
    }
    Affine const& as_affine() const {
      return std::get<Affine>(_data);
    }
    TwoGen const& as_two_gen() const {
      return std::get<TwoGen>(_data);
    }
    Lattice const& as_lattice() const {
      return std::get<Lattice>(_data);
    }

    bool has_ambient() const noexcept {
      return mode() == Mode::numerical || mode() == Mode::affine;
    }

    // The d x p generator matrix (1 x p for numerical semigroups).
    IntMatrix generator_matrix() const {
      if (mode() == Mode::numerical) {
        auto const& g = as_numerical().generators;
        return IntMatrix::from_rows({g});
      }
      if (mode() == Mode::affine) {
        auto const& cols = as_affine().columns;
        std::vector<std::vector<Integer>> rows(
            ambient_dimension(), std::vector<Integer>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
          for (std::size_t i = 0; i < rows.size(); ++i) {
            rows[i][j] = cols[j][i];
          }
        }
        return IntMatrix::from_rows(rows);
      }
      raise(errc::unsupported_mode,
            std::string("no generator matrix in ") + to_string(mode()) + " mode");
    }

    // Basis of the subgroup G of Z^p defining sigma.
    std::vector<ZVec> lattice_basis() const {
      switch (mode()) {
        case Mode::two_gen:
          return {ZVec{std::vector<Integer>{as_two_gen().alpha, -as_two_gen().beta}}};
        case Mode::lattice: return as_lattice().basis;
        default: return integer_kernel(generator_matrix());
      }
    }

    // Ambient value of an exponent vector: sum_i gamma_i * generator_i.
    ZVec evaluate(NVec const& gamma) const {
      return generator_matrix() * gamma;
    }

    friend bool operator==(SemigroupSpec const& a, SemigroupSpec const& b) {
      return a.describe() == b.describe();
    }

    std::string describe() const {
      std::string s = to_string(mode());
      s += " ";
      switch (mode()) {
        case Mode::numerical: {
          s += "<";
          auto const& g = as_numerical().generators;
          for (std::size_t i = 0; i < g.size(); ++i) {
            s += (i ? "," : "") + g[i].str();
          }
          return s + ">";
        }
        case Mode::affine: {
          s += "{";
          auto const& c = as_affine().columns;
          for (std::size_t i = 0; i < c.size(); ++i) {
            s += (i ? "," : "") + c[i].str();
          }
          return s + "}";
        }
        case Mode::two_gen:
          return s + "alpha=" + as_two_gen().alpha.str()
                 + " beta=" + as_two_gen().beta.str();
        case Mode::lattice: {
          s += "p=" + std::to_string(as_lattice().arity) + " G=<";
          auto const& b = as_lattice().basis;
          for (std::size_t i = 0; i < b.size(); ++i) {
            s += (i ? "," : "") + b[i].str();
          }
          return s + ">";
        }
      }
      return s;
    }

   private:
    using data_type = std::variant<Numerical, Affine, TwoGen, Lattice>;
    explicit SemigroupSpec(data_type d) : _data(std::move(d)) {}
    data_type _data;
  };

  // An element either as an ambient value (a natural for numerical mode, a
  // vector for affine mode) or as an exponent vector gamma, meaning [gamma].
  class Element {
   public:
    static Element value(Integer n) {
      return Element(false, NVec(std::vector<Integer>{std::move(n)}));
    }
    static Element ambient(NVec v) {
      return Element(false, std::move(v));
    }
    static Element expression(NVec gamma) {
      return Element(true, std::move(gamma));
    }

    bool is_expression() const noexcept {
      return _expression;
    }
    NVec const& vector() const noexcept {
      return _v;
    }

   private:
    Element(bool e, NVec v) : _expression(e), _v(std::move(v)) {}
    bool _expression;
    NVec _v;
  };

  ////////////////////////////////////////////////////////////////////////
  // Numerical semigroups
  ////////////////////////////////////////////////////////////////////////

  // Membership structure for the submonoid of N generated by `gens` (the
  // gcd may exceed 1): the Apery set with respect to the smallest generator,
  // computed as shortest paths over residues.
  class NumericalTables {
   public:
    NumericalTables() = default;

    explicit NumericalTables(std::vector<std::int64_t> gens)
        : _gens(std::move(gens)) {
      if (_gens.empty()) {
        raise(errc::empty_generators, "no generators");
      }
      _gcd = 0;
      for (auto s : _gens) {
        _gcd = std::gcd(_gcd, s);
      }
      std::size_t imin = std::min_element(_gens.begin(), _gens.end()) - _gens.begin();
      _min_index = imin;
      _m = _gens[imin] / _gcd;
      if (_m > max_modulus) {
        raise(errc::resource_limit,
              "smallest generator too large for residue tables");
      }
      build(static_cast<std::size_t>(_m));
    }

    bool contains(std::int64_t v) const {
      if (v < 0 || v % _gcd != 0) {
        return false;
      }
      auto const w = v / _gcd;
      return _apery[w % _m] <= w;
    }

    std::int64_t gcd() const noexcept {
      return _gcd;
    }
    std::int64_t modulus() const noexcept {
      return _m;
    }
    // Apery set (scaled by 1/gcd) indexed by residue.
    std::vector<std::int64_t> const& apery() const noexcept {
      return _apery;
    }

    // Some factorization of v over the generators, if v is a member.
    std::optional<std::vector<std::int64_t>> factorization(std::int64_t v) const {
      if (!contains(v)) {
        return std::nullopt;
      }
      std::vector<std::int64_t> x(_gens.size(), 0);
      auto const w   = v / _gcd;
      auto       cur = static_cast<std::size_t>(w % _m);
      while (cur != 0) {
        auto j = static_cast<std::size_t>(_parent[cur]);
        ++x[j];
        auto const step = (_gens[j] / _gcd) % _m;
        cur = (cur + _m - step) % _m;
      }
      x[_min_index] += (w - _apery[w % _m]) / _m;
      return x;
    }

    static constexpr std::int64_t max_modulus = 50'000'000;

   private:
    void build(std::size_t m) {
      constexpr auto inf = std::numeric_limits<std::int64_t>::max();
      _apery.assign(m, inf);
      _parent.assign(m, -1);
      _apery[0] = 0;
      using entry = std::pair<std::int64_t, std::size_t>;
      std::priority_queue<entry, std::vector<entry>, std::greater<>> pq;
      pq.emplace(0, 0);
      while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d != _apery[r]) {
          continue;
        }
        for (std::size_t j = 0; j < _gens.size(); ++j) {
          auto const s  = _gens[j] / _gcd;
          auto const nr = static_cast<std::size_t>((r + s % m) % m);
          auto const nd = checked_add(d, s);
          if (nd < _apery[nr]) {
            _apery[nr]  = nd;
            _parent[nr] = static_cast<std::int32_t>(j);
            pq.emplace(nd, nr);
          }
        }
      }
    }

    std::vector<std::int64_t> _gens;
    std::int64_t              _gcd       = 1;
    std::int64_t              _m         = 1;
    std::size_t               _min_index = 0;
    std::vector<std::int64_t> _apery;
    std::vector<std::int32_t> _parent;
  };

  namespace detail {
    inline std::vector<std::int64_t> words_of(std::vector<Integer> const& v) {
      std::vector<std::int64_t> w;
      for (auto const& x : v) {
        w.push_back(to_word(x, "generator"));
      }
      return w;
    }

    inline void require_numerical(SemigroupSpec const& spec) {
      if (spec.mode() != Mode::numerical) {
        raise(errc::not_numerical,
              std::string("operation needs a numerical semigroup, got ")
                  + to_string(spec.mode()));
      }
    }
  }  // namespace detail

  inline NumericalTables numerical_tables(SemigroupSpec const& spec) {
    detail::require_numerical(spec);
    return NumericalTables(detail::words_of(spec.as_numerical().generators));
  }

  // Largest natural not in S; -1 when S = N.
  inline Integer frobenius(SemigroupSpec const& spec) {
    auto const t = numerical_tables(spec);
    if (t.gcd() != 1) {
      raise(errc::gcd_not_one, "generators are not coprime");
    }
    auto const& ap = t.apery();
    return Integer(*std::max_element(ap.begin(), ap.end())) - t.modulus();
  }

  // Ap(S, m): entry r is the least element of S congruent to r mod m.
  inline std::vector<Integer> apery(SemigroupSpec const& spec, Integer const& m) {
    auto const base = numerical_tables(spec);
    auto const mw   = to_word(m, "Apery modulus");
    if (mw <= 0 || !base.contains(mw)) {
      raise(errc::not_member, m.str() + " is not a positive element of S");
    }
    if (mw > NumericalTables::max_modulus) {
      raise(errc::resource_limit, "Apery modulus too large");
    }
    auto const                mm  = static_cast<std::size_t>(mw);
    constexpr auto            inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(mm, inf);
    dist[0] = 0;
    using entry = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<entry, std::vector<entry>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
      auto [d, r] = pq.top();
      pq.pop();
      if (d != dist[r]) {
        continue;
      }
      for (auto s : spec.as_numerical().generators) {
        auto const sw = to_word(s);
        auto const nr = static_cast<std::size_t>((r + sw % mw) % mw);
        auto const nd = checked_add(d, sw);
        if (nd < dist[nr]) {
          dist[nr] = nd;
          pq.emplace(nd, nr);
        }
      }
    }
    std::vector<Integer> out;
    for (auto d : dist) {
      if (d == inf) {
        raise(errc::gcd_not_one, "some residue class mod m misses S");
      }
      out.emplace_back(d);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice helpers shared with the ideal computations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Is there g in the subgroup spanned by `basis` with g <= d?
    inline bool lattice_dominated(std::vector<ZVec> const& basis,
                                  ZVec const&              d,
                                  SearchLimits const&      limits) {
      if (basis.empty()) {
        return std::all_of(d.begin(), d.end(), [](auto const& x) { return x >= 0; });
      }
      if (basis.size() == 1) {
        // lambda * b <= d coordinatewise: an interval of lambdas.
        auto const& b = basis.front();
        std::optional<Integer> lo, hi;
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (b[k] > 0) {
            auto q = floor_div(d[k], b[k]);
            hi     = hi ? std::min(*hi, q) : q;
          } else if (b[k] < 0) {
            auto q = ceil_div(-d[k], -b[k]);
            lo     = lo ? std::max(*lo, q) : q;
          } else if (d[k] < 0) {
            return false;
          }
        }
        return !lo || !hi || *lo <= *hi;
      }
      // d - delta = B (z+ - z-), delta >= 0:  -delta - B z+ + B z- = -d.
      auto const p = d.size();
      auto const r = basis.size();
      std::vector<std::vector<std::int64_t>> cols;
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<std::int64_t> c(p, 0);
        c[i] = -1;
        cols.push_back(std::move(c));
      }
      for (int sign : {-1, 1}) {
        for (auto const& g : basis) {
          std::vector<std::int64_t> c(p);
          for (std::size_t k = 0; k < p; ++k) {
            c[k] = checked_mul(sign, to_word(g[k], "lattice entry"));
          }
          cols.push_back(std::move(c));
        }
      }
      std::vector<std::int64_t> rhs(p);
      bool zero = true;
      for (std::size_t k = 0; k < p; ++k) {
        rhs[k] = checked_mul(-1, to_word(d[k], "vector entry"));
        zero   = zero && rhs[k] == 0;
      }
      if (zero) {
        return true;
      }
      frontier_options opt;
      opt.max_nodes  = limits.max_nodes;
      opt.stop_early = true;
      opt.prune      = [p, r](std::span<std::uint32_t const> x) {
        for (std::size_t j = 0; j < r; ++j) {
          if (x[p + j] && x[p + r + j]) {
            return true;
          }
        }
        return false;
      };
      return !inhomogeneous_search(std::move(cols), rhs, opt).empty();
    }

    // Does the subgroup spanned by `basis` meet N^p outside 0?
    inline bool lattice_meets_orthant(std::size_t              p,
                                      std::vector<ZVec> const& basis,
                                      SearchLimits const&      limits) {
      auto const r = basis.size();
      if (r == 0) {
        return false;
      }
      if (r == 1) {
        auto const& b   = basis.front();
        bool        pos = true, neg = true;
        for (auto const& x : b) {
          pos = pos && x >= 0;
          neg = neg && x <= 0;
        }
        return pos || neg;
      }
      // x - B z+ + B z- = 0 with x != 0.  The basis is independent, so the
      // only minimal solutions with x = 0 are (0, e_j, e_j); pruning those
      // leaves exactly the solutions with x != 0.
      std::vector<std::vector<std::int64_t>> cols;
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<std::int64_t> c(p, 0);
        c[i] = 1;
        cols.push_back(std::move(c));
      }
      for (int sign : {-1, 1}) {
        for (auto const& g : basis) {
          std::vector<std::int64_t> c(p);
          for (std::size_t k = 0; k < p; ++k) {
            c[k] = checked_mul(sign, to_word(g[k], "lattice entry"));
          }
          cols.push_back(std::move(c));
        }
      }
      frontier_options opt;
      opt.max_nodes  = limits.max_nodes;
      opt.stop_early = true;
      opt.prune      = [p, r](std::span<std::uint32_t const> x) {
        for (std::size_t j = 0; j < r; ++j) {
          if (x[p + j] && x[p + r + j]) {
            return true;
          }
        }
        return false;
      };
      return !frontier_search(cols, opt).empty();
    }

    // Affine membership: minimal solutions of A x = v, stopping at the first
    // level where any appears; the lexicographically smallest is returned.
    inline std::optional<NVec> affine_factorization(IntMatrix const&    A,
                                                    ZVec const&         v,
                                                    SearchLimits const& limits) {
      for (auto const& x : v) {
        if (x < 0) {
          return std::nullopt;
        }
      }
      if (v.is_zero()) {
        return NVec(A.cols());
      }
      std::vector<std::int64_t> b;
      for (auto const& x : v) {
        b.push_back(to_word(x, "ambient entry"));
      }
      frontier_options opt;
      opt.max_nodes  = limits.max_nodes;
      opt.stop_early = true;
      auto sols      = inhomogeneous_search(columns_of(A), b, opt);
      if (sols.empty()) {
        return std::nullopt;
      }
      return NVec::from_words(*std::min_element(sols.begin(), sols.end()));
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Canonicalization and membership
  ////////////////////////////////////////////////////////////////////////

  // Some gamma in N^p with sum_i gamma_i * generator_i = v, if one exists.
  inline std::optional<NVec> membership(SemigroupSpec const& spec,
                                        NVec const&          v,
                                        SearchLimits const&  limits = {}) {
    if (!spec.has_ambient()) {
      raise(errc::unsupported_mode,
            std::string("membership has no ambient embedding in ")
                + to_string(spec.mode()) + " mode");
    }
    if (v.size() != spec.ambient_dimension()) {
      raise(errc::mixed_arity,
            "value has dimension " + std::to_string(v.size()) + ", expected "
                + std::to_string(spec.ambient_dimension()));
    }
    if (spec.mode() == Mode::numerical) {
      auto x = numerical_tables(spec).factorization(to_word(v[0], "value"));
      if (!x) {
        return std::nullopt;
      }
      std::vector<Integer> g(x->begin(), x->end());
      return NVec(std::move(g));
    }
    return detail::affine_factorization(spec.generator_matrix(), ZVec(v), limits);
  }

  inline std::optional<NVec> membership(SemigroupSpec const& spec,
                                        Integer const&       value,
                                        SearchLimits const&  limits = {}) {
    return membership(spec, NVec(std::vector<Integer>{value}), limits);
  }

  inline SemigroupSpec normalize_spec(SemigroupSpec const& raw,
                                      SearchLimits const&  limits = {}) {
    switch (raw.mode()) {
      case Mode::numerical: {
        auto gens = raw.as_numerical().generators;
        if (gens.empty()) {
          raise(errc::empty_generators, "no generators given");
        }
        for (auto const& g : gens) {
          if (g < 1) {
            raise(errc::invalid_spec, "numerical generators must be positive");
          }
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        Integer d = 0;
        for (auto const& g : gens) {
          d = gcd(d, g);
        }
        for (auto& g : gens) {
          g /= d;
        }
        // Only smaller generators can express a given one.
        std::vector<Integer>      minimal;
        std::vector<std::int64_t> words;
        for (auto const& g : gens) {
          auto const gw = to_word(g, "generator");
          if (!words.empty() && NumericalTables(words).contains(gw)) {
            continue;
          }
          minimal.push_back(g);
          words.push_back(gw);
        }
        return SemigroupSpec::numerical(std::move(minimal));
      }
      case Mode::affine: {
        auto const& in = raw.as_affine().columns;
        if (in.empty()) {
          raise(errc::empty_generators, "no columns given");
        }
        auto const d = in.front().size();
        if (d == 0) {
          raise(errc::invalid_spec, "columns must have positive dimension");
        }
        std::vector<NVec> cols;
        for (auto const& c : in) {
          if (c.size() != d) {
            raise(errc::mixed_arity, "columns of different dimensions");
          }
          if (c.is_zero()) {
            raise(errc::not_reduced, "zero column: the monoid is not reduced");
          }
          if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
            cols.push_back(c);
          }
        }
        // Drop columns lying in the monoid generated by the remaining ones;
        // the atoms of a reduced affine monoid are unique, so the order of
        // removal does not matter.
        for (std::size_t j = 0; j < cols.size() && cols.size() > 1;) {
          std::vector<NVec> others;
          for (std::size_t k = 0; k < cols.size(); ++k) {
            if (k != j) {
              others.push_back(cols[k]);
            }
          }
          auto const sub = SemigroupSpec::affine(others);
          if (detail::affine_factorization(sub.generator_matrix(), ZVec(cols[j]), limits)) {
            cols.erase(cols.begin() + j);
          } else {
            ++j;
          }
        }
        return SemigroupSpec::affine(std::move(cols));
      }
      case Mode::two_gen: {
        auto const& t = raw.as_two_gen();
        if (t.alpha <= 1 || t.beta <= 1) {
          raise(errc::invalid_two_gen, "alpha and beta must both exceed 1");
        }
        return raw;
      }
      case Mode::lattice: {
        auto const& l = raw.as_lattice();
        if (l.arity == 0) {
          raise(errc::empty_generators, "lattice presentation of arity 0");
        }
        for (auto const& b : l.basis) {
          if (b.size() != l.arity) {
            raise(errc::mixed_arity, "basis vector length differs from arity");
          }
          if (b.is_zero()) {
            raise(errc::invalid_spec, "zero basis vector");
          }
        }
        auto basis = hermite_normal_form(l.basis);
        if (detail::lattice_meets_orthant(l.arity, basis, limits)) {
          raise(errc::not_reduced,
                "the subgroup contains a nonzero natural vector");
        }
        // Every unit vector must be an atom: [e_i] never lies in [e_j] + S.
        for (std::size_t i = 0; i < l.arity; ++i) {
          for (std::size_t j = 0; j < l.arity; ++j) {
            if (i == j) {
              continue;
            }
            ZVec d(std::vector<Integer>(l.arity, Integer(0)));
            d[i] += 1;
            d[j] -= 1;
            if (detail::lattice_dominated(basis, d, limits)) {
              raise(errc::invalid_spec,
                    "generator " + std::to_string(i + 1)
                        + " is not an atom (not minimally generated)");
            }
          }
        }
        return SemigroupSpec::lattice(l.arity, std::move(basis));
      }
    }
    return raw;
  }

  // Basis of {z in Z^p : A z = 0} for the generator matrix A.
  inline std::vector<ZVec> kernel_lattice(SemigroupSpec const& spec) {
    if (!spec.has_ambient()) {
      raise(errc::unsupported_mode, "kernel lattice needs a generator matrix");
    }
    return integer_kernel(spec.generator_matrix());
  }

}  // namespace omega

#endif  // OMEGA_SEMIGROUP_HPP
