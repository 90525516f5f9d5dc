#ifndef OMEGA_ANTICHAIN_HPP
#define OMEGA_ANTICHAIN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "vec.hpp"

namespace omega {

  namespace detail {

    using word_vector = std::vector<std::uint32_t>;

    struct word_vector_hash {
      std::size_t operator()(word_vector const& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : v) {
          h ^= x;
          h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
      }
    };

    // Support bits folded modulo 64; a necessary condition for domination.
    inline std::uint64_t support_mask(std::span<std::uint32_t const> x) {
      std::uint64_t m = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0) {
          m |= std::uint64_t(1) << (j % 64);
        }
      }
      return m;
    }

    // x >= s componentwise (over the length of s).
    inline bool dominates(std::span<std::uint32_t const> x,
                          std::span<std::uint32_t const> s) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (x[j] < s[j]) {
          return false;
        }
      }
      return true;
    }

    inline bool fits_words(std::vector<NVec> const& vs) {
      for (auto const& v : vs) {
        for (auto const& x : v) {
          if (x > std::numeric_limits<std::uint32_t>::max()) {
            return false;
          }
        }
      }
      return true;
    }

    // Indices of the minimal vectors among ws (first occurrence of
    // duplicates), visiting candidates by increasing norm.
    inline std::vector<std::size_t> minimal_indices(std::vector<word_vector> const& ws) {
      std::vector<std::uint64_t> norms(ws.size(), 0);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (auto x : ws[i]) {
          norms[i] += x;
        }
      }
      std::vector<std::size_t> order(ws.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return norms[a] != norms[b] ? norms[a] < norms[b] : ws[a] < ws[b];
      });
      std::vector<std::size_t>   kept;
      std::vector<std::uint64_t> masks;
      for (auto i : order) {
        auto const m = support_mask(ws[i]);
        bool dominated = false;
        for (std::size_t k = 0; k < kept.size() && !dominated; ++k) {
          dominated = (masks[k] & ~m) == 0 && dominates(ws[i], ws[kept[k]]);
        }
        if (!dominated) {
          kept.push_back(i);
          masks.push_back(m);
        }
      }
      return kept;
    }
  }  // namespace detail

  class Antichain;
  Antichain minimals_filter(std::vector<NVec> vs);

  // A finite set of pairwise incomparable vectors, sorted lexicographically.
  // Only minimals_filter builds one, which keeps the invariant in one place.
  class Antichain {
   public:
    Antichain() = default;

    std::size_t size() const noexcept {
      return _elements.size();
    }
    bool empty() const noexcept {
      return _elements.empty();
    }
    auto begin() const noexcept {
      return _elements.begin();
    }
    auto end() const noexcept {
      return _elements.end();
    }
    NVec const& operator[](std::size_t i) const {
      return _elements[i];
    }
    std::vector<NVec> const& elements() const noexcept {
      return _elements;
    }

    // Largest norm of an element, 0 for the empty antichain.
    Integer max_norm() const {
      Integer m = 0;
      for (auto const& v : _elements) {
        m = std::max(m, v.norm());
      }
      return m;
    }

    // Elements attaining max_norm().
    Antichain argmax_norm() const {
      Antichain r;
      auto const m = max_norm();
      for (auto const& v : _elements) {
        if (v.norm() == m) {
          r._elements.push_back(v);
        }
      }
      return r;
    }

    friend bool operator==(Antichain const&, Antichain const&) = default;

   private:
    friend Antichain minimals_filter(std::vector<NVec> vs);
    std::vector<NVec> _elements;
  };

  // Keeps exactly the vectors not strictly dominated by another input vector
  // (duplicates collapse).  Quadratic in the worst case, but candidates are
  // visited by increasing norm so each is compared only with accepted ones.
  inline Antichain minimals_filter(std::vector<NVec> vs) {
    Antichain result;
    if (vs.empty()) {
      return result;
    }
    auto const n = vs.front().size();
    for (auto const& v : vs) {
      if (v.size() != n) {
        raise(errc::mixed_arity, "vectors of different lengths");
      }
    }
    auto& out = result._elements;
    if (detail::fits_words(vs)) {
      std::vector<detail::word_vector> ws;
      ws.reserve(vs.size());
      for (auto const& v : vs) {
        detail::word_vector w;
        for (auto const& x : v) {
          w.push_back(static_cast<std::uint32_t>(x));
        }
        ws.push_back(std::move(w));
      }
      for (auto i : detail::minimal_indices(ws)) {
        out.push_back(std::move(vs[i]));
      }
      std::sort(out.begin(), out.end());
      return result;
    }
    std::vector<std::pair<Integer, NVec>> keyed;
    keyed.reserve(vs.size());
    for (auto& v : vs) {
      auto nm = v.norm();
      keyed.emplace_back(std::move(nm), std::move(v));
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    for (auto& [nm, v] : keyed) {
      bool dominated = std::any_of(out.begin(), out.end(), [&v](NVec const& w) {
        return componentwise_le(w, v);
      });
      if (!dominated) {
        out.push_back(std::move(v));
      }
    }
    std::sort(out.begin(), out.end());
    return result;
  }

}  // namespace omega

#endif  // OMEGA_ANTICHAIN_HPP
