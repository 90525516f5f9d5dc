#ifndef OMEGA_VEC_HPP
#define OMEGA_VEC_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "integer.hpp"

namespace omega {

  namespace detail {
    // Shared storage for fixed-arity integer vectors.  The two public
    // vector types differ only in the sign constraint on their entries.
    template <typename Derived>
    class int_vector {
     public:
      int_vector() = default;
      explicit int_vector(std::size_t n) : _entries(n, Integer(0)) {}
      explicit int_vector(std::vector<Integer> entries)
          : _entries(std::move(entries)) {}
      int_vector(std::initializer_list<long long> il)
          : _entries(il.begin(), il.end()) {}

      std::size_t size() const noexcept {
        return _entries.size();
      }
      Integer const& operator[](std::size_t i) const {
        return _entries[i];
      }
      auto begin() const noexcept {
        return _entries.begin();
      }
      auto end() const noexcept {
        return _entries.end();
      }
      std::vector<Integer> const& entries() const noexcept {
        return _entries;
      }

      bool is_zero() const {
        return std::all_of(
            _entries.begin(), _entries.end(), [](auto const& x) { return x == 0; });
      }

      friend bool operator==(Derived const& a, Derived const& b) {
        return a._entries == b._entries;
      }
      // Lexicographic; used only for canonical orderings.
      friend std::strong_ordering operator<=>(Derived const& a,
                                              Derived const& b) {
        auto const n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i] < b[i]) {
            return std::strong_ordering::less;
          }
          if (b[i] < a[i]) {
            return std::strong_ordering::greater;
          }
        }
        return a.size() <=> b.size();
      }

      friend std::ostream& operator<<(std::ostream& os, Derived const& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << (i ? "," : "") << v[i];
        }
        return os << ')';
      }

      std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i) {
          s += (i ? "," : "") + _entries[i].str();
        }
        return s + ")";
      }

     protected:
      std::vector<Integer> _entries;
    };
  }  // namespace detail

  // A vector of naturals: exponent vectors, ambient points of affine
  // semigroups, elements of minimal sets.
  class NVec : public detail::int_vector<NVec> {
   public:
    using int_vector::int_vector;

    explicit NVec(std::vector<Integer> entries)
        : int_vector(std::move(entries)) {
      for (auto const& x : _entries) {
        if (x < 0) {
          raise(errc::invalid_spec, "negative entry in a vector of naturals");
        }
      }
    }
    NVec(std::initializer_list<long long> il) : NVec(std::vector<Integer>(il.begin(), il.end())) {}

    static NVec unit(std::size_t n, std::size_t i) {
      NVec e(n);
      e._entries[i] = 1;
      return e;
    }

    static NVec from_words(std::span<std::uint32_t const> w) {
      NVec v(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        v._entries[i] = w[i];
      }
      return v;
    }

    // Length of the vector (sum of its entries).
    Integer norm() const {
      Integer s = 0;
      for (auto const& x : _entries) {
        s += x;
      }
      return s;
    }

    NVec& operator+=(NVec const& o) {
      for (std::size_t i = 0; i < size(); ++i) {
        _entries[i] += o._entries[i];
      }
      return *this;
    }
    friend NVec operator+(NVec a, NVec const& b) {
      return a += b;
    }
    friend NVec operator*(Integer const& k, NVec v) {
      for (auto& x : v._entries) {
        x *= k;
      }
      return v;
    }
  };

  // A vector of integers: lattice elements and right-hand sides.
  class ZVec : public detail::int_vector<ZVec> {
   public:
    using int_vector::int_vector;
    explicit ZVec(NVec const& v) : int_vector(v.entries()) {}

    Integer& operator[](std::size_t i) {
      return _entries[i];
    }
    using int_vector::operator[];
  };

  // Componentwise order: a <= b iff b - a is a vector of naturals.
  template <typename V>
  bool componentwise_le(V const& a, V const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] < a[i]) {
        return false;
      }
    }
    return true;
  }

  // Componentwise maximum.
  inline NVec join(NVec const& a, NVec const& b) {
    std::vector<Integer> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = std::max(a[i], b[i]);
    }
    return NVec(std::move(r));
  }

  inline std::vector<std::int64_t> to_words(NVec const& v) {
    std::vector<std::int64_t> w;
    w.reserve(v.size());
    for (auto const& x : v) {
      w.push_back(to_word(x, "vector entry"));
    }
    return w;
  }

}  // namespace omega

#endif  // OMEGA_VEC_HPP
