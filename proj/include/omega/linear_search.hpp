#ifndef OMEGA_LINEAR_SEARCH_HPP
#define OMEGA_LINEAR_SEARCH_HPP

// Minimal nonnegative solutions of linear Diophantine systems by the
// Contejean-Devie frontier method.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "antichain.hpp"
#include "vec.hpp"

namespace omega {

  class IntMatrix {
   public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Integer(0)) {
      if (rows == 0 || cols == 0) {
        raise(errc::invalid_spec, "matrix must have at least one row and column");
      }
    }

    static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows) {
      if (rows.empty() || rows.front().empty()) {
        raise(errc::invalid_spec, "matrix must have at least one row and column");
      }
      IntMatrix m(rows.size(), rows.front().size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m._cols) {
          raise(errc::mixed_arity, "matrix rows of different lengths");
        }
        for (std::size_t j = 0; j < m._cols; ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    Integer& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    template <typename Vec>
    ZVec operator*(Vec const& x) const {
      ZVec r(std::vector<Integer>(_rows, Integer(0)));
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          r[i] += (*this)(i, j) * x[j];
        }
      }
      return r;
    }

   private:
    std::size_t _rows, _cols;
    std::vector<Integer> _data;
  };

  struct SearchLimits {
    // Cap on the number of frontier nodes created by one search.
    std::uint64_t max_nodes = 10'000'000;
  };

  namespace detail {

    inline constexpr std::uint32_t unbounded
        = std::numeric_limits<std::uint32_t>::max();
    inline constexpr std::size_t no_column = std::numeric_limits<std::size_t>::max();

    struct frontier_options {
      // Per-column upper bound on the coordinate (unbounded by default).
      std::vector<std::uint32_t> upper;
      std::uint64_t              max_nodes = SearchLimits{}.max_nodes;
      // Extra pruning: return true to discard a node and its descendants.
      std::function<bool(std::span<std::uint32_t const>)> prune;
      // When set, solutions with coordinate flag_column == 1 are "flagged".
      // With prefix_len > 0 their first prefix_len coordinates are recorded,
      // and any flagged node whose prefix dominates a recorded one is
      // discarded.
      std::size_t flag_column = no_column;
      std::size_t prefix_len  = 0;
      // Stop after the first level containing a flagged solution (or any
      // solution at all when no flag column is set).
      bool stop_early = false;
    };

    // Columns are given as m-dimensional word vectors.  Returns every
    // minimal nonzero x (subject to the bounds and prunings) with sum_j
    // x_j * column_j = 0.
    //
    // A node y is extended by e_j only when <M y, M e_j> < 0.  For a minimal
    // solution s > y we have <M y, M (s - y)> = -|M y|^2 < 0, so some j in
    // the support of s - y passes the test; hence every minimal solution is
    // reached from any of its unit vectors.  Nodes dominating a found
    // solution are dropped, which makes the search terminate.
    inline std::vector<word_vector>
    frontier_search(std::vector<std::vector<std::int64_t>> const& columns,
                    frontier_options const&                        opt) {
      auto const n = columns.size();
      auto const m = n == 0 ? 0 : columns.front().size();
      auto upper   = opt.upper;
      upper.resize(n, unbounded);

      struct node {
        word_vector               x;
        std::vector<std::int64_t> r;
      };

      std::vector<word_vector>   solutions;
      std::vector<std::uint64_t> solution_masks;
      std::vector<word_vector>   flagged_prefixes;
      std::uint64_t              nodes = 0;

      auto dominated = [&](word_vector const& x) {
        auto const mx = support_mask(x);
        for (std::size_t k = 0; k < solutions.size(); ++k) {
          if ((solution_masks[k] & ~mx) == 0 && dominates(x, solutions[k])) {
            return true;
          }
        }
        if (opt.prefix_len > 0 && opt.flag_column != no_column
            && x[opt.flag_column] == 1) {
          std::span<std::uint32_t const> px(x.data(), opt.prefix_len);
          for (auto const& p : flagged_prefixes) {
            if (dominates(px, p)) {
              return true;
            }
          }
        }
        return false;
      };

      std::vector<node> frontier;
      for (std::size_t j = 0; j < n; ++j) {
        if (upper[j] >= 1) {
          node v{word_vector(n, 0), columns[j]};
          v.x[j] = 1;
          if (!(opt.prune && opt.prune(v.x))) {
            frontier.push_back(std::move(v));
          }
        }
      }

      std::vector<node> next;
      std::unordered_set<word_vector, word_vector_hash> seen;
      while (!frontier.empty()) {
        bool flagged_found = false;
        for (auto const& v : frontier) {
          bool zero = true;
          for (auto c : v.r) {
            zero = zero && c == 0;
          }
          if (!zero) {
            continue;
          }
          solutions.push_back(v.x);
          solution_masks.push_back(support_mask(v.x));
          if (opt.flag_column != no_column && v.x[opt.flag_column] == 1) {
            flagged_found = true;
          }
          if (opt.prefix_len > 0 && opt.flag_column != no_column
              && v.x[opt.flag_column] == 1) {
            flagged_prefixes.emplace_back(v.x.begin(),
                                          v.x.begin() + opt.prefix_len);
          }
        }
        if (opt.stop_early
            && (flagged_found
                || (opt.flag_column == no_column && !solutions.empty()))) {
          break;
        }
        next.clear();
        seen.clear();
        for (auto const& v : frontier) {
          bool zero = true;
          for (auto c : v.r) {
            zero = zero && c == 0;
          }
          if (zero) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (v.x[j] >= upper[j]) {
              continue;
            }
            std::int64_t dot = 0;
            for (std::size_t k = 0; k < m; ++k) {
              dot = checked_add(dot, checked_mul(v.r[k], columns[j][k]));
            }
            if (dot >= 0) {
              continue;
            }
            word_vector y = v.x;
            ++y[j];
            if (seen.contains(y) || dominated(y) || (opt.prune && opt.prune(y))) {
              continue;
            }
            if (++nodes > opt.max_nodes) {
              raise(errc::resource_limit,
                    "frontier search exceeded " + std::to_string(opt.max_nodes)
                        + " nodes (raise the node limit)");
            }
            std::vector<std::int64_t> r(m);
            for (std::size_t k = 0; k < m; ++k) {
              r[k] = checked_add(v.r[k], columns[j][k]);
            }
            seen.insert(y);
            next.push_back(node{std::move(y), std::move(r)});
          }
        }
        std::swap(frontier, next);
      }
      return solutions;
    }

    inline std::vector<std::vector<std::int64_t>> columns_of(IntMatrix const& M) {
      std::vector<std::vector<std::int64_t>> cols(
          M.cols(), std::vector<std::int64_t>(M.rows()));
      for (std::size_t j = 0; j < M.cols(); ++j) {
        for (std::size_t i = 0; i < M.rows(); ++i) {
          cols[j][i] = to_word(M(i, j), "matrix entry");
        }
      }
      return cols;
    }

    // Solutions of M x = b (b != 0) through the homogenized system
    // [M | -b] with the extra coordinate bounded by 1; returns the x parts.
    inline std::vector<word_vector>
    inhomogeneous_search(std::vector<std::vector<std::int64_t>> columns,
                         std::vector<std::int64_t> const&       b,
                         frontier_options                       opt) {
      auto const n = columns.size();
      std::vector<std::int64_t> minus_b(b.size());
      for (std::size_t k = 0; k < b.size(); ++k) {
        minus_b[k] = checked_mul(b[k], -1);
      }
      columns.push_back(std::move(minus_b));
      opt.upper.resize(n, unbounded);
      opt.upper.push_back(1);
      opt.flag_column = n;
      std::vector<word_vector> out;
      for (auto& s : frontier_search(columns, opt)) {
        if (s[n] == 1) {
          s.pop_back();
          out.push_back(std::move(s));
        }
      }
      return out;
    }

    inline Antichain to_antichain(std::vector<word_vector> const& ws) {
      std::vector<NVec> vs;
      vs.reserve(ws.size());
      for (auto const& w : ws) {
        vs.push_back(NVec::from_words(w));
      }
      return minimals_filter(std::move(vs));
    }

  }  // namespace detail

  // All minimal nonzero x in N^cols with M x = 0.
  inline Antichain min_solutions_homogeneous(IntMatrix const&    M,
                                             SearchLimits const& limits = {}) {
    detail::frontier_options opt;
    opt.max_nodes = limits.max_nodes;
    return detail::to_antichain(
        detail::frontier_search(detail::columns_of(M), opt));
  }

  // All minimal x in N^cols with M x = b.  For b = 0 this is {0}.
  inline Antichain min_solutions_inhomogeneous(IntMatrix const&    M,
                                               ZVec const&         b,
                                               SearchLimits const& limits = {}) {
    if (b.size() != M.rows()) {
      raise(errc::mixed_arity, "right-hand side length differs from row count");
    }
    if (b.is_zero()) {
      return minimals_filter({NVec(M.cols())});
    }
    std::vector<std::int64_t> bw;
    for (auto const& x : b) {
      bw.push_back(to_word(x, "right-hand side entry"));
    }
    detail::frontier_options opt;
    opt.max_nodes = limits.max_nodes;
    return detail::to_antichain(
        detail::inhomogeneous_search(detail::columns_of(M), bw, opt));
  }

}  // namespace omega

#endif  // OMEGA_LINEAR_SEARCH_HPP
