#ifndef OMEGA_LATTICE_HPP
#define OMEGA_LATTICE_HPP

// Integer lattice plumbing: Hermite normal form of a generating set and
// integer kernels of matrices.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "linear_search.hpp"
#include "vec.hpp"

namespace omega {

  namespace detail {
    using int_rows = std::vector<std::vector<Integer>>;

    // Unimodular row operations on rows[first..] until column col has at
    // most one nonzero entry there; returns whether a pivot was produced
    // (and swaps it into row `first`).
    inline bool eliminate_column(int_rows& rows, std::size_t first, std::size_t col) {
      while (true) {
        std::size_t best = rows.size();
        for (std::size_t i = first; i < rows.size(); ++i) {
          if (rows[i][col] != 0
              && (best == rows.size()
                  || abs(rows[i][col]) < abs(rows[best][col]))) {
            best = i;
          }
        }
        if (best == rows.size()) {
          return false;
        }
        std::swap(rows[first], rows[best]);
        bool done = true;
        for (std::size_t i = first + 1; i < rows.size(); ++i) {
          if (rows[i][col] == 0) {
            continue;
          }
          Integer q = rows[i][col] / rows[first][col];
          for (std::size_t k = 0; k < rows[i].size(); ++k) {
            rows[i][k] -= q * rows[first][k];
          }
          done = done && rows[i][col] == 0;
        }
        if (done) {
          return true;
        }
      }
    }
  }  // namespace detail

  // Canonical basis (row Hermite normal form, zero rows dropped) of the
  // subgroup of Z^n generated by `gens`.  Pivots are positive and entries
  // above a pivot lie in [0, pivot).
  inline std::vector<ZVec> hermite_normal_form(std::vector<ZVec> const& gens) {
    if (gens.empty()) {
      return {};
    }
    auto const n = gens.front().size();
    detail::int_rows rows;
    for (auto const& g : gens) {
      if (g.size() != n) {
        raise(errc::mixed_arity, "lattice generators of different lengths");
      }
      rows.push_back(g.entries());
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
      if (!detail::eliminate_column(rows, rank, col)) {
        continue;
      }
      if (rows[rank][col] < 0) {
        for (auto& x : rows[rank]) {
          x = -x;
        }
      }
      for (std::size_t i = 0; i < rank; ++i) {
        Integer q = floor_div(rows[i][col], rows[rank][col]);
        for (std::size_t k = 0; k < n; ++k) {
          rows[i][k] -= q * rows[rank][k];
        }
      }
      pivots.push_back(col);
      ++rank;
    }
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < rank; ++i) {
      out.emplace_back(std::move(rows[i]));
    }
    return out;
  }

  // Basis of {z in Z^cols : M z = 0}.  Column operations on [M ; I] keep the
  // transformation unimodular, so the columns whose M-part vanishes span the
  // whole kernel, not a finite-index sublattice.  Returned in Hermite form.
  inline std::vector<ZVec> integer_kernel(IntMatrix const& M) {
    auto const d = M.rows();
    auto const p = M.cols();
    // Work on the transpose so that column operations become row operations.
    detail::int_rows rows(p, std::vector<Integer>(d + p, Integer(0)));
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        rows[j][i] = M(i, j);
      }
      rows[j][d + j] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < p; ++col) {
      if (detail::eliminate_column(rows, rank, col)) {
        ++rank;
      }
    }
    std::vector<ZVec> kernel;
    for (std::size_t j = rank; j < p; ++j) {
      kernel.emplace_back(
          std::vector<Integer>(rows[j].begin() + d, rows[j].end()));
    }
    return hermite_normal_form(kernel);
  }

  inline std::size_t matrix_rank(IntMatrix const& M) {
    return M.cols() - integer_kernel(M).size();
  }

}  // namespace omega

#endif  // OMEGA_LATTICE_HPP
