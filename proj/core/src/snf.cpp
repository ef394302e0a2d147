#include "hypertrees/snf.hpp"

#include <algorithm>
#include <utility>

namespace hypertrees {

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
}

}  // namespace

Integer SNFResult::torsion_order() const {
  Integer t = 1;
  for (const Integer& d : factors) t *= d;
  return t;
}

SNFResult smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero magnitude in the trailing submatrix
    std::size_t pi = 0, pj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const Integer& v = a.at(i, j);
        if (v == 0) continue;
        Integer av = abs(v);
        if (!found || av < best) {
          found = true;
          best = std::move(av);
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    while (true) {
      bool swapped = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = a.at(i, t) / a.at(t, t);
        if (q != 0)
          for (std::size_t j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
        if (a.at(i, t) != 0) {
          // remainder is a strictly smaller pivot candidate
          swap_rows(a, i, t);
          swapped = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = a.at(t, j) / a.at(t, t);
        if (q != 0)
          for (std::size_t i = t; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
        if (a.at(t, j) != 0) {
          swap_cols(a, j, t);
          swapped = true;
        }
      }
      if (swapped) continue;
      // cross is clear; force the pivot to divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            for (std::size_t jj = t; jj < n; ++jj) a.at(t, jj) += a.at(i, jj);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    ++t;
  }

  SNFResult out;
  out.factors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(abs(a.at(i, i)));
  // normalize the divisibility chain (already holds for this pivoting,
  // but a gcd/lcm sweep makes the postcondition unconditional)
  bool stable = false;
  while (!stable) {
    stable = true;
    for (std::size_t i = 0; i + 1 < out.factors.size(); ++i) {
      Integer &x = out.factors[i], &y = out.factors[i + 1];
      if (y % x != 0) {
        Integer g = gcd(x, y);
        y = x / g * y;
        x = std::move(g);
        stable = false;
      }
    }
  }
  return out;
}

}  // namespace hypertrees
