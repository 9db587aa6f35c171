// Copyright 2026 The linksched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detail/simplex.hpp"

#include <cstddef>

#include "linksched/errors.hpp"

namespace linksched::detail {

LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  const std::size_t width = n + m;

  for (const auto& rhs : b) {
    if (rhs.is_negative()) throw Error("simplex: negative right-hand side");
  }

  // Tableau rows: original columns followed by slack columns.
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width));
  std::vector<Rational> rhs = b;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
    tab[i][n + i] = Rational(1);
  }
  std::vector<Rational> reduced = c;  // reduced costs; slack entries start at 0
  reduced.resize(width);
  Rational objective(0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: smallest-index column with positive reduced cost.
    std::size_t entering = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (reduced[j].sign() > 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    // Ratio test; ties resolved toward the smallest basis index (Bland).
    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][entering].sign() <= 0) continue;
      const Rational ratio = rhs[i] / tab[i][entering];
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) throw Error("simplex: unbounded program");

    // Pivot: normalize the leaving row, then eliminate the entering column.
    const Rational pivot = tab[leaving][entering];
    for (std::size_t j = 0; j < width; ++j) {
      if (!tab[leaving][j].is_zero()) tab[leaving][j] /= pivot;
    }
    rhs[leaving] /= pivot;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving || tab[i][entering].is_zero()) continue;
      const Rational factor = tab[i][entering];
      for (std::size_t j = 0; j < width; ++j) {
        if (!tab[leaving][j].is_zero()) tab[i][j] -= factor * tab[leaving][j];
      }
      rhs[i] -= factor * rhs[leaving];
    }
    if (!reduced[entering].is_zero()) {
      const Rational factor = reduced[entering];
      for (std::size_t j = 0; j < width; ++j) {
        if (!tab[leaving][j].is_zero()) reduced[j] -= factor * tab[leaving][j];
      }
      objective += factor * rhs[leaving];
    }
    basis[leaving] = entering;
  }

  LpResult result;
  result.objective = objective;
  result.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.primal[basis[i]] = rhs[i];
  }
  result.dual.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    result.dual[i] = -reduced[n + i];
  }
  return result;
}

}  // namespace linksched::detail
