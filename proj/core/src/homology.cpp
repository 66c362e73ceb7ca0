#include "cubical/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "cubical/error.hpp"

namespace cubical {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in homology computation");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in homology computation");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in homology computation");
  return r;
}

std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw Error("integer overflow in homology computation");
  return v < 0 ? -v : v;
}

}  // namespace

ChainComplex chain_complex(const Presheaf& x) {
  if (x.flavor() != Flavor::simplicial) throw PreconditionError("chain complex needs a simplicial presheaf");
  const int top = x.truncation();
  ChainComplex cc;
  std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    cc.basis.emplace_back();
    pos[static_cast<std::size_t>(n)].assign(x.size(n), static_cast<std::size_t>(-1));
    for (CellIndex c = 0; c < x.size(n); ++c) {
      if (is_degenerate(x, n, c)) continue;
      pos[static_cast<std::size_t>(n)][c] = cc.basis.back().size();
      cc.basis.back().push_back(c);
    }
  }
  cc.boundary.emplace_back();
  for (int n = 1; n <= top; ++n) {
    const auto& rows = cc.basis[static_cast<std::size_t>(n - 1)];
    const auto& cols = cc.basis[static_cast<std::size_t>(n)];
    IntMatrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int i = 0; i <= n; ++i) {
        const CellIndex f = x.act(GenOp{OpKind::face, n, i, 0}, cols[j]);
        const std::size_t r = pos[static_cast<std::size_t>(n - 1)][f];
        if (r == static_cast<std::size_t>(-1)) continue;
        m[r][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(m));
  }
  return cc;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    }
  }
  return out;
}

std::vector<std::int64_t> smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (best == 0 || magnitude(a[i][j]) < best)) {
            best = magnitude(a[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) return diag;
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      const std::int64_t p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const std::int64_t q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const std::int64_t q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(magnitude(a[t][t]));
  }
  return diag;
}

bool HomologyResult::acyclic() const {
  if (!minus_one.is_zero()) return false;
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

HomologyResult homology(const Presheaf& x, bool reduced) {
  const ChainComplex cc = chain_complex(x);
  const int top = x.truncation();
  if (!cc.basis[static_cast<std::size_t>(top)].empty()) {
    throw PreconditionError("homology: nondegenerate simplices in the top dimension " + std::to_string(top) +
                            "; truncate at least one dimension higher");
  }
  // rank and invariants of every boundary map, plus the augmentation.
  std::vector<std::vector<std::int64_t>> inv(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) inv[static_cast<std::size_t>(n)] = smith_normal_form(cc.boundary[static_cast<std::size_t>(n)]);
  std::vector<std::int64_t> aug;
  if (reduced && !cc.basis[0].empty()) {
    aug = smith_normal_form(IntMatrix{std::vector<std::int64_t>(cc.basis[0].size(), 1)});
  }
  HomologyResult res;
  res.reduced = reduced;
  for (int n = 0; n < top; ++n) {
    const std::size_t dim = cc.basis[static_cast<std::size_t>(n)].size();
    const std::size_t rank_out = n == 0 ? aug.size() : inv[static_cast<std::size_t>(n)].size();
    const auto& in = inv[static_cast<std::size_t>(n + 1)];
    HomologyGroup g;
    g.betti = dim - rank_out - in.size();
    for (std::int64_t d : in) {
      if (d > 1) g.torsion.push_back(d);
    }
    res.groups.push_back(std::move(g));
  }
  if (reduced && cc.basis[0].empty()) res.minus_one.betti = 1;
  return res;
}

std::string render(const HomologyGroup& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (g.betti > 0) s = g.betti == 1 ? "Z" : "Z^" + std::to_string(g.betti);
  for (std::int64_t d : g.torsion) {
    if (!s.empty()) s += " ⊕ ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

}  // namespace cubical
