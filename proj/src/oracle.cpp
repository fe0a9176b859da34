#include "sl2real/oracle.hpp"

#include "sl2real/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace sl2real::oracle {

namespace {

using Vec4 = std::array<Int, 4>;
using Row = std::array<Int, 4>;

Mat2 to_mat(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

Int dot(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// Pairwise size reduction; keeps enumeration boxes small.
void reduce_basis(std::vector<Vec4>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Int num = dot(basis[i], basis[j]);
        const Int den = dot(basis[j], basis[j]);
        if (2 * abs(num) <= den) continue;
        const Int mu = floor_div(2 * num + den, 2 * den);  // round(num/den)
        for (int k = 0; k < 4; ++k) basis[i][k] -= mu * basis[j][k];
        changed = true;
      }
    }
  }
}

// Kernel of a 4x4 integer system via unimodular column operations:
// rows * U = [H | 0], kernel spanned by the trailing columns of U.
LatticeBasis kernel_of(const std::array<Row, 4>& system) {
  std::array<Row, 4> m = system;
  std::array<Vec4, 4> cols;  // columns of U
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) cols[j][k] = (j == k) ? 1 : 0;
  }
  auto swap_cols = [&](int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
    std::swap(cols[i], cols[j]);
  };
  auto sub_col = [&](int target, int src, const Int& factor) {
    for (auto& row : m) row[target] -= factor * row[src];
    for (int k = 0; k < 4; ++k) cols[target][k] -= factor * cols[src][k];
  };

  int rank = 0;
  for (int r = 0; r < 4 && rank < 4; ++r) {
    for (;;) {
      int pivot = -1;
      for (int j = rank; j < 4; ++j) {
        if (m[r][j] != 0 && (pivot < 0 || abs(m[r][j]) < abs(m[r][pivot]))) pivot = j;
      }
      if (pivot < 0) break;
      swap_cols(rank, pivot);
      bool done = true;
      for (int j = rank + 1; j < 4; ++j) {
        if (m[r][j] == 0) continue;
        sub_col(j, rank, floor_div(m[r][j], m[r][rank]));
        if (m[r][j] != 0) done = false;
      }
      if (done) {
        ++rank;
        break;
      }
    }
  }

  std::vector<Vec4> basis(cols.begin() + rank, cols.end());
  reduce_basis(basis);
  for (auto& v : basis) {
    // Normalize sign: first nonzero coordinate positive.
    auto nz = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
    if (nz != v.end() && *nz < 0) {
      for (auto& x : v) x = -x;
    }
  }
  return {std::move(basis)};
}

Int det_of(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Int term = m[0][col] * det_of(std::move(minor));
    total += (col % 2 == 0) ? term : Int(-term);
  }
  return total;
}

// A k x k nonsingular subsystem of the basis: rows (matrix entries) chosen,
// its determinant and adjugate, so coefficients c = adj * v_S / det.
struct Coordinates {
  std::vector<int> rows;
  Int det;
  std::vector<std::vector<Int>> adj;
};

Coordinates coordinates_for(const LatticeBasis& basis) {
  const std::size_t k = basis.rank();
  Coordinates best{{}, 0, {}};
  // All k-subsets of {0,1,2,3}; keep the one with the largest |det|.
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> rows;
    for (int r = 0; r < 4; ++r) {
      if (mask & (1u << r)) rows.push_back(r);
    }
    std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = basis.vectors[j][rows[i]];
    const Int d = det_of(sub);
    if (abs(d) <= abs(best.det)) continue;
    std::vector<std::vector<Int>> adj(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        // adj[i][j] = (-1)^(i+j) * minor(j, i)
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 0; r < k; ++r) {
          if (r == j) continue;
          std::vector<Int> row;
          for (std::size_t c = 0; c < k; ++c) {
            if (c != i) row.push_back(sub[r][c]);
          }
          minor.push_back(std::move(row));
        }
        const Int md = det_of(std::move(minor));
        adj[i][j] = ((i + j) % 2 == 0) ? md : Int(-md);
      }
    }
    best = {std::move(rows), d, std::move(adj)};
  }
  return best;
}

std::array<Row, 4> intertwiner_system(const Mat2& a, const Mat2& b) {
  // P*A - B*P = 0 for P = (x y; z w).
  return {{
      {a.a - b.a, a.c, -b.b, 0},
      {a.b, a.d - b.a, 0, -b.b},
      {-b.c, 0, a.a - b.d, a.c},
      {0, -b.c, a.b, a.d - b.d},
  }};
}

bool entries_within(const Mat2& m, const Int& bound) {
  return abs(m.a) <= bound && abs(m.b) <= bound && abs(m.c) <= bound && abs(m.d) <= bound;
}

bool lex_less(const Mat2& x, const Mat2& y) {
  return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
}

}  // namespace

Mat2 LatticeBasis::combination(const std::vector<Int>& coefficients) const {
  Vec4 v{0, 0, 0, 0};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (int k = 0; k < 4; ++k) v[k] += coefficients[i] * vectors[i][k];
  }
  return to_mat(v);
}

void for_each_involution(long long bound, const std::function<bool(const Mat2&)>& visit) {
  // (x y; z -x) with x^2 + yz = 1.
  for (long long x = -bound; x <= bound; ++x) {
    const long long rest = 1 - x * x;
    for (long long y = -bound; y <= bound; ++y) {
      if (y == 0) {
        if (rest != 0) continue;
        for (long long z = -bound; z <= bound; ++z) {
          if (!visit(Mat2{x, 0, z, -x})) return;
        }
      } else if (rest % y == 0) {
        const long long z = rest / y;
        if (z >= -bound && z <= bound && !visit(Mat2{x, y, z, -x})) return;
      }
    }
  }
}

std::vector<Mat2> enumerate_involutions(long long bound) {
  std::vector<Mat2> out;
  for_each_involution(bound, [&](const Mat2& j) {
    out.push_back(j);
    return true;
  });
  return out;
}

std::optional<std::pair<Mat2, Mat2>> brute_force_factor(const Mat2& a, long long bound) {
  const Int second_bound = bound * (a.max_abs_entry() + 1);
  std::optional<std::pair<Mat2, Mat2>> found;
  for_each_involution(bound, [&](const Mat2& j1) {
    Mat2 j2 = j1 * a;  // J1^-1 = J1
    if (j2 * j2 == Mat2::identity() && j2.det() == -1 && entries_within(j2, second_bound)) {
      found.emplace(j1, std::move(j2));
      return false;
    }
    return true;
  });
  return found;
}

LatticeBasis intertwiner_kernel(const Mat2& a, const Mat2& b) {
  return kernel_of(intertwiner_system(a, b));
}

LatticeBasis integer_kernel(const Mat2& a) {
  if (!a.in_sl2z()) throw Error(ErrorCode::NotSL2, to_compact(a));
  return intertwiner_kernel(a, inverse(a));
}

bool lattice_contains(const LatticeBasis& basis, const Mat2& m) {
  const Vec4 v{m.a, m.b, m.c, m.d};
  if (basis.rank() == 0) return v == Vec4{0, 0, 0, 0};
  const Coordinates coords = coordinates_for(basis);
  std::vector<Int> coefficients(basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    Int num = 0;
    for (std::size_t j = 0; j < basis.rank(); ++j) num += coords.adj[i][j] * v[coords.rows[j]];
    if (num % coords.det != 0) return false;
    coefficients[i] = num / coords.det;
  }
  return basis.combination(coefficients) == m;
}

std::optional<Mat2> brute_force_intertwiner(const Mat2& a, const Mat2& b, long long bound,
                                            std::vector<int> allowed_dets) {
  const LatticeBasis basis = intertwiner_kernel(a, b);
  const std::size_t k = basis.rank();
  if (k == 0) return std::nullopt;
  const Coordinates coords = coordinates_for(basis);

  // |c_i| <= bound * sum_j |adj_ij| / |det|
  std::vector<Int> limit(k);
  for (std::size_t i = 0; i < k; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < k; ++j) s += abs(coords.adj[i][j]);
    limit[i] = bound * s / abs(coords.det);
  }

  const Int entry_bound = bound;
  std::optional<Mat2> best;
  std::vector<Int> c(k);
  std::function<void(std::size_t)> scan = [&](std::size_t i) {
    if (i == k) {
      const Mat2 p = basis.combination(c);
      if (!entries_within(p, entry_bound)) return;
      const Int dt = p.det();
      if (std::find_if(allowed_dets.begin(), allowed_dets.end(),
                       [&](int allowed) { return dt == allowed; }) == allowed_dets.end()) {
        return;
      }
      if (p * a != b * p) return;
      if (!best || lex_less(p, *best)) best = p;
      return;
    }
    for (c[i] = -limit[i]; c[i] <= limit[i]; ++c[i]) scan(i + 1);
  };
  scan(0);
  return best;
}

std::optional<Mat2> brute_force_conjugator(const Mat2& a, long long bound) {
  if (!a.in_sl2z()) throw Error(ErrorCode::NotSL2, to_compact(a));
  const Mat2 a_inv = inverse(a);
  auto q = brute_force_intertwiner(a, a_inv, bound, {-1});
  if (q && inverse(*q) * a * *q != a_inv) return std::nullopt;
  return q;
}

}  // namespace sl2real::oracle
