#include "gtqd/modn.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gtqd/error.hpp"

namespace gtqd {

ModNMatrix::ModNMatrix(i64 modulus, int rows, int cols)
    : modulus_(modulus), cols_(cols), rows_(rows) {
  if (modulus <= 0) throw std::invalid_argument("ModNMatrix: modulus must be positive");
}

void ModNMatrix::add(int r, int c, i64 value) {
  value = mod(value, modulus_);
  if (value != 0) rows_[r].emplace_back(c, value);
}

void ModNMatrix::finalize() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end());
    Row merged;
    for (const auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second = mod(merged.back().second + v, modulus_);
      } else {
        merged.emplace_back(c, v);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    row = std::move(merged);
  }
}

i64 ModNMatrix::at(int r, int c) const {
  for (const auto& [col, v] : rows_[r])
    if (col == c) return v;
  return 0;
}

std::vector<i64> ModNMatrix::apply(const std::vector<i64>& x) const {
  std::vector<i64> out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    i128 acc = 0;
    for (const auto& [c, v] : rows_[r]) acc += static_cast<i128>(v) * mod(x[c], modulus_);
    out[r] = static_cast<i64>(acc % modulus_);
  }
  return out;
}

ModNMatrix ModNMatrix::reduced(i64 modulus) const {
  ModNMatrix out(modulus, rows(), cols_);
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) out.add(r, c, v);
  out.finalize();
  return out;
}

ModNMatrix ModNMatrix::rescaled(i64 modulus) const {
  ModNMatrix out(modulus, rows(), cols_);
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) {
      // signed representative keeps small coefficients (e.g. -1) exact
      i64 s = v > modulus_ / 2 ? v - modulus_ : v;
      out.add(r, c, s);
    }
  out.finalize();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

int valuation(i64 x, i64 p, int k) {
  if (x == 0) return k;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

i64 ipow(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

LocalSmith::LocalSmith(const ModNMatrix& a, i64 p, int k, bool track_columns,
                       std::vector<std::vector<i64>> rhs)
    : p_(p), k_(k), pk_(ipow(p, k)), cols_(a.cols()), track_(track_columns), rhs_(std::move(rhs)) {
  rows_.resize(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) {
      i64 x = mod(v, pk_);
      if (x != 0) rows_[r].emplace_back(c, x);
    }
  }
  for (auto& b : rhs_) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("LocalSmith: rhs size");
    for (i64& x : b) x = mod(x, pk_);
  }
  if (track_) {
    v_cols_.assign(cols_, std::vector<i64>(cols_, 0));
    for (int j = 0; j < cols_; ++j) v_cols_[j][j] = 1;
  }
  run();
}

void LocalSmith::run() {
  const int nrows = static_cast<int>(rows_.size());
  row_done_.assign(nrows, false);
  std::vector<bool> col_done(cols_, false);
  std::vector<std::vector<int>> col_rows(cols_);
  for (int r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows_[r]) col_rows[c].push_back(r);

  auto mulmod = [this](i64 a, i64 b) { return static_cast<i64>(static_cast<i128>(a) * b % pk_); };

  for (int v = 0; v < k_; ++v) {
    const i64 pv = ipow(p_, v);
    while (true) {
      int best_row = -1, best_col = -1;
      std::size_t best_len = 0, best_cnt = 0;
      for (int r = 0; r < nrows; ++r) {
        if (row_done_[r] || rows_[r].empty()) continue;
        if (best_row >= 0 && rows_[r].size() >= best_len) continue;
        int col = -1;
        std::size_t cnt = 0;
        for (const auto& [c, x] : rows_[r]) {
          if (valuation(x, p_, k_) != v) continue;
          std::size_t cc = col_rows[c].size();
          if (col < 0 || cc < cnt) {
            col = c;
            cnt = cc;
          }
        }
        if (col < 0) continue;
        best_row = r;
        best_col = col;
        best_len = rows_[r].size();
        best_cnt = cnt;
        if (best_len == 1) break;
      }
      (void)best_cnt;
      if (best_row < 0) break;

      const int r = best_row, c = best_col;
      i64 entry = 0;
      for (const auto& [cc, x] : rows_[r])
        if (cc == c) entry = x;
      const i64 unit_inv = inv_mod(entry / pv, pk_);
      for (auto& [cc, x] : rows_[r]) x = mulmod(x, unit_inv);
      for (auto& b : rhs_) b[r] = mulmod(b[r], unit_inv);

      // clear column c in the other rows
      std::vector<int> touching;
      touching.swap(col_rows[c]);
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      for (int s : touching) {
        if (s == r || row_done_[s]) continue;
        i64 b = 0;
        for (const auto& [cc, x] : rows_[s])
          if (cc == c) b = x;
        if (b == 0) continue;
        const i64 t = b / pv;
        ModNMatrix::Row merged;
        merged.reserve(rows_[s].size() + rows_[r].size());
        auto it = rows_[s].begin(), jt = rows_[r].begin();
        while (it != rows_[s].end() || jt != rows_[r].end()) {
          if (jt == rows_[r].end() || (it != rows_[s].end() && it->first < jt->first)) {
            merged.push_back(*it++);
          } else if (it == rows_[s].end() || jt->first < it->first) {
            i64 x = mod(-mulmod(t, jt->second), pk_);
            if (x != 0) {
              merged.emplace_back(jt->first, x);
              col_rows[jt->first].push_back(s);
            }
            ++jt;
          } else {
            i64 x = mod(it->second - mulmod(t, jt->second), pk_);
            if (x != 0) merged.emplace_back(it->first, x);
            ++it;
            ++jt;
          }
        }
        rows_[s] = std::move(merged);
        for (auto& rb : rhs_) rb[s] = mod(rb[s] - mulmod(t, rb[r]), pk_);
      }

      // clear row r by column operations (only V is affected)
      if (track_) {
        for (const auto& [j, x] : rows_[r]) {
          if (j == c) continue;
          const i64 t = x / pv;
          auto& vj = v_cols_[j];
          const auto& vc = v_cols_[c];
          for (int i = 0; i < cols_; ++i)
            if (vc[i] != 0) vj[i] = mod(vj[i] - mulmod(t, vc[i]), pk_);
        }
      }
      rows_[r] = {{c, pv}};
      row_done_[r] = true;
      col_done[c] = true;
      pivots_.push_back({r, c, v});
    }
  }
}

std::vector<i64> LocalSmith::v_column(int j) const {
  if (!track_) throw std::logic_error("LocalSmith: column transform not tracked");
  return v_cols_[j];
}

std::vector<i64> LocalSmith::v_row(int i) const {
  if (!track_) throw std::logic_error("LocalSmith: column transform not tracked");
  std::vector<i64> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = v_cols_[j][i];
  return out;
}

bool LocalSmith::rhs_consistent(std::size_t which) const {
  const auto& b = rhs_.at(which);
  for (std::size_t r = 0; r < b.size(); ++r)
    if (!row_done_[r] && b[r] != 0) return false;
  for (const auto& pv : pivots_)
    if (b[pv.row] % ipow(p_, pv.valuation) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::optional<ModNSolution> solve_modN(const ModNMatrix& a, const std::vector<i64>& b,
                                       const SolveOptions& options) {
  const i64 n = a.modulus();
  const int cols = a.cols();
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_modN: size mismatch");

  std::vector<int> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  if (options.pivot_seed != 0) {
    std::mt19937_64 rng(options.pivot_seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }

  ModNSolution sol;
  sol.particular.assign(cols, 0);
  if (n == 1) return sol;
  for (auto [p, k] : factorize(n)) {
    const i64 pk = ipow(p, k);
    // build permuted matrix: new column j holds original column perm[j]
    std::vector<int> inv_perm(cols);
    for (int j = 0; j < cols; ++j) inv_perm[perm[j]] = j;
    ModNMatrix permuted(pk, a.rows(), cols);
    for (int r = 0; r < a.rows(); ++r)
      for (const auto& [c, v] : a.row(r)) permuted.add(r, inv_perm[c], v);
    permuted.finalize();

    LocalSmith snf(permuted, p, k, true, {b});
    if (!snf.rhs_consistent(0)) return std::nullopt;

    std::vector<i64> y(cols, 0);
    std::vector<bool> is_pivot(cols, false);
    const auto& ub = snf.rhs()[0];
    for (const auto& pv : snf.pivots()) {
      is_pivot[pv.col] = true;
      y[pv.col] = ub[pv.row] / ipow(p, pv.valuation);
    }
    std::vector<i64> x_local(cols, 0);
    for (int j = 0; j < cols; ++j) {
      if (y[j] == 0) continue;
      auto vc = snf.v_column(j);
      for (int i = 0; i < cols; ++i)
        x_local[i] = static_cast<i64>((x_local[i] + static_cast<i128>(y[j]) * vc[i]) % pk);
    }

    // CRT idempotent for this prime power
    const i64 rest = n / pk;
    const i64 e = static_cast<i64>(static_cast<i128>(rest) * inv_mod(rest % pk, pk) % n);
    auto embed = [&](const std::vector<i64>& v) {
      std::vector<i64> out(cols);
      for (int j = 0; j < cols; ++j) out[perm[j]] = static_cast<i64>(static_cast<i128>(v[j]) * e % n);
      return out;
    };
    auto xe = embed(x_local);
    for (int j = 0; j < cols; ++j) sol.particular[j] = (sol.particular[j] + xe[j]) % n;

    std::vector<int> pivot_val(cols, -1);
    for (const auto& pv : snf.pivots()) pivot_val[pv.col] = pv.valuation;
    for (int j = 0; j < cols; ++j) {
      if (pivot_val[j] == 0) continue;
      auto vc = snf.v_column(j);
      if (pivot_val[j] > 0) {
        const i64 scale = ipow(p, k - pivot_val[j]);
        for (i64& x : vc) x = static_cast<i64>(static_cast<i128>(x) * scale % pk);
      }
      sol.kernel.push_back(embed(vc));
    }
  }
  return sol;
}

std::vector<i64> elementary_divisors_modN(const ModNMatrix& a) {
  const i64 n = a.modulus();
  const int count = std::min(a.rows(), a.cols());
  std::vector<i64> divisors(count, 1);
  for (auto [p, k] : factorize(n)) {
    LocalSmith snf(a.reduced(ipow(p, k)), p, k, false);
    std::vector<int> vals;
    for (const auto& pv : snf.pivots()) vals.push_back(pv.valuation);
    while (static_cast<int>(vals.size()) < count) vals.push_back(k);
    std::sort(vals.begin(), vals.end());
    for (int i = 0; i < count; ++i) divisors[i] *= ipow(p, vals[i]);
  }
  for (i64& d : divisors)
    if (d == n) d = 0;
  return divisors;
}

// ---------------------------------------------------------------------------

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t m = a.size(), inner = b.size(), n = b.empty() ? 0 : b[0].size();
  IntMatrix out(m, std::vector<i64>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      i128 acc = 0;
      for (std::size_t t = 0; t < inner; ++t) acc += static_cast<i128>(a[i][t]) * b[t][j];
      out[i][j] = narrow(acc);
    }
  return out;
}

SmithResult smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  IntMatrix u(m, std::vector<i64>(m, 0)), v(n, std::vector<i64>(n, 0));
  for (int i = 0; i < m; ++i) u[i][i] = 1;
  for (int j = 0; j < n; ++j) v[j][j] = 1;

  auto row_axpy = [&](int dst, int src, i64 q) {  // row_dst -= q * row_src
    for (int j = 0; j < n; ++j) a[dst][j] = narrow(a[dst][j] - static_cast<i128>(q) * a[src][j]);
    for (int j = 0; j < m; ++j) u[dst][j] = narrow(u[dst][j] - static_cast<i128>(q) * u[src][j]);
  };
  auto col_axpy = [&](int dst, int src, i64 q) {  // col_dst -= q * col_src
    for (int i = 0; i < m; ++i) a[i][dst] = narrow(a[i][dst] - static_cast<i128>(q) * a[i][src]);
    for (int i = 0; i < n; ++i) v[i][dst] = narrow(v[i][dst] - static_cast<i128>(q) * v[i][src]);
  };
  auto swap_rows = [&](int x, int y) {
    std::swap(a[x], a[y]);
    std::swap(u[x], u[y]);
  };
  auto swap_cols = [&](int x, int y) {
    for (int i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
    for (int i = 0; i < n; ++i) std::swap(v[i][x], v[i][y]);
  };

  const int count = std::min(m, n);
  for (int t = 0; t < count; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi < 0 || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        row_axpy(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        col_axpy(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (int j = 0; j < n; ++j) a[t][j] = -a[t][j];
      for (int j = 0; j < m; ++j) u[t][j] = -u[t][j];
    }
  }
  SmithResult res;
  for (int t = 0; t < count; ++t) res.divisors.push_back(a[t][t]);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

}  // namespace gtqd
