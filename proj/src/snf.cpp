#include "jocp/snf.hpp"

#include <stdexcept>

namespace jocp {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// row a += f * row b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& f) {
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += f * m[b][j];
}

// col a += f * col b
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& f) {
  for (auto& row : m) row[a] += f * row[b];
}

void negate_row(IntMatrix& m, std::size_t a) {
  for (auto& x : m[a]) x = -x;
}

BigInt trunc_quot(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<BigInt> mat_vec(const IntMatrix& a, const std::vector<BigInt>& v) {
  std::vector<BigInt> out(a.size(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) {
      throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMatrix out(rows, std::vector<BigInt>(cols, BigInt(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) {
      throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw std::invalid_argument("smith_normal_form: ragged matrix");
    }
  }

  IntMatrix d = a;
  IntMatrix u = identity_matrix(rows);
  IntMatrix v = identity_matrix(cols);
  const std::size_t nmin = std::min(rows, cols);

  for (std::size_t s = 0; s < nmin; ++s) {
    while (true) {
      // Smallest nonzero |entry| in the trailing submatrix, scanned in row
      // then column order so ties break deterministically.
      bool found = false;
      std::size_t pr = s, pc = s;
      BigInt best;
      for (std::size_t i = s; i < rows; ++i) {
        for (std::size_t j = s; j < cols; ++j) {
          if (d[i][j] == 0) continue;
          BigInt ab = abs(d[i][j]);
          if (!found || ab < best) {
            found = true;
            best = ab;
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) break;  // trailing submatrix is zero

      swap_rows(d, s, pr);
      swap_rows(u, s, pr);
      swap_cols(d, s, pc);
      swap_cols(v, s, pc);

      bool dirty = false;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (d[i][s] == 0) continue;
        const BigInt q = trunc_quot(d[i][s], d[s][s]);
        if (q != 0) {
          add_row(d, i, s, -q);
          add_row(u, i, s, -q);
        }
        if (d[i][s] != 0) dirty = true;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (d[s][j] == 0) continue;
        const BigInt q = trunc_quot(d[s][j], d[s][s]);
        if (q != 0) {
          add_col(d, j, s, -q);
          add_col(v, j, s, -q);
        }
        if (d[s][j] != 0) dirty = true;
      }
      if (dirty) continue;  // remainders are smaller; repick the pivot

      // Lone pivot. Enforce that it divides the rest of the submatrix by
      // folding an offending row in and reducing again.
      bool divides_all = true;
      std::size_t bad_row = 0;
      for (std::size_t i = s + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = s + 1; j < cols; ++j) {
          if (d[i][j] % d[s][s] != 0) {
            divides_all = false;
            bad_row = i;
            break;
          }
        }
      }
      if (divides_all) break;
      add_row(d, s, bad_row, BigInt(1));
      add_row(u, s, bad_row, BigInt(1));
    }
    if (d[s][s] < 0) {
      negate_row(d, s);
      negate_row(u, s);
    }
  }

  SNFResult out;
  out.left = std::move(u);
  out.right = std::move(v);
  out.diagonal.reserve(nmin);
  for (std::size_t s = 0; s < nmin; ++s) out.diagonal.push_back(d[s][s]);
  return out;
}

}  // namespace jocp
