#include "discloc/smith.hpp"

#include <algorithm>
#include <tuple>
#include <stdexcept>

namespace discloc {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

namespace {

/// Elementary operations applied to D together with the transforms.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : s_{IntMatrix::identity(a.rows), IntMatrix::identity(a.rows), a,
           IntMatrix::identity(a.cols), IntMatrix::identity(a.cols)} {}

  SmithForm run() {
    IntMatrix& d = s_.d;
    const std::size_t limit = std::min(d.rows, d.cols);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!bring_pivot(t)) break;
      for (;;) {
        for (std::size_t i = t + 1; i < d.rows; ++i)
          if (d(i, t) != 0) add_row(i, t, -(d(i, t) / d(t, t)));
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (d(t, j) != 0) add_col(j, t, -(d(t, j) / d(t, t)));
        // remainders left: restart from the least entry of the block
        bool remainder = false;
        for (std::size_t i = t + 1; i < d.rows && !remainder; ++i) remainder = d(i, t) != 0;
        for (std::size_t j = t + 1; j < d.cols && !remainder; ++j) remainder = d(t, j) != 0;
        if (remainder) {
          bring_pivot(t);
          continue;
        }
        // divisibility: fold a row holding a non-multiple into row t
        bool folded = false;
        for (std::size_t i = t + 1; i < d.rows && !folded; ++i)
          for (std::size_t j = t + 1; j < d.cols; ++j)
            if (d(i, j) % d(t, t) != 0) {
              add_row(t, i, 1);
              folded = true;
              break;
            }
        if (!folded) break;
      }
      if (d(t, t) < 0) negate_row(t);
    }
    return std::move(s_);
  }

 private:
  bool bring_pivot(std::size_t t) {
    const IntMatrix& d = s_.d;
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows; ++i)
      for (std::size_t j = t; j < d.cols; ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        const Integer ax = abs(x);
        if (!found || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    row_axpy(s_.d, i, j, k);
    row_axpy(s_.u, i, j, k);
    col_axpy(s_.u_inv, j, i, -k);
  }

  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    col_axpy(s_.d, i, j, k);
    col_axpy(s_.v, i, j, k);
    row_axpy(s_.v_inv, j, i, -k);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    row_swap(s_.d, i, j);
    row_swap(s_.u, i, j);
    col_swap(s_.u_inv, i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    col_swap(s_.d, i, j);
    col_swap(s_.v, i, j);
    row_swap(s_.v_inv, i, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < s_.d.cols; ++j) s_.d(i, j) = -s_.d(i, j);
    for (std::size_t j = 0; j < s_.u.cols; ++j) s_.u(i, j) = -s_.u(i, j);
    for (std::size_t r = 0; r < s_.u_inv.rows; ++r) s_.u_inv(r, i) = -s_.u_inv(r, i);
  }

  static void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m(j, c) != 0) m(i, c) += k * m(j, c);
  }
  static void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < m.rows; ++r)
      if (m(r, j) != 0) m(r, i) += k * m(r, j);
  }
  static void row_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
  }
  static void col_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
  }

  SmithForm s_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return Reducer(a).run(); }

Verdict validate_smith(const IntMatrix& a, const SmithForm& s) {
  if (s.u * a * s.v != s.d) return Verdict::fail("smith transforms", "U·A·V != D");
  if (s.u * s.u_inv != IntMatrix::identity(a.rows))
    return Verdict::fail("smith transforms", "U is not unimodular");
  if (s.v * s.v_inv != IntMatrix::identity(a.cols))
    return Verdict::fail("smith transforms", "V is not unimodular");
  const IntMatrix& d = s.d;
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j)
      if (i != j && d(i, j) != 0)
        return Verdict::fail("smith diagonal", "off-diagonal entry",
                             {std::to_string(i), std::to_string(j)});
  const std::size_t k = std::min(d.rows, d.cols);
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return Verdict::fail("smith diagonal", "negative entry", {std::to_string(i)});
    if (i + 1 < k && !(d(i + 1, i + 1) == 0 ? true : d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) == 0))
      return Verdict::fail("smith diagonal", "divisibility chain broken", {std::to_string(i)});
  }
  return Verdict::pass();
}

std::vector<Integer> invariant_factors(const SmithForm& s) {
  std::vector<Integer> out;
  const std::size_t k = std::min(s.d.rows, s.d.cols);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.d(i, i) == 0) continue;
    ++rank;
    if (s.d(i, i) != 1) out.push_back(s.d(i, i));
  }
  for (std::size_t i = rank; i < s.d.cols; ++i) out.push_back(0);
  return out;
}

Integer group_order(const std::vector<Integer>& factors) {
  Integer n = 1;
  for (const auto& f : factors) {
    if (f == 0) return 0;
    n *= f;
  }
  return n;
}

ExponentLattice::ExponentLattice(std::size_t n, std::int64_t exponent)
    : n_(n), exponent_(exponent), rows_(n, std::vector<std::int64_t>(n, 0)) {
  if (exponent <= 0) throw std::invalid_argument("lattice exponent must be positive");
  for (std::size_t j = 0; j < n; ++j) rows_[j][j] = exponent;
}

void ExponentLattice::add(std::vector<std::int64_t> r) {
  if (r.size() != n_) throw std::invalid_argument("relation length does not match the lattice");
  // r only matters modulo the lattice, which contains e·Z^n
  for (auto& x : r) x %= exponent_;
  for (std::size_t j = 0; j < n_; ++j) {
    auto& p = rows_[j];
    if (const std::int64_t q = r[j] / p[j]; q != 0)
      for (std::size_t k = j; k < n_; ++k) r[k] -= q * p[k];
    if (r[j] == 0) continue;
    // extended gcd on (p[j], r[j])
    std::int64_t a = p[j], b = r[j];
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::tie(a, b) = std::pair{b, a - q * b};
      std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
      std::tie(y0, y1) = std::pair{y1, y0 - q * y1};
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    const std::int64_t pa = p[j] / a, rb = r[j] / a;
    std::vector<std::int64_t> pivot(n_), rest(n_);
    for (std::size_t k = j; k < n_; ++k) {
      pivot[k] = x0 * p[k] + y0 * r[k];
      rest[k] = pa * r[k] - rb * p[k];
    }
    p = std::move(pivot);
    r = std::move(rest);
    reduce_above(j);
    for (std::size_t k = j + 1; k < n_; ++k) r[k] %= exponent_;
  }
}

void ExponentLattice::reduce_above(std::size_t j) {
  for (std::size_t i = 0; i <= j; ++i) {
    auto& o = rows_[i];
    for (std::size_t k = std::max(i + 1, j); k < n_; ++k) {
      const auto& q = rows_[k];
      std::int64_t m = o[k] / q[k];
      if (o[k] - m * q[k] < 0) --m;
      if (m == 0) continue;
      for (std::size_t c = k; c < n_; ++c) o[c] -= m * q[c];
    }
  }
}

IntMatrix ExponentLattice::basis() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = rows_[i][j];
  return m;
}

}  // namespace discloc
