#include <utility>

#include "rspec/intmat.hpp"

namespace rspec::intmat {
namespace {

// Replaces rows (p, i) by (s*p + t*i, -(b/g)*p + (a/g)*i) where a, b are the
// entries in column col. The 2x2 transform has determinant 1 and clears
// entry (i, col).
void gcd_combine_rows(Matrix& h, Matrix& u, std::size_t p, std::size_t i, std::size_t col) {
  Integer g, s, t;
  const Integer a = h(p, col);
  const Integer b = h(i, col);
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer a_g = a / g;
  const Integer b_g = b / g;
  auto mix = [&](Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer x = m(p, j);
      Integer y = m(i, j);
      m(p, j) = s * x + t * y;
      m(i, j) = a_g * y - b_g * x;
    }
  };
  mix(h);
  mix(u);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_form(const Matrix& m) {
  HermiteForm out{m, Matrix::identity(m.rows()), 0};
  Matrix& h = out.h;
  Matrix& u = out.u;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < h.cols() && pr < h.rows(); ++col) {
    for (std::size_t i = pr + 1; i < h.rows(); ++i)
      if (sgn(h(i, col)) != 0) gcd_combine_rows(h, u, pr, i, col);
    if (sgn(h(pr, col)) == 0) continue;
    if (sgn(h(pr, col)) < 0) {
      h.negate_row(pr);
      u.negate_row(pr);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q = floor_div(h(i, col), h(pr, col));
      if (sgn(q) == 0) continue;
      h.add_row_multiple(i, pr, -q);
      u.add_row_multiple(i, pr, -q);
    }
    ++pr;
  }
  out.rank = pr;
  return out;
}

SmithForm smith_form(const Matrix& m) {
  SmithForm out{m, Matrix::identity(m.rows()), Matrix::identity(m.cols())};
  Matrix& d = out.d;
  Matrix& u = out.u;
  Matrix& v = out.v;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // move the smallest nonzero entry of the trailing block to (t, t)
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (sgn(d(i, j)) != 0 && (bi == d.rows() || mpz_cmpabs(d(i, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == d.rows()) return out;  // trailing block is zero
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

}  // namespace rspec::intmat
