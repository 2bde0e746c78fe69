#include <sstream>

#include "rspec/nilgroup.hpp"

namespace rspec::nilgroup {
namespace {

void require_automorphism(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("Heisenberg automorphism matrix must be 2x2");
  if (!intmat::is_unimodular(a)) throw DomainError("Heisenberg automorphism matrix must be unimodular");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Class2Element& u) { return os << format_element(u); }

Class2Element parse_element(std::string_view text) {
  // reuse the matrix reader: a single row of three entries
  intmat::Matrix m = intmat::parse_matrix(text);
  if (m.rows() != 1 || m.cols() != 3) throw ParseError("element must be 'a,b,c'");
  return {m(0, 0), m(0, 1), m(0, 2)};
}

std::string format_element(const Class2Element& u) {
  return u.a.get_str() + "," + u.b.get_str() + "," + u.c.get_str();
}

// y^b x^a' = x^a' y^b z^(-a'b)
Class2Element multiply(const Class2Element& u, const Class2Element& v) {
  return {u.a + v.a, u.b + v.b, u.c + v.c - v.a * u.b};
}

Class2Element inverse(const Class2Element& u) { return {-u.a, -u.b, -u.c - u.a * u.b}; }

Class2Element power(const Class2Element& u, const Integer& n) {
  Class2Element base = sgn(n) < 0 ? inverse(u) : u;
  Integer e = abs(n);
  Class2Element result;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

Class2Element commutator(const Class2Element& u, const Class2Element& v) {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

Class2Element apply_lift(const Matrix& a, const Class2Element& u) {
  require_automorphism(a);
  const Class2Element image_x = multiply(power(Class2Element::x(), a(0, 0)), power(Class2Element::y(), a(0, 1)));
  const Class2Element image_y = multiply(power(Class2Element::x(), a(1, 0)), power(Class2Element::y(), a(1, 1)));
  const Class2Element image_z = commutator(image_x, image_y);
  return multiply(multiply(power(image_x, u.a), power(image_y, u.b)), power(image_z, u.c));
}

bool verify_witness(const Matrix& a, const Class2Element& g, const Class2Element& f,
                    const Class2Element& x) {
  return multiply(apply_lift(a, x), g) == multiply(f, x);
}

TwistResult twisted_equivalent(const Matrix& a, const Class2Element& g, const Class2Element& f) {
  require_automorphism(a);
  const Matrix shifted = a - Matrix::identity(2);
  if (sgn(intmat::determinant(shifted)) == 0)
    throw DomainError("twisted_equivalent: det(a - E) = 0; the abelian layer is degenerate");

  // abelianization: (p, q) (a - E) = (f - g)_ab
  const IntVector rhs{f.a - g.a, f.b - g.b};
  auto sol = intmat::solve_integer(shifted, rhs);
  if (!sol) return {};
  const Class2Element x0{sol->particular[0], sol->particular[1], 0};

  // centre: s (det a - 1) = w
  const Class2Element lhs = multiply(apply_lift(a, x0), g);
  const Class2Element rhs_el = multiply(f, x0);
  if (lhs.a != rhs_el.a || lhs.b != rhs_el.b) throw InternalError("abelian parts disagree after solving");
  const Integer w = rhs_el.c - lhs.c;
  const Integer k = intmat::determinant(a) - 1;
  Integer s = 0;
  if (sgn(k) == 0) {
    if (sgn(w) != 0) return {};
  } else {
    if (!mpz_divisible_p(w.get_mpz_t(), k.get_mpz_t())) return {};
    s = w / k;
  }
  const Class2Element x{x0.a, x0.b, s};
  if (!verify_witness(a, g, f, x)) throw InternalError("twisted conjugacy witness failed verification");
  return {true, x};
}

Integer count_twisted_classes(const Matrix& a, Execution exec) {
  require_automorphism(a);
  if (intmat::determinant(a) != -1) throw DomainError("count_twisted_classes: det a must be -1");
  if (sgn(a.trace()) == 0) throw DomainError("count_twisted_classes: trace a must be nonzero");
  const Integer det_shift = abs(intmat::determinant(a - Matrix::identity(2)));
  if (sgn(det_shift) == 0) throw DomainError("count_twisted_classes: det(a - E) = 0");
  if (det_shift > 4096) throw BoundError("count_twisted_classes: representative box too large");

  const std::uint64_t side = det_shift.get_ui();
  const std::uint64_t count = side * side * 2;
  auto rep = [side](std::uint64_t k) {
    const std::uint64_t s = k % 2;
    const std::uint64_t pq = k / 2;
    return Class2Element{Integer(static_cast<unsigned long>(pq / side)),
                         Integer(static_cast<unsigned long>(pq % side)),
                         Integer(static_cast<unsigned long>(s))};
  };

  const auto classes = reduce_range<std::uint64_t>(
      count, exec,
      [&](std::uint64_t& found, std::uint64_t k) {
        const Class2Element f = rep(k);
        for (std::uint64_t j = 0; j < k; ++j)
          if (twisted_equivalent(a, rep(j), f).equivalent) return;
        ++found;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
  return Integer(static_cast<unsigned long>(classes));
}

}  // namespace rspec::nilgroup
