#include <random>

#include "doctest.h"
#include "rspec/freelie.hpp"

using namespace rspec;
using namespace rspec::freelie;

namespace {

TreePtr random_tree(std::mt19937_64& rng, int rank, int degree) {
  if (degree == 1) return BracketTree::leaf(std::uniform_int_distribution<int>(1, rank)(rng));
  const int left = std::uniform_int_distribution<int>(1, degree - 1)(rng);
  return BracketTree::bracket(random_tree(rng, rank, left), random_tree(rng, rank, degree - left));
}

std::vector<std::string> listing(int rank, int degree) {
  const HallBasis b = hall_basis(rank, degree);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b.to_string(i));
  return out;
}

Matrix random_unimodular(std::mt19937_64& rng, int n) {
  // product of random elementary matrices
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), kind(0, 2);
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(idx(rng)), j = static_cast<std::size_t>(idx(rng));
    switch (kind(rng)) {
      case 0:
        if (i != j) m.add_row_multiple(i, j, coef(rng));
        break;
      case 1:
        m.swap_rows(i, j);
        break;
      default:
        m.negate_row(i);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("Hall basis listings") {
  CHECK(listing(3, 2) == std::vector<std::string>{"[x,y]", "[x,z]", "[y,z]"});
  CHECK(listing(2, 3) == std::vector<std::string>{"[[x,y],x]", "[[x,y],y]"});
  CHECK(listing(2, 4) == std::vector<std::string>{"[[[x,y],x],x]", "[[[x,y],y],x]", "[[[x,y],y],y]"});
  CHECK(listing(4, 1) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(hall_basis(1, 2).size() == 0);
  CHECK_THROWS_AS(hall_basis(0, 1), DomainError);
  CHECK_THROWS_AS(hall_basis(2, 0), DomainError);
}

TEST_CASE("Witt dimensions") {
  const std::uint64_t expected[4][6] = {
      {1, 0, 0, 0, 0, 0}, {2, 1, 2, 3, 6, 9}, {3, 3, 8, 18, 48, 116}, {4, 6, 20, 60, 204, 670}};
  for (int r = 1; r <= 4; ++r)
    for (int d = 1; d <= 6; ++d) {
      CHECK(witt_dimension(r, d) == expected[r - 1][d - 1]);
      CHECK(hall_basis(r, d).size() == expected[r - 1][d - 1]);
    }
}

TEST_CASE("Hall words satisfy the basic-commutator condition") {
  for (int r = 1; r <= 4; ++r) {
    auto t = HallTable::get(r, 6);
    for (std::size_t id = 0; id < t->size(); ++id) {
      const HallWord& w = t->word(id);
      if (w.is_generator()) continue;
      CHECK(t->greater(w.left, w.right));
      const HallWord& l = t->word(w.left);
      if (!l.is_generator()) CHECK_FALSE(t->greater(l.right, w.right));
      CHECK(w.degree == t->word(w.left).degree + t->word(w.right).degree);
      CHECK(t->find_pair(w.left, w.right) == id);
    }
    // the order is weight-compatible and total
    for (std::size_t u = 0; u < t->size(); ++u)
      for (std::size_t v = 0; v < t->size(); ++v) {
        if (t->word(u).degree < t->word(v).degree) CHECK(t->greater(v, u));
        if (u != v) CHECK(t->greater(u, v) != t->greater(v, u));
      }
  }
}

TEST_CASE("bracket parsing") {
  CHECK(format_bracket(*parse_bracket(" [ [x, y] , z ] ", 3), 3) == "[[x,y],z]");
  CHECK(format_bracket(*parse_bracket("[x1,x5]", 5), 5) == "[x1,x5]");
  CHECK(parse_bracket("[[x,y],[x,y]]", 2)->degree() == 4);
  CHECK_THROWS_AS(parse_bracket("[x,z]", 2), ParseError);
  CHECK_THROWS_AS(parse_bracket("[x,y", 2), ParseError);
  CHECK_THROWS_AS(parse_bracket("[x,y]]", 2), ParseError);
  CHECK_THROWS_AS(parse_bracket("x0", 2), ParseError);
  CHECK_THROWS_AS(parse_bracket("", 2), ParseError);
}

TEST_CASE("normalize_bracket examples") {
  auto norm = [](const char* s, int r, int d) { return normalize_bracket(*parse_bracket(s, r), r, d).coords; };
  CHECK(norm("[x,y]", 2, 2) == IntVector{1});
  CHECK(norm("[y,x]", 2, 2) == IntVector{-1});
  CHECK(norm("[x,x]", 2, 2) == IntVector{0});
  CHECK(norm("[z,x]", 3, 2) == IntVector{0, -1, 0});
  CHECK(norm("[x,[x,y]]", 2, 3) == IntVector{-1, 0});
  CHECK(norm("[[x,y],[x,y]]", 2, 4) == IntVector{0, 0, 0});
  CHECK(norm("[[[x,y],x],y]", 2, 4) == IntVector{0, 1, 0});
  CHECK(norm("y", 2, 1) == IntVector{0, 1});
  CHECK_THROWS_AS(norm("[x,y]", 2, 3), DomainError);
}

TEST_CASE("metabelian identity in degree 4") {
  const auto a = normalize_bracket(*parse_bracket("[[[x,y],y],x]", 2), 2, 4);
  const auto b = normalize_bracket(*parse_bracket("[[[x,y],x],y]", 2), 2, 4);
  CHECK(a == b);
}

TEST_CASE("Lie ring laws in Hall coordinates") {
  std::mt19937_64 rng(3);
  for (int r = 2; r <= 3; ++r) {
    LieRing ring(r, 6);
    const HallTable& t = ring.table();
    std::vector<std::size_t> small;
    for (int d = 1; d <= 2; ++d)
      for (std::size_t id : t.degree_ids(d)) small.push_back(id);
    auto single = [](std::size_t id) { return LieElement{{id, Integer(1)}}; };
    auto add = [](LieElement a, const LieElement& b) {
      for (const auto& [k, v] : b) a[k] += v;
      std::erase_if(a, [](const auto& kv) { return sgn(kv.second) == 0; });
      return a;
    };
    for (std::size_t u : small)
      for (std::size_t v : small) {
        // antisymmetry
        CHECK(add(ring.bracket(single(u), single(v)), ring.bracket(single(v), single(u))).empty());
        for (std::size_t w : small) {
          const LieElement j1 = ring.bracket(ring.bracket(single(u), single(v)), single(w));
          const LieElement j2 = ring.bracket(ring.bracket(single(v), single(w)), single(u));
          const LieElement j3 = ring.bracket(ring.bracket(single(w), single(u)), single(v));
          CHECK(add(add(j1, j2), j3).empty());
        }
      }
  }
}

TEST_CASE("rewriting is confluent under shuffled step orders") {
  std::mt19937_64 rng(42);
  for (int sample = 0; sample < 300; ++sample) {
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const int d = std::uniform_int_distribution<int>(2, 6)(rng);
    const TreePtr tree = random_tree(rng, r, d);
    const LieVector direct = normalize_bracket(*tree, r, d);
    for (int trial = 0; trial < 3; ++trial) REQUIRE(normalize_bracket_shuffled(*tree, r, d, rng) == direct);
  }
}

TEST_CASE("induced_layer_matrix basics") {
  const Matrix a{{2, 1}, {1, 0}};
  CHECK(induced_layer_matrix(a, 1) == a);
  CHECK(induced_layer_matrix(a, 2) == Matrix{{-1}});
  for (int d = 1; d <= 5; ++d) {
    const auto n = hall_basis(3, d).size();
    CHECK(induced_layer_matrix(Matrix::identity(3), d) == Matrix::identity(n));
    CHECK(induced_layer_matrix(Integer(-1) * Matrix::identity(3), d) ==
          Integer(d % 2 ? -1 : 1) * Matrix::identity(n));
  }
  CHECK_THROWS_AS(induced_layer_matrix(Matrix{{2, 0}, {0, 1}}, 2), DomainError);
  CHECK_THROWS_AS(induced_layer_matrix(Matrix(2, 3), 2), DimensionError);
}

TEST_CASE("induced layers are functorial") {
  std::mt19937_64 rng(8);
  for (int sample = 0; sample < 40; ++sample) {
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const Matrix a = random_unimodular(rng, r), b = random_unimodular(rng, r);
    for (int d = 1; d <= (r == 2 ? 5 : 4); ++d) {
      const Matrix la = induced_layer_matrix(a, d), lb = induced_layer_matrix(b, d);
      CHECK(induced_layer_matrix(a * b, d) == la * lb);
      CHECK(abs(intmat::determinant(la)) == 1);
    }
  }
}

TEST_CASE("rank 2 layers in degrees 2 and 3") {
  std::mt19937_64 rng(13);
  for (int sample = 0; sample < 100; ++sample) {
    const Matrix a = random_unimodular(rng, 2);
    const Integer det = intmat::determinant(a);
    CHECK(induced_layer_matrix(a, 2) == Matrix::diagonal(IntVector{det}));
    CHECK(induced_layer_matrix(a, 3) == det * a);
  }
}

TEST_CASE("rank 2 degree 4 layer: frozen values") {
  // reference values from an independent symbolic expansion
  CHECK(induced_layer_matrix(Matrix{{1, 1}, {1, 0}}, 4) == Matrix{{-1, -2, -1}, {-1, -1, 0}, {-1, 0, 0}});
  CHECK(induced_layer_matrix(Matrix{{2, 1}, {1, 0}}, 4) == Matrix{{-4, -4, -1}, {-2, -1, 0}, {-1, 0, 0}});
  CHECK(induced_layer_matrix(Matrix{{0, 1}, {1, 0}}, 4) == Matrix{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
  CHECK(induced_layer_matrix(Matrix{{1, 0}, {0, -1}}, 4) == Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
}

TEST_CASE("rank 2 degree 4 layer: closed form and fixed vector") {
  std::mt19937_64 rng(21);
  for (int sample = 0; sample < 200; ++sample) {
    const Matrix a = random_unimodular(rng, 2);
    const Integer det = intmat::determinant(a);
    const Integer &al = a(0, 0), &be = a(0, 1), &ga = a(1, 0), &de = a(1, 1);
    const Matrix expected = det * Matrix::from_rows({{al * al, 2 * al * be, be * be},
                                                     {al * ga, al * de + be * ga, be * de},
                                                     {ga * ga, 2 * ga * de, de * de}});
    const Matrix b = induced_layer_matrix(a, 4);
    CHECK(b == expected);
    CHECK(intmat::determinant(b) == 1);
    if (det == -1) CHECK(intmat::determinant(b - Matrix::identity(3)) == 0);
  }
}
