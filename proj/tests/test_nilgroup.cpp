#include <random>

#include "doctest.h"
#include "rspec/checks.hpp"
#include "rspec/nilgroup.hpp"
#include "rspec/reidemeister.hpp"

using namespace rspec;
using namespace rspec::nilgroup;

namespace {

Class2Element random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("element text format") {
  CHECK(parse_element("1,-2,3") == Class2Element{1, -2, 3});
  CHECK(format_element({1, -2, 3}) == "1,-2,3");
  CHECK_THROWS_AS(parse_element("1,2"), ParseError);
  CHECK_THROWS_AS(parse_element("1,2,3;4,5,6"), ParseError);
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(1);
  const Class2Element e = Class2Element::identity();
  for (int sample = 0; sample < 500; ++sample) {
    const auto u = random_element(rng), v = random_element(rng), w = random_element(rng);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, e) == u);
    CHECK(multiply(e, u) == u);
    CHECK(multiply(u, inverse(u)) == e);
    CHECK(multiply(inverse(u), u) == e);
    CHECK(multiply(u, Class2Element::z()) == multiply(Class2Element::z(), u));
    const long n = std::uniform_int_distribution<long>(-5, 5)(rng), m = std::uniform_int_distribution<long>(-5, 5)(rng);
    CHECK(multiply(power(u, n), power(u, m)) == power(u, n + m));
  }
  CHECK(commutator(Class2Element::x(), Class2Element::y()) == Class2Element::z());
  CHECK(multiply(Class2Element::y(), Class2Element::x()) == Class2Element{1, 1, -1});
}

TEST_CASE("normal form is x^a y^b z^c") {
  std::mt19937_64 rng(2);
  for (int sample = 0; sample < 200; ++sample) {
    const auto u = random_element(rng);
    const auto built = multiply(multiply(power(Class2Element::x(), u.a), power(Class2Element::y(), u.b)),
                                power(Class2Element::z(), u.c));
    CHECK(built == u);
  }
}

TEST_CASE("lifted automorphisms are homomorphisms") {
  std::mt19937_64 rng(3);
  const auto mats = checks::random_det_minus_one(20, 5);
  for (const Matrix& a : mats) {
    CHECK(apply_lift(a, Class2Element::x()) == Class2Element{a(0, 0), a(0, 1), 0});
    CHECK(apply_lift(a, Class2Element::z()) == Class2Element{0, 0, -1});
    for (int sample = 0; sample < 20; ++sample) {
      const auto u = random_element(rng), v = random_element(rng);
      CHECK(apply_lift(a, multiply(u, v)) == multiply(apply_lift(a, u), apply_lift(a, v)));
    }
  }
  CHECK(apply_lift(Matrix{{1, 1}, {0, 1}}, Class2Element::z()) == Class2Element::z());
  CHECK_THROWS_AS(apply_lift(Matrix{{2, 0}, {0, 1}}, Class2Element::x()), DomainError);
}

TEST_CASE("twisted equivalence examples") {
  const Matrix a = reidemeister::companion(1);
  const auto e = Class2Element::identity();
  const auto r = twisted_equivalent(a, e, e);
  CHECK(r.equivalent);
  REQUIRE(r.witness);
  CHECK(verify_witness(a, e, e, *r.witness));
  // the centre splits into two classes for det a = -1
  CHECK_FALSE(twisted_equivalent(a, e, Class2Element::z()).equivalent);
  CHECK(twisted_equivalent(a, e, power(Class2Element::z(), 2)).equivalent);
  CHECK_THROWS_AS(twisted_equivalent(Matrix{{1, 1}, {0, 1}}, e, e), DomainError);
}

TEST_CASE("twisted equivalence is an equivalence relation with verified witnesses") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-3, 3);
  for (const Matrix& a : checks::random_det_minus_one(8, 9)) {
    std::vector<Class2Element> els;
    for (int k = 0; k < 10; ++k) els.push_back({d(rng), d(rng), d(rng)});
    for (const auto& g : els) {
      CHECK(twisted_equivalent(a, g, g).equivalent);
      for (const auto& f : els) {
        const auto gf = twisted_equivalent(a, g, f);
        CHECK(gf.equivalent == twisted_equivalent(a, f, g).equivalent);
        if (!gf.equivalent) continue;
        CHECK(verify_witness(a, g, f, *gf.witness));
        for (const auto& h : els)
          if (twisted_equivalent(a, f, h).equivalent) CHECK(twisted_equivalent(a, g, h).equivalent);
      }
    }
  }
}

TEST_CASE("class counts of companion matrices") {
  for (long k = 1; k <= 6; ++k) CHECK(count_twisted_classes(reidemeister::companion(k)) == 2 * k);
  CHECK(count_twisted_classes(reidemeister::companion(-3)) == 6);
  CHECK_THROWS_AS(count_twisted_classes(Matrix{{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(count_twisted_classes(Matrix{{2, 1}, {1, 1}}), DomainError);
}

TEST_CASE("class counts agree with the layer product") {
  for (const Matrix& a : checks::random_det_minus_one(30, 12)) {
    const auto r = reidemeister::reidemeister_number(2, 2, a).r_value;
    CHECK(r == intmat::IndexValue(count_twisted_classes(a)));
  }
}
