#pragma once
//
// The discrete Heisenberg group N_{2,2} in Mal'cev coordinates: elements
// x^a y^b z^c with z = x^-1 y^-1 x y central. Used as an end-to-end
// twisted-conjugacy oracle independent of the layer product formula.
//

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "rspec/intmat.hpp"
#include "rspec/parallel.hpp"

namespace rspec::nilgroup {

using intmat::Matrix;

struct Class2Element {
  Integer a = 0;  // exponent of x
  Integer b = 0;  // exponent of y
  Integer c = 0;  // exponent of z

  static Class2Element identity() { return {}; }
  static Class2Element x() { return {1, 0, 0}; }
  static Class2Element y() { return {0, 1, 0}; }
  static Class2Element z() { return {0, 0, 1}; }

  friend bool operator==(const Class2Element&, const Class2Element&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Class2Element& u);
};

// "a,b,c"
Class2Element parse_element(std::string_view text);
std::string format_element(const Class2Element& u);

Class2Element multiply(const Class2Element& u, const Class2Element& v);
Class2Element inverse(const Class2Element& u);
Class2Element power(const Class2Element& u, const Integer& n);
Class2Element commutator(const Class2Element& u, const Class2Element& v);

// The automorphism x |-> x^alpha y^beta, y |-> x^gamma y^delta for
// a = [[alpha, beta], [gamma, delta]], |det a| = 1.
Class2Element apply_lift(const Matrix& a, const Class2Element& u);

struct TwistResult {
  bool equivalent = false;
  std::optional<Class2Element> witness;  // x with phi(x) g = f x
};

// Decides g ~_phi f. Requires det(a - E) != 0.
TwistResult twisted_equivalent(const Matrix& a, const Class2Element& g, const Class2Element& f);

// True iff phi(x) g == f x.
bool verify_witness(const Matrix& a, const Class2Element& g, const Class2Element& f,
                    const Class2Element& x);

// Number of phi-twisted classes, found by partitioning the representative
// box [0, D)^2 x {0, 1}, D = |det(a - E)|, into classes (each class is
// counted at its least representative). Requires det a = -1, trace a != 0.
Integer count_twisted_classes(const Matrix& a, Execution exec = Execution::parallel);

}  // namespace rspec::nilgroup
