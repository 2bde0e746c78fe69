#pragma once
//
// Free Lie ring over Z: Hall bases, bracket rewriting into Hall coordinates,
// and the functor sending an automorphism matrix of the abelianization to
// its action on a homogeneous component (a lower-central layer).
//
// Hall words follow the basic-commutator convention: a word [u, v] is basic
// when u > v and, if u = [a, b], then b <= v. The order used for these
// comparisons ranks words by degree first; within a degree the earlier
// word in the basis listing is the larger one, so x1 > x2 > ... > xr.
// Bases are listed by degree and then lexicographically on the positions of
// the left and right factors, which makes the listings
//   degree 2, rank 3:  [x,y], [x,z], [y,z]
//   degree 3, rank 2:  [[x,y],x], [[x,y],y]
//   degree 4, rank 2:  [[[x,y],x],x], [[[x,y],y],x], [[[x,y],y],y]
//

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rspec/intmat.hpp"

namespace rspec::freelie {

using intmat::Matrix;

inline constexpr std::size_t kNoWord = static_cast<std::size_t>(-1);

struct HallWord {
  int generator = 0;  // 1-based for degree-1 words, 0 for brackets
  std::size_t left = kNoWord;
  std::size_t right = kNoWord;
  int degree = 1;
  std::size_t position = 0;  // index within the degree-d basis

  bool is_generator() const { return generator != 0; }
};

// Every Hall word of degree <= max_degree on `rank` generators. Tables are
// immutable and shared; get() builds each (rank, max_degree) once.
class HallTable {
 public:
  static std::shared_ptr<const HallTable> get(int rank, int max_degree);

  int rank() const { return rank_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return words_.size(); }
  const HallWord& word(std::size_t id) const { return words_[id]; }
  // Ids of the degree-d words in basis order.
  std::span<const std::size_t> degree_ids(int d) const;
  std::size_t generator_id(int g) const { return degree_ids(1)[static_cast<std::size_t>(g - 1)]; }
  std::size_t id_at(int degree, std::size_t position) const { return degree_ids(degree)[position]; }
  std::optional<std::size_t> find_pair(std::size_t left, std::size_t right) const;
  // The Hall order (see header comment).
  bool greater(std::size_t u, std::size_t v) const;
  std::string to_string(std::size_t id) const;

  HallTable(int rank, int max_degree);

 private:
  int rank_;
  int max_degree_;
  std::vector<HallWord> words_;
  std::vector<std::vector<std::size_t>> by_degree_;
  std::unordered_map<std::uint64_t, std::size_t> pairs_;
};

struct HallBasis {
  int rank = 0;
  int degree = 0;
  std::shared_ptr<const HallTable> table;
  std::vector<std::size_t> ids;

  std::size_t size() const { return ids.size(); }
  const HallWord& word(std::size_t i) const { return table->word(ids[i]); }
  std::string to_string(std::size_t i) const { return table->to_string(ids[i]); }
};

HallBasis hall_basis(int rank, int degree);

// (1/d) sum_{e | d} mu(e) r^(d/e): rank of the degree-d component.
std::uint64_t witt_dimension(int rank, int degree);

struct LieVector {
  int degree = 1;
  IntVector coords;  // indexed by position in the degree's Hall basis

  friend bool operator==(const LieVector&, const LieVector&) = default;
};

// ---- bracket expressions --------------------------------------------------

struct BracketTree;
using TreePtr = std::shared_ptr<const BracketTree>;

struct BracketTree {
  int generator = 0;  // 1-based leaf, 0 for a bracket
  TreePtr left;
  TreePtr right;

  int degree() const;
  static TreePtr leaf(int g);
  static TreePtr bracket(TreePtr l, TreePtr r);
};

// Generators are x1..xr; for rank <= 3 the aliases x, y, z are accepted.
TreePtr parse_bracket(std::string_view text, int rank);
std::string format_bracket(const BracketTree& tree, int rank);
std::string generator_name(int g, int rank);

// ---- rewriting -----------------------------------------------------------

// Sparse element keyed by Hall word id.
using LieElement = std::map<std::size_t, Integer>;

// Hall-coordinate calculus with a private bracket memo. Not shared across
// threads; construct one per computation.
class LieRing {
 public:
  LieRing(int rank, int max_degree);

  const HallTable& table() const { return *table_; }

  // Coordinates of [u, v] for Hall words u, v (antisymmetry + Jacobi).
  const LieElement& bracket_words(std::size_t u, std::size_t v);
  LieElement bracket(const LieElement& a, const LieElement& b);
  LieElement normalize(const BracketTree& tree);

  LieVector to_vector(const LieElement& e, int degree) const;
  LieElement from_vector(const LieVector& v) const;

 private:
  std::shared_ptr<const HallTable> table_;
  std::unordered_map<std::uint64_t, LieElement> memo_;
};

// Hall coordinates of a homogeneous bracket tree of degree d.
LieVector normalize_bracket(const BracketTree& tree, int rank, int degree);

// The same result reached by an explicit term-rewriting system in which
// every step picks a random term and a random reducible node; exists so
// that confluence can be tested.
LieVector normalize_bracket_shuffled(const BracketTree& tree, int rank, int degree,
                                     std::mt19937_64& rng);

// Matrix of the degree-d component of the Lie functor applied to a (row i =
// image of the i-th Hall word). Requires |det a| = 1.
Matrix induced_layer_matrix(const Matrix& a, int degree);

}  // namespace rspec::freelie
