#include <cctype>

#include "rspec/freelie.hpp"

namespace rspec::freelie {

int BracketTree::degree() const { return generator != 0 ? 1 : left->degree() + right->degree(); }

TreePtr BracketTree::leaf(int g) {
  auto t = std::make_shared<BracketTree>();
  t->generator = g;
  return t;
}

TreePtr BracketTree::bracket(TreePtr l, TreePtr r) {
  auto t = std::make_shared<BracketTree>();
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

std::string generator_name(int g, int rank) {
  if (rank <= 3) return std::string(1, "xyz"[g - 1]);
  return "x" + std::to_string(g);
}

namespace {

class BracketParser {
 public:
  BracketParser(std::string_view text, int rank) : rank_(rank) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  TreePtr parse() {
    TreePtr t = expression();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  TreePtr expression() {
    if (peek() == '[') {
      ++pos_;
      TreePtr l = expression();
      expect(',');
      TreePtr r = expression();
      expect(']');
      return BracketTree::bracket(std::move(l), std::move(r));
    }
    return generator();
  }

  TreePtr generator() {
    char c = peek();
    int g = 0;
    if (c == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        g = g * 10 + (text_[pos_++] - '0');
    } else if (rank_ <= 3 && (c == 'x' || c == 'y' || c == 'z')) {
      g = c - 'x' + 1;
      ++pos_;
    } else {
      fail("expected generator");
    }
    if (g < 1 || g > rank_) fail("generator index outside rank");
    return BracketTree::leaf(g);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bracket expression: " + why + " at offset " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
  int rank_;
};

std::uint64_t memo_key(std::size_t u, std::size_t v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

void add_scaled(LieElement& into, const LieElement& from, const Integer& scale) {
  for (const auto& [id, c] : from) {
    Integer& slot = into[id];
    slot += scale * c;
    if (sgn(slot) == 0) into.erase(id);
  }
}

}  // namespace

TreePtr parse_bracket(std::string_view text, int rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  return BracketParser(text, rank).parse();
}

std::string format_bracket(const BracketTree& tree, int rank) {
  if (tree.generator != 0) return generator_name(tree.generator, rank);
  return "[" + format_bracket(*tree.left, rank) + "," + format_bracket(*tree.right, rank) + "]";
}

LieRing::LieRing(int rank, int max_degree) : table_(HallTable::get(rank, max_degree)) {}

const LieElement& LieRing::bracket_words(std::size_t u, std::size_t v) {
  const std::uint64_t key = memo_key(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LieElement result;
  const HallTable& t = *table_;
  if (u == v) {
    // [u, u] = 0
  } else if (!t.greater(u, v)) {
    add_scaled(result, bracket_words(v, u), Integer(-1));
  } else if (t.word(u).is_generator() || !t.greater(t.word(u).right, v)) {
    auto id = t.find_pair(u, v);
    if (!id) throw DomainError("bracket degree exceeds the Hall table");
    result.emplace(*id, 1);
  } else {
    // [[a,b],v] = [[a,v],b] + [a,[b,v]] with b > v
    const std::size_t a = t.word(u).left;
    const std::size_t b = t.word(u).right;
    const LieElement av = bracket_words(a, v);
    for (const auto& [h, c] : av) add_scaled(result, bracket_words(h, b), c);
    const LieElement bv = bracket_words(b, v);
    for (const auto& [k, c] : bv) add_scaled(result, bracket_words(a, k), c);
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

LieElement LieRing::bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) add_scaled(out, bracket_words(u, v), cu * cv);
  return out;
}

LieElement LieRing::normalize(const BracketTree& tree) {
  if (tree.generator != 0) {
    if (tree.generator > table_->rank()) throw DomainError("generator index outside rank");
    return {{table_->generator_id(tree.generator), Integer(1)}};
  }
  return bracket(normalize(*tree.left), normalize(*tree.right));
}

LieVector LieRing::to_vector(const LieElement& e, int degree) const {
  LieVector v;
  v.degree = degree;
  v.coords.resize(table_->degree_ids(degree).size());
  for (const auto& [id, c] : e) {
    const HallWord& w = table_->word(id);
    if (w.degree != degree) throw InternalError("mixed-degree Lie element");
    v.coords[w.position] = c;
  }
  return v;
}

LieElement LieRing::from_vector(const LieVector& v) const {
  LieElement e;
  auto ids = table_->degree_ids(v.degree);
  if (v.coords.size() != ids.size()) throw DimensionError("LieVector length differs from Witt dimension");
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (sgn(v.coords[i]) != 0) e.emplace(ids[i], v.coords[i]);
  return e;
}

LieVector normalize_bracket(const BracketTree& tree, int rank, int degree) {
  if (tree.degree() != degree)
    throw DomainError("bracket expression has degree " + std::to_string(tree.degree()) +
                      ", expected " + std::to_string(degree));
  LieRing ring(rank, degree);
  return ring.to_vector(ring.normalize(tree), degree);
}

}  // namespace rspec::freelie
