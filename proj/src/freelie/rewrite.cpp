#include <utility>

#include "rspec/freelie.hpp"

namespace rspec::freelie {
namespace {

constexpr std::size_t kMaxRewriteSteps = 1'000'000;

struct Term {
  Integer coef;
  TreePtr tree;
};

std::optional<std::size_t> hall_id(const HallTable& t, const BracketTree& tree) {
  if (tree.generator != 0) return t.generator_id(tree.generator);
  auto l = hall_id(t, *tree.left);
  if (!l) return std::nullopt;
  auto r = hall_id(t, *tree.right);
  if (!r) return std::nullopt;
  return t.find_pair(*l, *r);
}

// Paths (false = left, true = right) to nodes whose children are Hall words
// but which are not Hall words themselves.
void collect_redexes(const HallTable& t, const BracketTree& tree, std::vector<bool>& path,
                     std::vector<std::vector<bool>>& out) {
  if (tree.generator != 0) return;
  auto l = hall_id(t, *tree.left);
  auto r = hall_id(t, *tree.right);
  if (l && r) {
    if (!t.find_pair(*l, *r)) out.push_back(path);
    return;
  }
  path.push_back(false);
  collect_redexes(t, *tree.left, path, out);
  path.back() = true;
  collect_redexes(t, *tree.right, path, out);
  path.pop_back();
}

// One rewrite at a reducible node: returns (sign, replacement) pairs.
std::vector<std::pair<int, TreePtr>> rewrite_node(const HallTable& t, const BracketTree& node) {
  const std::size_t l = *hall_id(t, *node.left);
  const std::size_t r = *hall_id(t, *node.right);
  if (l == r) return {};
  if (!t.greater(l, r)) return {{-1, BracketTree::bracket(node.right, node.left)}};
  // l = [a, b] with b > r: Jacobi
  const TreePtr& a = node.left->left;
  const TreePtr& b = node.left->right;
  return {{1, BracketTree::bracket(BracketTree::bracket(a, node.right), b)},
          {1, BracketTree::bracket(a, BracketTree::bracket(b, node.right))}};
}

TreePtr replace_at(const TreePtr& tree, const std::vector<bool>& path, std::size_t depth,
                   const TreePtr& replacement) {
  if (depth == path.size()) return replacement;
  if (path[depth]) return BracketTree::bracket(tree->left, replace_at(tree->right, path, depth + 1, replacement));
  return BracketTree::bracket(replace_at(tree->left, path, depth + 1, replacement), tree->right);
}

const BracketTree& node_at(const BracketTree& tree, const std::vector<bool>& path) {
  const BracketTree* n = &tree;
  for (bool right : path) n = right ? n->right.get() : n->left.get();
  return *n;
}

void check_leaves(const BracketTree& tree, int rank) {
  if (tree.generator != 0) {
    if (tree.generator < 1 || tree.generator > rank) throw DomainError("generator index outside rank");
    return;
  }
  check_leaves(*tree.left, rank);
  check_leaves(*tree.right, rank);
}

}  // namespace

LieVector normalize_bracket_shuffled(const BracketTree& tree, int rank, int degree,
                                     std::mt19937_64& rng) {
  if (tree.degree() != degree) throw DomainError("bracket expression has the wrong degree");
  check_leaves(tree, rank);
  auto table = HallTable::get(rank, degree);
  const HallTable& t = *table;

  std::vector<Term> pending;
  pending.push_back({Integer(1), std::make_shared<BracketTree>(tree)});
  LieElement done;

  for (std::size_t steps = 0; !pending.empty(); ++steps) {
    if (steps > kMaxRewriteSteps) throw InternalError("Hall rewriting did not terminate");
    std::uniform_int_distribution<std::size_t> pick_term(0, pending.size() - 1);
    const std::size_t ti = pick_term(rng);
    Term term = std::move(pending[ti]);
    pending[ti] = std::move(pending.back());
    pending.pop_back();

    if (auto id = hall_id(t, *term.tree)) {
      Integer& slot = done[*id];
      slot += term.coef;
      if (sgn(slot) == 0) done.erase(*id);
      continue;
    }
    std::vector<std::vector<bool>> redexes;
    std::vector<bool> path;
    collect_redexes(t, *term.tree, path, redexes);
    std::uniform_int_distribution<std::size_t> pick_redex(0, redexes.size() - 1);
    const auto& where = redexes[pick_redex(rng)];
    for (auto& [sign, replacement] : rewrite_node(t, node_at(*term.tree, where)))
      pending.push_back({term.coef * sign, replace_at(term.tree, where, 0, replacement)});
  }

  LieVector v;
  v.degree = degree;
  v.coords.resize(t.degree_ids(degree).size());
  for (const auto& [id, c] : done) v.coords[t.word(id).position] = c;
  return v;
}

}  // namespace rspec::freelie
