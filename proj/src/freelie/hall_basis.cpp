#include <algorithm>
#include <mutex>
#include <tuple>
#include <utility>

#include "rspec/freelie.hpp"

namespace rspec::freelie {
namespace {

std::uint64_t pair_key(std::size_t left, std::size_t right) {
  return (static_cast<std::uint64_t>(left) << 32) | static_cast<std::uint64_t>(right);
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

HallTable::HallTable(int rank, int max_degree) : rank_(rank), max_degree_(max_degree) {
  if (rank < 1 || max_degree < 1) throw DomainError("Hall table needs rank >= 1 and degree >= 1");
  by_degree_.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int g = 1; g <= rank; ++g) {
    HallWord w;
    w.generator = g;
    w.position = static_cast<std::size_t>(g - 1);
    by_degree_[1].push_back(words_.size());
    words_.push_back(w);
  }

  for (int d = 2; d <= max_degree; ++d) {
    std::vector<HallWord> fresh;
    for (int p = d - 1; p >= 1; --p)
      for (std::size_t u : by_degree_[static_cast<std::size_t>(p)])
        for (std::size_t v : by_degree_[static_cast<std::size_t>(d - p)]) {
          if (!greater(u, v)) continue;
          const HallWord& wu = words_[u];
          if (!wu.is_generator() && greater(wu.right, v)) continue;
          HallWord w;
          w.left = u;
          w.right = v;
          w.degree = d;
          fresh.push_back(w);
        }
    auto key = [this](const HallWord& w) {
      const HallWord& l = words_[w.left];
      const HallWord& r = words_[w.right];
      return std::make_tuple(l.degree, l.position, r.degree, r.position);
    };
    std::sort(fresh.begin(), fresh.end(),
              [&](const HallWord& a, const HallWord& b) { return key(a) < key(b); });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      fresh[i].position = i;
      pairs_.emplace(pair_key(fresh[i].left, fresh[i].right), words_.size());
      by_degree_[static_cast<std::size_t>(d)].push_back(words_.size());
      words_.push_back(fresh[i]);
    }
  }
}

std::shared_ptr<const HallTable> HallTable::get(int rank, int max_degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const HallTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rank, max_degree}];
  if (!slot) slot = std::make_shared<const HallTable>(rank, max_degree);
  return slot;
}

std::span<const std::size_t> HallTable::degree_ids(int d) const {
  if (d < 1 || d > max_degree_) throw DomainError("degree outside Hall table");
  return by_degree_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> HallTable::find_pair(std::size_t left, std::size_t right) const {
  auto it = pairs_.find(pair_key(left, right));
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

bool HallTable::greater(std::size_t u, std::size_t v) const {
  const HallWord& a = words_[u];
  const HallWord& b = words_[v];
  if (a.degree != b.degree) return a.degree > b.degree;
  return a.position < b.position;
}

std::string HallTable::to_string(std::size_t id) const {
  const HallWord& w = words_[id];
  if (w.is_generator()) return generator_name(w.generator, rank_);
  return "[" + to_string(w.left) + "," + to_string(w.right) + "]";
}

HallBasis hall_basis(int rank, int degree) {
  HallBasis b;
  b.rank = rank;
  b.degree = degree;
  b.table = HallTable::get(rank, degree);
  auto ids = b.table->degree_ids(degree);
  b.ids.assign(ids.begin(), ids.end());
  return b;
}

std::uint64_t witt_dimension(int rank, int degree) {
  if (rank < 1 || degree < 1) throw DomainError("witt_dimension needs rank >= 1 and degree >= 1");
  Integer sum = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(rank),
                  static_cast<unsigned long>(degree / e));
    sum += mu * power;
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(degree)))
    throw InternalError("necklace sum not divisible by degree");
  sum /= degree;
  return sum.get_ui();
}

}  // namespace rspec::freelie
