#include "immlift/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "immlift/partition.hpp"

namespace immlift {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  }
}

// Plain cycle decomposition, each cycle starting at its smallest element.
std::vector<std::vector<int>> raw_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int t = start; !seen[static_cast<std::size_t>(t)]; t = p(t)) {
      seen[static_cast<std::size_t>(t)] = true;
      cycle.push_back(t);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw std::invalid_argument("empty part in partition '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid partition '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("invalid partition '" + text + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

Partition Partition::hook(int n, int first) {
  if (first < 1 || first > n) throw std::invalid_argument("hook arm out of range");
  std::vector<int> parts{first};
  parts.insert(parts.end(), static_cast<std::size_t>(n - first), 1);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a permutation of {1.." +
                                  std::to_string(n) + "}");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from)]) {
        throw std::invalid_argument("cycles are not disjoint subsets of {1.." +
                                    std::to_string(n) + "}");
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int t = 1; t <= degree(); ++t) {
    if ((*this)(t) != t) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : raw_cycles(*this)) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (int v : cycle) out += std::to_string(v);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 1; t <= p.degree(); ++t) images[static_cast<std::size_t>(t - 1)] = p(q(t));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int t = 1; t <= p.degree(); ++t) images[static_cast<std::size_t>(p(t) - 1)] = t;
  return Permutation(std::move(images));
}

int sign(const Permutation& p) {
  const auto cycles = raw_cycles(p);
  return (p.degree() - static_cast<int>(cycles.size())) % 2 == 0 ? 1 : -1;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& cycle : raw_cycles(p)) lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

CanonicalCycles canonical_cycles(const Permutation& p) {
  auto cycles = raw_cycles(p);
  for (auto& cycle : cycles) {
    const auto largest = std::max_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), largest + 1, cycle.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return CanonicalCycles{p.degree(), std::move(cycles)};
}

std::vector<Permutation> enumerate_symmetric(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::out_of_range("symmetric group degree must be in [1, " +
                            std::to_string(kMaxDegree) + "], got " + std::to_string(n));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Subgroup::Subgroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const auto& g : elements_) {
    if (g.degree() != degree_) throw std::invalid_argument("subgroup element degree mismatch");
  }
  if (!contains(Permutation::identity(degree_))) {
    throw std::invalid_argument("subgroup must contain the identity");
  }
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!contains(compose(a, b))) {
        throw std::invalid_argument("element list is not closed under composition");
      }
    }
  }
}

Subgroup Subgroup::symmetric(int n) { return Subgroup(Trusted{}, n, enumerate_symmetric(n)); }

std::size_t Subgroup::index_of(const Permutation& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_full_symmetric() const {
  std::size_t factorial = 1;
  for (int k = 2; k <= degree_; ++k) factorial *= static_cast<std::size_t>(k);
  return elements_.size() == factorial;
}

Subgroup generate_subgroup(int n, std::span<const Permutation> generators) {
  if (n < 1 || n > kMaxDegree) throw std::out_of_range("subgroup degree out of range");
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
  }
  std::set<Permutation> found{Permutation::identity(n)};
  std::queue<Permutation> frontier;
  frontier.push(Permutation::identity(n));
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop();
    for (const auto& g : generators) {
      Permutation next = compose(g, current);
      if (found.insert(next).second) frontier.push(std::move(next));
    }
  }
  // Finite group: closure under multiplication by generators is closure.
  return Subgroup(Subgroup::Trusted{}, n, std::vector<Permutation>(found.begin(), found.end()));
}

Subgroup generate_subgroup(int n, std::initializer_list<Permutation> generators) {
  return generate_subgroup(n, std::span<const Permutation>(generators.begin(), generators.size()));
}

std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& group) {
  const auto& elements = group.elements();
  std::vector<bool> assigned(elements.size(), false);
  std::vector<ConjugacyClass> classes;
  // Elements are sorted, so the first unassigned one is its class's smallest member.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (assigned[i]) continue;
    std::set<Permutation> orbit;
    for (const auto& g : elements) {
      orbit.insert(compose(compose(g, elements[i]), inverse(g)));
    }
    for (const auto& member : orbit) assigned[group.index_of(member)] = true;
    classes.push_back({elements[i], std::vector<Permutation>(orbit.begin(), orbit.end())});
  }
  return classes;
}

}  // namespace immlift
