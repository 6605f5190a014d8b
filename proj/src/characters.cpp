#include "immlift/characters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace immlift {

namespace {

std::int64_t factorial(int n) {
  std::int64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Rim-hook removal on beta-sets: a hook of length r corresponds to sliding
// one bead from position b to the free position b - r; the leg length is the
// number of beads jumped over.
std::int64_t mn_recursive(std::vector<int> beta, const std::vector<int>& cycles,
                          std::size_t next) {
  if (next == cycles.size()) return 1;
  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    const auto jumped = std::count_if(beta.begin(), beta.end(),
                                      [&](int b) { return b > to && b < from; });
    std::vector<int> moved = beta;
    moved[i] = to;
    const std::int64_t sub = mn_recursive(std::move(moved), cycles, next + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

std::shared_ptr<const Subgroup> symmetric_group(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::out_of_range("symmetric group degree must be in [1, " +
                            std::to_string(kMaxDegree) + "]");
  }
  static std::array<std::once_flag, kMaxDegree + 1> once;
  static std::array<std::shared_ptr<const Subgroup>, kMaxDegree + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(once[slot], [&] { cache[slot] = std::make_shared<const Subgroup>(Subgroup::symmetric(n)); });
  return cache[slot];
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::out_of_range("partitions_of: n must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::int64_t hook_degree(const Partition& shape) {
  const auto& rows = shape.parts();
  std::int64_t hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++below;
      hooks *= (rows[i] - j - 1) + below + 1;
    }
  }
  return factorial(shape.size()) / hooks;
}

std::int64_t mn_character(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size()) {
    throw std::invalid_argument("mn_character: " + shape.to_string() + " and " +
                                cycle_type.to_string() + " have different sizes");
  }
  const int k = shape.rows();
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = shape.parts()[static_cast<std::size_t>(i)] + (k - 1 - i);
  return mn_recursive(std::move(beta), cycle_type.parts(), 0);
}

std::int64_t centralizer_order(const Partition& cycle_type) {
  std::map<int, int> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  std::int64_t z = 1;
  for (const auto& [length, count] : multiplicity) {
    for (int i = 0; i < count; ++i) z *= length;
    z *= factorial(count);
  }
  return z;
}

GroupFunction::GroupFunction(std::shared_ptr<const Subgroup> domain, std::vector<Complex> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (!domain_) throw std::invalid_argument("group function needs a domain");
  if (values_.size() != domain_->order()) {
    throw std::invalid_argument("group function has " + std::to_string(values_.size()) +
                                " values for a group of order " + std::to_string(domain_->order()));
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("group function values must be finite");
    }
  }
}

GroupFunction GroupFunction::from(std::shared_ptr<const Subgroup> domain,
                                  const std::function<Complex(const Permutation&)>& value) {
  std::vector<Complex> values;
  values.reserve(domain->order());
  for (const auto& g : domain->elements()) values.push_back(value(g));
  return GroupFunction(std::move(domain), std::move(values));
}

Complex GroupFunction::operator()(const Permutation& p) const {
  const std::size_t index = domain_->index_of(p);
  if (index == domain_->order()) {
    throw std::out_of_range("permutation " + p.to_string() + " is outside the function's domain");
  }
  return values_[index];
}

Complex GroupFunction::at_identity() const { return (*this)(Permutation::identity(degree())); }

void GroupFunction::require_same_domain(const GroupFunction& other) const {
  if (domain_ != other.domain_ && *domain_ != *other.domain_) {
    throw std::invalid_argument("group functions are defined on different groups");
  }
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& other) {
  require_same_domain(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& other) {
  require_same_domain(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator*=(Complex scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

double GroupFunction::l1_norm() const {
  double total = 0.0;
  for (const auto& v : values_) total += std::abs(v);
  return total;
}

double GroupFunction::max_abs_difference(const GroupFunction& other) const {
  require_same_domain(other);
  double worst = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    worst = std::max(worst, std::abs(values_[i] - other.values_[i]));
  }
  return worst;
}

GroupFunction symmetric_character(const Partition& shape) {
  auto group = symmetric_group(shape.size());
  std::map<Partition, std::int64_t> by_class;
  return GroupFunction::from(group, [&](const Permutation& p) {
    const Partition type = cycle_type(p);
    auto it = by_class.find(type);
    if (it == by_class.end()) it = by_class.emplace(type, mn_character(shape, type)).first;
    return Complex(static_cast<double>(it->second), 0.0);
  });
}

GroupFunction sign_function(int n) {
  return GroupFunction::from(symmetric_group(n),
                             [](const Permutation& p) { return Complex(sign(p), 0.0); });
}

GroupFunction constant_function(std::shared_ptr<const Subgroup> domain, Complex value) {
  std::vector<Complex> values(domain->order(), value);
  return GroupFunction(std::move(domain), std::move(values));
}

GroupFunction identity_indicator(std::shared_ptr<const Subgroup> domain) {
  return GroupFunction::from(std::move(domain), [](const Permutation& p) {
    return p.is_identity() ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  });
}

GroupFunction extend_by_zero(const GroupFunction& f) {
  const auto& sub = f.domain();
  return GroupFunction::from(symmetric_group(f.degree()), [&](const Permutation& p) {
    const std::size_t index = sub.index_of(p);
    return index == sub.order() ? Complex(0.0, 0.0) : f.values()[index];
  });
}

GroupFunction idempotent_function(const GroupFunction& character) {
  const auto& group = character.domain();
  const Complex scale = character.at_identity() / static_cast<double>(group.order());
  return GroupFunction::from(character.domain_ptr(), [&](const Permutation& p) {
    return scale * character(inverse(p));
  });
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  if (f.domain_ptr() != g.domain_ptr() && f.domain() != g.domain()) {
    throw std::invalid_argument("convolve: functions live on different groups");
  }
  const auto& elements = f.domain().elements();
  std::vector<Complex> out(elements.size());
  for (std::size_t t = 0; t < elements.size(); ++t) {
    if (f.values()[t] == Complex(0.0, 0.0)) continue;
    // tau * rho ranges over the group as rho does; accumulate f(tau) g(rho) at tau*rho.
    for (std::size_t r = 0; r < elements.size(); ++r) {
      const std::size_t product = f.domain().index_of(compose(elements[t], elements[r]));
      out[product] += f.values()[t] * g.values()[r];
    }
  }
  return GroupFunction(f.domain_ptr(), std::move(out));
}

const GroupFunction& CharacterTable::row(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("character table has no row '" + label + "'");
  return rows[static_cast<std::size_t>(it - labels.begin())];
}

GroupFunction class_function(std::shared_ptr<const Subgroup> group,
                             const std::vector<Permutation>& representatives,
                             const std::vector<Complex>& class_values) {
  if (representatives.size() != class_values.size()) {
    throw std::invalid_argument("class_function: representative/value count mismatch");
  }
  std::vector<Complex> values(group->order());
  for (const auto& cls : conjugacy_classes(*group)) {
    std::size_t hit = representatives.size();
    for (std::size_t r = 0; r < representatives.size(); ++r) {
      if (std::binary_search(cls.members.begin(), cls.members.end(), representatives[r])) {
        if (hit != representatives.size()) {
          throw std::invalid_argument("two representatives share the class of " +
                                      cls.representative.to_string());
        }
        hit = r;
      }
    }
    if (hit == representatives.size()) {
      throw std::invalid_argument("no value given for the class of " + cls.representative.to_string());
    }
    for (const auto& member : cls.members) {
      const std::size_t index = group->index_of(member);
      values[index] = class_values[hit];
    }
  }
  return GroupFunction(std::move(group), std::move(values));
}

CharacterTable builtin_a4_table() {
  const Permutation double_swap = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  const Permutation three_cycle = Permutation::from_cycles(4, {{1, 2, 3}});
  auto group = std::make_shared<const Subgroup>(generate_subgroup(4, {double_swap, three_cycle}));

  const std::vector<Permutation> reps{Permutation::identity(4), double_swap, three_cycle,
                                      inverse(three_cycle)};
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex omega_bar = std::conj(omega);

  CharacterTable table;
  table.group = group;
  table.class_representatives = reps;
  table.labels = {"trivial", "chi1", "chi2", "chi3"};
  table.rows.push_back(class_function(group, reps, {1.0, 1.0, 1.0, 1.0}));
  table.rows.push_back(class_function(group, reps, {3.0, -1.0, 0.0, 0.0}));
  table.rows.push_back(class_function(group, reps, {1.0, 1.0, omega, omega_bar}));
  table.rows.push_back(class_function(group, reps, {1.0, 1.0, omega_bar, omega}));
  return table;
}

CharacterTable symmetric_character_table(int n) {
  CharacterTable table;
  table.group = symmetric_group(n);
  const auto shapes = partitions_of(n);
  // Lexicographic enumeration: first hit per cycle type is its smallest member.
  std::map<Partition, Permutation> first_of_type;
  for (const auto& p : table.group->elements()) first_of_type.try_emplace(cycle_type(p), p);
  for (const auto& mu : shapes) table.class_representatives.push_back(first_of_type.at(mu));
  for (const auto& lambda : shapes) {
    table.labels.push_back(lambda.to_string());
    table.rows.push_back(symmetric_character(lambda));
  }
  return table;
}

}  // namespace immlift
