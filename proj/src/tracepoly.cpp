#include "immlift/tracepoly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace immlift {

namespace {

using Key = std::pair<std::vector<std::vector<int>>, std::vector<int>>;

Key key_of(const TraceTerm& term) { return {term.traced, term.open}; }

int infer_dim(std::span<const ComplexMatrix> xs, int dim) {
  if (xs.empty()) {
    if (dim < 1) throw std::invalid_argument("evaluate: no variables, so a dimension is required");
    return dim;
  }
  const int m = xs.front().rows();
  for (const auto& x : xs) {
    if (!x.is_square() || x.rows() != m) {
      throw std::invalid_argument("evaluate: variables must be square matrices of equal size");
    }
  }
  if (dim >= 1 && dim != m) throw std::invalid_argument("evaluate: dimension mismatch");
  return m;
}

void require_arity(const TracePolynomial& p, std::span<const ComplexMatrix> xs) {
  if (static_cast<int>(xs.size()) != p.arity()) {
    throw std::invalid_argument("evaluate: polynomial takes " + std::to_string(p.arity()) +
                                " matrices, got " + std::to_string(xs.size()));
  }
}

ComplexMatrix word_product(const std::vector<int>& word, std::span<const ComplexMatrix> xs, int m) {
  if (word.empty()) return ComplexMatrix::identity(m);
  ComplexMatrix out = xs[static_cast<std::size_t>(word.front() - 1)];
  for (std::size_t k = 1; k < word.size(); ++k) out = out * xs[static_cast<std::size_t>(word[k] - 1)];
  return out;
}

// Cached traces and open products for a single evaluation.
class WordCache {
 public:
  WordCache(std::span<const ComplexMatrix> xs, int m) : xs_(xs), m_(m) {}

  Complex trace(const std::vector<int>& word) {
    auto it = traces_.find(word);
    if (it == traces_.end()) it = traces_.emplace(word, word_product(word, xs_, m_).trace()).first;
    return it->second;
  }

  const ComplexMatrix& product(const std::vector<int>& word) {
    auto it = products_.find(word);
    if (it == products_.end()) it = products_.emplace(word, word_product(word, xs_, m_)).first;
    return it->second;
  }

 private:
  std::span<const ComplexMatrix> xs_;
  int m_;
  std::map<std::vector<int>, Complex> traces_;
  std::map<std::vector<int>, ComplexMatrix> products_;
};

std::string shortest(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::optional<std::string> format_rational(double value, RenderStyle style) {
  for (int q = 1; q <= 120; ++q) {
    const double scaled = value * q;
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) <= 1e-9 * std::max(1.0, std::abs(scaled))) {
      const auto p = static_cast<long long>(rounded);
      if (q == 1) return std::to_string(p);
      if (style == RenderStyle::latex) {
        return std::string(p < 0 ? "-" : "") + "\\frac{" + std::to_string(std::llabs(p)) + "}{" +
               std::to_string(q) + "}";
      }
      return std::to_string(p) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

std::string format_real(double value, RenderStyle style) {
  if (auto r = format_rational(value, style)) return *r;
  return shortest(value);
}

bool is_real(Complex c) { return std::abs(c.imag()) <= 1e-12 * std::max(1.0, std::abs(c)); }

// Coefficient in front of a factor string. Returns the sign separately so the
// caller can write " − " between terms.
struct SignedCoefficient {
  bool negative = false;
  std::string magnitude;  // empty means 1
  bool needs_parens = false;
};

SignedCoefficient split_coefficient(Complex c, RenderStyle style) {
  SignedCoefficient out;
  if (is_real(c)) {
    out.negative = c.real() < 0;
    const double magnitude = std::abs(c.real());
    if (std::abs(magnitude - 1.0) > 1e-12) out.magnitude = format_real(magnitude, style);
    return out;
  }
  out.magnitude = format_coefficient(c, style);
  out.needs_parens = out.magnitude.find_first_of(" +-") != std::string::npos;
  return out;
}

std::string letter(int index, bool xyz, RenderStyle style) {
  if (xyz) return std::string(1, "XYZ"[index - 1]);
  if (style == RenderStyle::latex) return "X_{" + std::to_string(index) + "}";
  return "X" + std::to_string(index);
}

std::string monomial_string(const TraceTerm& term, bool xyz, RenderStyle style, const char* joiner) {
  std::string out;
  for (const auto& word : term.traced) {
    if (!out.empty()) out += joiner;
    out += style == RenderStyle::latex ? "\\operatorname{tr}(" : "tr(";
    for (int v : word) out += letter(v, xyz, style);
    out += ")";
  }
  if (!out.empty()) out += joiner;
  if (term.open.empty()) {
    if (style == RenderStyle::latex) {
      out += "\\mathbb{1}";
    } else {
      out += xyz ? "𝟙" : "1";
    }
  } else {
    for (int v : term.open) out += letter(v, xyz, style);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<Complex, std::string>>& pieces, RenderStyle style,
                       const char* coefficient_joiner) {
  if (pieces.empty()) return "0";
  const char* minus = style == RenderStyle::latex ? "-" : "−";
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto coefficient = split_coefficient(pieces[k].first, style);
    if (k == 0) {
      if (coefficient.negative) out += minus;
    } else {
      out += coefficient.negative ? std::string(" ") + minus + " " : std::string(" + ");
    }
    if (!coefficient.magnitude.empty()) {
      out += coefficient.needs_parens ? "(" + coefficient.magnitude + ")" : coefficient.magnitude;
      out += coefficient_joiner;
    }
    out += pieces[k].second;
  }
  return out;
}

}  // namespace

std::vector<int> canonical_rotation(std::vector<int> word) {
  std::vector<int> best = word;
  for (std::size_t shift = 1; shift < word.size(); ++shift) {
    std::rotate(word.begin(), word.begin() + 1, word.end());
    if (word < best) best = word;
  }
  return best;
}

TraceTerm::TraceTerm(Complex c, std::vector<std::vector<int>> words, std::vector<int> open_word)
    : coefficient(c), traced(std::move(words)), open(std::move(open_word)) {
  for (auto& word : traced) {
    if (word.empty()) throw std::invalid_argument("traced words must be non-empty");
    word = canonical_rotation(std::move(word));
  }
  std::sort(traced.begin(), traced.end());
}

TracePolynomial::TracePolynomial(int n, std::vector<TraceTerm> terms) : n_(n) {
  if (n < 1) throw std::invalid_argument("trace polynomial needs n >= 1");
  std::map<Key, std::size_t> position;
  for (auto& term : terms) {
    auto check = [&](const std::vector<int>& word) {
      for (int v : word) {
        if (v < 1 || v > n - 1) {
          throw std::invalid_argument("variable index " + std::to_string(v) + " outside 1.." +
                                      std::to_string(n - 1));
        }
      }
    };
    for (const auto& word : term.traced) check(word);
    check(term.open);
    const auto [it, inserted] = position.try_emplace(key_of(term), terms_.size());
    if (inserted) {
      terms_.push_back(std::move(term));
    } else {
      terms_[it->second].coefficient += term.coefficient;
    }
  }
  std::erase_if(terms_, [](const TraceTerm& t) { return std::abs(t.coefficient) <= kTermDropThreshold; });
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("trace polynomials of different arity");
  std::vector<TraceTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = TracePolynomial(n_, std::move(all));
  return *this;
}

TracePolynomial& TracePolynomial::operator-=(const TracePolynomial& other) {
  TracePolynomial negated = other;
  negated *= Complex(-1.0, 0.0);
  return *this += negated;
}

TracePolynomial& TracePolynomial::operator*=(Complex scale) {
  for (auto& term : terms_) term.coefficient *= scale;
  std::erase_if(terms_, [](const TraceTerm& t) { return std::abs(t.coefficient) <= kTermDropThreshold; });
  return *this;
}

Complex TracePolynomial::coefficient_of(const TraceTerm& monomial) const {
  for (const auto& term : terms_) {
    if (term.same_monomial(monomial)) return term.coefficient;
  }
  return Complex{};
}

bool TracePolynomial::approx_equal(const TracePolynomial& other, double tol) const {
  if (other.n_ != n_) return false;
  const TracePolynomial difference = *this - other;
  return std::all_of(difference.terms_.begin(), difference.terms_.end(),
                     [&](const TraceTerm& t) { return std::abs(t.coefficient) <= tol; });
}

TraceTerm lift_sigma(const Permutation& sigma) {
  const CanonicalCycles canonical = canonical_cycles(sigma);
  std::vector<std::vector<int>> traced(canonical.cycles.begin(), canonical.cycles.end() - 1);
  std::vector<int> open = canonical.cycles.back();
  open.pop_back();  // drops n, i.e. X_n -> identity
  return TraceTerm(Complex(1.0, 0.0), std::move(traced), std::move(open));
}

TracePolynomial lift_function(const GroupFunction& f) {
  if (!f.domain().is_full_symmetric()) {
    throw std::invalid_argument(
        "lift_function: f is missing values outside its subgroup; extend it by zero to S_n first");
  }
  const auto& elements = f.domain().elements();
  std::vector<TraceTerm> terms;
  terms.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (f.values()[k] == Complex{}) continue;
    TraceTerm term = lift_sigma(elements[k]);
    term.coefficient = f.values()[k];
    terms.push_back(std::move(term));
  }
  return TracePolynomial(f.degree(), std::move(terms));
}

TracePolynomial specialize_trace_one(const TracePolynomial& p) {
  std::vector<TraceTerm> terms;
  for (const auto& term : p.terms()) {
    std::vector<std::vector<int>> kept;
    for (const auto& word : term.traced) {
      if (word.size() != 1) kept.push_back(word);
    }
    terms.emplace_back(term.coefficient, std::move(kept), term.open);
  }
  return TracePolynomial(p.n(), std::move(terms));
}

ComplexMatrix evaluate(const TracePolynomial& p, std::span<const ComplexMatrix> xs, int dim) {
  require_arity(p, xs);
  const int m = infer_dim(xs, dim);
  WordCache cache(xs, m);
  ComplexMatrix out(m, m);
  for (const auto& term : p.terms()) {
    Complex weight = term.coefficient;
    for (const auto& word : term.traced) weight *= cache.trace(word);
    if (term.open.empty()) {
      for (int i = 0; i < m; ++i) out(i, i) += weight;
    } else {
      out += cache.product(term.open) * weight;
    }
  }
  return out;
}

double evaluate_magnitude(const TracePolynomial& p, std::span<const ComplexMatrix> xs, int dim) {
  require_arity(p, xs);
  const int m = infer_dim(xs, dim);
  WordCache cache(xs, m);
  double total = 0.0;
  for (const auto& term : p.terms()) {
    double weight = std::abs(term.coefficient);
    for (const auto& word : term.traced) weight *= std::abs(cache.trace(word));
    weight *= term.open.empty() ? std::sqrt(static_cast<double>(m)) : cache.product(term.open).norm();
    total += weight;
  }
  return total;
}

Complex evaluate_T_scalar(const Permutation& sigma, std::span<const ComplexMatrix> xs) {
  if (static_cast<int>(xs.size()) != sigma.degree()) {
    throw std::invalid_argument("evaluate_T_scalar: need one matrix per point");
  }
  const int m = infer_dim(xs, -1);
  Complex total(1.0, 0.0);
  for (const auto& cycle : canonical_cycles(sigma).cycles) total *= word_product(cycle, xs, m).trace();
  return total;
}

std::string format_coefficient(Complex c, RenderStyle style) {
  if (is_real(c)) return format_real(c.real(), style);
  // Write c = a + b*w with w = omega (Im c > 0) or its conjugate, so b > 0.
  const bool use_omega = c.imag() > 0;
  const double im_omega = std::sqrt(3.0) / 2.0;
  const double b = std::abs(c.imag()) / im_omega;
  const double a = c.real() + 0.5 * b;
  const auto b_text = format_rational(b, style);
  const auto a_text = format_rational(a, style);
  if (b_text && a_text) {
    std::string symbol;
    if (style == RenderStyle::latex) {
      symbol = use_omega ? "\\omega" : "\\bar{\\omega}";
    } else {
      symbol = use_omega ? "ω" : "ω̄";
    }
    std::string out = (*b_text == "1" ? "" : *b_text) + symbol;
    if (std::abs(a) > 1e-12) {
      const bool negative = a < 0;
      out += negative ? (style == RenderStyle::latex ? " - " : " − ") : " + ";
      out += *format_rational(std::abs(a), style);
    }
    return out;
  }
  return shortest(c.real()) + (c.imag() < 0 ? "-" : "+") + shortest(std::abs(c.imag())) + "i";
}

std::string render(const TracePolynomial& p, const RenderOptions& options) {
  const TracePolynomial shown = options.trace_one ? specialize_trace_one(p) : p;
  const char* joiner = options.style == RenderStyle::latex ? "\\," : "·";
  std::vector<std::pair<Complex, std::string>> pieces;
  for (const auto& term : shown.terms()) {
    pieces.emplace_back(term.coefficient, monomial_string(term, false, options.style, joiner));
  }
  return join_terms(pieces, options.style, joiner);
}

TracePolynomial block_L() {
  return TracePolynomial(4, {TraceTerm(1.0, {{1, 2}}, {3}), TraceTerm(1.0, {{1, 3}}, {2}),
                             TraceTerm(1.0, {{2, 3}}, {1})});
}

TracePolynomial block_M() {
  return TracePolynomial(4, {TraceTerm(1.0, {{3, 2, 1}}, {}), TraceTerm(1.0, {}, {1, 2}),
                             TraceTerm(1.0, {}, {2, 3}), TraceTerm(1.0, {}, {3, 1})});
}

TracePolynomial block_M_adjoint() {
  return TracePolynomial(4, {TraceTerm(1.0, {{1, 2, 3}}, {}), TraceTerm(1.0, {}, {2, 1}),
                             TraceTerm(1.0, {}, {3, 2}), TraceTerm(1.0, {}, {1, 3})});
}

std::string render_xyz(const TracePolynomial& p, RenderStyle style) {
  if (p.n() != 4) throw std::invalid_argument("render_xyz needs a polynomial in three variables");
  TracePolynomial rest = specialize_trace_one(p);
  struct Block {
    const char* text;
    const char* latex;
    TracePolynomial poly;
  };
  const std::vector<Block> blocks{{"L", "L", block_L()},
                                  {"M", "M", block_M()},
                                  {"M*", "M^{*}", block_M_adjoint()}};
  std::vector<std::pair<Complex, std::string>> extracted;
  for (const auto& block : blocks) {
    const Complex c = rest.coefficient_of(block.poly.terms().front());
    if (std::abs(c) <= kTermDropThreshold) continue;
    const bool uniform = std::all_of(block.poly.terms().begin(), block.poly.terms().end(),
                                     [&](const TraceTerm& t) {
                                       return std::abs(rest.coefficient_of(t) - c) <= 1e-12;
                                     });
    if (!uniform) continue;
    rest -= c * block.poly;
    extracted.emplace_back(c, style == RenderStyle::latex ? block.latex : block.text);
  }
  std::vector<std::pair<Complex, std::string>> pieces;
  for (const auto& term : rest.terms()) {
    pieces.emplace_back(term.coefficient, monomial_string(term, true, style, ""));
  }
  pieces.insert(pieces.end(), extracted.begin(), extracted.end());
  return join_terms(pieces, style, "");
}

}  // namespace immlift
