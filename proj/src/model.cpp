#include "binmosaic/model.hpp"

#include <stdexcept>
#include <string>

namespace binmosaic {

Probability::Probability(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0 || value_ > Rational(1)) {
    throw std::out_of_range("probability out of [0,1]: " + value_.to_string());
  }
}

Rational CondTable::transition(int current_value, int next_value) const {
  const Rational& zero = p_zero_given[current_value != 0 ? 1 : 0].value();
  return next_value == 0 ? zero : Rational(1) - zero;
}

ChainSpec::ChainSpec(Probability initial_p1, std::vector<CondTable> steps)
    : initial_p1_(std::move(initial_p1)), steps_(std::move(steps)) {
  if (n_vars() > kMaxVars) {
    throw std::invalid_argument("chain has more than " + std::to_string(kMaxVars) + " variables");
  }
}

ChainSpec chain_spec_new(const Rational& initial_p1,
                         const std::vector<std::array<Rational, 2>>& steps) {
  std::vector<CondTable> tables;
  tables.reserve(steps.size());
  for (const auto& [q0, q1] : steps) {
    tables.emplace_back(Probability(q0), Probability(q1));
  }
  return ChainSpec(Probability(initial_p1), std::move(tables));
}

ChainSpec homogeneous_chain(std::size_t n_vars, const Rational& initial_p1, const Rational& q0,
                            const Rational& q1) {
  if (n_vars == 0) {
    throw std::invalid_argument("chain needs at least one variable");
  }
  return ChainSpec(Probability(initial_p1),
                   std::vector<CondTable>(n_vars - 1, CondTable(Probability(q0), Probability(q1))));
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) {
      throw std::invalid_argument("assignment values must be 0 or 1");
    }
  }
}

Assignment Assignment::from_index(std::size_t index, std::size_t n_vars) {
  std::vector<std::uint8_t> bits(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    bits[i] = static_cast<std::uint8_t>((index >> (n_vars - 1 - i)) & 1U);
  }
  return Assignment(std::move(bits));
}

std::size_t Assignment::to_index() const {
  std::size_t index = 0;
  for (auto b : bits_) {
    index = (index << 1) | b;
  }
  return index;
}

JointTable::JointTable(std::size_t n_vars, std::vector<Rational> probs)
    : n_vars_(n_vars), probs_(std::move(probs)) {
  if (n_vars_ == 0 || n_vars_ > kMaxVars) {
    throw std::invalid_argument("joint table needs 1.." + std::to_string(kMaxVars) + " variables");
  }
  if (probs_.size() != (std::size_t{1} << n_vars_)) {
    throw std::invalid_argument("joint table over " + std::to_string(n_vars_) + " variables needs " +
                                std::to_string(std::size_t{1} << n_vars_) + " entries, got " +
                                std::to_string(probs_.size()));
  }
  Rational total;
  for (const auto& p : probs_) {
    if (p.sign() < 0) {
      throw std::invalid_argument("negative joint probability " + p.to_string());
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("joint probabilities sum to " + total.to_string() + ", not 1");
  }
}

const Rational& JointTable::prob(const Assignment& a) const {
  if (a.size() != n_vars_) {
    throw std::invalid_argument("assignment length does not match table");
  }
  return probs_[a.to_index()];
}

JointTable chain_joint(const ChainSpec& spec) {
  const std::size_t n = spec.n_vars();
  // Built level by level: after step i the vector holds P(x_0..x_i) in
  // index order, and each entry spawns its two children.
  std::vector<Rational> probs{Rational(1) - spec.initial_p1().value(), spec.initial_p1().value()};
  for (std::size_t step = 0; step + 1 < n; ++step) {
    const CondTable& table = spec.steps()[step];
    const std::array<Rational, 2> zero{table.transition(0, 0), table.transition(1, 0)};
    const std::array<Rational, 2> one{table.transition(0, 1), table.transition(1, 1)};
    std::vector<Rational> next;
    next.reserve(probs.size() * 2);
    for (std::size_t idx = 0; idx < probs.size(); ++idx) {
      const int current = static_cast<int>(idx & 1U);
      next.push_back(probs[idx] * zero[current]);
      next.push_back(probs[idx] * one[current]);
    }
    probs = std::move(next);
  }
  return JointTable(n, std::move(probs));
}

namespace {

Probability draw_interior(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t d = rng.uniform(2, bound);
  const std::uint64_t k = rng.uniform(1, d - 1);
  return Probability(Rational(BigInt(k), BigInt(d)));
}

}  // namespace

ChainSpec random_chain(std::size_t n_vars, Seed seed, std::uint64_t denominator_bound) {
  if (n_vars == 0) {
    throw std::invalid_argument("chain needs at least one variable");
  }
  if (denominator_bound < 2) {
    throw std::invalid_argument("denominator bound must be at least 2");
  }
  SplitMix64 rng(seed);
  Probability initial = draw_interior(rng, denominator_bound);
  std::vector<CondTable> steps;
  steps.reserve(n_vars - 1);
  for (std::size_t i = 0; i + 1 < n_vars; ++i) {
    Probability q0 = draw_interior(rng, denominator_bound);
    Probability q1 = draw_interior(rng, denominator_bound);
    steps.emplace_back(std::move(q0), std::move(q1));
  }
  return ChainSpec(std::move(initial), std::move(steps));
}

ChainSpec paper_chain_spec(std::size_t n_vars) {
  return homogeneous_chain(n_vars, make_rational(1, 2), make_rational(1, 3), make_rational(2, 3));
}

JointTable preset_chain3() { return chain_joint(paper_chain_spec(3)); }

JointTable preset_common_effect() {
  std::vector<Rational> probs(8);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const int a = (idx >> 2) & 1;
    const int b = (idx >> 1) & 1;
    const int c = idx & 1;
    if (c == (a & b)) {
      probs[idx] = make_rational(1, 4);
    }
  }
  return JointTable(3, std::move(probs));
}

namespace {

// Fork: `root` fair, both other variables follow it through the
// (1/3, 2/3) table. Positions are bit positions in (A, B, C) order.
JointTable fork(std::size_t root, std::size_t left, std::size_t right) {
  const CondTable table(Probability(make_rational(1, 3)), Probability(make_rational(2, 3)));
  std::vector<Rational> probs(8);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    auto value = [idx](std::size_t var) { return static_cast<int>((idx >> (2 - var)) & 1U); };
    probs[idx] = make_rational(1, 2) * table.transition(value(root), value(left)) *
                 table.transition(value(root), value(right));
  }
  return JointTable(3, std::move(probs));
}

}  // namespace

JointTable preset_common_cause() { return fork(0, 1, 2); }

JointTable preset_chain_bac() {
  const CondTable table(Probability(make_rational(1, 3)), Probability(make_rational(2, 3)));
  std::vector<Rational> probs(8);
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const int a = (idx >> 2) & 1;
    const int b = (idx >> 1) & 1;
    const int c = idx & 1;
    probs[idx] = make_rational(1, 2) * table.transition(b, a) * table.transition(a, c);
  }
  return JointTable(3, std::move(probs));
}

}  // namespace binmosaic
