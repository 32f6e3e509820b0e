#pragma once

#include "binmosaic/prng.hpp"
#include "binmosaic/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binmosaic {

// A Rational constrained to [0, 1].
class Probability {
 public:
  Probability() = default;
  // Throws std::out_of_range when value is outside [0, 1].
  explicit Probability(Rational value);

  const Rational& value() const { return value_; }
  Probability complement() const { return Probability(Rational(1) - value_); }

  friend bool operator==(const Probability&, const Probability&) = default;

 private:
  Rational value_;
};

// Transition law of one chain step, stored as P(next = 0 | current = v).
// P(next = 1 | current = v) is always derived.
struct CondTable {
  std::array<Probability, 2> p_zero_given;

  CondTable() = default;
  CondTable(Probability q0, Probability q1) : p_zero_given{std::move(q0), std::move(q1)} {}

  // P(next = next_value | current = current_value).
  Rational transition(int current_value, int next_value) const;

  friend bool operator==(const CondTable&, const CondTable&) = default;
};

// A binary Markov chain X_0 -> X_1 -> ... -> X_{n-1}; each step may carry its
// own table, so time-inhomogeneous chains are representable.
class ChainSpec {
 public:
  ChainSpec(Probability initial_p1, std::vector<CondTable> steps);

  std::size_t n_vars() const { return steps_.size() + 1; }
  const Probability& initial_p1() const { return initial_p1_; }
  const std::vector<CondTable>& steps() const { return steps_; }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  Probability initial_p1_;
  std::vector<CondTable> steps_;
};

// Validating constructor from raw fractions; each pair is (q0, q1).
ChainSpec chain_spec_new(const Rational& initial_p1,
                         const std::vector<std::array<Rational, 2>>& steps);

// n-variable chain with the same table at every step.
ChainSpec homogeneous_chain(std::size_t n_vars, const Rational& initial_p1, const Rational& q0,
                            const Rational& q1);

// Values of X_0..X_{n-1}. Table index convention: X_0 is the most
// significant bit.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> bits);

  static Assignment from_index(std::size_t index, std::size_t n_vars);
  std::size_t to_index() const;

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t var) const { return bits_[var]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kMaxVars = 20;

// Dense exact joint distribution over n binary variables.
class JointTable {
 public:
  // Throws std::invalid_argument unless probs has 2^n_vars nonnegative
  // entries summing to exactly 1.
  JointTable(std::size_t n_vars, std::vector<Rational> probs);

  std::size_t n_vars() const { return n_vars_; }
  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t index) const { return probs_[index]; }
  const Rational& prob(const Assignment& a) const;
  std::span<const Rational> entries() const { return probs_; }

  // Bit of variable `var` inside table index `index`.
  int bit(std::size_t index, std::size_t var) const {
    return static_cast<int>((index >> (n_vars_ - 1 - var)) & 1U);
  }

  friend bool operator==(const JointTable&, const JointTable&) = default;

 private:
  std::size_t n_vars_;
  std::vector<Rational> probs_;
};

// Chain-rule product P(x_0) * prod P(x_{i+1} | x_i) for every assignment.
JointTable chain_joint(const ChainSpec& spec);

// Each probability is k/d with d uniform in [2, denominator_bound] and k
// uniform in [1, d-1], drawn from SplitMix64 in the order initial_p1, then
// (q0, q1) for each step; d is drawn before k.
ChainSpec random_chain(std::size_t n_vars, Seed seed, std::uint64_t denominator_bound);

// The 1/2 initial, (1/3, 2/3) transition chain on n variables.
ChainSpec paper_chain_spec(std::size_t n_vars);

// Three-variable tables, variables ordered (A, B, C) for the ternary presets.
JointTable preset_chain3();
// A, B fair independent coins, C = A AND B.
JointTable preset_common_effect();
// A fair; B and C each follow A through the (1/3, 2/3) table independently.
JointTable preset_common_cause();
// B fair; A follows B and C follows A through the (1/3, 2/3) table.
JointTable preset_chain_bac();

}  // namespace binmosaic
