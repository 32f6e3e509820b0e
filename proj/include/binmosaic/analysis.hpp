#pragma once

#include "binmosaic/model.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace binmosaic {

// Ordered list of distinct variable indices.
using VarSet = std::vector<std::size_t>;

// Variable index -> value in {0, 1}.
using PartialAssignment = std::map<std::size_t, int>;

// Exact marginal over `keep`; the result's variable i is keep[i].
JointTable marginal(const JointTable& joint, const VarSet& keep);

// P(event) by summation over the full table.
Rational event_prob(const JointTable& joint, const PartialAssignment& event);

// P(target | given). Throws std::domain_error("conditioning on null event")
// when P(given) = 0.
Probability conditional_prob(const JointTable& joint, const PartialAssignment& target,
                             const PartialAssignment& given);

bool is_independent(const JointTable& joint, const VarSet& a, const VarSet& b);

// a _||_ b | c. Slices with P(x_c) = 0 are vacuously independent. An empty c
// reduces to is_independent.
bool is_cond_independent(const JointTable& joint, const VarSet& a, const VarSet& b,
                         const VarSet& c);

// X_{i+1} _||_ {X_0..X_{i-1}} | X_i for every i >= 1, in the table's own
// variable order.
bool verify_markov(const JointTable& joint);

struct Statement {
  std::size_t a = 0;
  std::size_t b = 0;  // a < b
  VarSet given;       // sorted ascending
  bool independent = false;

  friend bool operator==(const Statement&, const Statement&) = default;
  friend auto operator<=>(const Statement&, const Statement&) = default;
};

enum class FingerprintScope {
  // Every pair, every subset of the remaining variables.
  full,
  // Every pair, conditioned on nothing or on a single variable adjacent
  // (index distance 1) to either member of the pair.
  adjacent,
};

// Pairwise conditional (in)dependence truth table, sorted by (a, b, given).
struct Fingerprint {
  std::size_t n_vars = 0;
  FingerprintScope scope = FingerprintScope::full;
  std::vector<Statement> statements;

  // Symmetric in (a, b); `given` may be in any order.
  std::optional<bool> lookup(std::size_t a, std::size_t b, VarSet given) const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Throws std::invalid_argument when n_vars < 2.
Fingerprint fingerprint(const JointTable& joint, FingerprintScope scope = FingerprintScope::full);

// P(X_target = 0 | X_given = v) for v = 0, 1; empty when P(X_given = v) = 0.
struct PairConditional {
  std::size_t given = 0;
  std::size_t target = 0;
  std::optional<Rational> p0_given0;
  std::optional<Rational> p0_given1;
};

// All ordered pairs given < target.
std::vector<PairConditional> pairwise_conditionals(const JointTable& joint);

// P(X_i = 0) for each variable.
std::vector<Rational> marginals_p0(const JointTable& joint);

}  // namespace binmosaic
