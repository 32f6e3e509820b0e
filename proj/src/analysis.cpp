#include "binmosaic/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace binmosaic {

namespace {

void check_vars(const JointTable& joint, const VarSet& vars, const char* what) {
  std::vector<bool> seen(joint.n_vars(), false);
  for (auto v : vars) {
    if (v >= joint.n_vars()) {
      throw std::out_of_range(std::string(what) + ": variable " + std::to_string(v) +
                              " out of range for " + std::to_string(joint.n_vars()) + " variables");
    }
    if (seen[v]) {
      throw std::invalid_argument(std::string(what) + ": duplicate variable " + std::to_string(v));
    }
    seen[v] = true;
  }
}

void check_disjoint(const VarSet& a, const VarSet& b) {
  for (auto v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) {
      throw std::invalid_argument("variable sets overlap at " + std::to_string(v));
    }
  }
}

void check_event(const JointTable& joint, const PartialAssignment& event) {
  for (const auto& [var, value] : event) {
    if (var >= joint.n_vars()) {
      throw std::out_of_range("event variable " + std::to_string(var) + " out of range");
    }
    if (value != 0 && value != 1) {
      throw std::invalid_argument("event value must be 0 or 1");
    }
  }
}

// Marginal entries without the JointTable wrapper (and its validation).
std::vector<Rational> marginal_entries(const JointTable& joint, const VarSet& keep) {
  std::vector<Rational> out(std::size_t{1} << keep.size());
  for (std::size_t idx = 0; idx < joint.size(); ++idx) {
    if (joint[idx].is_zero()) {
      continue;
    }
    std::size_t target = 0;
    for (auto v : keep) {
      target = (target << 1) | static_cast<std::size_t>(joint.bit(idx, v));
    }
    out[target] += joint[idx];
  }
  return out;
}

}  // namespace

JointTable marginal(const JointTable& joint, const VarSet& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("marginal: empty variable set");
  }
  check_vars(joint, keep, "marginal");
  return JointTable(keep.size(), marginal_entries(joint, keep));
}

Rational event_prob(const JointTable& joint, const PartialAssignment& event) {
  check_event(joint, event);
  Rational total;
  for (std::size_t idx = 0; idx < joint.size(); ++idx) {
    const bool match = std::all_of(event.begin(), event.end(), [&](const auto& kv) {
      return joint.bit(idx, kv.first) == kv.second;
    });
    if (match) {
      total += joint[idx];
    }
  }
  return total;
}

Probability conditional_prob(const JointTable& joint, const PartialAssignment& target,
                             const PartialAssignment& given) {
  check_event(joint, target);
  check_event(joint, given);
  PartialAssignment both = given;
  for (const auto& [var, value] : target) {
    if (given.contains(var)) {
      throw std::invalid_argument("target and given share variable " + std::to_string(var));
    }
    both.emplace(var, value);
  }
  const Rational p_given = event_prob(joint, given);
  if (p_given.is_zero()) {
    throw std::domain_error("conditioning on null event");
  }
  return Probability(event_prob(joint, both) / p_given);
}

bool is_independent(const JointTable& joint, const VarSet& a, const VarSet& b) {
  return is_cond_independent(joint, a, b, {});
}

bool is_cond_independent(const JointTable& joint, const VarSet& a, const VarSet& b,
                         const VarSet& c) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("independence test needs nonempty variable sets");
  }
  check_vars(joint, a, "independence test");
  check_vars(joint, b, "independence test");
  check_vars(joint, c, "independence test");
  check_disjoint(a, b);
  check_disjoint(a, c);
  check_disjoint(b, c);

  VarSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), c.begin(), c.end());
  const std::vector<Rational> abc = marginal_entries(joint, all);

  const std::size_t na = std::size_t{1} << a.size();
  const std::size_t nb = std::size_t{1} << b.size();
  const std::size_t nc = std::size_t{1} << c.size();
  auto at = [&](std::size_t xa, std::size_t xb, std::size_t xc) -> const Rational& {
    return abc[(xa * nb + xb) * nc + xc];
  };

  std::vector<Rational> ac(na * nc), bc(nb * nc), pc(nc);
  for (std::size_t xa = 0; xa < na; ++xa) {
    for (std::size_t xb = 0; xb < nb; ++xb) {
      for (std::size_t xc = 0; xc < nc; ++xc) {
        const Rational& p = at(xa, xb, xc);
        if (p.is_zero()) {
          continue;
        }
        ac[xa * nc + xc] += p;
        bc[xb * nc + xc] += p;
        pc[xc] += p;
      }
    }
  }

  // P(a,b,c) P(c) = P(a,c) P(b,c), the cross-multiplied form of
  // P(a,b|c) = P(a|c) P(b|c).
  for (std::size_t xc = 0; xc < nc; ++xc) {
    if (pc[xc].is_zero()) {
      continue;
    }
    for (std::size_t xa = 0; xa < na; ++xa) {
      for (std::size_t xb = 0; xb < nb; ++xb) {
        if (at(xa, xb, xc) * pc[xc] != ac[xa * nc + xc] * bc[xb * nc + xc]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_markov(const JointTable& joint) {
  for (std::size_t i = 1; i + 1 < joint.n_vars(); ++i) {
    VarSet past(i);
    for (std::size_t k = 0; k < i; ++k) {
      past[k] = k;
    }
    if (!is_cond_independent(joint, {i + 1}, past, {i})) {
      return false;
    }
  }
  return true;
}

std::optional<bool> Fingerprint::lookup(std::size_t a, std::size_t b, VarSet given) const {
  if (a > b) {
    std::swap(a, b);
  }
  std::sort(given.begin(), given.end());
  const Statement key{a, b, std::move(given), false};
  auto it = std::lower_bound(statements.begin(), statements.end(), key,
                             [](const Statement& lhs, const Statement& rhs) {
                               return std::tie(lhs.a, lhs.b, lhs.given) <
                                      std::tie(rhs.a, rhs.b, rhs.given);
                             });
  if (it == statements.end() || it->a != key.a || it->b != key.b || it->given != key.given) {
    return std::nullopt;
  }
  return it->independent;
}

Fingerprint fingerprint(const JointTable& joint, FingerprintScope scope) {
  const std::size_t n = joint.n_vars();
  if (n < 2) {
    throw std::invalid_argument("fingerprint needs at least two variables");
  }
  Fingerprint fp{n, scope, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      VarSet rest;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j) {
          rest.push_back(k);
        }
      }
      std::vector<VarSet> subsets;
      if (scope == FingerprintScope::full) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
          VarSet s;
          for (std::size_t bit = 0; bit < rest.size(); ++bit) {
            if ((mask >> bit) & 1U) {
              s.push_back(rest[bit]);
            }
          }
          subsets.push_back(std::move(s));
        }
      } else {
        subsets.emplace_back();
        for (auto k : rest) {
          auto near = [k](std::size_t v) { return k + 1 == v || v + 1 == k; };
          if (near(i) || near(j)) {
            subsets.push_back({k});
          }
        }
      }
      for (auto& s : subsets) {
        const bool indep = is_cond_independent(joint, {i}, {j}, s);
        fp.statements.push_back({i, j, std::move(s), indep});
      }
    }
  }
  std::sort(fp.statements.begin(), fp.statements.end());
  return fp;
}

std::vector<PairConditional> pairwise_conditionals(const JointTable& joint) {
  std::vector<PairConditional> out;
  const std::size_t n = joint.n_vars();
  for (std::size_t given = 0; given < n; ++given) {
    for (std::size_t target = given + 1; target < n; ++target) {
      const std::vector<Rational> m = marginal_entries(joint, {given, target});
      PairConditional pc{given, target, std::nullopt, std::nullopt};
      const Rational g0 = m[0] + m[1];
      const Rational g1 = m[2] + m[3];
      if (!g0.is_zero()) {
        pc.p0_given0 = m[0] / g0;
      }
      if (!g1.is_zero()) {
        pc.p0_given1 = m[2] / g1;
      }
      out.push_back(std::move(pc));
    }
  }
  return out;
}

std::vector<Rational> marginals_p0(const JointTable& joint) {
  std::vector<Rational> out;
  out.reserve(joint.n_vars());
  for (std::size_t v = 0; v < joint.n_vars(); ++v) {
    out.push_back(marginal_entries(joint, {v})[0]);
  }
  return out;
}

}  // namespace binmosaic
