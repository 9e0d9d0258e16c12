#pragma once

#include <loci/linear_term.hpp>

#include <memory>
#include <optional>
#include <set>

namespace loci {

enum class FKind { True, False, Geq, Eq, Dvd, Ndvd, Not, And, Or, Exists, Forall };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// First-order Presburger formula. Atoms are normalized to
//   term >= 0, term = 0, term ≡ 0 (mod n), term ≢ 0 (mod n) with n >= 2.
struct FormulaNode {
  FKind kind;
  LinearTerm term;             // Geq / Eq / Dvd / Ndvd
  Int modulus = 0;             // Dvd / Ndvd
  std::vector<Formula> kids;   // And / Or / Not
  std::string var;             // Exists / Forall
  Formula body;                // Exists / Forall
};

Formula f_true();
Formula f_false();
Formula f_bool(bool b);
Formula f_geq(LinearTerm t);                 // t >= 0
Formula f_eq(LinearTerm t);                  // t = 0
Formula f_dvd(Int n, LinearTerm t);          // n | t
Formula f_ndvd(Int n, LinearTerm t);         // n ∤ t
Formula f_not(Formula f);
Formula f_and(std::vector<Formula> fs);
Formula f_or(std::vector<Formula> fs);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_exists(std::string v, Formula body);
Formula f_forall(std::string v, Formula body);

// Convenience comparisons built from linear terms.
Formula f_le(const LinearTerm& a, const LinearTerm& b);   // a <= b
Formula f_lt(const LinearTerm& a, const LinearTerm& b);   // a < b
Formula f_ge(const LinearTerm& a, const LinearTerm& b);   // a >= b
Formula f_gt(const LinearTerm& a, const LinearTerm& b);   // a > b
Formula f_eq2(const LinearTerm& a, const LinearTerm& b);  // a = b

std::set<std::string> free_vars(const Formula& f);
bool is_quantifier_free(const Formula& f);

// Structural equality.
bool equal(const Formula& a, const Formula& b);

// Canonical printer; parse(print(f)) == f structurally.
std::string to_string(const Formula& f);

// Substitute var := t (capture is the caller's responsibility; quantified
// occurrences of var shadow the substitution).
Formula substitute(const Formula& f, const std::string& var, const LinearTerm& t);

// Substitute var := num/den with den > 0. Atoms are rescaled so the result
// stays integral; equivalent to the exact substitution at points where den
// divides the value of num.
Formula substitute_scaled(const Formula& f, const std::string& var, const LinearTerm& num,
                          const Int& den);

// Rename a free variable.
Formula rename(const Formula& f, const std::string& from, const std::string& to);

struct EvalOptions {
  // Bound for quantified variable search; quantifiers range over
  // [-quant_bound, quant_bound]. Evaluation throws if a quantifier is met
  // and no bound is set.
  std::optional<Int> quant_bound;
};

bool evaluate_formula(const Formula& f, const Point& p, const EvalOptions& opts = {});

}  // namespace loci
