#include <loci/formula.hpp>

#include <sstream>

namespace loci {

std::string LinearTerm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (first) {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << v;
      first = false;
      continue;
    }
    if (c > 0) {
      os << " + ";
      if (c != 1) os << c << "*";
    } else {
      os << " - ";
      if (c != -1) os << -c << "*";
    }
    os << v;
  }
  if (first) {
    os << constant;
  } else if (constant > 0) {
    os << " + " << constant;
  } else if (constant < 0) {
    os << " - " << -constant;
  }
  return os.str();
}

namespace {
Formula make(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }
}  // namespace

Formula f_true() {
  static Formula t = make({FKind::True});
  return t;
}
Formula f_false() {
  static Formula f = make({FKind::False});
  return f;
}
Formula f_bool(bool b) { return b ? f_true() : f_false(); }

Formula f_geq(LinearTerm t) {
  FormulaNode n{FKind::Geq};
  n.term = std::move(t);
  return make(std::move(n));
}
Formula f_eq(LinearTerm t) {
  FormulaNode n{FKind::Eq};
  n.term = std::move(t);
  return make(std::move(n));
}
Formula f_dvd(Int m, LinearTerm t) {
  if (m < 2) throw domain_error("congruence modulus must be >= 2");
  FormulaNode n{FKind::Dvd};
  n.term = std::move(t);
  n.modulus = std::move(m);
  return make(std::move(n));
}
Formula f_ndvd(Int m, LinearTerm t) {
  if (m < 2) throw domain_error("congruence modulus must be >= 2");
  FormulaNode n{FKind::Ndvd};
  n.term = std::move(t);
  n.modulus = std::move(m);
  return make(std::move(n));
}
Formula f_not(Formula f) {
  if (f->kind == FKind::True) return f_false();
  if (f->kind == FKind::False) return f_true();
  if (f->kind == FKind::Not) return f->kids[0];
  FormulaNode n{FKind::Not};
  n.kids = {std::move(f)};
  return make(std::move(n));
}
Formula f_and(std::vector<Formula> fs) {
  std::vector<Formula> kids;
  for (auto& f : fs) {
    if (f->kind == FKind::False) return f_false();
    if (f->kind == FKind::True) continue;
    if (f->kind == FKind::And) {
      kids.insert(kids.end(), f->kids.begin(), f->kids.end());
      continue;
    }
    kids.push_back(std::move(f));
  }
  if (kids.empty()) return f_true();
  if (kids.size() == 1) return kids[0];
  FormulaNode n{FKind::And};
  n.kids = std::move(kids);
  return make(std::move(n));
}
Formula f_or(std::vector<Formula> fs) {
  std::vector<Formula> kids;
  for (auto& f : fs) {
    if (f->kind == FKind::True) return f_true();
    if (f->kind == FKind::False) continue;
    if (f->kind == FKind::Or) {
      kids.insert(kids.end(), f->kids.begin(), f->kids.end());
      continue;
    }
    kids.push_back(std::move(f));
  }
  if (kids.empty()) return f_false();
  if (kids.size() == 1) return kids[0];
  FormulaNode n{FKind::Or};
  n.kids = std::move(kids);
  return make(std::move(n));
}
Formula f_and(Formula a, Formula b) { return f_and(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula f_or(Formula a, Formula b) { return f_or(std::vector<Formula>{std::move(a), std::move(b)}); }

Formula f_exists(std::string v, Formula body) {
  FormulaNode n{FKind::Exists};
  n.var = std::move(v);
  n.body = std::move(body);
  return make(std::move(n));
}
Formula f_forall(std::string v, Formula body) {
  FormulaNode n{FKind::Forall};
  n.var = std::move(v);
  n.body = std::move(body);
  return make(std::move(n));
}

Formula f_le(const LinearTerm& a, const LinearTerm& b) { return f_geq(b - a); }
Formula f_lt(const LinearTerm& a, const LinearTerm& b) { return f_geq(b - a - LinearTerm(Int(1))); }
Formula f_ge(const LinearTerm& a, const LinearTerm& b) { return f_geq(a - b); }
Formula f_gt(const LinearTerm& a, const LinearTerm& b) { return f_geq(a - b - LinearTerm(Int(1))); }
Formula f_eq2(const LinearTerm& a, const LinearTerm& b) { return f_eq(a - b); }

static void collect_free(const Formula& f, std::set<std::string>& bound,
                         std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
      return;
    case FKind::Geq:
    case FKind::Eq:
    case FKind::Dvd:
    case FKind::Ndvd:
      for (const auto& [v, c] : f->term.coeffs)
        if (!bound.count(v)) out.insert(v);
      return;
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
      for (const auto& k : f->kids) collect_free(k, bound, out);
      return;
    case FKind::Exists:
    case FKind::Forall: {
      bool was = bound.count(f->var) > 0;
      bound.insert(f->var);
      collect_free(f->body, bound, out);
      if (!was) bound.erase(f->var);
      return;
    }
  }
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_quantifier_free(const Formula& f) {
  switch (f->kind) {
    case FKind::Exists:
    case FKind::Forall:
      return false;
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
      for (const auto& k : f->kids)
        if (!is_quantifier_free(k)) return false;
      return true;
    default:
      return true;
  }
}

bool equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::True:
    case FKind::False:
      return true;
    case FKind::Geq:
    case FKind::Eq:
      return a->term == b->term;
    case FKind::Dvd:
    case FKind::Ndvd:
      return a->modulus == b->modulus && a->term == b->term;
    case FKind::Not:
      return equal(a->kids[0], b->kids[0]);
    case FKind::And:
    case FKind::Or: {
      if (a->kids.size() != b->kids.size()) return false;
      for (size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i])) return false;
      return true;
    }
    case FKind::Exists:
    case FKind::Forall:
      return a->var == b->var && equal(a->body, b->body);
  }
  return false;
}

// Printing precedence: or < and < not/quantifier < atom. Quantifier bodies
// extend as far right as possible.
static void print(const Formula& f, std::ostream& os, int parent_prec) {
  auto wrap = [&](int prec, auto&& inner) {
    bool need = prec < parent_prec;
    if (need) os << "(";
    inner();
    if (need) os << ")";
  };
  switch (f->kind) {
    case FKind::True:
      os << "true";
      return;
    case FKind::False:
      os << "false";
      return;
    case FKind::Geq:
      os << f->term.to_string() << " >= 0";
      return;
    case FKind::Eq:
      os << f->term.to_string() << " = 0";
      return;
    case FKind::Dvd:
      os << f->term.to_string() << " mod " << f->modulus << " = 0";
      return;
    case FKind::Ndvd:
      os << "not (" << f->term.to_string() << " mod " << f->modulus << " = 0)";
      return;
    case FKind::Not:
      os << "not ";
      print(f->kids[0], os, 3);
      return;
    case FKind::And:
      wrap(2, [&] {
        for (size_t i = 0; i < f->kids.size(); ++i) {
          if (i) os << " and ";
          print(f->kids[i], os, 3);
        }
      });
      return;
    case FKind::Or:
      wrap(1, [&] {
        for (size_t i = 0; i < f->kids.size(); ++i) {
          if (i) os << " or ";
          print(f->kids[i], os, 2);
        }
      });
      return;
    case FKind::Exists:
    case FKind::Forall:
      wrap(0, [&] {
        os << (f->kind == FKind::Exists ? "exists " : "forall ") << f->var << ". ";
        print(f->body, os, 0);
      });
      return;
  }
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(f, os, 0);
  return os.str();
}

Formula substitute(const Formula& f, const std::string& var, const LinearTerm& t) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::Geq:
      return f_geq(f->term.substituted(var, t));
    case FKind::Eq:
      return f_eq(f->term.substituted(var, t));
    case FKind::Dvd:
      return f_dvd(f->modulus, f->term.substituted(var, t));
    case FKind::Ndvd:
      return f_ndvd(f->modulus, f->term.substituted(var, t));
    case FKind::Not:
      return f_not(substitute(f->kids[0], var, t));
    case FKind::And: {
      std::vector<Formula> ks;
      ks.reserve(f->kids.size());
      for (const auto& k : f->kids) ks.push_back(substitute(k, var, t));
      return f_and(std::move(ks));
    }
    case FKind::Or: {
      std::vector<Formula> ks;
      ks.reserve(f->kids.size());
      for (const auto& k : f->kids) ks.push_back(substitute(k, var, t));
      return f_or(std::move(ks));
    }
    case FKind::Exists:
    case FKind::Forall: {
      if (f->var == var) return f;
      auto body = substitute(f->body, var, t);
      return f->kind == FKind::Exists ? f_exists(f->var, body) : f_forall(f->var, body);
    }
  }
  return f;
}

Formula substitute_scaled(const Formula& f, const std::string& var, const LinearTerm& num,
                          const Int& den) {
  if (den <= 0) throw domain_error("substitute_scaled needs positive denominator");
  if (den == 1) return substitute(f, var, num);
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
      return f;
    case FKind::Geq:
    case FKind::Eq:
    case FKind::Dvd:
    case FKind::Ndvd: {
      Int c = f->term.coeff(var);
      if (c == 0) return f;
      LinearTerm rest = f->term;
      rest.coeffs.erase(var);
      // den * (rest + c*num/den) = den*rest + c*num
      LinearTerm scaled = rest * den + num * c;
      if (f->kind == FKind::Geq) return f_geq(scaled);
      if (f->kind == FKind::Eq) return f_eq(scaled);
      if (f->kind == FKind::Dvd) return f_dvd(f->modulus * den, scaled);
      return f_ndvd(f->modulus * den, scaled);
    }
    case FKind::Not:
      return f_not(substitute_scaled(f->kids[0], var, num, den));
    case FKind::And:
    case FKind::Or: {
      std::vector<Formula> ks;
      ks.reserve(f->kids.size());
      for (const auto& k : f->kids) ks.push_back(substitute_scaled(k, var, num, den));
      return f->kind == FKind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
    }
    case FKind::Exists:
    case FKind::Forall: {
      if (f->var == var) return f;
      auto body = substitute_scaled(f->body, var, num, den);
      return f->kind == FKind::Exists ? f_exists(f->var, body) : f_forall(f->var, body);
    }
  }
  return f;
}

Formula rename(const Formula& f, const std::string& from, const std::string& to) {
  return substitute(f, from, LinearTerm::variable(to));
}

bool evaluate_formula(const Formula& f, const Point& p, const EvalOptions& opts) {
  switch (f->kind) {
    case FKind::True:
      return true;
    case FKind::False:
      return false;
    case FKind::Geq:
      return f->term.evaluate(p) >= 0;
    case FKind::Eq:
      return f->term.evaluate(p) == 0;
    case FKind::Dvd:
      return divides(f->modulus, f->term.evaluate(p));
    case FKind::Ndvd:
      return !divides(f->modulus, f->term.evaluate(p));
    case FKind::Not:
      return !evaluate_formula(f->kids[0], p, opts);
    case FKind::And:
      for (const auto& k : f->kids)
        if (!evaluate_formula(k, p, opts)) return false;
      return true;
    case FKind::Or:
      for (const auto& k : f->kids)
        if (evaluate_formula(k, p, opts)) return true;
      return false;
    case FKind::Exists:
    case FKind::Forall: {
      if (!opts.quant_bound)
        throw domain_error("quantified formula evaluated without a quantifier bound");
      Point q = p;
      bool exist = f->kind == FKind::Exists;
      for (Int v = -*opts.quant_bound; v <= *opts.quant_bound; ++v) {
        q[f->var] = v;
        bool r = evaluate_formula(f->body, q, opts);
        if (exist && r) return true;
        if (!exist && !r) return false;
      }
      return !exist;
    }
  }
  return false;
}

}  // namespace loci
