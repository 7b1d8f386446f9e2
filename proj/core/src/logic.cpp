#include "continuum/logic.hpp"

#include <algorithm>
#include <cctype>

namespace continuum {

FormulaPtr Formula::make_atom(std::string name) {
  return std::make_shared<Formula>(Formula{Kind::atom, std::move(name), nullptr, nullptr});
}
FormulaPtr Formula::make_top() {
  return std::make_shared<Formula>(Formula{Kind::top, {}, nullptr, nullptr});
}
FormulaPtr Formula::make_bot() {
  return std::make_shared<Formula>(Formula{Kind::bot, {}, nullptr, nullptr});
}
FormulaPtr Formula::make_conj(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Kind::conj, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::make_disj(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Kind::disj, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::make_impl(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Kind::impl, {}, std::move(a), std::move(b)});
}

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::atom: return a.atom == b.atom;
    case Formula::Kind::top:
    case Formula::Kind::bot: return true;
    default: return formula_equal(*a.lhs, *b.lhs) && formula_equal(*a.rhs, *b.rhs);
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr run() {
    FormulaPtr f = implication();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
    return f;
  }

 private:
  // imp := disj ('->' imp)?     (right-associative)
  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    skip_space();
    if (match("->")) return Formula::make_impl(std::move(lhs), implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (true) {
      skip_space();
      if (peek() == '|') { ++pos_; lhs = Formula::make_disj(std::move(lhs), conjunction()); }
      else return lhs;
    }
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (true) {
      skip_space();
      if (peek() == '&') { ++pos_; lhs = Formula::make_conj(std::move(lhs), unary()); }
      else return lhs;
    }
  }

  FormulaPtr unary() {
    skip_space();
    if (peek() == '~') { ++pos_; return Formula::make_neg(unary()); }
    return primary();
  }

  FormulaPtr primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FormulaPtr f = implication();
      skip_space();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "top") return Formula::make_top();
      if (name == "bot") return Formula::make_bot();
      return Formula::make_atom(std::move(name));
    }
    throw SyntaxError("expected an atom, constant, '~' or '('", pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool match(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) { pos_ += token.size(); return true; }
    return false;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_negation(const Formula& f) {
  return f.kind == Formula::Kind::impl && f.rhs->kind == Formula::Kind::bot;
}

// precedence: atoms 4, ~ 3, & 2, | 1, -> 0
int precedence(const Formula& f) {
  if (is_negation(f)) return 3;
  switch (f.kind) {
    case Formula::Kind::impl: return 0;
    case Formula::Kind::disj: return 1;
    case Formula::Kind::conj: return 2;
    default: return 4;
  }
}

void format_into(const Formula& f, std::string& out, int parent_prec, bool right_operand) {
  const int prec = precedence(f);
  const bool parens =
      prec < parent_prec || (prec == parent_prec && !right_operand && prec == 0) ||
      (prec == parent_prec && right_operand && (prec == 1 || prec == 2));
  // & and | are left-associative in the printer; -> is right-associative.
  if (parens) out += "(";
  if (is_negation(f)) {
    out += "~";
    format_into(*f.lhs, out, 3, false);
  } else {
    switch (f.kind) {
      case Formula::Kind::atom: out += f.atom; break;
      case Formula::Kind::top: out += "top"; break;
      case Formula::Kind::bot: out += "bot"; break;
      case Formula::Kind::conj:
        format_into(*f.lhs, out, 2, false);
        out += " & ";
        format_into(*f.rhs, out, 2, true);
        break;
      case Formula::Kind::disj:
        format_into(*f.lhs, out, 1, false);
        out += " | ";
        format_into(*f.rhs, out, 1, true);
        break;
      case Formula::Kind::impl:
        format_into(*f.lhs, out, 1, false);  // any lower-prec lhs gets parens
        out += " -> ";
        format_into(*f.rhs, out, 0, true);
        break;
    }
  }
  if (parens) out += ")";
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::atom: out.push_back(f.atom); break;
    case Formula::Kind::top:
    case Formula::Kind::bot: break;
    default:
      collect_atoms(*f.lhs, out);
      collect_atoms(*f.rhs, out);
  }
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

std::string format_formula(const Formula& f) {
  std::string out;
  format_into(f, out, -1, false);
  return out;
}

std::vector<std::string> formula_atoms(const Formula& f) {
  std::vector<std::string> atoms;
  collect_atoms(f, atoms);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

int eval_formula(const Formula& f, const HeytingAlgebra& a,
                 const std::map<std::string, int>& assignment) {
  switch (f.kind) {
    case Formula::Kind::atom: {
      auto it = assignment.find(f.atom);
      if (it == assignment.end()) throw UnassignedAtom(f.atom);
      return it->second;
    }
    case Formula::Kind::top: return a.top();
    case Formula::Kind::bot: return a.bottom();
    case Formula::Kind::conj:
      return a.meet(eval_formula(*f.lhs, a, assignment), eval_formula(*f.rhs, a, assignment));
    case Formula::Kind::disj:
      return a.join(eval_formula(*f.lhs, a, assignment), eval_formula(*f.rhs, a, assignment));
    case Formula::Kind::impl:
      return a.implies(eval_formula(*f.lhs, a, assignment), eval_formula(*f.rhs, a, assignment));
  }
  throw Error("unreachable formula kind");
}

OpenRegion eval_formula(const Formula& f, const std::map<std::string, OpenRegion>& assignment) {
  switch (f.kind) {
    case Formula::Kind::atom: {
      auto it = assignment.find(f.atom);
      if (it == assignment.end()) throw UnassignedAtom(f.atom);
      return it->second;
    }
    case Formula::Kind::top: return OpenRegion::whole_line();
    case Formula::Kind::bot: return OpenRegion();
    case Formula::Kind::conj:
      return region_meet(eval_formula(*f.lhs, assignment), eval_formula(*f.rhs, assignment));
    case Formula::Kind::disj:
      return region_join(eval_formula(*f.lhs, assignment), eval_formula(*f.rhs, assignment));
    case Formula::Kind::impl:
      return region_implies(eval_formula(*f.lhs, assignment), eval_formula(*f.rhs, assignment));
  }
  throw Error("unreachable formula kind");
}

ValidityResult is_valid(const Formula& f, const HeytingAlgebra& a, long long budget) {
  const std::vector<std::string> atoms = formula_atoms(f);
  long long combos = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    combos *= a.size();
    if (combos > budget)
      throw TooManyAtoms(std::to_string(a.size()) + "^" + std::to_string(atoms.size()) +
                         " valuations exceed the budget");
  }
  std::vector<int> odometer(atoms.size(), 0);
  std::map<std::string, int> assignment;
  while (true) {
    for (std::size_t i = 0; i < atoms.size(); ++i) assignment[atoms[i]] = odometer[i];
    if (eval_formula(f, a, assignment) != a.top()) return {false, assignment};
    std::size_t i = 0;
    for (; i < odometer.size(); ++i) {
      if (++odometer[i] < a.size()) break;
      odometer[i] = 0;
    }
    if (i == odometer.size()) break;
  }
  return {true, {}};
}

std::optional<Countermodel> find_countermodel(const Formula& f, int max_size, long long budget) {
  std::vector<std::pair<std::string, HeytingAlgebra>> candidates;
  for (int n = 2; n <= max_size; ++n)
    candidates.emplace_back("chain" + std::to_string(n), chain_algebra(n));
  if (max_size >= 4) candidates.emplace_back("bool4", boolean_algebra(2));
  if (max_size >= 8) candidates.emplace_back("bool8", boolean_algebra(3));

  for (auto& [name, algebra] : candidates) {
    const ValidityResult r = is_valid(f, algebra, budget);
    if (!r.valid) return Countermodel{name, std::move(algebra), r.countervaluation};
  }
  return std::nullopt;
}

}  // namespace continuum
