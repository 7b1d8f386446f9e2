#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "continuum/lattice.hpp"
#include "continuum/region.hpp"

namespace continuum {

/// Intuitionistic propositional formula. Negation is syntactic sugar:
/// the parser rewrites ~φ to φ → ⊥, so evaluation has a single path.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { atom, top, bot, conj, disj, impl };
  Kind kind;
  std::string atom;       // Kind::atom only
  FormulaPtr lhs, rhs;    // binary nodes only

  static FormulaPtr make_atom(std::string name);
  static FormulaPtr make_top();
  static FormulaPtr make_bot();
  static FormulaPtr make_conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_impl(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_neg(FormulaPtr a) { return make_impl(std::move(a), make_bot()); }
};

bool formula_equal(const Formula& a, const Formula& b);

/// Grammar: atoms [a-zA-Z_][a-zA-Z0-9_]*, constants `top` `bot`, operators
/// `~` > `&` > `|` > `->` (descending precedence, `->` right-associative),
/// parentheses. Throws SyntaxError with the byte offset.
FormulaPtr parse_formula(std::string_view text);

/// Minimal-parenthesis printer; parse(format(φ)) reproduces φ. φ → ⊥ prints
/// as ~φ.
std::string format_formula(const Formula& f);

/// Sorted unique atom names.
std::vector<std::string> formula_atoms(const Formula& f);

/// Compositional value in a finite Heyting algebra. Throws UnassignedAtom.
int eval_formula(const Formula& f, const HeytingAlgebra& a,
                 const std::map<std::string, int>& assignment);

/// Compositional value in the frame of open regions of the line: the region
/// where the proposition holds.
OpenRegion eval_formula(const Formula& f, const std::map<std::string, OpenRegion>& assignment);

struct ValidityResult {
  bool valid = false;
  std::map<std::string, int> countervaluation;  // set when !valid
};

/// Exhaustive check that eval = top under every assignment of atoms to
/// elements. Enumeration is in element order per atom, atoms sorted, so the
/// reported countervaluation is canonical. Throws TooManyAtoms when
/// size^atoms exceeds the budget.
ValidityResult is_valid(const Formula& f, const HeytingAlgebra& a,
                        long long budget = 2'000'000);

struct Countermodel {
  std::string algebra_name;
  HeytingAlgebra algebra;
  std::map<std::string, int> valuation;
};

/// Smallest refuting algebra: chains of sizes 2..max_size first, then the
/// catalogued non-chain algebras (Boolean 4 and 8) within the size bound.
std::optional<Countermodel> find_countermodel(const Formula& f, int max_size,
                                              long long budget = 2'000'000);

}  // namespace continuum
