#pragma once

#include <optional>

#include "s3hopf/word.hpp"

namespace s3hopf {

// Variant A: squares x_t^2 = f_t (the deformed Nichols relations).
// Variant K: squares x_t^2 = -sum_g a_{g^-1 t g} delta_g (the cleft-object
// presentation used by the cocycle-deformation witness).
enum class Variant { A, K };

// Quadratic relators of the presentation, as normal-ordered elements equal
// to zero: the two kinds of braided commutation relators plus one square
// relator per transposition. Supported for n in {3,4,5}.
std::vector<GElement> relations(const ParamVector& a, Variant variant);

// Oriented identity lhs -> rhs, lhs a word with (implicit) coefficient 1.
struct Rule {
  Word lhs;
  GElement rhs;
};

struct RewriteSystem {
  int n;
  Variant variant;
  ParamVector a;
  std::vector<Rule> rules;        // sorted by lhs under WordLess
  std::vector<Word> normal_words; // irreducible words, graded order

  // verification results (all must hold for a certified n = 3 build)
  bool confluent = false;     // every overlap ambiguity resolves
  bool terminating = false;   // per-degree reduction graph is acyclic
  bool basis_ok = false;      // normal words match the projected basis
  int overlaps_checked = 0;
  int derived_rules = 0;      // rules added beyond the quadratic relators

  const SymGroup& group() const { return SymGroup::get(n); }
  // leftmost redex position and rule index, if any
  std::optional<std::pair<int, int>> find_redex(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_redex(w).has_value(); }
};

// The projected basis of the quadratic Nichols algebra for n = 3, in graded
// order; the completed system's irreducible words must equal it.
std::vector<Word> nichols_basis_s3(const SymGroup& G);

// Runs Diamond-Lemma completion for n = 3 and certifies the result
// (confluence, termination, irreducible words). Throws std::runtime_error
// with a diagnostic if completion diverges or the basis collapses.
RewriteSystem complete(const ParamVector& a, Variant variant);

// Degree-bounded exploration for n in {4,5}: emits the relators, runs
// completion on overlap words of length <= degree_bound, and reports the
// irreducible words up to that degree. Makes no dimension claim.
struct ExploreResult {
  RewriteSystem rs;            // rules found within the bound (not certified)
  int degree_bound;
  std::vector<int> normal_count_by_degree;  // degrees 0..degree_bound
};
ExploreResult explore_presentation(const ParamVector& a, Variant variant,
                                   int degree_bound);

// Fully reduces an element modulo the system.
GElement reduce(const RewriteSystem& rs, GElement e, long max_steps = 2000000);
GElement reduce_word(const RewriteSystem& rs, const Word& w);

}  // namespace s3hopf
