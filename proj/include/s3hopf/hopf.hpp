#pragma once

#include <map>

#include "s3hopf/algebra.hpp"
#include "s3hopf/linalg.hpp"

namespace s3hopf {

// Element of A (x) A in the tensor-squared basis.
using TensorElt = std::map<std::pair<int, int>, Rat>;

TensorElt te_mul(const StructureTable& T, const TensorElt& a, const TensorElt& b);
TensorElt te_sub(const TensorElt& a, const TensorElt& b);
TensorElt te_outer(const AlgElt& a, const AlgElt& b);
bool te_is_zero(const TensorElt& e);

// Coproduct, counit and antipode on the structure table. The coproduct is
// extended multiplicatively from the generator values; the antipode is the
// unique solution of the convolution identity, solved degree by degree (the
// linear system is block triangular along the word filtration) and then
// verified on both sides. Construction throws if any stage is inconsistent.
class CoproductTable {
 public:
  explicit CoproductTable(const StructureTable& T);

  const StructureTable& table() const { return *T_; }
  const TensorElt& delta(int b) const { return delta_[b]; }
  const Rat& counit(int b) const { return counit_[b]; }
  const AlgElt& antipode(int b) const { return antipode_[b]; }

  TensorElt delta_of(const AlgElt& a) const;
  Rat counit_of(const AlgElt& a) const;
  AlgElt antipode_of(const AlgElt& a) const;

  bool check_coassociativity() const;
  bool check_counit() const;
  bool check_antipode_axioms() const;         // both convolution identities
  bool check_delta_multiplicative() const;    // on generator * basis pairs
  bool check_s2_is_chi_conjugation() const;   // S^2(b) = chi b chi^-1
  bool check_s4_identity() const;

 private:
  const StructureTable* T_;
  std::vector<TensorElt> delta_;
  std::vector<Rat> counit_;
  std::vector<AlgElt> antipode_;
};

struct GrouplikeReport {
  std::vector<AlgElt> grouplikes;  // rational grouplikes, unit first
  int count_over_closure = 0;      // # of grouplikes over the algebraic closure
  bool complete = false;           // count_over_closure == grouplikes.size()
  int coradical_dim = 0;
  bool coradical_is_coradical_of_functions = false;  // span of the deltas
  bool chi_involution = false;                       // chi^2 = 1
  bool antipode_fixes_chi = false;                   // S(chi) = chi
};
GrouplikeReport grouplikes(const CoproductTable& ct);

struct SkewPrimitiveReport {
  Echelon space;          // {z : Delta z = z ox 1 + chi ox z}
  bool expected_basis;    // equals span{1 - chi, y}, y = sum of generators
};
SkewPrimitiveReport skew_primitives(const CoproductTable& ct);

struct SweedlerReport {
  int subalgebra_dim = 0;        // closure of {chi, y} under multiplication
  bool chi_sq_one = false;
  bool anticommute = false;      // y chi + chi y = 0
  AlgElt y_squared;              // computed exactly
  bool y_sq_zero = false;
  bool is_sweedler = false;      // dim 4 with the presentation above
};
SweedlerReport sweedler_check(const CoproductTable& ct);

struct IntegralReport {
  Echelon left, right;           // integral subspaces of A
  bool left_is_expected = false; // = span of (top word)·delta_e
  bool unimodular = false;
  bool alpha_trivial = false;    // distinguished character of A* equals counit
  Echelon dual_left, dual_right; // integral functionals on A
  bool dual_unimodular = false;
  AlgElt dual_distinguished;     // group-like of A attached to the dual integral
  bool dual_distinguished_trivial = false;
  IntegralReport() : left(0), right(0), dual_left(0), dual_right(0) {}
};
IntegralReport integrals(const CoproductTable& ct);

struct QtReport {
  bool r0_squared_one = false;
  int witness_g = -1;            // Delta^cop(delta_g) R0 != R0 Delta(delta_g)
  bool holds_at_identity = false;
  int coradical_dim_A = 0;       // = 6
  int grouplikes_A = 0;          // = 2
  int semisimple_quotient_dim_A = 0;  // dim A/J(A) = coradical dim of A*
  int onedim_reps_A = 0;              // = # grouplikes of A*
  bool selfdual_excluded = false;     // the invariant pairs differ
  bool obstructed = false;
};
QtReport qt_obstruction(const CoproductTable& ct);

struct KWitnessReport {
  int dim = 0;                        // 72 expected
  bool table_certified = false;       // completion certificates for variant K
  bool relators_annihilate = false;   // all variant-K relators kill the module
  bool action_weights_ok = false;     // delta_h picks the h component
  bool braid_relator_sum_zero = false;  // the R-relators act by -(sum a) = 0
};
KWitnessReport build_K_and_M3(const ParamVector& a);

// # of one-dimensional representations over the algebraic closure:
// dim A - dim(ideal generated by commutators + trace radical).
int onedim_rep_count(const StructureTable& T);

// Trace-form radical of the algebra (char 0), as a subspace of A.
Echelon trace_radical(const StructureTable& T);

}  // namespace s3hopf
