#pragma once

#include <optional>
#include <string>

#include "s3hopf/algebra.hpp"
#include "s3hopf/linalg.hpp"

namespace s3hopf {

// Finite-dimensional module given by exact action operators: one matrix per
// transposition generator and one per group idempotent. Every constructor in
// this module relation-checks the operators before returning.
struct Representation {
  const StructureTable* T = nullptr;
  int dim = 0;
  std::vector<RatMat> X;  // indexed like SymGroup::transpositions()
  std::vector<RatMat> D;  // indexed like SymGroup::elements()
  std::string label;

  RatVec act_word(const Word& w, RatVec v) const;  // letters applied right to left
};

// Violated defining relations, by name; empty means the action is valid.
std::vector<std::string> rep_violations(const Representation& M);

// Verma module at g: the left ideal A*delta_g inside the regular
// representation, on the basis {x delta_g : x normal}.
Representation verma(const StructureTable& T, int g);

// One-dimensional module at h; requires h in the isotropy group of the
// parameter and throws otherwise.
Representation onedim(const StructureTable& T, int h);

// The named nontrivial simple module: dimension 5 for generic parameters,
// dimension 4 for canonical sub-generic ones. Throws for the zero regime.
Representation simple_L(const StructureTable& T);

// The two six-dimensional extension families over a generic parameter:
// extension of L by k_e when top_is_L, of k_e by L otherwise.
Representation W_module(const StructureTable& T, const ParamVector& t, bool top_is_L);

std::vector<int> weight_dims(const Representation& M);
Echelon weight_space(const Representation& M, int g);

// smallest submodule containing v (closure under all nine operators)
Echelon spin(const Representation& M, const RatVec& v);
Echelon spin_subspace(const Representation& M, const Echelon& vs);

// Jacobson radical of the table algebra with its certificate.
struct RadicalReport {
  Echelon space;
  bool is_ideal = false;
  bool nilpotent = false;
  int nilpotency_degree = 0;
  RadicalReport() : space(0) {}
};
RadicalReport jacobson_radical(const StructureTable& T);

RatMat action_of(const Representation& M, const AlgElt& a);
Echelon radical_of(const Representation& M, const Echelon& J);  // J . M
Echelon socle_of(const Representation& M, const Echelon& J);    // {m : J m = 0}

Representation sub_rep(const Representation& M, const Echelon& S, const std::string& label);
Representation quotient_rep(const Representation& M, const Echelon& S, const std::string& label);
Representation top_of(const Representation& M, const Echelon& J);

// intertwiners M -> N, each returned as a dim(N) x dim(M) matrix
std::vector<RatMat> hom_space(const Representation& M, const Representation& N);
int end_dim(const Representation& M);

// simple with scalar endomorphisms (so simplicity survives base change)
bool is_abs_simple(const Representation& M, const Echelon& J);

// local endomorphism algebra certificate: dim End/J(End) == 1
bool is_indecomposable(const Representation& M);

struct IsoResult {
  bool isomorphic = false;
  bool decided = true;  // false only if the invertibility search was inconclusive
  RatMat witness;
};
IsoResult is_isomorphic(const Representation& M, const Representation& N);

struct SimplesReport {
  RegimeTag regime;
  std::vector<Representation> simples;  // pairwise non-isomorphic Verma tops
  std::vector<int> dims;
  int radical_dim = 0;
  bool radical_certified = false;
  bool wedderburn_ok = false;   // sum of squares + radical dim = dim A
  bool all_abs_simple = false;
  bool tops_simple = false;     // every Verma top is simple
};
SimplesReport classify_simples(const StructureTable& T);

}  // namespace s3hopf
