#pragma once

#include <optional>
#include <vector>

#include "s3hopf/perm.hpp"
#include "s3hopf/rational.hpp"

namespace s3hopf {

// A function S_n -> k, stored by group-element index (one per element of
// SymGroup::elements()). These are the k^G coefficients the rewriting engine
// carries on the right of every word.
using GroupFun = std::vector<Rat>;

GroupFun gf_zero(const SymGroup& G);
GroupFun gf_const(const SymGroup& G, const Rat& c);
GroupFun gf_delta(const SymGroup& G, int g, const Rat& c);
bool gf_is_zero(const GroupFun& f);
bool gf_is_const(const GroupFun& f);
// g |-> f(t*g), the shift picked up when a coefficient moves left past x_t.
GroupFun gf_shift(const SymGroup& G, const GroupFun& f, int t);
GroupFun gf_add(const GroupFun& a, const GroupFun& b);
GroupFun gf_mul(const GroupFun& a, const GroupFun& b);  // pointwise
GroupFun gf_scale(const GroupFun& a, const Rat& c);

// Point of the parameter space: one rational per transposition, zero sum.
class ParamVector {
 public:
  ParamVector(int n, std::vector<Rat> entries);  // throws unless sum == 0
  static ParamVector zero(int n);

  int n() const { return n_; }
  const SymGroup& group() const { return SymGroup::get(n_); }
  const Rat& at(const Transposition& t) const;
  const Rat& at_index(int t) const { return a_[t]; }
  const std::vector<Rat>& entries() const { return a_; }
  bool operator==(const ParamVector& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }

  // a'_{t} = mu * a_{g^{-1} t g}: the rescaling/conjugation action on
  // parameters. Regime classification is invariant under it.
  ParamVector act(const Rat& mu, const Perm& g) const;

 private:
  int n_;
  std::vector<Rat> a_;  // indexed like SymGroup::transpositions()
};

enum class RegimeTag { Zero, SubGeneric, Generic };

struct Regime {
  RegimeTag tag;
  // For a sub-generic parameter (n = 3): a conjugation witness bringing it
  // to the canonical form a12 != a13 = a23; identity otherwise.
  Perm normalizer;
};

const char* regime_name(RegimeTag t);

// f_ij evaluated at g: a_t - a_{g^{-1} t g}.
Rat f_eval(const ParamVector& a, const Transposition& t, const Perm& g);
Rat f_eval_idx(const ParamVector& a, int t, int g);
GroupFun f_fun(const ParamVector& a, int t);  // the whole functional

// Coefficient of delta_g in Omega = f_13((12)·) - f_13. Requires n = 3.
Rat omega_eval(const ParamVector& a, const Perm& g);
GroupFun omega_fun(const ParamVector& a);

// { h : f_t(h) = 0 for every transposition t } = conjugation stabilizer of a.
std::vector<Perm> isotropy_group(const ParamVector& a);

// g ~ h with a witness chain (t_m ... t_1) such that g = t_m ... t_1 h and
// each partial product satisfies the nonvanishing condition.
struct LinkWitness {
  bool linked = false;
  std::vector<Transposition> chain;  // empty when g == h
};
LinkWitness linked(const ParamVector& a, const Perm& g, const Perm& h);

// Partition of S_n into linkage classes, each class sorted by element index.
std::vector<std::vector<Perm>> linkage_classes(const ParamVector& a);

Regime classify_regime(const ParamVector& a);  // n = 3

// Applies the regime normalizer: returns the canonical-form parameter the
// downstream pipelines run on (identity transform for generic/zero).
ParamVector normalize_subgeneric(const ParamVector& a, const Regime& r);

}  // namespace s3hopf
