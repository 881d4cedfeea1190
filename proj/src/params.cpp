#include "s3hopf/params.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace s3hopf {

GroupFun gf_zero(const SymGroup& G) { return GroupFun(G.order(), Rat(0)); }

GroupFun gf_const(const SymGroup& G, const Rat& c) {
  return GroupFun(G.order(), c);
}

GroupFun gf_delta(const SymGroup& G, int g, const Rat& c) {
  GroupFun f(G.order(), Rat(0));
  f[g] = c;
  return f;
}

bool gf_is_zero(const GroupFun& f) {
  return std::all_of(f.begin(), f.end(), [](const Rat& q) { return is_zero(q); });
}

bool gf_is_const(const GroupFun& f) {
  for (const Rat& q : f)
    if (q != f[0]) return false;
  return true;
}

GroupFun gf_shift(const SymGroup& G, const GroupFun& f, int t) {
  GroupFun r(G.order());
  for (int g = 0; g < G.order(); ++g) r[g] = f[G.tmul(t, g)];
  return r;
}

GroupFun gf_add(const GroupFun& a, const GroupFun& b) {
  GroupFun r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

GroupFun gf_mul(const GroupFun& a, const GroupFun& b) {
  GroupFun r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= b[i];
  return r;
}

GroupFun gf_scale(const GroupFun& a, const Rat& c) {
  GroupFun r(a);
  for (Rat& q : r) q *= c;
  return r;
}

ParamVector::ParamVector(int n, std::vector<Rat> entries) : n_(n), a_(std::move(entries)) {
  const SymGroup& G = SymGroup::get(n);
  if (static_cast<int>(a_.size()) != G.num_transpositions())
    throw std::invalid_argument("ParamVector: wrong number of entries");
  Rat sum(0);
  for (const Rat& q : a_) sum += q;
  if (!is_zero(sum))
    throw std::invalid_argument("ParamVector: entries must sum to zero");
}

ParamVector ParamVector::zero(int n) {
  const SymGroup& G = SymGroup::get(n);
  return ParamVector(n, std::vector<Rat>(G.num_transpositions(), Rat(0)));
}

const Rat& ParamVector::at(const Transposition& t) const {
  return a_[group().tindex(t)];
}

ParamVector ParamVector::act(const Rat& mu, const Perm& g) const {
  const SymGroup& G = group();
  int gi = G.index(g);
  std::vector<Rat> b(a_.size());
  for (int t = 0; t < G.num_transpositions(); ++t)
    b[t] = mu * a_[G.conj_t(t, gi)];
  return ParamVector(n_, std::move(b));
}

const char* regime_name(RegimeTag t) {
  switch (t) {
    case RegimeTag::Zero: return "zero";
    case RegimeTag::SubGeneric: return "sub-generic";
    case RegimeTag::Generic: return "generic";
  }
  return "?";
}

Rat f_eval(const ParamVector& a, const Transposition& t, const Perm& g) {
  const SymGroup& G = a.group();
  return f_eval_idx(a, G.tindex(t), G.index(g));
}

Rat f_eval_idx(const ParamVector& a, int t, int g) {
  const SymGroup& G = a.group();
  return a.at_index(t) - a.at_index(G.conj_t(t, g));
}

GroupFun f_fun(const ParamVector& a, int t) {
  const SymGroup& G = a.group();
  GroupFun f(G.order());
  for (int g = 0; g < G.order(); ++g) f[g] = f_eval_idx(a, t, g);
  return f;
}

Rat omega_eval(const ParamVector& a, const Perm& g) {
  if (a.n() != 3) throw std::invalid_argument("omega_eval: n must be 3");
  const SymGroup& G = a.group();
  int t13 = G.tindex(Transposition(1, 3));
  int t12 = G.tindex(Transposition(1, 2));
  int gi = G.index(g);
  return f_eval_idx(a, t13, G.tmul(t12, gi)) - f_eval_idx(a, t13, gi);
}

GroupFun omega_fun(const ParamVector& a) {
  const SymGroup& G = a.group();
  GroupFun f(G.order());
  for (int g = 0; g < G.order(); ++g) f[g] = omega_eval(a, G.elem(g));
  return f;
}

std::vector<Perm> isotropy_group(const ParamVector& a) {
  const SymGroup& G = a.group();
  std::vector<Perm> out;
  for (int g = 0; g < G.order(); ++g) {
    bool all_zero = true;
    for (int t = 0; t < G.num_transpositions() && all_zero; ++t)
      all_zero = is_zero(f_eval_idx(a, t, g));
    if (all_zero) out.push_back(G.elem(g));
  }
  return out;
}

namespace {

// BFS over the step relation h -> t*h permitted when f_t(t*h) != 0
// (equivalently f_t(h) != 0, by centralizer invariance of f_t).
std::vector<int> link_parents(const ParamVector& a, int from,
                              std::vector<int>* parent_edge) {
  const SymGroup& G = a.group();
  std::vector<int> parent(G.order(), -1);
  parent_edge->assign(G.order(), -1);
  parent[from] = from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int t = 0; t < G.num_transpositions(); ++t) {
      int v = G.tmul(t, u);
      if (parent[v] != -1) continue;
      if (is_zero(f_eval_idx(a, t, G.tmul(t, u)))) continue;
      parent[v] = u;
      (*parent_edge)[v] = t;
      queue.push_back(v);
    }
  }
  return parent;
}

}  // namespace

LinkWitness linked(const ParamVector& a, const Perm& g, const Perm& h) {
  const SymGroup& G = a.group();
  int gi = G.index(g), hi = G.index(h);
  LinkWitness w;
  if (gi == hi) {
    w.linked = true;
    return w;
  }
  std::vector<int> edge;
  std::vector<int> parent = link_parents(a, hi, &edge);
  if (parent[gi] == -1) return w;
  w.linked = true;
  for (int v = gi; v != hi; v = parent[v]) w.chain.push_back(G.trans(edge[v]));
  return w;
}

std::vector<std::vector<Perm>> linkage_classes(const ParamVector& a) {
  const SymGroup& G = a.group();
  std::vector<bool> done(G.order(), false);
  std::vector<std::vector<Perm>> classes;
  for (int g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    std::vector<int> edge;
    std::vector<int> parent = link_parents(a, g, &edge);
    std::vector<Perm> cls;
    for (int h = 0; h < G.order(); ++h)
      if (parent[h] != -1) {
        done[h] = true;
        cls.push_back(G.elem(h));
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Regime classify_regime(const ParamVector& a) {
  if (a.n() != 3) throw std::invalid_argument("classify_regime: n must be 3");
  const SymGroup& G = a.group();
  const Rat& a12 = a.at(Transposition(1, 2));
  const Rat& a13 = a.at(Transposition(1, 3));
  const Rat& a23 = a.at(Transposition(2, 3));
  Regime r{RegimeTag::Generic, Perm(3)};
  if (a12 == a13 && a13 == a23) {
    r.tag = RegimeTag::Zero;  // all equal forces all zero under the sum constraint
    return r;
  }
  if (a12 != a13 && a13 != a23 && a12 != a23) return r;
  r.tag = RegimeTag::SubGeneric;
  // pick a conjugation making (12) the distinguished transposition
  for (int g = 0; g < G.order(); ++g) {
    ParamVector b = a.act(Rat(1), G.elem(g));
    if (b.at(Transposition(1, 3)) == b.at(Transposition(2, 3)) &&
        b.at(Transposition(1, 2)) != b.at(Transposition(1, 3))) {
      r.normalizer = G.elem(g);
      return r;
    }
  }
  throw std::logic_error("sub-generic parameter without canonical form");
}

ParamVector normalize_subgeneric(const ParamVector& a, const Regime& r) {
  return a.act(Rat(1), r.normalizer);
}

}  // namespace s3hopf
