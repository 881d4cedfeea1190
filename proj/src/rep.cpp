#include "s3hopf/rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "s3hopf/hopf.hpp"

namespace s3hopf {

RatVec Representation::act_word(const Word& w, RatVec v) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = mat_apply(X[*it], v);
  return v;
}

std::vector<std::string> rep_violations(const Representation& M) {
  const StructureTable& T = *M.T;
  const SymGroup& G = T.group();
  std::vector<std::string> bad;
  int n = M.dim;

  RatMat sum = mat_zero(n, n);
  for (int g = 0; g < G.order(); ++g) {
    sum = mat_add(sum, M.D[g]);
    for (int h = 0; h < G.order(); ++h) {
      RatMat p = mat_mul(M.D[g], M.D[h]);
      RatMat expect = g == h ? M.D[g] : mat_zero(n, n);
      if (!(p == expect)) {
        bad.push_back("idempotents");
        g = h = G.order();
      }
    }
  }
  if (!(sum == mat_identity(n))) bad.push_back("idempotent sum");

  for (int t = 0; t < G.num_transpositions(); ++t)
    for (int h = 0; h < G.order(); ++h) {
      // delta_h x_t = x_t delta_{t h}
      if (!(mat_mul(M.D[h], M.X[t]) == mat_mul(M.X[t], M.D[G.tmul(t, h)]))) {
        bad.push_back("smash commutation");
        t = G.num_transpositions();
        break;
      }
    }

  for (const GElement& rel : relations(T.params(), T.variant())) {
    RatMat acc = mat_zero(n, n);
    for (const auto& [w, c] : rel) {
      RatMat m = mat_zero(n, n);
      for (int g = 0; g < G.order(); ++g) m = mat_add(m, mat_scale(M.D[g], c[g]));
      for (auto it = w.rbegin(); it != w.rend(); ++it) m = mat_mul(M.X[*it], m);
      acc = mat_add(acc, m);
    }
    if (!mat_is_zero(acc)) {
      bad.push_back("quadratic relator");
      break;
    }
  }
  return bad;
}

namespace {

void require_valid(const Representation& M) {
  std::vector<std::string> bad = rep_violations(M);
  if (!bad.empty())
    throw std::runtime_error("invalid module action (" + M.label + "): " + bad[0]);
}

}  // namespace

Representation verma(const StructureTable& T, int g) {
  const SymGroup& G = T.group();
  Representation M;
  M.T = &T;
  M.dim = T.nwords();
  M.label = "M[" + G.elem(g).cycle_string() + "]";
  // basis vector j <-> (word_j) delta_g; the ideal is spanned by these
  M.X.assign(G.num_transpositions(), mat_zero(M.dim, M.dim));
  M.D.assign(G.order(), mat_zero(M.dim, M.dim));
  for (int j = 0; j < M.dim; ++j) {
    int bj = j * G.order() + g;
    for (int t = 0; t < G.num_transpositions(); ++t)
      for (const auto& [k, c] : T.multiply(T.gen(t), T.basis_elt(bj))) {
        if (T.gelem_of(k) != g) throw std::logic_error("verma: left ideal escaped");
        M.X[t][k / G.order()][j] = c;
      }
    int wt = T.left_weight(bj);
    M.D[wt][j][j] = 1;
  }
  require_valid(M);
  return M;
}

Representation onedim(const StructureTable& T, int h) {
  const SymGroup& G = T.group();
  std::vector<Perm> iso = isotropy_group(T.params());
  if (std::find(iso.begin(), iso.end(), G.elem(h)) == iso.end())
    throw std::invalid_argument("onedim: " + G.elem(h).cycle_string() +
                                " is not in the isotropy group");
  Representation M;
  M.T = &T;
  M.dim = 1;
  M.label = "k[" + G.elem(h).cycle_string() + "]";
  M.X.assign(G.num_transpositions(), mat_zero(1, 1));
  M.D.assign(G.order(), mat_zero(1, 1));
  M.D[h][0][0] = 1;
  require_valid(M);
  return M;
}

Representation simple_L(const StructureTable& T) {
  const SymGroup& G = T.group();
  const ParamVector& a = T.params();
  Regime r = classify_regime(a);
  Representation M;
  M.T = &T;

  std::vector<int> carrier;  // group elements carrying the basis
  if (r.tag == RegimeTag::Generic) {
    for (int g = 1; g < G.order(); ++g) carrier.push_back(g);
    M.label = "L5";
  } else if (r.tag == RegimeTag::SubGeneric) {
    if (!(a.at(Transposition(1, 3)) == a.at(Transposition(2, 3))))
      throw std::invalid_argument("simple_L: sub-generic parameter not canonical");
    // the four-element linkage class
    for (auto& cls : linkage_classes(a))
      if (cls.size() == 4)
        for (const Perm& p : cls) carrier.push_back(G.index(p));
    std::sort(carrier.begin(), carrier.end());
    M.label = "L4";
  } else {
    throw std::invalid_argument("simple_L: zero regime has no such module");
  }

  int n = static_cast<int>(carrier.size());
  auto pos = [&](int g) {
    auto it = std::find(carrier.begin(), carrier.end(), g);
    return it == carrier.end() ? -1 : static_cast<int>(it - carrier.begin());
  };
  M.dim = n;
  M.X.assign(G.num_transpositions(), mat_zero(n, n));
  M.D.assign(G.order(), mat_zero(n, n));
  for (int j = 0; j < n; ++j) {
    int g = carrier[j];
    M.D[g][j][j] = 1;
    for (int t = 0; t < G.num_transpositions(); ++t) {
      int tg = G.tmul(t, g);
      Rat c = G.sgn(g) == 1 ? Rat(1) : f_eval_idx(a, t, g);
      if (r.tag == RegimeTag::SubGeneric) {
        // v_t vanishes under x_t; even weights pick up the functional
        if (g == G.telem(t)) continue;
        c = G.sgn(g) == 1 ? f_eval_idx(a, t, g) : Rat(1);
      }
      if (is_zero(c)) continue;
      int k = pos(tg);
      if (k == -1)
        throw std::logic_error("simple_L: action leaves the carrier");
      M.X[t][k][j] = c;
    }
  }
  require_valid(M);
  return M;
}

Representation W_module(const StructureTable& T, const ParamVector& tp, bool top_is_L) {
  const SymGroup& G = T.group();
  const ParamVector& a = T.params();
  if (classify_regime(a).tag != RegimeTag::Generic)
    throw std::invalid_argument("W_module: generic parameters only");
  Representation M;
  M.T = &T;
  M.dim = G.order();
  M.label = std::string(top_is_L ? "W(L,k_e)" : "W(k_e,L)");
  M.X.assign(G.num_transpositions(), mat_zero(M.dim, M.dim));
  M.D.assign(G.order(), mat_zero(M.dim, M.dim));
  for (int g = 0; g < G.order(); ++g) {
    M.D[g][g][g] = 1;
    for (int t = 0; t < G.num_transpositions(); ++t) {
      int tg = G.tmul(t, g);
      Rat c;
      if (top_is_L) {
        if (g == 0)
          c = 0;
        else if (G.sgn(g) == 1)
          c = 1;
        else if (g == G.telem(t))
          c = tp.at_index(t);  // lands on w_e
        else
          c = f_eval_idx(a, t, g);
      } else {
        if (g == 0)
          c = tp.at_index(t);
        else if (G.sgn(g) == 1)
          c = f_eval_idx(a, t, g);
        else
          c = 1;
      }
      if (!is_zero(c)) M.X[t][tg][g] += c;
    }
  }
  require_valid(M);
  return M;
}

std::vector<int> weight_dims(const Representation& M) {
  std::vector<int> dims;
  for (const RatMat& d : M.D) {
    RatMat m = d;
    dims.push_back(static_cast<int>(rref(m).size()));
  }
  return dims;
}

Echelon weight_space(const Representation& M, int g) {
  Echelon e(M.dim);
  for (int j = 0; j < M.dim; ++j) {
    RatVec col(M.dim);
    for (int i = 0; i < M.dim; ++i) col[i] = M.D[g][i][j];
    e.add(std::move(col));
  }
  return e;
}

Echelon spin(const Representation& M, const RatVec& v) {
  Echelon s(M.dim);
  s.add(v);
  return spin_subspace(M, s);
}

// operator on M of an arbitrary algebra element
RatMat action_of(const Representation& M, const AlgElt& a) {
  const StructureTable& T = *M.T;
  RatMat op = mat_zero(M.dim, M.dim);
  for (const auto& [b, c] : a) {
    RatMat word_op = mat_identity(M.dim);
    const Word& w = T.word_of(b);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      word_op = mat_mul(M.X[*it], word_op);
    op = mat_add(op, mat_scale(mat_mul(word_op, M.D[T.gelem_of(b)]), c));
  }
  return op;
}

Echelon spin_subspace(const Representation& M, const Echelon& vs) {
  Echelon e(M.dim);
  std::vector<RatVec> work;
  for (const RatVec& r : vs.rows())
    if (e.add(r)) work.push_back(r);
  while (!work.empty()) {
    RatVec v = std::move(work.back());
    work.pop_back();
    for (const RatMat& op : M.X) {
      RatVec u = mat_apply(op, v);
      if (e.add(u)) work.push_back(std::move(u));
    }
    for (const RatMat& op : M.D) {
      RatVec u = mat_apply(op, v);
      if (e.add(u)) work.push_back(std::move(u));
    }
  }
  return e;
}

RadicalReport jacobson_radical(const StructureTable& T) {
  RadicalReport rep;
  rep.space = trace_radical(T);
  int d = T.dim();

  auto mul_span = [&](const Echelon& A, const Echelon& B) {
    Echelon out(d);
    for (const RatVec& u : A.rows())
      for (const RatVec& v : B.rows()) {
        AlgElt p = T.multiply(ae_from_dense(u), ae_from_dense(v));
        out.add(ae_to_dense(T, p));
      }
    return out;
  };

  // two-sided ideal check
  Echelon basis(d);
  for (int i = 0; i < d; ++i) {
    RatVec e(d, Rat(0));
    e[i] = 1;
    basis.add(std::move(e));
  }
  rep.is_ideal = basis.contains(mul_span(basis, rep.space)) &&
                 rep.space == ech_sum(rep.space, mul_span(basis, rep.space)) &&
                 rep.space == ech_sum(rep.space, mul_span(rep.space, basis));

  Echelon power = rep.space;
  rep.nilpotency_degree = 1;
  while (power.dim() > 0 && rep.nilpotency_degree < 10) {
    power = mul_span(power, rep.space);
    ++rep.nilpotency_degree;
  }
  rep.nilpotent = power.dim() == 0;
  return rep;
}

Echelon radical_of(const Representation& M, const Echelon& J) {
  Echelon out(M.dim);
  for (const RatVec& j : J.rows()) {
    RatMat op = action_of(M, ae_from_dense(j));
    for (int col = 0; col < M.dim; ++col) {
      RatVec v(M.dim);
      for (int i = 0; i < M.dim; ++i) v[i] = op[i][col];
      out.add(std::move(v));
    }
  }
  return out;
}

Echelon socle_of(const Representation& M, const Echelon& J) {
  RatMat sys;
  for (const RatVec& j : J.rows()) {
    RatMat op = action_of(M, ae_from_dense(j));
    for (int i = 0; i < M.dim; ++i) sys.push_back(op[i]);
  }
  Echelon out(M.dim);
  if (sys.empty()) {
    for (int i = 0; i < M.dim; ++i) {
      RatVec e(M.dim, Rat(0));
      e[i] = 1;
      out.add(std::move(e));
    }
    return out;
  }
  for (RatVec& v : nullspace(sys)) out.add(std::move(v));
  return out;
}

Representation sub_rep(const Representation& M, const Echelon& S, const std::string& label) {
  int r = S.dim();
  Representation N;
  N.T = M.T;
  N.dim = r;
  N.label = label;
  // coordinates: solve B^T c = v for each image vector
  RatMat bt = mat_zero(M.dim, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < M.dim; ++i) bt[i][j] = S.rows()[j][i];
  auto restrict_op = [&](const RatMat& op) {
    RatMat out = mat_zero(r, r);
    for (int j = 0; j < r; ++j) {
      RatVec img = mat_apply(op, S.rows()[j]);
      RatVec c;
      if (!solve(bt, img, c))
        throw std::invalid_argument("sub_rep: not an invariant subspace");
      for (int i = 0; i < r; ++i) out[i][j] = c[i];
    }
    return out;
  };
  for (const RatMat& x : M.X) N.X.push_back(restrict_op(x));
  for (const RatMat& d : M.D) N.D.push_back(restrict_op(d));
  require_valid(N);
  return N;
}

Representation quotient_rep(const Representation& M, const Echelon& S, const std::string& label) {
  // complement coordinates: non-pivot standard basis vectors
  std::vector<int> free_cols;
  std::vector<bool> is_pivot(M.dim, false);
  for (int p : S.pivots()) is_pivot[p] = true;
  for (int i = 0; i < M.dim; ++i)
    if (!is_pivot[i]) free_cols.push_back(i);
  int r = static_cast<int>(free_cols.size());

  // residue map: subtract the echelon reduction, then read free coordinates
  auto project = [&](RatVec v) {
    for (std::size_t k = 0; k < S.rows().size(); ++k) {
      Rat c = v[S.pivots()[k]];
      if (is_zero(c)) continue;
      for (int j = 0; j < M.dim; ++j) v[j] -= c * S.rows()[k][j];
    }
    RatVec out(r);
    for (int i = 0; i < r; ++i) out[i] = v[free_cols[i]];
    return out;
  };

  Representation N;
  N.T = M.T;
  N.dim = r;
  N.label = label;
  auto push_op = [&](const RatMat& op) {
    RatMat out = mat_zero(r, r);
    for (int j = 0; j < r; ++j) {
      RatVec e(M.dim, Rat(0));
      e[free_cols[j]] = 1;
      RatVec img = project(mat_apply(op, e));
      for (int i = 0; i < r; ++i) out[i][j] = img[i];
    }
    return out;
  };
  for (const RatMat& x : M.X) N.X.push_back(push_op(x));
  for (const RatMat& d : M.D) N.D.push_back(push_op(d));
  require_valid(N);
  return N;
}

Representation top_of(const Representation& M, const Echelon& J) {
  return quotient_rep(M, radical_of(M, J), M.label + "/rad");
}

std::vector<RatMat> hom_space(const Representation& M, const Representation& N) {
  // unknowns F (N.dim x M.dim), constraints F rho_M(u) = rho_N(u) F
  int rows_per = N.dim * M.dim;
  std::vector<const RatMat*> ops_m, ops_n;
  for (std::size_t t = 0; t < M.X.size(); ++t) {
    ops_m.push_back(&M.X[t]);
    ops_n.push_back(&N.X[t]);
  }
  for (std::size_t g = 0; g < M.D.size(); ++g) {
    ops_m.push_back(&M.D[g]);
    ops_n.push_back(&N.D[g]);
  }
  RatMat sys;
  for (std::size_t o = 0; o < ops_m.size(); ++o) {
    const RatMat &A = *ops_m[o], &B = *ops_n[o];
    for (int i = 0; i < N.dim; ++i)
      for (int j = 0; j < M.dim; ++j) {
        RatVec row(rows_per, Rat(0));
        // (F A)_{ij} = sum_k F_{ik} A_{kj}; (B F)_{ij} = sum_k B_{ik} F_{kj}
        for (int k = 0; k < M.dim; ++k) row[i * M.dim + k] += A[k][j];
        for (int k = 0; k < N.dim; ++k) row[k * M.dim + j] -= B[i][k];
        sys.push_back(std::move(row));
      }
  }
  std::vector<RatMat> basis;
  for (const RatVec& v : nullspace(sys)) {
    RatMat F = mat_zero(N.dim, M.dim);
    for (int i = 0; i < N.dim; ++i)
      for (int j = 0; j < M.dim; ++j) F[i][j] = v[i * M.dim + j];
    basis.push_back(std::move(F));
  }
  return basis;
}

int end_dim(const Representation& M) {
  return static_cast<int>(hom_space(M, M).size());
}

bool is_abs_simple(const Representation& M, const Echelon& J) {
  if (M.dim == 0) return false;
  if (radical_of(M, J).dim() != 0) return false;  // not even semisimple
  return end_dim(M) == 1;
}

bool is_indecomposable(const Representation& M) {
  std::vector<RatMat> ends = hom_space(M, M);
  int n = static_cast<int>(ends.size());
  // structure constants of End(M), then dim End/J(End) must be 1
  RatMat flat;  // rows: flattened basis endos
  for (const RatMat& e : ends) {
    RatVec v;
    for (const RatVec& row : e) v.insert(v.end(), row.begin(), row.end());
    flat.push_back(std::move(v));
  }
  auto coords = [&](const RatMat& m) {
    RatVec v;
    for (const RatVec& row : m) v.insert(v.end(), row.begin(), row.end());
    RatVec c;
    RatMat bt = mat_transpose(flat);
    if (!solve(bt, v, c)) throw std::logic_error("End(M) is not closed");
    return c;
  };
  std::vector<RatMat> lmul(n, mat_zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec c = coords(mat_mul(ends[i], ends[j]));
      for (int k = 0; k < n; ++k) lmul[i][k][j] = c[k];
    }
  RatMat gram = mat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = mat_trace_of_product(lmul[i], lmul[j]);
  int radical_dim = n - rank(gram);
  return n - radical_dim == 1;
}

IsoResult is_isomorphic(const Representation& M, const Representation& N) {
  IsoResult res;
  if (M.dim != N.dim) return res;
  if (weight_dims(M) != weight_dims(N)) return res;
  std::vector<RatMat> homs = hom_space(M, N);
  if (homs.empty()) return res;
  // search the hom space for an invertible element; for spaces of dimension
  // <= 2 the pencil determinant decides exactly
  for (const RatMat& F : homs)
    if (!is_zero(det(F))) {
      res.isomorphic = true;
      res.witness = F;
      return res;
    }
  if (homs.size() == 1) return res;  // all multiples singular
  if (homs.size() == 2) {
    // det(F0 + x F1) is a polynomial of degree <= dim; sample dim+1 points
    for (int x = 1; x <= M.dim + 1; ++x) {
      RatMat F = mat_add(homs[0], mat_scale(homs[1], Rat(x)));
      if (!is_zero(det(F))) {
        res.isomorphic = true;
        res.witness = F;
        return res;
      }
    }
    return res;  // identically singular pencil
  }
  // higher-dimensional hom spaces: sample small integer combinations
  for (int trial = 0; trial < 200; ++trial) {
    RatMat F = mat_zero(N.dim, M.dim);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      int c = static_cast<int>((trial * 7919 + k * 104729 + 1) % 11) - 5;
      F = mat_add(F, mat_scale(homs[k], Rat(c)));
    }
    if (!is_zero(det(F))) {
      res.isomorphic = true;
      res.witness = F;
      return res;
    }
  }
  res.decided = false;
  return res;
}

SimplesReport classify_simples(const StructureTable& T) {
  const SymGroup& G = T.group();
  SimplesReport rep;
  rep.regime = classify_regime(T.params()).tag;
  RadicalReport J = jacobson_radical(T);
  rep.radical_dim = J.space.dim();
  rep.radical_certified = J.is_ideal && J.nilpotent;

  rep.tops_simple = true;
  rep.all_abs_simple = true;
  for (int g = 0; g < G.order(); ++g) {
    Representation M = verma(T, g);
    Representation top = top_of(M, J.space);
    top.label = "top(" + M.label + ")";
    if (!is_abs_simple(top, J.space)) {
      rep.tops_simple = false;
      continue;
    }
    bool known = false;
    for (const Representation& S : rep.simples)
      if (is_isomorphic(S, top).isomorphic) known = true;
    if (!known) rep.simples.push_back(top);
  }
  Rat sumsq(0);
  for (const Representation& S : rep.simples) {
    rep.dims.push_back(S.dim);
    sumsq += Rat(S.dim) * Rat(S.dim);
    if (!is_abs_simple(S, J.space)) rep.all_abs_simple = false;
  }
  std::sort(rep.dims.begin(), rep.dims.end());
  rep.wedderburn_ok = sumsq + Rat(rep.radical_dim) == Rat(T.dim());
  return rep;
}

}  // namespace s3hopf
