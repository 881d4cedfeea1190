#include "s3hopf/hopf.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace s3hopf {

TensorElt te_mul(const StructureTable& T, const TensorElt& a, const TensorElt& b) {
  TensorElt r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      const AlgElt& left = T.prod(pa.first, pb.first);
      if (left.empty()) continue;
      const AlgElt& right = T.prod(pa.second, pb.second);
      if (right.empty()) continue;
      Rat c = ca * cb;
      for (const auto& [u, cu] : left)
        for (const auto& [v, cv] : right) {
          Rat add = c * cu * cv;
          auto key = std::make_pair(u, v);
          auto it = r.find(key);
          if (it == r.end()) {
            r.emplace(key, add);
          } else {
            it->second += add;
            if (is_zero(it->second)) r.erase(it);
          }
        }
    }
  return r;
}

TensorElt te_sub(const TensorElt& a, const TensorElt& b) {
  TensorElt r = a;
  for (const auto& [p, c] : b) {
    auto it = r.find(p);
    if (it == r.end()) {
      r.emplace(p, -c);
    } else {
      it->second -= c;
      if (is_zero(it->second)) r.erase(it);
    }
  }
  return r;
}

TensorElt te_outer(const AlgElt& a, const AlgElt& b) {
  TensorElt r;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      Rat c = ci * cj;
      if (!is_zero(c)) r[{i, j}] = c;
    }
  return r;
}

bool te_is_zero(const TensorElt& e) { return e.empty(); }

namespace {

// projection of an element onto the A*delta_v component
AlgElt tail_component(const StructureTable& T, const AlgElt& a, int v) {
  AlgElt r;
  for (const auto& [k, c] : a)
    if (T.gelem_of(k) == v) r.emplace_back(k, c);
  return r;
}

}  // namespace

CoproductTable::CoproductTable(const StructureTable& T) : T_(&T) {
  const SymGroup& G = T.group();
  const int N = G.order(), dim = T.dim();

  counit_.assign(dim, Rat(0));
  for (int g = 0; g < N; ++g)
    counit_[T.bindex(Word{}, g)] = g == 0 ? Rat(1) : Rat(0);

  // generator coproducts: Delta(x_t) = x_t ox 1 + sum_h sgn(h) d_h ox x_{h^-1 t h}
  auto delta_gen = [&](int t) {
    TensorElt d;
    for (int g = 0; g < N; ++g)
      for (int h = 0; h < N; ++h) {
        Word xt{static_cast<std::uint8_t>(t)};
        d[{T.bindex(xt, g), T.bindex(Word{}, h)}] = Rat(1);
        Word conj{static_cast<std::uint8_t>(G.conj_t(t, g))};
        Rat s(G.sgn(g));
        auto key = std::make_pair(T.bindex(Word{}, g), T.bindex(conj, h));
        auto it = d.find(key);
        if (it == d.end())
          d.emplace(key, s);
        else
          it->second += s;
      }
    return d;
  };

  // coproduct of each normal word, extended multiplicatively
  std::vector<TensorElt> word_delta(T.nwords());
  for (int w = 0; w < T.nwords(); ++w) {
    const Word& word = T.words()[w];
    TensorElt d;
    // unit coproduct: sum over (u,v) of d_u ox d_v
    for (int u = 0; u < N; ++u)
      for (int v = 0; v < N; ++v) d[{T.bindex(Word{}, u), T.bindex(Word{}, v)}] = Rat(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      d = te_mul(T, delta_gen(*it), d);
    word_delta[w] = std::move(d);
  }

  // Delta(x d_g): keep the terms of Delta(x) whose tails (u,v) satisfy uv = g
  delta_.assign(dim, {});
  for (int w = 0; w < T.nwords(); ++w)
    for (const auto& [p, c] : word_delta[w]) {
      int u = T.gelem_of(p.first), v = T.gelem_of(p.second);
      delta_[w * N + G.mult(u, v)][p] = c;
    }

  // antipode, degree by degree: for b = x d_g the identity
  //   sum S(b_(1)) b_(2) = eps(b) 1
  // determines the top-degree unknowns componentwise once the lower-degree
  // values are known, because right multiplication by d_v projects tails.
  antipode_.assign(dim, {});
  std::vector<int> words_by_degree(T.nwords());
  for (int w = 0; w < T.nwords(); ++w) words_by_degree[w] = w;
  std::stable_sort(words_by_degree.begin(), words_by_degree.end(),
                   [&](int x, int y) {
                     return T.words()[x].size() < T.words()[y].size();
                   });
  for (int w : words_by_degree) {
    std::size_t deg = T.words()[w].size();
    std::vector<AlgElt> residual(N);  // R_g
    for (int g = 0; g < N; ++g) {
      int b = w * N + g;
      AlgElt lower;
      for (const auto& [p, c] : delta_[b]) {
        if (T.word_of(p.first).size() >= deg && deg > 0) continue;
        if (deg == 0 && T.word_of(p.first).size() == 0 &&
            T.word_of(p.second).size() == 0)
          continue;  // degree-0 top terms handled below
        lower = ae_add(lower,
                       ae_scale(T.multiply(antipode_[p.first], T.basis_elt(p.second)), c));
      }
      AlgElt eps_term = is_zero(counit_[b]) ? AlgElt{} : ae_scale(T.unit(), counit_[b]);
      residual[g] = ae_sub(eps_term, lower);
    }
    for (int u = 0; u < N; ++u) {
      AlgElt s;
      for (int v = 0; v < N; ++v)
        s = ae_add(s, tail_component(T, residual[G.mult(u, v)], v));
      antipode_[w * N + u] = std::move(s);
    }
  }

  if (!check_antipode_axioms())
    throw std::runtime_error("coproduct table: antipode system has no solution");
}

TensorElt CoproductTable::delta_of(const AlgElt& a) const {
  TensorElt r;
  for (const auto& [b, c] : a)
    for (const auto& [p, cp] : delta_[b]) {
      auto it = r.find(p);
      if (it == r.end()) {
        Rat add = c * cp;
        if (!is_zero(add)) r.emplace(p, add);
      } else {
        it->second += c * cp;
        if (is_zero(it->second)) r.erase(it);
      }
    }
  return r;
}

Rat CoproductTable::counit_of(const AlgElt& a) const {
  Rat r(0);
  for (const auto& [b, c] : a) r += c * counit_[b];
  return r;
}

AlgElt CoproductTable::antipode_of(const AlgElt& a) const {
  AlgElt r;
  for (const auto& [b, c] : a) r = ae_add(r, ae_scale(antipode_[b], c));
  return r;
}

bool CoproductTable::check_coassociativity() const {
  const StructureTable& T = *T_;
  for (int b = 0; b < T.dim(); ++b) {
    std::map<std::tuple<int, int, int>, Rat> lhs, rhs;
    for (const auto& [p, c] : delta_[b]) {
      for (const auto& [q, cq] : delta_[p.first]) {
        auto key = std::make_tuple(q.first, q.second, p.second);
        lhs[key] += c * cq;
      }
      for (const auto& [q, cq] : delta_[p.second]) {
        auto key = std::make_tuple(p.first, q.first, q.second);
        rhs[key] += c * cq;
      }
    }
    for (auto& [k, v] : lhs) {
      auto it = rhs.find(k);
      if (is_zero(v)) continue;
      if (it == rhs.end() || !(it->second == v)) return false;
    }
    for (auto& [k, v] : rhs) {
      if (is_zero(v)) continue;
      auto it = lhs.find(k);
      if (it == lhs.end() || !(it->second == v)) return false;
    }
  }
  return true;
}

bool CoproductTable::check_counit() const {
  const StructureTable& T = *T_;
  for (int b = 0; b < T.dim(); ++b) {
    AlgElt left, right;
    for (const auto& [p, c] : delta_[b]) {
      Rat cl = c * counit_[p.first];
      if (!is_zero(cl)) left = ae_add(left, ae_scale(T.basis_elt(p.second), cl));
      Rat cr = c * counit_[p.second];
      if (!is_zero(cr)) right = ae_add(right, ae_scale(T.basis_elt(p.first), cr));
    }
    if (!(left == T.basis_elt(b)) || !(right == T.basis_elt(b))) return false;
  }
  return true;
}

bool CoproductTable::check_antipode_axioms() const {
  const StructureTable& T = *T_;
  for (int b = 0; b < T.dim(); ++b) {
    AlgElt left, right;
    for (const auto& [p, c] : delta_[b]) {
      left = ae_add(left, ae_scale(T.multiply(antipode_[p.first], T.basis_elt(p.second)), c));
      right = ae_add(right, ae_scale(T.multiply(T.basis_elt(p.first), antipode_[p.second]), c));
    }
    AlgElt expect = is_zero(counit_[b]) ? AlgElt{} : ae_scale(T.unit(), counit_[b]);
    if (!(left == expect) || !(right == expect)) return false;
  }
  return true;
}

bool CoproductTable::check_delta_multiplicative() const {
  const StructureTable& T = *T_;
  const SymGroup& G = T.group();
  std::vector<AlgElt> gens;
  for (int t = 0; t < G.num_transpositions(); ++t) gens.push_back(T.gen(t));
  for (int g = 0; g < G.order(); ++g) gens.push_back(T.delta(g));
  for (const AlgElt& u : gens) {
    TensorElt du = delta_of(u);
    for (int b = 0; b < T.dim(); ++b) {
      TensorElt lhs = delta_of(T.multiply(u, T.basis_elt(b)));
      TensorElt rhs = te_mul(T, du, delta_[b]);
      if (!te_is_zero(te_sub(lhs, rhs))) return false;
    }
  }
  return true;
}

bool CoproductTable::check_s2_is_chi_conjugation() const {
  const StructureTable& T = *T_;
  AlgElt chi = T.grouplike_chi();
  for (int b = 0; b < T.dim(); ++b) {
    AlgElt s2 = antipode_of(antipode_[b]);
    AlgElt conj = T.multiply(T.multiply(chi, T.basis_elt(b)), chi);
    if (!(s2 == conj)) return false;
  }
  return true;
}

bool CoproductTable::check_s4_identity() const {
  const StructureTable& T = *T_;
  for (int b = 0; b < T.dim(); ++b) {
    AlgElt s4 = antipode_of(antipode_of(antipode_of(antipode_[b])));
    if (!(s4 == T.basis_elt(b))) return false;
  }
  return true;
}

namespace {

// left-multiplication matrices of the table, kept both dense (for random
// access) and as nonzero lists (for trace sums)
struct LeftMults {
  std::vector<RatMat> dense;
  std::vector<std::vector<std::tuple<int, int, Rat>>> nz;
};

LeftMults left_mults(const StructureTable& T) {
  int d = T.dim();
  LeftMults L;
  L.dense.assign(d, mat_zero(d, d));
  L.nz.assign(d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : T.prod(i, j)) {
        L.dense[i][k][j] = c;
        L.nz[i].emplace_back(k, j, c);
      }
  return L;
}

Echelon radical_from_mults(int dim, const LeftMults& L) {
  RatMat gram = mat_zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rat t(0);
      for (const auto& [r, c, v] : L.nz[i]) t += v * L.dense[j][c][r];
      gram[i][j] = t;
    }
  RatMat ns = nullspace(gram);
  Echelon e(dim);
  for (RatVec& v : ns) e.add(std::move(v));
  return e;
}

// ideal generated by the seed vectors inside the algebra whose product is
// given by `mul(basisIndex, vector)` from both sides
Echelon ideal_closure(int dim, const std::vector<RatVec>& seeds,
                      const std::function<RatVec(int, const RatVec&)>& lmul,
                      const std::function<RatVec(int, const RatVec&)>& rmul) {
  Echelon e(dim);
  std::vector<RatVec> work;
  for (const RatVec& s : seeds)
    if (e.add(s)) work.push_back(s);
  while (!work.empty()) {
    RatVec v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < dim; ++i) {
      RatVec a = lmul(i, v);
      if (e.add(a)) work.push_back(std::move(a));
      RatVec b = rmul(i, v);
      if (e.add(b)) work.push_back(std::move(b));
    }
  }
  return e;
}

}  // namespace

Echelon trace_radical(const StructureTable& T) {
  return radical_from_mults(T.dim(), left_mults(T));
}

int onedim_rep_count(const StructureTable& T) {
  int d = T.dim();
  auto lmul = [&T](int i, const RatVec& v) -> RatVec {
    return mat_apply(left_mult_matrix(T, T.basis_elt(i)), v);
  };
  // cheaper: direct sparse products
  auto lmul_fast = [&T, d](int i, const RatVec& v) -> RatVec {
    RatVec r(d, Rat(0));
    for (int j = 0; j < d; ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& [k, c] : T.prod(i, j)) r[k] += c * v[j];
    }
    return r;
  };
  auto rmul_fast = [&T, d](int i, const RatVec& v) -> RatVec {
    RatVec r(d, Rat(0));
    for (int j = 0; j < d; ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& [k, c] : T.prod(j, i)) r[k] += c * v[j];
    }
    return r;
  };
  (void)lmul;
  std::vector<RatVec> seeds;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      AlgElt comm = ae_sub(T.prod(i, j), T.prod(j, i));
      if (!ae_is_zero(comm)) seeds.push_back(ae_to_dense(T, comm));
    }
  Echelon ideal = ideal_closure(d, seeds, lmul_fast, rmul_fast);
  Echelon rad = trace_radical(T);
  Echelon both = ech_sum(ideal, rad);
  return d - both.dim();
}

GrouplikeReport grouplikes(const CoproductTable& ct) {
  const StructureTable& T = ct.table();
  const SymGroup& G = T.group();
  int d = T.dim(), N = G.order();
  GrouplikeReport rep;

  // dual algebra: (e^i e^j)_k = Delta(b_k)[(i,j)]
  LeftMults Ld;
  Ld.dense.assign(d, mat_zero(d, d));
  Ld.nz.assign(d, {});
  for (int k = 0; k < d; ++k)
    for (const auto& [p, c] : ct.delta(k)) {
      Ld.dense[p.first][k][p.second] = c;
      Ld.nz[p.first].emplace_back(k, p.second, c);
    }
  Echelon dual_rad = radical_from_mults(d, Ld);

  // coradical = annihilator of J(A*) in A
  RatMat rows;
  for (const RatVec& r : dual_rad.rows()) rows.push_back(r);
  RatMat ann = rows.empty() ? mat_identity(d) : nullspace(rows);
  Echelon coradical(d);
  if (rows.empty()) {
    for (int i = 0; i < d; ++i) coradical.add(RatVec(mat_identity(d)[i]));
  } else {
    for (RatVec& v : ann) coradical.add(std::move(v));
  }
  rep.coradical_dim = coradical.dim();
  Echelon deltas(d);
  for (int g = 0; g < N; ++g)
    deltas.add(ae_to_dense(T, T.delta(g)));
  rep.coradical_is_coradical_of_functions = coradical == deltas;

  // rational grouplikes: multiplicative characters of the group give
  // candidates sum_g lambda(g) delta_g; verified directly below
  std::vector<std::vector<Rat>> characters;
  int nt = G.num_transpositions();
  for (int mask = 0; mask < (1 << nt); ++mask) {
    std::vector<Rat> lam(N, Rat(0));
    std::vector<bool> known(N, false);
    lam[0] = 1;
    known[0] = true;
    bool progress = true, consistent = true;
    while (progress && consistent) {
      progress = false;
      for (int g = 0; g < N && consistent; ++g) {
        if (!known[g]) continue;
        for (int t = 0; t < nt; ++t) {
          int h = G.tmul(t, g);
          Rat val = (mask & (1 << t)) ? -lam[g] : lam[g];
          if (!known[h]) {
            lam[h] = val;
            known[h] = true;
            progress = true;
          } else if (!(lam[h] == val)) {
            consistent = false;
            break;
          }
        }
      }
    }
    if (!consistent) continue;
    if (std::find(characters.begin(), characters.end(), lam) == characters.end())
      characters.push_back(lam);
  }
  for (const auto& lam : characters) {
    AlgElt g;
    for (int h = 0; h < N; ++h) ae_insert(g, T.bindex(Word{}, h), lam[h]);
    TensorElt dg = ct.delta_of(g);
    if (te_is_zero(te_sub(dg, te_outer(g, g))) && ct.counit_of(g) == Rat(1))
      rep.grouplikes.push_back(g);
  }
  std::sort(rep.grouplikes.begin(), rep.grouplikes.end());
  std::reverse(rep.grouplikes.begin(), rep.grouplikes.end());  // unit first

  // closure count: grouplikes of A = 1-dim representations of A*
  auto lmul_dual = [&](int i, const RatVec& v) -> RatVec {
    return mat_apply(Ld.dense[i], v);
  };
  auto rmul_dual = [&, d](int i, const RatVec& v) -> RatVec {
    RatVec r(d, Rat(0));
    for (int j = 0; j < d; ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& [rr, cc, vv] : Ld.nz[j])
        if (cc == i) r[rr] += vv * v[j];
    }
    return r;
  };
  std::vector<RatVec> seeds;
  for (int i = 0; i < d; ++i) {
    RatVec ei(d, Rat(0));
    ei[i] = 1;
    for (int j = 0; j < d; ++j) {
      RatVec ej(d, Rat(0));
      ej[j] = 1;
      RatVec ij = mat_apply(Ld.dense[i], ej);
      RatVec ji = mat_apply(Ld.dense[j], ei);
      for (int k = 0; k < d; ++k) ij[k] -= ji[k];
      bool nonzero = false;
      for (const Rat& x : ij)
        if (!is_zero(x)) nonzero = true;
      if (nonzero) seeds.push_back(std::move(ij));
    }
  }
  Echelon ideal = ideal_closure(d, seeds, lmul_dual, rmul_dual);
  Echelon both = ech_sum(ideal, dual_rad);
  rep.count_over_closure = d - both.dim();
  rep.complete =
      rep.count_over_closure == static_cast<int>(rep.grouplikes.size());

  AlgElt chi = T.grouplike_chi();
  rep.chi_involution = T.multiply(chi, chi) == T.unit();
  rep.antipode_fixes_chi = ct.antipode_of(chi) == chi;
  return rep;
}

SkewPrimitiveReport skew_primitives(const CoproductTable& ct) {
  const StructureTable& T = ct.table();
  int d = T.dim();
  AlgElt chi = T.grouplike_chi();

  // constraint columns: Delta(z) - z ox 1 - chi ox z = 0
  std::vector<TensorElt> cols(d);
  AlgElt unit = T.unit();
  for (int j = 0; j < d; ++j) {
    TensorElt c = ct.delta(j);
    c = te_sub(c, te_outer(T.basis_elt(j), unit));
    c = te_sub(c, te_outer(chi, T.basis_elt(j)));
    cols[j] = std::move(c);
  }
  std::map<std::pair<int, int>, int> rows;
  for (const auto& c : cols)
    for (const auto& [p, v] : c)
      if (!rows.count(p)) rows.emplace(p, static_cast<int>(rows.size()));
  RatMat m = mat_zero(static_cast<int>(rows.size()), d);
  for (int j = 0; j < d; ++j)
    for (const auto& [p, v] : cols[j]) m[rows.at(p)][j] = v;

  SkewPrimitiveReport rep{Echelon(d), false};
  for (RatVec& v : nullspace(m)) rep.space.add(std::move(v));

  Echelon expect(d);
  expect.add(ae_to_dense(T, ae_sub(unit, chi)));
  AlgElt y;
  for (int t = 0; t < T.group().num_transpositions(); ++t)
    y = ae_add(y, T.gen(t));
  expect.add(ae_to_dense(T, y));
  rep.expected_basis = rep.space == expect;
  return rep;
}

SweedlerReport sweedler_check(const CoproductTable& ct) {
  const StructureTable& T = ct.table();
  SweedlerReport rep;
  AlgElt chi = T.grouplike_chi();
  AlgElt y;
  for (int t = 0; t < T.group().num_transpositions(); ++t)
    y = ae_add(y, T.gen(t));

  // multiplicative closure of {1, chi, y}
  std::vector<AlgElt> gens{T.unit(), chi, y};
  Echelon span(T.dim());
  std::vector<AlgElt> basis;
  for (const AlgElt& g : gens)
    if (span.add(ae_to_dense(T, g))) basis.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<AlgElt> cur = basis;
    for (const AlgElt& u : cur)
      for (const AlgElt& v : cur) {
        AlgElt p = T.multiply(u, v);
        if (span.add(ae_to_dense(T, p))) {
          basis.push_back(p);
          grew = true;
        }
      }
  }
  rep.subalgebra_dim = span.dim();
  rep.chi_sq_one = T.multiply(chi, chi) == T.unit();
  rep.anticommute =
      ae_is_zero(ae_add(T.multiply(y, chi), T.multiply(chi, y)));
  rep.y_squared = T.multiply(y, y);
  rep.y_sq_zero = ae_is_zero(rep.y_squared);
  rep.is_sweedler =
      rep.subalgebra_dim == 4 && rep.chi_sq_one && rep.anticommute && rep.y_sq_zero;
  return rep;
}

IntegralReport integrals(const CoproductTable& ct) {
  const StructureTable& T = ct.table();
  const SymGroup& G = T.group();
  int d = T.dim(), N = G.order();
  IntegralReport rep;
  rep.left = Echelon(d);
  rep.right = Echelon(d);
  rep.dual_left = Echelon(d);
  rep.dual_right = Echelon(d);

  std::vector<std::pair<AlgElt, Rat>> gens;  // generator, counit value
  for (int t = 0; t < G.num_transpositions(); ++t) gens.push_back({T.gen(t), Rat(0)});
  for (int g = 0; g < N; ++g) gens.push_back({T.delta(g), Rat(g == 0 ? 1 : 0)});

  RatMat sys_left, sys_right;
  for (const auto& [u, eps] : gens) {
    RatMat L = left_mult_matrix(T, u), R = right_mult_matrix(T, u);
    for (int i = 0; i < d; ++i) {
      RatVec rowL = L[i], rowR = R[i];
      rowL[i] -= eps;
      rowR[i] -= eps;
      sys_left.push_back(std::move(rowL));
      sys_right.push_back(std::move(rowR));
    }
  }
  for (RatVec& v : nullspace(sys_left)) rep.left.add(std::move(v));
  for (RatVec& v : nullspace(sys_right)) rep.right.add(std::move(v));
  rep.unimodular = rep.left == rep.right;

  // expected generator: (top word) delta_e
  const Word& top = T.words().back();
  Echelon expected(d);
  expected.add(ae_to_dense(T, T.basis_elt(T.bindex(top, 0))));
  rep.left_is_expected = rep.left == expected;

  // distinguished character: Lambda u = alpha(u) Lambda
  rep.alpha_trivial = true;
  if (rep.left.dim() == 1) {
    AlgElt lambda = ae_from_dense(rep.left.rows()[0]);
    for (const auto& [u, eps] : gens) {
      AlgElt lu = T.multiply(lambda, u);
      AlgElt expect = ae_scale(lambda, eps);
      if (!(lu == expect)) rep.alpha_trivial = false;
    }
  } else {
    rep.alpha_trivial = false;
  }

  // dual integrals: (id ox lam) Delta(a) = lam(a) 1 (left) and the mirror
  RatMat dl, dr;
  AlgElt unit = T.unit();
  RatVec unit_dense = ae_to_dense(T, unit);
  for (int i = 0; i < d; ++i) {
    RatMat rowsL = mat_zero(d, d), rowsR = mat_zero(d, d);
    for (const auto& [p, c] : ct.delta(i)) {
      rowsL[p.first][p.second] += c;
      rowsR[p.second][p.first] += c;
    }
    for (int comp = 0; comp < d; ++comp) {
      RatVec rl = rowsL[comp], rr = rowsR[comp];
      rl[i] -= unit_dense[comp];
      rr[i] -= unit_dense[comp];
      dl.push_back(std::move(rl));
      dr.push_back(std::move(rr));
    }
  }
  for (RatVec& v : nullspace(dl)) rep.dual_left.add(std::move(v));
  for (RatVec& v : nullspace(dr)) rep.dual_right.add(std::move(v));
  rep.dual_unimodular = rep.dual_left == rep.dual_right;

  // distinguished group-like attached to the dual integral:
  // (lam ox id) Delta(a) = lam(a) ghat
  rep.dual_distinguished_trivial = false;
  if (rep.dual_left.dim() == 1) {
    const RatVec& lam = rep.dual_left.rows()[0];
    int pivot = -1;
    RatVec w0;
    std::vector<RatVec> w(d, RatVec(d, Rat(0)));
    for (int i = 0; i < d; ++i) {
      for (const auto& [p, c] : ct.delta(i)) w[i][p.second] += c * lam[p.first];
      Rat li(0);
      for (int j = 0; j < d; ++j) li += lam[j] * (i == j ? Rat(1) : Rat(0));
      if (pivot == -1 && !is_zero(lam[i])) pivot = i;
    }
    if (pivot != -1) {
      RatVec ghat = w[pivot];
      Rat inv = Rat(1) / lam[pivot];
      for (Rat& x : ghat) x *= inv;
      bool consistent = true;
      for (int i = 0; i < d; ++i) {
        RatVec expect = ghat;
        for (Rat& x : expect) x *= lam[i];
        if (!(w[i] == expect)) consistent = false;
      }
      rep.dual_distinguished = ae_from_dense(ghat);
      rep.dual_distinguished_trivial =
          consistent && rep.dual_distinguished == T.unit();
    }
  }
  return rep;
}

QtReport qt_obstruction(const CoproductTable& ct) {
  const StructureTable& T = ct.table();
  const SymGroup& G = T.group();
  QtReport rep;
  AlgElt one = T.unit(), chi = T.grouplike_chi();
  TensorElt r0;
  auto acc = [&](const AlgElt& a, const AlgElt& b, const Rat& s) {
    for (const auto& [p, c] : te_outer(a, b)) {
      auto it = r0.find(p);
      Rat add = c * s;
      if (it == r0.end())
        r0.emplace(p, add);
      else {
        it->second += add;
        if (is_zero(it->second)) r0.erase(it);
      }
    }
  };
  Rat half(1, 2);
  acc(one, one, half);
  acc(one, chi, half);
  acc(chi, one, half);
  acc(chi, chi, -half);

  rep.r0_squared_one = te_is_zero(te_sub(te_mul(T, r0, r0), te_outer(one, one)));

  for (int g = 0; g < G.order(); ++g) {
    TensorElt dg = ct.delta_of(T.delta(g));
    TensorElt dg_cop;
    for (const auto& [p, c] : dg) dg_cop[{p.second, p.first}] = c;
    TensorElt diff = te_sub(te_mul(T, dg_cop, r0), te_mul(T, r0, dg));
    if (g == 0) rep.holds_at_identity = te_is_zero(diff);
    if (!te_is_zero(diff) && rep.witness_g == -1) rep.witness_g = g;
  }

  GrouplikeReport gl = grouplikes(ct);
  rep.coradical_dim_A = gl.coradical_dim;
  rep.grouplikes_A = static_cast<int>(gl.grouplikes.size());
  rep.semisimple_quotient_dim_A = T.dim() - trace_radical(T).dim();
  rep.onedim_reps_A = onedim_rep_count(T);
  // A ~ A*^cop would match coradical dimension with semisimple-quotient
  // dimension and grouplike count with one-dimensional rep count
  rep.selfdual_excluded = rep.coradical_dim_A != rep.semisimple_quotient_dim_A ||
                          rep.grouplikes_A != rep.onedim_reps_A;
  rep.obstructed = rep.selfdual_excluded && rep.witness_g != -1;
  return rep;
}

KWitnessReport build_K_and_M3(const ParamVector& a) {
  if (a.n() != 3) throw std::invalid_argument("build_K_and_M3: n must be 3");
  const SymGroup& G = a.group();
  KWitnessReport rep;
  StructureTable K = build_algebra(a, Variant::K);
  rep.dim = K.dim();
  rep.table_certified = K.system().confluent && K.system().terminating &&
                        K.system().basis_ok;

  // the 6-dimensional module: x_t m_g = m_{tg} for odd g,
  // -a_{g^-1 t g} m_{tg} for even g; delta_h picks out the h component
  int N = G.order();
  std::vector<RatMat> X(G.num_transpositions(), mat_zero(N, N));
  for (int t = 0; t < G.num_transpositions(); ++t)
    for (int g = 0; g < N; ++g) {
      int tg = G.tmul(t, g);
      if (G.sgn(g) == -1)
        X[t][tg][g] = 1;
      else
        X[t][tg][g] = -a.at_index(G.conj_t(t, g));
    }

  rep.action_weights_ok = true;
  // delta_h x_t = x_t delta_{t h} must hold for the module operators
  for (int t = 0; t < G.num_transpositions(); ++t)
    for (int h = 0; h < N; ++h) {
      RatMat dh = mat_zero(N, N), dth = mat_zero(N, N);
      dh[h][h] = 1;
      dth[G.tmul(t, h)][G.tmul(t, h)] = 1;
      if (!(mat_mul(dh, X[t]) == mat_mul(X[t], dth))) rep.action_weights_ok = false;
    }

  // al relators of the variant-K ideal annihilate the module
  rep.relators_annihilate = true;
  for (const GElement& rel : relations(a, Variant::K)) {
    RatMat mat = mat_zero(N, N);
    for (const auto& [w, c] : rel) {
      // action of c (k^G coefficient) then the word letters right to left
      RatMat m = mat_zero(N, N);
      for (int g = 0; g < N; ++g) m[g][g] = c[g];
      for (auto it = w.rbegin(); it != w.rend(); ++it) m = mat_mul(X[*it], m);
      mat = mat_add(mat, m);
    }
    if (!mat_is_zero(mat)) rep.relators_annihilate = false;
  }

  // the braid relators act by -(sum over the class of a) which vanishes
  rep.braid_relator_sum_zero = true;
  for (int g = 0; g < N; ++g) {
    Rat s(0);
    for (int t = 0; t < G.num_transpositions(); ++t) s += a.at_index(G.conj_t(t, g));
    if (!is_zero(s)) rep.braid_relator_sum_zero = false;
  }
  return rep;
}

}  // namespace s3hopf
