#include "s3hopf/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace s3hopf {

AlgElt ae_add(const AlgElt& a, const AlgElt& b) {
  AlgElt r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      Rat c = a[i].second + b[j].second;
      if (!is_zero(c)) r.emplace_back(a[i].first, c);
      ++i, ++j;
    }
  }
  return r;
}

AlgElt ae_sub(const AlgElt& a, const AlgElt& b) { return ae_add(a, ae_scale(b, Rat(-1))); }

AlgElt ae_scale(const AlgElt& a, const Rat& c) {
  if (is_zero(c)) return {};
  AlgElt r = a;
  for (auto& [i, q] : r) q *= c;
  return r;
}

bool ae_is_zero(const AlgElt& a) { return a.empty(); }

void ae_insert(AlgElt& a, int idx, const Rat& c) {
  if (is_zero(c)) return;
  auto it = std::lower_bound(a.begin(), a.end(), idx,
                             [](const auto& p, int v) { return p.first < v; });
  if (it != a.end() && it->first == idx) {
    it->second += c;
    if (is_zero(it->second)) a.erase(it);
  } else {
    a.insert(it, {idx, c});
  }
}

StructureTable::StructureTable(RewriteSystem rs) : rs_(std::move(rs)) {
  const SymGroup& G = rs_.group();
  int W = nwords(), N = G.order();
  dim_ = W * N;
  if (rs_.n == 3 && dim_ != 72)
    throw std::runtime_error("structure table: expected dimension 72, got " +
                             std::to_string(dim_));

  // word-level products once, then specialize the k^G coefficient at each tail
  std::vector<GElement> wprod(W * W);
  for (int i = 0; i < W; ++i)
    for (int j = 0; j < W; ++j) {
      Word w = rs_.normal_words[i];
      const Word& v = rs_.normal_words[j];
      w.insert(w.end(), v.begin(), v.end());
      wprod[i * W + j] = reduce_word(rs_, w);
    }

  prod_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  for (int i = 0; i < W; ++i)
    for (int g = 0; g < N; ++g)
      for (int j = 0; j < W; ++j) {
        int gy = word_weight(G, rs_.normal_words[j]);
        for (int h = 0; h < N; ++h) {
          // (x delta_g)(y delta_h) = [g = g_y h] (xy) delta_h
          if (g != G.mult(gy, h)) continue;
          AlgElt& out = prod_[(i * N + g) * static_cast<std::size_t>(dim_) + (j * N + h)];
          for (const auto& [w, c] : wprod[i * W + j]) {
            if (is_zero(c[h])) continue;
            ae_insert(out, bindex(w, h), c[h]);
          }
        }
      }
}

int StructureTable::windex(const Word& w) const {
  const auto& words = rs_.normal_words;
  auto it = std::lower_bound(words.begin(), words.end(), w, WordLess{});
  if (it == words.end() || *it != w)
    throw std::invalid_argument("windex: not a normal word: " +
                                word_str(group(), w));
  return static_cast<int>(it - words.begin());
}

std::string StructureTable::basis_str(int b) const {
  const SymGroup& G = group();
  return word_str(G, word_of(b)) + "|d" +
         (G.elem(gelem_of(b)).is_identity() ? "(e)"
                                            : G.elem(gelem_of(b)).cycle_string());
}

AlgElt StructureTable::multiply(const AlgElt& x, const AlgElt& y) const {
  AlgElt r;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      const AlgElt& p = prod(i, j);
      Rat c = ci * cj;
      for (const auto& [k, ck] : p) ae_insert(r, k, c * ck);
    }
  return r;
}

AlgElt StructureTable::unit() const {
  AlgElt r;
  for (int g = 0; g < group().order(); ++g) r.emplace_back(bindex(Word{}, g), Rat(1));
  return r;
}

AlgElt StructureTable::delta(int g) const { return {{bindex(Word{}, g), Rat(1)}}; }

AlgElt StructureTable::gen(int t) const {
  AlgElt r;
  Word w{static_cast<std::uint8_t>(t)};
  for (int g = 0; g < group().order(); ++g) r.emplace_back(bindex(w, g), Rat(1));
  return r;
}

AlgElt StructureTable::grouplike_chi() const {
  const SymGroup& G = group();
  AlgElt r;
  for (int g = 0; g < G.order(); ++g)
    r.emplace_back(bindex(Word{}, g), Rat(G.sgn(g)));
  return r;
}

int StructureTable::left_weight(int b) const {
  const SymGroup& G = group();
  return G.mult(word_weight(G, word_of(b)), gelem_of(b));
}

StructureTable build_algebra(const ParamVector& a, Variant variant) {
  return StructureTable(complete(a, variant));
}

long verify_associativity(const StructureTable& T, bool full_sweep) {
  int d = T.dim();
  long bad = 0;
  if (full_sweep) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const AlgElt& ij = T.prod(i, j);
        for (int k = 0; k < d; ++k) {
          AlgElt lhs;
          for (const auto& [m, c] : ij)
            lhs = ae_add(lhs, ae_scale(T.prod(m, k), c));
          AlgElt rhs;
          for (const auto& [m, c] : T.prod(j, k))
            rhs = ae_add(rhs, ae_scale(T.prod(i, m), c));
          if (!(lhs == rhs)) ++bad;
        }
      }
    return bad;
  }
  // generator mode: associativity on (generator, basis, basis) triples
  // extends bilinearly to the full sweep
  std::vector<AlgElt> gens;
  for (int t = 0; t < T.group().num_transpositions(); ++t) gens.push_back(T.gen(t));
  for (int g = 0; g < T.group().order(); ++g) gens.push_back(T.delta(g));
  for (const AlgElt& u : gens)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        AlgElt lhs = T.multiply(T.multiply(u, T.basis_elt(j)), T.basis_elt(k));
        AlgElt rhs = T.multiply(u, T.prod(j, k));
        if (!(lhs == rhs)) ++bad;
      }
  return bad;
}

bool relators_vanish(const StructureTable& T) {
  const SymGroup& G = T.group();
  for (const GElement& rel : relations(T.params(), T.variant())) {
    // embed the relator at every tail delta_g and multiply out in the table
    for (int g = 0; g < G.order(); ++g) {
      AlgElt acc;
      for (const auto& [w, c] : rel) {
        if (is_zero(c[g])) continue;
        // w need not be normal; reduce via word product of generators
        AlgElt term = T.delta(g);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          term = T.multiply(T.gen(*it), term);
        acc = ae_add(acc, ae_scale(term, c[g]));
      }
      if (!ae_is_zero(acc)) return false;
    }
  }
  return true;
}

bool cubic_identities_hold(const StructureTable& T) {
  const SymGroup& G = T.group();
  const ParamVector& a = T.params();
  auto X = [&](int i, int j) { return T.gen(G.tindex(Transposition(i, j))); };
  auto mul3 = [&](const AlgElt& x, const AlgElt& y, const AlgElt& z) {
    return T.multiply(T.multiply(x, y), z);
  };
  AlgElt x12 = X(1, 2), x13 = X(1, 3), x23 = X(2, 3);
  Rat a12 = a.at(Transposition(1, 2)), a13 = a.at(Transposition(1, 3)),
      a23 = a.at(Transposition(2, 3));

  AlgElt lhs1 = mul3(x12, x13, x12);
  AlgElt rhs1 = ae_add(mul3(x13, x12, x13), ae_scale(x23, a13 - a12));
  if (!(lhs1 == rhs1)) return false;

  AlgElt lhs2 = mul3(x23, x12, x23);
  AlgElt rhs2 = ae_sub(mul3(x12, x23, x12), ae_scale(x13, a23 - a12));
  if (!(lhs2 == rhs2)) return false;

  AlgElt omega;
  for (int g = 0; g < G.order(); ++g)
    ae_insert(omega, T.bindex(Word{}, g), omega_eval(a, G.elem(g)));
  AlgElt lhs3 = mul3(x23, x12, x13);
  AlgElt rhs3 = ae_add(mul3(x13, x12, x23), T.multiply(x12, omega));
  return lhs3 == rhs3;
}

std::vector<Rat> ae_to_dense(const StructureTable& T, const AlgElt& a) {
  std::vector<Rat> v(T.dim(), Rat(0));
  for (const auto& [i, c] : a) v[i] = c;
  return v;
}

AlgElt ae_from_dense(const std::vector<Rat>& v) {
  AlgElt a;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) a.emplace_back(static_cast<int>(i), v[i]);
  return a;
}

std::vector<std::vector<Rat>> left_mult_matrix(const StructureTable& T, const AlgElt& a) {
  int d = T.dim();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
  for (const auto& [i, ci] : a)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, ck] : T.prod(i, j)) m[k][j] += ci * ck;
  return m;
}

std::vector<std::vector<Rat>> right_mult_matrix(const StructureTable& T, const AlgElt& a) {
  int d = T.dim();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
  for (const auto& [j, cj] : a)
    for (int i = 0; i < d; ++i)
      for (const auto& [k, ck] : T.prod(i, j)) m[k][i] += cj * ck;
  return m;
}

bool filtration_respected(const StructureTable& T) {
  int d = T.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::size_t bound = T.word_of(i).size() + T.word_of(j).size();
      for (const auto& [k, c] : T.prod(i, j))
        if (T.word_of(k).size() > bound) return false;
    }
  return true;
}

bool graded_at_zero(const StructureTable& T) {
  int d = T.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::size_t deg = T.word_of(i).size() + T.word_of(j).size();
      for (const auto& [k, c] : T.prod(i, j))
        if (T.word_of(k).size() != deg) return false;
    }
  return true;
}

}  // namespace s3hopf
