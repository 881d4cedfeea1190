#include "s3hopf/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace s3hopf {

namespace {

// square coefficient: variant A gives x_t^2 = f_t, variant K gives
// x_t^2 = -sum_g a_{g^-1 t g} delta_g.
GroupFun square_value(const ParamVector& a, Variant variant, int t) {
  const SymGroup& G = a.group();
  GroupFun f(G.order());
  for (int g = 0; g < G.order(); ++g) {
    if (variant == Variant::A)
      f[g] = f_eval_idx(a, t, g);
    else
      f[g] = -a.at_index(G.conj_t(t, g));
  }
  return f;
}

}  // namespace

std::vector<GElement> relations(const ParamVector& a, Variant variant) {
  const SymGroup& G = a.group();
  if (G.n() < 3 || G.n() > 5)
    throw std::invalid_argument("relations: n must be 3, 4 or 5");
  std::vector<GElement> rels;

  // squares
  for (int t = 0; t < G.num_transpositions(); ++t) {
    GElement r;
    ge_add_term(G, r, Word{static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(t)},
                gf_const(G, Rat(1)));
    ge_add_term(G, r, Word{}, gf_scale(square_value(a, variant, t), Rat(-1)));
    rels.push_back(std::move(r));
  }

  auto push_unique = [&](GElement r) {
    for (const GElement& s : rels)
      if (ge_is_zero(ge_sub(G, r, s))) return;
    rels.push_back(std::move(r));
  };

  // R_{(ij)(ik)} = x_ij x_ik + x_ik x_jk + x_jk x_ij for pairs sharing one index
  int T = G.num_transpositions();
  for (int t1 = 0; t1 < T; ++t1)
    for (int t2 = 0; t2 < T; ++t2) {
      if (t1 == t2) continue;
      const Transposition &u = G.trans(t1), &v = G.trans(t2);
      int common = -1;
      if (u.i == v.i || u.i == v.j) common = u.i;
      if (u.j == v.i || u.j == v.j) {
        if (common != -1) continue;  // equal transpositions (excluded above)
        common = u.j;
      }
      if (common == -1) continue;
      int uj = u.i == common ? u.j : u.i;
      int vk = v.i == common ? v.j : v.i;
      int t3 = G.tindex(Transposition(uj, vk));
      GElement r;
      auto t8 = [](int x) { return static_cast<std::uint8_t>(x); };
      ge_add_term(G, r, Word{t8(t1), t8(t2)}, gf_const(G, Rat(1)));
      ge_add_term(G, r, Word{t8(t2), t8(t3)}, gf_const(G, Rat(1)));
      ge_add_term(G, r, Word{t8(t3), t8(t1)}, gf_const(G, Rat(1)));
      push_unique(std::move(r));
    }

  // R_{(ij)(kl)} = x_ij x_kl + x_kl x_ij for disjoint pairs
  for (int t1 = 0; t1 < T; ++t1)
    for (int t2 = t1 + 1; t2 < T; ++t2) {
      const Transposition &u = G.trans(t1), &v = G.trans(t2);
      if (u.i == v.i || u.i == v.j || u.j == v.i || u.j == v.j) continue;
      GElement r;
      auto t8 = [](int x) { return static_cast<std::uint8_t>(x); };
      ge_add_term(G, r, Word{t8(t1), t8(t2)}, gf_const(G, Rat(1)));
      ge_add_term(G, r, Word{t8(t2), t8(t1)}, gf_const(G, Rat(1)));
      push_unique(std::move(r));
    }

  return rels;
}

std::vector<Word> nichols_basis_s3(const SymGroup& G) {
  auto t = [&](int i, int j) {
    return static_cast<std::uint8_t>(G.tindex(Transposition(i, j)));
  };
  std::uint8_t a = t(1, 3), b = t(2, 3), c = t(1, 2);
  std::vector<Word> basis = {
      {},       {a},       {b},          {c},       {a, c},    {c, a},
      {b, c},   {c, b},    {a, c, a},    {c, b, c}, {a, c, b}, {a, c, b, c}};
  std::sort(basis.begin(), basis.end(), WordLess{});
  return basis;
}

std::optional<std::pair<int, int>> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& l = rules[r].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + pos))
        return std::make_pair(static_cast<int>(pos), static_cast<int>(r));
    }
  return std::nullopt;
}

namespace {

// u * rule.rhs * v with an outer coefficient c: the rhs coefficients commute
// past v, picking up a left shift by the product of v's letters.
void apply_rhs(const SymGroup& G, GElement& out, const Word& u, const Rule& rule,
               const Word& v, const GroupFun& c) {
  int shift = word_shift(G, v);
  for (const auto& [rw, rc] : rule.rhs) {
    Word nw;
    nw.reserve(u.size() + rw.size() + v.size());
    nw.insert(nw.end(), u.begin(), u.end());
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), v.begin(), v.end());
    ge_add_term(G, out, nw, gf_mul(gf_shift_g(G, rc, shift), c));
  }
}

GElement reduce_impl(const RewriteSystem& rs, GElement e, long max_steps) {
  const SymGroup& G = rs.group();
  long steps = 0;
  for (;;) {
    bool changed = false;
    for (auto it = e.begin(); it != e.end(); ++it) {
      auto redex = rs.find_redex(it->first);
      if (!redex) continue;
      if (++steps > max_steps)
        throw std::runtime_error("reduce: step bound exceeded (divergence?)");
      auto [pos, r] = *redex;
      Word w = it->first;
      GroupFun c = it->second;
      e.erase(it);
      const Rule& rule = rs.rules[r];
      Word u(w.begin(), w.begin() + pos);
      Word v(w.begin() + pos + rule.lhs.size(), w.end());
      apply_rhs(G, e, u, rule, v, c);
      changed = true;
      break;
    }
    if (!changed) return e;
  }
}

}  // namespace

GElement reduce(const RewriteSystem& rs, GElement e, long max_steps) {
  return reduce_impl(rs, std::move(e), max_steps);
}

GElement reduce_word(const RewriteSystem& rs, const Word& w) {
  GElement e;
  ge_add_term(rs.group(), e, w, gf_const(rs.group(), Rat(1)));
  return reduce_impl(rs, std::move(e), 2000000);
}

namespace {

struct Overlap {
  Word w;       // ambiguity word
  int r1, p1;   // rule index + position of its lhs in w
  int r2, p2;
};

void push_overlaps(const std::vector<Rule>& rules, std::size_t idx,
                   std::deque<Overlap>& queue) {
  const Word& u = rules[idx].lhs;
  for (std::size_t j = 0; j < rules.size(); ++j) {
    const Word& v = rules[j].lhs;
    // proper overlaps: a suffix of u equals a prefix of v
    for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
      if (std::equal(u.end() - k, u.end(), v.begin())) {
        Word w = u;
        w.insert(w.end(), v.begin() + k, v.end());
        queue.push_back({w, static_cast<int>(idx), 0, static_cast<int>(j),
                         static_cast<int>(u.size() - k)});
      }
      if (std::equal(v.end() - k, v.end(), u.begin())) {
        Word w = v;
        w.insert(w.end(), u.begin() + k, u.end());
        queue.push_back({w, static_cast<int>(j), 0, static_cast<int>(idx),
                         static_cast<int>(v.size() - k)});
      }
    }
    // inclusion ambiguities
    if (v.size() < u.size()) {
      for (std::size_t p = 0; p + v.size() <= u.size(); ++p)
        if (std::equal(v.begin(), v.end(), u.begin() + p))
          queue.push_back({u, static_cast<int>(idx), 0, static_cast<int>(j),
                           static_cast<int>(p)});
    }
    if (u.size() < v.size() && j != idx) {
      for (std::size_t p = 0; p + u.size() <= v.size(); ++p)
        if (std::equal(u.begin(), u.end(), v.begin() + p))
          queue.push_back({v, static_cast<int>(j), 0, static_cast<int>(idx),
                           static_cast<int>(p)});
    }
  }
}

// Resolves one ambiguity: reduce the two one-step reducts to normal form.
GElement spolynomial(const RewriteSystem& rs, const Overlap& o) {
  const SymGroup& G = rs.group();
  GElement e1, e2;
  {
    const Rule& rule = rs.rules[o.r1];
    Word u(o.w.begin(), o.w.begin() + o.p1);
    Word v(o.w.begin() + o.p1 + rule.lhs.size(), o.w.end());
    apply_rhs(G, e1, u, rule, v, gf_const(G, Rat(1)));
  }
  {
    const Rule& rule = rs.rules[o.r2];
    Word u(o.w.begin(), o.w.begin() + o.p2);
    Word v(o.w.begin() + o.p2 + rule.lhs.size(), o.w.end());
    apply_rhs(G, e2, u, rule, v, gf_const(G, Rat(1)));
  }
  return ge_sub(G, reduce(rs, std::move(e1)), reduce(rs, std::move(e2)));
}

// Orients a fully reduced nonzero relator into a rule. The leading word is
// the maximal-degree word not in `avoid` (the target basis); its coefficient
// must be a nonzero constant.
Rule orient(const SymGroup& G, const GElement& d, const std::vector<Word>* avoid) {
  std::size_t maxdeg = 0;
  for (const auto& [w, c] : d) maxdeg = std::max(maxdeg, w.size());
  const Word* lead = nullptr;
  for (const auto& [w, c] : d) {
    if (w.size() != maxdeg) continue;
    bool in_basis =
        avoid && std::find(avoid->begin(), avoid->end(), w) != avoid->end();
    if (in_basis) continue;
    if (!lead || WordLess{}(w, *lead)) lead = &w;
  }
  if (!lead)
    throw std::runtime_error(
        "completion: relator supported on the projected basis (basis collapse): " +
        ge_str(G, d));
  const GroupFun& lc = d.at(*lead);
  if (!gf_is_const(lc) || is_zero(lc[0]))
    throw std::runtime_error(
        "completion: leading coefficient is not an invertible scalar: " +
        ge_str(G, d));
  Rule rule;
  rule.lhs = *lead;
  Rat inv = Rat(-1) / lc[0];
  for (const auto& [w, c] : d) {
    if (w == *lead) continue;
    ge_add_term(G, rule.rhs, w, gf_scale(c, inv));
  }
  return rule;
}

// Per-degree acyclicity of the one-step reduction relation restricted to
// words of equal length; together with the degree filtration this is a
// machine-checked termination certificate.
bool termination_dag(const RewriteSystem& rs, int maxdeg) {
  const SymGroup& G = rs.group();
  int T = G.num_transpositions();
  for (int d = 2; d <= maxdeg; ++d) {
    // enumerate words of length d
    std::vector<Word> words;
    Word cur(d, 0);
    for (;;) {
      words.push_back(cur);
      int k = d - 1;
      while (k >= 0 && cur[k] == T - 1) cur[k--] = 0;
      if (k < 0) break;
      ++cur[k];
    }
    std::map<Word, int, WordLess> id;
    for (std::size_t i = 0; i < words.size(); ++i) id[words[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Word& w = words[i];
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (const Rule& rule : rs.rules) {
          if (pos + rule.lhs.size() > w.size()) continue;
          if (!std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + pos))
            continue;
          for (const auto& [rw, rc] : rule.rhs) {
            if (rw.size() != rule.lhs.size()) continue;  // degree drop exits
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
            adj[i].push_back(id.at(nw));
          }
        }
    }
    // DFS cycle detection
    std::vector<int> state(words.size(), 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (std::size_t s = 0; s < words.size(); ++s) {
      if (state[s]) continue;
      stack.push_back({static_cast<int>(s), 0});
      state[s] = 1;
      while (!stack.empty()) {
        auto& [u, k] = stack.back();
        if (k == adj[u].size()) {
          state[u] = 2;
          stack.pop_back();
          continue;
        }
        int v = adj[u][k++];
        if (state[v] == 1) return false;
        if (state[v] == 0) {
          state[v] = 1;
          stack.push_back({v, 0});
        }
      }
    }
  }
  return true;
}

std::vector<Word> enumerate_normal_words(const RewriteSystem& rs, int maxdeg) {
  const SymGroup& G = rs.group();
  int T = G.num_transpositions();
  std::vector<Word> normal{Word{}};
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= maxdeg && !layer.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int t = 0; t < T; ++t) {
        Word nw = w;
        nw.push_back(static_cast<std::uint8_t>(t));
        // the prefix is normal, so any redex must end at the last letter
        bool reducible = false;
        for (const Rule& rule : rs.rules) {
          if (rule.lhs.size() > nw.size()) continue;
          if (std::equal(rule.lhs.begin(), rule.lhs.end(),
                         nw.end() - rule.lhs.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(nw);
      }
    normal.insert(normal.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  if (!layer.empty())
    throw std::runtime_error("normal words do not terminate by degree bound");
  std::sort(normal.begin(), normal.end(), WordLess{});
  return normal;
}

RewriteSystem run_completion(const ParamVector& a, Variant variant,
                             int overlap_degree_bound, int lhs_degree_bound,
                             const std::vector<Word>* target_basis) {
  const SymGroup& G = a.group();
  RewriteSystem rs{G.n(), variant, a, {}, {}};
  for (const GElement& rel : relations(a, variant))
    rs.rules.push_back(orient(G, rel, target_basis));
  std::sort(rs.rules.begin(), rs.rules.end(),
            [](const Rule& x, const Rule& y) { return WordLess{}(x.lhs, y.lhs); });

  std::deque<Overlap> queue;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) push_overlaps(rs.rules, i, queue);

  while (!queue.empty()) {
    // smallest ambiguity first keeps derivations degree-graded
    auto it = std::min_element(queue.begin(), queue.end(),
                               [](const Overlap& x, const Overlap& y) {
                                 return WordLess{}(x.w, y.w);
                               });
    Overlap o = *it;
    queue.erase(it);
    if (static_cast<int>(o.w.size()) > overlap_degree_bound) continue;
    ++rs.overlaps_checked;
    GElement d = spolynomial(rs, o);
    if (ge_is_zero(d)) continue;
    Rule rule = orient(G, d, target_basis);
    if (static_cast<int>(rule.lhs.size()) > lhs_degree_bound)
      throw std::runtime_error("completion: rule degree bound exceeded");
    rs.rules.push_back(rule);
    ++rs.derived_rules;
    push_overlaps(rs.rules, rs.rules.size() - 1, queue);
    std::sort(rs.rules.begin(), rs.rules.end(),
              [](const Rule& x, const Rule& y) { return WordLess{}(x.lhs, y.lhs); });
    // positions in queued overlaps refer to rule indices; rebuild
    queue.clear();
    for (std::size_t i = 0; i < rs.rules.size(); ++i) push_overlaps(rs.rules, i, queue);
  }
  return rs;
}

}  // namespace

RewriteSystem complete(const ParamVector& a, Variant variant) {
  if (a.n() != 3) throw std::invalid_argument("complete: n must be 3");
  const SymGroup& G = a.group();
  // The projected basis steers rule orientation only; confluence, termination
  // and the irreducible-word census below are what certify the outcome.
  std::vector<Word> basis = nichols_basis_s3(G);
  RewriteSystem rs = run_completion(a, variant, 16, 8, &basis);

  // confluence: every ambiguity of the final system resolves
  std::deque<Overlap> queue;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) push_overlaps(rs.rules, i, queue);
  rs.confluent = true;
  for (const Overlap& o : queue) {
    if (!ge_is_zero(spolynomial(rs, o))) {
      rs.confluent = false;
      break;
    }
  }
  rs.terminating = termination_dag(rs, 9);
  rs.normal_words = enumerate_normal_words(rs, 9);
  rs.basis_ok = rs.normal_words == basis;
  if (!rs.confluent || !rs.terminating || !rs.basis_ok)
    throw std::runtime_error("complete: certification failed (confluent=" +
                             std::to_string(rs.confluent) + ", terminating=" +
                             std::to_string(rs.terminating) + ", basis=" +
                             std::to_string(rs.basis_ok) + ")");
  return rs;
}

ExploreResult explore_presentation(const ParamVector& a, Variant variant,
                                   int degree_bound) {
  if (a.n() < 4 || a.n() > 5)
    throw std::invalid_argument("explore_presentation: n must be 4 or 5");
  ExploreResult res{run_completion(a, variant, degree_bound, degree_bound, nullptr),
                    degree_bound,
                    {}};
  const SymGroup& G = a.group();
  int T = G.num_transpositions();
  std::vector<Word> layer{Word{}};
  res.normal_count_by_degree.push_back(1);
  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int t = 0; t < T; ++t) {
        Word nw = w;
        nw.push_back(static_cast<std::uint8_t>(t));
        bool reducible = false;
        for (const Rule& rule : res.rs.rules) {
          if (rule.lhs.size() > nw.size()) continue;
          if (std::equal(rule.lhs.begin(), rule.lhs.end(),
                         nw.end() - rule.lhs.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(nw);
      }
    res.normal_count_by_degree.push_back(static_cast<int>(next.size()));
    layer = std::move(next);
  }
  return res;
}

}  // namespace s3hopf
