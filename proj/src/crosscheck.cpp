#include <functional>

#include "s3hopf/algebra.hpp"

// Left-regular action cross-check. The rewriting engine is the source of
// truth; the printed per-basis action formulas are re-derived here and any
// discrepancy is itemized. Formulas that print a constant-argument
// evaluation of a coefficient functional are additionally checked under the
// alternative reading where the argument picks up the Verma label g.

namespace s3hopf {

namespace {

using CoefFn = std::function<Rat(int)>;

struct Coef {
  CoefFn lit;
  CoefFn alt;  // null when there is no alternative reading
  bool flagged = false;
};

struct Formula {
  std::string name;
  int t;  // acting generator
  Word src;
  std::vector<std::pair<Word, Coef>> rhs;
};

Coef cst(Rat v) {
  return {[v](int) -> Rat { return v; }, nullptr, false};
}

}  // namespace

CrosscheckReport regular_action_crosscheck(const StructureTable& T) {
  const SymGroup& G = T.group();
  const ParamVector& a = T.params();
  auto tid = [&](int i, int j) { return G.tindex(Transposition(i, j)); };
  const int t12 = tid(1, 2), t13 = tid(1, 3), t23 = tid(2, 3);
  const int e12 = G.telem(t12), e13 = G.telem(t13), e23 = G.telem(t23);
  auto u8 = [](int t) { return static_cast<std::uint8_t>(t); };
  auto W = [&](std::initializer_list<int> ts) {
    Word w;
    for (int t : ts) w.push_back(u8(t));
    return w;
  };
  auto f = [&a](int t, int g) { return f_eval_idx(a, t, g); };
  auto om = [&](int g) -> Rat { return omega_eval(a, G.elem(g)); };
  auto L = [&](int s, int g) { return G.mult(s, g); };

  // f_t evaluated at (sigma g): the fully shifted reading
  auto fshift = [&](int t, int sigma, Rat scale = Rat(1)) {
    return Coef{[&, t, sigma, scale](int g) -> Rat { return scale * f(t, L(sigma, g)); },
                nullptr, false};
  };
  // f_t printed at the constant sigma; alternative reading appends g
  auto fconst = [&](int t, int sigma, Rat scale = Rat(1)) {
    return Coef{[&, t, sigma, scale](int) -> Rat { return scale * f(t, sigma); },
                [&, t, sigma, scale](int g) -> Rat { return scale * f(t, L(sigma, g)); },
                true};
  };
  auto fg = [&](int t) {
    return Coef{[&, t](int g) -> Rat { return f(t, g); }, nullptr, false};
  };

  const Word m1 = W({});
  const Word m4 = W({t13, t12, t23, t12});

  std::vector<Formula> formulas;
  auto add = [&](std::string name, int t, Word src,
                 std::vector<std::pair<Word, Coef>> rhs) {
    formulas.push_back({std::move(name), t, std::move(src), std::move(rhs)});
  };

  for (int t : {t12, t13, t23}) {
    std::string xt = word_str(G, W({t}));
    add(xt + ".m1", t, m1, {{W({t}), cst(Rat(1))}});
    add(xt + ".m" + word_str(G, W({t})), t, W({t}), {{m1, fg(t)}});
  }

  add("x13.m(x23)", t13, W({t23}),
      {{W({t23, t12}), cst(Rat(-1))}, {W({t12, t13}), cst(Rat(-1))}});
  add("x13.m(x12)", t13, W({t12}), {{W({t13, t12}), cst(Rat(1))}});
  add("x23.m(x13)", t23, W({t13}),
      {{W({t12, t23}), cst(Rat(-1))}, {W({t13, t12}), cst(Rat(-1))}});
  add("x23.m(x12)", t23, W({t12}), {{W({t23, t12}), cst(Rat(1))}});
  add("x12.m(x13)", t12, W({t13}), {{W({t12, t13}), cst(Rat(1))}});
  add("x12.m(x23)", t12, W({t23}), {{W({t12, t23}), cst(Rat(1))}});

  add("x13.m(x13.x12)", t13, W({t13, t12}), {{W({t12}), fshift(t13, e12)}});
  add("x13.m(x12.x13)", t13, W({t12, t13}), {{W({t13, t12, t13}), cst(Rat(1))}});
  add("x13.m(x23.x12)", t13, W({t23, t12}),
      {{W({t13, t12, t13}), cst(Rat(-1))}, {W({t23}), fshift(t13, e23, Rat(-1))}});
  add("x13.m(x12.x23)", t13, W({t12, t23}), {{W({t13, t12, t23}), cst(Rat(1))}});

  add("x23.m(x13.x12)", t23, W({t13, t12}),
      {{W({t12, t23, t12}), cst(Rat(-1))},
       {W({t13}), Coef{[&, t12](int g) -> Rat { return -f(t12, g); }, nullptr, false}}});
  add("x23.m(x12.x13)", t23, W({t12, t13}),
      {{W({t13, t12, t23}), cst(Rat(1))},
       {W({t12}), Coef{[&](int g) -> Rat { return om(g); }, nullptr, false}}});
  add("x23.m(x23.x12)", t23, W({t23, t12}), {{W({t12}), fshift(t23, e12)}});
  add("x23.m(x12.x23)", t23, W({t12, t23}),
      {{W({t12, t23, t12}), cst(Rat(1))}, {W({t13}), fconst(t23, e13, Rat(-1))}});

  add("x12.m(x13.x12)", t12, W({t13, t12}),
      {{W({t13, t12, t13}), cst(Rat(1))}, {W({t23}), fconst(t13, e23)}});
  add("x12.m(x12.x13)", t12, W({t12, t13}), {{W({t13}), fshift(t12, e13)}});
  add("x12.m(x23.x12)", t12, W({t23, t12}), {{W({t12, t23, t12}), cst(Rat(1))}});
  add("x12.m(x12.x23)", t12, W({t12, t23}), {{W({t23}), fshift(t12, e23)}});

  add("x13.m(x13.x12.x13)", t13, W({t13, t12, t13}),
      {{W({t12, t13}), fshift(t13, L(e12, e13))}});
  add("x13.m(x12.x23.x12)", t13, W({t12, t23, t12}), {{m4, cst(Rat(1))}});
  add("x13.m(x13.x12.x23)", t13, W({t13, t12, t23}),
      {{W({t12, t23}), fshift(t13, L(e12, e23))}});

  add("x23.m(x13.x12.x13)", t23, W({t13, t12, t13}),
      {{m4, cst(Rat(1))},
       {m1, Coef{[&](int g) -> Rat { return -(f(t12, g) * om(g) + f(t13, e23) * f(t23, g)); },
                 [&](int g) -> Rat {
                   return -(f(t12, g) * om(g) + f(t13, L(e23, g)) * f(t23, g));
                 },
                 true}}});
  add("x23.m(x12.x23.x12)", t23, W({t12, t23, t12}),
      {{W({t12, t23}), fg(t12)},
       {W({t13, t12}),
        Coef{[&](int) -> Rat { return a.at_index(t12) - a.at_index(t23); },
             [&](int g) -> Rat { return -f(t23, L(e13, g)); }, true}}});
  add("x23.m(x13.x12.x23)", t23, W({t13, t12, t23}),
      {{W({t12, t13}), fshift(t23, L(e23, e12))},
       {W({t23, t12}), Coef{[&](int g) -> Rat { return -om(g); }, nullptr, false}}});

  add("x12.m(x13.x12.x13)", t12, W({t13, t12, t13}),
      {{W({t13, t12}),
        Coef{[&](int g) -> Rat { return f(t13, g) + f(t12, e23); },
             [&](int g) -> Rat { return f(t13, g) + f(t12, L(e23, g)); }, true}},
       {W({t12, t23}), fconst(t12, e23)}});
  add("x12.m(x12.x23.x12)", t12, W({t12, t23, t12}),
      {{W({t23, t12}), fshift(t12, L(e23, e12))}});
  add("x12.m(x13.x12.x23)", t12, W({t13, t12, t23}),
      {{m4, cst(Rat(-1))},
       {m1, Coef{[&](int g) -> Rat { return f(t13, e23) * f(t23, g) - f(t12, L(e13, g)) * f(t13, g); },
                 [&](int g) -> Rat {
                   return f(t13, L(e23, g)) * f(t23, g) - f(t12, L(e13, g)) * f(t13, g);
                 },
                 true}}});

  add("x13.m4", t13, m4, {{W({t12, t23, t12}), fg(t13)}});
  add("x23.m4", t23, m4,
      {{W({t13, t12, t13}), fg(t23)},
       {W({t23}), Coef{[&](int g) -> Rat { return f(t13, e23) * f(t23, g) + om(g) * f(t12, g); },
                       [&](int g) -> Rat {
                         return f(t13, L(e23, g)) * f(t23, g) + om(g) * f(t12, g);
                       },
                       true}}});
  add("x12.m4", t12, m4,
      {{W({t13, t12, t23}), Coef{[&](int g) -> Rat { return -f(t12, g); }, nullptr, false}},
       {W({t12}),
        Coef{[&](int g) -> Rat {
               return f(t13, e23) * f(t23, L(e12, g)) - f(t12, L(e23, g)) * f(t13, L(e12, g));
             },
             [&](int g) -> Rat {
               return f(t13, L(e23, g)) * f(t23, L(e12, g)) -
                      f(t12, L(e23, g)) * f(t13, L(e12, g));
             },
             true}}});

  CrosscheckReport report;
  report.all_literal = true;
  report.derived_consistent = true;

  // weight bookkeeping of the derived action: x_t maps [h] into [(t)h],
  // delta_h picks the isotypic component
  for (int b = 0; b < T.dim(); ++b) {
    int wt = T.left_weight(b);
    for (int h = 0; h < G.order(); ++h) {
      AlgElt got = T.multiply(T.delta(h), T.basis_elt(b));
      AlgElt expect = h == wt ? T.basis_elt(b) : AlgElt{};
      if (!(got == expect)) report.derived_consistent = false;
    }
    for (int t = 0; t < G.num_transpositions(); ++t)
      for (const auto& [k, c] : T.multiply(T.gen(t), T.basis_elt(b)))
        if (T.left_weight(k) != G.tmul(t, wt)) report.derived_consistent = false;
  }

  for (const Formula& fm : formulas) {
    bool flagged = false;
    for (const auto& [w, c] : fm.rhs) flagged = flagged || c.flagged;
    if (flagged) ++report.flagged_formulas;
    for (int g = 0; g < G.order(); ++g) {
      AlgElt derived = T.multiply(T.gen(fm.t), T.basis_elt(T.bindex(fm.src, g)));
      AlgElt lit, alt;
      for (const auto& [w, c] : fm.rhs) {
        ae_insert(lit, T.bindex(w, g), c.lit(g));
        ae_insert(alt, T.bindex(w, g), c.alt ? c.alt(g) : c.lit(g));
      }
      CrosscheckEntry entry;
      entry.formula = fm.name;
      entry.g = g;
      entry.flagged = flagged;
      entry.literal_match = derived == lit;
      entry.shifted_match = derived == alt;
      if (!entry.literal_match) {
        report.all_literal = false;
        entry.detail = "derived action differs from the printed formula";
      }
      report.entries.push_back(std::move(entry));
    }
    if (flagged) {
      bool lit_all = true, alt_all = true;
      for (auto it = report.entries.end() - G.order(); it != report.entries.end(); ++it) {
        lit_all = lit_all && it->literal_match;
        alt_all = alt_all && it->shifted_match;
      }
      std::string verdict =
          lit_all && !alt_all
              ? "constant reading matches, shifted reading differs"
              : (!lit_all && alt_all ? "shifted reading matches, constant differs"
                                     : (lit_all ? "both readings match"
                                                : "neither reading matches"));
      report.notes.push_back(fm.name + ": " + verdict);
    }
  }
  return report;
}

}  // namespace s3hopf
