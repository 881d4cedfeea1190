#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "s3hopf/params.hpp"

using namespace s3hopf;

namespace {

ParamVector pv(const Rat& a12, const Rat& a13, const Rat& a23) {
  return ParamVector(3, {a12, a13, a23});  // transpositions in lex order
}

// Independent conjugation oracle: move points by hand instead of going
// through Perm::inverse / SymGroup tables.
Transposition conj_oracle(const Transposition& t, const Perm& g) {
  int pi = 0, pj = 0;
  for (int x = 1; x <= g.n(); ++x) {
    if (g.image(x) == t.i) pi = x;
    if (g.image(x) == t.j) pj = x;
  }
  return Transposition(pi, pj);
}

Rat f_oracle(const ParamVector& a, const Transposition& t, const Perm& g) {
  return a.at(t) - a.at(conj_oracle(t, g));
}

}  // namespace

TEST_CASE("perm arithmetic and cycle notation") {
  const SymGroup& G = SymGroup::get(3);
  CHECK(G.order() == 6);
  CHECK(G.elem(0).is_identity());

  // right-to-left composition: (13)(23) maps 1 -> 3 -> ... = (132)
  Perm p = Perm::parse(3, "(13)(23)");
  CHECK(p.image(1) == 3);
  CHECK(p.image(3) == 2);
  CHECK(p.image(2) == 1);
  CHECK(p.cycle_string() == "(132)");
  CHECK(Perm::parse(3, "(23)(13)").cycle_string() == "(123)");

  for (const Perm& g : G.elements())
    for (const Perm& h : G.elements()) {
      CHECK((g * h).inverse() == h.inverse() * g.inverse());
      CHECK((g * h).sign() == g.sign() * h.sign());
      CHECK(Perm::parse(3, (g * h).cycle_string()) == g * h);
    }

  // conjugation of transpositions stays in the class and matches the oracle
  for (const Transposition& t : G.transpositions())
    for (const Perm& g : G.elements()) CHECK(conjugate(t, g) == conj_oracle(t, g));
}

TEST_CASE("f functional against the printed coefficient table") {
  // generic placeholder values a12, a13, a23
  Rat a12(5), a13(-2), a23(-3);
  ParamVector a = pv(a12, a13, a23);
  const Transposition f13(1, 3);

  CHECK(f_eval(a, f13, Perm::parse(3, "(12)")) == a13 - a23);
  CHECK(f_eval(a, f13, Perm::parse(3, "(123)")) == a13 - a23);
  CHECK(f_eval(a, f13, Perm::parse(3, "(23)")) == a13 - a12);
  CHECK(f_eval(a, f13, Perm::parse(3, "(132)")) == a13 - a12);
  CHECK(f_eval(a, f13, Perm(3)) == 0);
  CHECK(f_eval(a, f13, Perm::parse(3, "(13)")) == 0);

  // any a, g = e: conjugation fixes t
  CHECK(f_eval(pv(Rat(1), Rat(2), Rat(-3)), Transposition(1, 2), Perm(3)) == 0);

  // canonical sub-generic: f_12((23)) = a12 - a_(13) = 2 - (-1) = 3
  CHECK(f_eval(pv(Rat(2), Rat(-1), Rat(-1)), Transposition(1, 2),
               Perm::parse(3, "(23)")) == 3);

  // centralizer invariance f_t(us) = f_t(s) for u in the centralizer of t
  const SymGroup& G = a.group();
  for (const Transposition& t : G.transpositions()) {
    Perm tp = t.perm(3);
    for (const Perm& u : G.elements()) {
      if (!(u * tp == tp * u)) continue;
      for (const Perm& s : G.elements())
        CHECK(f_eval(a, t, u * s) == f_eval(a, t, s));
    }
  }

  // oracle sweep
  for (const Transposition& t : G.transpositions())
    for (const Perm& g : G.elements()) CHECK(f_eval(a, t, g) == f_oracle(a, t, g));
}

TEST_CASE("omega coefficients and defining identity") {
  Rat a12(7), a13(1), a23(-8);
  ParamVector a = pv(a12, a13, a23);
  CHECK(omega_eval(a, Perm::parse(3, "(12)")) == a23 - a13);
  CHECK(omega_eval(a, Perm(3)) == a13 - a23);
  CHECK(omega_eval(a, Perm::parse(3, "(13)")) == a13 - a12);
  CHECK(omega_eval(a, Perm::parse(3, "(132)")) == a12 - a13);
  CHECK(omega_eval(a, Perm::parse(3, "(23)")) == a12 - a23);
  CHECK(omega_eval(a, Perm::parse(3, "(123)")) == a23 - a12);

  // Omega(g) = f_13((12)g) - f_13(g) for all six g, several parameters
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Rat x(num(rng)), y(num(rng), 2);
    ParamVector b = pv(x, y, -x - y);
    for (const Perm& g : b.group().elements()) {
      Perm t12g = Perm::parse(3, "(12)") * g;
      CHECK(omega_eval(b, g) ==
            f_eval(b, Transposition(1, 3), t12g) - f_eval(b, Transposition(1, 3), g));
    }
  }
}

TEST_CASE("isotropy groups") {
  // generic: trivial stabilizer (brute-force oracle below)
  ParamVector gen = pv(Rat(1), Rat(2), Rat(-3));
  auto iso = isotropy_group(gen);
  CHECK(iso.size() == 1);
  CHECK(iso[0].is_identity());

  // zero: everything
  CHECK(isotropy_group(ParamVector::zero(3)).size() == 6);

  // canonical sub-generic: {e, (12)}
  auto iso2 = isotropy_group(pv(Rat(2), Rat(-1), Rat(-1)));
  REQUIRE(iso2.size() == 2);
  CHECK(iso2[0].is_identity());
  CHECK(iso2[1] == Perm::parse(3, "(12)"));

  // oracle: h stabilizes a iff a_{h^-1 t h} = a_t for all t
  const SymGroup& G = gen.group();
  for (const ParamVector& a :
       {gen, ParamVector::zero(3), pv(Rat(2), Rat(-1), Rat(-1))}) {
    std::set<std::string> got;
    for (const Perm& h : isotropy_group(a)) got.insert(h.cycle_string());
    std::set<std::string> expect;
    for (const Perm& h : G.elements()) {
      bool fixes = true;
      for (const Transposition& t : G.transpositions())
        if (a.at(conj_oracle(t, h)) != a.at(t)) fixes = false;
      if (fixes) expect.insert(h.cycle_string());
    }
    CHECK(got == expect);
  }
}

TEST_CASE("linkage and linkage classes") {
  ParamVector gen = pv(Rat(1), Rat(2), Rat(-3));
  // generic: (12) ~ (13)
  auto w = linked(gen, Perm::parse(3, "(12)"), Perm::parse(3, "(13)"));
  CHECK(w.linked);
  CHECK(!w.chain.empty());

  // reflexive with empty chain
  auto w2 = linked(gen, Perm::parse(3, "(123)"), Perm::parse(3, "(123)"));
  CHECK(w2.linked);
  CHECK(w2.chain.empty());

  // sub-generic: e and (12) are not linked
  ParamVector sub = pv(Rat(2), Rat(-1), Rat(-1));
  CHECK(!linked(sub, Perm(3), Perm::parse(3, "(12)")).linked);

  // witness chains verify: g = t_m ... t_1 h with nonvanishing at each step
  const SymGroup& G = gen.group();
  for (const ParamVector& a : {gen, sub}) {
    for (const Perm& g : G.elements())
      for (const Perm& h : G.elements()) {
        auto lw = linked(a, g, h);
        if (!lw.linked) continue;
        Perm cur = h;
        for (auto it = lw.chain.rbegin(); it != lw.chain.rend(); ++it) {
          cur = it->perm(3) * cur;
          CHECK(f_eval(a, *it, cur) != 0);
        }
        CHECK(cur == g);
      }
  }

  // class shapes per regime
  auto classes_of = [](const ParamVector& a) {
    std::multiset<std::size_t> sizes;
    for (auto& c : linkage_classes(a)) sizes.insert(c.size());
    return sizes;
  };
  CHECK(classes_of(gen) == std::multiset<std::size_t>{1, 5});
  CHECK(classes_of(sub) == std::multiset<std::size_t>{1, 1, 4});
  CHECK(classes_of(ParamVector::zero(3)) ==
        std::multiset<std::size_t>{1, 1, 1, 1, 1, 1});

  // the sub-generic four-element class is the one from the paper's list
  auto classes = linkage_classes(sub);
  std::set<std::string> big;
  for (auto& c : classes)
    if (c.size() == 4)
      for (auto& p : c) big.insert(p.cycle_string());
  CHECK(big == std::set<std::string>{"(13)", "(23)", "(123)", "(132)"});
}

TEST_CASE("linked is an equivalence relation (randomized)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-6, 6);
  const SymGroup& G = SymGroup::get(3);
  for (int trial = 0; trial < 20; ++trial) {
    Rat x(num(rng)), y(num(rng), 3);
    ParamVector a = pv(x, y, -x - y);
    const auto& E = G.elements();
    for (const Perm& g : E)
      for (const Perm& h : E) {
        bool gh = linked(a, g, h).linked;
        CHECK(gh == linked(a, h, g).linked);  // symmetry
        for (const Perm& z : E)
          if (gh && linked(a, h, z).linked) CHECK(linked(a, g, z).linked);
      }
  }
}

TEST_CASE("regime classification and gamma invariance") {
  CHECK(classify_regime(pv(Rat(1), Rat(2), Rat(-3))).tag == RegimeTag::Generic);
  CHECK(classify_regime(ParamVector::zero(3)).tag == RegimeTag::Zero);
  Regime r = classify_regime(pv(Rat(-1), Rat(2), Rat(-1)));
  CHECK(r.tag == RegimeTag::SubGeneric);
  ParamVector canon = normalize_subgeneric(pv(Rat(-1), Rat(2), Rat(-1)), r);
  CHECK(canon.at(Transposition(1, 3)) == canon.at(Transposition(2, 3)));
  CHECK(canon.at(Transposition(1, 2)) != canon.at(Transposition(1, 3)));

  // invariance under rescaling and conjugation
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-5, 5);
  const SymGroup& G = SymGroup::get(3);
  for (int trial = 0; trial < 30; ++trial) {
    Rat x(num(rng)), y(num(rng));
    ParamVector a = pv(x, y, -x - y);
    RegimeTag tag = classify_regime(a).tag;
    int m = num(rng);
    Rat mu = m == 0 ? Rat(1) : Rat(m);
    for (const Perm& g : G.elements())
      CHECK(classify_regime(a.act(mu, g)).tag == tag);
  }
}

TEST_CASE("parameter vector validation") {
  CHECK_THROWS(ParamVector(3, {Rat(1), Rat(1), Rat(1)}));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK(parse_rat("-4/6") == Rat(-2, 3));
  CHECK(rat_str(Rat(-2, 3)) == "-2/3");
}
