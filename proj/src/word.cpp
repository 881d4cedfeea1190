#include "s3hopf/word.hpp"

namespace s3hopf {

std::string word_str(const SymGroup& G, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    const Transposition& t = G.trans(w[k]);
    s += "x" + std::to_string(t.i) + std::to_string(t.j);
  }
  return s;
}

int word_weight(const SymGroup& G, const Word& w) {
  int g = 0;  // identity
  for (std::uint8_t t : w) g = G.mult(g, G.telem(t));
  return g;
}

int word_shift(const SymGroup& G, const Word& w) { return word_weight(G, w); }

GroupFun gf_shift_g(const SymGroup& G, const GroupFun& f, int shift) {
  GroupFun r(G.order());
  for (int g = 0; g < G.order(); ++g) r[g] = f[G.mult(shift, g)];
  return r;
}

void ge_add_term(const SymGroup& G, GElement& e, const Word& w, const GroupFun& c) {
  if (gf_is_zero(c)) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second = gf_add(it->second, c);
  if (gf_is_zero(it->second)) e.erase(it);
}

GElement ge_sub(const SymGroup& G, const GElement& a, const GElement& b) {
  GElement r = a;
  for (const auto& [w, c] : b) ge_add_term(G, r, w, gf_scale(c, Rat(-1)));
  return r;
}

bool ge_is_zero(const GElement& e) { return e.empty(); }

std::string ge_str(const SymGroup& G, const GElement& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : e) {
    if (!s.empty()) s += " + ";
    s += word_str(G, w) + "*[";
    for (int g = 0; g < G.order(); ++g) {
      if (g) s += ",";
      s += rat_str(c[g]);
    }
    s += "]";
  }
  return s;
}

}  // namespace s3hopf
