#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "s3hopf/params.hpp"

namespace s3hopf {

// A word in the generators x_t, stored as transposition indices into
// SymGroup::transpositions(). The empty word is the unit.
using Word = std::vector<std::uint8_t>;

// Graded order: by length, then lexicographically on letter indices.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string word_str(const SymGroup& G, const Word& w);  // "x13.x12", "1"

// Product of the letters of w as a group element (left-to-right, composing
// right-to-left as permutations). This is g_x: the word x shifts weight g to
// g_x g, and m_x lies in the weight space [g_x g] of a Verma at g.
int word_weight(const SymGroup& G, const Word& w);

// Group element by which a k^G coefficient shifts when commuted from the
// left of w to the right of w:  c . w = w . (g |-> c(shift * g)).
// For w = t1 t2 ... tk the shift is t1 t2 ... tk as well; kept as its own
// function for clarity at call sites.
int word_shift(const SymGroup& G, const Word& w);

GroupFun gf_shift_g(const SymGroup& G, const GroupFun& f, int shift);

// Element of the smash product in normal-ordered form: a sum of terms
// (word) * (k^G coefficient on the right). This is the universe the
// rewriting engine works in; specializing the coefficient at a group element
// recovers elements of the 72-dimensional algebra.
using GElement = std::map<Word, GroupFun, WordLess>;

void ge_add_term(const SymGroup& G, GElement& e, const Word& w, const GroupFun& c);
GElement ge_sub(const SymGroup& G, const GElement& a, const GElement& b);
bool ge_is_zero(const GElement& e);
std::string ge_str(const SymGroup& G, const GElement& e);

}  // namespace s3hopf
