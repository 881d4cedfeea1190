#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace s3hopf {

// Permutation of {1..n}, n <= 8. Products compose right to left:
// (a*b)(x) = a(b(x)). Under this convention g^{-1}(ij)g = (g^{-1}(i) g^{-1}(j)),
// which is the reading that matches the explicit coefficient tables of the
// deformation data f_ij and of the weight decompositions; all cycle-notation
// strings in the CLI and in reports are evaluated the same way.
class Perm {
 public:
  explicit Perm(int n = 1);
  static Perm transposition(int n, int i, int j);  // 1-based, i != j
  static Perm from_one_line(const std::vector<int>& images);  // 1-based
  // Parses products of cycles, e.g. "(12)", "(13)(23)", "e". Right-to-left.
  static Perm parse(int n, const std::string& cycles);

  int n() const { return n_; }
  int image(int i) const { return img_[i - 1] + 1; }  // 1-based
  bool is_identity() const;
  int sign() const;  // +1 or -1
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool operator==(const Perm& o) const;
  bool operator<(const Perm& o) const;  // lex on the one-line notation

  std::string cycle_string() const;  // "e", "(12)", "(123)", "(12)(34)", ...

 private:
  int n_;
  std::array<std::uint8_t, 8> img_;  // 0-based images
};

// Transposition (i j), stored with i < j, member of the conjugacy class of
// transpositions of S_n.
struct Transposition {
  int i, j;  // 1-based, i < j
  Transposition(int a, int b);
  Perm perm(int n) const { return Perm::transposition(n, i, j); }
  bool operator==(const Transposition& o) const { return i == o.i && j == o.j; }
  bool operator<(const Transposition& o) const {
    return i != o.i ? i < o.i : j < o.j;
  }
  std::string str() const;
};

// Conjugate g^{-1} (i j) g, again a transposition.
Transposition conjugate(const Transposition& t, const Perm& g);

// Cached multiplication/conjugation tables for one symmetric group S_n.
// Element indices follow the lexicographic order of one-line notations, so
// index 0 is always the identity; this order is the stable basis order used
// by every serialized artifact.
class SymGroup {
 public:
  static const SymGroup& get(int n);  // n in {3,4,5}

  int n() const { return n_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int num_transpositions() const { return static_cast<int>(trans_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Transposition>& transpositions() const { return trans_; }

  int index(const Perm& p) const;
  int tindex(const Transposition& t) const;
  const Perm& elem(int g) const { return elems_[g]; }
  const Transposition& trans(int t) const { return trans_[t]; }

  int mult(int g, int h) const { return mult_[g][h]; }  // index of g*h
  int inv(int g) const { return inv_[g]; }
  int sgn(int g) const { return sgn_[g]; }
  // index (into transpositions) of g^{-1} t g
  int conj_t(int t, int g) const { return conj_[t][g]; }
  // index of t*g, t a transposition index
  int tmul(int t, int g) const { return tmul_[t][g]; }
  // index of the transposition t as a group element
  int telem(int t) const { return telem_[t]; }

 private:
  explicit SymGroup(int n);
  int n_;
  std::vector<Perm> elems_;
  std::vector<Transposition> trans_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_, sgn_, telem_;
  std::vector<std::vector<int>> conj_, tmul_;
};

}  // namespace s3hopf
