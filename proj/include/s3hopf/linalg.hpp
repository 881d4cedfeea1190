#pragma once

#include <vector>

#include "s3hopf/rational.hpp"

namespace s3hopf {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

RatMat mat_zero(int r, int c);
RatMat mat_identity(int n);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& v);
RatMat mat_add(const RatMat& a, const RatMat& b);
RatMat mat_scale(const RatMat& a, const Rat& c);
RatMat mat_transpose(const RatMat& a);
bool mat_is_zero(const RatMat& a);
Rat mat_trace_of_product(const RatMat& a, const RatMat& b);  // tr(ab)

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);
int rank(RatMat m);
RatMat nullspace(const RatMat& m);  // rows span {x : m x = 0}
// Solves m x = b; returns false if inconsistent. Any solution (free vars 0).
bool solve(const RatMat& m, const RatVec& b, RatVec& x);
bool invert(const RatMat& m, RatMat& inv);
Rat det(RatMat m);

// Row space accumulated in reduced echelon form; the canonical
// representation used for subspace identity tests everywhere.
class Echelon {
 public:
  explicit Echelon(int ambient) : ambient_(ambient) {}
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  // returns true if the vector enlarged the span
  bool add(RatVec v);
  bool contains(RatVec v) const;
  bool contains(const Echelon& other) const;
  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool operator==(const Echelon& o) const;
  bool operator<(const Echelon& o) const;  // for ordered containers

 private:
  void reduce(RatVec& v) const;
  int ambient_;
  std::vector<RatVec> rows_;   // reduced echelon, pivot entries 1
  std::vector<int> pivots_;    // increasing
};

Echelon span_of(int ambient, const std::vector<RatVec>& vecs);
Echelon ech_sum(const Echelon& a, const Echelon& b);
Echelon ech_intersect(const Echelon& a, const Echelon& b);

}  // namespace s3hopf
