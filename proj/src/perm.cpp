#include "s3hopf/perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace s3hopf {

Perm::Perm(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("Perm: n out of range");
  for (int i = 0; i < 8; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("bad transposition");
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  Perm p(n);
  std::array<bool, 8> seen{};
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::parse(int n, const std::string& cycles) {
  std::string t;
  for (char c : cycles)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  Perm result(n);
  if (t.empty() || t == "e" || t == "()" || t == "id") return result;
  std::vector<Perm> factors;
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(') throw std::invalid_argument("bad cycle string: " + cycles);
    std::size_t close = t.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced cycle string: " + cycles);
    std::vector<int> cyc;
    for (std::size_t k = pos + 1; k < close; ++k) {
      char c = t[k];
      if (c < '1' || c > '0' + n)
        throw std::invalid_argument("bad point in cycle string: " + cycles);
      cyc.push_back(c - '0');
    }
    if (cyc.size() < 2) throw std::invalid_argument("cycle too short: " + cycles);
    Perm f(n);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      f.img_[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
    // validate bijectivity of the cycle (repeated points)
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("repeated point in cycle: " + cycles);
    factors.push_back(f);
    pos = close + 1;
  }
  for (const Perm& f : factors) result = result * f;
  return result;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::sign() const {
  int s = 1;
  std::array<bool, 8> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Perm Perm::operator*(const Perm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Perm size mismatch");
  Perm r(n_);
  for (int i = 0; i < n_; ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(n_);
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Perm::operator==(const Perm& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i)
    if (img_[i] != o.img_[i]) return false;
  return true;
}

bool Perm::operator<(const Perm& o) const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != o.img_[i]) return img_[i] < o.img_[i];
  return false;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::array<bool, 8> seen{};
  for (int i = 0; i < n_; ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Transposition::Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (i == j || i < 1) throw std::invalid_argument("bad transposition");
}

std::string Transposition::str() const {
  return "(" + std::to_string(i) + std::to_string(j) + ")";
}

Transposition conjugate(const Transposition& t, const Perm& g) {
  Perm gi = g.inverse();
  return Transposition(gi.image(t.i), gi.image(t.j));
}

SymGroup::SymGroup(int n) : n_(n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    elems_.push_back(Perm::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) trans_.emplace_back(i, j);

  int N = order(), T = num_transpositions();
  mult_.assign(N, std::vector<int>(N, -1));
  inv_.assign(N, -1);
  sgn_.assign(N, 1);
  for (int g = 0; g < N; ++g) {
    inv_[g] = index(elems_[g].inverse());
    sgn_[g] = elems_[g].sign();
    for (int h = 0; h < N; ++h) mult_[g][h] = index(elems_[g] * elems_[h]);
  }
  telem_.assign(T, -1);
  conj_.assign(T, std::vector<int>(N, -1));
  tmul_.assign(T, std::vector<int>(N, -1));
  for (int t = 0; t < T; ++t) {
    telem_[t] = index(trans_[t].perm(n));
    for (int g = 0; g < N; ++g) {
      conj_[t][g] = tindex(conjugate(trans_[t], elems_[g]));
      tmul_[t][g] = mult_[telem_[t]][g];
    }
  }
}

const SymGroup& SymGroup::get(int n) {
  static std::map<int, std::unique_ptr<SymGroup>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    if (n < 3 || n > 5) throw std::invalid_argument("SymGroup: n must be 3..5");
    it = cache.emplace(n, std::unique_ptr<SymGroup>(new SymGroup(n))).first;
  }
  return *it->second;
}

int SymGroup::index(const Perm& p) const {
  for (int g = 0; g < order(); ++g)
    if (elems_[g] == p) return g;
  throw std::invalid_argument("SymGroup::index: wrong group");
}

int SymGroup::tindex(const Transposition& t) const {
  for (int k = 0; k < num_transpositions(); ++k)
    if (trans_[k] == t) return k;
  throw std::invalid_argument("SymGroup::tindex: not a transposition of S_n");
}

}  // namespace s3hopf
