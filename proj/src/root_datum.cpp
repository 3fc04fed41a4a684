#include "qschur/root_datum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qschur {

namespace {

// Cartan matrix a_{jk} = <alpha_j, alpha_k^vee> and simple-root squared
// lengths for the supported families (Bourbaki numbering).
void familyData(char fam, int d, std::vector<std::vector<int>>& a,
                std::vector<int>& len2) {
  auto chain = [&](int val_sub, int val_super, int at) {
    // default simply-laced chain, then adjust the (at, at+1) bond
    for (int i = 0; i + 1 < d; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    if (at >= 0) {
      a[at][at + 1] = val_sub;
      a[at + 1][at] = val_super;
    }
  };
  a.assign(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) a[i][i] = 2;
  len2.assign(d, 2);
  switch (fam) {
    case 'A':
      if (d < 1) throw Error("type A needs rank >= 1");
      chain(-1, -1, -1);
      break;
    case 'B':
      // alpha_d short; alpha_1..alpha_{d-1} long
      if (d < 2) throw Error("type B needs rank >= 2");
      chain(-2, -1, d - 2);
      for (int i = 0; i + 1 < d; ++i) len2[i] = 4;
      break;
    case 'C':
      // alpha_d long; alpha_1..alpha_{d-1} short
      if (d < 2) throw Error("type C needs rank >= 2");
      chain(-1, -2, d - 2);
      len2[d - 1] = 4;
      break;
    case 'D':
      if (d < 4) throw Error("type D needs rank >= 4");
      for (int i = 0; i + 2 < d; ++i) a[i][i + 1] = a[i + 1][i] = -1;
      a[d - 3][d - 1] = a[d - 1][d - 3] = -1;
      break;
    case 'G':
      if (d != 2) throw Error("type G needs rank 2");
      a[0][1] = -1;
      a[1][0] = -3;
      len2[1] = 6;
      break;
    default:
      throw Error(std::string("unsupported family '") + fam + "'");
  }
}

long detInt(std::vector<std::vector<long>> m) {
  const int n = (int)m.size();
  // fraction-free Gaussian elimination (Bareiss)
  long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

CartanDatum::CartanDatum(char family, int rank) : family_(family), rank_(rank) {
  familyData(family, rank, cartan_, len2_);
  gram_.assign(rank, std::vector<int>(rank, 0));
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) {
      int num = cartan_[j][k] * len2_[k];
      if (num % 2 != 0) throw Error("gram matrix not integral");
      gram_[j][k] = num / 2;
    }
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k)
      if (gram_[j][k] != gram_[k][j]) throw Error("gram matrix not symmetric");
  buildRoots();
  std::vector<std::vector<long>> cl(rank, std::vector<long>(rank));
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) cl[j][k] = cartan_[j][k];
  fund_order_ = std::abs(detInt(cl));
}

void CartanDatum::buildRoots() {
  const int d = rank_;
  auto dotGram = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long s = 0;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) s += long(x[j]) * gram_[j][k] * y[k];
    return s;
  };
  // closure of the simple roots under simple reflections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int k = 0; k < d; ++k) {
    std::vector<int> e(d, 0);
    e[k] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto m = queue.back();
    queue.pop_back();
    for (int k = 0; k < d; ++k) {
      long pair = 0;  // <alpha, alpha_k^vee> = sum_j m_j a_{jk}
      for (int j = 0; j < d; ++j) pair += long(m[j]) * cartan_[j][k];
      auto im = m;
      im[k] -= (int)pair;
      if (seen.insert(im).second) queue.push_back(im);
    }
  }
  // positives first (sorted), then their negatives in matching order
  std::vector<std::vector<int>> pos;
  for (const auto& m : seen) {
    bool nonneg = std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
    if (nonneg) pos.push_back(m);
  }
  std::sort(pos.begin(), pos.end());
  npos_ = (int)pos.size();
  if ((int)seen.size() != 2 * npos_) throw Error("root closure is not reduced");

  auto makeRoot = [&](const std::vector<int>& m, bool positive) {
    Root r;
    r.m = m;
    r.positive = positive;
    long l2 = dotGram(m, m);
    r.len2 = (int)l2;
    r.coroot.resize(d);
    for (int j = 0; j < d; ++j) {
      long g = 0;
      for (int k = 0; k < d; ++k) g += long(gram_[j][k]) * m[k];
      long num = 2 * g;
      if (num % l2 != 0) throw Error("coroot not integral");
      r.coroot[j] = (int)(num / l2);
    }
    return r;
  };
  roots_.clear();
  for (const auto& m : pos) roots_.push_back(makeRoot(m, true));
  for (const auto& m : pos) {
    auto neg = m;
    for (auto& x : neg) x = -x;
    roots_.push_back(makeRoot(neg, false));
  }
  // reorder positives so that the simple roots occupy 0..d-1
  std::vector<Root> reordered;
  std::vector<bool> used(npos_, false);
  for (int k = 0; k < d; ++k) {
    std::vector<int> e(d, 0);
    e[k] = 1;
    for (int i = 0; i < npos_; ++i)
      if (!used[i] && roots_[i].m == e) {
        reordered.push_back(roots_[i]);
        used[i] = true;
        break;
      }
  }
  for (int i = 0; i < npos_; ++i)
    if (!used[i]) reordered.push_back(roots_[i]);
  for (int i = 0; i < npos_; ++i) {
    auto neg = reordered[i];
    for (auto& x : neg.m) x = -x;
    for (auto& x : neg.coroot) x = -x;
    neg.positive = false;
    reordered.push_back(neg);
  }
  roots_ = std::move(reordered);

  // simple reflection tables
  srefl_.assign(d, std::vector<int>(roots_.size()));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < (int)roots_.size(); ++i) {
      const auto& m = roots_[i].m;
      long pair = 0;
      for (int j = 0; j < d; ++j) pair += long(m[j]) * cartan_[j][k];
      auto im = m;
      im[k] -= (int)pair;
      int idx = rootIndex(im);
      if (idx < 0) throw Error("reflection left the root system");
      srefl_[k][i] = idx;
    }

  // highest root: theta + alpha_k is never a root
  theta_ = -1;
  for (int i = 0; i < npos_; ++i) {
    bool highest = true;
    for (int k = 0; k < d && highest; ++k) {
      auto m = roots_[i].m;
      m[k] += 1;
      if (rootIndex(m) >= 0) highest = false;
    }
    if (highest) {
      if (theta_ >= 0) throw Error("highest root not unique");
      theta_ = i;
    }
  }
  if (theta_ < 0) throw Error("no highest root");
  theta_coroot_ = roots_[theta_].coroot;
}

int CartanDatum::rootIndex(const std::vector<int>& m) const {
  for (int i = 0; i < (int)roots_.size(); ++i)
    if (roots_[i].m == m) return i;
  return -1;
}

std::vector<int> CartanDatum::reflectionPerm(int rootIdx) const {
  const Root& beta = roots_[rootIdx];
  std::vector<int> perm(roots_.size());
  for (int i = 0; i < (int)roots_.size(); ++i) {
    const auto& m = roots_[i].m;
    // <alpha, beta^vee> = 2(alpha,beta)/(beta,beta)
    long g = 0;
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) g += long(m[j]) * gram_[j][k] * beta.m[k];
    long num = 2 * g;
    if (num % beta.len2 != 0) throw Error("reflection pairing not integral");
    long coef = num / beta.len2;
    auto im = m;
    for (int j = 0; j < rank_; ++j) im[j] -= (int)(coef * beta.m[j]);
    int idx = rootIndex(im);
    if (idx < 0) throw Error("reflection left the root system");
    perm[i] = idx;
  }
  return perm;
}

long CartanDatum::pairRoot(int rootIdx, const Coweight& c) const {
  const auto& m = roots_[rootIdx].m;
  long s = 0;
  for (int j = 0; j < rank_; ++j) s += long(m[j]) * c[j];
  return s;
}

std::pair<long, long> CartanDatum::pairNormalized(int rootIdx,
                                                  const Coweight& c) const {
  long num = 2 * pairRoot(rootIdx, c);
  long den = roots_[rootIdx].len2;
  long g = std::gcd(std::abs(num), den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

Coweight CartanDatum::simpleReflectCoweight(int k, const Coweight& c) const {
  Coweight r = c;
  for (int j = 0; j < rank_; ++j) r[j] -= c[k] * cartan_[j][k];
  return r;
}

bool CartanDatum::inFundamentalDomain(const Coweight& c, int n) const {
  for (int i = 0; i < npos_; ++i) {
    long two = 2 * pairRoot(i, c);
    // -n < two/len2 <= 0
    if (two > 0 || two <= -long(n) * roots_[i].len2) return false;
  }
  return true;
}

bool CartanDatum::isAntiDominant(const Coweight& c) const {
  for (int k = 0; k < rank_; ++k)
    if (c[k] > 0) return false;
  return true;
}

bool CartanDatum::inCorootLattice(const Coweight& c) const {
  // solve Cartan * x = c exactly; member iff x integral
  using Rat = boost::multiprecision::cpp_rational;
  const int d = rank_;
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) m[j][k] = cartan_[j][k];
    m[j][d] = c[j];
  }
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int p = -1;
    for (int i = row; i < d; ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    for (int i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (int k = col; k <= d; ++k) m[i][k] -= f * m[row][k];
    }
    ++row;
  }
  // Cartan matrices are invertible, so row == d
  for (int i = 0; i < d; ++i) {
    Rat x = m[i][d] / m[i][i];
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

std::string coweightStr(const Coweight& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

}  // namespace qschur
