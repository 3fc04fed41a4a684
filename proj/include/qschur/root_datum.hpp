/*
  root_datum.hpp — finite root systems in a fixed integral realization.

  Roots are stored by their coordinates in the simple-root basis, coweights
  by their coordinates in the fundamental-coweight basis.  The invariant
  form is normalized so short roots have squared length 2; with that choice
  the canonical pairing of a root a = sum m_k alpha_k against a coweight
  i = sum c_k pi_k is the integer dot product m.c, and 2(i,a)/(a,a) is the
  exact fraction 2(m.c)/len2(a).
*/

#pragma once

#include <string>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

using Coweight = std::vector<int>;  // coords in the fundamental-coweight basis

struct Root {
  std::vector<int> m;       // coords in the simple-root basis
  int len2 = 2;             // squared length (2, 4 or 6)
  std::vector<int> coroot;  // coords of 2a/(a,a) in the coweight basis
  bool positive = true;
};

class CartanDatum {
 public:
  CartanDatum(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string typeName() const { return std::string(1, family_) + std::to_string(rank_); }

  // cartan(j,k) = <alpha_j, alpha_k^vee>, 0-based
  int cartan(int j, int k) const { return cartan_[j][k]; }
  // gram(j,k) = (alpha_j, alpha_k)
  int gram(int j, int k) const { return gram_[j][k]; }
  int simpleLen2(int k) const { return len2_[k]; }

  const std::vector<Root>& roots() const { return roots_; }
  int positiveCount() const { return npos_; }
  const Root& root(int idx) const { return roots_[idx]; }
  int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  int simpleRootIndex(int k) const { return k; }  // simples come first
  int thetaIndex() const { return theta_; }
  const Root& theta() const { return roots_[theta_]; }

  int rootIndex(const std::vector<int>& m) const;  // -1 if not a root

  // image of root idx under the reflection s_{alpha_k}, k 0-based simple
  int reflectSimple(int k, int idx) const { return srefl_[k][idx]; }
  // reflection by an arbitrary root, as a permutation of root indices
  std::vector<int> reflectionPerm(int rootIdx) const;

  // canonical pairing <alpha, i> = m(alpha) . c(i)
  long pairRoot(int rootIdx, const Coweight& c) const;
  // exact fraction 2(i,alpha)/(alpha,alpha) as (num, den), den > 0
  std::pair<long, long> pairNormalized(int rootIdx, const Coweight& c) const;

  // s_k on coweight coords: c -> c - c_k * (k-th column of the Cartan matrix)
  Coweight simpleReflectCoweight(int k, const Coweight& c) const;

  // fundamental-domain test for the level-n affine action:
  // -n < 2(i,alpha)/(alpha,alpha) <= 0 for every positive root
  bool inFundamentalDomain(const Coweight& c, int n) const;
  // anti-dominance: <alpha_k, i> <= 0 for all simple k
  bool isAntiDominant(const Coweight& c) const;

  const Coweight& thetaCoroot() const { return theta_coroot_; }

  // membership of c in the coroot lattice Z Phi^vee
  bool inCorootLattice(const Coweight& c) const;

  // |X^vee / Z Phi^vee| = |det(Cartan)|
  long fundamentalGroupOrder() const { return fund_order_; }

 private:
  void buildRoots();

  char family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<int> len2_;
  std::vector<Root> roots_;
  int npos_ = 0;
  int theta_ = -1;
  Coweight theta_coroot_;
  std::vector<std::vector<int>> srefl_;  // simple reflection perms on roots
  long fund_order_ = 1;
};

std::string coweightStr(const Coweight& c);

}  // namespace qschur
