/*
  weyl.hpp — the finite Weyl group W and the extended affine Weyl group.

  W is enumerated once as permutations of the root set.  Elements of the
  extended group are kept in Bernstein form t_lam * w (translation coweight
  plus finite part), which gives O(rank) multiplication and exact equality;
  reduced words are derived on demand by greedy length descent, with the
  length-zero residue giving the Omega part.
*/

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qschur/root_datum.hpp"

namespace qschur {

class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& datum);

  const CartanDatum& datum() const { return *datum_; }
  int size() const { return (int)perms_.size(); }
  int identity() const { return 0; }
  int simple(int k) const { return simple_[k]; }  // k 0-based
  int sTheta() const { return s_theta_; }

  int mul(int a, int b) const { return mult_[a * size() + b]; }
  int inv(int a) const { return inv_[a]; }
  int length(int a) const { return length_[a]; }
  int longest() const { return longest_; }

  int actRoot(int w, int rootIdx) const { return perms_[w][rootIdx]; }
  Coweight actCoweight(int w, const Coweight& c) const;

 private:
  const CartanDatum* datum_;
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_;
  std::vector<int> mult_, inv_, length_;
  // rows of the coweight action: cw_rows_[w][j] = m-coords of w^-1(alpha_j)
  std::vector<std::vector<std::vector<int>>> cw_rows_;
  int s_theta_ = -1;
  int longest_ = -1;
};

// Element t_lam * w of the extended affine Weyl group (lam = 0 in finite mode).
struct AffineElt {
  Coweight lam;
  int w = 0;

  auto operator<=>(const AffineElt&) const = default;
};

// Group context: datum + enumerated W + mode.  Generator indices are
// 1..d for the finite simple reflections and 0 for s_0 = t_{theta^vee} s_theta
// (affine mode only).
class GroupCtx {
 public:
  GroupCtx(const CartanDatum& datum, const WeylGroup& W, bool affine);

  const CartanDatum& datum() const { return *datum_; }
  const WeylGroup& W() const { return *W_; }
  bool affine() const { return affine_; }
  const std::vector<int>& generators() const { return gens_; }

  AffineElt id() const;
  AffineElt gen(int k) const;  // s_k as an element
  AffineElt mul(const AffineElt& x, const AffineElt& y) const;
  AffineElt inv(const AffineElt& x) const;
  long length(const AffineElt& x) const;  // Iwahori-Matsumoto
  bool isId(const AffineElt& x) const { return x.w == 0 && isZero(x.lam); }

  bool leftDescent(int k, const AffineElt& x) const;
  bool rightDescent(int k, const AffineElt& x) const;

  // Omega = length-zero subgroup, identity first, then sorted by (lam, w)
  const std::vector<AffineElt>& omega() const { return omega_; }
  int omegaIndex(const AffineElt& o) const;
  // x = omega_k * y with y in W_aff; returns (k, y)
  std::pair<int, AffineElt> omegaSplit(const AffineElt& x) const;

  // x = omega_k * s_{i1} ... s_{im} (reduced, greedy smallest-index descent)
  std::pair<int, std::vector<int>> reducedWord(const AffineElt& x) const;
  AffineElt fromWord(int omegaIdx, const std::vector<int>& word) const;

  bool bruhatLeq(const AffineElt& x, const AffineElt& y) const;

  // all elements of length <= L, sorted by (length, lam, w)
  std::vector<AffineElt> ball(long L) const;

  std::string wordStr(const AffineElt& x) const;   // e.g. "w1*0.1.0", "e"
  AffineElt parseWord(const std::string& s) const;

 private:
  static bool isZero(const Coweight& c);
  void buildOmega();

  const CartanDatum* datum_;
  const WeylGroup* W_;
  bool affine_;
  std::vector<int> gens_;
  std::vector<AffineElt> omega_;
  std::vector<std::vector<int>> omega_conj_;  // generator permutation per omega
};

}  // namespace qschur
