#include "qschur/laurent.hpp"

#include <map>
#include <sstream>

namespace qschur {

namespace {
constexpr long kExpGuard = 1L << 30;
}

void Laurent::checkExp(long e) {
  if (e > kExpGuard || e < -kExpGuard)
    throw Error("laurent: exponent guard exceeded: " + std::to_string(e));
}

Laurent Laurent::monomial(Int c, int exp) {
  checkExp(exp);
  Laurent r;
  if (c != 0) r.terms_.emplace_back(exp, std::move(c));
  return r;
}

Int Laurent::coeff(int exp) const {
  for (const auto& [e, c] : terms_) {
    if (e == exp) return c;
    if (e > exp) break;
  }
  return 0;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Int c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (isZero() || o.isZero()) return {};
  std::map<int, Int> acc;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      checkExp(long(e1) + long(e2));
      acc[e1 + e2] += c1 * c2;
    }
  Laurent r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

Laurent Laurent::scaled(const Int& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& [e, k] : r.terms_) k *= c;
  return r;
}

Laurent Laurent::shifted(int exp) const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) {
    checkExp(long(e) + long(exp));
    e += exp;
  }
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentClass Laurent::classify() const {
  LaurentClass k;
  if (isZero()) return k;
  k.is_zero = false;
  k.lowest_exponent = terms_.front().first;
  k.lowest_coeff = terms_.front().second;
  for (const auto& [e, c] : terms_) {
    if (c < 0) k.in_N_of_v = false;
    if (e < 0) k.in_Z_of_v = false;
    if (e < 1 || c < 0) k.in_v_N_of_v = false;
  }
  return k;
}

int Laurent::lowestExp() const {
  if (isZero()) throw Error("laurent: lowestExp of zero");
  return terms_.front().first;
}

int Laurent::highestExp() const {
  if (isZero()) throw Error("laurent: highestExp of zero");
  return terms_.back().first;
}

std::optional<Laurent> Laurent::divideExact(const Laurent& num,
                                            const Laurent& den) {
  if (den.isZero()) throw Error("laurent: division by zero");
  if (num.isZero()) return Laurent{};
  // long division from the lowest exponent up
  Laurent rem = num;
  Laurent quot;
  const int dlow = den.lowestExp();
  const Int& dc = den.terms_.front().second;
  while (!rem.isZero()) {
    int rlow = rem.lowestExp();
    Int rc = rem.terms_.front().second;
    if (rc % dc != 0) return std::nullopt;
    Laurent t = monomial(rc / dc, rlow - dlow);
    quot += t;
    rem -= t * den;
    if (!rem.isZero() && rem.lowestExp() <= rlow) return std::nullopt;
  }
  return quot;
}

std::string Laurent::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest exponent first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::string Laurent::cacheStr() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << e << ":" << c.str();
  }
  return os.str();
}

Laurent Laurent::parseCacheStr(const std::string& s) {
  Laurent r;
  if (s.empty()) return r;
  std::stringstream ss(s);
  std::string item;
  int prev_exp = 0;
  bool have_prev = false;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error("laurent: bad term '" + item + "'");
    int e = std::stoi(item.substr(0, colon));
    Int c(item.substr(colon + 1));
    if (c == 0) throw Error("laurent: zero coefficient in serialized poly");
    if (have_prev && e <= prev_exp)
      throw Error("laurent: unsorted serialized poly");
    prev_exp = e;
    have_prev = true;
    r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

}  // namespace qschur
