/*
  laurent.hpp — exact arithmetic in Z[v,v^-1].

  Every coefficient in the library lives here: Kazhdan-Lusztig polynomials,
  structure constants, inner product values.  Values are immutable once
  built and always kept in canonical form (terms sorted by exponent, no
  zero coefficients), so operator== is ring equality.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation would need elements beyond the session length
// bound; carries the offending length so the CLI can report it.
struct TruncationError : Error {
  long offending_length;
  TruncationError(const std::string& what, long len)
      : Error(what), offending_length(len) {}
};

struct LaurentClass {
  bool is_zero = true;
  int lowest_exponent = 0;  // zero gets the distinguished descriptor (0,0)
  Int lowest_coeff = 0;
  bool in_N_of_v = true;    // all coefficients >= 0
  bool in_Z_of_v = true;    // all exponents >= 0
  bool in_v_N_of_v = true;  // exponents >= 1 and coefficients >= 0
};

class Laurent {
 public:
  using Term = std::pair<int, Int>;  // (exponent, coefficient)

  Laurent() = default;
  Laurent(long c) { if (c != 0) terms_.emplace_back(0, c); }
  Laurent(const Int& c) { if (c != 0) terms_.emplace_back(0, c); }

  static Laurent monomial(Int c, int exp);
  static Laurent v(int exp = 1) { return monomial(1, exp); }

  // terms in ascending exponent order; canonical
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  Int coeff(int exp) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scaled(const Int& c) const;
  Laurent shifted(int exp) const;  // multiply by v^exp

  // bar involution v -> v^-1
  Laurent bar() const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  LaurentClass classify() const;
  int lowestExp() const;   // requires nonzero
  int highestExp() const;  // requires nonzero

  // Exact division; nullopt when the remainder is nonzero.
  static std::optional<Laurent> divideExact(const Laurent& num,
                                            const Laurent& den);

  std::string str() const;                     // human readable
  std::string cacheStr() const;                // "e:c,e:c" ascending
  static Laurent parseCacheStr(const std::string& s);

 private:
  static void checkExp(long e);
  std::vector<Term> terms_;
};

}  // namespace qschur
