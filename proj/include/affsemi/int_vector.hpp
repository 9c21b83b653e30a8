#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "affsemi/errors.hpp"

namespace affsemi {

// Exact integers and rationals. Rational values are kept canonical
// (lowest terms, positive denominator) by mpq_class::canonicalize.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Column vector in Z^d. The dimension is fixed at construction and every
// binary operation checks it; there is no implicit resizing.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<Int> coords) : c_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords) {
    c_.reserve(coords.size());
    for (long v : coords) c_.emplace_back(v);
  }

  static IntVector zeros(std::size_t d) {
    IntVector z;
    z.c_.assign(d, Int(0));
    return z;
  }

  std::size_t dim() const { return c_.size(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const {
    for (const Int& v : c_)
      if (v != 0) return false;
    return true;
  }

  IntVector operator+(const IntVector& o) const {
    check_dim(o);
    IntVector r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }

  IntVector operator-(const IntVector& o) const {
    check_dim(o);
    IntVector r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }

  IntVector operator*(const Int& s) const {
    IntVector r(*this);
    for (Int& v : r.c_) v *= s;
    return r;
  }

  bool operator==(const IntVector& o) const { return c_ == o.c_; }
  bool operator!=(const IntVector& o) const { return !(*this == o); }

  // Lexicographic order (shorter vectors first); used for all deterministic
  // set orderings in the library.
  bool operator<(const IntVector& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int c = cmp(c_[i], o.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].get_str();
    }
    s += ")";
    return s;
  }

 private:
  std::vector<Int> c_;

  void check_dim(const IntVector& o) const {
    if (c_.size() != o.c_.size())
      throw DimensionMismatchError("vector dimensions differ: " +
                                   std::to_string(c_.size()) + " vs " +
                                   std::to_string(o.c_.size()));
  }
};

inline bool leq_componentwise(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("componentwise compare on mixed dimensions");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline IntVector meet(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("meet on mixed dimensions");
  IntVector r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (b[i] < r[i]) r[i] = b[i];
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  return os << v.str();
}

}  // namespace affsemi
