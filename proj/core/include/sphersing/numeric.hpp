#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace sphersing {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Integer vector: a point of the lattice N (coordinates in a fixed basis).
using IVec = std::vector<Int>;
/// Rational vector: a point of N_Q, or a covector in M_Q (dual basis).
using QVec = std::vector<Rat>;

/// Error with a stable machine-readable code ("ZeroVector", "NotSaturated", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline QVec to_qvec(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& c : v) out.emplace_back(c);
  return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const IVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IVec& v) {
  for (const Int& c : v) {
    if (c != 0) return false;
  }
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const Rat& c : v) {
    if (c != 0) return false;
  }
  return true;
}

std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

}  // namespace sphersing
