#include "sphersing/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace sphersing {

std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IVec>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IVec IntMatrix::row(std::size_t i) const {
  IVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error("NotSquare", "determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& a, IntMatrix& u, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
  for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void swap_cols(IntMatrix& a, IntMatrix& v, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
  for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 -= q * row r2
void add_row(IntMatrix& a, IntMatrix& u, std::size_t r1, std::size_t r2, const Int& q) {
  for (std::size_t j = 0; j < a.cols(); ++j) a.at(r1, j) -= q * a.at(r2, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u.at(r1, j) -= q * u.at(r2, j);
}

void add_col(IntMatrix& a, IntMatrix& v, std::size_t c1, std::size_t c2, const Int& q) {
  for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, c1) -= q * a.at(i, c2);
  for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, c1) -= q * v.at(i, c2);
}

void negate_row(IntMatrix& a, IntMatrix& u, std::size_t r) {
  for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
  for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  std::size_t r = input.rows(), c = input.cols();
  SmithResult res{IntMatrix::identity(r), input, IntMatrix::identity(c)};
  IntMatrix& a = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  std::size_t n = std::min(r, c);
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest-|entry| pivot, scanned row-major.
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < r; ++i) {
      for (std::size_t j = k; j < c; ++j) {
        if (a.at(i, j) == 0) continue;
        if (!found || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    swap_rows(a, u, k, pi);
    swap_cols(a, v, k, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (a.at(i, k) == 0) continue;
        Int q = floor_div(a.at(i, k), a.at(k, k));
        add_row(a, u, i, k, q);
        if (a.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (a.at(k, j) == 0) continue;
        Int q = floor_div(a.at(k, j), a.at(k, k));
        add_col(a, v, j, k, q);
        if (a.at(k, j) != 0) clean = false;
      }
      if (!clean) {
        // A strictly smaller remainder appeared; re-pivot on it.
        std::size_t qi = k, qj = k;
        for (std::size_t i = k; i < r; ++i) {
          for (std::size_t j = k; j < c; ++j) {
            if (a.at(i, j) != 0 && abs(a.at(i, j)) < abs(a.at(qi, qj))) {
              qi = i;
              qj = j;
            }
          }
        }
        swap_rows(a, u, k, qi);
        swap_cols(a, v, k, qj);
        continue;
      }
      // Pivot must divide the whole remaining block for the divisor chain.
      bool divides = true;
      for (std::size_t i = k + 1; i < r && divides; ++i) {
        for (std::size_t j = k + 1; j < c; ++j) {
          if (a.at(i, j) % a.at(k, k) != 0) {
            add_row(a, u, k, i, Int(-1));  // row k += row i
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a.at(k, k) < 0) negate_row(a, u, k);
  }
  return res;
}

IVec primitive_of(const IVec& v) {
  if (is_zero(v)) throw Error("ZeroVector", "primitive part of the zero vector");
  Int g = 0;
  for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Int saturation_index(const std::vector<IVec>& family) {
  if (family.empty()) return 1;
  SmithResult snf = smith_normal_form(IntMatrix::from_rows(family));
  std::size_t n = std::min(snf.s.rows(), snf.s.cols());
  Int idx = 1;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (snf.s.at(k, k) != 0) {
      idx *= snf.s.at(k, k);
      ++nonzero;
    }
  }
  if (nonzero < family.size()) throw Error("DependentFamily", "family is linearly dependent");
  return idx;
}

namespace {

// Inverse of a unimodular integer matrix, by rational elimination.
IntMatrix inverse_unimodular(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<QVec> aug(n, QVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(m.at(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col] == 0) ++p;
    std::swap(aug[col], aug[p]);
    Rat piv = aug[col][col];
    for (std::size_t j = 0; j < 2 * n; ++j) aug[col][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = rat_num(aug[i][n + j]);
  }
  return out;
}

}  // namespace

std::vector<IVec> extend_to_basis(const std::vector<IVec>& family) {
  if (family.empty()) throw Error("EmptyFamily", "nothing to extend");
  std::size_t r = family[0].size();
  Int idx = saturation_index(family);  // throws DependentFamily
  if (idx != 1) throw Error("NotSaturated", "saturation index " + idx.str());
  SmithResult snf = smith_normal_form(IntMatrix::from_rows(family));
  // S = U A V = [I_k | 0]; the rows of A span the lattice spanned by the
  // first k rows of V^{-1}, so the remaining rows of V^{-1} complete a basis.
  IntMatrix vinv = inverse_unimodular(snf.v);
  std::vector<IVec> out;
  for (std::size_t i = family.size(); i < r; ++i) out.push_back(vinv.row(i));
  return out;
}

}  // namespace sphersing
