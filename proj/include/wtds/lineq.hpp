#pragma once

// Exact row-basis peeling for systems of linear equations.
//
// Peeling k+1 successive row bases B_0..B_k off a matrix M gives a submatrix
// M' such that any vector violating at most k rows of M' lies in the kernel of
// some whole layer B_i, and therefore of every row that B_i spans, which
// includes all rows outside M'.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wtds {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rows of rational coefficients. For an equation system the last entry of
/// each row is the constant term: a_1 x_1 + ... + a_n x_n + c = 0.
struct LinearSystem {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::int64_t> tags;  // provenance of each row, parallel to rows

  std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }

  void add_row(std::vector<Rational> row, std::int64_t tag = -1) {
    if (!rows.empty() && row.size() != columns())
      throw std::invalid_argument("row length mismatch");
    rows.push_back(std::move(row));
    tags.push_back(tag);
  }
};

/// Incrementally maintained echelon basis over the integers (rows scaled to
/// integers; elimination is fraction-free with gcd normalization).
class RowSpace {
 public:
  explicit RowSpace(std::size_t columns) : columns_(columns) {}

  /// Adds `row` if it is not spanned by the rows added so far.
  bool insert(const std::vector<Rational>& row) {
    std::vector<BigInt> r = to_integer_row(row);
    for (const auto& [pivot, b] : basis_) {
      if (r[pivot] == 0) continue;
      const BigInt f = r[pivot];
      const BigInt p = b[pivot];
      for (std::size_t j = 0; j < columns_; ++j) r[j] = p * r[j] - f * b[j];
      normalize(r);
    }
    for (std::size_t j = 0; j < columns_; ++j)
      if (r[j] != 0) {
        basis_.emplace_back(j, std::move(r));
        return true;
      }
    return false;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<BigInt> to_integer_row(const std::vector<Rational>& row) const {
    if (row.size() != columns_) throw std::invalid_argument("row length mismatch");
    BigInt l = 1;
    for (const Rational& q : row) {
      const BigInt d = boost::multiprecision::denominator(q);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::vector<BigInt> out(columns_);
    for (std::size_t j = 0; j < columns_; ++j)
      out[j] = boost::multiprecision::numerator(row[j]) * (l / boost::multiprecision::denominator(row[j]));
    normalize(out);
    return out;
  }

  static void normalize(std::vector<BigInt>& r) {
    BigInt g = 0;
    for (const BigInt& x : r) {
      if (x == 0) continue;
      BigInt a = abs(x);
      g = g == 0 ? a : BigInt(boost::multiprecision::gcd(g, a));
    }
    if (g > 1)
      for (BigInt& x : r) x /= g;
  }

  std::size_t columns_;
  std::vector<std::pair<std::size_t, std::vector<BigInt>>> basis_;
};

/// Greedy basis: scans `indices` in order and keeps a row iff it raises the
/// rank. The kept rows are independent and span every scanned row.
inline std::vector<std::size_t> row_basis(const LinearSystem& m, const std::vector<std::size_t>& indices) {
  RowSpace space(m.columns());
  std::vector<std::size_t> kept;
  for (std::size_t i : indices)
    if (space.insert(m.rows.at(i))) kept.push_back(i);
  return kept;
}

inline std::vector<std::size_t> row_basis(const LinearSystem& m) {
  std::vector<std::size_t> all(m.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return row_basis(m, all);
}

struct PeelResult {
  std::vector<std::size_t> kept;                 // ascending row indices
  std::vector<std::vector<std::size_t>> layers;  // B_0, B_1, ...
};

/// Peels up to k+1 row bases. Rows left over are spanned by every layer;
/// all-zero rows are never kept.
inline PeelResult peel(const LinearSystem& m, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("peel needs k >= 0");
  PeelResult out;
  std::vector<std::size_t> remaining(m.rows.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  for (std::int64_t layer = 0; layer <= k && !remaining.empty(); ++layer) {
    std::vector<std::size_t> basis = row_basis(m, remaining);
    if (basis.empty()) break;  // only zero rows remain
    std::vector<std::size_t> rest;
    std::size_t bi = 0;
    for (std::size_t i : remaining) {
      if (bi < basis.size() && basis[bi] == i)
        ++bi;
      else
        rest.push_back(i);
    }
    remaining = std::move(rest);
    out.kept.insert(out.kept.end(), basis.begin(), basis.end());
    out.layers.push_back(std::move(basis));
  }
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

/// Subset of the equations (rows with the constant as last column) such that
/// an assignment violating at most k kept equations violates no dropped one.
/// Tags follow their rows.
inline LinearSystem reduce_equations(const LinearSystem& s, std::int64_t k) {
  PeelResult p = peel(s, k);
  LinearSystem out;
  for (std::size_t i : p.kept) out.add_row(s.rows[i], s.tags[i]);
  return out;
}

}  // namespace wtds
