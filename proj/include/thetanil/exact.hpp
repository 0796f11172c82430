#pragma once

// Exact arithmetic and the small linear-algebra kernel used everywhere else.
// Rationals are GMP rationals; matrices are dense and row-major.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thetanil {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<int>;
using RatVec = std::vector<Rational>;

/// "num/den" in lowest terms, denominator always written and positive.
std::string to_string(const Rational& q);
/// Accepts "n", "n/d" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(const RatVec& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  RatVec operator*(const RatVec& x) const;

  static RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q. Rows are cleared of denominators and reduced with the
/// fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& a);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

/// Basis of {x : a*x = 0}, one vector per free column of the reduced form.
std::vector<RatVec> kernel(const RatMatrix& a);

/// Reduced row echelon form (pivot entries 1). Returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a);

/// Dense integer matrix with 64-bit entries, used for fast rank checks.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Rank modulo the Mersenne prime 2^61-1. Never exceeds the rank over Q.
std::size_t rank_mod_p(const IntMatrix& a);

/// Exact rank over Q of an integer matrix. Tries the modular rank first and
/// only falls back to Bareiss when that is not already maximal.
std::size_t exact_rank(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);

}  // namespace thetanil
