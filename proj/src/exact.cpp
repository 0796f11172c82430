#include "thetanil/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace thetanil {

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("not a rational: '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("not a rational: '" + s + "'");
  Integer d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

Integer lcm_of_denominators(const RatVec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

RatVec RatMatrix::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec RatMatrix::column(std::size_t c) const {
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatVec RatMatrix::operator*(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RatVec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

namespace {

// Integer matrix obtained by scaling every row of a by the lcm of its
// denominators; the row space is unchanged.
std::vector<Integer> integer_rows(const RatMatrix& a) {
  std::vector<Integer> m(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational& q = a(r, c);
      m[r * a.cols() + c] = q.get_num() * (l / q.get_den());
    }
  }
  return m;
}

// Fraction-free row echelon form in place; returns the pivot columns. Every
// entry stays a minor of the input, so the divisions are exact.
std::vector<std::size_t> bareiss_echelon(std::vector<Integer>& m, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
    const Integer piv = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer& lead = m[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = m[i * cols + j];
        t = piv * x;
        t -= lead * m[r * cols + j];
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  auto m = integer_rows(a);
  return bareiss_echelon(m, a.rows(), a.cols()).size();
}

std::vector<std::size_t> rref(RatMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return {};
  auto m = integer_rows(a);
  auto pivots = bareiss_echelon(m, rows, cols);
  // Back substitution over Q on the (much smaller) echelon form.
  RatMatrix e(rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Integer& piv = m[r * cols + pivots[r]];
    for (std::size_t c = pivots[r]; c < cols; ++c) {
      if (m[r * cols + c] == 0) continue;
      e(r, c) = Rational(m[r * cols + c], piv);
      e(r, c).canonicalize();
    }
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t up = 0; up < r; ++up) {
      Rational f = e(up, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t c = pc; c < cols; ++c)
        if (sgn(e(r, c)) != 0) e(up, c) -= f * e(r, c);
    }
  }
  a = std::move(e);
  return pivots;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::vector<RatVec> kernel(const RatMatrix& a) {
  RatMatrix e = a;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(std::int64_t x) {
  std::int64_t r = x % static_cast<std::int64_t>(kPrime);
  if (r < 0) r += static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& a) {
  const std::size_t rows = a.rows, cols = a.cols;
  std::vector<std::uint64_t> m(rows * cols);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = reduce(a.data[i]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
    const std::uint64_t inv = powmod(m[r * cols + c], kPrime - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = m[i * cols + c];
      if (f == 0) continue;
      f = mulmod(f, inv);
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t s = mulmod(f, m[r * cols + j]);
        std::uint64_t& x = m[i * cols + j];
        x = x >= s ? x - s : x + kPrime - s;
      }
    }
    ++r;
  }
  return r;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix m(a.rows, a.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) m(r, c) = Rational(static_cast<long>(a(r, c)));
  return m;
}

std::size_t exact_rank(const IntMatrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  const std::size_t modular = rank_mod_p(a);
  if (modular == std::min(a.rows, a.cols)) return modular;
  std::vector<Integer> m(a.data.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<long>(a.data[i]);
  return bareiss_echelon(m, a.rows, a.cols).size();
}

}  // namespace thetanil
