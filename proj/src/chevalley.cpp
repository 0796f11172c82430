#include "thetanil/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace thetanil {

namespace {

// Structure constants for positive pairs are built height by height; the
// general N is reduced to those through N_{-a,-b} = -N_{a,b} and
// N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) for a+b+c = 0.
class Builder {
 public:
  explicit Builder(const RootSystem& rs) : rs_(rs), n_(rs.size()), pos_(rs.npos * rs.npos, 0) {}

  std::vector<int> run() {
    const int np = rs_.npos;
    for (int xi = 0; xi < np; ++xi) {
      if (rs_.height(xi) == 1) continue;
      // Special pairs (a, b): a + b = xi, a < b in root order.
      std::vector<std::pair<int, int>> special;
      for (int a = 0; a < xi; ++a) {
        int b = rs_.sum(xi, rs_.neg(a));
        if (b >= 0 && rs_.positive(b) && a < b) special.emplace_back(a, b);
      }
      if (special.empty()) throw std::logic_error("non-simple root without a decomposition");
      const auto [a, b] = special.front();
      set(a, b, string_p(a, b) + 1);
      for (std::size_t k = 1; k < special.size(); ++k) {
        const auto [g, d] = special[k];
        Rational t = 0;
        const int bg = rs_.sum(b, rs_.neg(g));
        if (bg >= 0) t += Rational(general(b, rs_.neg(g)) * general(a, rs_.neg(d)), rs_.norm2(bg));
        const int ag = rs_.sum(a, rs_.neg(g));
        if (ag >= 0) t += Rational(general(rs_.neg(g), a) * general(b, rs_.neg(d)), rs_.norm2(ag));
        t *= Rational(rs_.norm2(xi), pos(a, b));
        t.canonicalize();
        if (t.get_den() != 1) throw std::logic_error("non-integral structure constant");
        set(g, d, static_cast<int>(t.get_num().get_si()));
      }
    }
    std::vector<int> table(n_ * n_, 0);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (rs_.sum(x, y) >= 0) table[x * n_ + y] = general(x, y);
    return table;
  }

 private:
  int string_p(int a, int b) const {
    int p = 0, cur = b;
    while (true) {
      int next = rs_.sum(cur, rs_.neg(a));
      if (next < 0) break;
      ++p;
      cur = next;
    }
    return p;
  }
  int pos(int a, int b) const { return pos_[a * rs_.npos + b]; }
  void set(int a, int b, int v) {
    pos_[a * rs_.npos + b] = v;
    pos_[b * rs_.npos + a] = -v;
  }
  int general(int a, int b) const {
    if (rs_.sum(a, b) < 0) return 0;
    const bool pa = rs_.positive(a), pb = rs_.positive(b);
    if (pa && pb) {
      int v = pos(a, b);
      if (v == 0) throw std::logic_error("structure constant requested before it was computed");
      return v;
    }
    if (!pa && !pb) return -general(rs_.neg(a), rs_.neg(b));
    const int c = rs_.neg(rs_.sum(a, b));
    if (rs_.positive(b) == rs_.positive(c)) {
      Rational v(general(b, c) * rs_.norm2(c), rs_.norm2(a));
      v.canonicalize();
      return static_cast<int>(v.get_num().get_si());
    }
    Rational v(general(c, a) * rs_.norm2(c), rs_.norm2(b));
    v.canonicalize();
    return static_cast<int>(v.get_num().get_si());
  }

  const RootSystem& rs_;
  int n_;
  std::vector<int> pos_;
};

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs)
    : rs_(std::make_shared<const RootSystem>(std::move(rs))), nroots_(rs_->size()), rank_(rs_->rank) {
  n_ = Builder(*rs_).run();
  coroots_.reserve(nroots_);
  for (int a = 0; a < nroots_; ++a) coroots_.push_back(rs_->coroot(a));
  RatMatrix c(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c(i, j) = rs_->cartan[i][j];
  cartan_inverse_ = RatMatrix(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    RatVec e(rank_);
    e[j] = 1;
    auto col = solve(c, e);
    if (!col) throw std::logic_error("singular Cartan matrix");
    for (int i = 0; i < rank_; ++i) cartan_inverse_(i, j) = (*col)[i];
  }
}

ChevalleyAlgebra build_algebra(const RootSystem& rs) { return ChevalleyAlgebra(rs); }

std::vector<std::pair<int, int>> ChevalleyAlgebra::basis_bracket(int i, int j) const {
  std::vector<std::pair<int, int>> out;
  const bool ci = is_cartan_index(i), cj = is_cartan_index(j);
  if (ci && cj) return out;
  if (ci) {
    const int v = rs_->pair(j, i - nroots_);
    if (v) out.emplace_back(j, v);
    return out;
  }
  if (cj) {
    const int v = rs_->pair(i, j - nroots_);
    if (v) out.emplace_back(i, -v);
    return out;
  }
  if (j == rs_->neg(i)) {
    // h_alpha in the basis h_1..h_l, integral coefficients.
    for (int k = 0; k < rank_; ++k) {
      const Rational& c = coroots_[i][k];
      if (sgn(c)) out.emplace_back(nroots_ + k, static_cast<int>(c.get_num().get_si()));
    }
    return out;
  }
  const int s = rs_->sum(i, j);
  if (s >= 0) out.emplace_back(s, N(i, j));
  return out;
}

LieElement ChevalleyAlgebra::basis(int k) const {
  LieElement x(dim());
  x[k] = 1;
  return x;
}

LieElement ChevalleyAlgebra::cartan_element(const RatVec& c) const {
  if (static_cast<int>(c.size()) != rank_) throw std::invalid_argument("cartan_element: wrong length");
  LieElement x(dim());
  for (int i = 0; i < rank_; ++i) x[nroots_ + i] = c[i];
  return x;
}

LieElement ChevalleyAlgebra::cartan_from_values(const RatVec& values) const {
  return cartan_element(cartan_inverse_ * values);
}

RatVec ChevalleyAlgebra::cartan_values(const LieElement& h) const {
  for (int a = 0; a < nroots_; ++a)
    if (sgn(h[a])) throw std::invalid_argument("cartan_values: element is not in the Cartan subalgebra");
  RatVec v(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (rs_->cartan[i][j] && sgn(h[nroots_ + j])) v[i] += h[nroots_ + j] * rs_->cartan[i][j];
  return v;
}

Rational ChevalleyAlgebra::root_value(const LieElement& h, int alpha) const {
  Rational v = 0;
  for (int j = 0; j < rank_; ++j)
    if (sgn(h[nroots_ + j])) v += h[nroots_ + j] * rs_->pair(alpha, j);
  return v;
}

std::string ChevalleyAlgebra::basis_label(int k) const {
  std::ostringstream os;
  if (is_cartan_index(k)) {
    os << "h[" << (k - nroots_ + 1) << "]";
    return os.str();
  }
  os << "x[";
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << rs_->roots[k][i];
  os << "]";
  return os.str();
}

int ChevalleyAlgebra::basis_from_label(const std::string& label) const {
  if (label.size() < 4 || label[1] != '[' || label.back() != ']') return -1;
  const std::string body = label.substr(2, label.size() - 3);
  if (label[0] == 'h') {
    try {
      std::size_t used = 0;
      int i = std::stoi(body, &used);
      if (used != body.size() || i < 1 || i > rank_) return -1;
      return nroots_ + i - 1;
    } catch (const std::exception&) {
      return -1;
    }
  }
  if (label[0] != 'x') return -1;
  IntVec coords;
  std::stringstream ss(body);
  std::string tok;
  try {
    while (std::getline(ss, tok, ',')) coords.push_back(std::stoi(tok));
  } catch (const std::exception&) {
    return -1;
  }
  if (static_cast<int>(coords.size()) != rank_) return -1;
  return rs_->find(coords);
}

LieElement bracket(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y) {
  const int d = alg.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("bracket: element has the wrong length");
  std::vector<int> nx, ny;
  for (int i = 0; i < d; ++i) {
    if (sgn(x[i])) nx.push_back(i);
    if (sgn(y[i])) ny.push_back(i);
  }
  LieElement z(d);
  Rational t;
  for (int i : nx)
    for (int j : ny) {
      auto terms = alg.basis_bracket(i, j);
      if (terms.empty()) continue;
      t = x[i] * y[j];
      for (auto [k, c] : terms) z[k] += t * c;
    }
  return z;
}

LieElement add(const LieElement& x, const LieElement& y) {
  LieElement z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y[i];
  return z;
}

LieElement sub(const LieElement& x, const LieElement& y) {
  LieElement z(x);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y[i];
  return z;
}

LieElement scale(const Rational& c, const LieElement& x) {
  LieElement z(x);
  for (auto& v : z) v *= c;
  return z;
}

bool is_zero(const LieElement& x) {
  for (const auto& v : x)
    if (sgn(v)) return false;
  return true;
}

RatMatrix ad_matrix(const ChevalleyAlgebra& alg, const LieElement& x, const std::vector<LieElement>& domain,
                    const std::vector<LieElement>& codomain) {
  const std::size_t d = alg.dim();
  RatMatrix cod(d, codomain.size());
  for (std::size_t c = 0; c < codomain.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) cod(r, c) = codomain[c][r];
  RatMatrix out(codomain.size(), domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    LieElement img = bracket(alg, x, domain[i]);
    auto coeffs = solve(cod, img);
    if (!coeffs) {
      std::string msg = "ad_matrix: image of domain element " + std::to_string(i) + " leaves the codomain span:";
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(img[k])) msg += " " + to_string(img[k]) + "*" + alg.basis_label(static_cast<int>(k));
      throw std::invalid_argument(msg);
    }
    for (std::size_t r = 0; r < codomain.size(); ++r) out(r, i) = (*coeffs)[r];
  }
  return out;
}

RatMatrix ad_matrix(const ChevalleyAlgebra& alg, const LieElement& x) {
  const int d = alg.dim();
  RatMatrix out(d, d);
  for (int j = 0; j < d; ++j) {
    if (is_zero(x)) break;
    LieElement img = bracket(alg, x, alg.basis(j));
    for (int i = 0; i < d; ++i) out(i, j) = img[i];
  }
  return out;
}

namespace {

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!sgn(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace

bool is_nilpotent(const ChevalleyAlgebra& alg, const LieElement& x) {
  if (is_zero(x)) return true;
  const RatMatrix a = ad_matrix(alg, x);
  RatMatrix p = a;
  std::size_t prev = rank(p);
  while (prev > 0) {
    p = multiply(p, a);
    std::size_t r = rank(p);
    if (r == prev) return false;
    prev = r;
  }
  return true;
}

Rational killing_form(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y) {
  const RatMatrix ax = ad_matrix(alg, x), ay = ad_matrix(alg, y);
  Rational tr = 0;
  const int d = alg.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (sgn(ax(i, k)) && sgn(ay(k, i))) tr += ax(i, k) * ay(k, i);
  return tr;
}

bool is_sl2_triple(const ChevalleyAlgebra& alg, const Sl2Triple& t) {
  if (is_zero(t.e)) return false;
  return bracket(alg, t.h, t.e) == scale(2, t.e) && bracket(alg, t.h, t.f) == scale(-2, t.f) &&
         bracket(alg, t.e, t.f) == t.h;
}

std::optional<Sl2Triple> complete_sl2(const ChevalleyAlgebra& alg, const LieElement& h, const LieElement& e,
                                      const std::vector<LieElement>& f_space) {
  if (bracket(alg, h, e) != scale(2, e)) throw std::invalid_argument("complete_sl2: [h,e] != 2e");
  for (const auto& v : f_space)
    if (bracket(alg, h, v) != scale(-2, v)) throw std::invalid_argument("complete_sl2: [h,v] != -2v for some v");
  if (is_zero(e) || f_space.empty()) return std::nullopt;
  const int d = alg.dim();
  RatMatrix m(d, f_space.size());
  for (std::size_t c = 0; c < f_space.size(); ++c) {
    LieElement img = bracket(alg, e, f_space[c]);
    for (int r = 0; r < d; ++r) m(r, c) = img[r];
  }
  auto coeffs = solve(m, h);
  if (!coeffs) return std::nullopt;
  LieElement f(d);
  for (std::size_t c = 0; c < f_space.size(); ++c)
    if (sgn((*coeffs)[c]))
      for (int r = 0; r < d; ++r)
        if (sgn(f_space[c][r])) f[r] += (*coeffs)[c] * f_space[c][r];
  Sl2Triple t{h, e, f};
  if (!is_sl2_triple(alg, t)) throw std::logic_error("complete_sl2: solution fails the sl2 relations");
  return t;
}

}  // namespace thetanil
