#include "alcove/root_system.hpp"

#include <algorithm>
#include <map>

#include "alcove/error.hpp"

namespace alcove {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw domain_error(std::string("unknown family '") + c + "'");
  }
}

bool RootSystemId::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string RootSystemId::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

// Cartan integers c(i,j) = 2(a_i, a_j)/(a_i, a_i) and squared lengths d_i
// (long roots = 2) in Bourbaki node order. The fixed node-order table:
//   A_n: path 1-2-...-n
//   B_n: path with alpha_n short
//   C_n: path with alpha_n long
//   D_n: path 1..n-2 forking to n-1 and n
//   E_n: path 1-3-4-...-n with 2 attached to 4
//   F_4: 1-2=>3-4 (1,2 long)
//   G_2: 1<=(triple)2 with alpha_1 long, so the marks come out (2,3)
struct CartanData {
  std::vector<std::vector<long>> c;
  std::vector<Rational> d;
};

CartanData cartan_data(const RootSystemId& id) {
  const int n = id.rank;
  CartanData out;
  out.c.assign(n, std::vector<long>(n, 0));
  out.d.assign(n, Rational(2));
  for (int i = 0; i < n; ++i) out.c[i][i] = 2;
  auto bond = [&](int i, int j) {  // single edge, 1-based
    out.c[i - 1][j - 1] = -1;
    out.c[j - 1][i - 1] = -1;
  };
  switch (id.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      out.d[n - 1] = 1;  // alpha_n short
      out.c[n - 2][n - 1] = -1;
      out.c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      for (int i = 0; i < n - 1; ++i) out.d[i] = 1;  // alpha_1..alpha_{n-1} short
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      out.c[n - 2][n - 1] = -2;
      out.c[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 1; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      bond(2, 4);
      break;
    case Family::F:
      out.d[2] = 1;
      out.d[3] = 1;  // alpha_3, alpha_4 short
      bond(1, 2);
      bond(3, 4);
      out.c[1][2] = -1;
      out.c[2][1] = -2;
      break;
    case Family::G:
      out.d[1] = Rational(2, 3);  // alpha_2 short
      out.c[0][1] = -1;
      out.c[1][0] = -3;
      break;
  }
  return out;
}

}  // namespace

RootSystem RootSystem::build(const RootSystemId& id, const Rational& gram_scale) {
  if (!id.valid()) throw domain_error("invalid rank for family: " + id.name());
  if (gram_scale <= 0) throw domain_error("gram scale must be positive");
  RootSystem rs;
  rs.id_ = id;
  const int n = id.rank;
  CartanData cd = cartan_data(id);

  rs.cartan_ = RatMat(n, n);
  rs.gram_ = RatMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.cartan_(i, j) = cd.c[i][j];
      rs.gram_(i, j) = Rational(cd.c[i][j]) * cd.d[i] / 2 * gram_scale;
    }

  // Closure over root strings, level by level in height: beta + a_i is a root
  // iff q = p - <a_i^vee, beta> >= 1, where p counts how far the a_i-string
  // extends downward from beta. Lower roots are always already known.
  std::set<std::vector<Rational>> seen;
  std::vector<RatVec> frontier;
  for (int i = 0; i < n; ++i) {
    RatVec a = RatVec::unit(n, i);
    seen.insert(a.coords());
    frontier.push_back(a);
    rs.positive_roots_.push_back(a);
  }
  auto pair_with_simple = [&](int i, const RatVec& beta) {
    long v = 0;
    for (int j = 0; j < n; ++j)
      if (beta[j] != 0) v += static_cast<long>(num(beta[j])) * cd.c[i][j];
    return v;
  };
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        long p = 0;
        RatVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (!seen.count(down.coords())) break;
          ++p;
        }
        if (p - pair_with_simple(i, beta) >= 1) {
          RatVec up = beta;
          up[i] += 1;
          if (seen.insert(up.coords()).second) next.push_back(up);
        }
      }
    }
    for (const auto& r : next) rs.positive_roots_.push_back(r);
    frontier = std::move(next);
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end());
  rs.positive_set_ = std::move(seen);

  // Highest root: the unique root of maximal height.
  auto height = [](const RatVec& v) {
    Rational h = 0;
    for (std::size_t k = 0; k < v.size(); ++k) h += v[k];
    return h;
  };
  const RatVec* best = nullptr;
  for (const auto& r : rs.positive_roots_)
    if (!best || height(r) > height(*best)) best = &r;
  rs.highest_root_ = *best;
  for (int i = 0; i < n; ++i)
    rs.marks_.push_back(static_cast<long>(num(rs.highest_root_[i])));

  // Fundamental coweights: columns of the inverse Gram matrix.
  RatMat ginv = inverse(rs.gram_);
  for (int i = 0; i < n; ++i) rs.coweights_.push_back(ginv.col(i));

  for (int i = 1; i <= n; ++i)
    if (rs.marks_[i - 1] == 1) rs.minuscule_.push_back(i);
  return rs;
}

std::vector<RatVec> RootSystem::all_roots() const {
  std::vector<RatVec> out;
  out.reserve(2 * positive_roots_.size());
  for (const auto& r : positive_roots_) {
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

bool RootSystem::is_minuscule(int j) const {
  return std::find(minuscule_.begin(), minuscule_.end(), j) != minuscule_.end();
}

Rational RootSystem::inner(const RatVec& x, const RatVec& y) const {
  return alcove::inner(gram_, x, y);
}

Rational RootSystem::pair_coroot(const RatVec& alpha, const RatVec& x) const {
  return 2 * inner(alpha, x) / inner(alpha, alpha);
}

bool RootSystem::is_root(const RatVec& v) const {
  if (positive_set_.count(v.coords())) return true;
  return positive_set_.count((-v).coords()) > 0;
}

bool RootSystem::is_positive_root(const RatVec& v) const {
  return positive_set_.count(v.coords()) > 0;
}

RatVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw domain_error("simple root index out of range");
  return RatVec::unit(rank(), i - 1);
}

RatVec RootSystem::root_of_node(int node) const {
  if (node == 0) return -highest_root_;
  return simple_root(node);
}

std::vector<RatVec> RootSystem::alcove_vertices() const {
  std::vector<RatVec> out;
  out.push_back(RatVec(rank()));
  for (int i = 1; i <= rank(); ++i)
    out.push_back(coweight(i) / Rational(mark(i)));
  return out;
}

bool RootSystem::is_simple_system(int j) const {
  if (j < 1 || j > rank()) throw domain_error("index out of range");
  const int n = rank();
  // Basis matrix of Pi_j: column for -alpha_0 in slot j, alpha_i elsewhere.
  RatMat B(n, n);
  for (int col = 1; col <= n; ++col) {
    RatVec r = (col == j) ? -highest_root_ : simple_root(col);
    for (int row = 0; row < n; ++row) B(row, col - 1) = r[row];
  }
  RatMat Binv;
  try {
    Binv = inverse(B);
  } catch (const domain_error&) {
    return false;  // not even a basis
  }
  for (const auto& beta : all_roots()) {
    RatVec c = Binv * beta;
    int s = 0;
    for (int k = 0; k < n; ++k) {
      if (den(c[k]) != 1) return false;
      int sk = sign_of(c[k]);
      if (sk == 0) continue;
      if (s == 0)
        s = sk;
      else if (s != sk)
        return false;
    }
  }
  return true;
}

}  // namespace alcove
