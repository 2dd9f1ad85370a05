#include "alcove/lp.hpp"

#include <cassert>
#include <limits>

#include "alcove/error.hpp"

namespace alcove {

namespace {

// Dense tableau simplex over Q. Free variables are split into positive and
// negative parts, every row is an equality with rhs >= 0, and the starting
// basis is built from slacks where possible and artificials otherwise.
class Simplex {
 public:
  Simplex(const RatVec& objective, const std::vector<LinConstraint>& cons,
          std::size_t dim)
      : dim_(dim) {
    for (const auto& c : cons) {
      if (c.rel == Rel::lt || c.rel == Rel::gt)
        throw domain_error("simplex: strict constraint not allowed here");
      if (c.normal.size() != dim) throw domain_error("simplex: dimension mismatch");
    }
    const std::size_t m = cons.size();
    nstruct_ = 2 * dim_;
    std::size_t nslack = 0;
    for (const auto& c : cons)
      if (c.rel != Rel::eq) ++nslack;
    ncols_ = nstruct_ + nslack + m;  // at most one artificial per row
    t_.assign(m, std::vector<Rational>(ncols_));
    rhs_.assign(m, Rational(0));
    basis_.assign(m, 0);
    nart_ = 0;

    std::size_t slack_at = nstruct_;
    for (std::size_t i = 0; i < m; ++i) {
      RatVec a = cons[i].normal;
      Rational b = cons[i].rhs;
      Rel rel = cons[i].rel;
      if (rel == Rel::ge) {  // normalize to <=
        a = -a;
        b = -b;
        rel = Rel::le;
      }
      int flip = b < 0 ? -1 : 1;
      for (std::size_t j = 0; j < dim_; ++j) {
        t_[i][j] = a[j] * flip;
        t_[i][dim_ + j] = -a[j] * flip;
      }
      rhs_[i] = b * flip;
      if (rel == Rel::le) {
        t_[i][slack_at] = flip;
        if (flip > 0) {
          basis_[i] = slack_at;  // slack is a valid basic variable
        } else {
          basis_[i] = add_artificial(i);
        }
        ++slack_at;
      } else {
        basis_[i] = add_artificial(i);
      }
    }
    first_art_ = nstruct_ + nslack;
    objective_ = objective;
  }

  LpStatus solve() {
    if (nart_ > 0) {
      std::vector<Rational> cost(ncols_, Rational(0));
      for (std::size_t j = first_art_; j < first_art_ + nart_; ++j) cost[j] = -1;
      run(cost, /*allow_art=*/true);
      Rational v = objective_value(cost);
      if (v != 0) return LpStatus::infeasible;
      evict_artificials();
    }
    std::vector<Rational> cost(ncols_, Rational(0));
    for (std::size_t j = 0; j < dim_; ++j) {
      cost[j] = objective_[j];
      cost[dim_ + j] = -objective_[j];
    }
    bool bounded = run(cost, /*allow_art=*/false);
    return bounded ? LpStatus::optimal : LpStatus::unbounded;
  }

  RatVec point() const {
    RatVec x(dim_);
    for (std::size_t i = 0; i < t_.size(); ++i) {
      std::size_t b = basis_[i];
      if (b < dim_)
        x[b] += rhs_[i];
      else if (b < 2 * dim_)
        x[b - dim_] -= rhs_[i];
    }
    return x;
  }

  Rational value() const {
    Rational v = 0;
    RatVec x = point();
    for (std::size_t j = 0; j < dim_; ++j) v += objective_[j] * x[j];
    return v;
  }

 private:
  // Artificial columns occupy the tail region, allocated consecutively.
  std::size_t add_artificial(std::size_t row) {
    std::size_t col = ncols_ - t_.size() + nart_;
    t_[row][col] = 1;
    ++nart_;
    return col;
  }

  Rational objective_value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < t_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  // Bland's rule pivoting until optimal (returns true) or unbounded (false).
  bool run(const std::vector<Rational>& cost, bool allow_art) {
    const std::size_t m = t_.size();
    for (;;) {
      // reduced costs recomputed from scratch; the tableaus here are tiny
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < (allow_art ? ncols_ : first_art_); ++j) {
        bool basic = false;
        for (std::size_t i = 0; i < m; ++i)
          if (basis_[i] == j) {
            basic = true;
            break;
          }
        if (basic) continue;
        Rational rc = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (cost[basis_[i]] != 0) rc -= cost[basis_[i]] * t_[i][j];
        if (rc > 0) {
          enter = j;
          break;  // Bland: lowest index
        }
      }
      if (enter == ncols_) return true;

      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t m = t_.size();
    Rational inv = Rational(1) / t_[r][c];
    for (std::size_t j = 0; j < ncols_; ++j) t_[r][j] *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < ncols_; ++j) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Pivot basic artificials out after phase 1 so they cannot re-enter.
  void evict_artificials() {
    const std::size_t m = t_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] < first_art_) continue;
      assert(rhs_[i] == 0);
      std::size_t c = first_art_;
      for (std::size_t j = 0; j < first_art_; ++j)
        if (t_[i][j] != 0) {
          c = j;
          break;
        }
      if (c < first_art_) {
        pivot(i, c);
      }
      // a fully zero row is redundant; leaving the artificial basic at zero
      // is harmless because phase 2 never lets artificial columns enter
    }
  }

  std::size_t dim_, nstruct_, ncols_, nart_ = 0, first_art_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  RatVec objective_;
};

}  // namespace

LpResult lp_maximize(const RatVec& objective,
                     const std::vector<LinConstraint>& constraints, std::size_t dim) {
  Simplex s(objective, constraints, dim);
  LpStatus st = s.solve();
  if (st != LpStatus::optimal) return {st, RatVec(), Rational(0)};
  return {st, s.point(), s.value()};
}

Feasibility lp_feasible(const std::vector<LinConstraint>& constraints, std::size_t dim) {
  bool any_strict = false;
  for (const auto& c : constraints)
    if (c.rel == Rel::lt || c.rel == Rel::gt) any_strict = true;

  if (!any_strict) {
    RatVec zero(dim);
    LpResult r = lp_maximize(zero, constraints, dim);
    if (r.status == LpStatus::infeasible) return {false, RatVec()};
    return {true, r.point};
  }

  // Gap variable t as coordinate dim: strict rows get a margin of t,
  // t is capped by 1 and maximized.
  std::vector<LinConstraint> relaxed;
  relaxed.reserve(constraints.size() + 2);
  for (const auto& c : constraints) {
    RatVec a(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) a[j] = c.normal[j];
    Rel rel = c.rel;
    if (c.rel == Rel::gt) {
      a[dim] = -1;
      rel = Rel::ge;
    } else if (c.rel == Rel::lt) {
      a[dim] = 1;
      rel = Rel::le;
    }
    relaxed.push_back({a, rel, c.rhs});
  }
  {
    RatVec cap(dim + 1);
    cap[dim] = 1;
    relaxed.push_back({cap, Rel::le, Rational(1)});
    RatVec nonneg(dim + 1);
    nonneg[dim] = 1;
    relaxed.push_back({nonneg, Rel::ge, Rational(0)});
  }
  RatVec obj(dim + 1);
  obj[dim] = 1;
  LpResult r = lp_maximize(obj, relaxed, dim + 1);
  if (r.status != LpStatus::optimal || r.value <= 0) return {false, RatVec()};
  RatVec x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = r.point[j];
  return {true, x};
}

}  // namespace alcove
