#include "linelab/rational_simplex.hpp"

#include <stdexcept>

namespace linelab {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, std::vector<Rational>(cols + 1)), cost_(cols + 1), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  Rational& rhs(std::size_t r) { return rows_[r][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t row_count() const { return rows_.size(); }

  // Loads `costs` as the objective and prices out the current basis.
  void set_objective(const std::vector<Rational>& costs) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = costs[j];
    cost_[cols_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cb = costs[basis_[i]];
      if (sgn(cb) != 0) subtract_multiple(cost_, rows_[i], cb);
    }
  }

  Rational objective_value() const { return -cost_[cols_]; }

  // Bland's rule: lowest-index improving column, then lowest basis index
  // among the ratio-test ties.
  LpStatus optimize(const std::vector<bool>& allowed, std::uint64_t& pivots) {
    Rational best_ratio;
    Rational ratio;
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && sgn(cost_[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return LpStatus::Optimal;
      std::size_t leave = rows_.size();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (sgn(a) <= 0) continue;
        ratio = rows_[i][cols_] / a;
        if (leave == rows_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return LpStatus::Unbounded;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational factor = rows_[i][c];
      subtract_sparse(rows_[i], prow, factor);
    }
    if (sgn(cost_[c]) != 0) {
      const Rational factor = cost_[c];
      subtract_sparse(cost_, prow, factor);
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  void subtract_sparse(std::vector<Rational>& row, const std::vector<Rational>& prow, const Rational& factor) {
    for (std::size_t j : nonzero_) {
      mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
      mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch_.get_mpq_t());
    }
  }

  void subtract_multiple(std::vector<Rational>& row, const std::vector<Rational>& prow, const Rational& factor) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(prow[j]) == 0) continue;
      mpq_mul(scratch_.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
      mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch_.get_mpq_t());
    }
  }

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  Rational scratch_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t nvar = static_cast<std::size_t>(lp.variables);
  if (lp.objective.size() != nvar) throw std::invalid_argument("objective length must equal the variable count");

  // Normalize to nonnegative right-hand sides.
  struct Row {
    std::vector<std::pair<int, Rational>> terms;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size());
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : lp.constraints) {
    Row r{c.terms, c.relation, c.rhs};
    for (const auto& [v, coeff] : r.terms)
      if (v < 0 || static_cast<std::size_t>(v) >= nvar) throw std::invalid_argument("constraint references an unknown variable");
    if (sgn(r.rhs) < 0) {
      r.rhs = -r.rhs;
      for (auto& term : r.terms) term.second = -term.second;
      if (r.relation == Relation::LessEqual) r.relation = Relation::GreaterEqual;
      else if (r.relation == Relation::GreaterEqual) r.relation = Relation::LessEqual;
    }
    if (r.relation != Relation::Equal) ++slack_count;
    if (r.relation != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(r));
  }

  const std::size_t first_slack = nvar;
  const std::size_t first_artificial = nvar + slack_count;
  const std::size_t cols = first_artificial + artificial_count;
  Tableau t(rows.size(), cols);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [v, coeff] : rows[i].terms) t.at(i, static_cast<std::size_t>(v)) += coeff;
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        t.at(i, next_slack) = 1;
        t.basis()[i] = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_artificial) = 1;
        t.basis()[i] = next_artificial++;
        break;
      case Relation::Equal:
        t.at(i, next_artificial) = 1;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  LpSolution out;
  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed, out.pivots);
    if (sgn(t.objective_value()) < 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive zero-valued artificials out of the basis; rows where that is
    // impossible are linearly dependent and dropped.
    for (std::size_t i = 0; i < t.row_count();) {
      if (t.basis()[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t enter = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (sgn(t.at(i, j)) != 0) {
          enter = j;
          break;
        }
      if (enter == first_artificial) {
        t.erase_row(i);
        continue;
      }
      t.pivot(i, enter);
      ++out.pivots;
      ++i;
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < nvar; ++j) phase2[j] = lp.objective[j];
  t.set_objective(phase2);
  const LpStatus status = t.optimize(allowed, out.pivots);
  out.status = status;
  if (status != LpStatus::Optimal) return out;
  out.objective = t.objective_value();
  out.values.assign(nvar, Rational(0));
  for (std::size_t i = 0; i < t.row_count(); ++i)
    if (t.basis()[i] < nvar) out.values[t.basis()[i]] = t.rhs(i);
  return out;
}

}  // namespace linelab
