#include "aperykit/monomial_order.hpp"

#include <algorithm>
#include <sstream>

#include "aperykit/errors.hpp"
#include "exact_rank.hpp"

namespace aperykit {
namespace {

__extension__ typedef __int128 Wide;

// row . (u - v), accumulated in 128 bits. Each product of two 64-bit values
// fits; the running sum is checked.
Wide weighted_difference(const WeightRow& row, const ExponentVector& u,
                         const ExponentVector& v) {
  Wide acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0 || u[i] == v[i]) continue;
    const Wide term = static_cast<Wide>(row[i]) *
                      (static_cast<Wide>(u[i]) - static_cast<Wide>(v[i]));
    if (__builtin_add_overflow(acc, term, &acc)) {
      throw OverflowError("weight overflow while comparing monomials");
    }
  }
  return acc;
}

std::string join_one_based(std::span<const std::size_t> xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i] + 1;
  return out.str();
}

}  // namespace

OrderSpec::OrderSpec(std::size_t num_vars, std::vector<WeightRow> rows,
                     std::string label)
    : num_vars_(num_vars), rows_(std::move(rows)), label_(std::move(label)) {
  if (num_vars_ == 0) throw InvalidOrder("an ordering needs at least one variable");
  for (const auto& row : rows_) {
    if (row.size() != num_vars_) {
      throw LengthMismatch("weight row of length " + std::to_string(row.size()) +
                           " for " + std::to_string(num_vars_) + " variables");
    }
  }
  for (std::size_t c = 0; c < num_vars_; ++c) {
    const auto first = std::find_if(rows_.begin(), rows_.end(),
                                    [c](const WeightRow& r) { return r[c] != 0; });
    if (first == rows_.end() || (*first)[c] < 0) {
      throw InvalidOrder("variable " + std::to_string(c) +
                         " is not greater than 1 under " + label_);
    }
  }
  std::vector<std::vector<std::int64_t>> as_matrix(rows_.begin(), rows_.end());
  if (detail::exact_rank(detail::to_big(as_matrix), num_vars_) != num_vars_) {
    throw InvalidOrder("weight rows of " + label_ + " do not define a total order");
  }
}

OrderSpec OrderSpec::with_label(std::string label) const {
  OrderSpec copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

OrderSpec OrderSpec::lex(std::size_t num_vars) {
  std::vector<WeightRow> rows;
  for (std::size_t i = 0; i < num_vars; ++i) {
    WeightRow r(num_vars, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  return OrderSpec(num_vars, std::move(rows), "lex");
}

OrderSpec OrderSpec::grevlex(std::size_t num_vars) {
  std::vector<WeightRow> rows{WeightRow(num_vars, 1)};
  for (std::size_t i = num_vars; i-- > 1;) {
    WeightRow r(num_vars, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
  }
  return OrderSpec(num_vars, std::move(rows), "grevlex");
}

std::strong_ordering OrderSpec::compare(const ExponentVector& u,
                                        const ExponentVector& v) const {
  if (u.size() != num_vars_ || v.size() != num_vars_) {
    throw LengthMismatch("comparing vectors of length " + std::to_string(u.size()) +
                         " and " + std::to_string(v.size()) + " under an order on " +
                         std::to_string(num_vars_) + " variables");
  }
  for (const auto& row : rows_) {
    const Wide d = weighted_difference(row, u, v);
    if (d < 0) return std::strong_ordering::less;
    if (d > 0) return std::strong_ordering::greater;
  }
  // Rows have full rank, so equal weights on every row means u == v.
  return std::strong_ordering::equal;
}

InnerOrder InnerOrder::default_for(std::size_t k, std::size_t eliminated) {
  InnerOrder o;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != eliminated) o.sequence.push_back(i);
  }
  return o;
}

OrderSpec apery_order(std::span<const std::int64_t> weights, std::size_t j,
                      const InnerOrder& inner) {
  const std::size_t k = weights.size();
  if (k == 0 || j >= k) {
    throw InvalidArgument("generator index " + std::to_string(j + 1) +
                          " out of range 1.." + std::to_string(k));
  }
  for (std::int64_t w : weights) {
    if (w <= 0) throw InvalidArgument("Apery ordering weights must be positive");
  }
  std::vector<std::size_t> sorted = inner.sequence;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != InnerOrder::default_for(k, j).sequence) {
    throw InvalidPermutation("inner sequence (" + join_one_based(inner.sequence) +
                             ") is not a permutation of the generators other than " +
                             std::to_string(j + 1));
  }

  const std::size_t m = k + 1;
  std::vector<WeightRow> rows;
  WeightRow x_row(m, 0);
  x_row[0] = 1;
  rows.push_back(std::move(x_row));

  WeightRow grade(m, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != j) grade[i + 1] = weights[i];
  }
  rows.push_back(std::move(grade));

  auto selector = [m](std::size_t var, std::int64_t sign) {
    WeightRow r(m, 0);
    r[var + 1] = sign;
    return r;
  };
  if (inner.flavor == InnerFlavor::Lex) {
    for (std::size_t v : inner.sequence) rows.push_back(selector(v, 1));
  } else {
    for (auto it = inner.sequence.rbegin(); it != inner.sequence.rend(); ++it) {
      rows.push_back(selector(*it, -1));
    }
  }
  rows.push_back(selector(j, 1));

  std::string label = "apery:j=" + std::to_string(j + 1);
  if (!inner.sequence.empty()) {
    label += ",inner=" + join_one_based(inner.sequence) + "," +
             (inner.flavor == InnerFlavor::Lex ? "lex" : "revlex");
  }
  return OrderSpec(m, std::move(rows), std::move(label));
}

OrderSpec block_lambda_order(std::size_t dim,
                             std::span<const std::vector<std::int64_t>> generators,
                             std::size_t lambda_size,
                             const std::optional<OrderSpec>& x_order) {
  const std::size_t k = generators.size();
  if (dim == 0) throw InvalidArgument("dimension must be at least 1");
  if (lambda_size == 0 || lambda_size > k) {
    throw InvalidLambda("Lambda must contain between 1 and " + std::to_string(k) +
                        " generators");
  }
  for (const auto& g : generators) {
    if (g.size() != dim) throw LengthMismatch("generator of wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](std::int64_t c) { return c == 0; })) {
      throw InvalidArgument("generators must be nonzero");
    }
  }
  const OrderSpec xo = x_order.value_or(OrderSpec::lex(dim));
  if (xo.num_vars() != dim) {
    throw LengthMismatch("x-block ordering must be on " + std::to_string(dim) +
                         " variables");
  }

  const std::size_t m = dim + k;
  std::vector<WeightRow> rows;
  for (const auto& xr : xo.rows()) {
    WeightRow r(m, 0);
    std::copy(xr.begin(), xr.end(), r.begin());
    rows.push_back(std::move(r));
  }
  for (std::size_t c = 0; c < dim; ++c) {
    WeightRow r(m, 0);
    for (std::size_t i = 0; i < k; ++i) r[dim + i] = generators[i][c];
    rows.push_back(std::move(r));
  }
  for (std::size_t i = k; i-- > 1;) {
    WeightRow r(m, 0);
    r[dim + i] = -1;
    rows.push_back(std::move(r));
  }
  return OrderSpec(m, std::move(rows),
                   "block:n=" + std::to_string(lambda_size) + ",x=" + xo.label());
}

bool is_elimination_for_x(const OrderSpec& order, std::size_t x_vars) {
  if (x_vars == 0 || x_vars > order.num_vars()) return false;
  std::vector<bool> covered(x_vars, false);
  std::size_t remaining = x_vars;
  for (const auto& row : order.rows()) {
    for (std::size_t c = x_vars; c < row.size(); ++c) {
      if (row[c] != 0) return false;
    }
    for (std::size_t c = 0; c < x_vars; ++c) {
      if (row[c] < 0) return false;
      if (row[c] > 0 && !covered[c]) {
        covered[c] = true;
        --remaining;
      }
    }
    if (remaining == 0) return true;
  }
  return false;
}

}  // namespace aperykit
