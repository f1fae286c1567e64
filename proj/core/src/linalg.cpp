#include <symgeo/linalg.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symgeo {

namespace {

Int abs_i(const Int& v) { return v < 0 ? Int(-v) : v; }

Int gcd_i(Int a, Int b) {
  a = abs_i(a);
  b = abs_i(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

namespace {

/* position of a minimal-|entry| nonzero in the block with corner (t, t) */
std::optional<std::pair<std::size_t, std::size_t>> min_abs_nonzero(
    const IntMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Int& v = m.at(r, c);
      if (v == 0) continue;
      Int a = abs_i(v);
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  SmithForm out;
  out.rows = a.rows();
  out.cols = a.cols();

  const std::size_t n = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  while (t < n) {
    auto pos = min_abs_nonzero(m, t);
    if (!pos) break;
    m.swap_rows(t, pos->first);
    m.swap_cols(t, pos->second);

    const Int pivot = m.at(t, t);
    bool cleared = true;
    for (std::size_t r = t + 1; r < m.rows(); ++r) {
      Int q = m.at(r, t) / pivot;
      if (q != 0) m.add_row(r, t, -q);
      if (m.at(r, t) != 0) cleared = false;
    }
    for (std::size_t c = t + 1; c < m.cols(); ++c) {
      Int q = m.at(t, c) / pivot;
      if (q != 0) m.add_col(c, t, -q);
      if (m.at(t, c) != 0) cleared = false;
    }
    /* leftover remainders are strictly smaller than the pivot; repick */
    if (!cleared) continue;

    /* the pivot must divide the whole remaining block, otherwise fold the
     * offending row in and reduce again */
    bool divides = true;
    for (std::size_t r = t + 1; r < m.rows() && divides; ++r)
      for (std::size_t c = t + 1; c < m.cols() && divides; ++c)
        if (m.at(r, c) % pivot != 0) {
          m.add_row(t, r, 1);
          divides = false;
        }
    if (!divides) continue;

    if (m.at(t, t) < 0) m.negate_row(t);
    out.invariant_factors.push_back(m.at(t, t));
    ++t;
  }
  out.rank = out.invariant_factors.size();
  return out;
}

namespace {

/* determinant by cofactor expansion over selected rows/cols; the oracle is
 * meant to be obviously correct, not fast */
Int minor_det(const IntMatrix& a, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return a.at(rows[0], cols[0]);
  Int det = 0;
  std::vector<std::size_t> sub(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const Int& top = a.at(rows[0], cols[j]);
    if (top == 0) continue;
    std::vector<std::size_t> subc;
    subc.reserve(k - 1);
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) subc.push_back(cols[c]);
    Int term = top * minor_det(a, sub, subc);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Int determinant_divisor(const IntMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  if (k > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("determinant_divisor: k exceeds matrix size");

  std::vector<std::size_t> rows(k), cols(k);
  Int g = 0;
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      g = gcd_i(g, minor_det(a, rows, cols));
      if (g == 1) return g;
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank == 1) {
    os << "Z";
    first = false;
  } else if (rank > 1) {
    os << "Z^" << rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianInvariants cokernel_invariants(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  AbelianInvariants inv;
  inv.rank = static_cast<long long>(a.cols()) - static_cast<long long>(s.rank);
  for (const Int& d : s.invariant_factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace symgeo
