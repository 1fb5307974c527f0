#include "repequiv/exactla.hpp"

#include <cctype>
#include <sstream>

namespace repequiv {

Mat zeros(Index rows, Index cols, std::uint32_t p) {
  Mat m(rows, cols);
  Scalar z(mpq_class(0), p);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = z;
  return m;
}

Mat identity(Index n, std::uint32_t p) {
  Mat m = zeros(n, n, p);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(mpq_class(1), p);
  return m;
}

bool is_zero(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.block(0, 0, a.rows(), a.cols()) = a;
  m.block(0, a.cols(), b.rows(), b.cols()) = b;
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.block(0, 0, a.rows(), a.cols()) = a;
  m.block(a.rows(), 0, b.rows(), b.cols()) = b;
  return m;
}

Rref rref(const Mat& input) {
  Rref out;
  out.reduced = input;
  Mat& m = out.reduced;
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index pivot = -1;
    for (Index i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    Scalar inv = m(r, c).inverse();
    for (Index j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

Index rank(const Mat& m) { return rref(m).rank(); }

static std::uint32_t field_of(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).characteristic() != 0) return m(i, j).characteristic();
  return 0;
}

Mat kernel_cols(const Mat& a) {
  std::uint32_t p = field_of(a);
  Rref rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (Index c : rr.pivots) is_pivot[c] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k = zeros(a.cols(), static_cast<Index>(free_cols.size()), p);
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    Index fc = free_cols[t];
    k(fc, static_cast<Index>(t)) = Scalar(mpq_class(1), p);
    for (std::size_t rrow = 0; rrow < rr.pivots.size(); ++rrow)
      k(rr.pivots[rrow], static_cast<Index>(t)) = -rr.reduced(static_cast<Index>(rrow), fc);
  }
  return k;
}

Mat kernel_rows(const Mat& a) { return kernel_cols(Mat(a.transpose())).transpose(); }

Mat row_basis(const Mat& a) {
  Rref rr = rref(a);
  Mat out(rr.rank(), a.cols());
  for (Index i = 0; i < rr.rank(); ++i) out.row(i) = rr.reduced.row(i);
  return out;
}

SolveResult solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: a.rows != b.rows");
  std::uint32_t p = field_of(a);
  if (p == 0) p = field_of(b);
  SolveResult res;
  Mat aug = hstack(a, b);
  Rref rr = rref(aug);
  for (Index c : rr.pivots)
    if (c >= a.cols()) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;
  res.particular = zeros(a.cols(), b.cols(), p);
  for (std::size_t rrow = 0; rrow < rr.pivots.size(); ++rrow) {
    Index pc = rr.pivots[rrow];
    for (Index j = 0; j < b.cols(); ++j)
      res.particular(pc, j) = rr.reduced(static_cast<Index>(rrow), a.cols() + j);
  }
  res.kernel = kernel_cols(a);
  return res;
}

SolveResult solve_left(const Mat& a, const Mat& b) {
  SolveResult r = solve(Mat(a.transpose()), Mat(b.transpose()));
  if (r.consistent) {
    r.particular = Mat(r.particular.transpose());
    r.kernel = Mat(r.kernel.transpose());
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m = zeros(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

QuotientMap quotient_by_rowspace(const Mat& rows, Index n, std::uint32_t p) {
  if (rows.cols() != 0 && rows.cols() != n)
    throw std::invalid_argument("quotient_by_rowspace: width mismatch");
  Rref rr = rows.cols() == n ? rref(rows) : Rref{zeros(0, n, p), {}};
  std::vector<bool> is_pivot(n, false);
  for (Index c : rr.pivots) is_pivot[c] = true;
  QuotientMap q;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[c]) q.rep_cols.push_back(c);
  Index qd = static_cast<Index>(q.rep_cols.size());
  q.proj = zeros(n, qd, p);
  q.sect = zeros(qd, n, p);
  for (Index t = 0; t < qd; ++t) {
    q.proj(q.rep_cols[t], t) = Scalar(mpq_class(1), p);
    q.sect(t, q.rep_cols[t]) = Scalar(mpq_class(1), p);
  }
  for (std::size_t rrow = 0; rrow < rr.pivots.size(); ++rrow)
    for (Index t = 0; t < qd; ++t)
      q.proj(rr.pivots[rrow], t) = -rr.reduced(static_cast<Index>(rrow), q.rep_cols[t]);
  return q;
}

PushoutResult pushout(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows()) throw std::invalid_argument("pushout: domain mismatch");
  std::uint32_t p = field_of(f);
  if (p == 0) p = field_of(g);
  Mat span = hstack(f, Mat(-g));
  QuotientMap q = quotient_by_rowspace(span, f.cols() + g.cols(), p);
  PushoutResult out;
  out.dim = q.dim();
  out.in_a = q.proj.topRows(f.cols());
  out.in_b = q.proj.bottomRows(g.cols());
  return out;
}

PullbackResult pullback(const Mat& f, const Mat& g) {
  if (f.cols() != g.cols()) throw std::invalid_argument("pullback: codomain mismatch");
  Mat stacked = vstack(f, Mat(-g));
  Mat q = kernel_rows(Mat(stacked.transpose()));
  // kernel_rows of transpose gives {v : v * stacked = 0}? No: we want rows v
  // with v * stacked... v is 1 x (rows f + rows g), condition v*stacked = 0.
  PullbackResult out;
  Mat basis = kernel_rows(stacked);
  out.dim = basis.rows();
  out.pr_a = basis.leftCols(f.rows());
  out.pr_b = basis.rightCols(g.rows());
  return out;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  SolveResult r = solve(m, identity(m.rows(), field_of(m)));
  if (!r.consistent || rank(m) != m.rows()) throw std::invalid_argument("inverse: singular");
  return r.particular;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("matrix literal: expected '") + c + "'");
  }
};

mpq_class parse_rational(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.i;
  if (cur.i < cur.s.size() && (cur.s[cur.i] == '-' || cur.s[cur.i] == '+')) ++cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == start) throw std::invalid_argument("matrix literal: expected number");
  mpz_class num(cur.s.substr(start, cur.i - start));
  mpz_class den = 1;
  if (cur.eat('/')) {
    cur.skip_ws();
    std::size_t ds = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == ds) throw std::invalid_argument("matrix literal: expected denominator");
    den = mpz_class(cur.s.substr(ds, cur.i - ds));
  }
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

Mat parse_matrix(const std::string& text) {
  // Trailing "% p" selects the prime field.
  std::string body = text;
  std::uint32_t p = 0;
  auto pct = text.rfind('%');
  if (pct != std::string::npos) {
    body = text.substr(0, pct);
    p = static_cast<std::uint32_t>(std::stoul(text.substr(pct + 1)));
  }
  Cursor cur{body};
  cur.expect('[');
  std::vector<std::vector<mpq_class>> rows;
  if (!cur.eat(']')) {
    do {
      cur.expect('[');
      std::vector<mpq_class> row;
      if (!cur.eat(']')) {
        do {
          row.push_back(parse_rational(cur));
        } while (cur.eat(','));
        cur.expect(']');
      }
      rows.push_back(std::move(row));
    } while (cur.eat(','));
    cur.expect(']');
  }
  cur.skip_ws();
  if (cur.i != body.size()) throw std::invalid_argument("matrix literal: trailing input");
  Index r = static_cast<Index>(rows.size());
  Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  for (auto& row : rows)
    if (static_cast<Index>(row.size()) != c)
      throw std::invalid_argument("matrix literal: ragged rows");
  Mat m = zeros(r, c, p);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = Scalar(rows[i][j], p);
  return m;
}

std::string format_matrix(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace repequiv
