#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "repequiv/scalar.hpp"

namespace repequiv {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

// Conventions used throughout: module elements are row vectors and linear
// maps act on the right, so a map V -> W is a (dim V) x (dim W) matrix and
// "f then g" is the product F*G.

Mat zeros(Index rows, Index cols, std::uint32_t p = 0);
Mat identity(Index n, std::uint32_t p = 0);
bool is_zero(const Mat& m);
bool mat_equal(const Mat& a, const Mat& b);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Rref {
  Mat reduced;
  std::vector<Index> pivots;  // pivot column of each pivot row, ascending
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Rref rref(const Mat& m);
Index rank(const Mat& m);

/// Basis of { x column : A x = 0 }, one column per basis vector.
Mat kernel_cols(const Mat& a);
/// Basis of { v row : v A = 0 }, one row per basis vector.
Mat kernel_rows(const Mat& a);
/// Row-space basis (rref nonzero rows).
Mat row_basis(const Mat& a);

struct SolveResult {
  bool consistent = false;
  Mat particular;  // one solution of a*x = b, column-wise
  Mat kernel;      // kernel_cols(a)
};

/// Column-convention solver: finds x with a*x = b (b may have several
/// columns) plus the kernel of a; consistent == false when no solution.
SolveResult solve(const Mat& a, const Mat& b);

/// Row-convention solver: x with x*a = b.
SolveResult solve_left(const Mat& a, const Mat& b);

/// Kronecker product with left-factor-major ordering: basis element (i,j)
/// of the product maps to flat index i*cols(b)+j (rows) / i*... analogous
/// for columns, so that (x ⊗ y)(a ⊗ b) = xa ⊗ yb for row vectors.
Mat kron(const Mat& a, const Mat& b);

/// Quotient of k^n by the row space of `rows`: proj is n x q, sect is
/// q x n with sect*proj = identity; coset representatives are the
/// non-pivot coordinates.
struct QuotientMap {
  Mat proj;
  Mat sect;
  std::vector<Index> rep_cols;  // which original coordinates survive
  Index dim() const { return proj.cols(); }
};

QuotientMap quotient_by_rowspace(const Mat& rows, Index n, std::uint32_t p = 0);

struct PushoutResult {
  Index dim = 0;
  Mat in_a;  // A -> P
  Mat in_b;  // B -> P
};

/// Pushout of f: X->A, g: X->B (row convention): P = (A (+) B)/im(f,-g).
PushoutResult pushout(const Mat& f, const Mat& g);

struct PullbackResult {
  Index dim = 0;
  Mat pr_a;  // Q -> A
  Mat pr_b;  // Q -> B
};

/// Pullback of f: A->Y, g: B->Y: Q = {(a,b) : f(a) = g(b)}.
PullbackResult pullback(const Mat& f, const Mat& g);

bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);

/// Parses `[[1,2],[3,4/5]]` with optional `% p` suffix selecting F_p.
Mat parse_matrix(const std::string& text);
std::string format_matrix(const Mat& m);

}  // namespace repequiv
