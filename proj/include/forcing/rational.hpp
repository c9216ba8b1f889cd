#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals. No floating point anywhere; every
/// operation in this module is exact.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RationalMatrix transposed() const;
    bool operator==(const RationalMatrix&) const = default;

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

private:
    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

bool is_symmetric(const RationalMatrix& a);

/// Kronecker product: block matrix whose (i,j) block is a_ij * B.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination over scaled integer
/// rows; pivots are the first nonzero entry in column order.
int rank_exact(const RationalMatrix& a);
/// cols - rank.
int nullity(const RationalMatrix& a);
/// Exact determinant of a square matrix.
Rational determinant_exact(const RationalMatrix& a);

/// Rank-2 skew matrix with entry (i,j) = j - i; zero diagonal, pattern K_n.
RationalMatrix build_An(int n);
/// Tridiagonal skew adjacency of a path: +1 superdiagonal, -1 subdiagonal.
RationalMatrix build_path_skew(int t);
/// Circulant skew adjacency of a cycle: +1 at (i, i+1 mod t), -1 at (i, i-1 mod t).
RationalMatrix build_cycle_skew(int t);

/// Adjacency matrix of a graph (entries 0/1), a member of S(G).
RationalMatrix adjacency_matrix(const Graph& g);

/// Graph of the off-diagonal nonzero pattern. Requires the matrix to be
/// square and combinatorially symmetric; the diagonal is ignored.
Graph pattern_graph(const RationalMatrix& a);

/// A (x) I_m - I_n (x) B, a member of S(G box H) when A in S(G), B in S(H).
RationalMatrix cartesian_operator(const RationalMatrix& a, const RationalMatrix& b);

/// Checks that `a` is symmetric with pattern exactly `host` and returns its
/// nullity: a certified lower bound on the maximum nullity M(host), hence on
/// Z(host). Throws CertificateError when a check fails.
int certified_nullity_lower_bound(const RationalMatrix& a, const Graph& host);

/// The paper-style Kronecker certificate for a tensor product with K_n:
/// nullity of B_t (x) A_n, verified against tensor(path/cycle(t), K_n).
int tensor_nullity_certificate(BaseFamily family, int t, int n);

}  // namespace forcing
