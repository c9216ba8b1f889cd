#include "forcing/rational.hpp"

#include <string>
#include <utility>

#include "forcing/errors.hpp"

namespace forcing {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw Error("matrix dimensions must be positive");
    a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
    RationalMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
    RationalMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
    RationalMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool is_symmetric(const RationalMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

/// Row-scales the rational matrix to integers (rank-preserving), then runs
/// fraction-free Bareiss elimination. Returns the pivot count and, through
/// the out-parameters, the data needed to recover the determinant.
int bareiss_rank(const RationalMatrix& a, BigInt* last_pivot, int* swap_parity,
                 BigInt* scale_product) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    BigInt scales = 1;
    for (int i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < cols; ++j) l = lcm(l, denominator(a.at(i, j)));
        for (int j = 0; j < cols; ++j)
            m[i][j] = numerator(a.at(i, j)) * (l / denominator(a.at(i, j)));
        scales *= l;
    }

    int rank = 0;
    int parity = 0;
    BigInt prev = 1;
    BigInt pivot = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int prow = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                prow = i;
                break;
            }
        if (prow < 0) continue;
        if (prow != rank) {
            std::swap(m[prow], m[rank]);
            parity ^= 1;
        }
        pivot = m[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    if (last_pivot) *last_pivot = pivot;
    if (swap_parity) *swap_parity = parity;
    if (scale_product) *scale_product = scales;
    return rank;
}

}  // namespace

int rank_exact(const RationalMatrix& a) {
    return bareiss_rank(a, nullptr, nullptr, nullptr);
}

int nullity(const RationalMatrix& a) { return a.cols() - rank_exact(a); }

Rational determinant_exact(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw Error("determinant requires a square matrix");
    BigInt last_pivot = 0;
    int parity = 0;
    BigInt scales = 1;
    const int rank = bareiss_rank(a, &last_pivot, &parity, &scales);
    if (rank < a.rows()) return 0;
    // After full elimination the last pivot equals the determinant of the
    // scaled integer matrix (up to row-swap sign).
    Rational det(last_pivot, scales);
    return parity ? -det : det;
}

RationalMatrix build_An(int n) {
    if (n < 2) throw Error("build_An requires n >= 2");
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = j - i;
    return m;
}

RationalMatrix build_path_skew(int t) {
    if (t < 2) throw Error("build_path_skew requires t >= 2");
    RationalMatrix m(t, t);
    for (int i = 0; i + 1 < t; ++i) {
        m.at(i, i + 1) = 1;
        m.at(i + 1, i) = -1;
    }
    return m;
}

RationalMatrix build_cycle_skew(int t) {
    if (t < 3) throw Error("build_cycle_skew requires t >= 3");
    RationalMatrix m(t, t);
    for (int i = 0; i < t; ++i) {
        m.at(i, (i + 1) % t) += 1;
        m.at(i, (i + t - 1) % t) += -1;
    }
    return m;
}

RationalMatrix adjacency_matrix(const Graph& g) {
    RationalMatrix m(g.order(), g.order());
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) m.at(v, u) = 1;
    return m;
}

Graph pattern_graph(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw PatternError("pattern requires a square matrix");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) {
            const bool ij = a.at(i, j) != 0, ji = a.at(j, i) != 0;
            if (ij != ji)
                throw PatternError("matrix is not combinatorially symmetric at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            if (ij) edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(a.rows(), edges);
}

RationalMatrix cartesian_operator(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw Error("cartesian_operator requires square matrices");
    return kron(a, RationalMatrix::identity(b.rows())) -
           kron(RationalMatrix::identity(a.rows()), b);
}

int certified_nullity_lower_bound(const RationalMatrix& a, const Graph& host) {
    if (a.rows() != a.cols())
        throw CertificateError("certificate matrix must be square");
    if (!is_symmetric(a)) throw CertificateError("certificate matrix is not symmetric");
    try {
        if (!(pattern_graph(a) == host))
            throw CertificateError("certificate pattern does not match the host graph");
    } catch (const PatternError& e) {
        throw CertificateError(std::string("certificate pattern invalid: ") + e.what());
    }
    return nullity(a);
}

int tensor_nullity_certificate(BaseFamily family, int t, int n) {
    const RationalMatrix bt =
        family == BaseFamily::Path ? build_path_skew(t) : build_cycle_skew(t);
    const RationalMatrix an = build_An(n);
    const Graph host = tensor(base_family_graph(family, t), complete(n));
    return certified_nullity_lower_bound(kron(bt, an), host);
}

}  // namespace forcing
