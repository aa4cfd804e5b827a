#include "cluster_forge/matrix.hpp"

#include <numeric>
#include <sstream>

namespace cf {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("integer overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError("integer overflow");
    return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    for (auto& row : rows) {
        if (int(row.size()) != c_) throw AlgebraError("ragged matrix literal");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.r_; ++i) {
        if (int(rows[i].size()) != m.c_) throw AlgebraError("ragged matrix");
        for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<long long>>& cols, int rows) {
    IntMatrix m(rows, int(cols.size()));
    for (int j = 0; j < m.c_; ++j) m.set_column(j, cols[j]);
    return m;
}

std::vector<long long> IntMatrix::column(int j) const {
    std::vector<long long> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<long long> IntMatrix::row(int i) const {
    return std::vector<long long>(a_.begin() + size_t(i) * c_, a_.begin() + size_t(i + 1) * c_);
}

void IntMatrix::set_column(int j, const std::vector<long long>& v) {
    if (int(v.size()) != r_) throw AlgebraError("column length mismatch");
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw AlgebraError("matrix shape mismatch");
    IntMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < o.c_; ++j) {
            long long s = 0;
            for (int k = 0; k < c_; ++k) s = checked_add(s, checked_mul((*this)(i, k), o(k, j)));
            m(i, j) = s;
        }
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (r_ != o.r_) return r_ < o.r_;
    if (c_ != o.c_) return c_ < o.c_;
    return a_ < o.a_;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    IntMatrix m(int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m(int(i), int(j)) = (*this)(rows[i], cols[j]);
    return m;
}

std::vector<std::vector<BigRat>> to_rational(const IntMatrix& m) {
    std::vector<std::vector<BigRat>> q(m.rows(), std::vector<BigRat>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) q[i][j] = BigRat(BigInt(std::to_string(m(i, j))));
    return q;
}

BigInt IntMatrix::det() const {
    if (r_ != c_) throw AlgebraError("det of non-square matrix");
    auto q = to_rational(*this);
    BigRat d = 1;
    int n = r_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (q[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(q[piv], q[col]);
            d = -d;
        }
        d *= q[col][col];
        for (int i = col + 1; i < n; ++i) {
            if (q[i][col] == 0) continue;
            BigRat f = q[i][col] / q[col][col];
            for (int j = col; j < n; ++j) q[i][j] -= f * q[col][j];
        }
    }
    d.canonicalize();
    return d.get_num();
}

IntMatrix IntMatrix::unimodular_inverse() const {
    if (r_ != c_) throw AlgebraError("inverse of non-square matrix");
    BigInt d = det();
    if (abs(d) != 1) throw AlgebraError("matrix is not unimodular (det " + d.get_str() + ")");
    int n = r_;
    auto q = to_rational(*this);
    std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (q[piv][col] == 0) ++piv;
        std::swap(q[piv], q[col]);
        std::swap(inv[piv], inv[col]);
        BigRat p = q[col][col];
        for (int j = 0; j < n; ++j) {
            q[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || q[i][col] == 0) continue;
            BigRat f = q[i][col];
            for (int j = 0; j < n; ++j) {
                q[i][j] -= f * q[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            inv[i][j].canonicalize();
            m(i, j) = inv[i][j].get_num().get_si();
        }
    return m;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < r_; ++i) rows.push_back(row(i));
    return rows;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < r_; ++i) {
        if (i) os << ",";
        os << "(";
        for (int j = 0; j < c_; ++j) {
            if (j) os << ",";
            os << (*this)(i, j);
        }
        os << ")";
    }
    os << ")";
    return os.str();
}

bool solve_rational(const std::vector<std::vector<BigRat>>& M, const std::vector<BigRat>& b, std::vector<BigRat>& x) {
    int n = int(M.size());
    auto q = M;
    auto rhs = b;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (q[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return false;
        std::swap(q[piv], q[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || q[i][col] == 0) continue;
            BigRat f = q[i][col] / q[col][col];
            for (int j = col; j < n; ++j) q[i][j] -= f * q[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    x.assign(n, 0);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / q[i][i];
    return true;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<BigRat>>& q, int ncols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < ncols && row < int(q.size()); ++col) {
        int piv = -1;
        for (int i = row; i < int(q.size()); ++i)
            if (q[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(q[piv], q[row]);
        BigRat p = q[row][col];
        for (int j = 0; j < ncols; ++j) q[row][j] /= p;
        for (int i = 0; i < int(q.size()); ++i) {
            if (i == row || q[i][col] == 0) continue;
            BigRat f = q[i][col];
            for (int j = 0; j < ncols; ++j) q[i][j] -= f * q[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<BigRat>> null_space(const std::vector<std::vector<BigRat>>& M, int ncols) {
    auto q = M;
    auto pivots = rref(q, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int p : pivots) is_piv[p] = true;
    std::vector<std::vector<BigRat>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<BigRat> v(ncols, 0);
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q[r][f];
        basis.push_back(v);
    }
    return basis;
}

int rank_of(std::vector<std::vector<BigRat>> M) {
    if (M.empty()) return 0;
    int ncols = int(M[0].size());
    return int(rref(M, ncols).size());
}

std::vector<long long> primitive(const std::vector<BigRat>& v) {
    BigInt l = 1;
    for (auto x : v) {
        x.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<BigInt> w;
    BigInt g = 0;
    for (auto x : v) {
        BigRat s = x * l;
        s.canonicalize();
        w.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    std::vector<long long> out;
    for (auto& x : w) out.push_back(g == 0 ? 0 : BigInt(x / g).get_si());
    return out;
}

std::vector<long long> primitive(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    std::vector<long long> out(v);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace cf
