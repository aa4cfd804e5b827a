#pragma once

#include "cluster_forge/laurent.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cf {

// small dense integer matrix, row-major
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntMatrix from_columns(const std::vector<std::vector<long long>>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    long long& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    long long operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    std::vector<long long> column(int j) const;
    std::vector<long long> row(int i) const;
    void set_column(int j, const std::vector<long long>& v);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const;

    IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    BigInt det() const;
    // exact inverse; throws unless the determinant is +-1
    IntMatrix unimodular_inverse() const;

    std::vector<std::vector<long long>> to_rows() const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<long long> a_;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// rational Gaussian elimination helpers
std::vector<std::vector<BigRat>> to_rational(const IntMatrix& m);
// solve M x = b exactly; false if singular
bool solve_rational(const std::vector<std::vector<BigRat>>& M, const std::vector<BigRat>& b, std::vector<BigRat>& x);
// basis of the right null space
std::vector<std::vector<BigRat>> null_space(const std::vector<std::vector<BigRat>>& M, int ncols);
int rank_of(std::vector<std::vector<BigRat>> M);

// scale a rational vector to a primitive integer vector with the same direction
std::vector<long long> primitive(const std::vector<BigRat>& v);
std::vector<long long> primitive(const std::vector<long long>& v);

}  // namespace cf
