#pragma once

#include <vector>

#include "hess/errors.hpp"
#include "hess/numeric.hpp"

namespace hess {

// Dense exact rational matrix.
class MatQ {
  public:
    MatQ() = default;
    MatQ(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
    static MatQ identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[i * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * c_ + j]; }

    MatQ operator*(const MatQ& o) const;
    MatQ transpose() const;
    bool operator==(const MatQ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Rat det() const;
    MatQ inverse() const;  // throws RejectedInput when singular

    // One nonzero kernel vector; throws when the matrix is injective.
    std::vector<Rat> kernel_vector() const;

    // Coefficients of det(tI - M), highest degree first (monic, length n+1).
    std::vector<Rat> charpoly() const;

  private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Distinct rational roots of a rational-coefficient polynomial given highest
// degree first. Throws UnsupportedInput unless it splits into distinct
// rational linear factors.
std::vector<Rat> distinct_rational_roots(const std::vector<Rat>& poly);

}  // namespace hess
