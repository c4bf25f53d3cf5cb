#ifndef POLYDEC_LINALG_HPP
#define POLYDEC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "polydec/gf.hpp"

namespace polydec {

class Matrix {
public:
    Matrix(const Field& f, size_t rows, size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, size_t n);

    const Field& field() const { return *f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Fel at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Fel& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    std::vector<Fel> apply(const std::vector<Fel>& x) const;  // M * x

private:
    const Field* f_;
    size_t rows_, cols_;
    std::vector<Fel> a_;
};

// Full solution set of a linear system: particular + span(basis), or the
// empty marker when the system is inconsistent.  Basis vectors are linearly
// independent by construction (one per free column of the reduced system).
struct AffineSpace {
    const Field* field = nullptr;
    size_t ambient_dim = 0;
    bool empty = false;
    std::vector<Fel> particular;
    std::vector<std::vector<Fel>> basis;

    size_t dim() const { return empty ? 0 : basis.size(); }
    std::vector<Fel> member(const std::vector<Fel>& coords) const;
};

// Gaussian elimination with deterministic pivoting (lowest remaining row,
// lowest column).  Homogeneous systems always report particular = 0.
AffineSpace solve_affine(const Matrix& m, const std::vector<Fel>& rhs);

// All q^dim members in lexicographic order of the basis-coefficient tuple
// (first basis coordinate most significant).  Throws TooLargeError when
// q^dim exceeds cap.
std::vector<std::vector<Fel>> enumerate_affine(const AffineSpace& s, uint64_t cap);

// Intersection of `s` with the solution set of m*x = rhs, solved in the
// coordinates of s's basis and mapped back to the ambient space.
AffineSpace intersect_affine(const AffineSpace& s, const Matrix& m, const std::vector<Fel>& rhs);

// Set equality of two affine spaces over the same ambient space
bool affine_equal(const AffineSpace& a, const AffineSpace& b);

struct SolutionSpaceTooLargeError : TooLargeError {
    AffineSpace space;
    SolutionSpaceTooLargeError(std::string msg, AffineSpace s)
        : TooLargeError(std::move(msg)), space(std::move(s)) {}
};

}  // namespace polydec

#endif
