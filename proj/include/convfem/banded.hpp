#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace convfem {

class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square band matrix with `lower` sub-diagonals and `upper` super-diagonals,
/// stored row by row (lower + upper + 1 values per row).
class BandMatrix {
public:
    BandMatrix(std::size_t size, std::size_t lower, std::size_t upper);

    std::size_t size() const { return size_; }
    std::size_t lower() const { return lower_; }
    std::size_t upper() const { return upper_; }

    bool in_band(std::size_t i, std::size_t j) const;
    double operator()(std::size_t i, std::size_t j) const;
    double& at(std::size_t i, std::size_t j);

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t size_;
    std::size_t lower_;
    std::size_t upper_;
    std::vector<double> values_;
};

/// Gaussian elimination without pivoting, O(n (lower + upper) upper).
/// Throws SingularSystemError when |pivot| < pivot_tolerance * (row max norm).
std::vector<double> solve_banded(BandMatrix a, std::span<const double> rhs,
                                 double pivot_tolerance = 1e-14);

}  // namespace convfem
