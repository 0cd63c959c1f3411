#include "convfem/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convfem {

BandMatrix::BandMatrix(std::size_t size, std::size_t lower, std::size_t upper)
    : size_(size), lower_(lower), upper_(upper), values_(size * (lower + upper + 1), 0.0) {}

bool BandMatrix::in_band(std::size_t i, std::size_t j) const {
    return i < size_ && j < size_ && j + lower_ >= i && j <= i + upper_;
}

std::size_t BandMatrix::index(std::size_t i, std::size_t j) const {
    return i * (lower_ + upper_ + 1) + (j + lower_ - i);
}

double BandMatrix::operator()(std::size_t i, std::size_t j) const {
    return in_band(i, j) ? values_[index(i, j)] : 0.0;
}

double& BandMatrix::at(std::size_t i, std::size_t j) {
    if (!in_band(i, j)) {
        throw std::out_of_range("entry lies outside the band");
    }
    return values_[index(i, j)];
}

std::vector<double> solve_banded(BandMatrix a, std::span<const double> rhs,
                                 double pivot_tolerance) {
    const std::size_t n = a.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("solve_banded: right-hand side has the wrong length");
    }
    std::vector<double> row_norm(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= a.lower() ? i - a.lower() : 0;
        const std::size_t hi = std::min(n - 1, i + a.upper());
        for (std::size_t j = lo; j <= hi; ++j) {
            row_norm[i] = std::max(row_norm[i], std::abs(a(i, j)));
        }
    }
    std::vector<double> b(rhs.begin(), rhs.end());
    for (std::size_t k = 0; k < n; ++k) {
        const double pivot = a(k, k);
        if (!(std::abs(pivot) >= pivot_tolerance * row_norm[k]) || pivot == 0.0) {
            throw SingularSystemError("numerically singular pivot at row " + std::to_string(k));
        }
        const std::size_t last_row = std::min(n - 1, k + a.lower());
        const std::size_t last_col = std::min(n - 1, k + a.upper());
        for (std::size_t i = k + 1; i <= last_row; ++i) {
            const double factor = a(i, k) / pivot;
            if (factor == 0.0) {
                continue;
            }
            a.at(i, k) = 0.0;
            for (std::size_t j = k + 1; j <= last_col; ++j) {
                a.at(i, j) -= factor * a(k, j);
            }
            b[i] -= factor * b[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double sum = b[k];
        const std::size_t last_col = std::min(n - 1, k + a.upper());
        for (std::size_t j = k + 1; j <= last_col; ++j) {
            sum -= a(k, j) * x[j];
        }
        x[k] = sum / a(k, k);
    }
    return x;
}

}  // namespace convfem
