#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dicke {

using cplx = std::complex<double>;

// Minimal dense row-major matrix. The blocks this library works with are
// tiny ((D+1) x (D+1) with D = min(N, A)), so there is no reason for
// anything fancier.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T* data() { return a_.data(); }
    const T* data() const { return a_.data(); }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RMat = Mat<double>;
using CMat = Mat<cplx>;

}  // namespace dicke
