#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "pointed/error.hpp"

namespace pointed {

/// Row-major n x n matrix with value semantics.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), a_(n * n, fill) {}
    SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
        detail::require(a_.size() == n * n, ErrorKind::LengthMismatch, "square matrix needs n*n entries");
    }
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        for (const auto& r : rows) {
            detail::require(r.size() == n_, ErrorKind::LengthMismatch, "square matrix rows must all have length n");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t size() const noexcept { return n_; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::vector<T>& entries() const noexcept { return a_; }

    /// Principal submatrix on the given indices, in the given order.
    SquareMatrix restrict_to(const std::vector<int>& idx) const {
        SquareMatrix r(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(static_cast<std::size_t>(idx[i]), static_cast<std::size_t>(idx[j]));
        return r;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

using IntMatrix = SquareMatrix<int>;

/// "[[2,-1],[-1,2]]"
inline std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace pointed
