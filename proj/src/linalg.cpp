#include "jp/linalg.hpp"

#include <stdexcept>

namespace jp {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row, in row order.
std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty())
        return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero())
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[row], m[sel]);
        const Rational inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            const Rational f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinearSolution solve_linear(const Mat& a, const Vec& rhs) {
    const size_t rows = a.size();
    if (rows != rhs.size())
        throw std::invalid_argument("solve_linear: matrix/rhs size mismatch");
    size_t cols = 0;
    for (const auto& r : a) {
        if (cols == 0)
            cols = r.size();
        else if (r.size() != cols)
            throw std::invalid_argument("solve_linear: ragged matrix");
    }

    // eliminate on the augmented matrix
    Mat aug(rows, Vec(cols + 1, Rational(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j)
            aug[i][j] = a[i][j];
        aug[i][cols] = rhs[i];
    }
    std::vector<size_t> pivots = rref(aug);

    LinearSolution out;
    out.rank = 0;
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) {
            out.consistent = false; // pivot in the rhs column
        } else {
            ++out.rank;
        }
    }
    if (!out.consistent) {
        out.kernel = kernel_basis(a);
        return out;
    }

    std::vector<bool> is_pivot(cols, false);
    out.particular.assign(cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols)
            continue;
        is_pivot[pivots[i]] = true;
        out.particular[pivots[i]] = aug[i][cols];
    }
    // kernel from the same elimination: one vector per free column
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols, Rational(0));
        v[free] = Rational(1);
        size_t prow = 0;
        for (size_t col = 0; col < cols; ++col) {
            if (!is_pivot[col])
                continue;
            v[col] = -aug[prow][free];
            ++prow;
        }
        // scale so the first nonzero entry is 1
        for (size_t j = 0; j < cols; ++j) {
            if (!v[j].is_zero()) {
                const Rational inv = v[j].inverse();
                for (auto& e : v)
                    e *= inv;
                break;
            }
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

Mat kernel_basis(const Mat& a) {
    if (a.empty())
        return {};
    const Vec zero(a.size(), Rational(0));
    return solve_linear(a, zero).kernel;
}

std::vector<Poly> canonical_span(const std::vector<Poly>& gens) {
    size_t width = 0;
    for (const auto& p : gens)
        width = std::max(width, static_cast<size_t>(p.degree() + 1));
    if (width == 0)
        return {};
    Mat m;
    for (const auto& p : gens) {
        if (p.is_zero())
            continue;
        Vec row(width, Rational(0));
        for (size_t i = 0; i < width; ++i)
            row[i] = p.coeff(i);
        m.push_back(std::move(row));
    }
    if (m.empty())
        return {};
    rref(m);
    std::vector<Poly> out;
    for (const auto& row : m) {
        Poly p(row);
        if (!p.is_zero())
            out.push_back(p);
    }
    return out;
}

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return canonical_span(a) == canonical_span(b);
}

} // namespace jp
