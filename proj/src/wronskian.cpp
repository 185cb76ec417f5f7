#include "jp/wronskian.hpp"

#include <stdexcept>

namespace jp {

namespace {

// cofactor expansion along the first row; the matrices here are tiny
template <typename T>
T det(const std::vector<std::vector<T>>& m) {
    const size_t n = m.size();
    if (n == 1)
        return m[0][0];
    T acc{};
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j)
                    row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <typename T>
T wronskian_impl(const std::vector<T>& fs) {
    if (fs.empty())
        throw std::invalid_argument("wronskian: empty input");
    std::vector<std::vector<T>> m(fs.size(), std::vector<T>());
    m[0] = fs;
    for (size_t t = 1; t < fs.size(); ++t) {
        m[t].reserve(fs.size());
        for (const auto& f : m[t - 1])
            m[t].push_back(f.derivative());
    }
    return det(m);
}

} // namespace

Poly wronskian(const std::vector<Poly>& fs) { return wronskian_impl(fs); }

TwistedFunction wronskian(const std::vector<TwistedFunction>& fs) { return wronskian_impl(fs); }

} // namespace jp
