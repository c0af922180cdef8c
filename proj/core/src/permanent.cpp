// Copyright 2026 The hdfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "hdfusion/permanent.hpp"

#include <stdexcept>
#include <vector>

namespace hdfusion {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Complex power(Complex base, int exponent) {
    Complex r = 1.0;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

long long expansion_cost(std::span<const int> mult) {
    long long c = 1;
    for (int m : mult) c *= (m + 1);
    return c;
}

// Ryser expansion over the columns of `m` (rows x cols distinct entries).
// Column counts walk a reflected mixed-radix Gray code so each step moves
// one count by +-1 and the row sums update in O(rows).
Complex ryser_over_columns(const ComplexMatrix& m, std::span<const int> row_mult,
                           std::span<const int> col_mult, int n) {
    const auto rows = static_cast<int>(m.rows());
    const auto cols = static_cast<int>(m.cols());

    std::vector<int> count(static_cast<std::size_t>(cols), 0);
    std::vector<int> dir(static_cast<std::size_t>(cols), 1);
    std::vector<Complex> row_sum(static_cast<std::size_t>(rows), Complex{});

    std::vector<std::vector<double>> binom(static_cast<std::size_t>(cols));
    for (int b = 0; b < cols; ++b) {
        const int c = col_mult[static_cast<std::size_t>(b)];
        for (int k = 0; k <= c; ++k) binom[static_cast<std::size_t>(b)].push_back(binomial(c, k));
    }

    // Accumulate the k = 0 term lazily: it is zero unless n == 0.
    Complex total = (n == 0) ? Complex{1.0} : Complex{};
    int k_sum = 0;
    double weight = 1.0;
    while (true) {
        int b = 0;
        while (b < cols) {
            const int next = count[static_cast<std::size_t>(b)] + dir[static_cast<std::size_t>(b)];
            if (next >= 0 && next <= col_mult[static_cast<std::size_t>(b)]) break;
            dir[static_cast<std::size_t>(b)] = -dir[static_cast<std::size_t>(b)];
            ++b;
        }
        if (b == cols) break;

        auto ub = static_cast<std::size_t>(b);
        const int old_k = count[ub];
        const int new_k = old_k + dir[ub];
        count[ub] = new_k;
        k_sum += dir[ub];
        weight = weight / binom[ub][static_cast<std::size_t>(old_k)] *
                 binom[ub][static_cast<std::size_t>(new_k)];
        const double step = static_cast<double>(dir[ub]);
        for (int a = 0; a < rows; ++a) row_sum[static_cast<std::size_t>(a)] += step * m(a, b);

        Complex prod = weight;
        for (int a = 0; a < rows; ++a) {
            const int r = row_mult[static_cast<std::size_t>(a)];
            prod *= (r == 1) ? row_sum[static_cast<std::size_t>(a)]
                             : power(row_sum[static_cast<std::size_t>(a)], r);
        }
        if ((n - k_sum) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return total;
}

}  // namespace

Complex permanent(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("permanent: matrix must be square");
    const std::vector<int> ones(static_cast<std::size_t>(m.rows()), 1);
    return ryser_over_columns(m, ones, ones, static_cast<int>(m.rows()));
}

Complex permanent_repeated(const ComplexMatrix& distinct, std::span<const int> row_mult,
                           std::span<const int> col_mult) {
    if (static_cast<Eigen::Index>(row_mult.size()) != distinct.rows() ||
        static_cast<Eigen::Index>(col_mult.size()) != distinct.cols()) {
        throw std::invalid_argument("permanent_repeated: multiplicity size mismatch");
    }
    int n_rows = 0;
    int n_cols = 0;
    for (int r : row_mult) {
        if (r < 0) throw std::invalid_argument("permanent_repeated: negative multiplicity");
        n_rows += r;
    }
    for (int c : col_mult) {
        if (c < 0) throw std::invalid_argument("permanent_repeated: negative multiplicity");
        n_cols += c;
    }
    if (n_rows != n_cols) {
        throw std::invalid_argument("permanent_repeated: expanded matrix is not square");
    }
    if (expansion_cost(row_mult) < expansion_cost(col_mult)) {
        return ryser_over_columns(distinct.transpose(), col_mult, row_mult, n_rows);
    }
    return ryser_over_columns(distinct, row_mult, col_mult, n_rows);
}

}  // namespace hdfusion
