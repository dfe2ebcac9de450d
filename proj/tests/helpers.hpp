#pragma once

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "ancestor/json_io.hpp"

namespace testing_support {

using namespace anc;

inline Field rationals() { return Field::rationals(); }
inline Field fp(std::uint32_t p) { return Field::prime(p); }

inline BinaryForm mono(const Field& f, int a, int b) { return BinaryForm::monomial(f, a, b); }

inline BinaryForm poly(const Field& f, std::vector<long> coeffs) {
    Vector c;
    for (long v : coeffs) c.emplace_back(f, v);
    return BinaryForm(f, std::move(c));
}

inline Vector vec(const Field& f, std::vector<long> values) {
    Vector v;
    for (long x : values) v.emplace_back(f, x);
    return v;
}

inline Matrix mat(const Field& f, std::size_t cols, std::vector<std::vector<long>> rows) {
    std::vector<Vector> r;
    for (auto& row : rows) r.push_back(vec(f, row));
    return Matrix::fromRows(f, cols, r);
}

inline FormSpace spanOf(const Field& f, int degree, std::vector<BinaryForm> forms) {
    return FormSpace::span(f, degree, forms);
}

/// The running example <x^4, x^3 y, y^4>.
inline FormSpace example(const Field& f) { return spanOf(f, 4, {mono(f, 4, 0), mono(f, 3, 1), mono(f, 0, 4)}); }

inline OSequence seq(const char* text) { return OSequence::parse(text); }

/// Every subspace of F_p^n of the given dimension, as RREF matrices.
inline void forEachSubspace(const Field& f, int n, int dim, const std::function<void(const Matrix&)>& visit) {
    const auto p = static_cast<long>(f.characteristic());
    std::vector<int> pivots(static_cast<std::size_t>(dim));
    std::function<void(int, int)> choose = [&](int k, int start) {
        if (k == dim) {
            std::vector<std::pair<int, int>> free;
            for (int r = 0; r < dim; ++r)
                for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back({r, c});
            std::vector<long> digits(free.size(), 0);
            while (true) {
                Matrix m(f, static_cast<std::size_t>(dim), static_cast<std::size_t>(n));
                for (int r = 0; r < dim; ++r)
                    m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])) =
                        Scalar::one(f);
                for (std::size_t q = 0; q < free.size(); ++q)
                    m.at(static_cast<std::size_t>(free[q].first), static_cast<std::size_t>(free[q].second)) =
                        Scalar(f, digits[q]);
                visit(m);
                std::size_t q = 0;
                while (q < digits.size() && ++digits[q] == p) digits[q++] = 0;
                if (q == digits.size()) break;
            }
            return;
        }
        for (int c = start; c < n; ++c) {
            pivots[static_cast<std::size_t>(k)] = c;
            choose(k + 1, c + 1);
        }
    };
    choose(0, 0);
}

}  // namespace testing_support
