#pragma once

// Seeded random instances for the property suites.

#include <cstdlib>
#include <random>
#include <vector>

#include "vgit/gkz.hpp"
#include "vgit/kmut.hpp"

namespace vgit {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20131107;

// seed from VGIT_SEED when set
inline std::uint64_t defaultSeed() {
    if (const char* s = std::getenv("VGIT_SEED"))
        return std::strtoull(s, nullptr, 10);
    return kDefaultSeed;
}

inline i64 uniform(Rng& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

// valid CY weight matrix, 3 <= m <= maxColumns, entries in [-bound, bound]
inline std::vector<std::vector<i64>> randomCYTable(Rng& rng, std::size_t maxColumns = 8, i64 bound = 4) {
    for (;;) {
        const std::size_t m = static_cast<std::size_t>(uniform(rng, 3, static_cast<i64>(maxColumns)));
        std::vector<std::vector<i64>> t(2, std::vector<i64>(m, 0));
        for (int r = 0; r < 2; ++r) {
            i64 s = 0;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                t[r][i] = uniform(rng, -bound, bound);
                s += t[r][i];
            }
            t[r][m - 1] = -s;
        }
        if (std::abs(t[0][m - 1]) > bound || std::abs(t[1][m - 1]) > bound)
            continue;
        try {
            parseAndValidate(t);
            return t;
        } catch (const Error&) {
        }
    }
}

inline IntMatrix randomExceptional(Rng& rng, std::size_t rank, i64 bound = 5) {
    IntMatrix E = IntMatrix::identity(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) E(i, j) = uniform(rng, -bound, bound);
    return E;
}

// product of unitriangular factors and a sign, so det = +-1
inline IntMatrix randomUnimodular(Rng& rng, std::size_t n, i64 bound = 2) {
    IntMatrix U = IntMatrix::identity(n), L = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            U(i, j) = uniform(rng, -bound, bound);
            L(j, i) = uniform(rng, -bound, bound);
        }
    IntMatrix M = U * L;
    if (uniform(rng, 0, 1) == 1)
        for (std::size_t j = 0; j < n; ++j) M(0, j) = -M(0, j);
    return M;
}

inline void placeBlock(IntMatrix& E, const IntMatrix& B, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < B.cols; ++j) E(r0 + i, c0 + j) = B(i, j);
}

inline IntMatrix randomBlock(Rng& rng, std::size_t r, std::size_t c, i64 bound) {
    IntMatrix M(r, c);
    for (auto& v : M.a) v = uniform(rng, -bound, bound);
    return M;
}

struct SplitInstance {
    IntMatrix E;
    std::vector<std::size_t> sizes; // consecutive block sizes
};

// <A, B> with unimodular block Grams, rank <= maxRank
inline SplitInstance random311(Rng& rng, std::size_t maxRank = 6) {
    const std::size_t ka = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxRank) - 1));
    const std::size_t kb = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxRank - ka)));
    IntMatrix E(ka + kb, ka + kb);
    placeBlock(E, randomUnimodular(rng, ka), 0, 0);
    placeBlock(E, randomUnimodular(rng, kb), ka, ka);
    placeBlock(E, randomBlock(rng, ka, kb, 3), 0, ka);
    return {E, {ka, kb}};
}

// coefficients of i_G^L(e_k) for the rows of E listed in `from`, integral when G is unimodular
inline QMatrix leftAdjointCoeffs(const IntMatrix& E, std::size_t g0, std::size_t kg, const std::vector<std::size_t>& from) {
    const QMatrix Eq = toRational(E);
    const QMatrix G = coordinateBlock(E.rows, indexRange(g0, kg));
    return adjointProject(Eq, G, coordinateBlock(E.rows, from), AdjointSide::Left).coeffs;
}

// <<A, B>, G>; with `constructed` the block chi(A, B) is chosen so the K_0
// hypothesis chi(a, F_S(b)) = 0 holds
inline SplitInstance random412(Rng& rng, bool constructed, std::size_t maxRank = 6) {
    const std::size_t ka = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxRank) - 2));
    const std::size_t kb = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxRank - ka) - 1));
    const std::size_t kg = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxRank - ka - kb)));
    const std::size_t n = ka + kb + kg;
    IntMatrix E(n, n);
    placeBlock(E, randomUnimodular(rng, ka, 1), 0, 0);
    placeBlock(E, randomUnimodular(rng, kb, 1), ka, ka);
    placeBlock(E, randomUnimodular(rng, kg, 1), ka + kb, ka + kb);
    placeBlock(E, randomBlock(rng, ka, kg, 2), 0, ka + kb);
    placeBlock(E, randomBlock(rng, kb, kg, 2), ka, ka + kb);
    if (constructed) {
        QMatrix C = leftAdjointCoeffs(E, ka + kb, kg, indexRange(ka, kb));
        QMatrix X = toRational(E).rowsOf(indexRange(0, ka)).columnsOf(indexRange(ka + kb, kg)) * C;
        for (std::size_t i = 0; i < ka; ++i)
            for (std::size_t j = 0; j < kb; ++j)
                E(i, ka + j) = static_cast<i64>(boost::multiprecision::numerator(X(i, j)));
    } else {
        placeBlock(E, randomBlock(rng, ka, kb, 2), 0, ka);
    }
    return {E, {ka, kb, kg}};
}

// <E_0, ..., E_N, G> with rank-one E_j and every step hypothesis satisfied
inline SplitInstance randomIterated(Rng& rng, std::size_t maxPieces = 4, std::size_t maxG = 2) {
    const std::size_t N1 = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxPieces)));
    const std::size_t kg = static_cast<std::size_t>(uniform(rng, 1, static_cast<i64>(maxG)));
    const std::size_t n = N1 + kg;
    IntMatrix E(n, n);
    for (std::size_t j = 0; j < N1; ++j) E(j, j) = 1;
    placeBlock(E, randomUnimodular(rng, kg, 1), N1, N1);
    placeBlock(E, randomBlock(rng, N1, kg, 2), 0, N1);
    QMatrix C = leftAdjointCoeffs(E, N1, kg, indexRange(0, N1));
    QMatrix X = toRational(E).rowsOf(indexRange(0, N1)).columnsOf(indexRange(N1, kg)) * C;
    for (std::size_t j = 0; j < N1; ++j)
        for (std::size_t k = j + 1; k < N1; ++k)
            E(j, k) = static_cast<i64>(boost::multiprecision::numerator(X(j, k)));
    std::vector<std::size_t> sizes(N1, 1);
    sizes.push_back(kg);
    return {E, sizes};
}

} // namespace vgit
