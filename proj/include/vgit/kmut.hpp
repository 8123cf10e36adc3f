#pragma once

// K_0 shadows of semiorthogonal decompositions: Euler forms, mutations,
// adjoint projections, spherical twists and their factorizations.
//
// Conventions:
//   chi(x, y) = x^T E y, basis vectors are coordinate vectors.
//   <A, B> means chi(b, a) = 0 for a in A, b in B (A comes first).
//   Matrices act on column vectors of coefficients in a block basis.
//   A base change M has the new basis vectors as its rows; E' = M E M^T.

#include <string>
#include <vector>

#include "vgit/matrix.hpp"

namespace vgit {

inline bool isUpperUnitriangular(const IntMatrix& E) {
    if (E.rows != E.cols) return false;
    for (std::size_t i = 0; i < E.rows; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (E(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

enum class MutationSide { Left, Right };

struct Mutation {
    IntMatrix gram;
    IntMatrix baseChange;
};

// left:  (f_k, f_k+1) -> (f_k+1 - chi(f_k,f_k+1) f_k, f_k)
// right: (f_k, f_k+1) -> (f_k+1, f_k - chi(f_k,f_k+1) f_k+1)
inline Mutation mutate(const IntMatrix& E, std::size_t k, MutationSide side) {
    const std::size_t n = E.rows;
    if (n < 2 || k + 1 >= n)
        throw Error(ErrorKind::IndexOutOfRange, "mutation slot " + std::to_string(k) + " in rank " + std::to_string(n));
    const i64 c = E(k, k + 1);
    IntMatrix M = IntMatrix::identity(n);
    M(k, k) = 0;
    M(k + 1, k + 1) = 0;
    if (side == MutationSide::Left) {
        M(k, k + 1) = 1;
        M(k, k) = -c;
        M(k + 1, k) = 1;
    } else {
        M(k, k + 1) = 1;
        M(k + 1, k) = 1;
        M(k + 1, k + 1) = -c;
    }
    return {M * E * M.transpose(), M};
}

inline Mutation mutateSequence(const IntMatrix& E, const std::vector<std::pair<std::size_t, MutationSide>>& steps) {
    Mutation acc{E, IntMatrix::identity(E.rows)};
    for (auto [k, side] : steps) {
        Mutation m = mutate(acc.gram, k, side);
        acc.gram = m.gram;
        acc.baseChange = m.baseChange * acc.baseChange;
    }
    return acc;
}

// -- adjoints -----------------------------------------------------------------

inline QMatrix coordinateBlock(std::size_t n, const std::vector<std::size_t>& idx) {
    QMatrix W(n, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) W(idx[j], j) = 1;
    return W;
}

inline Rational chiPair(const QMatrix& E, const QMatrix& x, const QMatrix& y) { return (x.transpose() * E * y)(0, 0); }

enum class AdjointSide { Left, Right };

struct AdjointResult {
    QMatrix coeffs;  // block coordinates, one column per input
    QMatrix vectors; // ambient coordinates
    bool integral = true;
};

// Left adjoint onto span(W): b with chi(b, b') = chi(x, b') for b' in the block.
// Right adjoint onto span(W): a' with chi(a, a') = chi(a, x) for a in the block.
inline AdjointResult adjointProject(const QMatrix& E, const QMatrix& W, const QMatrix& X, AdjointSide side) {
    QMatrix gram = W.transpose() * E * W;
    std::optional<QMatrix> c;
    if (side == AdjointSide::Left)
        c = solve(gram.transpose(), W.transpose() * E.transpose() * X);
    else
        c = solve(gram, W.transpose() * E * X);
    if (!c)
        throw Error(ErrorKind::AdjointUnsolvable, "block Gram matrix is singular");
    AdjointResult r{*c, W * *c, true};
    r.integral = isIntegral(r.coeffs);
    return r;
}

struct SphericalShadow {
    QMatrix S; // A -> G
    QMatrix R; // G -> A
    QMatrix F; // cotwist on A
    QMatrix T; // twist on G
    bool integral = true;
};

// ambient splitting <A, G>: S = i_G^L restricted to A, R = i_A^R restricted to G
inline SphericalShadow sphericalShadow(const QMatrix& E, const QMatrix& Wa, const QMatrix& Wg) {
    if (!(Wg.transpose() * E * Wa).isZero())
        throw Error(ErrorKind::InvalidInput, "splitting is not semiorthogonal: chi(G, A) != 0");
    SphericalShadow sh;
    sh.S = adjointProject(E, Wg, Wa, AdjointSide::Left).coeffs;
    sh.R = adjointProject(E, Wa, Wg, AdjointSide::Right).coeffs;
    sh.F = sh.R * sh.S - QMatrix::identity(Wa.cols);
    sh.T = QMatrix::identity(Wg.cols) - sh.S * sh.R;
    sh.integral = isIntegral(sh.S) && isIntegral(sh.R);
    return sh;
}

// restrict the form to span(W), so blocks become coordinate blocks
inline QMatrix restrictForm(const QMatrix& E, const QMatrix& W) { return W.transpose() * E * W; }

inline std::vector<std::size_t> indexRange(std::size_t from, std::size_t count) {
    std::vector<std::size_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = from + i;
    return v;
}

struct TwistMutationResult {
    bool holds = false;
    QMatrix twist;     // T_S on B
    QMatrix mutations; // L_{A'} L_A on B
};

// C = <A, B>; compares T_S with the composite of mutations B -> A^perp -> B
inline TwistMutationResult verifyTwistMutation(const QMatrix& E, const QMatrix& Wa, const QMatrix& Wb) {
    const QMatrix Ec = restrictForm(E, hconcat(Wa, Wb));
    const std::size_t ka = Wa.cols, kb = Wb.cols, n = ka + kb;
    const QMatrix A = coordinateBlock(n, indexRange(0, ka));
    const QMatrix B = coordinateBlock(n, indexRange(ka, kb));
    if (determinant(Ec) == 0)
        throw Error(ErrorKind::AdjointUnsolvable, "form on C is degenerate");

    TwistMutationResult res;
    res.twist = sphericalShadow(Ec, A, B).T;

    const QMatrix Aprime = nullspace((Ec * B).transpose()); // left orthogonal of B
    const QMatrix y = B - adjointProject(Ec, A, B, AdjointSide::Right).vectors;
    const QMatrix z = y - adjointProject(Ec, Aprime, y, AdjointSide::Right).vectors;
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j)
            if (z(i, j) != 0)
                throw Error(ErrorKind::Internal, "mutation composite left the block B");
    res.mutations = z.rowsOf(indexRange(ka, kb));
    res.holds = res.twist == res.mutations;
    return res;
}

struct FactorizationResult {
    bool hypothesisHolds = false;
    bool identityHolds = false;
    QMatrix T, TA, TB;
};

// ambient <E, G> with E = <A, B>; checks T_S = T_{S_A} T_{S_B}
inline FactorizationResult verifyFactorization(const QMatrix& E, const QMatrix& Wa, const QMatrix& Wb,
                                               const QMatrix& Wg) {
    const QMatrix Ec = restrictForm(E, hconcat(hconcat(Wa, Wb), Wg));
    const std::size_t ka = Wa.cols, kb = Wb.cols, kg = Wg.cols, n = ka + kb + kg;
    const QMatrix A = coordinateBlock(n, indexRange(0, ka));
    const QMatrix B = coordinateBlock(n, indexRange(ka, kb));
    const QMatrix AB = coordinateBlock(n, indexRange(0, ka + kb));
    const QMatrix G = coordinateBlock(n, indexRange(ka + kb, kg));

    FactorizationResult r;
    SphericalShadow full = sphericalShadow(Ec, AB, G);
    // chi(a, F_S(b)) for basis a in A and b in B
    const QMatrix FB = full.F.columnsOf(indexRange(ka, kb));
    r.hypothesisHolds = (A.transpose() * Ec * AB * FB).isZero();
    r.T = full.T;
    r.TA = sphericalShadow(Ec, A, G).T;
    r.TB = sphericalShadow(Ec, B, G).T;
    r.identityHolds = r.T == r.TA * r.TB;
    return r;
}

struct IteratedFactorization {
    bool allHypotheses = true;
    bool productMatches = false;
    std::vector<QMatrix> twists; // T_{S_0}, ..., T_{S_N}
};

// E-block = <E_0, ..., E_N> given as consecutive coordinate blocks of the given sizes
inline IteratedFactorization verifyIteratedFactorization(const QMatrix& E, const std::vector<std::size_t>& pieceSizes,
                                                         std::size_t gSize) {
    std::size_t kE = 0;
    for (auto s : pieceSizes) kE += s;
    const std::size_t n = kE + gSize;
    if (E.rows != n)
        throw Error(ErrorKind::InvalidInput, "block sizes do not match the form");
    const QMatrix G = coordinateBlock(n, indexRange(kE, gSize));

    IteratedFactorization out;
    QMatrix product = QMatrix::identity(gSize);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < pieceSizes.size(); ++j) {
        const QMatrix Aj = coordinateBlock(n, indexRange(offset, pieceSizes[j]));
        out.twists.push_back(sphericalShadow(E, Aj, G).T);
        product = product * out.twists.back();
        const std::size_t rest = kE - offset - pieceSizes[j];
        if (rest > 0) {
            const QMatrix Bj = coordinateBlock(n, indexRange(offset + pieceSizes[j], rest));
            out.allHypotheses = out.allHypotheses && verifyFactorization(E, Aj, Bj, G).hypothesisHolds;
        }
        offset += pieceSizes[j];
    }
    out.productMatches = product == sphericalShadow(E, coordinateBlock(n, indexRange(0, kE)), G).T;
    return out;
}

// -- factorization plan -------------------------------------------------------

struct PlanWindow {
    std::string name;
    std::vector<std::string> conditions;
};

struct PlanStep {
    std::string from, to, twist;
};

struct FactorizationPlan {
    i64 collectionLength = 0;
    i64 eta = 0;
    i64 w = 0;
    std::vector<PlanWindow> windows; // H_{N+1} = G_{w+1}, ..., H_0 = G_w
    std::vector<PlanStep> steps;
    std::vector<std::string> compositionOrder;
    std::size_t intermediateWindows = 0;
};

inline FactorizationPlan factorizationPlan(i64 collectionLength, i64 eta, i64 w) {
    if (collectionLength < 1)
        throw Error(ErrorKind::InvalidInput, "collection length must be positive");
    const i64 N = collectionLength - 1;
    FactorizationPlan p{collectionLength, eta, w, {}, {}, {}, static_cast<std::size_t>(N)};
    auto hName = [&](i64 i) {
        if (i == N + 1) return "G_" + std::to_string(w + 1);
        if (i == 0) return "G_" + std::to_string(w);
        return "H_" + std::to_string(i);
    };
    for (i64 i = N + 1; i >= 0; --i) {
        PlanWindow win{hName(i), {}};
        win.conditions.push_back("weights in [" + std::to_string(w + 1) + "," + std::to_string(w + eta) +
                                 ") unrestricted");
        if (i > 0)
            win.conditions.push_back("Hom((sigma*F)_" + std::to_string(w) + ", E_j) = 0 for j < " + std::to_string(i));
        if (i <= N)
            win.conditions.push_back("Hom(E_j, (sigma*F (x) kappa+)_" + std::to_string(w) + ") = 0 for j >= " +
                                     std::to_string(i));
        p.windows.push_back(std::move(win));
    }
    for (i64 i = N; i >= 0; --i)
        p.steps.push_back({hName(i + 1), hName(i), "T_{S_" + std::to_string(i) + "}"});
    for (i64 i = 0; i <= N; ++i)
        p.compositionOrder.push_back("T_{S_" + std::to_string(i) + "}");
    return p;
}

// chi(O(i), O(j)) = number of monomials of weighted degree j - i
inline IntMatrix weightedProjectiveGram(const std::vector<i64>& weights) {
    i64 L = 0;
    for (auto d : weights) L += d;
    std::vector<i64> count(static_cast<std::size_t>(L), 0);
    count[0] = 1;
    for (auto d : weights)
        for (i64 k = d; k < L; ++k) count[k] += count[k - d];
    IntMatrix G(L, L);
    for (i64 i = 0; i < L; ++i)
        for (i64 j = i; j < L; ++j) G(i, j) = count[j - i];
    return G;
}

} // namespace vgit
