// Discretization of the periodic strip [0,Lx) x [0,1]:
// equispaced x samples with integer wavenumbers k in {-Nx/2+1,...,Nx/2},
// Chebyshev-Gauss-Lobatto z nodes with Clenshaw-Curtis weights, a dense
// collocation derivative Dz, and a spectrally accurate cumulative-integral
// operator Qz built in Chebyshev coefficient space.
#pragma once

#include <cmath>
#include <memory>

#include "hydroalpha/common.hpp"

namespace hydroalpha {

struct Grid {
    int Nx = 0;
    int Nz = 0;
    Real Lx = 2.0 * kPi;

    Vec z_nodes;    // ascending, z[0]=0, z[Nz-1]=1
    Vec z_weights;  // Clenshaw-Curtis on [0,1], sums to 1
    Mat Dz;         // first-derivative collocation operator
    Mat Qz;         // (Qz f)(z_j) = int_0^{z_j} f ; row 0 identically zero

    // cached Dz powers, Dzm[m-1] = Dz^m for m = 1..4
    std::array<Mat, 4> Dzm;

    // dense DFT matrices for the unitary-Parseval convention
    //   coeffs = values * analysis,  values = Re(coeffs * synthesis)
    MatC analysis;   // Nx x Nx, analysis(i,c) = exp(-i k_c x_i 2pi/Lx)/Nx
    MatC synthesis;  // Nx x Nx, synthesis(c,i) = exp(+i k_c x_i 2pi/Lx)

    // column <-> integer wavenumber
    int k_of_col(int c) const { return c <= Nx / 2 ? c : c - Nx; }
    int col_of_k(int k) const { return k >= 0 ? k : k + Nx; }
    Real xi_of_col(int c) const { return 2.0 * kPi * k_of_col(c) / Lx; }
    Real x_node(int i) const { return Lx * i / Nx; }
};

using GridPtr = std::shared_ptr<const Grid>;

namespace detail {

// DCT-I pair on the CGL angle grid. synthesisT(j,n) = T_n(y_j) = cos(pi n j / N);
// analysisT is its exact inverse in closed form.
inline Mat cheb_synthesis(int npts, int ncoef) {
    const int N = npts - 1;
    Mat T(npts, ncoef);
    for (int j = 0; j < npts; ++j)
        for (int n = 0; n < ncoef; ++n) T(j, n) = std::cos(kPi * n * j / N);
    return T;
}

inline Mat cheb_analysis(int npts) {
    const int N = npts - 1;
    Mat A(npts, npts);
    for (int n = 0; n < npts; ++n) {
        const Real cn = (n == 0 || n == N) ? 2.0 : 1.0;
        for (int j = 0; j < npts; ++j) {
            const Real cj = (j == 0 || j == N) ? 2.0 : 1.0;
            A(n, j) = 2.0 * std::cos(kPi * n * j / N) / (N * cn * cj);
        }
    }
    return A;
}

}  // namespace detail

inline GridPtr create_grid(int Nx, int Nz, Real Lx = 2.0 * kPi) {
    if (Nx < 8 || Nx % 2 != 0) throw ParameterError("create_grid: Nx must be even and >= 8");
    if (Nz < 8) throw ParameterError("create_grid: Nz must be >= 8");
    if (!(Lx > 0.0) || !std::isfinite(Lx)) throw ParameterError("create_grid: Lx must be positive");

    auto g = std::make_shared<Grid>();
    g->Nx = Nx;
    g->Nz = Nz;
    g->Lx = Lx;

    const int N = Nz - 1;
    Vec y(Nz);
    for (int j = 0; j < Nz; ++j) y(j) = std::cos(kPi * j / N);
    g->z_nodes = (1.0 - y.array()) / 2.0;
    g->z_nodes(0) = 0.0;
    g->z_nodes(N) = 1.0;

    // Clenshaw-Curtis weights (exact for degree <= N), halved onto [0,1].
    g->z_weights = Vec(Nz);
    for (int i = 0; i <= N; ++i) {
        Real s = 0.0;
        for (int k = 1; k <= N / 2; ++k) {
            const Real bk = (2 * k == N) ? 1.0 : 2.0;
            s += bk / (4.0 * k * k - 1.0) * std::cos(2.0 * kPi * k * i / N);
        }
        const Real ci = (i == 0 || i == N) ? 1.0 : 2.0;
        g->z_weights(i) = 0.5 * ci / N * (1.0 - s);
    }

    // Differentiation matrix on y (descending CGL), chain rule y = 1 - 2z.
    // Diagonal by negative row sums so Dz annihilates constants exactly.
    Mat Dy = Mat::Zero(Nz, Nz);
    Vec cbar = Vec::Ones(Nz);
    cbar(0) = cbar(N) = 2.0;
    for (int i = 0; i < Nz; ++i)
        for (int j = 0; j < Nz; ++j)
            if (i != j) Dy(i, j) = (cbar(i) / cbar(j)) * ((i + j) % 2 == 0 ? 1.0 : -1.0) / (y(i) - y(j));
    for (int i = 0; i < Nz; ++i) Dy(i, i) = -Dy.row(i).sum();
    g->Dz = -2.0 * Dy;

    g->Dzm[0] = g->Dz;
    for (int m = 1; m < 4; ++m) g->Dzm[m] = g->Dz * g->Dzm[m - 1];

    // Qz: values -> Chebyshev coefficients -> antiderivative coefficients
    // (one extra degree so the map is exact on every grid-representable
    // polynomial) -> values, anchored at z=0.  F(z) = (B(1) - B(y(z)))/2.
    {
        const Mat A = detail::cheb_analysis(Nz);
        Mat S = Mat::Zero(Nz + 1, Nz);  // coefficient antiderivative in y
        S(1, 0) = 1.0;
        if (Nz > 2) S(1, 2) = -0.5;
        for (int n = 2; n <= Nz; ++n) {
            S(n, n - 1) = 1.0 / (2.0 * n);
            if (n + 1 < Nz) S(n, n + 1) -= 1.0 / (2.0 * n);
        }
        const Mat T = detail::cheb_synthesis(Nz, Nz + 1);
        const Mat B = T * S * A;  // antiderivative values at the nodes
        g->Qz = 0.5 * (Vec::Ones(Nz) * B.row(0) - B);
        g->Qz.row(0).setZero();  // exact lower-limit anchor
    }

    // DFT matrices; the x_i k_c products reduce to roots of unity.
    g->analysis = MatC(Nx, Nx);
    g->synthesis = MatC(Nx, Nx);
    for (int c = 0; c < Nx; ++c) {
        const int k = g->k_of_col(c);
        for (int i = 0; i < Nx; ++i) {
            const Real phase = 2.0 * kPi * k * i / Nx;
            g->analysis(i, c) = std::polar(1.0 / Nx, -phase);
            g->synthesis(c, i) = std::polar(1.0, phase);
        }
    }
    return g;
}

}  // namespace hydroalpha
