// Scalar fields on the strip, stored as per-z-node horizontal Fourier
// coefficients, plus the exact spectral/collocation calculus on them.
//
// Conventions: f(x_i, z_j) = sum_k coeffs(j, col(k)) e^{i (2pi k/Lx) x_i};
// l2_inner is the L2(S) product, so Parseval reads
//   <f,f> = Lx * sum_k sum_j w_j |coeffs(k,j)|^2 .
#pragma once

#include <cmath>

#include "hydroalpha/grid.hpp"

namespace hydroalpha {

struct Field {
    GridPtr grid;
    MatC coeffs;  // Nz rows (z node) x Nx cols (wavenumber)

    Field() = default;
    explicit Field(GridPtr g) : grid(std::move(g)), coeffs(MatC::Zero(grid->Nz, grid->Nx)) {}
    Field(GridPtr g, MatC c) : grid(std::move(g)), coeffs(std::move(c)) {}

    bool same_grid(const Field& o) const { return grid.get() == o.grid.get(); }
};

inline void require_same_grid(const Field& f, const Field& g, const char* who) {
    if (!f.same_grid(g)) throw ParameterError(std::string(who) + ": grid mismatch");
}

inline Field to_coeffs(const GridPtr& grid, const Mat& values) {
    if (values.rows() != grid->Nz || values.cols() != grid->Nx)
        throw ParameterError("to_coeffs: values shape does not match grid");
    return Field(grid, values * grid->analysis);
}

// Synthesis at the collocation nodes; real part (fields representing real
// functions carry conjugate-symmetric coefficients).
inline Mat to_values(const Field& f) { return (f.coeffs * f.grid->synthesis).real(); }

// Complex synthesis, for products of fields that are not conjugate-symmetric.
inline MatC to_values_complex(const Field& f) { return f.coeffs * f.grid->synthesis; }

inline Field to_coeffs_complex(const GridPtr& grid, const MatC& values) {
    if (values.rows() != grid->Nz || values.cols() != grid->Nx)
        throw ParameterError("to_coeffs: values shape does not match grid");
    return Field(grid, values * grid->analysis);
}

inline Field d_x(const Field& f) {
    Field out(f.grid, f.coeffs);
    for (int c = 0; c < f.grid->Nx; ++c)
        out.coeffs.col(c) *= Complex(0.0, f.grid->xi_of_col(c));
    return out;
}

inline Field d_z(const Field& f, int m) {
    if (m < 1 || m > 4) throw ParameterError("d_z: derivative order must be in 1..4");
    return Field(f.grid, f.grid->Dzm[m - 1] * f.coeffs);
}

template <typename Symbol>  // Symbol: Real xi -> Complex (or Real)
inline Field fourier_multiplier(const Field& f, Symbol&& m) {
    Field out(f.grid, f.coeffs);
    for (int c = 0; c < f.grid->Nx; ++c) {
        const Complex mv = m(f.grid->xi_of_col(c));
        if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
            throw NumericError("fourier_multiplier: non-finite symbol value");
        out.coeffs.col(c) *= mv;
    }
    return out;
}

inline Real l2_inner(const Field& f, const Field& g) {
    require_same_grid(f, g, "l2_inner");
    Real acc = 0.0;
    for (int j = 0; j < f.grid->Nz; ++j)
        acc += f.grid->z_weights(j) * (f.coeffs.row(j).conjugate().cwiseProduct(g.coeffs.row(j))).sum().real();
    return f.grid->Lx * acc;
}

inline Real l2_norm(const Field& f) { return std::sqrt(std::max(0.0, l2_inner(f, f))); }

// Per-wavenumber quadrature over z: line(k) = int_0^1 fhat(k, z) dz.
inline VecC z_integral(const Field& f) {
    return (f.grid->z_weights.transpose().cast<Complex>() * f.coeffs).transpose();
}

// F(x,z) = int_0^z f(x,~z) d~z ; F(.,0) = 0 exactly (Qz row 0 is zero).
inline Field z_antiderivative(const Field& f) { return Field(f.grid, f.grid->Qz * f.coeffs); }

enum class Wall { Z0, Z1 };

inline VecC boundary_trace(const Field& f, int m, Wall wall) {
    if (m < 0 || m > 3) throw ParameterError("boundary_trace: derivative order must be in 0..3");
    const int row = (wall == Wall::Z0) ? 0 : f.grid->Nz - 1;
    if (m == 0) return f.coeffs.row(row).transpose();
    return (f.grid->Dzm[m - 1] * f.coeffs).row(row).transpose();
}

// Largest conjugate-symmetry defect over the paired wavenumbers
// (Nyquist is self-paired and not checked).
inline Real conjugate_symmetry_defect(const Field& f) {
    Real worst = 0.0;
    for (int k = 1; k < f.grid->Nx / 2; ++k) {
        const int cp = f.grid->col_of_k(k), cm = f.grid->col_of_k(-k);
        for (int j = 0; j < f.grid->Nz; ++j)
            worst = std::max(worst, std::abs(f.coeffs(j, cm) - std::conj(f.coeffs(j, cp))));
    }
    return worst;
}

}  // namespace hydroalpha
