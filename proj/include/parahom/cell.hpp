#pragma once

#include <optional>
#include <vector>

#include "parahom/coefficients.hpp"
#include "parahom/core.hpp"

namespace parahom {

// Discrete (1,lambda)-torus. Ny spatial points per dimension (power of two),
// Ns time slices over one period.
struct TorusGrid {
    int d = 1;
    int Ny = 128;
    int Ns = 128;
    void validate() const {
        require(d == 1 || d == 2, "TorusGrid: d must be 1 or 2");
        require(Ny >= 8 && Ns >= 8, "TorusGrid: Ny, Ns must be >= 8");
        require(is_power_of_two(Ny), "TorusGrid: Ny must be a power of two");
    }
    int spatial_points() const { return d == 1 ? Ny : Ny * Ny; }
};

enum class CellKind { Lambda, Infinity, Zero };

const char* to_string(CellKind k);

// Grid samples of chi_j and grad_y chi_j at one macro point.
// Layout: chi[j] holds n_slices() blocks of spatial_points() values, slice-major.
struct CorrectorSet {
    CellKind kind = CellKind::Lambda;
    double lambda = 0.0;  // kind Lambda only
    MacroPoint xt;
    TorusGrid grid;
    std::vector<std::vector<double>> chi;                    // [j]
    std::vector<std::array<std::vector<double>, 2>> dchi;    // [j][dir]
    std::vector<double> period_gaps;                         // lambda-cell fixed-point history

    int n_slices() const { return kind == CellKind::Zero ? 1 : grid.Ns; }
    double space_time_mean(int j) const;
    double slice_mean(int j, int slice) const;
    // mean over the torus of |grad chi_j|^2 + chi_j^2  (discrete version of (2.4))
    double energy_mean(int j) const;
};

struct EffectiveTensor {
    Mat2 A;
    CellKind kind = CellKind::Lambda;
    double lambda = 0.0;
    MacroPoint xt;
};

struct CellOptions {
    double tol_residual = 1e-10;   // linear-solver relative residual
    double tol_periodic = 1e-10;   // fixed-point period gap (rms, relative)
    int max_sweeps = 500;
    const CorrectorSet* warm_start = nullptr;  // previous lambda-cell solution
};

// Time-periodic parabolic cell problem (2.3): spectral in y, implicit Euler in s,
// iterated to the periodic fixed point. Throws SolverError on non-convergence.
CorrectorSet solve_cell_lambda(const CoefficientField& f, const MacroPoint& xt, const TorusGrid& grid,
                               double lambda, const CellOptions& opts = {});

// Elliptic cell problem (2.11) per time slice.
CorrectorSet solve_cell_infinity(const CoefficientField& f, const MacroPoint& xt, const TorusGrid& grid,
                                 const CellOptions& opts = {});

// Elliptic cell problem (2.12) with the time-averaged coefficient.
CorrectorSet solve_cell_zero(const CoefficientField& f, const MacroPoint& xt, const TorusGrid& grid,
                             const CellOptions& opts = {});

// A-hat = torus average of A (I + grad chi), quadrature matching the corrector grid.
EffectiveTensor effective_tensor(const CoefficientField& f, const MacroPoint& xt, const CorrectorSet& corr);

// Regime selection (2.26): rho = 0 -> A^0, rho = inf -> A^inf, else the lambda cell at lambda = rho.
EffectiveTensor select_effective(const CoefficientField& f, const MacroPoint& xt, double rho,
                                 const TorusGrid& grid, const CellOptions& opts = {});

struct ComparisonReport {
    std::vector<double> lambdas;
    std::vector<double> dev_vs_inf;   // ||A^lam - A^inf||_max
    std::vector<double> dev_vs_zero;  // ||A^lam - A^0||_max
    LineFit slope_vs_inf;             // expected ~ -1 per (2.18)
    LineFit slope_vs_zero;            // expected ~ +1 per (2.20)
    std::vector<double> pairwise_219; // ||A^l1 - A^l2|| / |1 - l2/l1| for consecutive pairs
    bool degenerate_inf = false;
    bool degenerate_zero = false;
};

// Lemma 2.3 sweep; lambdas must contain at least 4 values.
ComparisonReport lambda_comparison_sweep(const CoefficientField& f, const MacroPoint& xt,
                                         std::span<const double> lambdas, const TorusGrid& grid,
                                         const CellOptions& opts = {});

}  // namespace parahom
