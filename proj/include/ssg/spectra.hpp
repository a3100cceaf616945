#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/selfsim.hpp"

namespace ssg::spectra {

// Dense symmetric matrix; construction validates exact symmetry.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;   // row-major, n*n

    static SymMatrix zero(int n);
    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    void check_symmetric() const;
};

struct Spectrum {
    std::vector<double> values;        // ascending, grouped at tol
    std::vector<int> multiplicity;     // aligned with values; sums to dimension
    double tol = 0.0;
    int dimension = 0;
};

// Sum of the level-n permutation matrices of the symmetrized generators,
// divided by their count iff normalized. Entry (u, v) counts generators with
// v^s = u. Empty gen_names selects all generators.
SymMatrix hecke_matrix(const selfsim::Group& g, const std::vector<std::string>& gen_names,
                       int n, bool normalized, size_t max_points = 65536);

// All eigenvalues by the cyclic Jacobi rotation method, ascending, to absolute
// accuracy tol. Throws after the sweep cap with the residual in the message.
std::vector<double> eigenvalues_raw(SymMatrix m, double tol);

// Eigenvalues grouped into multiplicities at tol.
Spectrum eigenvalues_sym(const SymMatrix& m, double tol);

// Closed-form level spectrum of the Fabrykowski-Gupta operator
// a_n + a_n^{-1} + s_n + s_n^{-1}: {4} at level 0, {1,4} at level 1, then
// {1,4} together with 1 +- sqrt(5 - theta) over the preimage sets
// X_m = F^{-1}(X_{m-1}), F(theta) = 4 - 2 theta - theta^2, X_2 = {-1}.
// Values only, ascending; multiplicities left empty.
Spectrum fg_spectrum_closed(int n);

// Pointwise check of the Fabrykowski-Gupta determinant recursion for
// Q_n = S_n + lambda A_n - mu I at `samples` pseudorandom points, plus the
// closed base cases at levels 0 and 1. Relative tolerance tol.
bool fg_detq_check(int n, int samples, std::uint64_t seed, double tol);

// Pointwise check of the two-parameter determinant recursion for the group
// a=(b,1)(01), b=(a,1): compares the direct determinant at level k+1 with the
// level-k value at substituted arguments.
bool img_phi_recursion_check(int k, int samples, std::uint64_t seed, double tol);

struct DetResult {
    double value = 0.0;
    bool singular = false;
};

// LU determinant with partial pivoting; pivots below 1e-300 flag singularity.
DetResult determinant(std::vector<std::vector<double>> m);

} // namespace ssg::spectra
