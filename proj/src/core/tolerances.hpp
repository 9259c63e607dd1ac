#pragma once

namespace qeg {

// Every numeric threshold used by the library, in one place. The feasibility
// logic is exact integer arithmetic and takes none of these; everything that
// touches floating point reads its tolerance from here.
struct Tolerances {
    double jacobi_offdiag_rel = 1e-12;  // off-diagonal Frobenius target, relative to ||m||_F
    int jacobi_max_sweeps = 100;
    double tol_residual = 1e-9;    // ||M v - lambda v||_inf per eigenpair
    double tol_ortho = 1e-9;       // pairwise orthonormality of eigenvectors
    double qe_class_band = 1e-9;   // |qec| <= band classifies as boundary
    double cross_check_max = 1e-8; // closed form vs numeric disagreement
    double spectrum_cluster = 1e-6; // gap that splits eigenvalue clusters
    double spectrum_value = 1e-8;   // cluster value vs predicted eigenvalue
    double embed_psd_rel = 1e-9;    // Gram eigenvalue below -rel*||M||_max means non-QE
    double embed_rank = 1e-9;       // Gram eigenvalues above this carry coordinates
    double embed_max_dev = 1e-8;    // squared-distance reconstruction bound
};

inline constexpr Tolerances kTol{};

}  // namespace qeg
