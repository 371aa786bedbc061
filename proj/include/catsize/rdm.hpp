#pragma once

#include <vector>

#include "catsize/hermitian.hpp"
#include "catsize/state_model.hpp"

namespace catsize {

// Symmetrized n-particle reduced density matrices of the two branches and of
// the full superposition, in the rotated-mode occupation basis (row/column
// index k in [0, n] counts quanta of the first rotated mode). All three are
// scaled to unit trace.
struct BranchRdms {
    int n = 0;
    HermitianMatrix rho_a;
    HermitianMatrix rho_b;
    HermitianMatrix rho_full;
};

// Large-N closed forms (the N-dependence is removed by the delta-function
// approximation of the cos^N / sin^N kernels; valid for N >> n):
//   (rho_A)^k_l = i^(k-l)/2^n sqrt(C(n,k)C(n,l)) e^(-2i(k-l)t0) e^(-2(k-l)^2 s^2)
// with the cross term carrying E+- = exp(-(t0 +- pi/4)^2 / 2 s^2) and the
// (-1)^(n+k-l) interference sign. For sigma = 0 the E+- factors are exactly
// 1 when t0 = -+pi/4 and exactly 0 otherwise.
BranchRdms rdm_closed_form(const GaussianSpread& spread, int n);

// Exact finite-N matrices: 2-D quadrature of f(theta) f(theta') against the
// cos^(N-n)(theta-theta') / sin^(N-n)(theta+theta') kernels with the phase
// factors of the pre-approximation integrals.
BranchRdms rdm_finite_n(const SuperpositionSpec& spec, int n,
                        const quad::Options& opts = {});

// Branch matrices only. Skips the cross term, so this stays defined at the
// degenerate points where the full state vanishes (t0 = -pi/4, sigma = 0,
// odd particle parity) and halves the quadrature work of distinguishability
// scans.
struct BranchPair {
    int n = 0;
    HermitianMatrix rho_a;
    HermitianMatrix rho_b;
};
BranchPair branch_pair_closed_form(const GaussianSpread& spread, int n);
BranchPair branch_pair_finite_n(const SuperpositionSpec& spec, int n,
                                const quad::Options& opts = {});

// Definite occupation numbers, one entry per mode.
struct FockOccupation {
    std::vector<long> counts;

    long total() const;
    int occupied_modes() const;
    void validate() const;
};

// All occupation patterns p with sum(p) = n and p_k <= occ.counts[k], in
// lexicographic order; this fixes the basis ordering of fock_rdm.
std::vector<std::vector<long>> fock_patterns(const FockOccupation& occ, int n);

// Diagonal n-RDM of a Fock state: entries are the multivariate
// hypergeometric probabilities prod_k C(n_k, p_k) / C(N, n).
HermitianMatrix fock_rdm(const FockOccupation& occ, int n);

// Exact binomial coefficient evaluated in double precision.
double binomial(long n, long k);

} // namespace catsize
