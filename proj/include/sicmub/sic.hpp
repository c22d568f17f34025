// Weyl-Heisenberg SIC-POVM construction from a fiducial vector,
// verification of the defining overlap property, the minimum-uncertainty
// and autocorrelation fiduciality criteria in probabilistic and geometric
// form, SIC reconstruction from MUB-plane data, and numerical fiducial
// search by seeded multi-start descent.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sicmub/bloch.hpp"
#include "sicmub/tolerances.hpp"

namespace sicmub {

struct FiducialCandidate {
    PrimeDim dim;
    Ket ket;
};

// A fiducial orbit: the d^2 displaced kets, their Bloch vectors (indexed
// q1*d + q2), and the MUB outcome probabilities p_{m,a} of the fiducial
// (row m.index, the "inf" basis last).
struct SicEnsemble {
    FiducialCandidate fiducial;
    std::vector<Ket> kets;
    std::vector<BlochVector> blochs;
    Eigen::MatrixXd probs;
};

struct CriterionResult {
    double deviation = -1.0;  // < 0 means not computed
    double tolerance = 0.0;
    bool computed() const { return deviation >= 0.0; }
    bool pass() const { return computed() && deviation <= tolerance; }
};

// Pure data; pass/fail is always recorded next to the tolerance used.
struct VerificationReport {
    int d = 0;
    CriterionResult sic_overlap;              // fiducial condition, max over q != 0
    CriterionResult resolution_of_identity;   // ||(1/d) sum |psi_q><psi_q| - 1||_F
    CriterionResult min_uncertainty;          // max over m
    CriterionResult autocorrelation;          // max over (m, shift != 0), the
                                              // shift-0 target being min_uncertainty
    CriterionResult geometric_simplex;        // max over (m, a)
    CriterionResult prob_geom_agreement;      // two routes to <Q_m B, S^a Q_m B>
    Eigen::VectorXd min_uncertainty_per_m;    // d+1 deviations
    Eigen::MatrixXd autocorrelation_per_shift;  // (d+1) x d deviations
    Eigen::MatrixXd geometric_per_shift;        // (d+1) x d deviations
    std::optional<UfExponentVariant> uf_variant;
    std::optional<ZmEigenvalueVariant> zm_variant;

    bool all_pass() const;  // over the criteria actually computed
};

// Checks | |<psi|D_q psi>|^2 - 1/(d+1) | over q != 0 and the resolution of
// the identity; fills only those sections of the report.
VerificationReport verify_fiducial(const FiducialCandidate& psi,
                                   double tol_sic = tol::sic_verify);

// Full report: fiducial condition, minimum uncertainty, autocorrelation,
// geometric simplex criterion and the probabilistic/geometric cross-check,
// with the formula variants selected by the family.
VerificationReport verify_full(const FiducialCandidate& psi, const MubFamily& fam,
                               const BlochBasis& basis, double tol_sic = tol::sic_verify);

// Builds the displaced orbit; NotFiducial unless verify_fiducial passes.
SicEnsemble build_sic(const FiducialCandidate& psi, const MubFamily& fam,
                      const BlochBasis& basis);

// Per-m deviations |sum_a p_{m,a}^2 - 2/(d+1)|.
Eigen::VectorXd min_uncertainty_check(const Eigen::MatrixXd& probs, const PrimeDim& dim);

// Deviations of sum_b p_b p_{b+a} from (delta_{a,0} + 1)/(d+1) for one row,
// indexed by the shift a.  The a != 0 entries are the fiduciality condition
// proper; a = 0 restates minimum uncertainty.
Eigen::VectorXd autocorrelation_check(const Eigen::VectorXd& row, const PrimeDim& dim);

struct GeometricCheck {
    Eigen::MatrixXd values;      // <Q_m B, S_m^a Q_m B>, (d+1) x d
    Eigen::MatrixXd deviations;  // from (d delta_{a,0} - 1)/(d^2 - 1)
    double max_deviation = 0.0;
};

// The geometric fiduciality criterion: for every m the orbit of Q_m B under
// S_m must be a regular simplex.
GeometricCheck geometric_fiduciality_check(const BlochVector& b,
                                           const std::vector<HyperplaneProjector>& qs,
                                           const std::vector<Eigen::MatrixXd>& ss,
                                           const PrimeDim& dim);

// B_q = (C_{inf,-q2} + sum_m C_{m,q1-m q2}) / sqrt(d+1); cvecs is indexed
// [label][a] with the "inf" label last.
std::vector<BlochVector> reconstruct_sic(const std::vector<std::vector<BlochVector>>& cvecs,
                                         const PrimeDim& dim);

// Rebuilds each R_m from its angles, rotates the MUB simplices onto the
// projected simplices, and reconstructs the SIC Bloch vectors.
std::vector<BlochVector> angles_to_sic(const MubFamily& fam, const BlochBasis& basis,
                                       const std::vector<RotationDecomposition>& decs);

// sum_{q != 0} (|<psi|D_q psi>|^2 - 1/(d+1))^2 on the normalized ket.
double sic_objective(const Ket& psi, const PrimeDim& dim);

struct SearchResult {
    bool found = false;
    FiducialCandidate candidate;   // gauge-fixed: first nonzero amplitude real positive
    int restarts_used = 0;         // index of the successful start
    double objective = 0.0;
};

// Multi-start projected gradient descent on sic_objective.  Start r draws
// its ket from a generator seeded by (seed, r), so results are reproducible
// for fixed (seed, max_restarts); the lowest-index success is returned.
// Acceptance threshold is tol_sic^2 d^2; successful candidates are polished
// by continued descent toward tol_polish^2 d^2 where possible.
SearchResult search_fiducial(const PrimeDim& dim, std::uint64_t seed, int max_restarts,
                             double tol_sic = tol::sic_search);

}  // namespace sicmub
