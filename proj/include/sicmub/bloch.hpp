// Generalized Bloch space: the embedding B = d rho - 1 of states into
// traceless Hermitian matrices with inner product tr(AB)/(d(d-1)), the
// MUB simplices and their hyperplane projectors Q_m, the projected SIC
// simplices C_{m,a}, the rotations R_m with their Fourier-mode angles,
// and the shift rotations S_m.
#pragma once

#include <vector>

#include "sicmub/mubs.hpp"

namespace sicmub {

// Components relative to the fixed orthonormal basis of build_bloch_basis.
using BlochVector = Eigen::VectorXd;

// Generalized Gell-Mann matrices rescaled so tr(E_u E_v) = d(d-1) delta_uv,
// i.e. orthonormal under the Bloch inner product.  Order: symmetric
// off-diagonal pairs row-major, antisymmetric pairs row-major, diagonal.
struct BlochBasis {
    PrimeDim dim;
    std::vector<Operator> matrices;  // d^2 - 1 traceless Hermitian matrices
};

BlochBasis build_bloch_basis(const PrimeDim& dim);

// B = d rho - 1 expanded in the basis; NotDensityMatrix unless rho is
// Hermitian, unit trace and PSD within tol_unit.
BlochVector to_bloch(const Operator& rho, const BlochBasis& basis);

// Matrix form sum_u c_u E_u of a component vector.
Operator bloch_to_matrix(const BlochVector& components, const BlochBasis& basis);

// Inverse of the embedding: rho = (1 + B)/d.
Operator bloch_to_density(const BlochVector& components, const BlochBasis& basis);

// tr(XY)/(d(d-1)); on components of an orthonormal basis this is the
// Euclidean dot product.
double bloch_inner(const BlochVector& x, const BlochVector& y);

// The d Bloch vectors of one MUB, a regular (d-1)-simplex.
struct MubSimplex {
    MubLabel label;
    std::vector<BlochVector> vectors;
};

std::vector<MubSimplex> mub_simplices(const MubFamily& fam, const BlochBasis& basis);

// Projector onto the hyperplane spanned by one MUB simplex.
struct HyperplaneProjector {
    MubLabel label;
    Eigen::MatrixXd matrix;
};

HyperplaneProjector build_Qm(const MubSimplex& simplex, const PrimeDim& dim);

// Q_m B.  For a SIC Bloch vector the result is (d+1)^{-1/2} C_{m,s} with
// s = projected_image_index(m, q, dim).
BlochVector project_sic_vector(const HyperplaneProjector& q, const BlochVector& b);

// Index of the projected image of the SIC vector with displacement index q
// on hyperplane m (the displacement shift law).
int projected_image_index(MubLabel m, const DisplacementIndex& q, const PrimeDim& dim);

// C_{m,a} = sqrt(d+1) sum_b p_b B_{m,b+a}; NotProbability unless probs is a
// probability vector.
std::vector<BlochVector> build_C_vectors(const MubSimplex& simplex,
                                         const Eigen::VectorXd& probs, const PrimeDim& dim);

// R_m = ((d-1)/d) sum_a C_a B_a^T, the rotation taking the MUB simplex onto
// the C simplex; DegenerateSimplex unless the C Gram matrix is regular.
Eigen::MatrixXd build_Rm(const MubSimplex& simplex, const std::vector<BlochVector>& cvecs,
                         const PrimeDim& dim);

// R_m restricted to its hyperplane decomposes into (d-1)/2 plane rotations;
// the planes are spanned by the real/imaginary parts of the Fourier modes
// of the simplex and the angles are the arguments of the DFT eigenvalues.
struct RotationDecomposition {
    MubLabel label;
    std::vector<double> angles;         // theta_{m,a}, a = 1..(d-1)/2
    std::vector<BlochVector> plane_re;  // per a
    std::vector<BlochVector> plane_im;  // per a
    double eigen_residual = 0.0;        // max ||R b~ - p~ b~|| over modes
};

// Diagonalizes R_m built from the given outcome probabilities;
// NonUnitEigenvalue unless every nonzero Fourier mode of probs has unit
// modulus after the sqrt(d+1) rescaling.
RotationDecomposition fourier_diagonalize(const MubSimplex& simplex,
                                          const Eigen::VectorXd& probs, const PrimeDim& dim);

// Reassembles R_m from its plane rotations; with all angles zero this is
// exactly Q_m.
Eigen::MatrixXd rebuild_R_from_angles(const RotationDecomposition& dec);

// S_m = ((d-1)/d) sum_a B_{a+1} B_a^T, the one-step cyclic rotation of the
// simplex: S B_a = B_{a+1}, S^T S = Q_m, S^d = Q_m.
Eigen::MatrixXd build_Sm(const MubSimplex& simplex, const PrimeDim& dim);

}  // namespace sicmub
