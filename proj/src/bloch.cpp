#include "sicmub/bloch.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sicmub/errors.hpp"
#include "sicmub/tolerances.hpp"

namespace sicmub {

BlochBasis build_bloch_basis(const PrimeDim& dim) {
    const int d = dim.d;
    // Gell-Mann normalization tr(M^2) = 2, rescaled to tr(E^2) = d(d-1).
    const double s = std::sqrt(d * (d - 1) / 2.0);
    BlochBasis basis{dim, {}};
    basis.matrices.reserve(d * d - 1);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Operator m = Operator::Zero(d, d);
            m(j, k) = s;
            m(k, j) = s;
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Operator m = Operator::Zero(d, d);
            m(j, k) = Cx(0.0, -s);
            m(k, j) = Cx(0.0, s);
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        Operator m = Operator::Zero(d, d);
        const double w = s * std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) m(j, j) = w;
        m(l, l) = -l * w;
        basis.matrices.push_back(std::move(m));
    }
    return basis;
}

namespace {

// Components of a traceless Hermitian matrix relative to the basis.
BlochVector expand(const Operator& b, const BlochBasis& basis) {
    const int d = basis.dim.d;
    const double scale = 1.0 / (d * (d - 1.0));
    BlochVector out(d * d - 1);
    for (size_t u = 0; u < basis.matrices.size(); ++u) {
        // tr(E_u B) entrywise; both are Hermitian so the trace is real.
        Cx tr = 0.0;
        const Operator& e = basis.matrices[u];
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) tr += e(j, k) * b(k, j);
        out(u) = tr.real() * scale;
    }
    return out;
}

}  // namespace

BlochVector to_bloch(const Operator& rho, const BlochBasis& basis) {
    const int d = basis.dim.d;
    if (rho.rows() != d || rho.cols() != d)
        throw DimensionMismatch("density matrix dimension does not match basis");
    if (!is_hermitian(rho, tol::unit))
        throw NotDensityMatrix("state is not Hermitian");
    if (std::abs(rho.trace() - Cx(1.0)) > tol::unit)
        throw NotDensityMatrix("state does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::unit)
        throw NotDensityMatrix("state is not positive semidefinite");
    const Operator b = static_cast<double>(d) * rho - Operator::Identity(d, d);
    return expand(b, basis);
}

Operator bloch_to_matrix(const BlochVector& components, const BlochBasis& basis) {
    const int d = basis.dim.d;
    if (components.size() != d * d - 1)
        throw DimensionMismatch("component count does not match basis");
    Operator b = Operator::Zero(d, d);
    for (size_t u = 0; u < basis.matrices.size(); ++u)
        b += components(u) * basis.matrices[u];
    return b;
}

Operator bloch_to_density(const BlochVector& components, const BlochBasis& basis) {
    const int d = basis.dim.d;
    return (Operator::Identity(d, d) + bloch_to_matrix(components, basis)) / d;
}

double bloch_inner(const BlochVector& x, const BlochVector& y) {
    if (x.size() != y.size())
        throw DimensionMismatch("Bloch vectors of unequal dimension");
    return x.dot(y);
}

std::vector<MubSimplex> mub_simplices(const MubFamily& fam, const BlochBasis& basis) {
    std::vector<MubSimplex> out;
    out.reserve(fam.dim.d + 1);
    for (MubLabel m : fam.labels()) {
        MubSimplex simplex{m, {}};
        for (int a = 0; a < fam.dim.d; ++a) {
            const Ket& k = fam.ket(m, a);
            simplex.vectors.push_back(to_bloch(k * k.adjoint(), basis));
        }
        out.push_back(std::move(simplex));
    }
    return out;
}

HyperplaneProjector build_Qm(const MubSimplex& simplex, const PrimeDim& dim) {
    const int n = dim.d * dim.d - 1;
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (const BlochVector& v : simplex.vectors) q += v * v.transpose();
    q *= (dim.d - 1.0) / dim.d;
    return HyperplaneProjector{simplex.label, std::move(q)};
}

BlochVector project_sic_vector(const HyperplaneProjector& q, const BlochVector& b) {
    if (q.matrix.cols() != b.size())
        throw DimensionMismatch("projector and Bloch vector of unequal dimension");
    return q.matrix * b;
}

int projected_image_index(MubLabel m, const DisplacementIndex& q, const PrimeDim& dim) {
    return displacement_shift(m, q, dim);
}

namespace {

void require_probability(const Eigen::VectorXd& probs, const PrimeDim& dim) {
    if (probs.size() != dim.d)
        throw NotProbability("expected " + std::to_string(dim.d) + " outcome probabilities");
    if (probs.minCoeff() < -tol::unit)
        throw NotProbability("negative outcome probability");
    if (std::abs(probs.sum() - 1.0) > tol::unit)
        throw NotProbability("outcome probabilities do not sum to 1");
}

}  // namespace

std::vector<BlochVector> build_C_vectors(const MubSimplex& simplex,
                                         const Eigen::VectorXd& probs, const PrimeDim& dim) {
    require_probability(probs, dim);
    const int d = dim.d;
    const double root = std::sqrt(d + 1.0);
    std::vector<BlochVector> cvecs;
    cvecs.reserve(d);
    for (int a = 0; a < d; ++a) {
        BlochVector c = BlochVector::Zero(d * d - 1);
        for (int b = 0; b < d; ++b) c += probs(b) * simplex.vectors[mod_reduce(b + a, dim)];
        cvecs.push_back(root * c);
    }
    return cvecs;
}

Eigen::MatrixXd build_Rm(const MubSimplex& simplex, const std::vector<BlochVector>& cvecs,
                         const PrimeDim& dim) {
    const int d = dim.d;
    double gram_dev = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const double target = (a == b ? d - 1.0 : -1.0) / (d - 1.0);
            gram_dev = std::max(gram_dev,
                                std::abs(bloch_inner(cvecs[a], cvecs[b]) - target));
        }
    }
    if (gram_dev > tol::cov)
        throw DegenerateSimplex("C vectors do not form a regular simplex (Gram deviation " +
                                std::to_string(gram_dev) + ")");
    const int n = d * d - 1;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < d; ++a) r += cvecs[a] * simplex.vectors[a].transpose();
    r *= (d - 1.0) / d;
    return r;
}

RotationDecomposition fourier_diagonalize(const MubSimplex& simplex,
                                          const Eigen::VectorXd& probs, const PrimeDim& dim) {
    require_probability(probs, dim);
    const int d = dim.d;
    const int n = d * d - 1;
    const Phases ph(dim);
    const double root = std::sqrt(d + 1.0);

    // DFT eigenvalues p~_a = sqrt(d+1) sum_b omega^{-ab} p_b, a = 1..d-1.
    std::vector<Cx> ptilde(d);
    for (int a = 0; a < d; ++a) {
        Cx acc = 0.0;
        for (int b = 0; b < d; ++b)
            acc += ph(-static_cast<long long>(a) * b) * probs(b);
        ptilde[a] = root * acc;
    }
    for (int a = 1; a < d; ++a) {
        if (std::abs(std::abs(ptilde[a]) - 1.0) > tol::cov)
            throw NonUnitEigenvalue("Fourier mode " + std::to_string(a) +
                                    " has modulus " + std::to_string(std::abs(ptilde[a])));
    }

    const Eigen::MatrixXd r = build_Rm(simplex, build_C_vectors(simplex, probs, dim), dim);

    RotationDecomposition dec;
    dec.label = simplex.label;
    const double plane_scale = std::sqrt(2.0 * (d - 1.0)) / d;
    for (int a = 1; a <= (d - 1) / 2; ++a) {
        BlochVector re = BlochVector::Zero(n);
        BlochVector im = BlochVector::Zero(n);
        for (int b = 0; b < d; ++b) {
            const double arg = 2.0 * std::numbers::pi * mod_reduce(
                                   static_cast<long long>(a) * b, dim) / d;
            re += std::cos(arg) * simplex.vectors[b];
            im += std::sin(arg) * simplex.vectors[b];
        }
        dec.plane_re.push_back(plane_scale * re);
        dec.plane_im.push_back(plane_scale * im);
        dec.angles.push_back(std::arg(ptilde[a]));
    }

    // Eigen-equation residual for every nonzero mode, via the real and
    // imaginary parts of b~_a = (plane_re + i plane_im)/sqrt(2).
    const double mode_scale = std::sqrt(d - 1.0) / d;
    double resid = 0.0;
    for (int a = 1; a < d; ++a) {
        BlochVector re = BlochVector::Zero(n);
        BlochVector im = BlochVector::Zero(n);
        for (int b = 0; b < d; ++b) {
            const double arg = 2.0 * std::numbers::pi * mod_reduce(
                                   static_cast<long long>(a) * b, dim) / d;
            re += std::cos(arg) * simplex.vectors[b];
            im += std::sin(arg) * simplex.vectors[b];
        }
        re *= mode_scale;
        im *= mode_scale;
        // R (re + i im) = p~ (re + i im), split into components.
        const Eigen::VectorXd lhs_re = r * re;
        const Eigen::VectorXd lhs_im = r * im;
        const Eigen::VectorXd rhs_re = ptilde[a].real() * re - ptilde[a].imag() * im;
        const Eigen::VectorXd rhs_im = ptilde[a].real() * im + ptilde[a].imag() * re;
        resid = std::max(resid, std::sqrt((lhs_re - rhs_re).squaredNorm() +
                                          (lhs_im - rhs_im).squaredNorm()));
    }
    dec.eigen_residual = resid;
    return dec;
}

Eigen::MatrixXd rebuild_R_from_angles(const RotationDecomposition& dec) {
    const int n = static_cast<int>(dec.plane_re.front().size());
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (size_t a = 0; a < dec.angles.size(); ++a) {
        const Eigen::VectorXd& re = dec.plane_re[a];
        const Eigen::VectorXd& im = dec.plane_im[a];
        const double c = std::cos(dec.angles[a]);
        const double s = std::sin(dec.angles[a]);
        // Consistent with R = sum_a p~_a b~_a b~_a^dag over conjugate pairs.
        r += c * (re * re.transpose() + im * im.transpose()) -
             s * (im * re.transpose() - re * im.transpose());
    }
    return r;
}

Eigen::MatrixXd build_Sm(const MubSimplex& simplex, const PrimeDim& dim) {
    const int d = dim.d;
    const int n = d * d - 1;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < d; ++a)
        s += simplex.vectors[mod_reduce(a + 1, dim)] * simplex.vectors[a].transpose();
    s *= (d - 1.0) / d;
    return s;
}

}  // namespace sicmub
