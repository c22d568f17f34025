#include "sicmub/sic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sicmub/errors.hpp"

namespace sicmub {

bool VerificationReport::all_pass() const {
    for (const CriterionResult* c : {&sic_overlap, &resolution_of_identity, &min_uncertainty,
                                     &autocorrelation, &geometric_simplex, &prob_geom_agreement})
        if (c->computed() && !c->pass()) return false;
    return sic_overlap.computed();
}

namespace {

void require_unit_ket(const FiducialCandidate& psi) {
    if (psi.ket.size() != psi.dim.d)
        throw DimensionMismatch("fiducial ket length does not match dimension");
    if (std::abs(psi.ket.norm() - 1.0) > tol::unit)
        throw NotFiducial("fiducial candidate is not normalized");
}

}  // namespace

VerificationReport verify_fiducial(const FiducialCandidate& psi, double tol_sic) {
    require_unit_ket(psi);
    const PrimeDim& dim = psi.dim;
    const int d = dim.d;
    const Phases ph(dim);
    const double target = 1.0 / (d + 1.0);

    VerificationReport rep;
    rep.d = d;

    double overlap_dev = 0.0;
    Operator frame = Operator::Zero(d, d);
    for (int q1 = 0; q1 < d; ++q1) {
        for (int q2 = 0; q2 < d; ++q2) {
            const Ket w = apply_D({q1, q2}, psi.ket, ph);
            frame += w * w.adjoint();
            if (q1 == 0 && q2 == 0) continue;
            overlap_dev = std::max(overlap_dev, std::abs(std::norm(psi.ket.dot(w)) - target));
        }
    }
    rep.sic_overlap = {overlap_dev, tol_sic};
    rep.resolution_of_identity = {(frame / d - Operator::Identity(d, d)).norm(), tol::cov};
    return rep;
}

SicEnsemble build_sic(const FiducialCandidate& psi, const MubFamily& fam,
                      const BlochBasis& basis) {
    const VerificationReport rep = verify_fiducial(psi);
    if (!rep.sic_overlap.pass())
        throw NotFiducial("fiducial condition fails with deviation " +
                          std::to_string(rep.sic_overlap.deviation));

    const PrimeDim& dim = psi.dim;
    const int d = dim.d;
    const Phases ph(dim);

    SicEnsemble ens;
    ens.fiducial = psi;
    ens.kets.reserve(d * d);
    ens.blochs.reserve(d * d);
    for (int q1 = 0; q1 < d; ++q1) {
        for (int q2 = 0; q2 < d; ++q2) {
            Ket w = apply_D({q1, q2}, psi.ket, ph);
            ens.blochs.push_back(to_bloch(w * w.adjoint(), basis));
            ens.kets.push_back(std::move(w));
        }
    }
    ens.probs.resize(d + 1, d);
    for (MubLabel m : fam.labels())
        for (int a = 0; a < d; ++a)
            ens.probs(m.index, a) = std::norm(fam.ket(m, a).dot(psi.ket));
    return ens;
}

Eigen::VectorXd min_uncertainty_check(const Eigen::MatrixXd& probs, const PrimeDim& dim) {
    const int d = dim.d;
    if (probs.cols() != d)
        throw NotProbability("probability table must have d columns");
    Eigen::VectorXd dev(probs.rows());
    for (Eigen::Index m = 0; m < probs.rows(); ++m) {
        const Eigen::VectorXd row = probs.row(m);
        if (row.minCoeff() < -tol::unit || std::abs(row.sum() - 1.0) > tol::unit)
            throw NotProbability("row " + std::to_string(m) + " is not a probability vector");
        dev(m) = std::abs(row.squaredNorm() - 2.0 / (d + 1.0));
    }
    return dev;
}

Eigen::VectorXd autocorrelation_check(const Eigen::VectorXd& row, const PrimeDim& dim) {
    const int d = dim.d;
    if (row.size() != d || row.minCoeff() < -tol::unit || std::abs(row.sum() - 1.0) > tol::unit)
        throw NotProbability("not a probability vector of length d");
    Eigen::VectorXd dev(d);
    for (int a = 0; a < d; ++a) {
        double corr = 0.0;
        for (int b = 0; b < d; ++b) corr += row(b) * row(mod_reduce(b + a, dim));
        dev(a) = std::abs(corr - ((a == 0 ? 2.0 : 1.0) / (d + 1.0)));
    }
    return dev;
}

GeometricCheck geometric_fiduciality_check(const BlochVector& b,
                                           const std::vector<HyperplaneProjector>& qs,
                                           const std::vector<Eigen::MatrixXd>& ss,
                                           const PrimeDim& dim) {
    const int d = dim.d;
    GeometricCheck check;
    check.values.resize(d + 1, d);
    check.deviations.resize(d + 1, d);
    for (int m = 0; m <= d; ++m) {
        const BlochVector projected = qs[m].matrix * b;
        BlochVector rotated = projected;
        for (int a = 0; a < d; ++a) {
            check.values(m, a) = bloch_inner(projected, rotated);
            const double target = ((a == 0 ? d : 0.0) - 1.0) / (d * d - 1.0);
            check.deviations(m, a) = std::abs(check.values(m, a) - target);
            rotated = ss[m] * rotated;
        }
    }
    check.max_deviation = check.deviations.maxCoeff();
    return check;
}

VerificationReport verify_full(const FiducialCandidate& psi, const MubFamily& fam,
                               const BlochBasis& basis, double tol_sic) {
    VerificationReport rep = verify_fiducial(psi, tol_sic);
    const PrimeDim& dim = psi.dim;
    const int d = dim.d;

    Eigen::MatrixXd probs(d + 1, d);
    for (MubLabel m : fam.labels())
        for (int a = 0; a < d; ++a)
            probs(m.index, a) = std::norm(fam.ket(m, a).dot(psi.ket));

    rep.min_uncertainty_per_m = min_uncertainty_check(probs, dim);
    rep.min_uncertainty = {rep.min_uncertainty_per_m.maxCoeff(), tol_sic};

    rep.autocorrelation_per_shift.resize(d + 1, d);
    double auto_dev = 0.0;
    for (int m = 0; m <= d; ++m) {
        rep.autocorrelation_per_shift.row(m) = autocorrelation_check(probs.row(m), dim);
        for (int a = 1; a < d; ++a)
            auto_dev = std::max(auto_dev, rep.autocorrelation_per_shift(m, a));
    }
    rep.autocorrelation = {auto_dev, tol_sic};

    const std::vector<MubSimplex> simplices = mub_simplices(fam, basis);
    std::vector<HyperplaneProjector> qs;
    std::vector<Eigen::MatrixXd> ss;
    for (int m = 0; m <= d; ++m) {
        qs.push_back(build_Qm(simplices[m], dim));
        ss.push_back(build_Sm(simplices[m], dim));
    }
    const BlochVector b = to_bloch(psi.ket * psi.ket.adjoint(), basis);
    const GeometricCheck geo = geometric_fiduciality_check(b, qs, ss, dim);
    rep.geometric_per_shift = geo.deviations;
    rep.geometric_simplex = {geo.max_deviation, tol::cov};

    // Same quantity via the probability route, on this (arbitrary) state.
    double agree = 0.0;
    for (int m = 0; m <= d; ++m) {
        for (int a = 0; a < d; ++a) {
            double corr = 0.0;
            for (int c = 0; c < d; ++c) corr += probs(m, c) * probs(m, mod_reduce(c + a, dim));
            agree = std::max(agree, std::abs(geo.values(m, a) - (d * corr - 1.0) / (d - 1.0)));
        }
    }
    rep.prob_geom_agreement = {agree, tol::unit};

    rep.uf_variant = fam.uf_variant;
    rep.zm_variant = fam.zm_variant;
    return rep;
}

std::vector<BlochVector> reconstruct_sic(const std::vector<std::vector<BlochVector>>& cvecs,
                                         const PrimeDim& dim) {
    const int d = dim.d;
    if (cvecs.size() != static_cast<size_t>(d + 1))
        throw DimensionMismatch("expected d+1 projected simplices");
    const double scale = 1.0 / std::sqrt(d + 1.0);
    std::vector<BlochVector> out;
    out.reserve(d * d);
    for (int q1 = 0; q1 < d; ++q1) {
        for (int q2 = 0; q2 < d; ++q2) {
            const DisplacementIndex q{q1, q2};
            BlochVector b = cvecs[d][projected_image_index(MubLabel::infinity(dim), q, dim)];
            for (int m = 0; m < d; ++m)
                b += cvecs[m][projected_image_index(MubLabel::finite(m), q, dim)];
            out.push_back(scale * b);
        }
    }
    return out;
}

std::vector<BlochVector> angles_to_sic(const MubFamily& fam, const BlochBasis& basis,
                                       const std::vector<RotationDecomposition>& decs) {
    const PrimeDim& dim = fam.dim;
    const int d = dim.d;
    if (decs.size() != static_cast<size_t>(d + 1))
        throw DimensionMismatch("expected d+1 rotation decompositions");
    const std::vector<MubSimplex> simplices = mub_simplices(fam, basis);
    std::vector<std::vector<BlochVector>> cvecs(d + 1);
    for (int m = 0; m <= d; ++m) {
        const Eigen::MatrixXd r = rebuild_R_from_angles(decs[m]);
        for (int a = 0; a < d; ++a) cvecs[m].push_back(r * simplices[m].vectors[a]);
    }
    return reconstruct_sic(cvecs, dim);
}

// ---------------------------------------------------------------------------
// Fiducial search
// ---------------------------------------------------------------------------

namespace {

// Objective and Wirtinger gradient of f = sum_{q != 0} (|<psi|D_q psi>|^2 - t)^2
// on the unit sphere.  Folding the D_q^dag term over q -> -q gives
// grad = 4 sum_{q != 0} (g_q - t) conj(c_q) D_q psi.
struct Objective {
    const PrimeDim dim;
    const Phases ph;
    const double target;

    explicit Objective(const PrimeDim& d)
        : dim(d), ph(d), target(1.0 / (d.d + 1.0)) {}

    double value(const Ket& psi) const {
        double f = 0.0;
        for (int q1 = 0; q1 < dim.d; ++q1) {
            for (int q2 = 0; q2 < dim.d; ++q2) {
                if (q1 == 0 && q2 == 0) continue;
                const double g = std::norm(psi.dot(apply_D({q1, q2}, psi, ph)));
                f += (g - target) * (g - target);
            }
        }
        return f;
    }

    double value_and_grad(const Ket& psi, Ket& grad) const {
        double f = 0.0;
        grad.setZero(dim.d);
        for (int q1 = 0; q1 < dim.d; ++q1) {
            for (int q2 = 0; q2 < dim.d; ++q2) {
                if (q1 == 0 && q2 == 0) continue;
                const Ket w = apply_D({q1, q2}, psi, ph);
                const Cx c = psi.dot(w);
                const double g = std::norm(c);
                f += (g - target) * (g - target);
                grad += (4.0 * (g - target) * std::conj(c)) * w;
            }
        }
        grad -= psi * psi.dot(grad);  // tangent projection on the sphere
        return f;
    }
};

Ket random_unit_ket(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Ket psi(d);
    for (int a = 0; a < d; ++a) {
        const double re = normal(rng);
        const double im = normal(rng);
        psi(a) = Cx(re, im);
    }
    psi.normalize();
    return psi;
}

// Projected gradient descent with Barzilai-Borwein step sizes and a
// non-monotone backtracking safeguard.  Returns the best objective seen;
// psi holds the corresponding iterate.
double descend(const Objective& obj, Ket& psi, double f_target, int max_iters) {
    Ket grad(psi.size()), prev_psi, prev_grad;
    double f = obj.value_and_grad(psi, grad);
    Ket best_psi = psi;
    double best_f = f;
    std::vector<double> recent{f};
    double step = 0.1;

    for (int iter = 0; iter < max_iters && best_f > f_target; ++iter) {
        const double gnorm2 = grad.squaredNorm();
        if (gnorm2 < 1e-32) break;

        if (iter > 0) {
            const Ket ds = psi - prev_psi;
            const Ket dg = grad - prev_grad;
            const double sg = std::abs(ds.dot(dg).real());
            const double gg = dg.squaredNorm();
            if (sg > 0.0 && gg > 0.0) step = std::clamp(sg / gg, 1e-12, 1e3);
        }

        const double f_ref = *std::max_element(recent.begin(), recent.end());
        Ket trial;
        double f_trial = 0.0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            trial = (psi - step * grad).normalized();
            f_trial = obj.value(trial);
            if (f_trial <= f_ref - 1e-4 * step * gnorm2) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;

        prev_psi = psi;
        prev_grad = grad;
        psi = trial;
        f = obj.value_and_grad(psi, grad);
        recent.push_back(f);
        if (recent.size() > 10) recent.erase(recent.begin());
        if (f < best_f) {
            best_f = f;
            best_psi = psi;
        }
    }
    psi = best_psi;
    return best_f;
}

void fix_ket_gauge(Ket& psi) {
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
        if (std::abs(psi(a)) > 1e-8) {
            psi *= std::conj(psi(a)) / std::abs(psi(a));
            return;
        }
    }
}

}  // namespace

double sic_objective(const Ket& psi, const PrimeDim& dim) {
    if (psi.size() != dim.d) throw DimensionMismatch("ket length does not match dimension");
    return Objective(dim).value(psi.normalized());
}

SearchResult search_fiducial(const PrimeDim& dim, std::uint64_t seed, int max_restarts,
                             double tol_sic) {
    const Objective obj(dim);
    const double d2 = static_cast<double>(dim.d) * dim.d;
    const double f_accept = tol_sic * tol_sic * d2;
    const double f_polish = tol::sic_polish * tol::sic_polish * d2;
    constexpr int kItersPerStart = 10000;

    SearchResult result;
    for (int r = 0; r < max_restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint64_t>(r), seed};
        std::mt19937_64 rng(seq);
        Ket psi = random_unit_ket(rng, dim.d);
        double f = descend(obj, psi, f_accept, kItersPerStart);
        if (f < f_accept) {
            f = descend(obj, psi, f_polish, kItersPerStart);
            fix_ket_gauge(psi);
            result.found = true;
            result.candidate = FiducialCandidate{dim, psi};
            result.restarts_used = r;
            result.objective = f;
            return result;
        }
    }
    return result;
}

}  // namespace sicmub
