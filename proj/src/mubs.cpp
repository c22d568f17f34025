#include "sicmub/mubs.hpp"

#include <cmath>

#include "sicmub/errors.hpp"
#include "sicmub/tolerances.hpp"

namespace sicmub {

const char* to_string(ZmEigenvalueVariant v) {
    return v == ZmEigenvalueVariant::omega_a ? "omega_a" : "omega_half_a";
}

std::vector<MubLabel> MubFamily::labels() const {
    std::vector<MubLabel> out;
    out.reserve(dim.d + 1);
    for (int m = 0; m <= dim.d; ++m) out.push_back(MubLabel{m});
    return out;
}

namespace {

int zm_exponent(ZmEigenvalueVariant v, const PrimeDim& dim) {
    return v == ZmEigenvalueVariant::omega_a ? 1 : dim.inv2;
}

}  // namespace

MubFamily build_mub_family(const PrimeDim& dim) {
    const int d = dim.d;
    MubFamily fam;
    fam.dim = dim;
    fam.uf_variant = choose_uf_variant(dim);

    const Operator ug = build_UF(symp_G(dim), dim, fam.uf_variant);
    const Operator uh = build_UF(symp_H(dim), dim, fam.uf_variant);
    if (check_covariance(ug, symp_G(dim), dim) > tol::cov ||
        check_covariance(uh, symp_H(dim), dim) > tol::cov)
        throw CovarianceFailure("selected U_F variant fails covariance at d = " +
                                std::to_string(d));

    fam.bases.resize(d + 1);
    for (int a = 0; a < d; ++a) fam.bases[0].push_back(Ket::Unit(d, a));
    Operator v = ug;
    for (int m = 1; m < d; ++m) {
        for (int a = 0; a < d; ++a) fam.bases[m].push_back(v.col(a));
        v = ug * v;
    }
    for (int a = 0; a < d; ++a) fam.bases[d].push_back(uh.col(a));

    double ortho = 0.0, unbias = 0.0;
    for (int m = 0; m <= d; ++m) {
        for (int mp = m; mp <= d; ++mp) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const double ov2 = std::norm(fam.bases[m][a].dot(fam.bases[mp][b]));
                    if (m == mp) {
                        ortho = std::max(ortho, std::abs(ov2 - (a == b ? 1.0 : 0.0)));
                    } else {
                        unbias = std::max(unbias, std::abs(ov2 - 1.0 / d));
                    }
                }
            }
        }
    }
    fam.max_orthonormality_dev = ortho;
    fam.max_unbiasedness_dev = unbias;

    // Pin the Z_m eigenvalue exponent by the displacement-action equation.
    fam.zm_variant = ZmEigenvalueVariant::omega_a;
    bool selected = false;
    for (ZmEigenvalueVariant zv :
         {ZmEigenvalueVariant::omega_a, ZmEigenvalueVariant::omega_half_a}) {
        if (displacement_action_deviation(fam, zv) < tol::cov) {
            fam.zm_variant = zv;
            selected = true;
            break;
        }
    }
    if (!selected)
        throw ActionMismatch("no Z_m eigenvalue variant reproduces the displacement action at d = " +
                             std::to_string(d));

    for (int m = 0; m <= d; ++m) {
        auto [x, z] = build_Xm_Zm(fam, MubLabel{m}, fam.zm_variant);
        fam.xm.push_back(std::move(x));
        fam.zm.push_back(std::move(z));
    }
    return fam;
}

std::pair<Operator, Operator> build_Xm_Zm(const MubFamily& fam, MubLabel m,
                                          ZmEigenvalueVariant variant) {
    const PrimeDim& dim = fam.dim;
    const int d = dim.d;
    const Phases ph(dim);
    const int e = zm_exponent(variant, dim);
    Operator x = Operator::Zero(d, d);
    Operator z = Operator::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        x += fam.ket(m, mod_reduce(a + 1, dim)) * fam.ket(m, a).adjoint();
        z += ph(static_cast<long long>(e) * a) * fam.ket(m, a) * fam.ket(m, a).adjoint();
    }
    return {x, z};
}

std::pair<Operator, Operator> build_Xm_Zm(const MubFamily& fam, MubLabel m) {
    return build_Xm_Zm(fam, m, fam.zm_variant);
}

int displacement_shift(MubLabel m, const DisplacementIndex& q, const PrimeDim& dim) {
    if (m.is_infinity(dim)) return mod_reduce(-static_cast<long long>(q.q2), dim);
    return mod_reduce(static_cast<long long>(q.q1) -
                          static_cast<long long>(m.index) * q.q2,
                      dim);
}

DisplacementAction displacement_action(const MubFamily& fam, MubLabel m,
                                       const DisplacementIndex& q) {
    const PrimeDim& dim = fam.dim;
    const Phases ph(dim);
    const int d = dim.d;

    DisplacementAction act;
    act.phases.resize(d);

    // Locate the image of |m,0>, then require the same shift for every a.
    const Ket w0 = apply_D(q, fam.ket(m, 0), ph);
    int shift = 0;
    double best = -1.0;
    for (int b = 0; b < d; ++b) {
        const double mag = std::abs(fam.ket(m, b).dot(w0));
        if (mag > best) {
            best = mag;
            shift = b;
        }
    }
    act.shift = shift;

    for (int a = 0; a < d; ++a) {
        const Ket w = apply_D(q, fam.ket(m, a), ph);
        const int target = mod_reduce(a + shift, dim);
        const Cx phase = fam.ket(m, target).dot(w);
        const double residual = (w - phase * fam.ket(m, target)).norm();
        if (residual > tol::unit || std::abs(std::abs(phase) - 1.0) > tol::unit)
            throw ActionMismatch("D_q does not act on basis " + m.str(dim) +
                                 " by permute-and-rephase (residual " +
                                 std::to_string(residual) + ")");
        act.phases[a] = phase;
    }
    return act;
}

double displacement_action_deviation(const MubFamily& fam, ZmEigenvalueVariant variant) {
    const PrimeDim& dim = fam.dim;
    const Phases ph(dim);
    const int d = dim.d;
    const int e = zm_exponent(variant, dim);

    double worst = 0.0;
    for (int m = 0; m <= d; ++m) {
        const MubLabel label{m};
        const bool inf = label.is_infinity(dim);
        for (int q1 = 0; q1 < d; ++q1) {
            for (int q2 = 0; q2 < d; ++q2) {
                const DisplacementIndex q{q1, q2};
                const int s = displacement_shift(label, q, dim);
                const int t = inf ? q1 : q2;
                // Prefactor of the X_m^s Z_m^t form of D_q on basis m.
                const long long phi =
                    inf ? -static_cast<long long>(dim.inv2) * q1 * q2
                        : static_cast<long long>(dim.inv2) * s * q2;
                for (int a = 0; a < d; ++a) {
                    const Ket lhs = apply_D(q, fam.ket(label, a), ph);
                    const Ket rhs = ph(phi + static_cast<long long>(e) * t * a) *
                                    fam.ket(label, mod_reduce(a + s, dim));
                    worst = std::max(worst, (lhs - rhs).norm());
                }
            }
        }
    }
    return worst;
}

}  // namespace sicmub
