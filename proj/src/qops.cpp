#include "sicmub/qops.hpp"

#include <cmath>
#include <numbers>

#include "sicmub/errors.hpp"
#include "sicmub/tolerances.hpp"

namespace sicmub {

Phases::Phases(const PrimeDim& dim) : dim_(dim), table_(dim.d) {
    for (int k = 0; k < dim.d; ++k)
        table_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / dim.d);
}

Cx Phases::operator()(long long exponent) const { return table_[mod_reduce(exponent, dim_)]; }

bool is_unitary(const Operator& a, double tol) {
    const auto n = a.rows();
    return a.cols() == n &&
           ((a.adjoint() * a) - Operator::Identity(n, n)).cwiseAbs().maxCoeff() < tol;
}

bool is_hermitian(const Operator& a, double tol) {
    return a.cols() == a.rows() && (a - a.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_traceless(const Operator& a, double tol) { return std::abs(a.trace()) < tol; }

Operator build_X(const PrimeDim& dim) {
    Operator x = Operator::Zero(dim.d, dim.d);
    for (int a = 0; a < dim.d; ++a) x(mod_reduce(a + 1, dim), a) = 1.0;
    return x;
}

Operator build_Z(const PrimeDim& dim) {
    const Phases ph(dim);
    Operator z = Operator::Zero(dim.d, dim.d);
    for (int a = 0; a < dim.d; ++a) z(a, a) = ph(a);
    return z;
}

Operator build_D(const DisplacementIndex& q, const PrimeDim& dim) {
    const Phases ph(dim);
    const int q1 = mod_reduce(q.q1, dim);
    const int q2 = mod_reduce(q.q2, dim);
    Operator d = Operator::Zero(dim.d, dim.d);
    // (X^q1 Z^q2)|b> = omega^{q2 b} |b+q1>, with the symmetrizing prefactor.
    for (int b = 0; b < dim.d; ++b)
        d(mod_reduce(b + q1, dim), b) =
            ph(static_cast<long long>(dim.inv2) * q1 * q2 + static_cast<long long>(q2) * b);
    return d;
}

Ket apply_D(const DisplacementIndex& q, const Ket& psi, const Phases& ph) {
    const PrimeDim& dim = ph.dim();
    const int q1 = mod_reduce(q.q1, dim);
    const int q2 = mod_reduce(q.q2, dim);
    Ket out(dim.d);
    for (int a = 0; a < dim.d; ++a) {
        const int b = mod_reduce(a - q1, dim);
        out(a) = ph(static_cast<long long>(dim.inv2) * q1 * q2 +
                    static_cast<long long>(q2) * b) *
                 psi(b);
    }
    return out;
}

const char* to_string(UfExponentVariant v) {
    return v == UfExponentVariant::standard ? "standard" : "transcribed";
}

namespace {

// Rotates a global phase so the first entry with nonnegligible modulus
// (row-major) is real positive.  Deterministic serialization depends on it.
void fix_global_phase(Operator& u) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        for (Eigen::Index c = 0; c < u.cols(); ++c) {
            const Cx v = u(r, c);
            if (std::abs(v) > 1e-8) {
                u *= std::conj(v) / std::abs(v);
                return;
            }
        }
    }
}

}  // namespace

Operator build_UF(const SympMatrix& f, const PrimeDim& dim, UfExponentVariant variant) {
    const Phases ph(dim);
    const int d = dim.d;
    Operator u = Operator::Zero(d, d);
    if (f.beta % d != 0) {
        const long long inv2b = mod_inv(2LL * f.beta, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(d));
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                const long long quad =
                    variant == UfExponentVariant::standard
                        ? static_cast<long long>(f.alpha) * b * b - 2LL * a * b +
                              static_cast<long long>(f.delta) * a * a
                        : static_cast<long long>(f.alpha) * b * b - 2LL * a * b +
                              static_cast<long long>(f.beta) * b * b;
                u(a, b) = scale * ph(inv2b * mod_reduce(quad, dim));
            }
        }
    } else {
        // beta = 0 forces alpha invertible (det = alpha*delta = 1).
        for (int a = 0; a < d; ++a)
            u(mod_reduce(static_cast<long long>(f.alpha) * a, dim), a) =
                ph(static_cast<long long>(dim.inv2) * f.alpha * f.gamma * a * a);
    }
    fix_global_phase(u);
    return u;
}

Operator build_UF(const SympMatrix& f, const PrimeDim& dim) {
    Operator u = build_UF(f, dim, UfExponentVariant::standard);
    if (check_covariance(u, f, dim) < tol::cov) return u;
    u = build_UF(f, dim, UfExponentVariant::transcribed);
    if (check_covariance(u, f, dim) < tol::cov) return u;
    throw CovarianceFailure("no U_F exponent variant satisfies the covariance test at d = " +
                            std::to_string(dim.d));
}

UfExponentVariant choose_uf_variant(const PrimeDim& dim) {
    const SympMatrix g = symp_G(dim);
    const SympMatrix h = symp_H(dim);
    const SympMatrix sample[] = {g, h, symp_mul(g, h, dim), symp_mul(h, g, dim)};
    for (UfExponentVariant v : {UfExponentVariant::standard, UfExponentVariant::transcribed}) {
        bool ok = true;
        for (const SympMatrix& f : sample)
            ok = ok && check_covariance(build_UF(f, dim, v), f, dim) < tol::cov;
        if (ok) return v;
    }
    throw CovarianceFailure("no U_F exponent variant satisfies covariance for G, H at d = " +
                            std::to_string(dim.d));
}

double check_covariance(const Operator& u, const SympMatrix& f, const PrimeDim& dim) {
    double worst = 0.0;
    for (int q1 = 0; q1 < dim.d; ++q1) {
        for (int q2 = 0; q2 < dim.d; ++q2) {
            const DisplacementIndex q{q1, q2};
            const Operator lhs = u * build_D(q, dim) * u.adjoint();
            const Operator rhs = build_D(symp_apply(f, q, dim), dim);
            const Cx overlap = (rhs.adjoint() * lhs).trace();
            double dev;
            if (std::abs(overlap) < 1e-12) {
                dev = std::sqrt(lhs.squaredNorm() + rhs.squaredNorm());
            } else {
                dev = (lhs - (overlap / std::abs(overlap)) * rhs).norm();
            }
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

}  // namespace sicmub
