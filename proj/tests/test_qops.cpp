#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sicmub/qops.hpp"
#include "sicmub/tolerances.hpp"

using namespace sicmub;

namespace {

Operator matrix_power(const Operator& a, int n) {
    Operator out = Operator::Identity(a.rows(), a.cols());
    for (int i = 0; i < n; ++i) out = out * a;
    return out;
}

}  // namespace

TEST_CASE("shift and clock operators") {
    const PrimeDim d3 = check_prime_dim(3);
    const Operator x = build_X(d3);
    const Operator z = build_Z(d3);

    CHECK((x * Ket::Unit(3, 2) - Ket::Unit(3, 0)).norm() < tol::unit);  // X|2> = |0>
    const Cx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK((z * Ket::Unit(3, 1) - omega * Ket::Unit(3, 1)).norm() < tol::unit);

    for (int d : {3, 5, 7}) {
        const PrimeDim dim = check_prime_dim(d);
        const Operator xd = build_X(dim);
        const Operator zd = build_Z(dim);
        CHECK(is_unitary(xd, tol::unit));
        CHECK(is_unitary(zd, tol::unit));
        CHECK(is_traceless(xd, tol::unit));
        CHECK((matrix_power(xd, d) - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < tol::unit);
        CHECK((matrix_power(zd, d) - Operator::Identity(d, d)).cwiseAbs().maxCoeff() < tol::unit);
        // Weyl commutation ZX = omega XZ
        const Cx w = std::polar(1.0, 2.0 * std::numbers::pi / d);
        CHECK((zd * xd - w * xd * zd).cwiseAbs().maxCoeff() < tol::unit);
    }
}

TEST_CASE("displacement operators") {
    const PrimeDim d5 = check_prime_dim(5);

    CHECK((build_D({0, 0}, d5) - Operator::Identity(5, 5)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((build_D({1, 0}, d5) - build_X(d5)).cwiseAbs().maxCoeff() == 0.0);

    SUBCASE("all nonzero displacements are traceless and unitary") {
        for (int q1 = 0; q1 < 5; ++q1) {
            for (int q2 = 0; q2 < 5; ++q2) {
                const Operator d = build_D({q1, q2}, d5);
                CHECK(is_unitary(d, tol::unit));
                if (q1 || q2) CHECK(std::abs(d.trace()) < tol::unit);
            }
        }
    }

    SUBCASE("adjoint is the opposite displacement") {
        for (int d : {3, 5, 7}) {
            const PrimeDim dim = check_prime_dim(d);
            for (int q1 = 0; q1 < d; ++q1)
                for (int q2 = 0; q2 < d; ++q2)
                    CHECK((build_D({q1, q2}, dim).adjoint() - build_D({-q1, -q2}, dim))
                              .cwiseAbs()
                              .maxCoeff() < tol::unit);
        }
    }

    SUBCASE("apply_D agrees with the dense matrix") {
        const Phases ph(d5);
        Ket psi(5);
        psi << Cx(0.3, -0.1), Cx(0.2, 0.9), Cx(-0.5, 0.0), Cx(0.1, 0.4), Cx(0.0, -0.2);
        psi.normalize();
        for (int q1 = 0; q1 < 5; ++q1)
            for (int q2 = 0; q2 < 5; ++q2)
                CHECK((apply_D({q1, q2}, psi, ph) - build_D({q1, q2}, d5) * psi).norm() <
                      tol::unit);
    }
}

TEST_CASE("displacements compose up to a phase and are trace-orthogonal") {
    for (int d : {3, 5}) {
        const PrimeDim dim = check_prime_dim(d);
        for (int p1 = 0; p1 < d; ++p1) {
            for (int p2 = 0; p2 < d; ++p2) {
                for (int q1 = 0; q1 < d; ++q1) {
                    for (int q2 = 0; q2 < d; ++q2) {
                        const Operator lhs =
                            build_D({p1, p2}, dim) * build_D({q1, q2}, dim);
                        const Operator rhs = build_D({p1 + q1, p2 + q2}, dim);
                        // Candidate phase from the leading nonzero entry.
                        Cx phase = 0.0;
                        for (int r = 0; r < d && std::abs(phase) < 0.5; ++r)
                            for (int c = 0; c < d; ++c)
                                if (std::abs(rhs(r, c)) > 0.5) {
                                    phase = lhs(r, c) / rhs(r, c);
                                    break;
                                }
                        CHECK(std::abs(std::abs(phase) - 1.0) < tol::unit);
                        CHECK((lhs - phase * rhs).cwiseAbs().maxCoeff() < tol::unit);

                        const Cx tr =
                            (build_D({p1, p2}, dim).adjoint() * build_D({q1, q2}, dim)).trace();
                        const double expected = (p1 == q1 && p2 == q2) ? d : 0.0;
                        CHECK(std::abs(std::abs(tr) - expected) < tol::unit);
                    }
                }
            }
        }
    }
}

TEST_CASE("symplectic unitaries satisfy covariance") {
    SUBCASE("identity maps to identity") {
        const PrimeDim d5 = check_prime_dim(5);
        const Operator u = build_UF(symp_identity(), d5);
        CHECK((u - Operator::Identity(5, 5)).cwiseAbs().maxCoeff() < tol::unit);
        CHECK(check_covariance(Operator::Identity(3, 3), symp_identity(),
                               check_prime_dim(3)) < tol::unit);
    }

    SUBCASE("selected variant passes for G, H and products at d = 3, 5, 7") {
        for (int d : {3, 5, 7}) {
            const PrimeDim dim = check_prime_dim(d);
            const UfExponentVariant v = choose_uf_variant(dim);
            CHECK(v == UfExponentVariant::standard);
            const SympMatrix g = symp_G(dim), h = symp_H(dim);
            for (const SympMatrix& f :
                 {g, h, symp_mul(g, h, dim), symp_mul(h, g, dim)}) {
                const Operator u = build_UF(f, dim, v);
                CHECK(is_unitary(u, tol::unit));
                CHECK(check_covariance(u, f, dim) < tol::cov);
            }
        }
    }

    SUBCASE("transcribed exponent variant fails its covariance test") {
        for (int d : {3, 5}) {
            const PrimeDim dim = check_prime_dim(d);
            for (const SympMatrix& f : {symp_G(dim), symp_H(dim)}) {
                const Operator u = build_UF(f, dim, UfExponentVariant::transcribed);
                CHECK(check_covariance(u, f, dim) > 0.1);
            }
        }
    }

    SUBCASE("wrong symplectic matrix fails by O(1)") {
        const PrimeDim d5 = check_prime_dim(5);
        const Operator ug = build_UF(symp_G(d5), d5);
        CHECK(check_covariance(ug, symp_H(d5), d5) > 0.1);
    }

    SUBCASE("U_G covariance maps (q1, q2) to (q1+q2, q2)") {
        const PrimeDim d3 = check_prime_dim(3);
        const Operator ug = build_UF(symp_G(d3), d3);
        for (int q1 = 0; q1 < 3; ++q1)
            for (int q2 = 0; q2 < 3; ++q2)
                CHECK((ug * build_D({q1, q2}, d3) * ug.adjoint() -
                       build_D({q1 + q2, q2}, d3))
                          .cwiseAbs()
                          .maxCoeff() < tol::cov);
    }

    SUBCASE("U_H is Fourier-type and maps D_(1,0) to D_(0,-1)") {
        const PrimeDim d5 = check_prime_dim(5);
        const Operator uh = build_UF(symp_H(d5), d5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                CHECK(std::abs(std::abs(uh(r, c)) - 1.0 / std::sqrt(5.0)) < tol::unit);
        CHECK((uh * build_D({1, 0}, d5) * uh.adjoint() - build_D({0, -1}, d5))
                  .cwiseAbs()
                  .maxCoeff() < tol::cov);
    }
}
