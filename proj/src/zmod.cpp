#include "sicmub/zmod.hpp"

#include <stdexcept>

namespace sicmub {

PrimeDim check_prime_dim(int d) {
    if (d < 2) throw OutOfRange("dimension must be >= 2, got " + std::to_string(d));
    if (d == 2) throw EvenDim("dimension 2 is not supported; d must be an odd prime");
    // Trial division is plenty at desk scale (d <= ~10^4).
    for (int p = 2; static_cast<long long>(p) * p <= d; ++p) {
        if (d % p == 0)
            throw NonPrime("dimension must be an odd prime, got " + std::to_string(d) + " = " +
                           std::to_string(p) + " * " + std::to_string(d / p));
    }
    PrimeDim dim;
    dim.d = d;
    dim.inv2 = mod_inv(2, PrimeDim{d, 0});
    return dim;
}

int mod_reduce(long long x, const PrimeDim& dim) {
    long long r = x % dim.d;
    if (r < 0) r += dim.d;
    return static_cast<int>(r);
}

int mod_inv(long long x, const PrimeDim& dim) {
    const int d = dim.d;
    int a = mod_reduce(x, dim);
    if (a == 0) throw ZeroInverse("0 has no inverse mod " + std::to_string(d));
    // Extended Euclid, iterative; d prime so gcd(a, d) = 1 always.
    long long r0 = d, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_reduce(s0, dim);
}

SympMatrix make_symp(long long alpha, long long beta, long long gamma, long long delta,
                     const PrimeDim& dim) {
    SympMatrix f{mod_reduce(alpha, dim), mod_reduce(beta, dim), mod_reduce(gamma, dim),
                 mod_reduce(delta, dim)};
    if (symp_det(f, dim) != 1)
        throw std::invalid_argument("matrix is not in SL(2,Z_" + std::to_string(dim.d) +
                                    "): det != 1");
    return f;
}

SympMatrix symp_identity() { return SympMatrix{1, 0, 0, 1}; }

SympMatrix symp_G(const PrimeDim&) { return SympMatrix{1, 1, 0, 1}; }

SympMatrix symp_H(const PrimeDim& dim) { return SympMatrix{0, 1, dim.d - 1, 0}; }

int symp_det(const SympMatrix& f, const PrimeDim& dim) {
    return mod_reduce(static_cast<long long>(f.alpha) * f.delta -
                          static_cast<long long>(f.beta) * f.gamma,
                      dim);
}

SympMatrix symp_mul(const SympMatrix& f, const SympMatrix& g, const PrimeDim& dim) {
    SympMatrix out;
    out.alpha = mod_reduce(static_cast<long long>(f.alpha) * g.alpha +
                               static_cast<long long>(f.beta) * g.gamma,
                           dim);
    out.beta = mod_reduce(static_cast<long long>(f.alpha) * g.beta +
                              static_cast<long long>(f.beta) * g.delta,
                          dim);
    out.gamma = mod_reduce(static_cast<long long>(f.gamma) * g.alpha +
                               static_cast<long long>(f.delta) * g.gamma,
                           dim);
    out.delta = mod_reduce(static_cast<long long>(f.gamma) * g.beta +
                               static_cast<long long>(f.delta) * g.delta,
                           dim);
    return out;
}

IndexPair symp_apply(const SympMatrix& f, const IndexPair& q, const PrimeDim& dim) {
    IndexPair out;
    out.q1 = mod_reduce(static_cast<long long>(f.alpha) * q.q1 +
                            static_cast<long long>(f.beta) * q.q2,
                        dim);
    out.q2 = mod_reduce(static_cast<long long>(f.gamma) * q.q1 +
                            static_cast<long long>(f.delta) * q.q2,
                        dim);
    return out;
}

}  // namespace sicmub
