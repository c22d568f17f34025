// Exact modular arithmetic over Z_d for odd prime d, and the discrete
// symplectic group SL(2,Z_d).  Residues are always kept in [0, d-1].
#pragma once

#include <string>

#include "sicmub/errors.hpp"

namespace sicmub {

// A validated odd prime Hilbert-space dimension with the modular inverse
// of 2 precomputed (the phase exponents of the displacement operators all
// involve it).
struct PrimeDim {
    int d = 0;
    int inv2 = 0;
};

// Rejects d < 2 (OutOfRange), d = 2 (EvenDim) and composites (NonPrime).
PrimeDim check_prime_dim(int d);

// Canonical residue of x in [0, d-1].
int mod_reduce(long long x, const PrimeDim& dim);

// Multiplicative inverse of x mod d via extended Euclid; ZeroInverse if
// x = 0 mod d.
int mod_inv(long long x, const PrimeDim& dim);

// A pair of residues indexing a point of Z_d x Z_d.
struct IndexPair {
    int q1 = 0;
    int q2 = 0;
    bool operator==(const IndexPair&) const = default;
};

// Element of SL(2,Z_d): [[alpha, beta], [gamma, delta]], det = 1 mod d.
struct SympMatrix {
    int alpha = 1;
    int beta = 0;
    int gamma = 0;
    int delta = 1;
};

// Builds a SympMatrix with entries reduced mod d; throws
// std::invalid_argument when det != 1 mod d.
SympMatrix make_symp(long long alpha, long long beta, long long gamma, long long delta,
                     const PrimeDim& dim);

SympMatrix symp_identity();
SympMatrix symp_G(const PrimeDim& dim);  // [[1,1],[0,1]]
SympMatrix symp_H(const PrimeDim& dim);  // [[0,1],[-1,0]]

int symp_det(const SympMatrix& f, const PrimeDim& dim);

SympMatrix symp_mul(const SympMatrix& f, const SympMatrix& g, const PrimeDim& dim);

// F q mod d.
IndexPair symp_apply(const SympMatrix& f, const IndexPair& q, const PrimeDim& dim);

}  // namespace sicmub
