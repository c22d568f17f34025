// The standard full set of d+1 mutually unbiased bases generated by
// symplectic unitaries, and the permute-and-rephase action of the
// displacement operators on each basis.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sicmub/qops.hpp"

namespace sicmub {

// Basis label: 0..d-1 are the U_G^m bases, the last one (internally the
// sentinel index d) is the Fourier-type basis labelled "inf".
struct MubLabel {
    int index = 0;

    static MubLabel finite(int m) { return MubLabel{m}; }
    static MubLabel infinity(const PrimeDim& dim) { return MubLabel{dim.d}; }
    bool is_infinity(const PrimeDim& dim) const { return index == dim.d; }
    std::string str(const PrimeDim& dim) const {
        return is_infinity(dim) ? "inf" : std::to_string(index);
    }
    bool operator==(const MubLabel&) const = default;
};

// The clock operator on basis m can be written with eigenvalue exponent
// a or inv2*a; the reading is pinned by requiring the displacement action
// to reproduce D_q |m,a> exactly, phases included.
enum class ZmEigenvalueVariant {
    omega_a,       // Z_m |m,a> = omega^a |m,a>
    omega_half_a,  // Z_m |m,a> = omega^{inv2 a} |m,a>
};

const char* to_string(ZmEigenvalueVariant v);

struct MubFamily {
    PrimeDim dim;
    UfExponentVariant uf_variant = UfExponentVariant::standard;
    ZmEigenvalueVariant zm_variant = ZmEigenvalueVariant::omega_a;
    std::vector<std::vector<Ket>> bases;  // (d+1) x d, [label.index][a]
    std::vector<Operator> xm;             // per label
    std::vector<Operator> zm;             // per label
    double max_orthonormality_dev = 0.0;
    double max_unbiasedness_dev = 0.0;

    const Ket& ket(MubLabel m, int a) const { return bases[m.index][a]; }
    std::vector<MubLabel> labels() const;
};

// |m,a> = U_G^m |a> for m = 0..d-1 and |inf,a> = U_H |a>; basis 0 is the
// standard basis exactly.  Selects and records the U_F exponent variant
// and the Z_m eigenvalue variant.
MubFamily build_mub_family(const PrimeDim& dim);

// X_m cyclically shifts basis m; Z_m is diagonal in basis m with the given
// eigenvalue variant.
std::pair<Operator, Operator> build_Xm_Zm(const MubFamily& fam, MubLabel m,
                                          ZmEigenvalueVariant variant);
std::pair<Operator, Operator> build_Xm_Zm(const MubFamily& fam, MubLabel m);

// Index shift of basis m under D_q: q1 - m q2 for finite m, -q2 for inf.
int displacement_shift(MubLabel m, const DisplacementIndex& q, const PrimeDim& dim);

struct DisplacementAction {
    int shift = 0;
    std::vector<Cx> phases;  // D_q |m,a> = phases[a] |m, a+shift>
};

// Measures shift and per-vector phases; ActionMismatch if D_q |m,a> is not
// proportional to a single basis vector.
DisplacementAction displacement_action(const MubFamily& fam, MubLabel m,
                                       const DisplacementIndex& q);

// Max deviation, over all m, q, a, between D_q |m,a> and the predicted
// omega^{phi} X_m^s Z_m^t |m,a> with the given Z_m eigenvalue variant.
double displacement_action_deviation(const MubFamily& fam, ZmEigenvalueVariant variant);

}  // namespace sicmub
