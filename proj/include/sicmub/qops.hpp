// Dense complex operators on C^d: the shift X, the clock Z, the
// displacement operators D_q of the Weyl-Heisenberg group, and the
// symplectic unitaries U_F with numerically tested group covariance.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sicmub/zmod.hpp"

namespace sicmub {

using Cx = std::complex<double>;
using Ket = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;
using DisplacementIndex = IndexPair;

// Powers of omega = exp(2*pi*i/d), looked up by exponent reduced mod d.
// Powers are never formed by repeated complex multiplication, so there is
// no phase drift for large exponents.
class Phases {
  public:
    explicit Phases(const PrimeDim& dim);
    Cx operator()(long long exponent) const;
    const PrimeDim& dim() const { return dim_; }

  private:
    PrimeDim dim_;
    std::vector<Cx> table_;
};

bool is_unitary(const Operator& a, double tol);
bool is_hermitian(const Operator& a, double tol);
bool is_traceless(const Operator& a, double tol);

// X|a> = |a+1 mod d>.
Operator build_X(const PrimeDim& dim);

// Z|a> = omega^a |a>.
Operator build_Z(const PrimeDim& dim);

// D_q = omega^{inv2 q1 q2} X^q1 Z^q2.  D_0 = I and D_q^dag = D_{-q}.
Operator build_D(const DisplacementIndex& q, const PrimeDim& dim);

// Applies D_q to a ket in O(d).
Ket apply_D(const DisplacementIndex& q, const Ket& psi, const Phases& ph);

// The beta != 0 branch of U_F admits two exponent readings; which one is
// correct is decided operationally by the covariance test, not assumed.
enum class UfExponentVariant {
    standard,     // (2 beta)^{-1} (alpha b^2 - 2 a b + delta a^2) on |a><b|
    transcribed,  // (2 beta)^{-1} (alpha b^2 - 2 a b + beta  b^2) on |a><b|
};

const char* to_string(UfExponentVariant v);

// U_F for a given exponent variant (the variant only matters when
// beta != 0).  The global phase is fixed by making the first nonzero
// entry in row-major order real positive.
Operator build_UF(const SympMatrix& f, const PrimeDim& dim, UfExponentVariant variant);

// Builds U_F with the exponent variant that passes the covariance test;
// throws CovarianceFailure if neither variant does.
Operator build_UF(const SympMatrix& f, const PrimeDim& dim);

// Resolves the exponent variant for this dimension by requiring covariance
// for a sample of symplectic matrices (G, H and their products).
UfExponentVariant choose_uf_variant(const PrimeDim& dim);

// max over q of min_phi || U D_q U^dag - e^{i phi} D_{Fq} ||_F, the optimal
// phase being taken from the trace inner product tr(D_{Fq}^dag U D_q U^dag).
double check_covariance(const Operator& u, const SympMatrix& f, const PrimeDim& dim);

}  // namespace sicmub
