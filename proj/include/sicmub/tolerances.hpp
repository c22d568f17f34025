// Numerical tolerances used throughout the library.
//
// tol_unit guards algebraic identities checked on directly constructed
// matrices; tol_cov allows for the extra roundoff accumulated through
// matrix products and Gram-type sums.  tol_sic_* separate strict
// verification of supplied fiducials from the looser acceptance of raw
// search output (which is then polished).
#pragma once

namespace sicmub::tol {

inline constexpr double unit = 1e-10;
inline constexpr double cov = 1e-9;
inline constexpr double sic_verify = 1e-9;
inline constexpr double sic_search = 1e-7;
inline constexpr double sic_polish = 1e-12;

}  // namespace sicmub::tol
