// Typed error conditions raised across the library.
#pragma once

#include <stdexcept>

namespace sicmub {

struct OutOfRange final : std::runtime_error { using std::runtime_error::runtime_error; };
struct EvenDim final : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonPrime final : std::runtime_error { using std::runtime_error::runtime_error; };
struct ZeroInverse final : std::runtime_error { using std::runtime_error::runtime_error; };
struct CovarianceFailure final : std::runtime_error { using std::runtime_error::runtime_error; };
struct ActionMismatch final : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotDensityMatrix final : std::runtime_error { using std::runtime_error::runtime_error; };
struct DimensionMismatch final : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotProbability final : std::runtime_error { using std::runtime_error::runtime_error; };
struct DegenerateSimplex final : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonUnitEigenvalue final : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotFiducial final : std::runtime_error { using std::runtime_error::runtime_error; };
struct ParseError final : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace sicmub
