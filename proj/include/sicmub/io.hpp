// File formats: fiducial JSON, verification/MUB/reconstruction reports and
// the angle table CSV.  All floating point output is serialized with 17
// significant digits so files are byte-stable and round-trippable.
#pragma once

#include <string>
#include <vector>

#include "sicmub/sic.hpp"

namespace sicmub {

// { "d": int, "fiducial": [[re, im], ...] } with d amplitude pairs.
std::string fiducial_to_json(const FiducialCandidate& psi);

// ParseError on malformed JSON or structure; the dimension itself is
// validated via check_prime_dim (NonPrime/EvenDim/OutOfRange pass through).
FiducialCandidate parse_fiducial_json(const std::string& text);

FiducialCandidate read_fiducial_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

std::string report_to_json(const VerificationReport& rep);

// Basis kets, pairwise overlap deviations and Bloch Gram deviations.
std::string mub_report_json(const MubFamily& fam, const BlochBasis& basis);

// CSV: m,a,theta,roundtrip_residual with theta in radians.
std::string angles_csv(const PrimeDim& dim, const std::vector<RotationDecomposition>& decs,
                       double roundtrip_residual);

// Angle table, reconstructed Bloch vectors and the round-trip residual.
std::string reconstruction_json(const PrimeDim& dim,
                                const std::vector<RotationDecomposition>& decs,
                                const std::vector<BlochVector>& blochs,
                                double roundtrip_residual);

}  // namespace sicmub
