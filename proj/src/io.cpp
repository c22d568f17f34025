#include "sicmub/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sicmub/errors.hpp"

namespace sicmub {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v, int sig) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

void dump_value(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += '"';
                out += it.key();  // keys are plain identifiers, no escaping needed
                out += "\":";
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case ordered_json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_value(v, out);
            }
            out += ']';
            break;
        }
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>(), 17);
            break;
        default:
            out += j.dump();
            break;
    }
}

// nlohmann's default float formatting is shortest-round-trip; reports pin
// 17 significant digits instead, so serialization goes through this walk.
std::string dump_json(const ordered_json& j) {
    std::string out;
    dump_value(j, out);
    out += '\n';
    return out;
}

ordered_json complex_pair(const Cx& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json criterion_json(const CriterionResult& c) {
    return ordered_json{{"deviation", c.deviation}, {"tolerance", c.tolerance}, {"pass", c.pass()}};
}

ordered_json matrix_rows(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string fiducial_to_json(const FiducialCandidate& psi) {
    ordered_json j;
    j["d"] = psi.dim.d;
    ordered_json amps = ordered_json::array();
    for (Eigen::Index a = 0; a < psi.ket.size(); ++a) amps.push_back(complex_pair(psi.ket(a)));
    j["fiducial"] = std::move(amps);
    return dump_json(j);
}

FiducialCandidate parse_fiducial_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid fiducial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("d") || !j.contains("fiducial") ||
        !j["d"].is_number_integer() || !j["fiducial"].is_array())
        throw ParseError("fiducial JSON must be {\"d\": int, \"fiducial\": [[re, im], ...]}");
    const PrimeDim dim = check_prime_dim(j["d"].get<int>());
    const auto& amps = j["fiducial"];
    if (amps.size() != static_cast<size_t>(dim.d))
        throw ParseError("fiducial amplitude count does not match d");
    Ket ket(dim.d);
    for (int a = 0; a < dim.d; ++a) {
        const auto& pair = amps[a];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ParseError("amplitude " + std::to_string(a) + " is not a [re, im] pair");
        ket(a) = Cx(pair[0].get<double>(), pair[1].get<double>());
    }
    return FiducialCandidate{dim, std::move(ket)};
}

FiducialCandidate read_fiducial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fiducial file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fiducial_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << text;
}

std::string report_to_json(const VerificationReport& rep) {
    ordered_json j;
    j["d"] = rep.d;
    if (rep.uf_variant && rep.zm_variant) {
        j["variants"] = ordered_json{{"uf_exponent", to_string(*rep.uf_variant)},
                                     {"zm_eigenvalue", to_string(*rep.zm_variant)}};
    }
    ordered_json criteria;
    criteria["sic_overlap"] = criterion_json(rep.sic_overlap);
    criteria["resolution_of_identity"] = criterion_json(rep.resolution_of_identity);
    if (rep.min_uncertainty.computed()) {
        criteria["min_uncertainty"] = criterion_json(rep.min_uncertainty);
        criteria["autocorrelation"] = criterion_json(rep.autocorrelation);
        criteria["geometric_simplex"] = criterion_json(rep.geometric_simplex);
        criteria["prob_geom_agreement"] = criterion_json(rep.prob_geom_agreement);
    }
    j["criteria"] = std::move(criteria);
    if (rep.min_uncertainty.computed()) {
        ordered_json details;
        ordered_json per_m = ordered_json::array();
        for (Eigen::Index m = 0; m < rep.min_uncertainty_per_m.size(); ++m)
            per_m.push_back(rep.min_uncertainty_per_m(m));
        details["min_uncertainty_per_m"] = std::move(per_m);
        details["autocorrelation_per_shift"] = matrix_rows(rep.autocorrelation_per_shift);
        details["geometric_per_shift"] = matrix_rows(rep.geometric_per_shift);
        j["details"] = std::move(details);
    }
    j["pass"] = rep.all_pass();
    return dump_json(j);
}

std::string mub_report_json(const MubFamily& fam, const BlochBasis& basis) {
    const PrimeDim& dim = fam.dim;
    const int d = dim.d;

    // Bloch Gram deviation from the block structure (d delta - 1)/(d-1) / 0.
    const std::vector<MubSimplex> simplices = mub_simplices(fam, basis);
    double gram_dev = 0.0;
    for (int m = 0; m <= d; ++m) {
        for (int mp = 0; mp <= d; ++mp) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const double target =
                        m == mp ? ((a == b ? d - 1.0 : -1.0) / (d - 1.0)) : 0.0;
                    gram_dev = std::max(
                        gram_dev, std::abs(bloch_inner(simplices[m].vectors[a],
                                                       simplices[mp].vectors[b]) -
                                           target));
                }
            }
        }
    }

    ordered_json j;
    j["d"] = d;
    j["variants"] = ordered_json{{"uf_exponent", to_string(fam.uf_variant)},
                                 {"zm_eigenvalue", to_string(fam.zm_variant)}};
    ordered_json bases = ordered_json::array();
    for (MubLabel m : fam.labels()) {
        ordered_json entry;
        entry["m"] = m.str(dim);
        ordered_json kets = ordered_json::array();
        for (int a = 0; a < d; ++a) {
            ordered_json amps = ordered_json::array();
            for (int c = 0; c < d; ++c) amps.push_back(complex_pair(fam.ket(m, a)(c)));
            kets.push_back(std::move(amps));
        }
        entry["kets"] = std::move(kets);
        bases.push_back(std::move(entry));
    }
    j["bases"] = std::move(bases);
    j["max_orthonormality_deviation"] = fam.max_orthonormality_dev;
    j["max_unbiasedness_deviation"] = fam.max_unbiasedness_dev;
    j["bloch_gram_max_deviation"] = gram_dev;
    return dump_json(j);
}

std::string angles_csv(const PrimeDim& dim, const std::vector<RotationDecomposition>& decs,
                       double roundtrip_residual) {
    std::string out = "m,a,theta,roundtrip_residual\n";
    for (const RotationDecomposition& dec : decs) {
        for (size_t a = 0; a < dec.angles.size(); ++a) {
            out += dec.label.str(dim);
            out += ',';
            out += std::to_string(a + 1);
            out += ',';
            out += format_double(dec.angles[a], 15);
            out += ',';
            out += format_double(roundtrip_residual, 15);
            out += '\n';
        }
    }
    return out;
}

std::string reconstruction_json(const PrimeDim& dim,
                                const std::vector<RotationDecomposition>& decs,
                                const std::vector<BlochVector>& blochs,
                                double roundtrip_residual) {
    ordered_json j;
    j["d"] = dim.d;
    j["roundtrip_residual"] = roundtrip_residual;
    ordered_json angles = ordered_json::array();
    for (const RotationDecomposition& dec : decs) {
        for (size_t a = 0; a < dec.angles.size(); ++a) {
            angles.push_back(ordered_json{{"m", dec.label.str(dim)},
                                          {"a", static_cast<int>(a + 1)},
                                          {"theta", dec.angles[a]}});
        }
    }
    j["angles"] = std::move(angles);
    ordered_json vecs = ordered_json::array();
    for (const BlochVector& b : blochs) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index u = 0; u < b.size(); ++u) row.push_back(b(u));
        vecs.push_back(std::move(row));
    }
    j["bloch"] = std::move(vecs);
    return dump_json(j);
}

}  // namespace sicmub
