// Command-line front end: build MUB/SIC structures, run the verification
// suite, export angle tables and Gram data, and drive fiducial search.
//
// Exit codes: 0 success, 1 verification failure, 2 bad dimension,
// 3 I/O or parse error, 4 search exhausted without a fiducial.
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sicmub/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadDimension = 2;
constexpr int kExitParse = 3;
constexpr int kExitNotFound = 4;

struct RunConfig {
    int dimension = 0;
    std::string in_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int max_restarts = 50;
    double tol = -1.0;  // < 0: use the per-command default
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        sicmub::write_text_file(cfg.out_path, text);
    }
}

sicmub::FiducialCandidate load_fiducial(const RunConfig& cfg) {
    if (cfg.in_path.empty()) throw sicmub::ParseError("missing --in <fiducial.json>");
    sicmub::FiducialCandidate psi = sicmub::read_fiducial_file(cfg.in_path);
    if (cfg.dimension != 0 && cfg.dimension != psi.dim.d)
        throw sicmub::ParseError("--dim does not match the fiducial file dimension");
    return psi;
}

int cmd_mubs(const RunConfig& cfg) {
    const sicmub::PrimeDim dim = sicmub::check_prime_dim(cfg.dimension);
    const sicmub::MubFamily fam = sicmub::build_mub_family(dim);
    const sicmub::BlochBasis basis = sicmub::build_bloch_basis(dim);
    emit(cfg, sicmub::mub_report_json(fam, basis));
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const sicmub::FiducialCandidate psi = load_fiducial(cfg);
    const sicmub::MubFamily fam = sicmub::build_mub_family(psi.dim);
    const sicmub::BlochBasis basis = sicmub::build_bloch_basis(psi.dim);
    const double tol = cfg.tol > 0 ? cfg.tol : sicmub::tol::sic_verify;
    const sicmub::VerificationReport rep = sicmub::verify_full(psi, fam, basis, tol);
    emit(cfg, sicmub::report_to_json(rep));
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

// Shared by angles/reconstruct: extract the rotation angles of a verified
// fiducial and rebuild the SIC from them.
struct AnglePipeline {
    std::vector<sicmub::RotationDecomposition> decs;
    std::vector<sicmub::BlochVector> rebuilt;
    std::vector<sicmub::BlochVector> direct;
    double residual = 0.0;
};

AnglePipeline run_angle_pipeline(const sicmub::FiducialCandidate& psi,
                                 const sicmub::MubFamily& fam,
                                 const sicmub::BlochBasis& basis) {
    const sicmub::SicEnsemble ens = sicmub::build_sic(psi, fam, basis);
    const std::vector<sicmub::MubSimplex> simplices = sicmub::mub_simplices(fam, basis);
    AnglePipeline pipe;
    for (int m = 0; m <= psi.dim.d; ++m)
        pipe.decs.push_back(
            sicmub::fourier_diagonalize(simplices[m], ens.probs.row(m), psi.dim));
    pipe.rebuilt = sicmub::angles_to_sic(fam, basis, pipe.decs);
    pipe.direct = ens.blochs;
    for (size_t q = 0; q < pipe.rebuilt.size(); ++q)
        pipe.residual =
            std::max(pipe.residual, (pipe.rebuilt[q] - pipe.direct[q]).cwiseAbs().maxCoeff());
    return pipe;
}

int cmd_angles(const RunConfig& cfg, bool as_csv) {
    const sicmub::FiducialCandidate psi = load_fiducial(cfg);
    const double tol = cfg.tol > 0 ? cfg.tol : sicmub::tol::sic_verify;
    if (!sicmub::verify_fiducial(psi, tol).sic_overlap.pass()) {
        std::cerr << "input is not a fiducial at tolerance " << tol << "\n";
        return kExitVerifyFail;
    }
    const sicmub::MubFamily fam = sicmub::build_mub_family(psi.dim);
    const sicmub::BlochBasis basis = sicmub::build_bloch_basis(psi.dim);
    const AnglePipeline pipe = run_angle_pipeline(psi, fam, basis);
    if (as_csv) {
        emit(cfg, sicmub::angles_csv(psi.dim, pipe.decs, pipe.residual));
    } else {
        emit(cfg, sicmub::reconstruction_json(psi.dim, pipe.decs, pipe.rebuilt, pipe.residual));
    }
    return kExitOk;
}

int cmd_search(const RunConfig& cfg) {
    const sicmub::PrimeDim dim = sicmub::check_prime_dim(cfg.dimension);
    const double tol = cfg.tol > 0 ? cfg.tol : sicmub::tol::sic_search;
    const sicmub::SearchResult sr =
        sicmub::search_fiducial(dim, cfg.seed, cfg.max_restarts, tol);
    if (!sr.found) {
        std::cerr << "no fiducial found after " << cfg.max_restarts << " restarts\n";
        return kExitNotFound;
    }
    const sicmub::MubFamily fam = sicmub::build_mub_family(dim);
    const sicmub::BlochBasis basis = sicmub::build_bloch_basis(dim);
    const sicmub::VerificationReport rep = sicmub::verify_full(sr.candidate, fam, basis);
    const std::string fiducial_text = sicmub::fiducial_to_json(sr.candidate);
    const std::string report_text = sicmub::report_to_json(rep);
    if (cfg.out_path.empty()) {
        std::cout << fiducial_text << report_text;
    } else {
        sicmub::write_text_file(cfg.out_path, fiducial_text);
        sicmub::write_text_file(cfg.out_path + ".report.json", report_text);
    }
    return rep.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl-Heisenberg SIC-POVM / MUB geometry toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--dim", cfg.dimension, "Hilbert space dimension (odd prime)");
    app.add_option("--in", cfg.in_path, "input fiducial JSON file");
    app.add_option("--out", cfg.out_path, "output file (default: stdout)");
    app.add_option("--seed", cfg.seed, "search seed");
    app.add_option("--max-restarts", cfg.max_restarts, "search restart budget");
    app.add_option("--tol", cfg.tol, "tolerance override");

    CLI::App* sub_mubs = app.add_subcommand("mubs", "build the d+1 MUBs and report deviations");
    CLI::App* sub_verify = app.add_subcommand("verify", "run the verification suite on a fiducial");
    CLI::App* sub_angles = app.add_subcommand("angles", "export the rotation angle table (CSV)");
    CLI::App* sub_recon =
        app.add_subcommand("reconstruct", "rebuild the SIC from its angles and report residuals");
    CLI::App* sub_search = app.add_subcommand("search", "search for a fiducial vector");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_mubs->parsed()) return cmd_mubs(cfg);
        if (sub_verify->parsed()) return cmd_verify(cfg);
        if (sub_angles->parsed()) return cmd_angles(cfg, true);
        if (sub_recon->parsed()) return cmd_angles(cfg, false);
        if (sub_search->parsed()) return cmd_search(cfg);
    } catch (const sicmub::OutOfRange& e) {
        std::cerr << "dimension must be an odd prime: " << e.what() << "\n";
        return kExitBadDimension;
    } catch (const sicmub::EvenDim& e) {
        std::cerr << "dimension must be an odd prime: " << e.what() << "\n";
        return kExitBadDimension;
    } catch (const sicmub::NonPrime& e) {
        std::cerr << "dimension must be an odd prime: " << e.what() << "\n";
        return kExitBadDimension;
    } catch (const sicmub::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}
