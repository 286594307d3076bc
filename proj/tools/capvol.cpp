#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "capvol/bench.hpp"
#include "capvol/io.hpp"
#include "capvol/oracles.hpp"
#include "capvol/volumes.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPrecondition = 2;

double env_tolerance() {
    if (const char* s = std::getenv("CAPVOL_TOL")) {
        try {
            return std::stod(s);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable CAPVOL_TOL\n";
        }
    }
    return 0.0;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw capvol::ParseError(out_path + ": cannot open for writing");
    }
    out << text;
}

std::vector<int> parse_n_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) {
        throw capvol::ParseError("--n: empty list");
    }
    return out;
}

int cmd_info(const std::string& path) {
    const capvol::SystemFile sf = capvol::load_system_file(path);
    const double tol = env_tolerance();
    const capvol::SystemDiagnostics diag = capvol::diagnose(sf.system, tol);
    const capvol::Polynomial p = capvol::char_poly(sf.system.A);
    const capvol::HurwitzData hd = capvol::hurwitz_matrix(p);

    std::cout << "system: " << (sf.name.empty() ? path : sf.name) << "\n"
              << "n: " << sf.system.n() << "\n"
              << "controllable: " << (diag.controllable ? "true" : "false")
              << " (rank P_n = " << diag.rank_Pn << ", tol = " << diag.rank_tol << ")\n"
              << "spectrum class: " << capvol::to_string(diag.spectrum_class) << "\n";
    std::cout << "spectrum:";
    for (const capvol::Complex& lam : diag.spectrum) {
        std::cout << " (" << lam.real() << (lam.imag() < 0 ? "" : "+") << lam.imag()
                  << "i)";
    }
    std::cout << "\ncharacteristic coefficients [a1..an]:";
    for (double a : hd.a) {
        std::cout << ' ' << capvol::format_real(a);
    }
    std::cout << "\nHurwitz minors:";
    for (double m : hd.minors) {
        std::cout << ' ' << capvol::format_real(m);
    }
    std::cout << "\n";

    nlohmann::json j;
    j["n"] = sf.system.n();
    j["controllable"] = diag.controllable;
    j["rank_Pn"] = diag.rank_Pn;
    j["spectrum_class"] = capvol::to_string(diag.spectrum_class);
    j["char_poly"] = hd.a;
    j["hurwitz_minors"] = hd.minors;
    std::cout << "---\n" << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_volume(const std::string& path, const std::string& region,
               const std::string& method, bool with_oracle, bool as_json, bool as_csv,
               double oracle_T, int oracle_m) {
    const capvol::SystemFile sf = capvol::load_system_file(path);
    capvol::ReportOptions opts;
    opts.region = region == "ellipsoid" ? capvol::Region::Ellipsoid
                                        : capvol::Region::Zonotope;
    opts.with_oracle = with_oracle;
    opts.oracle_T = oracle_T;
    opts.oracle_m = oracle_m;
    opts.tol = env_tolerance();

    capvol::VolumeReport report = capvol::full_report(sf.system, opts);
    report.system_name = sf.name.empty() ? path : sf.name;
    if (method != "all") {
        std::vector<capvol::VolumeResult> kept;
        for (const capvol::VolumeResult& r : report.results) {
            if (capvol::to_string(r.method) == method) {
                kept.push_back(r);
            }
        }
        report.results = kept;
        report.max_rel_discrepancy = capvol::max_pairwise_rel_discrepancy(kept);
    }

    if (as_json) {
        std::cout << capvol::report_to_json(report) << "\n";
    } else if (as_csv) {
        std::cout << capvol::report_to_csv(report);
    } else {
        std::cout << capvol::report_to_text(report);
    }
    for (const capvol::VolumeResult& r : report.results) {
        if (!r.preconditions_met) {
            return kExitPrecondition;
        }
    }
    return kExitOk;
}

int cmd_bench(const std::string& n_csv, int trials, std::uint64_t seed,
              const std::string& out_path) {
    const std::vector<capvol::BenchRecord> records =
        capvol::run_bench(parse_n_list(n_csv), trials, seed);
    write_output(capvol::bench_to_csv(records), out_path);
    return kExitOk;
}

int cmd_lemma(int n, int count, std::uint64_t seed, const std::string& out_path) {
    const std::vector<capvol::LemmaRow> rows = capvol::run_lemma_sweep(n, count, seed);
    write_output(capvol::lemma_to_csv(rows), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capvol: controllability zonotope/ellipsoid volumes of single-input "
                 "linear continuous-time systems"};
    app.require_subcommand(1);

    std::string path;
    auto* info = app.add_subcommand("info", "system diagnostics");
    info->add_option("file", path, "system JSON file")->required();

    std::string region = "zonotope";
    std::string method = "all";
    bool with_oracle = false;
    bool as_json = false;
    bool as_csv = false;
    double oracle_T = 0.0;
    int oracle_m = 80;
    auto* volume = app.add_subcommand("volume", "volume by the analytical routes");
    volume->add_option("file", path, "system JSON file")->required();
    volume->add_option("--region", region)
        ->check(CLI::IsMember({"zonotope", "ellipsoid"}));
    volume->add_option("--method", method)
        ->check(CLI::IsMember({"jordan", "ccf", "hurwitz", "all"}));
    volume->add_flag("--oracle", with_oracle, "add the independent numerical oracle");
    volume->add_flag("--json", as_json);
    volume->add_flag("--csv", as_csv);
    volume->add_option("--oracle-T", oracle_T, "oracle horizon (default 12/|lambda|_min)");
    volume->add_option("--oracle-m", oracle_m, "oracle segment count");

    std::string n_csv = "2,4,8";
    int trials = 9;
    std::uint64_t seed = 1;
    std::string out_path;
    auto* bench = app.add_subcommand("bench", "time the three routes, emit CSV");
    bench->add_option("--n", n_csv, "comma-separated dimensions (each <= 50)");
    bench->add_option("--trials", trials);
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_path, "output CSV path (default stdout)");

    int lemma_n = 3;
    int lemma_count = 500;
    auto* lemma = app.add_subcommand("lemma", "Hurwitz-determinant identity sweep, CSV");
    lemma->add_option("--n", lemma_n);
    lemma->add_option("--count", lemma_count);
    lemma->add_option("--seed", seed);
    lemma->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            return cmd_info(path);
        }
        if (volume->parsed()) {
            return cmd_volume(path, region, method, with_oracle, as_json, as_csv,
                              oracle_T, oracle_m);
        }
        if (bench->parsed()) {
            return cmd_bench(n_csv, trials, seed, out_path);
        }
        if (lemma->parsed()) {
            return cmd_lemma(lemma_n, lemma_count, seed, out_path);
        }
    } catch (const capvol::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const capvol::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const capvol::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
