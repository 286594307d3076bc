#include "capvol/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capvol {

using nlohmann::json;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SystemFile parse_system_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) {
            throw DimensionMismatch(origin + ": n must be >= 1");
        }
        const auto& A = j.at("A");
        const auto& B = j.at("B");
        if (static_cast<int>(A.size()) != n) {
            throw DimensionMismatch(origin + ": A must have n rows");
        }
        if (static_cast<int>(B.size()) != n) {
            throw DimensionMismatch(origin + ": B must have n entries");
        }
        Matrix Am(n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(A[i].size()) != n) {
                throw DimensionMismatch(origin + ": A row " + std::to_string(i) +
                                        " must have n entries");
            }
            for (int k = 0; k < n; ++k) {
                Am(i, k) = A[i][k].get<double>();
            }
        }
        Matrix bm(n, 1);
        for (int i = 0; i < n; ++i) {
            bm(i, 0) = B[i].get<double>();
        }
        SystemFile out{LctSystem(std::move(Am), std::move(bm)),
                       j.value("name", std::string{})};
        return out;
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_json(buf.str(), path);
}

namespace {

json result_to_json(const VolumeResult& r) {
    json j;
    j["method"] = to_string(r.method);
    j["region"] = to_string(r.region);
    j["preconditions_met"] = r.preconditions_met;
    j["value"] = r.value;
    j["log_abs"] = r.log_abs;
    j["seconds"] = r.seconds;
    j["notes"] = r.notes;
    return j;
}

} // namespace

std::string report_to_json(const VolumeReport& report) {
    json j;
    j["name"] = report.system_name;
    j["n"] = report.n;
    j["region"] = to_string(report.region);
    j["results"] = json::array();
    for (const VolumeResult& r : report.results) {
        j["results"].push_back(result_to_json(r));
    }
    if (report.oracle_value) {
        j["oracle_value"] = *report.oracle_value;
    }
    if (report.oracle_notes) {
        j["oracle_notes"] = *report.oracle_notes;
    }
    j["max_rel_discrepancy"] = report.max_rel_discrepancy;
    return j.dump(2);
}

VolumeReport parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    VolumeReport report;
    report.system_name = j.value("name", std::string{});
    report.n = j.at("n").get<int>();
    report.region = j.at("region").get<std::string>() == "zonotope" ? Region::Zonotope
                                                                    : Region::Ellipsoid;
    for (const auto& rj : j.at("results")) {
        VolumeResult r;
        const std::string m = rj.at("method").get<std::string>();
        r.method = m == "jordan" ? VolumeMethod::Jordan
                                 : (m == "ccf" ? VolumeMethod::Ccf : VolumeMethod::Hurwitz);
        r.region = report.region;
        r.preconditions_met = rj.at("preconditions_met").get<bool>();
        r.value = rj.at("value").get<double>();
        r.log_abs = rj.at("log_abs").get<double>();
        r.seconds = rj.at("seconds").get<double>();
        r.notes = rj.at("notes").get<std::string>();
        report.results.push_back(std::move(r));
    }
    if (j.contains("oracle_value")) {
        report.oracle_value = j["oracle_value"].get<double>();
    }
    if (j.contains("oracle_notes")) {
        report.oracle_notes = j["oracle_notes"].get<std::string>();
    }
    report.max_rel_discrepancy = j.at("max_rel_discrepancy").get<double>();
    return report;
}

std::string report_to_csv(const VolumeReport& report) {
    std::ostringstream out;
    out << "region,method,preconditions_met,value,log_abs,seconds,notes\n";
    for (const VolumeResult& r : report.results) {
        out << to_string(r.region) << ',' << to_string(r.method) << ','
            << (r.preconditions_met ? "true" : "false") << ',' << format_real(r.value)
            << ',' << format_real(r.log_abs) << ',' << format_real(r.seconds) << ",\""
            << r.notes << "\"\n";
    }
    if (report.oracle_value) {
        out << to_string(report.region) << ",oracle,true,"
            << format_real(*report.oracle_value) << ",,,\""
            << report.oracle_notes.value_or("") << "\"\n";
    }
    return out.str();
}

std::string report_to_text(const VolumeReport& report) {
    std::ostringstream out;
    out << "system: " << (report.system_name.empty() ? "(unnamed)" : report.system_name)
        << "  n=" << report.n << "  region=" << to_string(report.region) << "\n";
    for (const VolumeResult& r : report.results) {
        out << "  " << to_string(r.method) << ": ";
        if (r.preconditions_met) {
            out << format_real(r.value) << "  (log|V|=" << format_real(r.log_abs)
                << ", " << format_real(r.seconds) << " s)";
        } else {
            out << "skipped -- " << r.notes;
        }
        out << "\n";
    }
    if (report.oracle_value) {
        out << "  oracle: " << format_real(*report.oracle_value);
        if (report.oracle_notes) {
            out << "  [" << *report.oracle_notes << "]";
        }
        out << "\n";
    } else if (report.oracle_notes) {
        out << "  oracle: " << *report.oracle_notes << "\n";
    }
    out << "  max pairwise rel discrepancy: " << format_real(report.max_rel_discrepancy)
        << "\n";
    return out.str();
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "n,method,median_seconds,iterations,volume_value,volume_log_abs\n";
    for (const BenchRecord& r : records) {
        out << r.n << ',' << r.method << ',' << format_real(r.median_seconds) << ','
            << r.iterations << ',' << format_real(r.volume_value) << ','
            << format_real(r.volume_log_abs) << "\n";
    }
    return out.str();
}

std::string lemma_to_csv(const std::vector<LemmaRow>& rows) {
    std::ostringstream out;
    out << "index,det_H,L_n,rel_gap,sign_ratio\n";
    int i = 0;
    for (const LemmaRow& r : rows) {
        out << i++ << ',' << format_real(r.det_H) << ',' << format_real(r.l_n) << ','
            << format_real(r.rel_gap) << ',' << r.sign_ratio << "\n";
    }
    return out.str();
}

} // namespace capvol
