#pragma once

#include <string>

#include "capvol/bench.hpp"
#include "capvol/system.hpp"
#include "capvol/volumes.hpp"

namespace capvol {

/// On-disk system description: {"n": 2, "A": [[...],[...]], "B": [...],
/// "name": "..."} with B a length-n array (single input).
struct SystemFile {
    LctSystem system;
    std::string name;
};

SystemFile load_system_file(const std::string& path);
SystemFile parse_system_json(const std::string& text, const std::string& origin);

std::string report_to_json(const VolumeReport& report);
std::string report_to_csv(const VolumeReport& report);
std::string report_to_text(const VolumeReport& report);

/// Parses a report back from report_to_json output (the round-trip
/// contract for scripting).
VolumeReport parse_report_json(const std::string& text);

std::string bench_to_csv(const std::vector<BenchRecord>& records);
std::string lemma_to_csv(const std::vector<LemmaRow>& rows);

/// 17-significant-digit decimal rendering (shortest round-trip for
/// doubles).
std::string format_real(double v);

} // namespace capvol
