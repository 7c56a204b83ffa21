#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsched/demand.hpp"
#include "qsched/errors.hpp"
#include "qsched/model.hpp"
#include "qsched/schedule.hpp"
#include "qsched/solvers.hpp"

namespace qsched {

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) out << ',';
        out << csv_escape(cells[k]);
    }
    out << '\n';
}

// Minimal reader: quoted cells with doubled quotes, no embedded newlines.
inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                cell += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell += c;
        }
    }
    cells.push_back(cell);
    return cells;
}

inline long parse_long_cell(const std::string& cell, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw config_error("bad " + what + " value '" + cell + "'");
    }
}

// --- booking streams ----------------------------------------------------------

inline void write_stream_csv(std::ostream& out, const std::vector<BookingRequest>& stream) {
    write_csv_row(out, {"id", "start_day", "duration", "beds"});
    for (const auto& r : stream)
        write_csv_row(out, {std::to_string(r.id), std::to_string(r.start_day),
                            std::to_string(r.duration), std::to_string(r.beds)});
}

inline std::vector<BookingRequest> read_stream_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw config_error("empty stream file");
    if (split_csv_row(line) != std::vector<std::string>{"id", "start_day", "duration", "beds"})
        throw config_error("stream file must start with 'id,start_day,duration,beds'");
    std::vector<BookingRequest> stream;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto cells = split_csv_row(line);
        if (cells.size() != 4)
            throw config_error("stream line " + std::to_string(line_no) + " needs 4 fields");
        BookingRequest r;
        r.id = static_cast<int>(parse_long_cell(cells[0], "id"));
        r.start_day = static_cast<int>(parse_long_cell(cells[1], "start_day"));
        r.duration = static_cast<int>(parse_long_cell(cells[2], "duration"));
        r.beds = static_cast<int>(parse_long_cell(cells[3], "beds"));
        if (r.start_day < 0 || r.duration < 1 || r.beds < 1)
            throw config_error("stream line " + std::to_string(line_no) + " out of range");
        stream.push_back(r);
    }
    return stream;
}

// --- samples -------------------------------------------------------------------

// Bitstring convention: character k is variable k; spin -1 prints as '0'.
inline void write_samples_csv(std::ostream& out, const SampleSet& samples) {
    write_csv_row(out, {"energy", "count", "bitstring"});
    for (const auto& entry : samples.entries) {
        std::string bits(entry.config.size(), '0');
        for (std::size_t k = 0; k < entry.config.size(); ++k)
            if (entry.config[k] > 0) bits[k] = '1';
        write_csv_row(out, {detail::format_double(entry.energy), std::to_string(entry.count), bits});
    }
}

// --- harness curves --------------------------------------------------------------

inline void write_curves_csv(std::ostream& out, const HarnessResult& result) {
    write_csv_row(out, {"method", "rejection_index", "mean_filling", "stderr", "num_seeds"});
    for (const auto& [method, curve] : result.curves)
        for (const auto& point : curve)
            write_csv_row(out, {method, std::to_string(point.rejection_index),
                                detail::format_double(point.mean_filling),
                                detail::format_double(point.stderr_filling),
                                std::to_string(point.num_seeds)});
}

}  // namespace qsched
