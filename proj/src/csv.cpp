#include "acs/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace acs {

namespace {

// Reads one logical CSV line; returns false at end of input. A quoted field
// may contain newlines, so a logical line can span physical lines.
bool read_logical_line(std::istream& is, std::string& out) {
    out.clear();
    std::string physical;
    bool have_any = false;
    bool open_quote = false;
    while (std::getline(is, physical)) {
        have_any = true;
        if (!physical.empty() && physical.back() == '\r') physical.pop_back();
        if (!out.empty()) out.push_back('\n');
        out += physical;
        // A line is complete when quotes balance.
        std::size_t quotes = 0;
        for (char c : out)
            if (c == '"') ++quotes;
        open_quote = (quotes % 2) != 0;
        if (!open_quote) return true;
    }
    return have_any;
}

std::int64_t parse_int(const std::string& text, std::size_t row, const char* what) {
    if (text.empty()) throw CsvError(row, std::string(what) + ": empty field");
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size())
        throw CsvError(row, std::string(what) + ": not an integer: '" + text + "'");
    return static_cast<std::int64_t>(v);
}

double parse_double_at(const std::string& text, std::size_t row, const char* what) {
    try {
        return parse_double(text);
    } catch (const std::invalid_argument&) {
        throw CsvError(row, std::string(what) + ": not a number: '" + text + "'");
    }
}

Method parse_method(const std::string& text, std::size_t row) {
    const auto m = method_from_name(text);
    if (!m) throw CsvError(row, "unknown method: '" + text + "'");
    return *m;
}

void require_header(std::istream& is, const std::string& expected) {
    std::string line;
    if (!read_logical_line(is, line)) throw CsvError(1, "missing header");
    if (line != expected)
        throw CsvError(1, "expected header '" + expected + "', found '" + line + "'");
}

std::vector<std::string> require_fields(const std::string& line, std::size_t row, std::size_t n) {
    auto fields = split_csv_line(line);
    if (fields.size() != n)
        throw CsvError(row, "expected " + std::to_string(n) + " fields, found " +
                                std::to_string(fields.size()));
    return fields;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric field");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string escape_csv_field(const std::string& field) {
    const bool needs_quoting =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quoting) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_synthetic_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << "method,replication,t,lo,hi,width\n";
    for (const auto& r : records) {
        os << method_name(r.method) << ',' << r.replication << ',' << r.t << ','
           << format_double(r.lo) << ',' << format_double(r.hi) << ','
           << format_double(r.width) << '\n';
    }
}

std::vector<ExperimentRecord> read_synthetic_csv(std::istream& is) {
    require_header(is, "method,replication,t,lo,hi,width");
    std::vector<ExperimentRecord> out;
    std::string line;
    std::size_t row = 1;
    while (read_logical_line(is, line)) {
        ++row;
        if (line.empty()) continue;
        auto f = require_fields(line, row, 6);
        ExperimentRecord rec;
        rec.method = parse_method(f[0], row);
        rec.replication = static_cast<int>(parse_int(f[1], row, "replication"));
        rec.t = parse_int(f[2], row, "t");
        rec.lo = parse_double_at(f[3], row, "lo");
        rec.hi = parse_double_at(f[4], row, "hi");
        rec.width = parse_double_at(f[5], row, "width");
        rec.seed = 0;  // not part of the file schema
        out.push_back(rec);
    }
    return out;
}

void write_baseball_summary_csv(std::ostream& os, const std::vector<CoverageSummary>& rows) {
    os << "method,player_id,coverage_prob,mean_lo,mean_hi\n";
    for (const auto& r : rows) {
        os << method_name(r.method) << ',' << r.id << ',' << format_double(r.coverage_prob)
           << ',' << format_double(r.mean_lo) << ',' << format_double(r.mean_hi) << '\n';
    }
}

std::vector<CoverageSummary> read_baseball_summary_csv(std::istream& is) {
    require_header(is, "method,player_id,coverage_prob,mean_lo,mean_hi");
    std::vector<CoverageSummary> out;
    std::string line;
    std::size_t row = 1;
    while (read_logical_line(is, line)) {
        ++row;
        if (line.empty()) continue;
        auto f = require_fields(line, row, 5);
        CoverageSummary s;
        s.method = parse_method(f[0], row);
        s.id = static_cast<int>(parse_int(f[1], row, "player_id"));
        s.coverage_prob = parse_double_at(f[2], row, "coverage_prob");
        if (!(s.coverage_prob >= 0.0 && s.coverage_prob <= 1.0))
            throw CsvError(row, "coverage_prob outside [0,1]");
        s.mean_lo = parse_double_at(f[3], row, "mean_lo");
        s.mean_hi = parse_double_at(f[4], row, "mean_hi");
        out.push_back(s);
    }
    return out;
}

std::vector<PlayerRecord> read_players_csv(std::istream& is) {
    require_header(is, "player_id,name,hits_45,at_bats,p_true");
    std::vector<PlayerRecord> out;
    std::string line;
    std::size_t row = 1;
    while (read_logical_line(is, line)) {
        ++row;
        if (line.empty()) continue;
        auto f = require_fields(line, row, 5);
        PlayerRecord p;
        p.player_id = static_cast<int>(parse_int(f[0], row, "player_id"));
        p.name = f[1];
        p.hits_45 = static_cast<int>(parse_int(f[2], row, "hits_45"));
        p.at_bats = static_cast<int>(parse_int(f[3], row, "at_bats"));
        p.p_true = parse_double_at(f[4], row, "p_true");
        if (p.player_id < 1) throw CsvError(row, "player_id must be positive");
        if (p.at_bats < 1) throw CsvError(row, "at_bats must be positive");
        if (p.hits_45 < 0 || p.hits_45 > p.at_bats)
            throw CsvError(row, "hits_45 outside [0, at_bats]");
        if (!(p.p_true >= 0.0 && p.p_true <= 1.0))
            throw CsvError(row, "p_true outside [0,1]");
        out.push_back(p);
    }
    return out;
}

void write_players_csv(std::ostream& os, const std::vector<PlayerRecord>& players) {
    os << "player_id,name,hits_45,at_bats,p_true\n";
    for (const auto& p : players) {
        os << p.player_id << ',' << escape_csv_field(p.name) << ',' << p.hits_45 << ','
           << p.at_bats << ',' << format_double(p.p_true) << '\n';
    }
}

}  // namespace acs
