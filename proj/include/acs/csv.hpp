// CSV schemas for experiment results and the batting dataset.
//
// All floating-point values are written with 17 significant digits so a
// write/read cycle reproduces every double bit-for-bit. Quoting follows
// RFC 4180: fields containing commas, quotes, or newlines are quoted, with
// embedded quotes doubled. Schema violations raise CsvError carrying the
// 1-based row number.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "acs/simlab.hpp"

namespace acs {

class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// %.17g rendering, the round-trip format used by every writer here.
std::string format_double(double v);

// Strict full-string parse; throws std::invalid_argument on trailing garbage.
double parse_double(const std::string& text);

// Splits one CSV line into fields, honoring RFC 4180 quoting.
std::vector<std::string> split_csv_line(const std::string& line);

// Quotes a field only when it needs it.
std::string escape_csv_field(const std::string& field);

// Columns: method,replication,t,lo,hi,width
void write_synthetic_csv(std::ostream& os, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_synthetic_csv(std::istream& is);

// Columns: method,player_id,coverage_prob,mean_lo,mean_hi
void write_baseball_summary_csv(std::ostream& os, const std::vector<CoverageSummary>& rows);
std::vector<CoverageSummary> read_baseball_summary_csv(std::istream& is);

// Columns: player_id,name,hits_45,at_bats,p_true
std::vector<PlayerRecord> read_players_csv(std::istream& is);
void write_players_csv(std::ostream& os, const std::vector<PlayerRecord>& players);

}  // namespace acs
