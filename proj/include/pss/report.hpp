#ifndef PSS_REPORT_HPP
#define PSS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pss/batch.hpp"

namespace pss
{

/// %.17g rendering; "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double v);

/**
 * CSV layout (UTF-8, '\n' line endings):
 *
 *   run,seed,final_error,milestone_<i>...
 *   <one row per run>
 *   # stats
 *   min,<v>
 *   max,<v>
 *   median,<v>
 *   mean,<v>
 *   std,<v>
 *   success_rate,<v>      (only when a region was supplied)
 *
 * Statistics are over final_error. Floats carry 17 significant digits.
 */
void write_csv(const BatchReport& report, std::ostream& out);

/// JSON mirror of BatchReport; non-finite numbers are written as strings.
void write_json(const BatchReport& report, std::ostream& out);

/// Parse write_json output. Throws ExportError on malformed input.
BatchReport read_json(std::istream& in);

struct CsvReport
{
  std::vector<std::string> header;
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<double>> rows; ///< final_error followed by milestone errors
  StatsSummary stats;
  std::optional<double> success_rate;
};

/// Parse write_csv output. Throws ExportError on malformed input.
CsvReport read_csv(std::istream& in);

/// Write to config.output_path (stdout when empty) in config.format. Throws ExportError naming the path.
void export_report(const BatchReport& report);

}  // namespace pss

#endif  // PSS_REPORT_HPP
