#ifndef POLYLOC_IO_HPP
#define POLYLOC_IO_HPP

#include "polyloc/filter.hpp"
#include "polyloc/hermite.hpp"
#include "polyloc/localize.hpp"

#include <iosfwd>
#include <string>

#include "json.hpp"

namespace polyloc {

/**
 * Signal CSV: one sample per line, either `value` or `t,value`. A first line
 * that does not parse as numbers is treated as a header. The t column is not
 * read back; samples sit on the uniform grid t_j = -pi + 2 pi j / N.
 * Parse failures throw IoError naming `source` and the line number.
 */
Signal read_signal_csv(std::istream& in, const std::string& source = "<stdin>");
Signal read_signal_csv_file(const std::string& path);

/// Writes `t,value` with a header line, 17 significant digits, LF endings.
void write_signal_csv(std::ostream& out, const Signal& s);

nlohmann::json filter_to_json(const TrigFilter& h);
/// Throws IoError on missing or mistyped fields.
TrigFilter filter_from_json(const nlohmann::json& j);
TrigFilter read_filter_file(const std::string& path);

nlohmann::json polynomial_to_json(const LocalizedPolynomial& p);
nlohmann::json hermite_to_json(const HermiteOptimal& h);

} // namespace polyloc

#endif // POLYLOC_IO_HPP
