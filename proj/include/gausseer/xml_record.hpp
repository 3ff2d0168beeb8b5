#pragma once

#include <string>
#include <string_view>

#include "gausseer/record.hpp"

namespace gausseer {

/// Escapes &, <, >, " and '.
std::string xml_escape(std::string_view s);

/// Ingestion record: "<doc>", one "  <field name=\"K\">V</field>" line per
/// value in the order id, title, file_path, element*, method*, basis_set*,
/// job_type*, charge, multiplicity, energy, degrees_of_freedom, flag*, then
/// "</doc>". Absent scalars are omitted. Every line ends with '\n'.
std::string emit_xml_record(const GaussianRecord& record);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace gausseer
