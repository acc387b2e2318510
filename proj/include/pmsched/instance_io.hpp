#pragma once

#include <iosfwd>
#include <string>

#include "pmsched/economics.hpp"
#include "pmsched/schedule.hpp"

namespace pmsched {

/// A parsed problem instance: economic parameters (normalized to euros) and
/// the primary repair schedule, plus the display name of its source.
struct Instance {
  CostModel model;
  PrimarySchedule schedule;
  std::string name;
};

/// Reads an instance from disk. Files whose content starts with '{' (or
/// whose name ends in .json) are parsed as JSON; anything else as the
/// key-value text format:
///
///   # comment
///   unit kiloeuros        euros | kiloeuros
///   horizon 30
///   discount 0.08
///   inflation 0.01
///   insp0 500
///   rep0 60
///   out0 300
///   group 2 1             group <deadline> <count>, one line per group
///
/// The JSON form mirrors the same keys, with groups as an array of
/// {"deadline": d, "count": c} objects. Throws IoError when the file cannot
/// be read, SchemaError on malformed content (with line/field context), and
/// ValidationError when the data breaks a domain invariant.
Instance parse_instance(const std::string& path);

/// Same parsers over in-memory content, for embedding and tests.
Instance parse_instance_text(std::istream& in, std::string name);
Instance parse_instance_json_text(const std::string& content,
                                  std::string name);

}  // namespace pmsched
