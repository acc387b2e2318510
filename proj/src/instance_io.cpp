#include "pmsched/instance_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace pmsched {

namespace {

struct RawInstance {
  std::optional<std::string> unit;
  std::optional<Year> horizon;
  std::optional<double> discount, inflation, insp0, rep0, out0;
  std::vector<DefectGroup> groups;
};

double unit_scale(const std::string& unit, const std::string& name) {
  if (unit == "euros") return 1.0;
  if (unit == "kiloeuros") return 1000.0;
  throw SchemaError(name + ": unit must be 'euros' or 'kiloeuros', got '" +
                    unit + "'");
}

Instance assemble(const RawInstance& raw, std::string name) {
  const char* missing = !raw.unit        ? "unit"
                        : !raw.horizon   ? "horizon"
                        : !raw.discount  ? "discount"
                        : !raw.inflation ? "inflation"
                        : !raw.insp0     ? "insp0"
                        : !raw.rep0      ? "rep0"
                        : !raw.out0      ? "out0"
                                         : nullptr;
  if (missing) {
    throw SchemaError(name + ": missing required field '" + missing + "'");
  }
  if (raw.groups.empty()) {
    throw SchemaError(name + ": at least one 'group' entry is required");
  }
  const double scale = unit_scale(*raw.unit, name);
  return Instance{CostModel(*raw.insp0 * scale, *raw.rep0 * scale,
                            *raw.out0 * scale, *raw.inflation, *raw.discount),
                  PrimarySchedule(*raw.horizon, raw.groups), std::move(name)};
}

double parse_number(const std::string& token, const std::string& where) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw SchemaError(where + ": expected a number, got '" + token + "'");
  }
  if (used != token.size()) {
    throw SchemaError(where + ": trailing characters in number '" + token +
                      "'");
  }
  return value;
}

int parse_int(const std::string& token, const std::string& where) {
  const double value = parse_number(token, where);
  const int as_int = static_cast<int>(value);
  if (static_cast<double>(as_int) != value) {
    throw SchemaError(where + ": expected an integer, got '" + token + "'");
  }
  return as_int;
}

}  // namespace

Instance parse_instance_text(std::istream& in, std::string name) {
  RawInstance raw;
  std::string line;
  int lineno = 0;
  auto where = [&](const char* what) {
    return name + ":" + std::to_string(lineno) + ": " + what;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;  // blank or comment-only line

    auto read_token = [&]() {
      std::string token;
      if (!(fields >> token)) {
        throw SchemaError(where("missing value for key '") + key + "'");
      }
      return token;
    };
    auto finish = [&]() {
      std::string extra;
      if (fields >> extra) {
        throw SchemaError(where("unexpected trailing token '") + extra + "'");
      }
    };
    auto set_scalar = [&](std::optional<double>& slot) {
      if (slot) throw SchemaError(where("duplicate key '") + key + "'");
      slot = parse_number(read_token(), where(key.c_str()));
      finish();
    };

    if (key == "unit") {
      if (raw.unit) throw SchemaError(where("duplicate key 'unit'"));
      raw.unit = read_token();
      finish();
    } else if (key == "horizon") {
      if (raw.horizon) throw SchemaError(where("duplicate key 'horizon'"));
      raw.horizon = parse_int(read_token(), where("horizon"));
      finish();
    } else if (key == "discount") {
      set_scalar(raw.discount);
    } else if (key == "inflation") {
      set_scalar(raw.inflation);
    } else if (key == "insp0") {
      set_scalar(raw.insp0);
    } else if (key == "rep0") {
      set_scalar(raw.rep0);
    } else if (key == "out0") {
      set_scalar(raw.out0);
    } else if (key == "group") {
      const int deadline = parse_int(read_token(), where("group deadline"));
      const int count = parse_int(read_token(), where("group count"));
      finish();
      raw.groups.push_back({count, deadline});
    } else {
      throw SchemaError(where("unknown key '") + key + "'");
    }
  }
  return assemble(raw, std::move(name));
}

Instance parse_instance_json_text(const std::string& content,
                                  std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(name + ": invalid JSON: " + e.what());
  }
  RawInstance raw;
  try {
    if (!doc.is_object()) throw SchemaError(name + ": top level must be an object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "unit") {
        raw.unit = value.get<std::string>();
      } else if (key == "horizon") {
        raw.horizon = value.get<int>();
      } else if (key == "discount") {
        raw.discount = value.get<double>();
      } else if (key == "inflation") {
        raw.inflation = value.get<double>();
      } else if (key == "insp0") {
        raw.insp0 = value.get<double>();
      } else if (key == "rep0") {
        raw.rep0 = value.get<double>();
      } else if (key == "out0") {
        raw.out0 = value.get<double>();
      } else if (key == "groups") {
        for (const auto& g : value) {
          raw.groups.push_back(
              {g.at("count").get<int>(), g.at("deadline").get<int>()});
        }
      } else {
        throw SchemaError(name + ": unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(name + ": " + e.what());
  }
  return assemble(raw, std::move(name));
}

Instance parse_instance(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open instance file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) {
    throw IoError("error while reading '" + path + "'");
  }
  const std::string content = buffer.str();

  std::string name = path;
  const auto slash = name.find_last_of("/\\");
  if (slash != std::string::npos) name.erase(0, slash + 1);

  const auto first = content.find_first_not_of(" \t\r\n");
  const bool looks_json =
      (first != std::string::npos && content[first] == '{') ||
      (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0);
  if (looks_json) {
    return parse_instance_json_text(content, std::move(name));
  }
  std::istringstream in(content);
  return parse_instance_text(in, std::move(name));
}

}  // namespace pmsched
