#include "repbasis/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "repbasis/errors.hpp"

namespace repbasis::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_format(const json& j) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  if (j.contains("format") && !(j.at("format").is_number_integer() && j.at("format").get<int>() == kFormat)) {
    throw ValidationError("unsupported format version");
  }
}

std::vector<std::int64_t> int64_list(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<std::int64_t> out;
  for (const json& e : j) out.push_back(to_int64(int_from_json(e)));
  return out;
}

json multiplicity_to_json(const Multiplicity& m) {
  return m.is_infinite() ? json("inf") : json(m.value());
}

Multiplicity multiplicity_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Multiplicity::infinity();
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return Multiplicity(j.get<std::uint64_t>());
  }
  throw ValidationError("target values must be nonnegative integers or \"inf\"");
}

}  // namespace

FiniteIntSet parse_set(std::istream& in) {
  std::vector<Int> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      const std::string head = trim(line);
      if (head.rfind("# format:", 0) == 0 && trim(head.substr(9)) != std::to_string(kFormat)) {
        throw ValidationError("unsupported set file format: " + head);
      }
    }
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    try {
      values.push_back(parse_int(body));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return FiniteIntSet(std::move(values));
}

FiniteIntSet read_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return parse_set(in);
}

void write_set(std::ostream& out, const FiniteIntSet& set) {
  out << "# format: " << kFormat << "\n";
  for (const Int& a : set) out << a << "\n";
}

void write_set(const std::filesystem::path& path, const FiniteIntSet& set) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_set(out, set);
}

json int_to_json(const Int& n) {
  if (fits_int64(n)) return json(to_int64(n));
  return json(n.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ValidationError("expected an integer, got " + j.dump());
}

json to_json(const FiniteIntSet& set) {
  json out = json::array();
  for (const Int& a : set) out.push_back(int_to_json(a));
  return out;
}

FiniteIntSet set_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<Int> values;
  for (const json& e : j) values.push_back(int_from_json(e));
  return FiniteIntSet(std::move(values));
}

json to_json(const RepTable& table) {
  json counts = json::array();
  for (const Int& c : table.counts()) counts.push_back(int_to_json(c));
  return {{"format", kFormat}, {"lo", int_to_json(table.lo())}, {"hi", int_to_json(table.hi())}, {"counts", counts}};
}

RepTable table_from_json(const json& j) {
  check_format(j);
  const json& counts = field(j, "counts");
  if (!counts.is_array()) throw ValidationError("counts must be an array");
  std::vector<Int> values;
  for (const json& c : counts) values.push_back(int_from_json(c));
  Window window(int_from_json(field(j, "lo")), int_from_json(field(j, "hi")));
  if (window.length() != Int(values.size())) throw ValidationError("counts length does not match the window");
  return RepTable(window, std::move(values));
}

json to_json(const EventuallyPeriodicSet& set) {
  return {{"format", kFormat},
          {"n0", int_to_json(set.n0())},
          {"m", set.modulus()},
          {"T", std::vector<std::int64_t>(set.residues().begin(), set.residues().end())},
          {"head", to_json(set.head())}};
}

EventuallyPeriodicSet periodic_from_json(const json& j) {
  check_format(j);
  return EventuallyPeriodicSet(int_from_json(field(j, "n0")), to_int64(int_from_json(field(j, "m"))),
                               int64_list(field(j, "T")), set_from_json(field(j, "head")));
}

json to_json(const TargetFn& f) {
  json overrides = json::object();
  for (const auto& [n, v] : f.overrides()) overrides[n.str()] = multiplicity_to_json(v);
  return {{"format", kFormat}, {"default", multiplicity_to_json(f.default_value())}, {"overrides", overrides}};
}

TargetFn target_from_json(const json& j) {
  check_format(j);
  std::map<Int, Multiplicity> overrides;
  if (j.contains("overrides")) {
    const json& o = j.at("overrides");
    if (!o.is_object()) throw ValidationError("overrides must be an object");
    for (const auto& [key, value] : o.items()) overrides[parse_int(key)] = multiplicity_from_json(value);
  }
  return TargetFn(multiplicity_from_json(field(j, "default")), std::move(overrides));
}

json to_json(const ResidueSet& set) {
  return {{"format", kFormat},
          {"m", set.modulus()},
          {"members", std::vector<std::int64_t>(set.members().begin(), set.members().end())}};
}

ResidueSet residues_from_json(const json& j) {
  check_format(j);
  return ResidueSet(to_int64(int_from_json(field(j, "m"))), int64_list(field(j, "members")));
}

json to_json(const CoincidencePair& pair) {
  return {{"format", kFormat},     {"n0", int_to_json(pair.n0)},       {"m", pair.m},
          {"T", pair.residues},    {"Astar", to_json(pair.astar)},     {"Bstar", to_json(pair.bstar)}};
}

CoincidencePair pair_from_json(const json& j) {
  check_format(j);
  CoincidencePair pair;
  pair.n0 = int_from_json(field(j, "n0"));
  pair.m = to_int64(int_from_json(field(j, "m")));
  pair.residues = int64_list(field(j, "T"));
  pair.astar = set_from_json(field(j, "Astar"));
  pair.bstar = set_from_json(field(j, "Bstar"));
  pair.validate();
  return pair;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace repbasis::io
