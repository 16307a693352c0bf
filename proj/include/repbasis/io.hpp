#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "repbasis/coincide.hpp"
#include "repbasis/construct.hpp"
#include "repbasis/intset.hpp"
#include "repbasis/modular.hpp"
#include "repbasis/repfn.hpp"

namespace repbasis::io {

using nlohmann::json;

inline constexpr int kFormat = 1;

/// Set files: "# format: 1" header, one integer per line, '#' starts a comment.
FiniteIntSet parse_set(std::istream& in);
FiniteIntSet read_set(const std::filesystem::path& path);
void write_set(std::ostream& out, const FiniteIntSet& set);
void write_set(const std::filesystem::path& path, const FiniteIntSet& set);

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
json int_to_json(const Int& n);
Int int_from_json(const json& j);

json to_json(const FiniteIntSet& set);
FiniteIntSet set_from_json(const json& j);

json to_json(const RepTable& table);
RepTable table_from_json(const json& j);

json to_json(const EventuallyPeriodicSet& set);
EventuallyPeriodicSet periodic_from_json(const json& j);

json to_json(const TargetFn& f);
TargetFn target_from_json(const json& j);

json to_json(const ResidueSet& set);
ResidueSet residues_from_json(const json& j);

json to_json(const CoincidencePair& pair);
CoincidencePair pair_from_json(const json& j);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace repbasis::io
