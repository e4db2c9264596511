#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "acsl/cyclotomic.hpp"
#include "acsl/diagram.hpp"
#include "acsl/framed_link.hpp"
#include "acsl/invariants.hpp"
#include "acsl/manifolds.hpp"
#include "acsl/surgery.hpp"

namespace acsl::cli {

/// One parsed input file. Diagram inputs are compiled to their FramedLink;
/// the diagram itself is kept for reporting.
struct LoadedInput {
  std::variant<FramedLink, HomologyData> object;
  std::optional<Diagram> diagram;
  std::optional<std::int64_t> k;
  std::vector<std::string> warnings;
};

/// Accepted shapes (exactly one per document):
///   {"linking": [[...]], "charges"?, "roles"?, "names"?, "k"?}
///   {"pd": "X(...) ...", "components"?, "framings": [...] | "blackboard",
///    "charges"?, "roles"?, "names"?, "k"?}
///   {"genus": g, "N": [...], "q_self": int, "k"?}
/// Schema errors throw Error(parse) naming the offending field path.
LoadedInput parse_input(const nlohmann::json& doc);
LoadedInput load_link_json(const std::filesystem::path& path);

nlohmann::json to_json(const FramedLink& link);
nlohmann::json to_json(const SurgeryPresentation& p);
nlohmann::json to_json(const HomologyData& h);
/// {"n": order, "coeffs": [[num, den], ...]}; entries beyond 64 bits are
/// written as decimal strings.
nlohmann::json to_json(const CycNum& value);
nlohmann::json to_json(const Invariant& inv);

}  // namespace acsl::cli
