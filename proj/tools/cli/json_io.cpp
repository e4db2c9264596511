#include "cli/json_io.hpp"

#include <fstream>
#include <limits>

#include "acsl/errors.hpp"

namespace acsl::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::parse, path + ": " + what);
}

std::int64_t as_integer(const json& value, const std::string& path) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_unsigned()) {
    if (value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      schema(path, "integer out of range");
    }
    return static_cast<std::int64_t>(value.get<std::uint64_t>());
  }
  if (value.is_number_float()) schema(path, "non-integer entry " + value.dump());
  schema(path, "expected an integer, got " + std::string(value.type_name()));
}

std::vector<std::int64_t> as_integer_array(const json& value, const std::string& path) {
  if (!value.is_array()) schema(path, "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(as_integer(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

IntMatrix as_matrix(const json& value, const std::string& path) {
  if (!value.is_array()) schema(path, "expected an array of rows");
  const std::size_t n = value.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    const auto row = as_integer_array(value[i], row_path);
    if (row.size() != n) {
      schema(row_path, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

// Fills charges/roles/names of a link whose matrix is already set.
void read_decorations(const json& doc, FramedLink& link, std::vector<std::string>& warnings) {
  const std::size_t n = link.size();
  if (doc.contains("charges")) {
    link.charges = as_integer_array(doc["charges"], "$.charges");
    if (link.charges.size() != n) {
      schema("$.charges", "has " + std::to_string(link.charges.size()) + " entries, expected " +
                              std::to_string(n));
    }
  } else {
    link.charges.assign(n, 0);
    warnings.emplace_back("charges missing; defaulting to 0");
  }

  link.roles.assign(n, Role::observed);
  if (doc.contains("roles")) {
    const json& roles = doc["roles"];
    if (!roles.is_array() || roles.size() != n) {
      schema("$.roles", "expected an array of " + std::to_string(n) + " role strings");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string path = "$.roles[" + std::to_string(j) + "]";
      if (!roles[j].is_string()) schema(path, "expected \"observed\" or \"surgery\"");
      const auto role = roles[j].get<std::string>();
      if (role == "observed") {
        link.roles[j] = Role::observed;
      } else if (role == "surgery") {
        link.roles[j] = Role::surgery;
      } else {
        schema(path, "unknown role \"" + role + "\"");
      }
    }
  }

  link.names.clear();
  if (doc.contains("names")) {
    const json& names = doc["names"];
    if (!names.is_array() || names.size() != n) {
      schema("$.names", "expected an array of " + std::to_string(n) + " strings");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!names[j].is_string()) schema("$.names[" + std::to_string(j) + "]", "expected a string");
      link.names.push_back(names[j].get<std::string>());
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) link.names.push_back(default_name(link.roles[j], j));
  }
}

json rational(const mpq_class& q) {
  auto part = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json::array({part(q.get_num()), part(q.get_den())});
}

}  // namespace

LoadedInput parse_input(const json& doc) {
  if (!doc.is_object()) schema("$", "expected a JSON object");
  const int forms = static_cast<int>(doc.contains("linking")) + static_cast<int>(doc.contains("pd")) +
                    static_cast<int>(doc.contains("genus") || doc.contains("N"));
  if (forms != 1) {
    schema("$", "expected exactly one of \"linking\", \"pd\" or \"genus\"/\"N\"");
  }

  LoadedInput out{FramedLink{}, std::nullopt, std::nullopt, {}};
  if (doc.contains("k")) {
    out.k = as_integer(doc["k"], "$.k");
    if (*out.k == 0) schema("$.k", "k must be nonzero");
  }

  if (doc.contains("linking")) {
    FramedLink link;
    link.linking = as_matrix(doc["linking"], "$.linking");
    read_decorations(doc, link, out.warnings);
    for (auto& w : validate(link)) out.warnings.push_back(std::move(w));
    out.object = std::move(link);
  } else if (doc.contains("pd")) {
    if (!doc["pd"].is_string()) schema("$.pd", "expected a PD string");
    const auto text = doc["pd"].get<std::string>();
    Diagram diagram = [&] {
      if (!doc.contains("components")) return parse_pd(text);
      const json& comps = doc["components"];
      if (!comps.is_array()) schema("$.components", "expected an array of edge lists");
      std::vector<std::vector<int>> components;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        std::vector<int> edges;
        for (std::int64_t e : as_integer_array(comps[j], "$.components[" + std::to_string(j) + "]")) {
          edges.push_back(static_cast<int>(e));
        }
        components.push_back(std::move(edges));
      }
      return Diagram(parse_crossings(text), std::move(components));
    }();

    if (!doc.contains("framings")) schema("$.framings", "required with \"pd\" (array or \"blackboard\")");
    FramingSpec framings = Blackboard{};
    if (doc["framings"].is_string()) {
      if (doc["framings"].get<std::string>() != "blackboard") {
        schema("$.framings", "expected an integer array or \"blackboard\"");
      }
    } else {
      framings = as_integer_array(doc["framings"], "$.framings");
    }
    FramedLink link = linking_matrix(diagram, framings);
    read_decorations(doc, link, out.warnings);
    for (auto& w : validate(link)) out.warnings.push_back(std::move(w));
    out.object = std::move(link);
    out.diagram = std::move(diagram);
  } else {
    HomologyData h;
    if (!doc.contains("genus")) schema("$.genus", "required for homology input");
    h.genus = static_cast<int>(as_integer(doc["genus"], "$.genus"));
    if (h.genus < 0) schema("$.genus", "must be non-negative");
    if (!doc.contains("N")) schema("$.N", "required for homology input");
    h.intersections = as_integer_array(doc["N"], "$.N");
    if (h.intersections.size() != static_cast<std::size_t>(2 * h.genus + 1)) {
      schema("$.N", "expected " + std::to_string(2 * h.genus + 1) + " entries for genus " +
                        std::to_string(h.genus));
    }
    if (!doc.contains("q_self")) schema("$.q_self", "required for homology input");
    h.self_linking = as_integer(doc["q_self"], "$.q_self");
    out.object = std::move(h);
  }
  return out;
}

LoadedInput load_link_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
  return parse_input(doc);
}

json to_json(const FramedLink& link) {
  json matrix = json::array();
  for (std::size_t i = 0; i < link.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < link.size(); ++j) row.push_back(link.linking(i, j));
    matrix.push_back(std::move(row));
  }
  json roles = json::array();
  for (Role r : link.roles) roles.push_back(r == Role::observed ? "observed" : "surgery");
  return json{{"linking", std::move(matrix)},
              {"charges", link.charges},
              {"roles", std::move(roles)},
              {"names", link.names}};
}

json to_json(const SurgeryPresentation& p) {
  json out = to_json(p.link);
  out["k"] = p.k.value();
  return out;
}

json to_json(const HomologyData& h) {
  return json{{"genus", h.genus}, {"N", h.intersections}, {"q_self", h.self_linking}};
}

json to_json(const CycNum& value) {
  json coeffs = json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(rational(c));
  return json{{"n", value.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const Invariant& inv) {
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  json out{{"zero", inv.is_zero},
           {"order", inv.value.order()},
           {"value", to_json(inv.value)},
           {"numeric", json::array({clean(inv.numeric.real()), clean(inv.numeric.imag())})}};
  if (inv.phase) out["phase_exponent"] = inv.phase->exponent;
  return out;
}

}  // namespace acsl::cli
