#include "mps/result.hpp"

#include <json.hpp>

#include "mps/error.hpp"

namespace mps {

namespace {

std::string verdict_text(const Verdict& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::to_string(std::get<std::int64_t>(v));
}

}  // namespace

std::string emit_result(const ResultDocument& doc, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::json j = nlohmann::json::object();
    j["vars"] = doc.vars;
    j["order"] = doc.order;
    j["generators"] = doc.generators;
    j["reduced_groebner"] = doc.reduced_groebner;
    if (doc.dimension) j["dimension"] = *doc.dimension;
    if (!doc.verdicts.empty()) {
      nlohmann::json v = nlohmann::json::object();
      for (const auto& [key, value] : doc.verdicts) {
        std::visit([&](const auto& x) { v[key] = x; }, value);
      }
      j["verdicts"] = v;
    }
    return j.dump(2) + "\n";
  }

  std::string out;
  out += "vars: ";
  for (std::size_t i = 0; i < doc.vars.size(); ++i) out += (i ? ", " : "") + doc.vars[i];
  out += "\norder: " + doc.order + "\n";
  out += "generators (" + std::to_string(doc.generators.size()) + "):\n";
  for (const auto& g : doc.generators) out += "  " + g + "\n";
  out += "reduced_groebner (" + std::to_string(doc.reduced_groebner.size()) + "):\n";
  for (const auto& g : doc.reduced_groebner) out += "  " + g + "\n";
  if (doc.dimension) out += "dimension: " + std::to_string(*doc.dimension) + "\n";
  if (!doc.verdicts.empty()) {
    out += "verdicts:\n";
    for (const auto& [key, value] : doc.verdicts) out += "  " + key + " = " + verdict_text(value) + "\n";
  }
  return out;
}

ResultDocument parse_result_json(std::string_view text) {
  ResultDocument doc;
  try {
    const auto j = nlohmann::json::parse(text);
    doc.vars = j.at("vars").get<std::vector<std::string>>();
    doc.order = j.at("order").get<std::string>();
    doc.generators = j.at("generators").get<std::vector<std::string>>();
    doc.reduced_groebner = j.at("reduced_groebner").get<std::vector<std::string>>();
    if (j.contains("dimension")) doc.dimension = j.at("dimension").get<std::int64_t>();
    if (j.contains("verdicts")) {
      for (const auto& [key, value] : j.at("verdicts").items()) {
        if (value.is_boolean()) {
          doc.verdicts[key] = value.get<bool>();
        } else {
          doc.verdicts[key] = value.get<std::int64_t>();
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed result document: ") + e.what());
  }
  return doc;
}

}  // namespace mps
