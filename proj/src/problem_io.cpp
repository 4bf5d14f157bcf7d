#include "catalyxis/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "catalyxis/error.hpp"

namespace catalyxis {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string entry_name(std::string_view vec, std::size_t i) {
  return std::string(vec) + "[" + std::to_string(i) + "]";
}

Rational parse_entry(std::string_view vec, std::size_t i, std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), entry_name(vec, i) + ": " + e.what());
  }
}

ProbVec build_vector(std::string_view vec, std::vector<Rational> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].sign() < 0) {
      throw Error(ErrorCode::NegativeEntry,
                  entry_name(vec, i) + ": negative entry " + values[i].to_string());
    }
  }
  try {
    return ProbVec::make(std::move(values));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(vec) + ": " + e.what());
  }
}

ProbVec vector_from_json(const nlohmann::json& doc, std::string_view key) {
  const auto it = doc.find(std::string(key));
  if (it == doc.end()) throw Error(ErrorCode::Parse, "missing field '" + std::string(key) + "'");
  if (!it->is_array()) throw Error(ErrorCode::Parse, "field '" + std::string(key) + "' must be an array");
  std::vector<Rational> values;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& item = (*it)[i];
    if (item.is_string()) {
      values.push_back(parse_entry(key, i, item.get_ref<const std::string&>()));
    } else if (item.is_number_integer()) {
      values.push_back(parse_entry(key, i, item.dump()));
    } else if (item.is_number()) {
      throw Error(ErrorCode::Parse, entry_name(key, i) +
                                        ": floating-point literal; quote decimals as strings "
                                        "so they stay exact");
    } else {
      throw Error(ErrorCode::Parse, entry_name(key, i) + ": expected a decimal string");
    }
  }
  return build_vector(key, std::move(values));
}

ProblemFile parse_json_problem(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "problem document must be a JSON object");
  if (const auto v = doc.find("schema_version"); v != doc.end()) {
    if (!v->is_number_integer() || v->get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::Parse, "unsupported schema_version " + v->dump());
    }
  }
  ProblemFile problem{vector_from_json(doc, "p"), vector_from_json(doc, "q"), std::nullopt};
  if (doc.contains("r") && !doc["r"].is_null()) problem.r = vector_from_json(doc, "r");
  return problem;
}

ProblemFile parse_csv_problem(std::string_view text) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<std::string> fields;
    std::string_view rest = body;
    while (true) {
      const auto comma = rest.find(',');
      fields.emplace_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    std::string label;
    if (!fields.empty() && (fields.front() == "p" || fields.front() == "q")) {
      label = fields.front();
      fields.erase(fields.begin());
    }
    rows.emplace_back(std::move(label), std::move(fields));
  }
  if (rows.size() != 2) {
    throw Error(ErrorCode::Parse, "CSV problem needs exactly two rows (p and q), got " +
                                      std::to_string(rows.size()));
  }
  if (rows[0].first.empty()) rows[0].first = "p";
  if (rows[1].first.empty()) rows[1].first = rows[0].first == "q" ? "p" : "q";
  if (rows[0].first == rows[1].first) throw Error(ErrorCode::Parse, "CSV rows must be labelled p and q");
  if (rows[0].first == "q") std::swap(rows[0], rows[1]);

  auto to_vector = [](const std::string& name, const std::vector<std::string>& fields) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < fields.size(); ++i) values.push_back(parse_entry(name, i, fields[i]));
    return build_vector(name, std::move(values));
  };
  return {to_vector("p", rows[0].second), to_vector("q", rows[1].second), std::nullopt};
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw Error(ErrorCode::Parse, "empty problem document");
  return body.front() == '{' ? parse_json_problem(body) : parse_csv_problem(body);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  return parse_problem(buffer.str());
}

nlohmann::ordered_json vector_json(const ProbVec& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

nlohmann::ordered_json to_json(const ProblemFile& problem) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["p"] = vector_json(problem.p);
  doc["q"] = vector_json(problem.q);
  if (problem.r) doc["r"] = vector_json(*problem.r);
  return doc;
}

}  // namespace catalyxis
