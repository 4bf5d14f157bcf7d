#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "catalyxis/probvec.hpp"

namespace catalyxis {

inline constexpr int kSchemaVersion = 1;

/// A transformation question p -> q, optionally with a proposed catalyst r.
struct ProblemFile {
  ProbVec p;
  ProbVec q;
  std::optional<ProbVec> r;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses either the JSON form
///   {"p": ["0.45", ...], "q": [...], "r": [...]}   (r optional)
/// with decimal or fraction strings (JSON integers are accepted, JSON
/// floats are rejected because they are not exact), or a flat CSV form of
/// two lines, optionally labelled: "p,0.45,0.35,..." / "q,...".
/// Errors are Error(Parse) or the ProbVec validation codes, with a message
/// naming the offending vector and entry.
ProblemFile parse_problem(std::string_view text);

/// Reads and parses a file; Error(Io) when it cannot be read.
ProblemFile load_problem(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ProblemFile& problem);

/// Entries as exact strings (terminating decimal or fraction).
nlohmann::ordered_json vector_json(const ProbVec& v);

}  // namespace catalyxis
