#pragma once

#include <string>
#include <vector>

#include "rectwalg/classify.hpp"
#include "rectwalg/parallel.hpp"
#include "rectwalg/walg.hpp"

namespace rectwalg {

enum class OutputFormat { text, json };

/// Deterministic rendering of verification records, ordered by
/// (check, i, j, r).  JSON output is a top-level array whose elements
/// carry a schema version.
std::string report_render(std::vector<CheckRecord> records, OutputFormat fmt);

/// Render a classification result (optionally with its orbit).
std::string classification_render(const ClassificationResult& res, OutputFormat fmt);
std::string classification_render(const std::vector<ClassificationResult>& results,
                                  OutputFormat fmt);
std::string orbit_render(const RowClass& rc, const std::set<RowClass>& orb, OutputFormat fmt);

/// Row-class JSON interchange: {"n":…, "l":…, "rows": {"-1": ["2","-1"], …}}
/// with stored (non-positive) rows only and entries in the exact textual
/// Number grammar.
std::string row_class_to_json(const RowClass& rc);
RowClass row_class_from_json(const std::string& text);

/// Comma-separated Numbers ("-2,1/2,s") -> values.
std::vector<Number> parse_pool(const std::string& text);

} // namespace rectwalg
