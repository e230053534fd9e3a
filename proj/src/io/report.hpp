#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "common/error.hpp"
#include "engine/catalog.hpp"
#include "engine/engine.hpp"

namespace covdim::io {

nlohmann::json error_json(const Error& e);
nlohmann::json interval_json(const engine::DimInterval& d);
nlohmann::json certificate_json(const engine::Certificate& c);

nlohmann::json analyze_report(const dsl::BuiltGroup& g, const engine::EngineOptions& options = {});
nlohmann::json faithful_report(const dsl::BuiltGroup& g);
nlohmann::json table_report(const dsl::BuiltGroup& g);

// op is one of check, degrees, phimax, dim, faithful. An empty beta means
// one is chosen from the seed.
nlohmann::json covariant_report(const std::string& op, const std::string& file_text,
                                const std::vector<std::uint64_t>& beta, std::uint64_t seed);

nlohmann::json catalog_report(const std::vector<engine::CatalogResult>& results);

// Two-space indented text plus trailing newline; the byte-stable form.
std::string render(const nlohmann::json& j);

}  // namespace covdim::io
