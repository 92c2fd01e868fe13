#pragma once

#include "shadow/braid.hpp"
#include "shadow/diagram.hpp"
#include "shadow/fsl.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace shadow {

inline constexpr int export_schema_version = 1;

// One link as handed to the hyperbolic-geometry harness. See docs/schema.md.
struct ExportRecord {
    std::string name;
    std::string kind;                 // family | braided_link | augmented | surgery | closure
    std::optional<BraidWord> braid;   // what the link was built from
    std::string braid_role;           // closure | monodromy | augmentation_base, empty without braid
    LinkDiagram diagram;
    std::vector<Framing> framings;    // parallel to diagram.components
    int complexity = 0;
    double predicted_volume = 0;      // 0 when no prediction
    int v8_multiple = 0;              // predicted_volume / v8
};

nlohmann::json to_json(const ExportRecord& r);
ExportRecord record_from_json(const nlohmann::json& j);

ExportRecord export_family(char family, int k);
ExportRecord export_bk(int k);  // braided link of b_k
// braided link; volume predicted when b is some b_k
ExportRecord export_braided(const BraidWord& b, const std::string& name = "");
ExportRecord export_augmented(const BraidWord& b, const std::string& name = "");
ExportRecord export_surgery(const BraidWord& b, const std::string& name = "");
ExportRecord export_closure(const BraidWord& b, const std::string& name = "");

nlohmann::json table_links_json();

} // namespace shadow
