#include "shadow/export.hpp"

#include "shadow/errors.hpp"

namespace shadow {

using nlohmann::json;

namespace {

Framing framing_from(const std::string& s) {
    if (s == "zero") return Framing::zero;
    if (s == "drilled") return Framing::drilled;
    if (s == "plain") return Framing::plain;
    throw DomainError("unknown framing '" + s + "'");
}

ExportRecord drilled(std::string name, std::string kind, LinkDiagram d) {
    ExportRecord r;
    r.name = std::move(name);
    r.kind = std::move(kind);
    r.framings.assign(d.components.size(), Framing::drilled);
    r.diagram = std::move(d);
    return r;
}

void predict(ExportRecord& r, int k) {
    r.complexity = k;
    r.v8_multiple = 2 * k;
    r.predicted_volume = 2 * k * v8();
}

} // namespace

json to_json(const ExportRecord& r) {
    json j;
    j["schema_version"] = export_schema_version;
    j["name"] = r.name;
    j["kind"] = r.kind;
    j["braid"] = r.braid ? json(to_string(*r.braid)) : json(nullptr);
    j["braid_role"] = r.braid ? json(r.braid_role) : json(nullptr);
    json pd = json::array(), signs = json::array();
    for (const auto& x : r.diagram.crossings) {
        pd.push_back({x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]});
        signs.push_back(x.sign);
    }
    j["pd"] = pd;
    j["signs"] = signs;
    json comps = json::array();
    for (const auto& c : r.diagram.components) comps.push_back({{"label", c.label}, {"arcs", c.arcs}});
    j["components"] = comps;
    json fr = json::array();
    for (Framing f : r.framings) fr.push_back(to_string(f));
    j["framings"] = fr;
    j["pd_text"] = to_pd_text(r.diagram);
    j["crossings"] = r.diagram.crossing_count();
    j["complexity"] = r.complexity;
    j["predicted_volume"] = r.predicted_volume;
    j["v8_multiple"] = r.v8_multiple;
    return j;
}

ExportRecord record_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != export_schema_version)
        throw DomainError("unsupported schema version " + j.at("schema_version").dump());
    ExportRecord r;
    r.name = j.at("name").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    if (!j.at("braid").is_null()) {
        r.braid = parse_braid(j.at("braid").get<std::string>());
        r.braid_role = j.at("braid_role").get<std::string>();
    }
    const auto& pd = j.at("pd");
    const auto& signs = j.at("signs");
    if (pd.size() != signs.size()) throw DomainError("pd and signs differ in length");
    for (std::size_t i = 0; i < pd.size(); ++i) {
        PDCrossing x;
        for (int s = 0; s < 4; ++s) x.arcs[s] = pd[i].at(s).get<int>();
        x.sign = signs[i].get<int>();
        r.diagram.crossings.push_back(x);
    }
    for (const auto& c : j.at("components"))
        r.diagram.components.push_back({c.at("label").get<std::string>(), c.at("arcs").get<std::vector<int>>()});
    for (const auto& f : j.at("framings")) r.framings.push_back(framing_from(f.get<std::string>()));
    if (r.framings.size() != r.diagram.components.size())
        throw DomainError("one framing per component expected");
    r.complexity = j.at("complexity").get<int>();
    r.predicted_volume = j.at("predicted_volume").get<double>();
    r.v8_multiple = j.at("v8_multiple").get<int>();
    return r;
}

ExportRecord export_family(char family, int k) {
    FamilyLink f = make_family(family, k);
    ExportRecord r = drilled(std::string(1, family) + std::to_string(k), "family", std::move(f.diagram));
    predict(r, k);
    return r;
}

ExportRecord export_bk(int k) { return export_braided(make_bk(k), "b" + std::to_string(k)); }

ExportRecord export_braided(const BraidWord& b, const std::string& name) {
    ExportRecord r = drilled(name.empty() ? "braided " + to_string(b) : name, "braided_link", braided_link(b));
    r.braid = b;
    r.braid_role = "monodromy";
    for (int k = 1; k <= 12; ++k)
        if (make_bk(k) == b) predict(r, k);
    return r;
}

ExportRecord export_augmented(const BraidWord& b, const std::string& name) {
    AugmentedLink a = augment_to_fsl(b);
    ExportRecord r = drilled(name.empty() ? "fsl " + to_string(b) : name, "augmented", std::move(a.diagram));
    r.braid = b;
    r.braid_role = "augmentation_base";
    predict(r, a.complexity);
    return r;
}

ExportRecord export_surgery(const BraidWord& b, const std::string& name) {
    SurgeryPresentation s = fsl_surgery_presentation(b);
    ExportRecord r;
    r.name = name.empty() ? "surgery " + to_string(b) : name;
    r.kind = "surgery";
    r.diagram = std::move(s.diagram);
    r.framings = s.framing;
    r.braid = b;
    r.braid_role = "augmentation_base";
    predict(r, s.complexity);
    return r;
}

ExportRecord export_closure(const BraidWord& b, const std::string& name) {
    ExportRecord r = drilled(name.empty() ? to_string(b) : name, "closure", closure_diagram(b));
    r.braid = b;
    r.braid_role = "closure";
    return r;
}

json table_links_json() {
    TableLinksCatalog c = catalog_table_links();
    json j;
    j["schema_version"] = export_schema_version;
    j["kind"] = "table_links";
    j["rows"] = c.rows;
    j["theorem_links"] = c.theorem_links;
    j["family_match"] = c.family_match;
    j["complexity_two"] = c.complexity_two;
    j["unresolved"] = c.unresolved;
    j["v8"] = v8_digits(30);
    json reps = json::object();
    for (const auto& [row, fam] : c.family_match) reps[row] = to_json(export_family(fam[0], std::stoi(fam.substr(1))));
    j["representatives"] = reps;
    return j;
}

} // namespace shadow
