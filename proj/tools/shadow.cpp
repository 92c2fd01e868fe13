#include "shadow/braid.hpp"
#include "shadow/errors.hpp"
#include "shadow/export.hpp"
#include "shadow/fsl.hpp"
#include "shadow/tqft.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace shadow;

namespace {

struct Config {
    int precision_bits = 128;
    int r_min = 5, r_max = 31;
    std::string format = "tsv";
    std::string out_dir;
    std::uint64_t seed = 20240611;
};

int to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw DomainError("expected an integer for " + what + ", got '" + s + "'");
    return v;
}

// what a spec names: a braid, or a link family member
struct Target {
    std::optional<BraidWord> braid;
    std::optional<ExportRecord> record;
    std::string name;
};

Target resolve(const std::vector<std::string>& spec, const Config& cfg) {
    if (spec.empty()) throw DomainError("empty spec");
    const std::string& head = spec[0];
    auto arg = [&](std::size_t i, const std::string& what) {
        if (spec.size() <= i) throw DomainError("missing " + what + " after '" + head + "'");
        return to_int(spec[i], what);
    };
    auto arity = [&](std::size_t n) {
        if (spec.size() != n) throw DomainError("'" + head + "' takes " + std::to_string(n - 1) + " argument(s)");
    };
    Target t;
    if (head == "K" || head == "J" || head == "L" ||
        (head.size() > 1 && std::string("KJL").find(head[0]) != std::string::npos &&
         std::isdigit(static_cast<unsigned char>(head[1])))) {
        int k = head.size() > 1 ? to_int(head.substr(1), "k") : arg(1, "k");
        arity(head.size() > 1 ? 1 : 2);
        t.record = export_family(head[0], k);
        t.name = t.record->name;
    } else if (head == "bk") {
        int k = arg(1, "k");
        arity(2);
        t.braid = make_bk(k);
        t.name = "b" + std::to_string(k);
    } else if (head == "omega") {
        int m = arg(1, "m");
        arity(2);
        t.braid = make_omega(m);
        t.name = "omega" + std::to_string(m);
    } else if (head == "Lnm") {
        int n = arg(1, "n"), m = arg(2, "m");
        arity(3);
        t.braid = make_Lnm(n, m);
        t.name = "L" + std::to_string(n) + "," + std::to_string(m);
    } else if (head == "table-mon") {
        if (spec.size() != 2) throw DomainError("table-mon takes a name");
        auto names = named_constant_braids();
        auto it = names.find(spec[1]);
        if (it == names.end()) throw DomainError("unknown table-mon name '" + spec[1] + "'");
        t.braid = it->second;
        t.name = spec[1];
    } else if (head == "random") {
        int n = arg(1, "strands"), len = arg(2, "length");
        arity(3);
        if (n < 2 || len < n - 1) throw DomainError("random needs at least 2 strands and length >= strands-1");
        std::mt19937_64 rng(cfg.seed);
        std::vector<int> w;
        for (int i = 1; i < n; ++i) w.push_back(i);
        std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
        while (static_cast<int>(w.size()) < len) w.push_back(gen(rng));
        std::shuffle(w.begin(), w.end(), rng);
        for (int& e : w)
            if (sgn(rng)) e = -e;
        t.braid = BraidWord(n, w);
        t.name = "random";
    } else {
        // literal braid, either "braid TEXT" or the text itself
        std::size_t from = head == "braid" ? 1 : 0;
        if (from == spec.size()) throw DomainError("braid needs its text");
        std::string text;
        for (std::size_t i = from; i < spec.size(); ++i) text += (i > from ? " " : "") + spec[i];
        t.braid = parse_braid(text);
        t.name = to_string(*t.braid);
    }
    return t;
}

std::string file_stem(const std::string& name) {
    std::string s;
    for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
    return s;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << text;
    if (!f) throw std::runtime_error("write failed for " + p.string());
}

std::string volume_text(const ExportRecord& r) {
    if (r.v8_multiple == 0) return "-";
    std::ostringstream os;
    os.precision(12);
    os << r.predicted_volume << " (" << r.v8_multiple << " v8)";
    return os.str();
}

int cmd_gen(const std::vector<std::string>& spec, bool augment, bool surgery, bool braided, const Config& cfg) {
    Target t = resolve(spec, cfg);
    ExportRecord rec;
    if (t.record) {
        if (augment || surgery || braided) throw DomainError("--augment/--surgery/--braided need a braid spec");
        rec = *t.record;
    } else if (augment) {
        rec = export_augmented(*t.braid, "fsl " + t.name);
    } else if (surgery) {
        rec = export_surgery(*t.braid, "surgery " + t.name);
    } else if (spec[0] == "bk" || braided) {
        rec = export_braided(*t.braid, spec[0] == "bk" ? t.name : "braided " + t.name);
    } else {
        rec = export_closure(*t.braid, t.name);
    }

    if (!cfg.out_dir.empty()) {
        fs::create_directories(cfg.out_dir);
        std::string stem = file_stem(rec.name);
        if (rec.braid) write_file(fs::path(cfg.out_dir) / (stem + ".braid"), to_string(*rec.braid) + "\n");
        write_file(fs::path(cfg.out_dir) / (stem + ".pd"), to_pd_text(rec.diagram));
        write_file(fs::path(cfg.out_dir) / (stem + ".json"), to_json(rec).dump(2) + "\n");
    }

    if (cfg.format == "json") {
        std::cout << to_json(rec).dump(2) << "\n";
        return 0;
    }
    if (t.braid) std::cout << to_string(*t.braid) << "\n";
    std::cout << "name\t" << rec.name << "\n"
              << "kind\t" << rec.kind << "\n"
              << "crossings\t" << rec.diagram.crossing_count() << "\n"
              << "components\t" << rec.diagram.component_count() << "\n"
              << "k\t" << (rec.v8_multiple ? std::to_string(rec.complexity) : "-") << "\n"
              << "predicted_volume\t" << volume_text(rec) << "\n";
    return 0;
}

std::string real_text(const tqft::Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

int cmd_tv(const std::vector<std::string>& spec, const Config& cfg) {
    Target t = resolve(spec, cfg);
    if (!t.braid) throw DomainError("tv needs a braid spec");
    if (cfg.r_min % 2 == 0 || cfg.r_max % 2 == 0) throw DomainError("r range endpoints must be odd");
    if (cfg.r_min < 3 || cfg.r_max < cfg.r_min) throw DomainError("need 3 <= r-min <= r-max");
    if (cfg.precision_bits < 53) throw DomainError("precision must be at least 53 bits");
    std::vector<int> rs;
    for (int r = cfg.r_min; r <= cfg.r_max; r += 2) rs.push_back(r);
    tqft::TVSeries s = tqft::slope_series(*t.braid, rs, cfg.precision_bits);

    const int digits = 20;
    auto target = s.target ? real_text(*s.target, 12) : std::string("-");
    if (cfg.format == "json") {
        json j;
        j["braid"] = to_string(*t.braid);
        j["precision_bits"] = cfg.precision_bits;
        j["target"] = s.target ? json(target) : json(nullptr);
        j["tail_min"] = s.tail_min ? json(real_text(*s.tail_min, 15)) : json(nullptr);
        json rows = json::array();
        for (const auto& row : s.rows)
            rows.push_back({{"r", row.r},
                            {"tv", real_text(row.tv, digits)},
                            {"slope", row.slope ? json(real_text(*row.slope, 15)) : json(nullptr)},
                            {"target", s.target ? json(target) : json(nullptr)}});
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "r\ttv\tslope\ttarget\n";
    for (const auto& row : s.rows)
        std::cout << row.r << '\t' << real_text(row.tv, digits) << '\t'
                  << (row.slope ? real_text(*row.slope, 15) : std::string("-")) << '\t' << target << "\n";
    return 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_export_verify(const std::string& families, int k_max, int bk_max, bool table_links, const Config& cfg) {
    fs::path dir = cfg.out_dir.empty() ? fs::path("verify_bundle") : fs::path(cfg.out_dir);
    std::vector<ExportRecord> recs;
    for (const auto& f : split_list(families)) {
        if (f.size() != 1 || std::string("LJK").find(f[0]) == std::string::npos)
            throw DomainError("unknown family '" + f + "'");
        for (int k = 1; k <= k_max; ++k) recs.push_back(export_family(f[0], k));
    }
    for (int k = 1; k <= bk_max; ++k) recs.push_back(export_bk(k));
    if (recs.empty() && !table_links) throw DomainError("nothing to export");

    fs::create_directories(dir);
    for (const auto& r : recs) {
        fs::path p = dir / (file_stem(r.name) + ".json");
        write_file(p, to_json(r).dump(2) + "\n");
        std::cout << p.string() << "\n";
    }
    if (table_links) {
        fs::path p = dir / "table_links.json";
        write_file(p, table_links_json().dump(2) + "\n");
        std::cout << p.string() << "\n";
    }
    return 0;
}

void print_error(const std::string& kind, const std::string& message, std::optional<std::size_t> pos = {}) {
    json j{{"error", kind}, {"message", message}};
    if (pos) j["position"] = *pos;
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shadow: fibered shadow links, braid families and SO(3) Turaev-Viro values"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized specs")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    std::vector<std::string> gen_spec;
    bool augment = false, surgery = false, braided = false;
    auto* gen = app.add_subcommand("gen", "generate a link or braid and print its counts");
    gen->add_option("spec", gen_spec, "K k | J k | L k | bk k | omega m | Lnm n m | table-mon NAME | random n len | braid TEXT")
        ->required()
        ->expected(1, -1);
    gen->add_flag("--augment", augment, "augment the braid to a fibered shadow link");
    gen->add_flag("--surgery", surgery, "surgery presentation with region circles");
    gen->add_flag("--braided", braided, "braided link (closure plus axis)");
    gen->add_option("--out", cfg.out_dir, "write .braid/.pd/.json files here");

    std::vector<std::string> tv_spec;
    auto* tv = app.add_subcommand("tv", "Turaev-Viro values of the braided link over odd r");
    tv->add_option("spec", tv_spec, "braid spec, as for gen")->required()->expected(1, -1);
    tv->add_option("--r-min", cfg.r_min)->capture_default_str();
    tv->add_option("--r-max", cfg.r_max)->capture_default_str();
    tv->add_option("--precision-bits", cfg.precision_bits)->capture_default_str();

    auto* ex = app.add_subcommand("export", "export JSON bundles");
    ex->require_subcommand(1);
    auto* ver = ex->add_subcommand("verify", "bundle for the hyperbolic-geometry harness");
    std::string families;
    int k_max = 3, bk_max = 0;
    bool table_links = false;
    ver->add_option("--families", families, "comma separated subset of L,J,K");
    ver->add_option("--k-max", k_max)->capture_default_str();
    ver->add_option("--bk-max", bk_max)->capture_default_str();
    ver->add_flag("--table-links", table_links);
    ver->add_option("--out", cfg.out_dir, "bundle directory (default verify_bundle)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        print_error("UsageError", e.what());
        return 2;
    }

    try {
        if (*gen) return cmd_gen(gen_spec, augment, surgery, braided, cfg);
        if (*tv) return cmd_tv(tv_spec, cfg);
        if (*ver) return cmd_export_verify(families, k_max, bk_max, table_links, cfg);
    } catch (const ParseError& e) {
        print_error(e.kind(), e.what(), e.pos);
        return 1;
    } catch (const Error& e) {
        print_error(e.kind(), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("IOError", e.what());
        return 1;
    }
    return 1;
}
