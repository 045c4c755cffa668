#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <ih2/ih2.hpp>

namespace {

using ih2::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string space;
    std::string perversity = "m";
    int degree = -1;
    int subdivide = 0;
    bool json_output = false;
    bool lenient = false;
    bool expect_witt = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ih2::InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_catalog_name(const std::string& name) {
    for (const auto& n : ih2::catalog_names())
        if (n == name) return true;
    return false;
}

ih2::SpaceFile load_space_file(const Options& opt) {
    if (opt.space.empty()) throw ih2::InputError("--space is required");
    ih2::SpaceFile file;
    if (is_catalog_name(opt.space)) {
        file = ih2::catalog_entry(opt.space);
    } else if (std::filesystem::exists(opt.space)) {
        std::vector<std::string> warnings;
        file = ih2::parse_space_file(read_file(opt.space), opt.lenient, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    } else {
        std::string msg = "unknown space '" + opt.space + "': neither a catalog name (";
        for (std::size_t i = 0; i < ih2::catalog_names().size(); ++i)
            msg += (i ? ", " : "") + ih2::catalog_names()[i];
        msg += ") nor an existing file";
        throw ih2::InputError(msg);
    }
    for (int i = 0; i < opt.subdivide; ++i) file = ih2::subdivided_space(file);
    return file;
}

ih2::Space load_space(const Options& opt) { return ih2::realize(load_space_file(opt)); }

ih2::Perversity parse_perversity(const std::string& spec, int ambient_dim) {
    const int max_codim = std::max(1, ambient_dim);
    if (spec == "0" || spec == "zero") return ih2::Perversity::zero(max_codim);
    if (spec == "t" || spec == "total") return ih2::Perversity::total(max_codim);
    if (spec == "m" || spec == "lower_middle") return ih2::Perversity::lower_middle(max_codim);
    if (spec == "n" || spec == "upper_middle") return ih2::Perversity::upper_middle(max_codim);

    std::vector<int> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ih2::InputError("bad perversity entry '" + item +
                                  "'; use 0|t|m|n or a comma list of values for c = 2..a");
        }
    }
    const auto p = ih2::Perversity::from_values(values);
    if (static_cast<int>(values.size()) != std::max(0, ambient_dim - 1))
        throw ih2::InputError("perversity list has " + std::to_string(values.size()) +
                              " values, need " + std::to_string(std::max(0, ambient_dim - 1)) +
                              " (one per codimension 2.." + std::to_string(ambient_dim) + ")");
    return p.restricted(max_codim);
}

std::string rank_list(const std::vector<std::size_t>& ranks) {
    std::string s = "(";
    for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
    return s + ")";
}

std::string size_list(const std::vector<std::size_t>& v) { return rank_list(v); }

void print_report(const json& j, bool json_output, const std::string& text) {
    if (json_output)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto report = ih2::validate_pseudomanifold(s.complex);

    json j;
    j["command"] = "validate";
    j["space"] = s.file.name;
    j["dimension"] = s.complex.dimension();
    j["f_vector"] = s.complex.f_vector();
    j["pure"] = report.is_pure;
    j["kind"] = ih2::to_string(report.kind);
    j["boundary_facets"] = json::array();
    for (const auto& f : report.boundary_facets) j["boundary_facets"].push_back(f.vertices());
    j["offending"] = json::array();
    for (const auto& f : report.offending) j["offending"].push_back(f.vertices());

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    text << "dimension: " << s.complex.dimension() << "\n";
    text << "f-vector: " << size_list(s.complex.f_vector()) << "\n";
    text << "pure: " << (report.is_pure ? "yes" : "no") << "\n";
    text << "kind: " << ih2::to_string(report.kind) << "\n";
    if (!report.boundary_facets.empty()) {
        text << "boundary facets (" << report.boundary_facets.size() << "):";
        for (const auto& f : report.boundary_facets) text << " " << f.to_string();
        text << "\n";
    }
    if (!report.offending.empty()) {
        text << "offending simplices:";
        for (const auto& f : report.offending) text << " " << f.to_string();
        text << "\n";
    }
    print_report(j, opt.json_output, text.str());
    return report.kind == ih2::PseudomanifoldKind::NotPseudomanifold ? kExitCheckFailed
                                                                     : kExitOk;
}

int cmd_homology(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto h = ih2::homology(s.complex);

    json j;
    j["command"] = "homology";
    j["space"] = s.file.name;
    j["coefficients"] = "gf2";
    j["ranks"] = h.ranks;
    j["euler_characteristic"] = s.complex.euler_characteristic();

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    if (opt.degree >= 0) {
        if (opt.degree > s.complex.dimension())
            throw ih2::InputError("--degree " + std::to_string(opt.degree) +
                                  " exceeds dimension " +
                                  std::to_string(s.complex.dimension()));
        text << "H_" << opt.degree << " = " << h.ranks[opt.degree] << "\n";
    } else {
        text << "gf2 homology ranks:\n";
        for (std::size_t i = 0; i < h.ranks.size(); ++i)
            text << "  H_" << i << " = " << h.ranks[i] << "\n";
        text << "euler characteristic: " << s.complex.euler_characteristic() << "\n";
    }
    print_report(j, opt.json_output, text.str());
    return kExitOk;
}

int cmd_ih(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto pm = ih2::validate_pseudomanifold(s.complex);
    if (pm.kind == ih2::PseudomanifoldKind::NotPseudomanifold)
        throw ih2::InputError("intersection homology needs a pseudomanifold; run validate");
    const int a = s.complex.dimension();
    const ih2::Perversity p = parse_perversity(opt.perversity, a);

    const auto omega = ih2::omega_ranks(s.filtered, p);
    std::vector<std::size_t> ih_ranks, h_ranks, image;
    for (const auto& o : omega) {
        ih_ranks.push_back(o.ih_rank);
        h_ranks.push_back(o.h_rank);
        image.push_back(o.image_rank);
    }

    json j;
    j["command"] = "ih";
    j["space"] = s.file.name;
    j["perversity"] = {{"spec", opt.perversity}, {"values", p.values()}};
    j["ih_ranks"] = ih_ranks;
    j["h_ranks"] = h_ranks;
    j["omega_image_ranks"] = image;

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    text << "perversity: " << opt.perversity << " = " << p.to_string() << "\n";
    if (opt.degree >= 0) {
        if (opt.degree > a)
            throw ih2::InputError("--degree " + std::to_string(opt.degree) +
                                  " exceeds dimension " + std::to_string(a));
        text << "IH_" << opt.degree << " = " << ih_ranks[opt.degree] << "\n";
    } else {
        text << "degree  ih  h  omega_image\n";
        for (int i = 0; i <= a; ++i)
            text << "  " << i << "     " << ih_ranks[i] << "   " << h_ranks[i] << "  "
                 << image[i] << "\n";
    }
    print_report(j, opt.json_output, text.str());
    return kExitOk;
}

int cmd_witt(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto report = ih2::witt_check(s.filtered);

    json j;
    j["command"] = "witt";
    j["space"] = s.file.name;
    j["is_witt"] = report.is_witt;
    j["entries"] = json::array();
    for (const auto& e : report.entries)
        j["entries"].push_back({{"skeleton_index", e.skeleton_index},
                                {"component", e.component},
                                {"codimension", e.codimension},
                                {"half", e.half},
                                {"representative", e.representative.vertices()},
                                {"link_f_vector", e.link_f_vector},
                                {"link_rank", e.link_rank},
                                {"ok", e.ok}});

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    if (report.entries.empty())
        text << "no strata of odd codimension; condition holds vacuously\n";
    for (const auto& e : report.entries)
        text << "codim " << e.codimension << " stratum (k=" << e.skeleton_index
             << ") component " << e.component << ": link of "
             << e.representative.to_string() << " has f=" << size_list(e.link_f_vector)
             << ", IH_" << e.half << "^n(link) = " << e.link_rank << "  ["
             << (e.ok ? "ok" : "fail") << "]\n";
    text << "witt: " << (report.is_witt ? "yes" : "no") << "\n";
    print_report(j, opt.json_output, text.str());

    if (opt.expect_witt && !report.is_witt) return kExitCheckFailed;
    return kExitOk;
}

int cmd_duality(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto report = ih2::duality_check(s.filtered);

    json j;
    j["command"] = "duality";
    j["space"] = s.file.name;
    j["lower_middle_ranks"] = report.lower_middle_ranks;
    j["upper_middle_ranks"] = report.upper_middle_ranks;
    j["middle_agreement"] = report.middle_agreement;
    j["rank_symmetric"] = report.rank_symmetric;
    j["pass"] = report.pass;

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    text << "IH^m ranks: " << rank_list(report.lower_middle_ranks) << "\n";
    text << "IH^n ranks: " << rank_list(report.upper_middle_ranks) << "\n";
    text << "middle agreement: " << (report.middle_agreement ? "yes" : "no") << "\n";
    text << "rank symmetry: " << (report.rank_symmetric ? "yes" : "no") << "\n";
    text << "duality: " << (report.pass ? "pass" : "fail") << "\n";
    print_report(j, opt.json_output, text.str());
    return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_sw(const Options& opt) {
    const ih2::Space s = load_space(opt);
    const auto report = ih2::bordism_shadow_report(s.complex);
    const auto sw = ih2::sw_homology_classes(s.complex);

    json j;
    j["command"] = "sw";
    j["space"] = s.file.name;
    j["subdivision_f_vector"] = sw.subdivision.complex.f_vector();
    j["top_sw_number"] = report.top_number;
    j["class_is_cycle"] = report.class_is_cycle;
    j["class_vanishing"] = report.class_vanishing;
    j["obstructed"] = report.obstructed;

    std::ostringstream text;
    text << "space: " << s.file.name << "\n";
    text << "subdivision f-vector: " << size_list(sw.subdivision.complex.f_vector()) << "\n";
    for (std::size_t i = 0; i < report.class_is_cycle.size(); ++i)
        text << "w_" << i << ": cycle=" << (report.class_is_cycle[i] ? "yes" : "no")
             << " vanishes=" << (report.class_vanishing[i] ? "yes" : "no") << "\n";
    text << "top stiefel-whitney number: " << report.top_number << "\n";
    text << (report.obstructed ? "obstructed: cannot bound\n"
                               : "no obstruction found (this does not certify bounding)\n");
    print_report(j, opt.json_output, text.str());
    return kExitOk;
}

int cmd_subdivide(const Options& opt) {
    Options base = opt;
    const int times = std::max(1, opt.subdivide);
    base.subdivide = 0;
    ih2::SpaceFile file = load_space_file(base);
    for (int i = 0; i < times; ++i) file = ih2::subdivided_space(file);
    std::cout << ih2::emit_space_file(file);
    return kExitOk;
}

int cmd_catalog(const Options& opt) {
    if (opt.space.empty()) {
        for (const auto& n : ih2::catalog_names()) std::cout << n << "\n";
        return kExitOk;
    }
    std::cout << ih2::emit_space_file(ih2::catalog_entry(opt.space));
    return kExitOk;
}

// ---------------------------------------------------------------- selftest

struct SelfTest {
    int checks = 0;
    int failures = 0;

    void expect(const std::string& space, const std::string& what, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "  ok   " : "  FAIL ") << space << ": " << what << "\n";
    }

    template <typename T>
    void expect_eq(const std::string& space, const std::string& what, const T& got,
                   const T& want) {
        ++checks;
        const bool ok = got == want;
        if (!ok) ++failures;
        std::cout << (ok ? "  ok   " : "  FAIL ") << space << ": " << what;
        if (!ok) {
            json jg = got, jw = want;
            std::cout << " (got " << jg.dump() << ", want " << jw.dump() << ")";
        }
        std::cout << "\n";
    }
};

int cmd_selftest(const Options&) {
    SelfTest t;
    for (const auto& name : ih2::catalog_names()) {
        const ih2::SpaceFile file = ih2::catalog_entry(name);
        const ih2::Space s = ih2::realize(file);
        const json& expect = file.metadata.at("expect");
        const int a = s.complex.dimension();

        if (expect.contains("kind")) {
            const auto report = ih2::validate_pseudomanifold(s.complex);
            t.expect_eq<std::string>(name, "kind", ih2::to_string(report.kind),
                                     expect["kind"].get<std::string>());
        }
        if (expect.contains("euler"))
            t.expect_eq<long>(name, "euler characteristic",
                              s.complex.euler_characteristic(), expect["euler"].get<long>());
        if (expect.contains("f_vector"))
            t.expect_eq(name, "f-vector", s.complex.f_vector(),
                        expect["f_vector"].get<std::vector<std::size_t>>());
        if (expect.contains("homology"))
            t.expect_eq(name, "gf2 homology ranks", ih2::homology(s.complex).ranks,
                        expect["homology"].get<std::vector<std::size_t>>());
        if (expect.contains("ih"))
            for (const auto& item : expect["ih"].items()) {
                const ih2::Perversity p = parse_perversity(item.key(), a);
                t.expect_eq(name, "ih ranks, perversity " + item.key(),
                            ih2::ih(s.filtered, p).ranks,
                            item.value().get<std::vector<std::size_t>>());
            }
        if (expect.contains("witt")) {
            const auto w = ih2::witt_check(s.filtered);
            t.expect_eq(name, "witt", w.is_witt, expect["witt"].get<bool>());
            if (expect.contains("witt_link_ranks")) {
                std::vector<std::size_t> ranks;
                for (const auto& e : w.entries) ranks.push_back(e.link_rank);
                t.expect_eq(name, "witt link ranks", ranks,
                            expect["witt_link_ranks"].get<std::vector<std::size_t>>());
            }
        }
        if (expect.contains("duality"))
            t.expect_eq(name, "duality pass", ih2::duality_check(s.filtered).pass,
                        expect["duality"].get<bool>());
        if (expect.contains("top_sw_number"))
            t.expect_eq(name, "top stiefel-whitney number", ih2::top_sw_number(s.complex),
                        expect["top_sw_number"].get<int>());
        if (expect.contains("w1_vanishes"))
            t.expect_eq<bool>(name, "w_1 vanishing",
                              ih2::sw_homology_classes(s.complex).vanishing[1],
                              expect["w1_vanishes"].get<bool>());
        if (expect.contains("obstructed"))
            t.expect_eq(name, "bordism obstruction",
                        ih2::bordism_shadow_report(s.complex).obstructed,
                        expect["obstructed"].get<bool>());
        if (expect.contains("zero_perv_allowable_edges"))
            t.expect_eq<std::size_t>(
                name, "allowable edges, zero perversity",
                ih2::allowable_simplices(s.filtered, ih2::Perversity::zero(a), 1).size(),
                expect["zero_perv_allowable_edges"].get<std::size_t>());
        if (expect.contains("zero_perv_ic2_basis"))
            t.expect_eq<std::size_t>(
                name, "ic basis size at degree 2, zero perversity",
                ih2::ic_basis(s.filtered, ih2::Perversity::zero(a), 2).size(),
                expect["zero_perv_ic2_basis"].get<std::size_t>());
        if (expect.contains("omega_m"))
            for (const auto& item : expect["omega_m"].items()) {
                const int degree = std::stoi(item.key());
                const auto o =
                    ih2::omega_rank(s.filtered, ih2::Perversity::lower_middle(a), degree);
                const std::vector<std::size_t> got = {o.ih_rank, o.h_rank, o.image_rank};
                t.expect_eq(name, "omega ranks at degree " + item.key(), got,
                            item.value().get<std::vector<std::size_t>>());
            }
    }
    std::cout << "selftest: " << (t.checks - t.failures) << "/" << t.checks << " checks passed\n";
    return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection homology of filtered simplicial complexes over GF(2)"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd, bool with_perversity = false) {
        cmd->add_option("--space", opt.space, "catalog name or path to a space file");
        cmd->add_option("--subdivide", opt.subdivide,
                        "barycentric subdivisions to apply first");
        cmd->add_flag("--json", opt.json_output, "machine-readable output");
        cmd->add_flag("--lenient", opt.lenient, "warn on unknown file fields instead of failing");
        if (with_perversity) {
            cmd->add_option("--perversity", opt.perversity,
                            "0|t|m|n or comma list of values for c = 2..a");
            cmd->add_option("--degree", opt.degree, "report a single degree");
        }
    };

    auto* validate = app.add_subcommand("validate", "pseudomanifold validation report");
    add_common(validate);
    auto* homology = app.add_subcommand("homology", "gf2 homology ranks");
    add_common(homology, true);
    auto* ihcmd = app.add_subcommand("ih", "intersection homology ranks");
    add_common(ihcmd, true);
    auto* witt = app.add_subcommand("witt", "gf2 witt condition on odd-codimension links");
    add_common(witt);
    witt->add_flag("--expect-witt", opt.expect_witt, "exit 1 when the space is not witt");
    auto* duality = app.add_subcommand("duality", "middle-perversity rank duality check");
    add_common(duality);
    auto* sw = app.add_subcommand("sw", "stiefel-whitney homology data and bordism shadow");
    add_common(sw);
    auto* subdivide = app.add_subcommand("subdivide", "emit the barycentric subdivision");
    add_common(subdivide);
    auto* cat = app.add_subcommand("catalog", "list catalog spaces or emit one");
    cat->add_option("--space", opt.space, "catalog name to emit");
    auto* selftest =
        app.add_subcommand("selftest", "check every catalog entry against its expected values");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (homology->parsed()) return cmd_homology(opt);
        if (ihcmd->parsed()) return cmd_ih(opt);
        if (witt->parsed()) return cmd_witt(opt);
        if (duality->parsed()) return cmd_duality(opt);
        if (sw->parsed()) return cmd_sw(opt);
        if (subdivide->parsed()) return cmd_subdivide(opt);
        if (cat->parsed()) return cmd_catalog(opt);
        if (app.get_subcommand("selftest")->parsed()) return cmd_selftest(opt);
    } catch (const ih2::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
