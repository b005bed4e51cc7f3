// boxhelly command-line front end. Talks to the engine exclusively through
// the C API in boxhelly.h; CLI11 handles parsing and nlohmann/json the
// csv/text re-rendering of report JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxhelly.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;  // also I/O failures on gen, per contract
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { bh_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct FamilyDeleter {
    void operator()(bh_family* f) const { bh_family_free(f); }
};
using Family = std::unique_ptr<bh_family, FamilyDeleter>;

int fail_usage(const std::string& message) {
    std::cerr << "boxhelly: " << message << "\n";
    return kExitUsage;
}

int check(bh_status status) {
    if (status == BH_OK) return kExitPass;
    std::cerr << "boxhelly: " << bh_status_name(status) << ": " << bh_last_error() << "\n";
    return kExitUsage;
}

// Writes text to stdout or to a file; file problems exit with `io_code`.
int emit(const std::string& text, const std::string& out_path, int io_code) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "boxhelly: cannot write '" << out_path << "'\n";
        return io_code;
    }
    return kExitPass;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return ss.str();
}

std::string scalar_text(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

void flatten(const nlohmann::ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, path, rows);
        } else {
            rows.emplace_back(path, scalar_text(value));
        }
    }
}

std::string render_csv(const nlohmann::ordered_json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) {
        out += csv_cell(k) + "," + csv_cell(v) + "\n";
    }
    return out;
}

std::string render_text(const nlohmann::ordered_json& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    std::string out;
    for (const auto& [key, value] : report.items()) {
        if (key == "edges" && value.is_array()) {
            // intersecting pairs as plain "i j" lines
            out += "edges:\n";
            for (const auto& e : value) {
                out += "  " + e[0].dump() + " " + e[1].dump() + "\n";
            }
            continue;
        }
        rows.clear();
        if (value.is_object()) {
            flatten(value, key, rows);
        } else {
            rows.emplace_back(key, scalar_text(value));
        }
        for (const auto& [k, v] : rows) out += k + ": " + v + "\n";
    }
    return out;
}

// Report JSON straight from the API, or re-rendered per --format.
std::string render(const std::string& json_text, const std::string& format) {
    if (format == "json") return json_text;
    const auto report = nlohmann::ordered_json::parse(json_text);
    return format == "csv" ? render_csv(report) : render_text(report);
}

Family load_family(const std::string& path, int& error) {
    error = kExitPass;
    auto text = read_file(path);
    if (!text) {
        std::cerr << "boxhelly: cannot read '" << path << "'\n";
        error = kExitUsage;
        return nullptr;
    }
    bh_family* raw = nullptr;
    const bh_status status = bh_family_parse_json(text->c_str(), &raw);
    if (status != BH_OK) {
        std::cerr << "boxhelly: " << path << ": " << bh_status_name(status) << ": "
                  << bh_last_error() << "\n";
        error = kExitUsage;
        return nullptr;
    }
    return Family(raw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pair/depth analytics for families of axis-parallel boxes"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    const std::map<std::string, std::string> format_names{
        {"json", "json"}, {"csv", "csv"}, {"text", "text"}};

    // ----- gen -----
    auto* gen = app.add_subcommand("gen", "generate a family file");
    gen->require_subcommand(1);

    long long gen_n = 0, gen_d = 1, gen_k = 1;
    unsigned long long gen_seed = 1;
    std::string gen_extent = "10", gen_side_min = "1", gen_side_max = "5";
    bool gen_closed = false;

    auto* gen_turan = gen->add_subcommand("turan", "slab classes with a complete d-partite graph");
    gen_turan->add_option("--n", gen_n, "number of boxes")->required();
    gen_turan->add_option("--d", gen_d, "dimension")->required();
    gen_turan->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* gen_stair = gen->add_subcommand("staircase", "open intervals (i, i+k)");
    gen_stair->add_option("--n", gen_n, "number of intervals")->required();
    gen_stair->add_option("--k", gen_k, "overlap span")->required();
    gen_stair->add_option("-o,--out", out_path, "output path (default stdout)");

    auto* gen_random = gen->add_subcommand("random", "seeded random boxes on the 2^-20 grid");
    gen_random->add_option("--n", gen_n, "number of boxes")->required();
    gen_random->add_option("--d", gen_d, "dimension")->required();
    gen_random->add_option("--seed", gen_seed, "PRNG seed (default 1)");
    gen_random->add_option("--extent", gen_extent, "centers drawn from [0, extent]");
    gen_random->add_option("--side-min", gen_side_min, "minimum side length");
    gen_random->add_option("--side-max", gen_side_max, "maximum side length");
    gen_random->add_flag("--closed", gen_closed, "closed boundaries instead of open");
    gen_random->add_option("-o,--out", out_path, "output path (default stdout)");

    // ----- analyze -----
    std::string in_path;
    bool with_edges = false;
    auto* analyze = app.add_subcommand("analyze", "pair counts, degrees, max depth with witness");
    analyze->add_option("file", in_path, "family file")->required();
    analyze->add_flag("--edges", with_edges, "include the intersecting-pair list");
    analyze->add_option("--format", format, "json|csv|text")
        ->transform(CLI::CheckedTransformer(format_names));
    analyze->add_option("-o,--out", out_path, "output path (default stdout)");

    // ----- extract -----
    auto* extract = app.add_subcommand("extract", "constructive deep point via per-axis stabbing");
    extract->add_option("file", in_path, "family file")->required();
    extract->add_option("--format", format, "json|csv|text")
        ->transform(CLI::CheckedTransformer(format_names));
    extract->add_option("-o,--out", out_path, "output path (default stdout)");

    // ----- verify -----
    long long verify_k = -1;
    std::string verify_eps;
    auto* verify = app.add_subcommand("verify", "evaluate every bound and check the verdicts");
    verify->add_option("file", in_path, "family file")->required();
    verify->add_option("--k", verify_k, "depth parameter (default: measured depth)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--eps", verify_eps, "epsilon for the subfamily-size verdict (rational)");
    verify->add_option("--format", format, "json|csv|text")
        ->transform(CLI::CheckedTransformer(format_names));
    verify->add_option("-o,--out", out_path, "output path (default stdout)");

    // ----- search -----
    long long search_n = 0, search_k = 0, search_d = 1;
    auto* search = app.add_subcommand("search", "exhaustive extremal search over order types");
    search->add_option("--n", search_n, "family size")->required();
    search->add_option("--k", search_k, "depth cap")->required();
    search->add_option("--d", search_d, "dimension (1, 2 or 3; default 1)");
    search->add_option("--format", format, "json|csv|text")
        ->transform(CLI::CheckedTransformer(format_names));
    search->add_option("-o,--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (gen->parsed()) {
        bh_family* raw = nullptr;
        bh_status status;
        if (gen_turan->parsed()) {
            status = bh_gen_turan(gen_n, gen_d, &raw);
        } else if (gen_stair->parsed()) {
            status = bh_gen_staircase(gen_n, gen_k, &raw);
        } else {
            status = bh_gen_random(gen_n, gen_d, gen_seed, gen_extent.c_str(),
                                   gen_side_min.c_str(), gen_side_max.c_str(),
                                   gen_closed ? 1 : 0, &raw);
        }
        if (status != BH_OK) return check(status);
        Family family(raw);
        char* text = nullptr;
        if (bh_family_to_json(family.get(), &text) != BH_OK) return check(BH_ERR_INTERNAL);
        ApiString owned(text);
        return emit(owned.get(), out_path, kExitVerdictFail);
    }

    if (analyze->parsed() || extract->parsed()) {
        int error = kExitPass;
        Family family = load_family(in_path, error);
        if (!family) return error;
        char* text = nullptr;
        const bh_status status = analyze->parsed()
                                     ? bh_analyze_json(family.get(), with_edges ? 1 : 0, &text)
                                     : bh_extract_json(family.get(), &text);
        if (status != BH_OK) return check(status);
        ApiString owned(text);
        return emit(render(owned.get(), format), out_path, kExitUsage);
    }

    if (verify->parsed()) {
        int error = kExitPass;
        Family family = load_family(in_path, error);
        if (!family) return error;
        char* text = nullptr;
        int any_fail = 0;
        const bh_status status =
            bh_verify_json(family.get(), verify_k,
                           verify_eps.empty() ? nullptr : verify_eps.c_str(), &text, &any_fail);
        if (status != BH_OK) return check(status);
        ApiString owned(text);
        const int emitted = emit(render(owned.get(), format), out_path, kExitUsage);
        if (emitted != kExitPass) return emitted;
        if (any_fail) {
            std::cerr << "boxhelly: THEOREM VERDICT FAIL for '" << in_path
                      << "' -- this family claims a counterexample; inspect it before anything "
                         "else\n";
            return kExitVerdictFail;
        }
        return kExitPass;
    }

    if (search->parsed()) {
        char* text = nullptr;
        const bh_status status = bh_search_json(search_n, search_k, search_d, &text);
        if (status != BH_OK) return check(status);
        ApiString owned(text);
        return emit(render(owned.get(), format), out_path, kExitUsage);
    }

    return fail_usage("no subcommand");
}
