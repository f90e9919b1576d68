// grskit command line: builds a JSON job spec from flags and streams the
// records produced by the shared library through its C API.
//
// Exit codes: 0 success and all oracles agree, 1 usage or validation error,
// 2 at least one oracle disagreement.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grskit/grskit.h"

namespace {

using nlohmann::json;

struct Options {
    std::string field = "7";
    std::string modulus;
    std::string n;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> r;
    std::string eta;
    std::string points;
    std::string factors;
    std::string source;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 0;
    std::uint64_t samples = 1000;
    std::string family;
    std::string theorem;
    std::string format = "json";
    std::string out;
    std::uint64_t max_work = 100000000ULL;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

json parse_field_spec(const Options& opt) {
    json f;
    auto parts = split(opt.field, '^');
    f["p"] = std::stoull(parts[0]);
    f["m"] = parts.size() > 1 ? std::stoull(parts[1]) : 1;
    if (!opt.modulus.empty()) {
        json mod = json::array();
        for (const auto& tok : split(opt.modulus, ',')) mod.push_back(std::stoull(tok));
        f["modulus"] = mod;
    }
    return f;
}

json index_to_coeffs(std::uint64_t idx, std::uint64_t p, std::uint32_t m) {
    json coeffs = json::array();
    for (std::uint32_t i = 0; i < m; ++i) {
        coeffs.push_back(idx % p);
        idx /= p;
    }
    return coeffs;
}

// One point token: "g" or "g^e" for powers of the canonical primitive
// element, "c0:c1:..." for a coefficient vector, a plain integer for a
// prime-subfield residue.
json parse_element(const std::string& tok, grskit_field* field) {
    if (!tok.empty() && tok[0] == 'g') {
        std::int64_t e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw UsageError("bad element token: " + tok);
            e = std::stoll(tok.substr(2));
        }
        std::uint32_t val = 0;
        if (grskit_pow(field, grskit_field_generator(field), e, &val) != GRSKIT_OK)
            throw UsageError(grskit_last_error());
        return index_to_coeffs(val, grskit_field_characteristic(field),
                               grskit_field_degree(field));
    }
    if (tok.find(':') != std::string::npos) {
        json coeffs = json::array();
        for (const auto& c : split(tok, ':')) coeffs.push_back(std::stoull(c));
        return coeffs;
    }
    return json(std::stoll(tok));
}

json build_jobspec(const std::string& command, const Options& opt, grskit_field* field) {
    json spec;
    spec["command"] = command;
    spec["field"] = parse_field_spec(opt);
    if (!opt.family.empty()) spec["family"] = opt.family;
    if (!opt.theorem.empty()) spec["theorem"] = opt.theorem;
    if (opt.k) spec["k"] = *opt.k;
    if (opt.r) spec["r"] = *opt.r;
    if (!opt.eta.empty()) spec["eta"] = parse_element(opt.eta, field);

    if (!opt.n.empty()) {
        auto parts = split(opt.n, '.');
        if (parts.size() == 3 && parts[1].empty()) { // "a..b"
            spec["n"] = {{"min", std::stoull(parts[0])}, {"max", std::stoull(parts[2])}};
        } else if (parts.size() == 1) {
            spec["n"] = std::stoull(parts[0]);
        } else {
            throw UsageError("bad n range: " + opt.n);
        }
    }

    json source;
    std::string kind = opt.source;
    if (kind.empty()) kind = opt.points.empty() ? "all-subsets" : "explicit";
    source["kind"] = kind;
    if (!opt.points.empty()) {
        json pts = json::array();
        for (const auto& tok : split(opt.points, ',')) pts.push_back(parse_element(tok, field));
        source["points"] = pts;
    }
    if (opt.count > 0) source["count"] = opt.count;
    spec["source"] = source;

    if (!opt.factors.empty()) {
        json factors;
        if (opt.factors == "ones" || opt.factors == "witness") {
            factors["kind"] = opt.factors;
        } else {
            factors["kind"] = "explicit";
            json vals = json::array();
            for (const auto& tok : split(opt.factors, ','))
                vals.push_back(parse_element(tok, field));
            factors["values"] = vals;
        }
        spec["factors"] = factors;
    }

    if (opt.seed) spec["seed"] = *opt.seed;
    spec["samples"] = opt.samples;
    spec["format"] = opt.format;
    spec["max_work"] = opt.max_work;
    return spec;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--field", opt.field, "Field as p or p^m, e.g. 13 or 3^2");
    cmd->add_option("--modulus", opt.modulus, "Modulus coefficients, low to high");
    cmd->add_option("--n", opt.n, "Point count or range a..b");
    cmd->add_option("--k", opt.k, "Code dimension");
    cmd->add_option("--r", opt.r, "Removed-row offset (degree k-r is dropped)");
    cmd->add_option("--eta", opt.eta, "Twist parameter for plus_tgrs");
    cmd->add_option("--points", opt.points, "Comma-separated points (3, 1:2, g^4)");
    cmd->add_option("--factors", opt.factors, "ones, witness, or explicit list");
    cmd->add_option("--source", opt.source,
                    "explicit | all-subsets | cyclic-subgroup | random");
    cmd->add_option("--seed", opt.seed, "Seed for the random source");
    cmd->add_option("--count", opt.count, "Sets per n for the random source");
    cmd->add_option("--samples", opt.samples, "Random factor tuples per impossibility check");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "Write records to this file instead of stdout");
    cmd->add_option("--max-work", opt.max_work, "Enumeration guard (default 1e8)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GRS subcode toolkit: construction, classification, audits"};
    app.require_subcommand(1);

    Options opt;
    auto* classify = app.add_subcommand("classify", "Classify family instances over a grid");
    classify->add_option("--family", opt.family, "Code family")->required();
    auto* audit = app.add_subcommand("audit", "Check a characterization against brute force");
    audit->add_option("theorem", opt.theorem, "Theorem identifier")->required();
    auto* search = app.add_subcommand("search", "Search for self-dual instances");
    search->add_option("--family", opt.family, "Code family")->required();
    auto* dual = app.add_subcommand("dual", "Dual of one instance, closed form when known");
    dual->add_option("--family", opt.family, "sub_grs or sub_egrs");
    auto* tables = app.add_subcommand("tables", "Aggregate classification counts");
    tables->add_option("--family", opt.family, "Code family")->required();
    for (auto* cmd : {classify, audit, search, dual, tables}) add_common_flags(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    grskit_field* field = nullptr;
    std::FILE* sink_file = nullptr;
    int rc = 0;
    try {
        json field_spec = parse_field_spec(opt);
        std::string field_text = field_spec.dump();
        if (grskit_field_from_json(field_text.c_str(), &field) != GRSKIT_OK)
            throw UsageError(grskit_last_error());

        std::string command = app.get_subcommands().front()->get_name();
        json spec = build_jobspec(command, opt, field);

        sink_file = opt.out.empty() ? stdout : std::fopen(opt.out.c_str(), "wb");
        if (!sink_file) throw UsageError("cannot open output file: " + opt.out);

        auto write_line = [](void* user, const char* line) {
            std::fputs(line, static_cast<std::FILE*>(user));
            std::fputc('\n', static_cast<std::FILE*>(user));
        };

        std::uint64_t disagreements = 0;
        std::string spec_text = spec.dump();
        grskit_status status =
            grskit_job_run(spec_text.c_str(), write_line, sink_file, &disagreements);
        if (status != GRSKIT_OK) {
            std::cerr << "error: " << grskit_last_error() << " ("
                      << grskit_status_name(status) << ")\n";
            rc = 1;
        } else if (disagreements > 0) {
            std::cerr << disagreements << " oracle disagreement(s)\n";
            rc = 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }
    if (sink_file && sink_file != stdout) std::fclose(sink_file);
    if (field) grskit_field_destroy(field);
    return rc;
}
