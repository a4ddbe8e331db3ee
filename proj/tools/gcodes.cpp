// gcodes: construct error-correcting graph codes, certify their distances
// with exact combinatorial oracles, and export codewords.
//
// Exit codes: 0 success, 2 usage, 3 precondition, 4 budget, 5 internal.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "graphcodes/concatenation.hpp"
#include "graphcodes/descriptor.hpp"
#include "graphcodes/dualbch.hpp"
#include "graphcodes/errors.hpp"
#include "graphcodes/graph_metric.hpp"
#include "graphcodes/random_codes.hpp"
#include "graphcodes/stczd.hpp"

using namespace graphcodes;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// family builders shared by `construct` and `table`

struct Built {
    GraphCode code;
    std::string family;
    json extra;  // family-specific descriptor fields
};

using ParamMap = std::map<std::string, std::string>;

const std::string& req(const ParamMap& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("missing required parameter: " + key);
    return it->second;
}

std::string opt_param(const ParamMap& kv, const std::string& key, const std::string& dflt) {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
}

int to_int(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return int(v);
    } catch (const std::exception&) {
        throw UsageError("parameter " + key + " is not an integer: " + s);
    }
}

uint64_t to_u64(const std::string& s, const std::string& key) {
    try {
        size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("parameter " + key + " is not a 64-bit integer: " + s);
    }
}

Rational to_rational(const std::string& s, const std::string& key) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError("parameter " + key + " is not a decimal or ratio: " + s);
    }
}

json params_echo(const ParamMap& kv) {
    json j = json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

Built build_family(const ParamMap& kv, uint64_t budget) {
    const std::string family = req(kv, "family");
    const uint64_t seed = to_u64(opt_param(kv, "seed", "0"), "seed");

    if (family == "random") {
        RandomGraphCodeParams p;
        p.n = to_int(req(kv, "n"), "n");
        p.delta = to_rational(req(kv, "delta"), "delta");
        p.seed = seed;
        p.retry_cap = to_int(opt_param(kv, "retries", "64"), "retries");
        p.exact_budget = budget;
        auto r = sample_random_graph_code(p);
        json extra;
        extra["certificate"] = report_json(r.certificate);
        extra["attempts"] = r.attempts;
        extra["transcript"] = r.transcript;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    if (family == "opt") {
        OptSearchParams p;
        p.epsilon = to_rational(req(kv, "eps"), "eps");
        p.n = to_int(req(kv, "n"), "n");
        p.k = to_int(req(kv, "k"), "k");
        p.seed = seed;
        p.exact_budget = budget;
        auto r = search_opt_directed(p);
        json extra;
        extra["certificate"] = report_json(r.certificate);
        extra["attempts"] = r.attempts;
        extra["transcript"] = r.transcript;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    if (family == "stczd-rs" || family == "stczd-rs-explicit" || family == "tensor-rs") {
        const int t = to_int(req(kv, "t"), "t");
        const int n = to_int(req(kv, "n"), "n");
        const int k = to_int(req(kv, "k"), "k");
        const FieldContext ctx(t);
        const Rational claimed(n - k + 1, n);
        if (family == "stczd-rs-explicit") {
            return Built{stczd_rs_explicit(n, k, ctx), family, json::object()};
        }
        const LinearCode rs = rs_generate(n, k, ctx);
        if (family == "tensor-rs") {
            return Built{tensor_code(rs, claimed), family, json::object()};
        }
        GraphCode code = stczd_basis(rs, claimed);
        json extra;
        extra["dimension_lower_bound"] = stczd_dimension_bound(k, n);
        return Built{std::move(code), family, std::move(extra)};
    }
    if (family == "concat-rs") {
        auto r = concat_rs(to_rational(req(kv, "eps"), "eps"), to_int(req(kv, "n"), "n"),
                           to_int(req(kv, "k"), "k"), to_int(req(kv, "N"), "N"),
                           to_rational(req(kv, "rho"), "rho"), seed, budget);
        json extra;
        extra["certified_distance_lower"] = r.certified_distance_lower;
        extra["inner_certificate"] = report_json(r.inner.certificate);
        if (r.outer_certificate) extra["outer_certificate"] = report_json(*r.outer_certificate);
        json layers = json::array();
        for (const auto& l : r.layers) layers.push_back(layer_json(l));
        extra["layers"] = layers;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    if (family == "triple") {
        auto r = triple_concat(to_rational(req(kv, "rho"), "rho"), to_int(req(kv, "N"), "N"), seed,
                               budget);
        json extra;
        extra["layer_sides"] = {r.n1, r.n2, r.n3};
        extra["certified_distance_lower"] = r.certified_distance_lower;
        json layers = json::array();
        for (const auto& l : r.layers) layers.push_back(layer_json(l));
        extra["layers"] = layers;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    if (family == "justesen") {
        auto r = justensen_like(to_rational(req(kv, "eps"), "eps"), to_int(req(kv, "k"), "k"),
                                to_rational(req(kv, "rho"), "rho"), budget);
        json extra;
        extra["inner_distance"] = r.inner_distance;
        extra["inner_dimension"] = r.inner_dimension;
        extra["inner_distance_threshold"] = r.inner_distance_threshold;
        extra["good_fraction"] = r.good_fraction;
        json layers = json::array();
        for (const auto& l : r.layers) layers.push_back(layer_json(l));
        extra["layers"] = layers;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    if (family == "warmup" || family == "dualbch") {
        const int t = to_int(req(kv, "t"), "t");
        const int d = family == "warmup" ? 3 : to_int(req(kv, "d"), "d");
        auto r = dualbch_basis(FieldContext(t), d);
        json extra;
        extra["nominal_dimension"] = r.nominal_dimension;
        extra["index_field"] = r.field.to_string();
        extra["d"] = r.d;
        return Built{std::move(r.code), family, std::move(extra)};
    }
    throw UsageError("unknown family: " + family);
}

ParamMap parse_row_spec(const std::string& spec) {
    ParamMap kv;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("row item is not key=value: " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (kv.find("family") == kv.end()) throw UsageError("row spec needs family=...: " + spec);
    return kv;
}

// ---------------------------------------------------------------------------
// commands

int cmd_construct(const ParamMap& kv, const std::string& out_dir, const std::string& name,
                  uint64_t budget) {
    Built built = build_family(kv, budget);
    const std::string base = name.empty() ? built.family : name;
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    const std::string basis_name = base + ".basis";
    {
        std::ofstream bf(dir / basis_name, std::ios::binary);
        if (!bf) throw std::runtime_error("cannot write basis file");
        write_basis_file(bf, built.code.basis());
    }
    json desc = code_descriptor(built.family, params_echo(kv), built.code, basis_name);
    for (auto& [k, v] : built.extra.items()) desc[k] = v;
    {
        std::ofstream df(dir / (base + ".json"), std::ios::binary);
        if (!df) throw std::runtime_error("cannot write descriptor");
        df << desc.dump(2) << "\n";
    }
    std::cout << "constructed family=" << built.family << " n=" << built.code.n()
              << " dimension=" << built.code.dimension()
              << " dimension_bits=" << built.code.dimension_bits() << " descriptor="
              << (dir / (base + ".json")).string() << "\n";
    return 0;
}

int cmd_distance(const std::string& descriptor_path, const std::string& mode,
                 const std::string& metric, uint64_t budget, uint64_t samples, uint64_t seed,
                 const std::string& out_path) {
    std::ifstream in(descriptor_path);
    if (!in) throw std::invalid_argument("cannot open descriptor: " + descriptor_path);
    json desc = json::parse(in);
    GraphCode code = load_code(desc, fs::path(descriptor_path).parent_path());

    CodeDistanceOptions opt;
    if (mode == "exact") {
        opt.mode = CodeDistanceOptions::Mode::Exact;
    } else if (mode == "sample") {
        opt.mode = CodeDistanceOptions::Mode::Sampled;
    } else {
        throw UsageError("mode must be exact or sample");
    }
    opt.exact_budget = budget;
    opt.samples = samples;
    opt.seed = seed;
    if (metric == "graph") {
        opt.metric = Metric::Graph;
    } else if (metric == "directed") {
        opt.metric = Metric::DirectedGraph;
    } else if (!metric.empty()) {
        throw UsageError("metric must be graph or directed");
    }

    const DistanceReport rep = code_distance(code, opt);
    json out = report_json(rep);
    out["descriptor"] = descriptor_path;
    const Metric used = opt.metric.value_or(code.directed() ? Metric::DirectedGraph : Metric::Graph);
    if (code.symmetric_zero_diag() && rep.exact() && used == Metric::Graph) {
        out["singleton_check"] = singleton_check(code, rep);
    }
    const std::string path = out_path.empty() ? descriptor_path + ".report.json" : out_path;
    std::ofstream of(path, std::ios::binary);
    if (!of) throw std::runtime_error("cannot write report");
    of << out.dump(2) << "\n";
    std::cout << (rep.exact() ? "exact distance=" : "sampled upper bound=") << rep.value
              << " report=" << path << "\n";
    return 0;
}

int cmd_table(const std::vector<std::string>& rows, uint64_t budget, uint64_t samples,
              uint64_t seed, const std::string& csv_path) {
    std::ostringstream csv;
    csv << "family,params,n,dimension,dimension_bits,rate,certified_distance,mode,"
           "claimed_relative_distance,singleton\n";
    std::cout << "family             params                     n    dim  bits  rate"
              << "      distance          claimed  singleton\n";
    for (const auto& spec : rows) {
        const ParamMap kv = parse_row_spec(spec);
        Built built = build_family(kv, budget);
        CodeDistanceOptions opt;
        opt.exact_budget = budget;
        opt.samples = samples;
        opt.seed = seed;
        const DistanceReport rep = code_distance(built.code, opt);
        std::string singleton = "-";
        if (built.code.symmetric_zero_diag() && rep.exact() && !built.code.directed()) {
            singleton = singleton_check(built.code, rep) ? "pass" : "FAIL";
        }
        const std::string claimed = built.code.claimed_relative_distance()
                                        ? built.code.claimed_relative_distance()->to_string()
                                        : "-";
        std::string params;
        for (const auto& [k, v] : kv) {
            if (k == "family") continue;
            if (!params.empty()) params += " ";
            params += k + "=" + v;
        }
        std::ostringstream line;
        line << built.family;
        for (size_t i = built.family.size(); i < 19; ++i) line << ' ';
        line << params;
        for (size_t i = params.size(); i < 27; ++i) line << ' ';
        line << built.code.n() << "  " << built.code.dimension() << "  "
             << built.code.dimension_bits() << "  " << built.code.rate() << "  "
             << (rep.exact() ? "=" : "<=") << rep.value << " ("
             << (rep.exact() ? "exact" : "sampled") << ")  " << claimed << "  " << singleton;
        std::cout << line.str() << "\n";
        csv << built.family << ",\"" << params << "\"," << built.code.n() << ","
            << built.code.dimension() << "," << built.code.dimension_bits() << ","
            << built.code.rate() << "," << rep.value << "," << (rep.exact() ? "exact" : "sampled")
            << "," << claimed << "," << singleton << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream of(csv_path, std::ios::binary);
        if (!of) throw std::runtime_error("cannot write CSV");
        of << csv.str();
    }
    return 0;
}

int cmd_export(const std::string& descriptor_path, const std::string& coeffs_str, int64_t index,
               const std::string& format, const std::string& out_path) {
    std::ifstream in(descriptor_path);
    if (!in) throw std::invalid_argument("cannot open descriptor: " + descriptor_path);
    json desc = json::parse(in);
    GraphCode code = load_code(desc, fs::path(descriptor_path).parent_path());

    std::vector<uint32_t> coeffs(code.dimension(), 0);
    if (!coeffs_str.empty()) {
        std::stringstream ss(coeffs_str);
        std::string tok;
        size_t i = 0;
        while (std::getline(ss, tok, ',')) {
            if (i >= coeffs.size()) throw std::invalid_argument("coefficient vector too long");
            coeffs[i++] = parse_element_hex(tok, code.scalar());
        }
        if (i != coeffs.size()) throw std::invalid_argument("coefficient vector too short");
    } else if (index >= 0) {
        const uint64_t q = code.scalar().order();
        uint64_t v = uint64_t(index);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = uint32_t(v % q);
            v /= q;
        }
        if (v != 0) throw std::invalid_argument("codeword index out of range");
    } else {
        throw UsageError("export needs --coeffs or --index");
    }

    const MatrixWord w = code.codeword(coeffs);
    std::ofstream of(out_path, std::ios::binary);
    if (!of) throw std::runtime_error("cannot write output file");
    if (format == "matrix") {
        write_matrix_word(of, w);
    } else if (format == "edges") {
        write_edge_list(of, w);
    } else {
        throw UsageError("format must be matrix or edges");
    }
    std::cout << "exported " << format << " to " << out_path << "\n";
    return 0;
}

int cmd_weil(const std::vector<int>& ts, const std::vector<int>& degrees, const std::string& mode,
             uint64_t samples, uint64_t seed, const std::string& csv_path, int threads) {
    std::ostringstream csv;
    csv << "t,degree,mode,count,max_abs_sum,bound,pass\n";
    std::cout << "t  degree  mode        count         max|sum|  bound      pass\n";
    bool all_pass = true;
    for (int t : ts) {
        FieldContext ctx(t);
        for (int e : degrees) {
            bool exhaustive = mode == "exhaustive";
            if (mode == "auto") {
                uint64_t combos = 1;
                bool fits = t <= 6;
                for (int i = 1; i < e && fits; ++i) {
                    combos *= ctx.order();
                    fits = combos <= (uint64_t(1) << 30);
                }
                exhaustive = fits;
            } else if (mode != "exhaustive" && mode != "sample") {
                throw UsageError("weil mode must be auto, exhaustive or sample");
            }
            const WeilClassResult r = exhaustive ? weil_scan_exhaustive(ctx, e, threads)
                                                 : weil_scan_sampled(ctx, e, samples, seed);
            all_pass = all_pass && r.pass();
            std::cout << t << "  " << e << "       " << (r.exhaustive ? "exhaustive" : "sampled   ")
                      << "  " << r.count << "  " << r.max_abs << "  " << r.bound << "  "
                      << (r.pass() ? "pass" : "FAIL") << "\n";
            csv << t << "," << e << "," << (r.exhaustive ? "exhaustive" : "sampled") << ","
                << r.count << "," << r.max_abs << "," << r.bound << ","
                << (r.pass() ? "pass" : "FAIL") << "\n";
        }
    }
    if (!csv_path.empty()) {
        std::ofstream of(csv_path, std::ios::binary);
        if (!of) throw std::runtime_error("cannot write CSV");
        of << csv.str();
    }
    return all_pass ? 0 : 5;
}

int cmd_selftest() {
    const auto ok = [](const std::string& name) { std::cout << "selftest: " << name << " ok\n"; };

    for (int t = 1; t <= 6; ++t) {
        FieldContext f(t);
        for (uint32_t a = 1; a < f.order(); ++a) {
            if (f.mul(a, f.inv(a)) != 1) throw std::runtime_error("field inverse failed");
        }
    }
    ok("field arithmetic");

    {
        FieldContext f4(2);
        if (hamming_min_distance(rs_generate(4, 2, f4)).value != 3) {
            throw std::runtime_error("RS distance failed");
        }
    }
    ok("reed-solomon distance");

    {
        LinearCode even(FieldContext::binary(), 3, 2, {1, 1, 0, 0, 1, 1});
        GraphCode code = stczd_basis(even);
        CodeDistanceOptions opt;
        opt.metric = Metric::DirectedGraph;
        if (code.dimension() != 1 || code_distance(code, opt).value != 2) {
            throw std::runtime_error("stczd distance failed");
        }
    }
    ok("stczd distance theorem (toy)");

    {
        FieldContext f8(3);
        if (!weil_scan_exhaustive(f8, 3).pass()) throw std::runtime_error("weil scan failed");
    }
    ok("weil bound (t=3, e=3)");

    {
        auto r = justensen_like(Rational(1, 4), 3, Rational(1, 2));
        if (r.inner_distance.size() != 7) throw std::runtime_error("justesen ensemble failed");
    }
    ok("justesen machinery (k=3)");

    std::cout << "selftest: all ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error-correcting graph codes: constructions and exact certification"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    app.add_option("--threads", threads, "worker cap for parallel phases")->check(CLI::Range(1, 256));

    // construct
    auto* construct = app.add_subcommand("construct", "build a code family, write descriptor + basis");
    std::string family, out_dir = ".", name;
    std::map<std::string, std::string> flat;
    construct
        ->add_option("--family", family,
                     "random|opt|stczd-rs|stczd-rs-explicit|tensor-rs|concat-rs|triple|justesen|"
                     "warmup|dualbch")
        ->required();
    for (const char* p : {"n", "k", "N", "t", "d", "eps", "rho", "delta", "seed", "retries"}) {
        construct->add_option(std::string("--") + p, flat[p]);
    }
    construct->add_option("--out", out_dir, "output directory");
    construct->add_option("--name", name, "basename for descriptor/basis files");
    uint64_t budget = uint64_t(1) << 22;
    construct->add_option("--budget", budget, "exact enumeration budget (codewords)");

    // distance
    auto* distance = app.add_subcommand("distance", "certify a constructed code's distance");
    std::string desc_path, mode = "exact", metric, report_out;
    uint64_t samples = 1024, seed = 0, dbudget = uint64_t(1) << 22;
    distance->add_option("--descriptor", desc_path)->required();
    distance->add_option("--mode", mode, "exact|sample");
    distance->add_option("--metric", metric, "graph|directed (default: the code's own)");
    distance->add_option("--budget", dbudget);
    distance->add_option("--samples", samples);
    distance->add_option("--seed", seed);
    distance->add_option("--out", report_out);

    // table
    auto* table = app.add_subcommand("table", "rate/distance table over construction rows");
    std::vector<std::string> rows;
    std::string csv_path;
    uint64_t tbudget = uint64_t(1) << 22, tsamples = 1024, tseed = 0;
    table->add_option("--row", rows, "family=...,k=v,... (repeatable)");
    table->add_option("--csv", csv_path, "also write CSV here");
    table->add_option("--budget", tbudget);
    table->add_option("--samples", tsamples);
    table->add_option("--seed", tseed);

    // export
    auto* exp = app.add_subcommand("export", "write one codeword as matrix or edge list");
    std::string exp_desc, coeffs, exp_format = "matrix", exp_out;
    int64_t exp_index = -1;
    exp->add_option("--descriptor", exp_desc)->required();
    exp->add_option("--coeffs", coeffs, "comma-separated hex coefficients over the scalar field");
    exp->add_option("--index", exp_index, "codeword index (base-q digits, little endian)");
    exp->add_option("--format", exp_format, "matrix|edges");
    exp->add_option("--out", exp_out)->required();

    // weil
    auto* weil = app.add_subcommand("weil", "character-sum bound table");
    std::vector<int> wts{4, 5, 6};
    std::vector<int> wdegrees{3, 5, 7};
    std::string wmode = "auto", wcsv;
    uint64_t wsamples = 10000, wseed = 0;
    weil->add_option("--t", wts, "extension degrees (repeatable)");
    weil->add_option("--degree", wdegrees, "odd degrees (repeatable)");
    weil->add_option("--mode", wmode, "auto|exhaustive|sample");
    weil->add_option("--samples", wsamples);
    weil->add_option("--seed", wseed);
    weil->add_option("--csv", wcsv);

    auto* selftest = app.add_subcommand("selftest", "fast internal consistency battery");

    try {
        app.parse(argc, argv);

        if (construct->parsed()) {
            ParamMap kv;
            kv["family"] = family;
            for (const auto& [k, v] : flat) {
                if (!v.empty()) kv[k] = v;
            }
            return cmd_construct(kv, out_dir, name, budget);
        }
        if (distance->parsed()) {
            return cmd_distance(desc_path, mode, metric, dbudget, samples, seed, report_out);
        }
        if (table->parsed()) return cmd_table(rows, tbudget, tsamples, tseed, csv_path);
        if (exp->parsed()) return cmd_export(exp_desc, coeffs, exp_index, exp_format, exp_out);
        if (weil->parsed()) return cmd_weil(wts, wdegrees, wmode, wsamples, wseed, wcsv, threads);
        if (selftest->parsed()) return cmd_selftest();
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error: category=usage " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: category=usage " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: category=precondition " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: category=precondition " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "error: category=budget " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: category=internal " << e.what() << "\n";
        return 5;
    }
}
