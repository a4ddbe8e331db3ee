#include "graphcodes/descriptor.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace graphcodes {

using nlohmann::json;

void write_basis_file(std::ostream& os, const std::vector<MatrixWord>& basis) {
    os << "count=" << basis.size() << "\n";
    for (const auto& w : basis) write_matrix_word(os, w);
}

std::vector<MatrixWord> read_basis_file(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("missing basis file header");
    size_t count = 0;
    if (std::sscanf(header.c_str(), "count=%zu", &count) != 1) {
        throw std::invalid_argument("bad basis file header: " + header);
    }
    std::vector<MatrixWord> basis;
    basis.reserve(count);
    for (size_t i = 0; i < count; ++i) basis.push_back(read_matrix_word(is));
    return basis;
}

json code_descriptor(const std::string& family, const json& params, const GraphCode& code,
                     const std::string& basis_file) {
    json d;
    d["family"] = family;
    d["params"] = params;
    d["n"] = code.n();
    d["q"] = code.ctx().to_string();
    d["scalar_t"] = code.scalar().t();
    d["dimension"] = code.dimension();
    d["dimension_bits"] = code.dimension_bits();
    d["directed"] = code.directed();
    d["symmetric_zero_diag"] = code.symmetric_zero_diag();
    d["rate"] = code.rate();
    if (code.claimed_relative_distance().has_value()) {
        d["claimed_relative_distance"] = code.claimed_relative_distance()->to_string();
    } else {
        d["claimed_relative_distance"] = nullptr;
    }
    d["basis_file"] = basis_file;
    return d;
}

json layer_json(const ConcatLayer& layer) {
    json l;
    l["family"] = layer.family;
    l["n"] = layer.n;
    l["q"] = layer.q;
    l["dimension"] = layer.dimension;
    l["message_bits"] = layer.message_bits;
    // the fixed F_2-linear identification between outer symbols and inner
    // messages: polynomial-basis coordinates, inner basis expanded
    // basis-element-major, first message_bits elements selected
    l["embedding"] = "poly-basis-bits/basis-major/first-" + std::to_string(layer.message_bits);
    if (layer.seed) l["seed"] = *layer.seed;
    if (layer.certified_directed_distance) {
        l["certified_directed_distance"] = *layer.certified_directed_distance;
    }
    if (layer.claimed_directed_distance) {
        l["claimed_directed_distance"] = *layer.claimed_directed_distance;
    }
    return l;
}

GraphCode load_code(const json& descriptor, const std::filesystem::path& descriptor_dir) {
    const std::string basis_rel = descriptor.at("basis_file").get<std::string>();
    std::ifstream in(descriptor_dir / basis_rel);
    if (!in) throw std::invalid_argument("cannot open basis file: " + basis_rel);
    auto basis = read_basis_file(in);

    const FieldContext ctx = FieldContext::from_string(descriptor.at("q").get<std::string>());
    const int scalar_t = descriptor.at("scalar_t").get<int>();
    const FieldContext scalar = scalar_t == ctx.t() ? ctx : FieldContext(scalar_t);
    std::optional<Rational> claimed;
    if (!descriptor.at("claimed_relative_distance").is_null()) {
        claimed = parse_rational(descriptor.at("claimed_relative_distance").get<std::string>());
    }
    return GraphCode(ctx, scalar, descriptor.at("n").get<int>(), std::move(basis),
                     descriptor.at("directed").get<bool>(),
                     descriptor.at("symmetric_zero_diag").get<bool>(), std::move(claimed));
}

json report_json(const DistanceReport& report) {
    json r;
    r["mode"] = report.exact() ? "exact" : "sampled";
    switch (report.metric) {
        case Metric::Hamming: r["metric"] = "hamming"; break;
        case Metric::Graph: r["metric"] = "graph"; break;
        case Metric::DirectedGraph: r["metric"] = "directed-graph"; break;
    }
    if (report.exact()) {
        r["value"] = report.value;
    } else {
        r["upper"] = report.value;
        r["lower"] = nullptr;  // sampled reports never claim a lower bound
        r["samples"] = report.samples;
    }
    if (report.seed) r["seed"] = *report.seed;
    json msg = json::array();
    for (uint32_t c : report.witness_message) msg.push_back(element_hex(c));
    r["witness_message"] = msg;
    r["witness_rows"] = report.witness_rows;
    r["witness_cols"] = report.witness_cols;
    return r;
}

}  // namespace graphcodes
