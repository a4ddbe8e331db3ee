#include "graphcodes/concatenation.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "graphcodes/errors.hpp"
#include "graphcodes/linalg.hpp"
#include "graphcodes/stczd.hpp"

namespace graphcodes {

namespace {

// F_2-basis of the code: the basis itself when the code already spans over
// F_2, otherwise every basis element scaled by every field basis element.
std::vector<MatrixWord> f2_basis_of(const GraphCode& code) {
    if (code.scalar().t() == 1) return code.basis();
    std::vector<MatrixWord> out;
    out.reserve(code.basis().size() * code.ctx().t());
    for (const auto& b : code.basis()) {
        for (int j = 0; j < code.ctx().t(); ++j) {
            MatrixWord w(code.ctx(), code.n());
            w.add_scaled(b, uint32_t(1) << j);
            out.push_back(std::move(w));
        }
    }
    return out;
}

MatrixWord encode_outer_word(const MatrixWord& outer_word, const std::vector<InnerEncoder>& family,
                             const InnerPick& pick) {
    const int N = outer_word.n();
    const int m = family[0].n();
    MatrixWord out(family[0].ctx(), N * m);
    for (int I = 0; I < N; ++I) {
        for (int J = 0; J < N; ++J) {
            const int p = pick(I, J);
            if (p < 0 || p >= int(family.size())) throw std::invalid_argument("inner pick out of range");
            if (p != pick(J, I)) throw std::invalid_argument("inner pick rule must be symmetric");
            const MatrixWord enc = family[size_t(p)].encode(outer_word.at(I, J));
            const bool below = I > J;
            for (int u = 0; u < m; ++u) {
                for (int v = 0; v < m; ++v) {
                    out.set(I * m + u, J * m + v, below ? enc.at(v, u) : enc.at(u, v));
                }
            }
        }
    }
    return out;
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

int ilog2(int v) { return std::bit_width(unsigned(v)) - 1; }

// Exact directed-distance certificate when the codeword count fits the
// budget; nullopt otherwise.
std::optional<DistanceReport> try_certify_directed(const GraphCode& code, uint64_t budget) {
    uint64_t total = 1;
    const uint64_t q = code.scalar().order();
    for (int i = 0; i < code.dimension(); ++i) {
        if (total > budget / q) return std::nullopt;
        total *= q;
    }
    if (total > budget) return std::nullopt;
    CodeDistanceOptions opt;
    opt.mode = CodeDistanceOptions::Mode::Exact;
    opt.exact_budget = budget;
    opt.metric = Metric::DirectedGraph;
    return code_distance(code, opt);
}

ConcatLayer layer_of(const std::string& family, const GraphCode& code, int message_bits,
                     std::optional<uint64_t> seed, std::optional<int> certified,
                     std::optional<int> claimed) {
    ConcatLayer l;
    l.family = family;
    l.n = code.n();
    l.q = code.ctx().to_string();
    l.dimension = code.dimension();
    l.message_bits = message_bits;
    l.seed = seed;
    l.certified_directed_distance = certified;
    l.claimed_directed_distance = claimed;
    return l;
}

}  // namespace

InnerEncoder::InnerEncoder(const GraphCode& inner, int symbol_bits)
    : ctx_(inner.ctx()), n_(inner.n()), bits_(symbol_bits) {
    if (symbol_bits < 1) throw std::invalid_argument("inner encoder needs a positive symbol width");
    const auto expansion = f2_basis_of(inner);
    if (int(expansion.size()) < symbol_bits) {
        std::ostringstream os;
        os << "inner code too small for the outer alphabet: " << expansion.size()
           << " F_2 dimensions available, " << symbol_bits << " needed";
        throw std::invalid_argument(os.str());
    }
    bit_basis_.assign(expansion.begin(), expansion.begin() + symbol_bits);
    // Injectivity of the selected sub-basis.
    linalg::IncrementalBasisF2 inc;
    for (const auto& b : bit_basis_) {
        std::vector<uint64_t> packed((b.entries().size() * ctx_.t() + 63) / 64, 0);
        size_t bit = 0;
        for (uint16_t e : b.entries()) {
            for (int s = 0; s < ctx_.t(); ++s, ++bit) {
                if ((e >> s) & 1u) packed[bit / 64] |= uint64_t(1) << (bit % 64);
            }
        }
        if (!inc.add(std::move(packed))) {
            throw std::invalid_argument("inner encoder bit basis is dependent");
        }
    }
}

MatrixWord InnerEncoder::encode(uint32_t symbol) const {
    if (symbol >> bits_) throw std::invalid_argument("symbol wider than the encoder alphabet");
    MatrixWord w(ctx_, n_);
    for (int i = 0; i < bits_; ++i) {
        if ((symbol >> i) & 1u) w.add_scaled(bit_basis_[size_t(i)], 1);
    }
    return w;
}

GraphCode symmetric_concatenate(const GraphCode& outer, const InnerEncoder& inner,
                                std::optional<Rational> claimed) {
    return symmetric_concatenate(outer, std::vector<InnerEncoder>{inner},
                                 [](int, int) { return 0; }, std::move(claimed));
}

GraphCode symmetric_concatenate(const GraphCode& outer, const std::vector<InnerEncoder>& family,
                                const InnerPick& pick, std::optional<Rational> claimed) {
    if (!outer.symmetric_zero_diag()) {
        throw std::invalid_argument("symmetric concatenation requires a symmetric zero-diagonal outer code");
    }
    if (family.empty()) throw std::invalid_argument("empty inner code family");
    for (const auto& e : family) {
        if (e.symbol_bits() != outer.ctx().t()) {
            throw std::invalid_argument("inner alphabet does not match the outer symbol width");
        }
        if (e.n() != family[0].n() || !(e.ctx() == family[0].ctx())) {
            throw std::invalid_argument("inner family members differ in shape or field");
        }
    }
    std::vector<MatrixWord> basis;
    for (const auto& word : f2_basis_of(outer)) {
        basis.push_back(encode_outer_word(word, family, pick));
    }
    return GraphCode(family[0].ctx(), FieldContext::binary(), outer.n() * family[0].n(),
                     std::move(basis), /*directed=*/false, /*symmetric_zero_diag=*/true,
                     std::move(claimed));
}

ConcatRsResult concat_rs(const Rational& epsilon, int n, int k, int N, const Rational& rho,
                         uint64_t seed, uint64_t exact_budget) {
    if (k < 1 || k > 16) throw std::invalid_argument("concat-rs: k must be in 1..16");
    const FieldContext ctx_q(k);
    if (N > int(ctx_q.order())) throw std::invalid_argument("concat-rs requires N <= Q = 2^k");
    const int k_rs = int((rho * Rational(N)).floor());
    if (k_rs < 1) throw std::invalid_argument("concat-rs: outer RS dimension floor(rho N) vanishes");

    GraphCode outer = stczd_basis(rs_generate(N, k_rs, ctx_q));
    const int outer_claimed = N - k_rs + 1;

    OptSearchParams op;
    op.epsilon = epsilon;
    op.n = n;
    op.k = k;
    op.seed = seed;
    op.exact_budget = exact_budget;
    OptSearchResult inner = search_opt_directed(op);

    auto outer_cert = try_certify_directed(outer, exact_budget);
    const int outer_distance = outer_cert ? outer_cert->value : outer_claimed;
    const int lower = inner.certificate.value * outer_distance;

    const Rational claimed_rel = (Rational(1) - epsilon) * (Rational(1) - rho);
    InnerEncoder enc(inner.code, k);
    GraphCode composite = symmetric_concatenate(outer, enc, claimed_rel);

    ConcatRsResult result{std::move(composite),
                          std::move(outer),
                          std::move(inner),
                          std::move(outer_cert),
                          lower,
                          {}};
    result.layers.push_back(layer_of(
        "stczd-rs", result.outer, result.outer.dimension() * k, std::nullopt,
        result.outer_certificate ? std::optional<int>(result.outer_certificate->value) : std::nullopt,
        outer_claimed));
    result.layers.push_back(layer_of("opt", result.inner.code, k, seed,
                                     result.inner.certificate.value,
                                     opt_distance_target(epsilon, n)));
    return result;
}

TripleConcatResult triple_concat(const Rational& rho, int N, uint64_t seed, uint64_t exact_budget) {
    if (!is_power_of_two(N) || N < 2) {
        throw std::invalid_argument("triple concatenation requires N a power of two, N >= 2");
    }
    const int t_outer = ilog2(N);
    const int k_rs = int((rho * Rational(N)).floor());
    if (k_rs < 3) {
        throw std::invalid_argument(
            "triple concatenation infeasible at this N: outer explicit subcode is empty (floor(rho N) < 3)");
    }
    GraphCode outer = stczd_rs_explicit(N, k_rs, FieldContext(t_outer));
    auto outer_cert = try_certify_directed(outer, exact_budget);

    // Layer sizing: smallest power of two whose tensor-RS code can carry the
    // alphabet of the layer above.
    const auto size_tensor_layer = [&rho](int target_bits, const char* which) {
        for (int cand = 2; cand <= (1 << 16); cand *= 2) {
            const int kc = int((rho * Rational(cand)).floor());
            if (kc < 1) continue;
            if (int64_t(kc) * kc * ilog2(cand) >= target_bits) return cand;
        }
        throw std::invalid_argument(std::string("triple concatenation sizing failed at layer ") + which);
    };
    const int n1 = size_tensor_layer(t_outer, "1 (tensor-RS)");
    const int k1 = int((rho * Rational(n1)).floor());
    const int n2 = size_tensor_layer(ilog2(n1), "2 (tensor-RS)");
    const int k2 = int((rho * Rational(n2)).floor());
    const int k3 = ilog2(n2);
    int n3 = 0;
    for (int cand = 1; cand <= 10000; ++cand) {
        const Rational cap = rho * rho * Rational(int64_t(cand) * cand) - Rational(2 * cand);
        if (Rational(k3) < cap) {
            n3 = cand;
            break;
        }
    }
    if (n3 == 0) throw std::invalid_argument("triple concatenation sizing failed at layer 3 (opt)");

    GraphCode tc1 = tensor_code(rs_generate(n1, k1, FieldContext(ilog2(n1))));
    GraphCode tc2 = tensor_code(rs_generate(n2, k2, FieldContext(ilog2(n2))));
    auto tc1_cert = try_certify_directed(tc1, exact_budget);
    auto tc2_cert = try_certify_directed(tc2, exact_budget);

    OptSearchParams op;
    op.epsilon = rho;
    op.n = n3;
    op.k = k3;
    op.seed = seed;
    op.exact_budget = exact_budget;
    OptSearchResult innermost = search_opt_directed(op);

    const Rational one_minus = Rational(1) - rho;
    const Rational claimed_rel = one_minus * one_minus * one_minus * one_minus;

    GraphCode step1 = symmetric_concatenate(outer, InnerEncoder(tc1, t_outer));
    GraphCode step2 = symmetric_concatenate(step1, InnerEncoder(tc2, ilog2(n1)));
    GraphCode composite = symmetric_concatenate(step2, InnerEncoder(innermost.code, k3), claimed_rel);

    const int d0 = outer_cert ? outer_cert->value : N - k_rs + 1;
    const int d1 = tc1_cert ? tc1_cert->value : n1 - k1 + 1;
    const int d2 = tc2_cert ? tc2_cert->value : n2 - k2 + 1;
    const int lower = d0 * d1 * d2 * innermost.certificate.value;

    TripleConcatResult result{std::move(composite), n1, n2, n3, std::move(innermost), {}, lower};
    result.layers.push_back(layer_of(
        "stczd-rs-explicit", outer, outer.dimension() * t_outer, std::nullopt,
        outer_cert ? std::optional<int>(outer_cert->value) : std::nullopt, N - k_rs + 1));
    result.layers.push_back(layer_of("tensor-rs", tc1, t_outer, std::nullopt,
                                     tc1_cert ? std::optional<int>(tc1_cert->value) : std::nullopt,
                                     n1 - k1 + 1));
    result.layers.push_back(layer_of("tensor-rs", tc2, ilog2(n1), std::nullopt,
                                     tc2_cert ? std::optional<int>(tc2_cert->value) : std::nullopt,
                                     n2 - k2 + 1));
    result.layers.push_back(layer_of("opt", result.innermost.code, k3, seed,
                                     result.innermost.certificate.value,
                                     opt_distance_target(rho, n3)));
    return result;
}

JustesenResult justensen_like(const Rational& epsilon, int k, const Rational& rho,
                              uint64_t exact_budget) {
    if (k < 2 || k > 16) {
        throw std::invalid_argument("justesen-like: k must be in 2..16 so that N = 2^k - 1 >= 2");
    }
    const int N = (1 << k) - 1;
    const int k_rs = int((rho * Rational(N)).floor());
    if (k_rs < 1) throw std::invalid_argument("justesen-like: outer RS dimension floor(rho N) vanishes");

    const FieldContext ctx_q(k);
    GraphCode outer = stczd_basis(rs_generate(N, k_rs, ctx_q));

    std::vector<InnerEncoder> family;
    std::vector<int> inner_distance(N, 0), inner_dimension(N, 0);
    family.reserve(N);
    for (int idx = 1; idx <= N; ++idx) {
        GraphCode inner = stczd_basis(wozencraft_code(k, uint32_t(idx)));
        inner_dimension[idx - 1] = inner.dimension();
        CodeDistanceOptions opt;
        opt.mode = CodeDistanceOptions::Mode::Exact;
        opt.exact_budget = exact_budget;
        opt.metric = Metric::DirectedGraph;
        inner_distance[idx - 1] = code_distance(inner, opt).value;
        family.emplace_back(inner, k);
    }

    const double rel = inverse_binary_entropy(0.5 - epsilon.to_double());
    const int threshold = int(std::ceil(rel * 2 * k - 1e-9));
    int good = 0;
    for (int d : inner_distance)
        if (d >= threshold) ++good;

    GraphCode composite = symmetric_concatenate(
        outer, family, [](int i, int j) { return i < j ? i : j; });

    JustesenResult result{std::move(composite),
                          std::move(outer),
                          std::move(inner_distance),
                          std::move(inner_dimension),
                          threshold,
                          double(good) / double(N),
                          {}};
    result.layers.push_back(layer_of("stczd-rs", result.outer, result.outer.dimension() * k,
                                     std::nullopt, std::nullopt, N - k_rs + 1));
    ConcatLayer woz;
    woz.family = "stczd-wozencraft-ensemble";
    woz.n = 2 * k;
    woz.q = FieldContext::binary().to_string();
    woz.dimension = result.inner_dimension.empty() ? 0 : result.inner_dimension[0];
    woz.message_bits = k;
    result.layers.push_back(std::move(woz));
    return result;
}

}  // namespace graphcodes
