#include "graphcodes/random_codes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "graphcodes/errors.hpp"
#include "graphcodes/linalg.hpp"
#include "graphcodes/rng.hpp"

namespace graphcodes {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double binary_entropy(const Rational& x) { return binary_entropy(x.to_double()); }

double inverse_binary_entropy(double y) {
    if (y < 0.0 || y > 1.0) throw std::invalid_argument("entropy value outside [0, 1]");
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = (lo + hi) / 2.0;
        if (binary_entropy(mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

int64_t random_graph_code_dimension(int n, const Rational& delta) {
    const int64_t m = (Rational(n) * (Rational(1) - delta)).floor();
    const double v = double(m) * double(m - 1) / 2.0 - binary_entropy(delta) * n - 2.0;
    return int64_t(std::floor(v + 1e-9));
}

namespace {

MatrixWord random_graph_word(int n, const FieldContext& f2, SplitMix64& rng) {
    MatrixWord w(f2, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int b = rng.bit();
            w.set(i, j, b);
            w.set(j, i, b);
        }
    }
    return w;
}

MatrixWord random_matrix_word(int n, const FieldContext& f2, SplitMix64& rng) {
    MatrixWord w(f2, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.set(i, j, rng.bit());
    return w;
}

bool independent_f2(const std::vector<MatrixWord>& words) {
    linalg::IncrementalBasisF2 inc;
    for (const auto& w : words) {
        if (!inc.add(linalg::pack_bits(w.entries()))) return false;
    }
    return true;
}

}  // namespace

RandomGraphCodeResult sample_random_graph_code(const RandomGraphCodeParams& params) {
    const int n = params.n;
    if (n < 2 || n > 64) throw std::invalid_argument("random graph code: n must be in 2..64");
    const int64_t k = random_graph_code_dimension(n, params.delta);
    if (k <= 0) throw std::invalid_argument("random graph code: dimension formula is nonpositive");

    // distance must exceed delta * n
    const Rational dn = params.delta * Rational(n);
    const int required = int(dn.floor()) + 1;

    const FieldContext f2 = FieldContext::binary();
    SplitMix64 rng(params.seed);
    std::vector<std::string> transcript;
    const Rational survivors = Rational(n) * (Rational(1) - params.delta);
    if (survivors.den != 1) {
        std::ostringstream os;
        os << "note: n(1-delta) = " << survivors.to_string() << " floored to "
           << survivors.floor() << " in the dimension formula";
        transcript.push_back(os.str());
    }
    for (int attempt = 1; attempt <= params.retry_cap; ++attempt) {
        std::vector<MatrixWord> basis;
        basis.reserve(size_t(k));
        for (int64_t i = 0; i < k; ++i) basis.push_back(random_graph_word(n, f2, rng));
        if (!independent_f2(basis)) {
            std::ostringstream os;
            os << "attempt=" << attempt << " status=reject reason=dependent-basis";
            transcript.push_back(os.str());
            continue;
        }
        GraphCode code(f2, n, std::move(basis), /*directed=*/false, /*symmetric_zero_diag=*/true,
                       params.delta);
        CodeDistanceOptions opt;
        opt.mode = CodeDistanceOptions::Mode::Exact;
        opt.exact_budget = params.exact_budget;
        DistanceReport rep = code_distance(code, opt);
        std::ostringstream os;
        os << "attempt=" << attempt << " distance=" << rep.value << " required=" << required;
        if (rep.value >= required) {
            os << " status=accept";
            transcript.push_back(os.str());
            return RandomGraphCodeResult{std::move(code), std::move(rep), attempt, std::move(transcript)};
        }
        os << " status=reject";
        transcript.push_back(os.str());
    }
    std::ostringstream os;
    os << "random graph code: retry cap exhausted after " << params.retry_cap << " attempts;";
    for (const auto& line : transcript) os << "\n  " << line;
    throw BudgetError(os.str());
}

int opt_distance_target(const Rational& epsilon, int n) {
    return int(((Rational(1) - epsilon) * Rational(n)).ceil());
}

OptSearchResult search_opt_directed(const OptSearchParams& params) {
    const int n = params.n, k = params.k;
    if (n < 1 || k < 1) throw std::invalid_argument("opt search: n and k must be positive");
    // k < eps^2 n^2 - 2n, checked exactly
    const Rational cap = params.epsilon * params.epsilon * Rational(int64_t(n) * n) - Rational(2 * n);
    if (!(Rational(k) < cap)) {
        throw std::invalid_argument("opt search requires k < epsilon^2 n^2 - 2n");
    }
    const int required = opt_distance_target(params.epsilon, n);

    const FieldContext f2 = FieldContext::binary();
    SplitMix64 rng(params.seed);
    std::vector<std::string> transcript;
    for (uint64_t attempt = 1; attempt <= params.attempt_budget; ++attempt) {
        std::vector<MatrixWord> basis;
        basis.reserve(size_t(k));
        for (int i = 0; i < k; ++i) basis.push_back(random_matrix_word(n, f2, rng));
        if (!independent_f2(basis)) {
            std::ostringstream os;
            os << "attempt=" << attempt << " status=reject reason=dependent-basis";
            transcript.push_back(os.str());
            continue;
        }
        GraphCode code(f2, n, std::move(basis), /*directed=*/true, /*symmetric_zero_diag=*/false,
                       Rational(required, n));
        CodeDistanceOptions opt;
        opt.mode = CodeDistanceOptions::Mode::Exact;
        opt.exact_budget = params.exact_budget;
        DistanceReport rep = code_distance(code, opt);
        std::ostringstream os;
        os << "attempt=" << attempt << " distance=" << rep.value << " required=" << required;
        if (rep.value >= required) {
            os << " status=accept";
            transcript.push_back(os.str());
            return OptSearchResult{std::move(code), std::move(rep), attempt, std::move(transcript)};
        }
        os << " status=reject";
        transcript.push_back(os.str());
    }
    std::ostringstream os;
    os << "opt search: attempt budget exhausted after " << params.attempt_budget << " attempts";
    throw BudgetError(os.str());
}

}  // namespace graphcodes
