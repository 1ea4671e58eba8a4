// gtc — generalized toric codes over F_q: construction, duality, multicyclic
// structure, and minimum-distance engines behind one JSON-speaking binary.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtc/codes.hpp"
#include "gtc/distance.hpp"
#include "gtc/errors.hpp"
#include "gtc/exponents.hpp"
#include "gtc/field.hpp"
#include "gtc/matrix.hpp"
#include "gtc/serialize.hpp"
#include "gtc/structure.hpp"

using gtc::json;

namespace {

void emit(const json& j) { std::cout << j.dump() << "\n"; }

[[noreturn]] void fail(const std::string& code, const std::string& detail, int exit_code) {
    emit(json{{"error", code}, {"detail", detail}});
    std::cerr << "gtc: " << detail << "\n";
    std::exit(exit_code);
}

// --budget beats GTC_BUDGET beats the built-in default.
long long resolve_budget(const CLI::App* sub, long long flag_value) {
    if (sub->count("--budget") > 0) {
        if (flag_value <= 0) throw gtc::ParseError("--budget must be a positive integer");
        return flag_value;
    }
    if (const char* s = std::getenv("GTC_BUDGET")) {
        std::string t(s);
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &used);
        } catch (const std::exception&) {
            throw gtc::ParseError("GTC_BUDGET is not an integer: \"" + t + "\"");
        }
        if (used != t.size() || v <= 0)
            throw gtc::ParseError("GTC_BUDGET must be a positive integer, got \"" + t + "\"");
        return v;
    }
    return gtc::kDefaultBudget;
}

// U in generator-row order (by canonical position), so row i of the emitted
// generator matrix evaluates the monomial with exponent U[i].
std::vector<gtc::Point> row_order_members(const gtc::OrderedH& order, const gtc::ExponentSet& U) {
    std::vector<gtc::Point> ms = U.members;
    std::sort(ms.begin(), ms.end(), [&](const gtc::Point& a, const gtc::Point& b) {
        return order.position_of(a) < order.position_of(b);
    });
    return ms;
}

gtc::CodeSpec spec_from_flags(int q, int r, const std::string& u_text) {
    gtc::Field F(q);
    gtc::Grid g{q, r};
    gtc::ExponentSet U = gtc::reduce_set(gtc::parse_point_list(u_text, r), g);
    return gtc::make_code_spec(F, r, std::move(U));
}

json file_or_stdin_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw gtc::ParseError("cannot open \"" + path + "\"");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw gtc::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// Unbiased uniform draw in [0, bound) by rejection; byte-reproducible across
// platforms since mt19937_64 fixes the underlying stream.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

json distance_result_json(const gtc::DistanceResult& res) {
    return json{{"d", res.d},
                {"method", gtc::method_name(res.method)},
                {"certified_lower_bound", res.certified_lower_bound},
                {"partial", res.partial},
                {"work", {{"codewords", res.work.codewords}, {"subsets", res.work.subsets}}}};
}

json code_payload(const gtc::CodeSpec& spec, bool with_matrices) {
    json out;
    out["q"] = spec.field.q();
    out["r"] = spec.r();
    out["n"] = spec.n();
    out["k"] = spec.k();
    out["U"] = gtc::point_list_to_json(row_order_members(spec.order, spec.U));
    gtc::ExponentSet Uperp = gtc::dual_set(spec.U);
    out["dualU"] = gtc::point_list_to_json(row_order_members(spec.order, Uperp));
    if (with_matrices) {
        out["generator"] = spec.k() > 0 ? gtc::matrix_to_json(gtc::generator_matrix(spec))
                                        : json::array();
        out["control"] = gtc::matrix_to_json(gtc::control_matrix(spec));
    }
    return out;
}

void print_matrices_plain(const std::vector<const gtc::FqMatrix*>& mats, bool csv) {
    for (size_t i = 0; i < mats.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << (csv ? gtc::matrix_to_csv(*mats[i]) : gtc::matrix_to_text(*mats[i]));
    }
}

// ---------------- subcommand handlers ----------------

void run_field_info(int q) {
    gtc::Field F(q);
    json out;
    out["q"] = F.q();
    out["p"] = F.p();
    out["m"] = F.m();
    if (F.m() > 1) out["modulus"] = F.modulus();
    out["alpha"] = static_cast<int>(F.alpha());
    std::vector<int> exp(F.exp_table().begin(), F.exp_table().end());
    out["exp"] = exp;
    emit(out);
}

void run_matrix(int q, int r, const std::string& format) {
    gtc::Field F(q);
    gtc::OrderedH order = gtc::enumerate_H(q, r);
    gtc::FqMatrix M = gtc::evaluation_matrix(F, r);
    gtc::FqMatrix Is = gtc::sigma_permutation_matrix(order);
    if (format != "json") {
        print_matrices_plain({&M, &Is}, format == "csv");
        return;
    }
    json out;
    out["q"] = q;
    out["r"] = r;
    out["n"] = order.n();
    out["order"] = gtc::point_list_to_json(order.points);
    out["M"] = gtc::matrix_to_json(M);
    out["I_sigma"] = gtc::matrix_to_json(Is);
    emit(out);
}

void run_build(int q, int r, const std::string& u_text, const std::string& format) {
    gtc::CodeSpec spec = spec_from_flags(q, r, u_text);
    if (format != "json") {
        gtc::FqMatrix G = spec.k() > 0 ? gtc::generator_matrix(spec) : gtc::FqMatrix(0, spec.n());
        gtc::FqMatrix H = gtc::control_matrix(spec);
        print_matrices_plain({&G, &H}, format == "csv");
        return;
    }
    emit(code_payload(spec, true));
}

void run_dual(int q, int r, const std::string& u_text) {
    gtc::CodeSpec spec = spec_from_flags(q, r, u_text);
    gtc::DualityReport rep = gtc::duality_report(spec);
    json out;
    out["q"] = q;
    out["r"] = r;
    out["n"] = spec.n();
    out["k"] = spec.k();
    out["U"] = gtc::point_list_to_json(row_order_members(spec.order, rep.U));
    out["dualU"] = gtc::point_list_to_json(row_order_members(spec.order, rep.U_perp));
    out["gram_ok"] = rep.gram_ok;
    out["dims_ok"] = rep.dims_ok;
    out["self_dual"] = rep.self_dual;
    out["self_orthogonal"] = rep.self_orthogonal;
    emit(out);
}

void run_recover(int q, int r, const std::string& path) {
    gtc::Field F(q);
    gtc::OrderedH order = gtc::enumerate_H(q, r);
    std::vector<gtc::Codeword> gens = gtc::codewords_from_json(file_or_stdin_json(path), F, order);
    gtc::ExponentSet U = gtc::ideal_to_U(F, order, gens);
    json out;
    out["q"] = q;
    out["r"] = r;
    out["n"] = order.n();
    out["k"] = U.size();
    out["U"] = gtc::point_list_to_json(row_order_members(order, U));
    out["zero_ideal"] = U.size() == 0;
    emit(out);
}

void run_distance(const CLI::App* sub, int q, int r, const std::string& u_text,
                  const std::string& method, long long certify_d, long long budget_flag) {
    const long long budget = resolve_budget(sub, budget_flag);
    gtc::CodeSpec spec = spec_from_flags(q, r, u_text);
    json out;
    out["q"] = q;
    out["r"] = r;
    out["n"] = spec.n();
    out["k"] = spec.k();
    if (method == "both") {
        gtc::DistanceResult ex = gtc::min_distance_exhaustive(spec, budget);
        gtc::DistanceResult cr = gtc::min_distance_column_rank(spec, budget);
        out["d"] = ex.d;
        out["agree"] = ex.d == cr.d;
        out["exhaustive"] = distance_result_json(ex);
        out["column-rank"] = distance_result_json(cr);
    } else {
        gtc::DistanceResult res = method == "exhaustive" ? gtc::min_distance_exhaustive(spec, budget)
                                                         : gtc::min_distance_column_rank(spec, budget);
        out["d"] = res.d;
        out["method"] = gtc::method_name(res.method);
        out["certified_lower_bound"] = res.certified_lower_bound;
        out["partial"] = res.partial;
        out["work"] = {{"codewords", res.work.codewords}, {"subsets", res.work.subsets}};
    }
    if (sub->count("--certify") > 0) {
        if (certify_d < 1 || certify_d > spec.n() + 1)
            throw gtc::ParseError("--certify must lie in 1..n+1");
        out["certify"] = {{"d", certify_d},
                          {"certified", gtc::certify_lower_bound(spec, certify_d, budget)}};
    }
    emit(out);
}

void run_certify(const CLI::App* sub, int q, int r, const std::string& u_text, long long d,
                 long long budget_flag) {
    const long long budget = resolve_budget(sub, budget_flag);
    gtc::CodeSpec spec = spec_from_flags(q, r, u_text);
    if (d < 1 || d > spec.n() + 1) throw gtc::ParseError("--d must lie in 1..n+1");
    gtc::WorkCounters wc;
    bool ok = gtc::certify_lower_bound(spec, d, budget, &wc);
    json out;
    out["q"] = q;
    out["r"] = r;
    out["n"] = spec.n();
    out["k"] = spec.k();
    out["d"] = d;
    out["certified"] = ok;
    out["subsets_checked"] = wc.subsets;
    emit(out);
}

void run_polytope(int q, const std::string& path, const std::string& format) {
    gtc::Field F(q);
    gtc::Polytope P = gtc::polytope_from_json(file_or_stdin_json(path));
    gtc::PolytopeCodeResult res = gtc::polytope_code(F, P);
    const gtc::CodeSpec& spec = res.spec;
    if (format != "json") {
        gtc::FqMatrix G = spec.k() > 0 ? gtc::generator_matrix(spec) : gtc::FqMatrix(0, spec.n());
        print_matrices_plain({&G}, format == "csv");
        return;
    }
    json out;
    out["q"] = q;
    out["r"] = P.r;
    out["lattice_points"] = res.lattice_count;
    out["n"] = spec.n();
    out["k"] = spec.k();
    out["U"] = gtc::point_list_to_json(row_order_members(spec.order, spec.U));
    out["empty_polytope"] = spec.k() == 0;
    out["generator"] = spec.k() > 0 ? gtc::matrix_to_json(gtc::generator_matrix(spec))
                                    : json::array();
    emit(out);
}

void run_search(const CLI::App* sub, int q, int r, long long k, long long samples,
                const std::string& out_path, unsigned long long seed, long long budget_flag,
                bool no_timestamp) {
    const long long budget = resolve_budget(sub, budget_flag);
    gtc::Field F(q);
    gtc::OrderedH order = gtc::enumerate_H(q, r);
    const long long n = order.n();
    if (k < 1 || k > n)
        throw gtc::ParseError("--k must lie in 1.." + std::to_string(n) + " for this field");
    if (samples < 1) throw gtc::ParseError("--samples must be positive");

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::app);
        if (!file) throw gtc::ParseError("cannot open \"" + out_path + "\" for append");
    }
    std::ostream& sink = out_path.empty() ? std::cout : file;

    std::mt19937_64 rng(seed);
    std::vector<long long> positions(n);
    for (long long s = 0; s < samples; ++s) {
        std::iota(positions.begin(), positions.end(), 0);
        for (long long i = 0; i < k; ++i) {
            long long j = i + static_cast<long long>(uniform_below(rng, n - i));
            std::swap(positions[i], positions[j]);
        }
        std::vector<gtc::Point> pts;
        pts.reserve(k);
        for (long long i = 0; i < k; ++i) pts.push_back(order.points[positions[i]]);
        gtc::CodeSpec spec =
            gtc::make_code_spec(F, r, gtc::make_set(order.grid, std::move(pts)));

        // exhaustive when the message space fits the budget, else column rank
        long long messages = 1;
        for (long long i = 0; i < k && messages <= budget; ++i) messages *= q;
        gtc::DistanceResult res = messages - 1 <= budget
                                      ? gtc::min_distance_exhaustive(spec, budget)
                                      : gtc::min_distance_column_rank(spec, budget);

        json rec;
        rec["q"] = q;
        rec["r"] = r;
        rec["U"] = gtc::format_point_list(spec.U.members);
        rec["n"] = n;
        rec["k"] = spec.k();
        rec["d"] = res.d;
        rec["method"] = gtc::method_name(res.method);
        if (res.partial) rec["partial"] = true;
        rec["seed"] = seed;
        if (!no_timestamp) rec["timestamp"] = utc_timestamp();
        sink << rec.dump() << "\n";
    }
    if (!out_path.empty()) emit(json{{"appended", samples}, {"file", out_path}});
}

// The built-in worked example: q = 5, r = 2, U the 3x2 exponent rectangle.
// Recomputes everything and self-checks the structural identities.
void run_example() {
    gtc::Field F(5);
    gtc::Grid g{5, 2};
    gtc::ExponentSet U = gtc::make_set(g, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
    gtc::CodeSpec spec = gtc::make_code_spec(F, 2, U);
    const gtc::OrderedH& order = spec.order;

    gtc::FqMatrix M = gtc::evaluation_matrix(F, 2);
    gtc::FqMatrix Is = gtc::sigma_permutation_matrix(order);
    bool matrix_symmetric = M == gtc::transpose(M);
    bool gram_identity = gtc::mat_mul(F, M, gtc::transpose(M)) == Is;

    gtc::DualityReport rep = gtc::duality_report(spec);
    bool duality_ok = rep.gram_ok && rep.dims_ok && !rep.self_dual && rep.U_perp.size() == 10;

    // convolution annihilation/scaling on a few basis pairs ((-1)^2 = 1)
    bool convolution_ok = true;
    const std::vector<gtc::Point> probe = {{0, 0}, {1, 0}, {2, 3}, {3, 1}};
    for (const gtc::Point& u : probe) {
        gtc::Codeword cu = gtc::basis_codeword(F, order, u);
        for (const gtc::Point& v : probe) {
            gtc::Codeword cv = gtc::basis_codeword(F, order, v);
            gtc::Codeword prod = gtc::convolve(F, order, cu, cv);
            convolution_ok &= (u == v) ? prod == cu : gtc::is_zero(prod);
        }
    }

    // one shift eigenvalue check: shift(ev(Y^u), a) = alpha^{-<u,a>} ev(Y^u)
    bool shift_ok = true;
    {
        gtc::Point u{2, 1}, a{1, 3};
        gtc::Codeword shifted = gtc::shift(order, gtc::basis_codeword(F, order, u), a);
        gtc::Codeword scaled = gtc::basis_codeword(F, order, u);
        gtc::Elem lambda = F.exp(-(2 * 1 + 1 * 3));
        for (gtc::Elem& x : scaled.values) x = F.mul(lambda, x);
        shift_ok = shifted == scaled;
    }

    gtc::DistanceResult ex = gtc::min_distance_exhaustive(spec);
    gtc::DistanceResult cr = gtc::min_distance_column_rank(spec);
    bool distance_ok = ex.d == 6 && cr.d == 6 && gtc::certify_lower_bound(spec, 6) &&
                       !gtc::certify_lower_bound(spec, 7);

    json out = code_payload(spec, true);
    out["d"] = ex.d;
    json checks;
    checks["matrix_symmetric"] = matrix_symmetric;
    checks["gram_identity"] = gram_identity;
    checks["duality"] = duality_ok;
    checks["convolution"] = convolution_ok;
    checks["shift_eigenvalue"] = shift_ok;
    checks["distance"] = distance_ok;
    bool all = matrix_symmetric && gram_identity && duality_ok && convolution_ok && shift_ok &&
               distance_ok;
    checks["all"] = all;
    out["checks"] = checks;
    emit(out);
    if (!all) {
        std::cerr << "gtc: built-in example self-check failed\n";
        std::exit(2);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized toric codes over F_q: build, dualize, and bound distance"};
    app.require_subcommand(1);

    int q = 0, r = 1;
    std::string u_text, format = "json", file_path, method = "both", out_path;
    long long certify_d = 0, d_flag = 0, budget_flag = 0, k_flag = 0, samples = 10;
    unsigned long long seed = 0;
    bool no_timestamp = false;

    auto add_q = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field size, a prime power in 3..65536")->required();
    };
    auto add_r = [&](CLI::App* sub) { sub->add_option("--r", r, "number of variables")->required(); };
    auto add_u = [&](CLI::App* sub) {
        sub->add_option("--u", u_text, "exponent set \"c1,c2;c1,c2;...\"")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json | matrix-text | csv")
            ->check(CLI::IsMember({"json", "matrix-text", "csv"}));
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget_flag, "work budget (default 10000000 or GTC_BUDGET)");
    };

    CLI::App* sub_field = app.add_subcommand("field-info", "field constants and exp table");
    add_q(sub_field);
    sub_field->callback([&] { run_field_info(q); });

    CLI::App* sub_matrix = app.add_subcommand("matrix", "evaluation matrix M and I_sigma");
    add_q(sub_matrix);
    add_r(sub_matrix);
    add_format(sub_matrix);
    sub_matrix->callback([&] { run_matrix(q, r, format); });

    CLI::App* sub_build = app.add_subcommand("build", "generator and control matrices for U");
    add_q(sub_build);
    add_r(sub_build);
    add_u(sub_build);
    add_format(sub_build);
    sub_build->callback([&] { run_build(q, r, u_text, format); });

    CLI::App* sub_dual = app.add_subcommand("dual", "dual exponent set and duality report");
    add_q(sub_dual);
    add_r(sub_dual);
    add_u(sub_dual);
    sub_dual->callback([&] { run_dual(q, r, u_text); });

    CLI::App* sub_recover =
        app.add_subcommand("recover", "recover U from ideal generators (JSON codeword list)");
    add_q(sub_recover);
    add_r(sub_recover);
    sub_recover->add_option("--codewords", file_path, "JSON file, \"-\" for stdin")->required();
    sub_recover->callback([&] { run_recover(q, r, file_path); });

    CLI::App* sub_distance = app.add_subcommand("distance", "minimum distance of C_U");
    add_q(sub_distance);
    add_r(sub_distance);
    add_u(sub_distance);
    sub_distance->add_option("--method", method, "exhaustive | rank | both")
        ->check(CLI::IsMember({"exhaustive", "rank", "both"}));
    sub_distance->add_option("--certify", certify_d, "also certify this lower bound");
    add_budget(sub_distance);
    sub_distance->callback(
        [&] { run_distance(sub_distance, q, r, u_text, method, certify_d, budget_flag); });

    CLI::App* sub_certify = app.add_subcommand("certify", "rank certificate for distance >= d");
    add_q(sub_certify);
    add_r(sub_certify);
    add_u(sub_certify);
    sub_certify->add_option("--d", d_flag, "bound to certify")->required();
    add_budget(sub_certify);
    sub_certify->callback([&] { run_certify(sub_certify, q, r, u_text, d_flag, budget_flag); });

    CLI::App* sub_polytope = app.add_subcommand("polytope", "code from lattice points of a polytope");
    add_q(sub_polytope);
    sub_polytope->add_option("--file", file_path, "polytope JSON, \"-\" for stdin")->required();
    add_format(sub_polytope);
    sub_polytope->callback([&] { run_polytope(q, file_path, format); });

    CLI::App* sub_search = app.add_subcommand("search", "sample random U of size k, record d");
    add_q(sub_search);
    add_r(sub_search);
    sub_search->add_option("--k", k_flag, "code dimension to sample")->required();
    sub_search->add_option("--samples", samples, "number of random sets (default 10)");
    sub_search->add_option("--out", out_path, "JSONL file to append (default stdout)");
    sub_search->add_option("--seed", seed, "RNG seed (default 0)");
    sub_search->add_flag("--no-timestamp", no_timestamp, "omit timestamps for reproducible output");
    add_budget(sub_search);
    sub_search->callback([&] {
        run_search(sub_search, q, r, k_flag, samples, out_path, seed, budget_flag, no_timestamp);
    });

    CLI::App* sub_example = app.add_subcommand("example", "built-in worked example, self-checked");
    sub_example->callback([&] { run_example(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(json{{"error", "usage"}, {"detail", e.what()}});
        std::cerr << "gtc: " << e.what() << "\n";
        return 2;
    } catch (const gtc::BudgetExceeded& e) {
        emit(json{{"error", e.code()}, {"detail", e.what()}, {"required", e.required}});
        std::cerr << "gtc: " << e.what() << "\n";
        return 3;
    } catch (const gtc::TooLarge& e) {
        fail(e.code(), e.what(), 3);
    } catch (const gtc::DimensionTooLarge& e) {
        fail(e.code(), e.what(), 3);
    } catch (const gtc::Error& e) {
        fail(e.code(), e.what(), 2);
    } catch (const std::exception& e) {
        fail("internal", e.what(), 2);
    }
    return 0;
}
