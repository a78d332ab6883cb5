#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "qshuffle/distribution.hpp"
#include "qshuffle/enumerate.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/laws.hpp"
#include "qshuffle/sampler.hpp"
#include "qshuffle/symfunc.hpp"
#include "qshuffle/verify.hpp"
#include "qshuffle/walk.hpp"

namespace qshuffle {
namespace {

using nlohmann::json;

enum class Format { text, json_out, csv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json_out;
    if (s == "csv") return Format::csv;
    return Format::text;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

void print_envelope(std::ostream& out, const std::string& command, const json& params,
                    const json& result) {
    json envelope;
    envelope["command"] = command;
    envelope["parameters"] = params;
    envelope["result"] = result;
    out << envelope.dump(2) << '\n';
}

// everything one invocation can carry; unset options keep their defaults
struct Request {
    int n = 0;
    std::string weights;
    std::string weights2;
    std::string perm;
    std::string format = "text";
    std::string suite = "all";
    std::string threshold = "1/100";
    std::uint64_t seed = 1;
    long long samples = 1'000'000;
    int count = 1;
    int max_power = 4;
    int f1_max = 47;
    Caps cap_values = caps();
};

// Exact per-permutation probabilities in Lehmer-rank order. Geometric specs
// go through the closed form, which is exact where materialization truncates.
std::vector<Rational> probabilities_in_rank_order(int n, const WeightSpec& spec) {
    if (spec.kind() == WeightSpec::Kind::geometric && spec.t() != 0) {
        std::vector<Rational> probs;
        probs.reserve(all_permutations(n).size());
        for (const Permutation& w : all_permutations(n))
            probs.push_back(closed_form_prob(w, spec));
        return probs;
    }
    DistributionOnSn dist = exact_distribution(n, spec.materialize());
    std::vector<Rational> probs;
    probs.reserve(dist.support_size());
    for (std::uint64_t r = 0; r < dist.support_size(); ++r) probs.push_back(dist.at_rank(r));
    return probs;
}

int cmd_sample(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    if (req.count < 1) throw std::invalid_argument("--count must be at least 1");
    Sampler sampler(spec, req.seed);
    std::vector<std::string> draws;
    draws.reserve(static_cast<size_t>(req.count));
    for (int i = 0; i < req.count; ++i) draws.push_back(sampler.draw(req.n).to_string());
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n},
                        {"weights", spec.to_string()},
                        {"seed", req.seed},
                        {"count", req.count}};
            print_envelope(out, "sample", params, json{{"draws", draws}});
            break;
        }
        case Format::csv:
            out << "index,permutation\n";
            for (size_t i = 0; i < draws.size(); ++i) out << i + 1 << ',' << draws[i] << '\n';
            break;
        case Format::text:
            for (const std::string& d : draws) out << d << '\n';
            break;
    }
    return 0;
}

int cmd_prob(const Request& req, std::ostream& out) {
    Permutation w = Permutation::parse(req.perm);
    if (req.n != 0 && req.n != w.n())
        throw std::invalid_argument("--n disagrees with the length of --perm");
    WeightSpec spec = WeightSpec::parse(req.weights);
    Rational p = spec.kind() == WeightSpec::Kind::geometric
                     ? closed_form_prob(w, spec)
                     : prob_of(w, spec.materialize());
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", w.n()}, {"perm", w.to_string()}, {"weights", spec.to_string()}};
            json result{{"prob", to_string(p)}, {"prob_decimal", decimal_string(p, 12)}};
            print_envelope(out, "prob", params, result);
            break;
        }
        case Format::csv:
            out << "n,perm,weights,prob\n";
            out << w.n() << ',' << w.to_string() << ',' << csv_escape(spec.to_string()) << ','
                << csv_escape(to_string(p)) << '\n';
            break;
        case Format::text:
            out << to_string(p) << '\n';
            break;
    }
    return 0;
}

int cmd_dist(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    std::vector<Rational> probs = probabilities_in_rank_order(req.n, spec);
    std::vector<Permutation> perms = all_permutations(req.n);
    Rational total = 0;
    for (const Rational& p : probs) total += p;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json prob_map = json::object();
            for (size_t i = 0; i < perms.size(); ++i)
                prob_map[perms[i].to_string()] = to_string(probs[i]);
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            print_envelope(out, "dist", params,
                           json{{"probs", prob_map}, {"total", to_string(total)}});
            break;
        }
        case Format::csv:
            out << "permutation,prob\n";
            for (size_t i = 0; i < perms.size(); ++i)
                out << perms[i].to_string() << ',' << csv_escape(to_string(probs[i])) << '\n';
            break;
        case Format::text:
            for (size_t i = 0; i < perms.size(); ++i)
                out << perms[i].to_string() << ' ' << to_string(probs[i]) << '\n';
            out << "total " << to_string(total) << '\n';
            break;
    }
    return 0;
}

int cmd_oracle(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    WeightVector x = spec.materialize();
    DistributionOnSn exact = exact_distribution(req.n, x);
    DistributionOnSn oracle = oracle_distribution(req.n, x);
    std::vector<Permutation> perms = all_permutations(req.n);
    bool equal = true;
    std::string mismatch_at;
    for (std::uint64_t r = 0; r < exact.support_size(); ++r) {
        if (exact.at_rank(r) != oracle.at_rank(r)) {
            equal = false;
            mismatch_at = perms[r].to_string();
            break;
        }
    }
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"equal", equal},
                        {"exact_total", to_string(exact.total())},
                        {"oracle_total", to_string(oracle.total())}};
            result["first_mismatch"] = equal ? json(nullptr) : json(mismatch_at);
            print_envelope(out, "oracle", params, result);
            break;
        }
        case Format::csv:
            out << "permutation,exact,oracle\n";
            for (std::uint64_t r = 0; r < exact.support_size(); ++r)
                out << perms[r].to_string() << ',' << csv_escape(to_string(exact.at_rank(r)))
                    << ',' << csv_escape(to_string(oracle.at_rank(r))) << '\n';
            break;
        case Format::text:
            if (equal)
                out << "equal on " << exact.support_size() << " permutations, total "
                    << to_string(exact.total()) << '\n';
            else
                out << "MISMATCH at " << mismatch_at << ": exact "
                    << to_string(exact.prob(Permutation::parse(mismatch_at))) << " vs oracle "
                    << to_string(oracle.prob(Permutation::parse(mismatch_at))) << '\n';
            break;
    }
    return equal ? 0 : 1;
}

int cmd_spectrum(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    SpectralReport rep = spectral_check(req.n, spec.materialize(), req.max_power);
    bool pass = rep.traces_ok && (!rep.numeric_done || rep.numeric_ok);
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(3) << rep.numeric_max_abs_dev;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json eigen_rows = json::array();
            for (const SpectralEigenvalue& e : rep.expected)
                eigen_rows.push_back(json{{"cycle_type", e.lambda.to_string()},
                                          {"value", to_string(e.value)},
                                          {"multiplicity", e.multiplicity.str()}});
            json trace_rows = json::array();
            for (const TraceCheck& t : rep.trace_checks)
                trace_rows.push_back(json{{"k", t.k},
                                          {"lhs", to_string(t.lhs)},
                                          {"rhs", to_string(t.rhs)},
                                          {"equal", t.equal}});
            json params{{"n", req.n},
                        {"weights", spec.to_string()},
                        {"max_power", req.max_power}};
            json result{{"eigenvalues", eigen_rows},
                        {"trace_checks", trace_rows},
                        {"traces_ok", rep.traces_ok},
                        {"numeric_done", rep.numeric_done},
                        {"numeric_ok", rep.numeric_ok},
                        {"numeric_max_abs_dev_decimal", dev.str()}};
            print_envelope(out, "spectrum", params, result);
            break;
        }
        case Format::csv:
            out << "cycle_type,eigenvalue,multiplicity\n";
            for (const SpectralEigenvalue& e : rep.expected)
                out << csv_escape(e.lambda.to_string()) << ',' << csv_escape(to_string(e.value))
                    << ',' << e.multiplicity.str() << '\n';
            break;
        case Format::text:
            for (const SpectralEigenvalue& e : rep.expected)
                out << e.lambda.to_string() << " -> " << to_string(e.value) << " (multiplicity "
                    << e.multiplicity.str() << ")\n";
            for (const TraceCheck& t : rep.trace_checks)
                out << "trace k=" << t.k << ": " << to_string(t.lhs)
                    << (t.equal ? " == " : " != ") << to_string(t.rhs) << '\n';
            out << "traces " << (rep.traces_ok ? "ok" : "FAILED");
            if (rep.numeric_done)
                out << "; numeric spectrum " << (rep.numeric_ok ? "ok" : "FAILED")
                    << " (max deviation " << dev.str() << ")";
            out << '\n';
            break;
    }
    return pass ? 0 : 1;
}

int cmd_convolve(const Request& req, std::ostream& out) {
    WeightSpec sx = WeightSpec::parse(req.weights);
    WeightSpec sy = WeightSpec::parse(req.weights2);
    WeightVector x = sx.materialize();
    WeightVector y = sy.materialize();
    DistributionOnSn conv = convolve(exact_distribution(req.n, x), exact_distribution(req.n, y));
    DistributionOnSn prod = exact_distribution(req.n, weight_product(x, y));
    bool equal = conv == prod;
    std::vector<Permutation> perms = all_permutations(req.n);
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json prob_map = json::object();
            for (std::uint64_t r = 0; r < conv.support_size(); ++r)
                prob_map[perms[r].to_string()] = to_string(conv.at_rank(r));
            json params{{"n", req.n},
                        {"weights", sx.to_string()},
                        {"weights2", sy.to_string()}};
            json result{{"equal", equal},
                        {"probs", prob_map},
                        {"total", to_string(conv.total())}};
            print_envelope(out, "convolve", params, result);
            break;
        }
        case Format::csv:
            out << "permutation,convolved,product_weights\n";
            for (std::uint64_t r = 0; r < conv.support_size(); ++r)
                out << perms[r].to_string() << ',' << csv_escape(to_string(conv.at_rank(r)))
                    << ',' << csv_escape(to_string(prod.at_rank(r))) << '\n';
            break;
        case Format::text:
            out << (equal ? "convolution equals the product-weight law on "
                          : "MISMATCH against the product-weight law on ")
                << conv.support_size() << " permutations\n";
            break;
    }
    return equal ? 0 : 1;
}

int cmd_bhr(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    WeightVector x = spec.materialize();
    TransitionMatrix face_route = bhr_transition_matrix(req.n, x);
    TransitionMatrix direct = transition_matrix(req.n, x);
    bool equal = face_route == direct;
    Rational face_total = 0;
    std::uint64_t faces = 0;
    for (const auto& blocks : ordered_set_partitions(req.n)) {
        face_total += face_weight(blocks, x);
        ++faces;
    }
    bool total_ok = !spec.is_finite() || face_total == 1;
    std::vector<Permutation> perms = all_permutations(req.n);
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"equal", equal},
                        {"dim", face_route.dim()},
                        {"faces", faces},
                        {"face_weight_total", to_string(face_total)}};
            print_envelope(out, "bhr", params, result);
            break;
        }
        case Format::csv:
            out << "from,to,face_route,direct_route\n";
            for (std::uint64_t u = 0; u < face_route.dim(); ++u)
                for (std::uint64_t v = 0; v < face_route.dim(); ++v)
                    out << perms[u].to_string() << ',' << perms[v].to_string() << ','
                        << csv_escape(to_string(face_route.entry(u, v))) << ','
                        << csv_escape(to_string(direct.entry(u, v))) << '\n';
            break;
        case Format::text:
            out << (equal ? "face walk equals the direct walk on " : "MISMATCH on ")
                << face_route.dim() << "x" << face_route.dim() << " entries; " << faces
                << " faces with total weight " << to_string(face_total) << '\n';
            break;
    }
    return equal && total_ok ? 0 : 1;
}

int cmd_majinv(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    MajInvReport rep = maj_inv_report(req.n, spec.materialize());
    auto coeff_list = [](const Polynomial& p) {
        json arr = json::array();
        for (const Rational& c : p.coeffs()) arr.push_back(to_string(c));
        return arr;
    };
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"all_equal", rep.all_equal},
                        {"direct_available", rep.direct_available},
                        {"by_multiset", coeff_list(rep.by_multiset)},
                        {"by_schur", coeff_list(rep.by_schur)},
                        {"by_power_sum", coeff_list(rep.by_power_sum)},
                        {"polynomial", rep.by_multiset.to_string()}};
            result["by_maj"] = rep.direct_available ? coeff_list(rep.by_maj) : json(nullptr);
            result["by_inv"] = rep.direct_available ? coeff_list(rep.by_inv) : json(nullptr);
            print_envelope(out, "majinv", params, result);
            break;
        }
        case Format::csv: {
            out << "degree,coefficient\n";
            const auto& coeffs = rep.by_multiset.coeffs();
            for (size_t k = 0; k < coeffs.size(); ++k)
                out << k << ',' << csv_escape(to_string(coeffs[k])) << '\n';
            break;
        }
        case Format::text:
            out << rep.by_multiset.to_string() << '\n';
            out << (rep.all_equal ? "all routes agree" : "ROUTES DISAGREE") << " ("
                << (rep.direct_available ? 5 : 3) << " routes)\n";
            break;
    }
    return rep.all_equal ? 0 : 1;
}

int cmd_moments(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    if (!spec.is_finite())
        throw std::invalid_argument(
            "moment formulas need weights summing to exactly 1; geometric weights truncate");
    MomentReport rep = maj_moments(req.n, spec.materialize());
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"e_maj", to_string(rep.e_maj)},
                        {"e_maj_factorial2", to_string(rep.e_maj_factorial2)},
                        {"formula_e_maj", to_string(rep.formula_e_maj)},
                        {"formula_e_maj_factorial2", to_string(rep.formula_e_maj_factorial2)},
                        {"uniform_e_maj", to_string(rep.e_u_maj)},
                        {"uniform_e_maj_factorial2", to_string(rep.e_u_maj_factorial2)},
                        {"equal", rep.equal}};
            print_envelope(out, "moments", params, result);
            break;
        }
        case Format::csv:
            out << "n,weights,e_maj,e_maj_factorial2,formula_e_maj,formula_e_maj_factorial2,"
                   "uniform_e_maj,uniform_e_maj_factorial2,equal\n";
            out << req.n << ',' << csv_escape(spec.to_string()) << ','
                << csv_escape(to_string(rep.e_maj)) << ','
                << csv_escape(to_string(rep.e_maj_factorial2)) << ','
                << csv_escape(to_string(rep.formula_e_maj)) << ','
                << csv_escape(to_string(rep.formula_e_maj_factorial2)) << ','
                << csv_escape(to_string(rep.e_u_maj)) << ','
                << csv_escape(to_string(rep.e_u_maj_factorial2)) << ','
                << (rep.equal ? "true" : "false") << '\n';
            break;
        case Format::text:
            out << "E(maj) = " << to_string(rep.e_maj) << " (formula "
                << to_string(rep.formula_e_maj) << ")\n";
            out << "E(maj(maj-1)) = " << to_string(rep.e_maj_factorial2) << " (formula "
                << to_string(rep.formula_e_maj_factorial2) << ")\n";
            out << (rep.equal ? "formulas agree" : "FORMULAS DISAGREE") << '\n';
            break;
    }
    return rep.equal ? 0 : 1;
}

int cmd_cycles(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    auto law = cycle_type_distribution(req.n, spec.materialize());
    Rational total = 0;
    for (const auto& [lambda, p] : law) total += p;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json prob_map = json::object();
            for (const auto& [lambda, p] : law) prob_map[lambda.to_string()] = to_string(p);
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            print_envelope(out, "cycles", params,
                           json{{"probs", prob_map}, {"total", to_string(total)}});
            break;
        }
        case Format::csv:
            out << "cycle_type,prob\n";
            for (const auto& [lambda, p] : law)
                out << csv_escape(lambda.to_string()) << ',' << csv_escape(to_string(p)) << '\n';
            break;
        case Format::text:
            for (const auto& [lambda, p] : law)
                out << lambda.to_string() << ' ' << to_string(p) << '\n';
            out << "total " << to_string(total) << '\n';
            break;
    }
    return 0;
}

int cmd_rsk(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    RSKReport rep = rsk_laws(req.n, spec.materialize());
    Rational total = 0;
    for (const auto& [lambda, p] : rep.shape_probs) total += p;
    bool pass = !rep.per_tableau_checked || rep.per_tableau_ok;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json prob_map = json::object();
            for (const auto& [lambda, p] : rep.shape_probs)
                prob_map[lambda.to_string()] = to_string(p);
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"shape_probs", prob_map},
                        {"total", to_string(total)},
                        {"per_tableau_checked", rep.per_tableau_checked},
                        {"per_tableau_ok", rep.per_tableau_ok}};
            print_envelope(out, "rsk", params, result);
            break;
        }
        case Format::csv:
            out << "shape,prob\n";
            for (const auto& [lambda, p] : rep.shape_probs)
                out << csv_escape(lambda.to_string()) << ',' << csv_escape(to_string(p)) << '\n';
            break;
        case Format::text:
            for (const auto& [lambda, p] : rep.shape_probs)
                out << lambda.to_string() << ' ' << to_string(p) << '\n';
            out << "total " << to_string(total) << '\n';
            if (rep.per_tableau_checked)
                out << "per-tableau fibers " << (rep.per_tableau_ok ? "ok" : "FAILED") << '\n';
            break;
    }
    return pass ? 0 : 1;
}

int cmd_descents(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    auto law = descent_set_distribution(req.n, spec.materialize());
    Rational total = 0;
    for (const auto& [alpha, p] : law) total += p;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json prob_map = json::object();
            for (const auto& [alpha, p] : law) prob_map[alpha.to_string()] = to_string(p);
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            print_envelope(out, "descents", params,
                           json{{"probs", prob_map}, {"total", to_string(total)}});
            break;
        }
        case Format::csv:
            out << "composition,prob\n";
            for (const auto& [alpha, p] : law)
                out << csv_escape(alpha.to_string()) << ',' << csv_escape(to_string(p)) << '\n';
            break;
        case Format::text:
            for (const auto& [alpha, p] : law)
                out << alpha.to_string() << ' ' << to_string(p) << '\n';
            out << "total " << to_string(total) << '\n';
            break;
    }
    return 0;
}

int cmd_lis(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    Rational value = expected_lis(req.n, spec);
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n}, {"weights", spec.to_string()}};
            json result{{"expected_lis", to_string(value)},
                        {"expected_lis_decimal", decimal_string(value, 12)}};
            print_envelope(out, "lis", params, result);
            break;
        }
        case Format::csv:
            out << "n,weights,expected_lis,expected_lis_decimal\n";
            out << req.n << ',' << csv_escape(spec.to_string()) << ','
                << csv_escape(to_string(value)) << ',' << decimal_string(value, 12) << '\n';
            break;
        case Format::text:
            out << to_string(value) << '\n';
            break;
    }
    return 0;
}

int cmd_f1(const Request& req, std::ostream& out) {
    std::vector<F1Row> rows = f1_table(req.f1_max);
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json arr = json::array();
            for (const F1Row& row : rows)
                arr.push_back(json{{"n", row.n},
                                   {"f1", to_string(row.f1)},
                                   {"f1_over_n", to_string(row.f1_over_n)},
                                   {"f1_over_n_decimal", row.f1_over_n_decimal}});
            json params{{"max", req.f1_max}};
            print_envelope(out, "f1", params, json{{"rows", arr}});
            break;
        }
        case Format::csv:
            out << "n,f1,f1_over_n,f1_over_n_decimal\n";
            for (const F1Row& row : rows)
                out << row.n << ',' << csv_escape(to_string(row.f1)) << ','
                    << csv_escape(to_string(row.f1_over_n)) << ',' << row.f1_over_n_decimal
                    << '\n';
            break;
        case Format::text:
            for (const F1Row& row : rows)
                out << row.n << ' ' << to_string(row.f1) << ' ' << row.f1_over_n_decimal << '\n';
            break;
    }
    return 0;
}

int cmd_mc(const Request& req, std::ostream& out) {
    WeightSpec spec = WeightSpec::parse(req.weights);
    Rational threshold = parse_rational(req.threshold);
    MonteCarloReport rep = mc_compare(req.n, spec, req.samples, req.seed, threshold);
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json params{{"n", req.n},
                        {"weights", spec.to_string()},
                        {"samples", req.samples},
                        {"seed", req.seed},
                        {"threshold", to_string(threshold)}};
            json result{{"tv", to_string(rep.tv_distance)},
                        {"tv_decimal", decimal_string(rep.tv_distance, 6)},
                        {"max_deviation", to_string(rep.max_deviation)},
                        {"max_deviation_decimal", decimal_string(rep.max_deviation, 6)},
                        {"reproducible", rep.reproducible},
                        {"pass", rep.pass}};
            print_envelope(out, "mc", params, result);
            break;
        }
        case Format::csv:
            out << "n,weights,samples,seed,tv_decimal,max_deviation_decimal,reproducible,"
                   "pass\n";
            out << req.n << ',' << csv_escape(spec.to_string()) << ',' << req.samples << ','
                << req.seed << ',' << decimal_string(rep.tv_distance, 6) << ','
                << decimal_string(rep.max_deviation, 6) << ','
                << (rep.reproducible ? "true" : "false") << ','
                << (rep.pass ? "true" : "false") << '\n';
            break;
        case Format::text:
            out << "tv " << decimal_string(rep.tv_distance, 6) << " threshold "
                << to_string(rep.threshold) << "; max deviation "
                << decimal_string(rep.max_deviation, 6) << "; "
                << (rep.reproducible ? "reproducible" : "RE-RUN DIFFERED") << "; "
                << (rep.pass ? "pass" : "FAIL") << '\n';
            break;
    }
    return rep.pass ? 0 : 1;
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    if (req.n > 0) opts.n = req.n;
    if (!req.weights.empty()) opts.weights = WeightSpec::parse(req.weights);
    opts.samples = req.samples;
    opts.seed = req.seed;
    std::vector<VerificationResult> results =
        req.suite == "all" ? run_all(opts) : run_suite(req.suite, opts);
    double total_ms = 0;
    for (const VerificationResult& r : results) {
        err << "# " << r.name << ": " << std::fixed << std::setprecision(3) << r.elapsed_ms
            << " ms\n";
        total_ms += r.elapsed_ms;
    }
    err << "# total: " << std::fixed << std::setprecision(3) << total_ms << " ms\n";
    std::uint64_t passed = 0;
    for (const VerificationResult& r : results) passed += r.pass ? 1 : 0;
    const std::uint64_t failed = results.size() - passed;
    switch (parse_format(req.format)) {
        case Format::json_out: {
            json arr = json::array();
            for (const VerificationResult& r : results)
                arr.push_back(json{{"name", r.name},
                                   {"pass", r.pass},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"detail", r.detail}});
            json params{{"suite", req.suite}};
            if (req.n > 0) params["n"] = req.n;
            if (!req.weights.empty()) params["weights"] = opts.weights->to_string();
            params["samples"] = req.samples;
            params["seed"] = req.seed;
            json result{{"checks", arr}, {"passed", passed}, {"failed", failed}};
            print_envelope(out, "verify", params, result);
            break;
        }
        case Format::csv:
            out << "name,pass,lhs,rhs,detail\n";
            for (const VerificationResult& r : results)
                out << csv_escape(r.name) << ',' << (r.pass ? "true" : "false") << ','
                    << csv_escape(r.lhs) << ',' << csv_escape(r.rhs) << ','
                    << csv_escape(r.detail) << '\n';
            break;
        case Format::text:
            for (const VerificationResult& r : results)
                out << (r.pass ? "PASS " : "FAIL ") << r.name << " | " << r.lhs
                    << (r.pass ? " == " : " != ") << r.rhs << " | " << r.detail << '\n';
            out << results.size() << " checks: " << passed << " passed, " << failed
                << " failed\n";
            break;
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request req;
    CLI::App app{"exact distributions on permutations induced by weighted letters"};
    app.require_subcommand(1);

    app.add_option("--cap-factorial", req.cap_values.factorial,
                   "largest n for full S_n enumeration")
        ->capture_default_str();
    app.add_option("--cap-oracle-words", req.cap_values.oracle_words,
                   "largest |alphabet|^n for brute-force word sums")
        ->capture_default_str();
    app.add_option("--cap-matrix", req.cap_values.matrix,
                   "largest n for n! x n! transition matrices")
        ->capture_default_str();
    app.add_option("--cap-bhr", req.cap_values.bhr,
                   "largest n for ordered-set-partition enumeration")
        ->capture_default_str();
    app.add_option("--cap-partition-sum", req.cap_values.partition_sum,
                   "largest n for partition-indexed sums")
        ->capture_default_str();

    auto add_n = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--n", req.n, "permutation size")->check(CLI::Range(1, 1000));
        if (required) opt->required();
    };
    auto add_weights = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--weights", req.weights,
                                    "letter weights: x=1/2,1/3,1/6 | q=4 | geom:t=1/2");
        if (required) opt->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", req.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", req.seed, "generator seed")->capture_default_str();
    };

    std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;
    auto sub = [&](const char* name, const char* desc, std::function<int()> fn) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        add_format(s);
        handlers.emplace_back(s, std::move(fn));
        return s;
    };

    {
        CLI::App* s = sub("sample", "draw seeded permutations",
                          [&] { return cmd_sample(req, out); });
        add_n(s, true);
        add_weights(s, true);
        add_seed(s);
        s->add_option("--count", req.count, "number of draws")->capture_default_str();
    }
    {
        CLI::App* s = sub("prob", "exact probability of one permutation",
                          [&] { return cmd_prob(req, out); });
        add_n(s, false);
        s->add_option("--perm", req.perm, "one-line word, e.g. 213 or 2,1,3")->required();
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("dist", "exact probabilities of every permutation",
                          [&] { return cmd_dist(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("oracle", "compare against the brute-force word sum",
                          [&] { return cmd_oracle(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("spectrum", "walk eigenvalues and trace identities",
                          [&] { return cmd_spectrum(req, out); });
        add_n(s, true);
        add_weights(s, true);
        s->add_option("--max-power", req.max_power, "highest matrix power to trace")
            ->check(CLI::Range(1, 4))
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("convolve", "convolve two weight laws and compare",
                          [&] { return cmd_convolve(req, out); });
        add_n(s, true);
        add_weights(s, true);
        s->add_option("--weights2", req.weights2, "second letter-weight spec")->required();
    }
    {
        CLI::App* s = sub("bhr", "face walk versus the direct walk",
                          [&] { return cmd_bhr(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("majinv", "major-index generating polynomial, five routes",
                          [&] { return cmd_majinv(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("moments", "first two factorial moments of the major index",
                          [&] { return cmd_moments(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("cycles", "law of the cycle type",
                          [&] { return cmd_cycles(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("rsk", "insertion shape law and tableau fibers",
                          [&] { return cmd_rsk(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("descents", "law of the descent composition",
                          [&] { return cmd_descents(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("lis", "expected longest increasing subsequence",
                          [&] { return cmd_lis(req, out); });
        add_n(s, true);
        add_weights(s, true);
    }
    {
        CLI::App* s = sub("f1", "first-order uniform-limit coefficients",
                          [&] { return cmd_f1(req, out); });
        s->add_option("--max", req.f1_max, "table depth")
            ->check(CLI::Range(1, 10000))
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("mc", "seeded Monte Carlo versus the exact law",
                          [&] { return cmd_mc(req, out); });
        add_n(s, true);
        add_weights(s, true);
        add_seed(s);
        s->add_option("--samples", req.samples, "number of draws")->capture_default_str();
        s->add_option("--threshold", req.threshold, "total-variation pass bound")
            ->capture_default_str();
    }
    {
        CLI::App* s = sub("verify", "bundled acceptance suites",
                          [&] { return cmd_verify(req, out, err); });
        s->add_option("--suite", req.suite, "suite name or all")->capture_default_str();
        add_n(s, false);
        add_weights(s, false);
        add_seed(s);
        s->add_option("--samples", req.samples, "sampler-suite draws")->capture_default_str();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        caps() = req.cap_values;
        for (const auto& [s, fn] : handlers)
            if (app.got_subcommand(s)) return fn();
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qshuffle
