#include <rdlab/filter.hpp>
#include <rdlab/geometry.hpp>
#include <rdlab/lifting.hpp>
#include <rdlab/parametrization.hpp>
#include <rdlab/search.hpp>
#include <rdlab/serialize.hpp>
#include <rdlab/systems.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace rdlab;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNegative = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitBudget = 5;

PolySystem make_system(const std::string& name, const std::string& a_text) {
    if (name == "three-and-one") return three_and_one_system();
    if (name == "two-dist-pair") return two_dist_pair_system(Rational::parse(a_text));
    if (name == "scaled") return scaled_two_dist_mod3_system();
    throw std::invalid_argument("unknown system: " + name);
}

// The census/count/exist constraint each system carries by convention:
// the forced residue pattern for three-and-one, unit z', u', mu' for the
// scaled system, nothing for the quartic pair.
ResidueConstraint system_constraint(const std::string& name) {
    if (name == "three-and-one") return guy_constraint;
    if (name == "scaled")
        return [](const std::vector<std::uint8_t>& v) {
            return v[1] != 0 && v[2] != 0 && v[3] != 0;
        };
    return {};
}

int cmd_check_point(const std::string& a_text, const std::string& x_text,
                    const std::string& y_text) {
    Rational a = Rational::parse(a_text);
    Rational x = Rational::parse(x_text);
    Rational y = Rational::parse(y_text);
    Rectangle rect(a);
    Point p{x, y};
    auto rep = measure_distances(rect, p);
    Rational z = Rational(2) * y;
    auto verdict = filter_verdict(a, x, z);
    nlohmann::json j = distance_report_json(rep);
    j["rational_distance"] = rep.all_rational();
    j["filter"] = verdict.str();
    j["v3x"] = v3(x).str();
    j["v3z"] = v3(z).str();
    auto line = classify_trivial(rect, p);
    if (line)
        j["trivial_line"] = line_tag_str(*line);
    else
        j["trivial_line"] = nullptr;
    std::cout << j.dump() << "\n";
    return rep.all_rational() ? kExitOk : kExitNegative;
}

int cmd_search(const std::string& a_text, long long height, bool no_filter, bool include_trivial,
               const std::string& out_path) {
    Rational a = Rational::parse(a_text);
    auto [records, st] = search_rectangle(a, height, !no_filter, !include_trivial);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        out = &file;
    }
    *out << "# rdlab-search a=" << a.str() << " height=" << height
         << " filter=" << (no_filter ? "off" : "on")
         << " trivial=" << (include_trivial ? "included" : "excluded")
         << " height_model=max(|num|,den) strata=complete\n";
    for (const auto& r : records) *out << point_record_json(r).dump() << "\n";
    std::string stats = "# stats total=" + std::to_string(st.total_pairs) +
                        " pruned=" + std::to_string(st.pruned_by_filter) +
                        " checked=" + std::to_string(st.checked) +
                        " found=" + std::to_string(st.found) +
                        " fraction=" + st.pruned_fraction.str();
    *out << stats << "\n";
    if (out != &std::cout) std::cout << stats << "\n";
    return kExitOk;
}

int cmd_filter_stats(const std::string& a_text, long long height) {
    Rational a = Rational::parse(a_text);
    auto st = filter_stats(a, height);
    std::cout << "total,pruned,fraction\n"
              << st.total_pairs << "," << st.pruned_by_filter << ","
              << st.pruned_fraction.str() << "\n";
    return kExitOk;
}

int cmd_lift_count(const std::string& system, const std::string& a_text, unsigned levels) {
    auto sys = make_system(system, a_text);
    auto counts = count_constrained(sys, system_constraint(system), levels);
    std::cout << "level,count,quotient\n";
    for (std::size_t k = 0; k < counts.size(); ++k) {
        std::cout << (k + 1) << "," << counts[k] << ",";
        if (k > 0 && counts[k - 1] != 0)
            std::cout << Rational(Integer(counts[k]), Integer(counts[k - 1])).str();
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_lift_exist(const std::string& system, const std::string& a_text, unsigned depth,
                   std::uint64_t budget, bool has_budget) {
    auto sys = make_system(system, a_text);
    std::optional<std::uint64_t> b;
    if (has_budget) b = budget;
    auto res = lift_exists_to_depth(sys, system_constraint(system), depth, b);
    if (res.witness) {
        bool verified = true;
        for (const auto& r : eval_mod(sys, *res.witness))
            if (r != 0) verified = false;
        nlohmann::json j = witness_json(sys.name, *res.witness);
        j["nodes"] = res.nodes;
        j["verified"] = verified;
        std::cout << j.dump() << "\n";
        return verified ? kExitOk : kExitNegative;
    }
    nlohmann::json j;
    j["system"] = sys.name;
    j["witness"] = nullptr;
    j["nodes"] = res.nodes;
    j["reason"] = res.budget_hit ? "budget" : "exhausted";
    std::cout << j.dump() << "\n";
    return res.budget_hit ? kExitBudget : kExitExhausted;
}

int cmd_lift_census(const std::string& system, const std::string& a_text) {
    auto sys = make_system(system, a_text);
    auto hist = rank_census(sys, system_constraint(system));
    std::cout << "rank,count\n";
    for (const auto& [rank, count] : hist) std::cout << rank << "," << count << "\n";
    return kExitOk;
}

Parametrization load_param(const std::string& builtin, const std::string& file) {
    if (!builtin.empty()) {
        if (builtin == "octic") return builtin_octic();
        throw std::invalid_argument("unknown builtin parametrization: " + builtin);
    }
    if (file.empty()) throw std::invalid_argument("need --builtin or --file");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open parametrization file: " + file);
    nlohmann::json j;
    in >> j;
    return parametrization_parse(j);
}

int cmd_param_verify(const std::string& builtin, const std::string& file) {
    auto par = load_param(builtin, file);
    auto rep = verify_identity(par);
    nlohmann::json j;
    j["holds"] = rep.holds;
    j["sampled_points"] = rep.residuals.size();
    std::uint64_t nonzero = 0;
    for (const auto& [t, r] : rep.residuals)
        if (r != 0) ++nonzero;
    j["nonzero_residuals"] = nonzero;
    if (!rep.holds) {
        // deterministic example: smallest |t| with a nonzero residual,
        // positive t first on ties
        const std::pair<Integer, Integer>* best = nullptr;
        for (const auto& s : rep.residuals) {
            if (s.second == 0) continue;
            if (!best) {
                best = &s;
                continue;
            }
            Integer ct = abs(s.first), bt = abs(best->first);
            if (ct < bt || (ct == bt && s.first > best->first)) best = &s;
        }
        j["example"] = {{"t", best->first.str()}, {"residual", best->second.str()}};
    }
    std::cout << j.dump() << "\n";
    return rep.holds ? kExitOk : kExitNegative;
}

int cmd_param_obstruct(const std::string& builtin, const std::string& file) {
    auto par = load_param(builtin, file);
    auto rep = obstruction_check(par);
    nlohmann::json j;
    bool obstructed = rep.verdict == ObstructionReport::Verdict::Obstructed;
    j["verdict"] = obstructed ? "Obstructed" : "Inconclusive";
    j["case_neg"] = {{"deg_Z", rep.case_neg.deg_Z},
                     {"deg_T", rep.case_neg.deg_T},
                     {"v3_lead_Z", rep.case_neg.v3_lead_Z.str()},
                     {"v3_lead_T", rep.case_neg.v3_lead_T.str()},
                     {"contradiction", rep.case_neg.contradiction}};
    j["case_nonneg"] = {{"T_mod3", {rep.case_nonneg.T_mod3[0], rep.case_nonneg.T_mod3[1],
                                    rep.case_nonneg.T_mod3[2]}},
                        {"contradiction", rep.case_nonneg.contradiction}};
    std::cout << j.dump() << "\n";
    return obstructed ? kExitOk : kExitNegative;
}

int cmd_gen_two_dist(long long max_leg) {
    auto sols = gen_two_distance(max_leg);
    std::cout << "x,y,r1,r2\n";
    for (const auto& s : sols)
        std::cout << s.point.x.str() << "," << s.point.y.str() << "," << s.r1.str() << ","
                  << s.r2.str() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rdlab: rational-distance toolkit for the four-corner problem"};
    app.require_subcommand(1);

    std::string a_text = "1", x_text, y_text, out_path, system = "three-and-one";
    std::string par_builtin, par_file;
    long long height = 0, max_leg = 0;
    unsigned levels = 0, depth = 0;
    std::uint64_t budget = 0;

    auto* check = app.add_subcommand("check-point", "exact four-distance check of one point");
    check->add_option("--a", a_text, "rectangle side")->required();
    check->add_option("--x", x_text, "x coordinate")->required();
    check->add_option("--y", y_text, "y coordinate")->required();

    auto* search = app.add_subcommand("search", "bounded-height rectangle search");
    search->add_option("--a", a_text, "rectangle side")->required();
    search->add_option("--height", height, "height bound")->required()->check(CLI::PositiveNumber);
    bool no_filter = false, include_trivial = false;
    search->add_flag("--no-filter", no_filter, "disable the 3-adic filter");
    search->add_flag("--include-trivial", include_trivial, "keep points on the six trivial lines");
    search->add_option("--out", out_path, "write records to this file");

    auto* fstats = app.add_subcommand("filter-stats", "filter exclusion fraction over a grid");
    fstats->add_option("--a", a_text, "rectangle side")->required();
    fstats->add_option("--height", height, "height bound")->required()->check(CLI::PositiveNumber);

    auto* lift = app.add_subcommand("lift", "mod-3^k lifting engine");
    lift->require_subcommand(1);
    auto* lcount = lift->add_subcommand("count", "constrained solution counts per level");
    lcount->add_option("--system", system, "three-and-one | two-dist-pair | scaled");
    lcount->add_option("--a", a_text, "side for two-dist-pair");
    lcount->add_option("--levels", levels, "levels to count")->required()->check(CLI::PositiveNumber);
    auto* lexist = lift->add_subcommand("exist", "depth-first liftability witness");
    lexist->add_option("--system", system, "three-and-one | two-dist-pair | scaled");
    lexist->add_option("--a", a_text, "side for two-dist-pair");
    lexist->add_option("--depth", depth, "target level")->required()->check(CLI::PositiveNumber);
    auto* budget_opt = lexist->add_option("--budget", budget, "node budget");
    auto* lcensus = lift->add_subcommand("census", "Jacobian rank histogram of level-1 solutions");
    lcensus->add_option("--system", system, "three-and-one | two-dist-pair | scaled");
    lcensus->add_option("--a", a_text, "side for two-dist-pair");

    auto* param = app.add_subcommand("param", "parametrization checks");
    param->require_subcommand(1);
    auto* pverify = param->add_subcommand("verify", "polynomial identity check");
    pverify->add_option("--builtin", par_builtin, "builtin name (octic)");
    pverify->add_option("--file", par_file, "parametrization JSON file");
    auto* pobstruct = param->add_subcommand("obstruct", "3-adic obstruction check");
    pobstruct->add_option("--builtin", par_builtin, "builtin name (octic)");
    pobstruct->add_option("--file", par_file, "parametrization JSON file");

    auto* gen = app.add_subcommand("gen", "solution generators");
    gen->require_subcommand(1);
    auto* gtwo = gen->add_subcommand("two-dist", "shared-leg two-distance solutions");
    gtwo->add_option("--max-leg", max_leg, "largest shared leg")->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*check) return cmd_check_point(a_text, x_text, y_text);
        if (*search) return cmd_search(a_text, height, no_filter, include_trivial, out_path);
        if (*fstats) return cmd_filter_stats(a_text, height);
        if (*lcount) return cmd_lift_count(system, a_text, levels);
        if (*lexist) return cmd_lift_exist(system, a_text, depth, budget, budget_opt->count() > 0);
        if (*lcensus) return cmd_lift_census(system, a_text);
        if (*pverify) return cmd_param_verify(par_builtin, par_file);
        if (*pobstruct) return cmd_param_obstruct(par_builtin, par_file);
        if (*gtwo) return cmd_gen_two_dist(max_leg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
