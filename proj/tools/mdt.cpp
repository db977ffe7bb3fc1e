// mdt: command-line front end for the multidimensional threshold library.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage, input or budget
// error.

#include "mdt/diversity.hpp"
#include "mdt/duality.hpp"
#include "mdt/errors.hpp"
#include "mdt/io.hpp"
#include "mdt/planar.hpp"
#include "mdt/selfdual2.hpp"
#include "mdt/threshold.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using mdt::io::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string format = "text";
    std::uint64_t budget = mdt::kDefaultBudget;
};

void emit(const Options& opt, const Json& report) {
    if (opt.format == "json") std::cout << report.dump(2) << '\n';
    else std::cout << mdt::io::render_text(report);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json profile_json(const mdt::MultiMatrix& a) { return mdt::profile(a).rates; }

Json matrices_json(const std::vector<mdt::MultiMatrix>& list) {
    Json out = Json::array();
    for (const auto& a : list) out.push_back(mdt::io::matrix_to_json(a));
    return out;
}

// A matrix file, or a weight-table file whose threshold matrix is analysed.
struct LoadedInput {
    mdt::MultiMatrix matrix;
    std::optional<mdt::WeightTable> table;
};

LoadedInput load_input(const std::string& path) {
    const Json j = mdt::io::read_json_file(path);
    if (j.is_object() && j.contains("weights")) {
        mdt::WeightTable t = mdt::io::table_from_json(j);
        return {mdt::matrix_from_weights(t), std::move(t)};
    }
    return {mdt::io::matrix_from_json(j), std::nullopt};
}

Json extremal_json(const mdt::MultiMatrix& a, Json& report) {
    const auto ext = mdt::is_extremal(a);
    const auto [cover_weight, cover] = mdt::optimal_cover(a);
    report["extremal"] = yes_no(ext.is_extremal);
    report["optimal_weight"] = mdt::io::rat_to_json(ext.optimal_weight);
    report["deficiency"] = mdt::io::rat_to_json(ext.deficiency);
    report["has_polydiagonal"] = yes_no(ext.has_polydiagonal);
    report["blocking_entry"] = ext.blocking_entry ? Json(*ext.blocking_entry) : Json(nullptr);
    report["optimal_polyplex"] = mdt::io::polyplex_to_json(ext.optimal_polyplex);
    report["optimal_cover"] = mdt::io::table_to_json(cover);
    report["cover_weight"] = mdt::io::rat_to_json(cover_weight);
    report["lp_solves"] = ext.lp_solves;
    return mdt::io::table_to_json(cover);
}

int run_analyze(const Options& opt, const std::string& path) {
    const LoadedInput in = load_input(path);
    const auto& a = in.matrix;
    Json r;
    r["source"] = in.table ? "weights" : "matrix";
    r["matrix"] = mdt::io::matrix_to_json(a);
    r["support_size"] = a.support_size();
    r["profile"] = profile_json(a);
    r["selfdual"] = a.order() == 2 ? Json(yes_no(mdt::is_selfdual(a))) : Json(nullptr);
    const auto cert = mdt::is_threshold(a);
    r["threshold"] = yes_no(cert.has_value());
    r["threshold_certificate"] = cert ? mdt::io::table_to_json(cert->table, cert->margin) : Json(nullptr);
    extremal_json(a, r);
    Json diversity = nullptr;
    Json essential = nullptr;
    if (a.order() == 2 && r["extremal"] == "yes") {
        const auto cover = mdt::optimal_cover(a).second;
        if (auto w = mdt::essential_weights_of(cover); w && !w->weights.empty()) {
            diversity = mdt::diversity_of(*w);
            essential = Json::array();
            for (const auto& x : w->weights) essential.push_back(mdt::io::rat_to_json(x));
        }
    }
    r["diversity"] = diversity;
    r["essential_weights"] = essential;
    emit(opt, r);
    return kOk;
}

int run_threshold(const Options& opt, const std::string& path) {
    const auto a = load_input(path).matrix;
    const auto cert = mdt::is_threshold(a);
    Json r;
    r["matrix"] = mdt::io::matrix_to_json(a);
    r["threshold"] = yes_no(cert.has_value());
    r["certificate"] = cert ? mdt::io::table_to_json(cert->table, cert->margin) : Json(nullptr);
    emit(opt, r);
    return kOk;
}

int run_extremal(const Options& opt, const std::string& path) {
    const auto a = load_input(path).matrix;
    Json r;
    r["matrix"] = mdt::io::matrix_to_json(a);
    extremal_json(a, r);
    emit(opt, r);
    return kOk;
}

int run_enumerate(const Options& opt, int d, int n, const std::string& kind) {
    std::vector<mdt::MultiMatrix> classes;
    if (kind == "threshold") {
        classes = mdt::enumerate_threshold(d, n, opt.budget);
    } else {
        if (n != 2) throw mdt::OrderError("extremal enumeration is available for order 2 (use planar for d = 2)");
        classes = mdt::enumerate_extremal_order2(d, opt.budget);
    }
    Json r;
    r["kind"] = kind;
    r["d"] = d;
    r["n"] = n;
    r["count"] = classes.size();
    r["classes"] = matrices_json(classes);
    emit(opt, r);
    return kOk;
}

int run_counterexamples(const Options& opt, const std::string& export_dir) {
    Json rows = Json::array();
    bool all_passed = true;
    for (const auto& rec : mdt::builtin_counterexamples()) {
        const auto report = mdt::check_counterexample(rec);
        std::string clauses;
        for (const auto& c : report.clauses) clauses += c.passed ? c.clause : '-';
        Json row;
        row["label"] = rec.label;
        row["q"] = rec.q;
        row["support_size"] = report.support_size;
        row["deficiency"] = mdt::io::rat_to_json(report.deficiency);
        row["optimal_weight"] = mdt::io::rat_to_json(report.optimal_weight);
        row["clauses"] = clauses;
        row["result"] = report.passed() ? "pass" : "fail";
        if (!report.passed()) {
            for (const auto& c : report.clauses) {
                if (!c.passed) {
                    row["failure"] = std::string("(") + c.clause + ") " + c.detail;
                    break;
                }
            }
        }
        all_passed = all_passed && report.passed();
        rows.push_back(std::move(row));
        if (!export_dir.empty()) {
            std::filesystem::create_directories(export_dir);
            const std::string stem = export_dir + "/counterexample" + std::to_string(rec.label);
            mdt::io::write_json_file(stem + "_v1.json",
                                     mdt::io::table_to_json(mdt::essential_to_table(rec.first_vertex())));
            mdt::io::write_json_file(stem + "_v2.json",
                                     mdt::io::table_to_json(mdt::essential_to_table(rec.second_vertex())));
        }
    }
    Json r;
    r["records"] = std::move(rows);
    r["all_passed"] = yes_no(all_passed);
    emit(opt, r);
    return all_passed ? kOk : kVerificationFailed;
}

Json witness_json(const mdt::Div2Witness& w) {
    Json j;
    j["r_x"] = w.r_x;
    j["r_y"] = w.r_y;
    j["l_x"] = w.l_x;
    j["l_y"] = w.l_y;
    j["i"] = w.i;
    j["w_I"] = mdt::io::rat_to_json(w.w_I);
    j["w_J"] = mdt::io::rat_to_json(w.w_J);
    return j;
}

int run_div2_check(const Options& opt, const mdt::Div2Params& params) {
    params.validate();
    const auto witness = mdt::div2_admissible(params);
    const auto oracle = mdt::div2_oracle(params);
    Json r;
    r["params"] = {{"p", params.p}, {"s", params.s}, {"q", params.q}, {"t_x", params.t_x}, {"t_y", params.t_y}};
    r["admissible"] = yes_no(witness.has_value());
    r["witness"] = witness ? witness_json(*witness) : Json("inadmissible");
    r["polyplex"] = witness ? mdt::io::polyplex_to_json(mdt::div2_polyplex(params, *witness)) : Json(nullptr);
    r["oracle_extremal"] = yes_no(oracle.extremal);
    r["oracle_tuple_optimal"] = yes_no(oracle.tuple_optimal);
    r["oracle_deficiency"] = mdt::io::rat_to_json(oracle.deficiency);
    r["oracle_optimal_weight"] = mdt::io::rat_to_json(oracle.optimal_weight);
    const bool agree = witness.has_value() == oracle.admissible();
    r["agree"] = yes_no(agree);
    emit(opt, r);
    return agree ? kOk : kVerificationFailed;
}

int run_div2_sweep(const Options& opt, long max_q, int max_d) {
    const auto report = mdt::div2_cross_validate(max_q, max_d);
    Json admissible = Json::array();
    for (const auto& e : report.entries) {
        if (!e.witness && e.agree) continue;
        Json row;
        row["params"] = {e.params.p, e.params.s, e.params.q, e.params.t_x, e.params.t_y};
        row["admissible"] = yes_no(e.witness.has_value());
        row["oracle"] = yes_no(e.oracle.admissible());
        row["deficiency"] = mdt::io::rat_to_json(e.oracle.deficiency);
        row["certified"] = yes_no(e.certified);
        if (e.witness) row["i"] = e.witness->i;
        admissible.push_back(std::move(row));
    }
    Json r;
    r["max_q"] = max_q;
    r["max_d"] = max_d;
    r["instances"] = report.entries.size();
    r["admissible_count"] = report.admissible;
    r["disagreements"] = report.disagreements;
    r["certificate_failures"] = report.certificate_failures;
    r["observed_i"] = Json(std::vector<long>(report.observed_i.begin(), report.observed_i.end()));
    r["notable"] = std::move(admissible);
    emit(opt, r);
    return report.disagreements == 0 && report.certificate_failures == 0 ? kOk : kVerificationFailed;
}

int run_planar(const Options& opt, int n) {
    const auto census = mdt::enumerate_2d(n, opt.budget);
    Json r;
    r["n"] = n;
    r["extremal_count"] = census.extremal_classes.size();
    r["threshold_class_count"] = census.threshold_classes.size();
    r["threshold_matrix_count"] = census.threshold_count;
    r["stepped_count"] = census.stepped_count;
    r["extremal_classes"] = matrices_json(census.extremal_classes);
    r["threshold_classes"] = matrices_json(census.threshold_classes);
    emit(opt, r);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal and threshold multidimensional (0,1)-matrices"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "Cap on enumeration and equivalence search steps")
        ->capture_default_str();

    std::function<int()> action;

    std::string path;
    auto* analyze = app.add_subcommand("analyze", "Full report on a matrix or weight-table file");
    analyze->add_option("file", path, "Matrix or weight-table JSON file")->required();
    analyze->callback([&] { action = [&] { return run_analyze(opt, path); }; });

    auto* threshold = app.add_subcommand("threshold", "Threshold test with separating weights");
    threshold->add_option("file", path, "Matrix or weight-table JSON file")->required();
    threshold->callback([&] { action = [&] { return run_threshold(opt, path); }; });

    auto* extremal = app.add_subcommand("extremal", "Extremality, deficiency and optimal LP pair");
    extremal->add_option("file", path, "Matrix or weight-table JSON file")->required();
    extremal->callback([&] { action = [&] { return run_extremal(opt, path); }; });

    int d = 0;
    int n = 0;
    std::string kind = "threshold";
    auto* enumerate = app.add_subcommand("enumerate", "Classes of threshold or extremal order-2 matrices");
    enumerate->add_option("-d,--dim", d, "Dimension")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("-n,--order", n, "Order")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--kind", kind, "threshold or extremal")
        ->check(CLI::IsMember({"threshold", "extremal"}))
        ->capture_default_str();
    enumerate->callback([&] { action = [&] { return run_enumerate(opt, d, n, kind); }; });

    std::string export_dir;
    auto* counter = app.add_subcommand("counterexamples", "Verify the twelve nine-variable counterexamples");
    counter->add_option("--export", export_dir, "Write both vertices of each record as weight tables");
    counter->callback([&] { action = [&] { return run_counterexamples(opt, export_dir); }; });

    auto* div2 = app.add_subcommand("div2", "Diversity-2 characterization");
    div2->require_subcommand(1);
    mdt::Div2Params params;
    auto* check = div2->add_subcommand("check", "Witness search and LP oracle for one tuple");
    check->add_option("p", params.p)->required();
    check->add_option("s", params.s)->required();
    check->add_option("q", params.q)->required();
    check->add_option("t_x", params.t_x)->required();
    check->add_option("t_y", params.t_y)->required();
    check->callback([&] { action = [&] { return run_div2_check(opt, params); }; });
    long max_q = 8;
    int max_d = 6;
    auto* sweep = div2->add_subcommand("sweep", "Cross-validate the witness search against the LP oracle");
    sweep->add_option("--max-q", max_q)->capture_default_str()->check(CLI::PositiveNumber);
    sweep->add_option("--max-d", max_d)->capture_default_str()->check(CLI::PositiveNumber);
    sweep->callback([&] { action = [&] { return run_div2_sweep(opt, max_q, max_d); }; });

    auto* planar = app.add_subcommand("planar", "Two-dimensional classification");
    planar->require_subcommand(1);
    int planar_n = 0;
    auto* penum = planar->add_subcommand("enumerate", "Exhaustive census of n x n matrices");
    penum->add_option("n", planar_n, "Order")->required()->check(CLI::PositiveNumber);
    penum->callback([&] { action = [&] { return run_planar(opt, planar_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const mdt::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const mdt::ParseError& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
    } catch (const mdt::BudgetExceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << " (raise --budget)\n";
    } catch (const mdt::VerificationError& e) {
        std::cerr << "error: verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const mdt::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kUsage;
}
