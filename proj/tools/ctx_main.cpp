#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ctx/assignments.hpp"
#include "ctx/decide.hpp"
#include "ctx/io.hpp"
#include "ctx/scenario.hpp"

namespace {

struct CommonArgs {
    std::string input;
    std::string fixture;
    std::string format = "table";
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool need_input = true) {
    auto* input = cmd->add_option("input,--input", args.input, "scenario document path");
    auto* fixture =
        cmd->add_option("--fixture", args.fixture, "built-in scenario: yu-oh, yu-oh-completed, cabello-18");
    input->excludes(fixture);
    if (need_input) {
        // one of the two is required; validated after parse
    }
    cmd->add_option("--format", args.format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    cmd->add_option("--output", args.output, "write result to a file instead of stdout");
}

ctx::Scenario load(const CommonArgs& args) {
    if (!args.fixture.empty()) return ctx::load_fixture(args.fixture);
    if (!args.input.empty()) return ctx::load_scenario_file(args.input);
    throw ctx::ParseError("no scenario given: pass an input path or --fixture");
}

void emit(const CommonArgs& args, const std::string& text) {
    if (args.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(args.output);
    if (!out) throw std::runtime_error("cannot write '" + args.output + "'");
    out << text;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

ctx::RayVector parse_state(const std::string& csv, std::size_t dimension) {
    std::vector<ctx::Rat> coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(ctx::parse_rational(item));
    if (coords.size() != dimension)
        throw ctx::DimensionMismatchError("state has " + std::to_string(coords.size()) +
                                          " coordinates, scenario dimension is " +
                                          std::to_string(dimension));
    try {
        return ctx::RayVector::canonicalize(coords);
    } catch (const ctx::ZeroVectorError&) {
        throw ctx::ZeroStateError();
    }
}

int run(int argc, char** argv) {
    CLI::App app{"strong-contextuality analyzer for rank-one projector scenarios"};
    app.require_subcommand(1);

    CommonArgs complete_args;
    auto* complete = app.add_subcommand("complete", "complete deficient contexts to full bases");
    add_common(complete, complete_args);

    CommonArgs assign_args;
    auto* assignments = app.add_subcommand("assignments", "enumerate all global assignments");
    add_common(assignments, assign_args);

    CommonArgs decide_args;
    std::string method = "general";
    auto* decide = app.add_subcommand("decide", "decide existence of strongly contextual states");
    add_common(decide, decide_args);
    decide->add_option("--method", method, "general, 3d or both")
        ->check(CLI::IsMember({"general", "3d", "both"}));

    CommonArgs check_args;
    std::string state_csv;
    auto* check = app.add_subcommand("check-state", "test one state and print its empirical model");
    add_common(check, check_args);
    check->add_option("--state", state_csv, "comma-separated exact rationals, length d")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (complete->parsed()) {
        ctx::Scenario s = ctx::complete_contexts(load(complete_args));
        if (complete_args.format == "structured")
            emit(complete_args, ctx::scenario_to_json(s).dump(2) + "\n");
        else
            emit(complete_args, ctx::render_scenario_table(s));
        return 0;
    }

    if (assignments->parsed()) {
        ctx::Scenario s = ctx::complete_contexts(load(assign_args));
        auto list = ctx::enumerate_assignments(s);
        if (assign_args.format == "structured")
            emit(assign_args, ctx::assignments_to_json(s, list).dump(2) + "\n");
        else
            emit(assign_args, ctx::render_assignments_table(s, list));
        return 0;
    }

    if (decide->parsed()) {
        ctx::Scenario s = ctx::complete_contexts(load(decide_args));
        const auto start = std::chrono::steady_clock::now();
        auto list = ctx::enumerate_assignments(s);
        std::optional<ctx::AnalysisReport> general, specialized;
        if (method == "general" || method == "both")
            general = ctx::decide_general(s, list);
        if (method == "3d" || method == "both")
            specialized = ctx::decide_3d(s, list);
        if (general && specialized && general->verdict != specialized->verdict) {
            std::cerr << "internal error: methods disagree (" << ctx::to_string(general->verdict)
                      << " vs " << ctx::to_string(specialized->verdict) << ")\n";
            return 2;
        }
        const ctx::AnalysisReport& primary = specialized ? *specialized : *general;
        if (decide_args.format == "structured")
            emit(decide_args, ctx::report_to_json(primary, s, ms_since(start)).dump(2) + "\n");
        else {
            std::string text = ctx::render_report_table(primary, s);
            if (general && specialized) text += "methods agree: yes\n";
            emit(decide_args, text);
        }
        return 0;
    }

    if (check->parsed()) {
        ctx::Scenario s = ctx::complete_contexts(load(check_args));
        const ctx::RayVector state = parse_state(state_csv, s.dimension);
        auto list = ctx::enumerate_assignments(s);
        const ctx::StateCheck result = ctx::check_state(s, list, state);
        std::ostringstream os;
        if (result.strongly_contextual) {
            os << "StronglyContextual\n";
        } else {
            os << "NotStronglyContextual\n";
            os << "witness assignment (index " << *result.witness_assignment + 1
               << "), 1-valued rays:";
            for (std::size_t one : list[*result.witness_assignment].ones)
                os << " " << s.rays[one].label;
            os << "\n";
        }
        os << ctx::render_model_table(s, ctx::empirical_model(s, state));
        emit(check_args, os.str());
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ctx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ctx::UnknownFixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
