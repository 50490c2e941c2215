// corelate: compose, enumerate, verify and render morphisms from the command line.
//
// Exit codes: 0 ok, 1 check failure, 2 parse/usage error, 3 contract
// violation, 4 resource ceiling.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "corelate/ancestry.hpp"
#include "corelate/checks.hpp"
#include "corelate/cospan.hpp"
#include "corelate/errors.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/formula.hpp"
#include "corelate/logic.hpp"
#include "corelate/render.hpp"
#include "corelate/serialize.hpp"
#include "corelate/syn.hpp"

namespace {

using namespace corelate;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kContract = 3, kResource = 4 };

std::size_t env_ceiling(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoul(v);
    } catch (const std::exception&) {
        throw ParseError(std::string(name) + ": expected a natural number, got \"" + v + "\"");
    }
}

/// A JSON argument: literal text, @path for a file, or - for standard input.
Json read_json(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot open " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        text = arg;
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <class Fn>
auto dispatch(const std::string& category, Fn&& fn) {
    if (category == "syn") return fn([](const Json& j) { return syn_from_json(j); });
    if (category == "corel") return fn([](const Json& j) { return corel_from_json(j); });
    if (category == "cospan") return fn([](const Json& j) { return cospan_from_json(j); });
    if (category == "cocom") return fn([](const Json& j) { return cocom_from_json(j); });
    throw ParseError("unknown category \"" + category + "\"");
}

Json compose_any(const SynMorphism& f, const SynMorphism& g) { return to_json(then(f, g)); }
Json compose_any(const Corelation& f, const Corelation& g) { return to_json(corel_compose(f, g)); }
Json compose_any(const Cospan& f, const Cospan& g) { return to_json(cospan_compose(f, g)); }
Json compose_any(const CocomMap& f, const CocomMap& g) { return to_json(cocom_compose(f, g)); }

Json tensor_any(const SynMorphism& f, const SynMorphism& g) { return to_json(tensor(f, g)); }
Json tensor_any(const Corelation& f, const Corelation& g) { return to_json(corel_tensor(f, g)); }
Json tensor_any(const Cospan& f, const Cospan& g) { return to_json(cospan_tensor(f, g)); }
Json tensor_any(const CocomMap& f, const CocomMap& g) { return to_json(cocom_tensor(f, g)); }

Json pred_json(const Pred& p) { return Json(p.members()); }

void print_report(const CheckReport& report, bool as_json) {
    if (as_json) {
        std::cout << report.to_json().dump(2) << '\n';
        return;
    }
    std::cout << "suite " << report.suite << '\n';
    for (const Check& c : report.checks)
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    if (report.aborted) std::cout << "ABORTED  " << *report.aborted << '\n';
    std::cout << (report.passed() ? "ok" : "failed") << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ancestry corelations, cospans and predicate logic over finite sets"};
    app.require_subcommand(1);

    std::string category, lhs, rhs, input;
    std::size_t m = 0, n = 0;
    std::optional<std::size_t> max_apex, bound;
    std::string suite;
    bool as_json = false;
    std::uint64_t seed = 1;
    std::size_t cases = 10000;

    const std::vector<std::string> categories{"syn", "corel", "cospan", "cocom"};

    auto* compose = app.add_subcommand("compose", "Sequential composite lhs ; rhs");
    compose->add_option("category", category)->required()->check(CLI::IsMember(categories));
    compose->add_option("lhs", lhs, "JSON, @file or -")->required();
    compose->add_option("rhs", rhs, "JSON, @file or -")->required();

    auto* tens = app.add_subcommand("tensor", "Monoidal product lhs + rhs");
    tens->add_option("category", category)->required()->check(CLI::IsMember(categories));
    tens->add_option("lhs", lhs, "JSON, @file or -")->required();
    tens->add_option("rhs", rhs, "JSON, @file or -")->required();

    auto* ancestry = app.add_subcommand("ancestry", "Ancestry corelation of a syn morphism");
    ancestry->add_option("morphism", input, "JSON, @file or -")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Stream a hom-set as newline-delimited JSON");
    enumerate->add_option("category", category)->required()->check(CLI::IsMember(categories));
    enumerate->add_option("m", m)->required();
    enumerate->add_option("n", n)->required();
    enumerate->add_option("--max-apex", max_apex, "Cospan apex ceiling (default m + n)");

    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    check->add_flag("--json", as_json, "Machine-readable report");
    check->add_option("--bound", bound, "Suite size bound");
    check->add_option("--seed", seed, "Seed for randomized cases");
    check->add_option("--cases", cases, "Randomized cases per law");

    auto* render = app.add_subcommand("render", "Graphviz DOT for a morphism");
    render->add_option("category", category)->required()->check(CLI::IsMember(categories));
    render->add_option("morphism", input, "JSON, @file or -")->required();

    auto* fixpoint = app.add_subcommand("fixpoint", "Least and greatest fixed points of a formula system");
    fixpoint->add_option("problem", input, "JSON, @file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        const std::size_t max_bound = env_ceiling("CORELATE_MAX_BOUND", kDefaultCorelBound);
        const std::size_t max_quotient = env_ceiling("CORELATE_MAX_QUOTIENT", kDefaultQuotientBound);

        if (*compose || *tens) {
            const bool seq = static_cast<bool>(*compose);
            const Json a = read_json(lhs), b = read_json(rhs);
            Json out = dispatch(category, [&](auto parse) {
                auto f = parse(a);
                auto g = parse(b);
                return seq ? compose_any(f, g) : tensor_any(f, g);
            });
            std::cout << out.dump() << '\n';
        } else if (*ancestry) {
            std::cout << to_json(pi(syn_from_json(read_json(input)))).dump() << '\n';
        } else if (*enumerate) {
            if (m + n > max_bound)
                throw ResourceError("enumerate: m + n = " + std::to_string(m + n) +
                                    " exceeds CORELATE_MAX_BOUND = " + std::to_string(max_bound));
            auto emit = [](const auto& items) {
                for (const auto& x : items) std::cout << to_json(x).dump() << '\n';
            };
            if (category == "syn") emit(enumerate_syn(m, n));
            else if (category == "corel") emit(enumerate_corel(m, n, max_bound));
            else if (category == "cospan") emit(enumerate_cospans(m, n, max_apex.value_or(m + n)));
            else emit(enumerate_cocom(m, n));
        } else if (*check) {
            SuiteOptions opts;
            opts.bound = bound;
            opts.seed = seed;
            opts.random_cases = cases;
            opts.enumeration_ceiling = max_bound;
            opts.quotient_ceiling = max_quotient;
            const CheckReport report = run_suite(suite, opts);
            print_report(report, as_json);
            return report.exit_status();
        } else if (*render) {
            const Json j = read_json(input);
            std::cout << dispatch(category, [&](auto parse) { return to_dot(parse(j)); });
        } else if (*fixpoint) {
            const FormulaSystem system = fixpoint_problem_from_json(read_json(input));
            const std::size_t arity = system.formulas.size();
            const std::size_t carrier = system.relation.size();
            const PredTuple least = lfp(system, arity, carrier);
            const PredTuple greatest = gfp(system, arity, carrier);
            Json out;
            if (arity == 1) {
                out = {{"lfp", pred_json(least[0])}, {"gfp", pred_json(greatest[0])}};
            } else {
                Json l = Json::array(), g = Json::array();
                for (std::size_t k = 0; k < arity; ++k) {
                    l.push_back(pred_json(least[k]));
                    g.push_back(pred_json(greatest[k]));
                }
                out = {{"lfp", l}, {"gfp", g}};
            }
            std::cout << out.dump() << '\n';
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const MonotonicityError& e) {
        std::cerr << "not monotone: " << e.what() << '\n';
        return kContract;
    } catch (const ContractError& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kContract;
    }
    return kOk;
}
