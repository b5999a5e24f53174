// Command-line front end: fan ingestion, Cox-ring presentations, graded
// dimensions, generator reports, hypertoric stability analysis, and a
// persistent byte-level result cache.

#include "symtoric/cache.hpp"
#include "symtoric/classical.hpp"
#include "symtoric/fan_library.hpp"
#include "symtoric/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using symtoric::json;

struct Options {
    std::string fan_spec;
    std::string format = "json";
    std::string cache_dir;
    std::string presentation = "both";
    std::string theta_csv;
    std::string example_name;
    int p_max = 0;
    int degree_bound = 4;
    bool growth = false;
};

json error_json(const std::string& type, const std::string& message) {
    json j;
    j["schema_version"] = symtoric::schema_version;
    j["error"] = {{"type", type}, {"message", message}};
    return j;
}

// plain-text rendering: "key: value" lines, nested blocks indented
void render_text(std::ostream& os, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << pad << key << ":\n";
                render_text(os, value, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                render_text(os, value, indent + 1);
            } else {
                os << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

std::string serialize(const json& j, const std::string& format) {
    if (format == "text") {
        std::ostringstream os;
        render_text(os, j, 0);
        return os.str();
    }
    return j.dump(2) + "\n";
}

symtoric::Fan load_fan(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return symtoric::builtin_fan(spec.substr(prefix.size()));
    std::ifstream in(spec);
    if (!in) throw symtoric::input_error("cannot open fan file: " + spec);
    json parsed;
    try {
        parsed = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw symtoric::input_error(std::string("fan file is not valid JSON: ") + e.what());
    }
    return symtoric::fan_from_json(parsed);
}

std::vector<symtoric::Rat> parse_theta(const std::string& csv) {
    std::vector<symtoric::Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw symtoric::input_error("theta: empty entry");
        try {
            out.emplace_back(item.substr(a, b - a + 1));
        } catch (const std::exception&) {
            throw symtoric::input_error("theta: cannot parse entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw symtoric::input_error("theta: no entries");
    return out;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    symtoric::FanValidation v = symtoric::validate_fan(fan);
    std::cout << serialize(symtoric::validation_to_json(fan, v), opt.format);
    return 0;
}

int cmd_cox(const Options& opt) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    symtoric::ExactSequenceData esd = symtoric::build_exact_sequence(fan);
    symtoric::SignedRayPairing pairing = symtoric::select_sigma1(fan);

    std::vector<symtoric::PresentationKind> kinds;
    if (opt.presentation == "both")
        kinds = {symtoric::PresentationKind::R, symtoric::PresentationKind::Rprime};
    else if (opt.presentation == "R")
        kinds = {symtoric::PresentationKind::R};
    else if (opt.presentation == "Rtilde")
        kinds = {symtoric::PresentationKind::Rtilde};
    else if (opt.presentation == "Rprime")
        kinds = {symtoric::PresentationKind::Rprime};
    else
        kinds = {symtoric::PresentationKind::RtildePrime};

    json j;
    j["schema_version"] = symtoric::schema_version;
    j["pivot_rays"] = esd.pivot_rays;
    json arr = json::array();
    for (auto kind : kinds)
        arr.push_back(symtoric::presentation_to_json(symtoric::cox_presentation(esd, pairing, kind)));
    j["presentations"] = std::move(arr);
    std::cout << serialize(j, opt.format);
    return 0;
}

int cmd_dims(const Options& opt, const symtoric::DiskCache& cache) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    std::string params = "p=" + std::to_string(opt.p_max) + ";pres=" + opt.presentation +
                         ";growth=" + (opt.growth ? "1" : "0") + ";fmt=" + opt.format;
    std::string key = symtoric::fan_cache_key(fan, "dims", params);
    if (auto hit = cache.load(key)) {
        std::cout << *hit;
        return 0;
    }

    json j;
    j["schema_version"] = symtoric::schema_version;
    if (opt.presentation == "both") {
        symtoric::AgreementReport rep = symtoric::presentations_agree(fan, opt.p_max);
        j["dims_R"] = rep.dims_r;
        j["dims_Rprime"] = rep.dims_rprime;
        j["agree"] = rep.agree;
    } else {
        auto kind = opt.presentation == "R" ? symtoric::PresentationKind::R
                                            : symtoric::PresentationKind::Rprime;
        symtoric::GradedDims gd = symtoric::graded_dims(fan, kind, opt.p_max);
        j["scheme"] = symtoric::to_string(gd.scheme);
        j["dims"] = gd.dims;
    }
    if (opt.growth)
        j["growth"] = symtoric::growth_to_json(symtoric::bigness_growth_report(fan, opt.p_max));

    std::string bytes = serialize(j, opt.format);
    cache.store(key, bytes);
    std::cout << bytes;
    return 0;
}

int cmd_agree(const Options& opt, const symtoric::DiskCache& cache) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    std::string params = "p=" + std::to_string(opt.p_max) + ";fmt=" + opt.format;
    std::string key = symtoric::fan_cache_key(fan, "agree", params);
    if (auto hit = cache.load(key)) {
        std::cout << *hit;
        return 0;
    }
    symtoric::AgreementReport rep = symtoric::presentations_agree(fan, opt.p_max);
    std::string bytes = serialize(symtoric::agreement_to_json(rep), opt.format);
    cache.store(key, bytes);
    std::cout << bytes;
    return 0;
}

int cmd_generators(const Options& opt, const symtoric::DiskCache& cache) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    std::string params = "d=" + std::to_string(opt.degree_bound) + ";fmt=" + opt.format;
    std::string key = symtoric::fan_cache_key(fan, "generators", params);
    if (auto hit = cache.load(key)) {
        std::cout << *hit;
        return 0;
    }
    symtoric::GeneratorReport rep = symtoric::generator_report(fan, opt.degree_bound);
    json j = symtoric::generators_to_json(rep);
    if (!rep.certified_complete)
        j["warning"] = "generator list truncated at fiber degree " +
                       std::to_string(rep.degree_bound_used) +
                       " without a completeness certificate (certified bound " +
                       rep.certificate_bound.str() + ")";
    std::string bytes = serialize(j, opt.format);
    cache.store(key, bytes);
    std::cout << bytes;
    return 0;
}

int cmd_hypertoric(const Options& opt) {
    symtoric::Fan fan = load_fan(opt.fan_spec);
    symtoric::ExactSequenceData esd = symtoric::build_exact_sequence(fan);
    std::vector<symtoric::Rat> theta = parse_theta(opt.theta_csv);
    symtoric::HypertoricProblem prob = symtoric::fan_hypertoric_problem(esd, theta);

    symtoric::GeneratorReport gens = symtoric::generator_report(fan, opt.degree_bound);
    symtoric::CentralFiberReport fiber = symtoric::central_fiber_components(prob, gens);

    json j;
    j["schema_version"] = symtoric::schema_version;
    j["unimodular"] = symtoric::is_unimodular(esd.a);
    j["genericity"] = symtoric::genericity_to_json(symtoric::is_generic(esd.a, theta));
    j["components"] = fiber.components.size();
    j["central_fiber"] = symtoric::central_fiber_to_json(fiber);
    if (!gens.certified_complete)
        j["warning"] = "generator list truncated at fiber degree " +
                       std::to_string(gens.degree_bound_used) +
                       " without a completeness certificate (certified bound " +
                       gens.certificate_bound.str() + ")";
    std::cout << serialize(j, opt.format);
    return 0;
}

int cmd_examples(const Options& opt) {
    if (!opt.example_name.empty()) {
        symtoric::Fan fan = symtoric::builtin_fan(opt.example_name);
        std::cout << serialize(symtoric::fan_to_json(fan), opt.format);
        return 0;
    }
    json j;
    j["schema_version"] = symtoric::schema_version;
    json arr = json::array();
    for (const auto& name : symtoric::builtin_fan_names()) {
        symtoric::Fan fan = symtoric::builtin_fan(name);
        arr.push_back({{"name", name},
                       {"dim", fan.dim},
                       {"rays", fan.ray_count()},
                       {"max_cones", fan.max_cones.size()}});
    }
    j["builtin_fans"] = std::move(arr);
    std::cout << serialize(j, opt.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric tensor algebras of tangent bundles of smooth complete toric varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", opt.cache_dir, "directory for the byte-level result cache")
        ->envname("SYMTORIC_CACHE_DIR");

    auto add_fan = [&](CLI::App* sub) {
        sub->add_option("--fan", opt.fan_spec, "fan JSON file, or builtin:NAME")->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "check that a fan is smooth and complete");
    add_fan(validate);

    CLI::App* cox = app.add_subcommand("cox", "graded Cox-ring presentations");
    add_fan(cox);
    cox->add_option("--presentation", opt.presentation, "which presentation(s)")
        ->check(CLI::IsMember({"R", "Rtilde", "Rprime", "RtildePrime", "both"}));

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions of the symmetric tensor algebra");
    add_fan(dims);
    dims->add_option("--p-max", opt.p_max, "largest fiber degree")->required()
        ->check(CLI::NonNegativeNumber);
    dims->add_option("--presentation", opt.presentation, "scheme: R, Rprime, or both")
        ->check(CLI::IsMember({"R", "Rprime", "both"}));
    dims->add_flag("--growth", opt.growth, "append the log-log growth diagnostic (needs p-max >= 4)");

    CLI::App* agree = app.add_subcommand("agree", "compare the two presentation pipelines");
    add_fan(agree);
    agree->add_option("--p-max", opt.p_max, "largest fiber degree")->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* generators = app.add_subcommand("generators", "algebra generators by fiber degree");
    add_fan(generators);
    generators->add_option("--degree-bound", opt.degree_bound, "search bound on the fiber degree")
        ->check(CLI::PositiveNumber);

    CLI::App* hypertoric =
        app.add_subcommand("hypertoric", "stability, unimodularity, and central-fiber components");
    add_fan(hypertoric);
    hypertoric->add_option("--theta", opt.theta_csv, "stability parameter, comma-separated rationals")
        ->required();
    hypertoric->add_option("--degree-bound", opt.degree_bound,
                           "fiber-degree bound for the generator list");

    CLI::App* examples = app.add_subcommand("examples", "list the built-in fan library");
    examples->add_option("--name", opt.example_name, "print this built-in fan as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << serialize(error_json("parse", e.what()), opt.format);
        return 2;
    }

    symtoric::DiskCache cache(opt.cache_dir);
    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (cox->parsed()) return cmd_cox(opt);
        if (dims->parsed()) return cmd_dims(opt, cache);
        if (agree->parsed()) return cmd_agree(opt, cache);
        if (generators->parsed()) return cmd_generators(opt, cache);
        if (hypertoric->parsed()) return cmd_hypertoric(opt);
        if (examples->parsed()) return cmd_examples(opt);
        std::cout << serialize(error_json("parse", "no subcommand selected"), opt.format);
        return 2;
    } catch (const symtoric::input_error& e) {
        std::cout << serialize(error_json("parse", e.what()), opt.format);
        return 2;
    } catch (const symtoric::precondition_error& e) {
        std::cout << serialize(error_json("precondition", e.what()), opt.format);
        return 3;
    } catch (const std::exception& e) {
        std::cout << serialize(error_json("internal", e.what()), opt.format);
        return 1;
    }
}
