#include "tenfold_cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tenfold/invariants.hpp"
#include "tenfold/ktable.hpp"
#include "tenfold/modelfile.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ModelParams parse_set(const std::string& spec) {
    ModelParams params;
    if (spec.empty()) return params;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::UsageError, "--set expects key=value pairs, got '" + item + "'");
        char* end = nullptr;
        const std::string value = item.substr(eq + 1);
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0')
            throw Error(ErrorCode::UsageError, "--set value '" + value + "' is not a number");
        params.set(item.substr(0, eq), v);
    }
    return params;
}

void parse_range(const std::string& spec, RunConfig& cfg) {
    std::stringstream ss(spec);
    std::string part;
    std::vector<double> vals;
    while (std::getline(ss, part, ':')) {
        char* end = nullptr;
        vals.push_back(std::strtod(part.c_str(), &end));
        if (end == part.c_str() || *end != '\0')
            throw Error(ErrorCode::UsageError, "--range part '" + part + "' is not a number");
    }
    if (vals.size() != 3) throw Error(ErrorCode::UsageError, "--range expects start:stop:step");
    cfg.start = vals[0];
    cfg.stop = vals[1];
    cfg.step = vals[2];
    if (cfg.step <= 0.0) throw Error(ErrorCode::UsageError, "--range step must be positive");
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"tenfold-way classifier and bulk topological invariants"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write output to a file");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model_name, "builtin model name");
        sub->add_option("--file", cfg.model_file, "model description file");
        sub->add_option_function<std::string>(
            "--set", [&cfg](const std::string& s) { cfg.overrides = parse_set(s); },
            "parameters, key=value[,key=value...]");
        sub->add_option("--grid", cfg.grid, "grid points per axis (even)");
        sub->add_option("--tol", cfg.tol, "symmetry check tolerance");
        sub->add_flag("--pauli-sweep", cfg.pauli_sweep, "ignore shipped operators, sweep Pauli candidates");
    };

    CLI::App* table = app.add_subcommand("table", "print the tenfold periodic table and metadata");
    add_format(table);

    CLI::App* kr = app.add_subcommand("kr", "KR/KQ groups of spheres and tori");
    kr->add_option("--space", cfg.space, "sphere | torus")->check(CLI::IsMember({"sphere", "torus"}));
    kr->add_option("--i", cfg.i, "degree index i in KR^{-i}")->required();
    kr->add_option("--d", cfg.d, "dimension")->required();
    kr->add_flag("--reduced", cfg.reduced, "reduced group");
    kr->add_flag("--kq", cfg.kq, "interpret i as a KQ index");
    add_format(kr);

    CLI::App* classify_cmd = app.add_subcommand("classify", "symmetry class of a model");
    add_model(classify_cmd);
    add_format(classify_cmd);

    CLI::App* invariant = app.add_subcommand("invariant", "bulk topological invariant of a model");
    add_model(invariant);
    invariant->add_option_function<std::string>(
        "--class", [&cfg](const std::string& s) { cfg.az_class = s; }, "class to dispatch as");
    add_format(invariant);

    CLI::App* sweep = app.add_subcommand("sweep", "invariant along a parameter range");
    add_model(sweep);
    sweep->add_option("--axis", cfg.axis, "parameter to sweep")->required();
    sweep->add_option_function<std::string>(
        "--range", [&cfg](const std::string& s) { parse_range(s, cfg); }, "start:stop:step")
        ->required();
    sweep->add_option_function<std::string>(
        "--class", [&cfg](const std::string& s) { cfg.az_class = s; }, "class to dispatch as");
    add_format(sweep);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::ostringstream help;
        help << app.help();
        throw Error(ErrorCode::UsageError, help.str());
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorCode::UsageError, e.what());
    }

    if (table->parsed()) cfg.command = RunConfig::Command::Table;
    else if (kr->parsed()) cfg.command = RunConfig::Command::Kr;
    else if (classify_cmd->parsed()) cfg.command = RunConfig::Command::Classify;
    else if (invariant->parsed()) cfg.command = RunConfig::Command::Invariant;
    else if (sweep->parsed()) cfg.command = RunConfig::Command::Sweep;

    if (cfg.command != RunConfig::Command::Table && cfg.command != RunConfig::Command::Kr) {
        if (cfg.model_name.empty() && cfg.model_file.empty())
            throw Error(ErrorCode::UsageError, "need --model or --file");
        if (cfg.grid < 4 || cfg.grid % 2 != 0)
            throw Error(ErrorCode::UsageError, "--grid must be even and at least 4");
    }
    return cfg;
}

namespace {

BlochModel build_model(const RunConfig& cfg, const ModelParams& params) {
    if (!cfg.model_file.empty()) return load_model_file(cfg.model_file, params);
    return make_model(cfg.model_name, params);
}

Classification classify_model(const RunConfig& cfg, const BlochModel& model,
                              const SampledBloch& sampled) {
    const CandidateSet& set =
        cfg.pauli_sweep ? CandidateSet{} : model.default_candidates;
    return classify(sampled, set, cfg.tol);
}

std::string group_str(const AbelianGroup& g) { return g.str(); }

ordered_json invariant_json(const InvariantValue& v) {
    ordered_json j;
    j["kind"] = invariant_kind_name(v.kind);
    j["value"] = v.value;
    j["raw"] = v.raw;
    j["grid"] = v.grid_size;
    j["residual"] = v.residual;
    return j;
}

int run_table(const RunConfig& cfg, std::ostream& out) {
    bool matches = true;
    std::vector<ordered_json> rows;
    for (AZClass c : real_classes())
        for (int d = 1; d <= 3; ++d) {
            const AbelianGroup generated = periodic_table_entry(c, d);
            if (!(generated == periodic_table_reference(c, d))) matches = false;
            const ClassTablesEntry meta = class_metadata(c, d);
            ordered_json row;
            row["class"] = az_class_name(c);
            row["d"] = d;
            row["group"] = group_str(generated);
            row["ko_label"] =
                meta.ko_label ? ("KO^" + std::to_string(*meta.ko_label)) : std::string("zero");
            row["index_tag"] = index_tag_name(meta.index_tag);
            rows.push_back(std::move(row));
        }

    if (cfg.format == "json") {
        out << ordered_json(rows).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "class,d,group,ko_label,index_tag\n";
        for (const auto& row : rows)
            out << row["class"].get<std::string>() << "," << row["d"] << ","
                << row["group"].get<std::string>() << "," << row["ko_label"].get<std::string>() << ","
                << row["index_tag"].get<std::string>() << "\n";
    } else {
        out << "class  d=1        d=2        d=3\n";
        for (AZClass c : real_classes()) {
            char line[80];
            std::snprintf(line, sizeof(line), "%-5s", az_class_name(c));
            out << line;
            for (int d = 1; d <= 3; ++d) {
                std::snprintf(line, sizeof(line), "  %-9s", periodic_table_entry(c, d).str().c_str());
                out << line;
            }
            out << "\n";
        }
        out << "\nclass  d  group      ko_label  fredholm  homotopy    source    index_tag\n";
        for (AZClass c : real_classes())
            for (int d = 1; d <= 3; ++d) {
                const ClassTablesEntry meta = class_metadata(c, d);
                if (!meta.ko_label) continue;
                char line[160];
                std::snprintf(line, sizeof(line), "%-5s  %d  %-9s  KO^%-5d  F_%-6d  pi_%d(F_%d)   KR^%-5d  %s\n",
                              az_class_name(c), d, periodic_table_entry(c, d).str().c_str(),
                              *meta.ko_label, *meta.fredholm_label, meta.homotopy_label->first,
                              meta.homotopy_label->second, *meta.source_exponent,
                              index_tag_name(meta.index_tag));
                out << line;
            }
        out << (matches ? "\nself-test: generated table matches transcribed data\n"
                        : "\nself-test: MISMATCH between generated and transcribed tables\n");
    }
    return matches ? 0 : 1;
}

int run_kr(const RunConfig& cfg, std::ostream& out) {
    const KIndex idx = cfg.kq ? KIndex{-(kq_shift(KIndex{-cfg.i}).value)} : KIndex{cfg.i};
    const AbelianGroup g = cfg.space == "sphere" ? kr_sphere(idx, cfg.d, cfg.reduced)
                                                 : kr_torus(idx, cfg.d, cfg.reduced);
    if (cfg.format == "json") {
        ordered_json j;
        j["space"] = cfg.space;
        j["i"] = cfg.i;
        j["kq"] = cfg.kq;
        j["d"] = cfg.d;
        j["reduced"] = cfg.reduced;
        j["group"] = g.str();
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "space,i,kq,d,reduced,group\n";
        out << cfg.space << "," << cfg.i << "," << (cfg.kq ? 1 : 0) << "," << cfg.d << ","
            << (cfg.reduced ? 1 : 0) << "," << g.str() << "\n";
    } else {
        out << g.str() << "\n";
    }
    return 0;
}

void print_classification(const Classification& cls, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        ordered_json j;
        j["class"] = az_class_name(cls.az_class);
        ordered_json consistent = ordered_json::array();
        for (AZClass c : cls.consistent) consistent.push_back(az_class_name(c));
        j["consistent"] = consistent;
        j["signature"] = {{"trs", cls.signature.trs}, {"phs", cls.signature.phs}, {"cs", cls.signature.cs}};
        ordered_json w;
        if (cls.trs_witness) w["trs"] = cls.trs_witness->label;
        if (cls.phs_witness) w["phs"] = cls.phs_witness->label;
        if (cls.chiral_witness) w["chiral"] = cls.chiral_witness->label;
        j["witnesses"] = w;
        if (!cls.warnings.empty()) j["warnings"] = cls.warnings;
        out << j.dump(2) << "\n";
    } else {
        out << az_class_name(cls.az_class);
        if (cls.consistent.size() > 1) {
            out << "  (consistent:";
            for (AZClass c : cls.consistent) out << " " << az_class_name(c);
            out << ")";
        }
        out << "\n";
        if (cls.trs_witness)
            out << "  TRS " << (cls.signature.trs > 0 ? "+1" : "-1")
                << " witness: " << cls.trs_witness->label << "\n";
        if (cls.phs_witness)
            out << "  PHS " << (cls.signature.phs > 0 ? "+1" : "-1")
                << " witness: " << cls.phs_witness->label << "\n";
        if (cls.chiral_witness) out << "  CS witness: " << cls.chiral_witness->label << "\n";
        for (const std::string& w : cls.warnings) out << "  warning: " << w << "\n";
    }
}

void print_invariant(const InvariantValue& v, const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        out << invariant_json(v).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "kind,value,raw,residual,grid\n";
        out << invariant_kind_name(v.kind) << "," << v.value << "," << fmt(v.raw) << ","
            << fmt(v.residual) << "," << v.grid_size << "\n";
    } else {
        out << "kind=" << invariant_kind_name(v.kind) << " value=" << v.value << " raw=" << fmt(v.raw)
            << " grid=" << v.grid_size << " residual=" << fmt(v.residual) << "\n";
    }
}

AZClass resolve_class(const RunConfig& cfg, const Classification& cls) {
    if (!cfg.az_class) return cls.az_class;
    const auto wanted = az_class_from_name(*cfg.az_class);
    if (!wanted) throw Error(ErrorCode::UsageError, "unknown class '" + *cfg.az_class + "'");
    for (AZClass c : cls.consistent)
        if (c == *wanted) return c;
    throw Error(ErrorCode::InconsistentSignature,
                "requested class " + *cfg.az_class + " is not consistent with the witnesses (found " +
                    az_class_name(cls.az_class) + ")");
}

int run_classify(const RunConfig& cfg, std::ostream& out) {
    const BlochModel model = build_model(cfg, cfg.overrides);
    const SampledBloch sampled = sample_grid(model, cfg.grid);
    const Classification cls = classify_model(cfg, model, sampled);
    print_classification(cls, cfg, out);
    return 0;
}

int run_invariant(const RunConfig& cfg, std::ostream& out) {
    const BlochModel model = build_model(cfg, cfg.overrides);
    const SampledBloch sampled = sample_grid(model, cfg.grid);
    const Classification cls = classify_model(cfg, model, sampled);
    const AZClass az = resolve_class(cfg, cls);
    const InvariantValue v = dispatch(az, sampled, Witnesses::from(cls));
    print_invariant(v, cfg, out);
    return 0;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
    const long points = std::lround(std::floor((cfg.stop - cfg.start) / cfg.step + 1e-9)) + 1;
    std::ostringstream csv;
    csv << "param,kind,value,raw,residual,gap\n";
    for (long p = 0; p < points; ++p) {
        const double value = cfg.start + static_cast<double>(p) * cfg.step;
        ModelParams params = cfg.overrides;
        params.set(cfg.axis, value);
        const BlochModel model = build_model(cfg, params);
        const SampledBloch sampled = sample_grid(model, cfg.grid);
        csv << fmt(value) << ",";
        if (sampled.min_gap < 1e-6) {
            csv << "gapless,,,," << fmt(sampled.min_gap) << "\n";
            continue;
        }
        try {
            const Classification cls = classify_model(cfg, model, sampled);
            const AZClass az = resolve_class(cfg, cls);
            const InvariantValue v = dispatch(az, sampled, Witnesses::from(cls));
            csv << invariant_kind_name(v.kind) << "," << v.value << "," << fmt(v.raw) << ","
                << fmt(v.residual) << "," << fmt(sampled.min_gap) << "\n";
        } catch (const Error& e) {
            // per-point failures are data in a sweep, not fatal
            if (e.code() == ErrorCode::NonConvergent)
                csv << "nonconvergent,,,," << fmt(sampled.min_gap) << "\n";
            else if (e.code() == ErrorCode::UsageError || e.code() == ErrorCode::FileNotFound)
                throw;
            else
                csv << "error,,,," << fmt(sampled.min_gap) << "\n";
        }
    }
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::FileNotFound, "cannot write '" + cfg.out_path + "'");
        f << csv.str();
    } else {
        out << csv.str();
    }
    return 0;
}

} // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    std::ostream* target = &buffer;
    int code = 0;
    try {
        switch (cfg.command) {
        case RunConfig::Command::Table: code = run_table(cfg, *target); break;
        case RunConfig::Command::Kr: code = run_kr(cfg, *target); break;
        case RunConfig::Command::Classify: code = run_classify(cfg, *target); break;
        case RunConfig::Command::Invariant: code = run_invariant(cfg, *target); break;
        case RunConfig::Command::Sweep: code = run_sweep(cfg, *target); break;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::UsageError: return 2;
        case ErrorCode::FileNotFound: return 3;
        case ErrorCode::GaplessModel: return 4;
        case ErrorCode::NonConvergent: return 5;
        default: return 1;
        }
    }
    if (cfg.command != RunConfig::Command::Sweep && !cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << cfg.out_path << "'\n";
            return 3;
        }
        f << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool help = false;
    for (const std::string& a : args)
        if (a == "-h" || a == "--help") help = true;
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const Error& e) {
        if (help) {
            std::cout << e.what() << "\n";
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::FileNotFound ? 3 : 2;
    }
    return execute(cfg, std::cout, std::cerr);
}

} // namespace tenfold::cli
