// Command-line front end: parses pair/config documents, runs the checks
// and prints human-readable or JSON reports. Exit codes: 0 computed
// (negative verdicts included), 1 precondition or assertion failure,
// 2 parse/load error, 3 resource bound exceeded.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eac/documents.hpp"
#include "eac/parser.hpp"

using nlohmann::ordered_json;
using namespace eac;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    bool json = false;
    bool no_timings = false;
    int height = 3;
    int kcap = 5;
    long seed = 0;
    bool seed_given = false;
    bool height_given = false;
    bool kcap_given = false;
    std::string order = "grevlex";
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PairDocument load_pair(const std::string& path) {
    Document doc = parse_document(read_input(path));
    if (!std::holds_alternative<PairDocument>(doc))
        throw ParseError("this command expects a pair document", 1, 1);
    return std::get<PairDocument>(doc);
}

ConfigDocument load_config(const std::string& path) {
    Document doc = parse_document(read_input(path));
    if (!std::holds_alternative<ConfigDocument>(doc))
        throw ParseError("this command expects a config document", 1, 1);
    return std::get<ConfigDocument>(doc);
}

/// Invalid documents are load errors (exit 2), not run-time failures.
VarietyPair pair_of(const PairDocument& doc) {
    try {
        return doc.to_pair();
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("pair document: ") + e.what(), 1, 1);
    }
}

Configuration config_of(const ConfigDocument& doc, int default_height) {
    try {
        return doc.to_configuration(default_height);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("config document: ") + e.what(), 1, 1);
    }
}

/// Document option unless the command line overrode it.
int effective_height(const Options& opt, const std::optional<int>& doc_value) {
    if (opt.height_given) return opt.height;
    return doc_value.value_or(opt.height);
}

int effective_kcap(const Options& opt, const std::optional<int>& doc_value) {
    if (opt.kcap_given) return opt.kcap;
    return doc_value.value_or(opt.kcap);
}

long effective_seed(const Options& opt, const std::optional<long>& doc_value) {
    if (opt.seed_given) return opt.seed;
    return doc_value.value_or(opt.seed);
}

MonomialOrder order_of(const Options& opt) {
    if (opt.order == "lex") return MonomialOrder::lex();
    return MonomialOrder::grevlex();
}

ordered_json int_vector(const std::vector<Integer>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(int_vector(m.row(i)));
    return rows;
}

ordered_json additive_json(const AdditiveVerdict& v, const RingPtr& ring) {
    ordered_json j;
    j["free"] = v.free;
    if (v.witness) {
        j["witness"] = {{"m", int_vector(v.witness->m)},
                        {"c", to_string(v.witness->c)},
                        {"relation", v.witness->str(ring, false)}};
    }
    return j;
}

ordered_json multiplicative_json(const MultiplicativeVerdict& v, const RingPtr& ring) {
    ordered_json j;
    j["free"] = v.free;
    j["height"] = v.height;
    if (v.witness) {
        j["witness"] = {{"m", int_vector(v.witness->m)},
                        {"c", to_string(v.witness->c)},
                        {"relation", v.witness->str(ring, true)}};
    }
    return j;
}

ordered_json normality_json(const NormalityVerdict& v) {
    ordered_json j;
    j["normal"] = v.normal;
    j["height"] = v.height;
    if (v.witness) {
        j["witness"] = {{"k", v.witness->k},
                        {"basis", matrix_json(v.witness->lattice.basis)},
                        {"dim_V_image", v.witness->dim_x},
                        {"dim_W_image", v.witness->dim_y}};
    }
    return j;
}

ordered_json axiom_json(const AxiomReport& r, const VarietyPair& p) {
    ordered_json j;
    j["qualifies"] = r.qualifies;
    j["additive"] = additive_json(r.additive, p.variety_x().ring());
    j["multiplicative"] = multiplicative_json(r.multiplicative, p.variety_y().ring());
    j["normality"] = normality_json(r.normality);
    j["irreducible_assumed"] =
        ordered_json{{"V", r.x_irreducible_assumed}, {"W", r.y_irreducible_assumed}};
    return j;
}

std::string additive_text(const AdditiveVerdict& v, const RingPtr& ring) {
    if (v.free) return "additively free";
    return "additive dependency: " + v.witness->str(ring, false);
}

std::string multiplicative_text(const MultiplicativeVerdict& v, const RingPtr& ring) {
    if (v.free) return "multiplicatively free up to height " + std::to_string(v.height);
    return "multiplicative dependency: " + v.witness->str(ring, true);
}

std::string normality_text(const NormalityVerdict& v) {
    if (v.normal) return "normal up to height " + std::to_string(v.height);
    std::ostringstream out;
    out << "not normal: lattice " << v.witness->lattice.basis.str() << " gives "
        << v.witness->dim_x << " + " << v.witness->dim_y << " < " << v.witness->k;
    return out.str();
}

SubsetSpec parse_spec(const std::string& set, const std::string& rows, int n,
                      const std::string& flag) {
    if (!set.empty() && !rows.empty())
        throw PreconditionError(flag + ": give either indices or rows, not both");
    if (set.empty() && rows.empty()) return SubsetSpec::empty();
    if (!set.empty()) {
        std::vector<int> idx;
        std::stringstream ss(set);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            int v = 0;
            try {
                v = std::stoi(item);
            } catch (...) {
                throw PreconditionError(flag + ": bad index '" + item + "'");
            }
            if (v < 1 || v > n)
                throw PreconditionError(flag + ": index " + item + " out of range (n = " +
                                        std::to_string(n) + ")");
            idx.push_back(v - 1);
        }
        return SubsetSpec::subset(std::move(idx));
    }
    IntMatrix m(0, n);
    std::stringstream ss(rows);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        std::stringstream rs(rowtext);
        std::vector<Integer> row;
        std::string entry;
        while (rs >> entry) {
            try {
                row.push_back(Integer(entry));
            } catch (...) {
                throw PreconditionError(flag + ": bad integer '" + entry + "'");
            }
        }
        if (row.empty()) continue;
        if (static_cast<int>(row.size()) != n)
            throw PreconditionError(flag + ": each row needs exactly " + std::to_string(n) +
                                    " entries");
        m.append_row(row);
    }
    return SubsetSpec::combinations(std::move(m));
}

struct CommandOutput {
    ordered_json result;
    std::string human;
    int exit_code = 0;
};

CommandOutput cmd_dim(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    MonomialOrder order = order_of(opt);
    DimensionResult dv = dimension(pair.variety_x(), order);
    DimensionResult dw = dimension(pair.variety_y(), order);
    auto witness = [](const DimensionResult& d) {
        ordered_json a = ordered_json::array();
        for (int v : d.witness) a.push_back(v + 1);
        return a;
    };
    CommandOutput out;
    out.result = {{"n", doc.n},
                  {"order", opt.order},
                  {"V", {{"dim", dv.dim}, {"independent_vars", witness(dv)}}},
                  {"W", {{"dim", dw.dim}, {"independent_vars", witness(dw)}}}};
    std::ostringstream h;
    h << "dim V = " << dv.dim << ", dim W = " << dw.dim << " (order " << opt.order << ")\n";
    out.human = h.str();
    return out;
}

CommandOutput cmd_free(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    AdditiveVerdict av = additive_free(pair);
    MultiplicativeVerdict mv = multiplicative_free(pair, height);
    CommandOutput out;
    out.result = {{"additive", additive_json(av, pair.variety_x().ring())},
                  {"multiplicative", multiplicative_json(mv, pair.variety_y().ring())}};
    out.human = additive_text(av, pair.variety_x().ring()) + "\n" +
                multiplicative_text(mv, pair.variety_y().ring()) + "\n";
    return out;
}

CommandOutput cmd_normal(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    NormalityVerdict v = normal_check(pair, height);
    CommandOutput out;
    out.result = normality_json(v);
    out.human = normality_text(v) + "\n";
    return out;
}

CommandOutput cmd_check_axiom(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    AxiomReport rep = axiom_instance(pair, height);
    CommandOutput out;
    out.result = axiom_json(rep, pair);
    std::ostringstream h;
    h << (rep.qualifies ? "qualifies as an axiom instance" : "does not qualify") << "\n"
      << "  " << additive_text(rep.additive, pair.variety_x().ring()) << "\n"
      << "  " << multiplicative_text(rep.multiplicative, pair.variety_y().ring()) << "\n"
      << "  " << normality_text(rep.normality) << "\n"
      << "  irreducibility assumed: V=" << (rep.x_irreducible_assumed ? "yes" : "no")
      << " W=" << (rep.y_irreducible_assumed ? "yes" : "no") << "\n";
    out.human = h.str();
    return out;
}

CommandOutput cmd_reduce(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    int kcap = effective_kcap(opt, doc.kcap);
    ReduceResult r = reduce(pair, doc.x_removal(), doc.y_removal(), height, kcap);
    CommandOutput out;
    ordered_json fs = ordered_json::array(), gs = ordered_json::array();
    for (const auto& f : r.fs) fs.push_back(f.str());
    for (const auto& g : r.gs) gs.push_back(g.str());
    out.result = {{"ok", r.ok},
                  {"k", r.k},
                  {"added", {{"x", r.added_x}, {"y", r.added_y}}},
                  {"f_used", fs},
                  {"g_used", gs}};
    if (r.pair) {
        out.result["additive"] = additive_json(r.additive, r.pair->variety_x().ring());
        out.result["multiplicative"] =
            multiplicative_json(r.multiplicative, r.pair->variety_y().ring());
        out.result["pair_document"] = document_of_pair(*r.pair).print();
    }
    if (!r.ok) {
        out.result["obstruction"] = r.obstruction;
        out.human = "# reduction failed: " + r.obstruction + "\n";
        out.exit_code = 1;
        return out;
    }
    std::ostringstream h;
    h << "# reduced with k = " << r.k << ", new variables: " << r.added_x << " on V, "
      << r.added_y << " on W\n"
      << document_of_pair(*r.pair).print();
    out.human = h.str();
    return out;
}

CommandOutput cmd_cut(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    long seed = effective_seed(opt, doc.seed);
    CutResult r = cut(pair, static_cast<std::uint64_t>(seed), height);
    CommandOutput out;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : r.report.coefficients) coeffs.push_back(to_string(c));
    out.result = {{"ok", r.report.ok},
                  {"side", std::string(1, r.report.side)},
                  {"seed", seed},
                  {"coefficients", coeffs},
                  {"dim_V", {r.report.dim_x_before, r.report.dim_x_after}},
                  {"dim_W", {r.report.dim_y_before, r.report.dim_y_after}},
                  {"d", {r.report.d_before, r.report.d_after}}};
    if (r.pair) {
        out.result["additive"] = additive_json(r.report.additive, r.pair->variety_x().ring());
        out.result["multiplicative"] =
            multiplicative_json(r.report.multiplicative, r.pair->variety_y().ring());
        out.result["normality"] = normality_json(r.report.normality);
        out.result["pair_document"] = document_of_pair(*r.pair).print();
    }
    if (!r.report.ok) {
        out.result["advice"] = r.report.advice;
        out.human = "# cut failed: " + r.report.advice + "\n";
        out.exit_code = 1;
        return out;
    }
    std::ostringstream h;
    h << "# cut side " << r.report.side << ": dim V " << r.report.dim_x_before << " -> "
      << r.report.dim_x_after << ", dim W " << r.report.dim_y_before << " -> "
      << r.report.dim_y_after << ", d " << r.report.d_before << " -> " << r.report.d_after
      << "\n"
      << document_of_pair(*r.pair).print();
    out.human = h.str();
    return out;
}

CommandOutput cmd_root(const PairDocument& doc, int level) {
    VarietyPair pair = pair_of(doc);
    Ideal pre = associated_preimage(pair, level);
    CommandOutput out;
    ordered_json gens = ordered_json::array();
    for (const auto& g : pre.generators()) gens.push_back(g.str());
    PairDocument res = doc;
    res.w_polys = pre.generators();
    res.v_prime.reset();
    res.w_prime.reset();
    out.result = {{"l", level}, {"generators", gens}, {"pair_document", res.print()}};
    out.human = "# preimage under coordinatewise power " + std::to_string(level) + "\n" +
                res.print();
    return out;
}

CommandOutput cmd_adim(const PairDocument& doc, const Options& opt) {
    VarietyPair pair = pair_of(doc);
    int height = effective_height(opt, doc.height);
    AdimReport rep = adim_bound(pair, height);
    CommandOutput out;
    ordered_json notes = ordered_json::array();
    for (const auto& n : rep.notes) notes.push_back(n);
    out.result = {{"bound", rep.bound},
                  {"dim_V", rep.dim_x},
                  {"dim_W", rep.dim_y},
                  {"height", height},
                  {"notes", notes}};
    std::ostringstream h;
    h << "adim lower bound: " << rep.bound << " (dim V = " << rep.dim_x
      << ", dim W = " << rep.dim_y << ", checked at height " << height << ")\n";
    for (const auto& n : rep.notes) h << "  note: " << n << "\n";
    out.human = h.str();
    return out;
}

CommandOutput cmd_delta(const ConfigDocument& doc, const Options& opt,
                        const std::string& set, const std::string& rows) {
    Configuration c = config_of(doc, effective_height(opt, doc.height));
    SubsetSpec spec = parse_spec(set, rows, c.ngens(), "--set/--rows");
    int dq = c.dim_q(spec), tx = c.trdeg_x(spec), ty = c.trdeg_y(spec);
    int d = c.delta(spec);
    CommandOutput out;
    out.result = {{"set", spec.str()}, {"dim_q", dq}, {"trdeg_x", tx}, {"trdeg_y", ty},
                  {"delta", d}};
    std::ostringstream h;
    h << "delta = " << d << "  (trdeg_x " << tx << " + trdeg_y " << ty << " - dim_q " << dq
      << ")\n";
    out.human = h.str();
    return out;
}

CommandOutput cmd_delta_rel(const ConfigDocument& doc, const Options& opt,
                            const std::string& set, const std::string& rows,
                            const std::string& base_set, const std::string& base_rows) {
    Configuration c = config_of(doc, effective_height(opt, doc.height));
    SubsetSpec spec = parse_spec(set, rows, c.ngens(), "--set/--rows");
    SubsetSpec base = parse_spec(base_set, base_rows, c.ngens(), "--base/--base-rows");
    int d = c.delta_rel(spec, base);
    CommandOutput out;
    out.result = {{"set", spec.str()}, {"base", base.str()}, {"delta", d}};
    out.human = "delta(" + spec.str() + " / " + base.str() + ") = " + std::to_string(d) + "\n";
    return out;
}

CommandOutput cmd_partial_dim(const ConfigDocument& doc, const Options& opt,
                              const std::string& set, const std::string& rows) {
    Configuration c = config_of(doc, effective_height(opt, doc.height));
    int height = effective_height(opt, doc.height);
    SubsetSpec spec = parse_spec(set, rows, c.ngens(), "--set/--rows");
    int d = c.partial_dim(spec, height);
    CommandOutput out;
    out.result = {{"set", spec.str()}, {"height", height}, {"partial_dim", d}};
    out.human = "partial_dim = " + std::to_string(d) + " (height " + std::to_string(height) +
                ")\n";
    return out;
}

CommandOutput cmd_strong_ext(const ConfigDocument& doc, const Options& opt,
                             const std::string& base_set, const std::string& base_rows) {
    Configuration c = config_of(doc, effective_height(opt, doc.height));
    int height = effective_height(opt, doc.height);
    SubsetSpec base = parse_spec(base_set, base_rows, c.ngens(), "--base/--base-rows");
    StrongExtVerdict v = c.strong_ext(base, height);
    CommandOutput out;
    out.result = {{"base", base.str()}, {"strong", v.strong}, {"height", v.height}};
    if (v.witness) {
        out.result["witness"] = {{"rows", matrix_json(v.witness->rows(c.ngens()))},
                                 {"delta", v.witness_delta}};
        out.human = "not strong at height " + std::to_string(height) + ": delta(" +
                    v.witness->str() + " / base) = " + std::to_string(v.witness_delta) + "\n";
    } else {
        out.human = "strong up to height " + std::to_string(height) + "\n";
    }
    return out;
}

CommandOutput cmd_kernel_demo(const Options& opt, int size) {
    Configuration c = kernel_demo(size, opt.height);
    ConfigDocument doc;
    doc.n = size;
    doc.ring_x = c.locus_x().ring();
    doc.ring_y = c.locus_y().ring();
    doc.gen_names = c.generator_names();
    doc.x_polys = c.locus_x().generators();
    doc.y_polys = c.locus_y().generators();
    doc.lin = c.lin_rels();
    for (int i = 0; i < size; ++i)
        if (c.kernel_mask()[i]) doc.kernel.push_back(i);
    doc.height = c.height_bound();
    CommandOutput out;
    out.result = {{"size", size},
                  {"verified_delta_zero", true},
                  {"document", doc.print()}};
    out.human = doc.print();
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"calculator for exponential-algebraic variety pairs and predimension"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a single JSON report");
    app.add_flag("--no-timings", opt.no_timings, "omit timings from the report");
    auto* oh = app.add_option("--height", opt.height, "height bound for quantifiers")
                   ->check(CLI::PositiveNumber);
    auto* ok = app.add_option("--k-cap", opt.kcap, "exponent cap for the reduction")
                   ->check(CLI::PositiveNumber);
    auto* os = app.add_option("--seed", opt.seed, "seed for pseudo-random draws");
    app.add_option("--order", opt.order, "monomial order for dim (lex|grevlex)")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    long steps = 0;
    auto* ost = app.add_option("--steps", steps, "reduction step limit")
                    ->check(CLI::PositiveNumber);

    std::string input = "-";
    std::string set, rows, base_set, base_rows;
    int level = 1, size = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->fallthrough(); // global flags may follow the subcommand
        cmd->add_option("input", input, "document file, or - for standard input");
    };

    auto* c_dim = app.add_subcommand("dim", "dimensions of both varieties");
    add_input(c_dim);
    auto* c_free = app.add_subcommand("free", "additive and multiplicative freeness");
    add_input(c_free);
    auto* c_normal = app.add_subcommand("normal", "normality of the pair");
    add_input(c_normal);
    auto* c_axiom = app.add_subcommand("check-axiom", "full axiom-instance qualification");
    add_input(c_axiom);
    auto* c_reduce = app.add_subcommand("reduce", "remove Vprime/Wprime via fresh variables");
    add_input(c_reduce);
    auto* c_cut = app.add_subcommand("cut", "generic hyperplane section");
    add_input(c_cut);
    auto* c_root = app.add_subcommand("root", "preimage under coordinatewise powers");
    add_input(c_root);
    c_root->add_option("--l", level, "power level")->required()->check(CLI::PositiveNumber);
    auto* c_adim = app.add_subcommand("adim", "certified solution-set dimension bound");
    add_input(c_adim);
    auto* c_delta = app.add_subcommand("delta", "predimension of a subset");
    add_input(c_delta);
    c_delta->add_option("--set", set, "1-based generator indices, comma separated");
    c_delta->add_option("--rows", rows, "integer combination rows, ';' separated");
    auto* c_drel = app.add_subcommand("delta-rel", "relative predimension");
    add_input(c_drel);
    c_drel->add_option("--set", set, "1-based generator indices");
    c_drel->add_option("--rows", rows, "integer combination rows");
    c_drel->add_option("--base", base_set, "base subset indices");
    c_drel->add_option("--base-rows", base_rows, "base combination rows");
    auto* c_pdim = app.add_subcommand("partial-dim", "min delta over enumerated supersets");
    add_input(c_pdim);
    c_pdim->add_option("--set", set, "1-based generator indices");
    c_pdim->add_option("--rows", rows, "integer combination rows");
    auto* c_strong = app.add_subcommand("strong-ext", "strong-extension check for a base");
    add_input(c_strong);
    c_strong->add_option("--base", base_set, "base subset indices");
    c_strong->add_option("--base-rows", base_rows, "base combination rows");
    auto* c_kdemo = app.add_subcommand("kernel-demo", "standard-kernel toy configuration");
    c_kdemo->fallthrough();
    c_kdemo->add_option("--size", size, "number of generators")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);
    opt.height_given = oh->count() > 0;
    opt.kcap_given = ok->count() > 0;
    opt.seed_given = os->count() > 0;

    if (const char* env = std::getenv("EACALC_STEP_LIMIT")) {
        try {
            set_reduction_step_limit(std::stol(env));
        } catch (...) {
            std::cerr << "warning: ignoring malformed EACALC_STEP_LIMIT\n";
        }
    }
    if (ost->count() > 0) set_reduction_step_limit(steps);

    std::string command;
    auto t0 = std::chrono::steady_clock::now();

    ordered_json report;
    report["tool"] = "eacalc";
    report["version"] = kVersion;

    auto emit = [&](CommandOutput out) {
        report["command"] = command;
        report["status"] = "ok";
        report["result"] = std::move(out.result);
        if (!opt.no_timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            report["timings"] = ordered_json{{"total_ms", ms}};
        }
        if (opt.json)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << out.human;
        return out.exit_code;
    };

    auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
        if (opt.json) {
            report["command"] = command;
            report["status"] = "error";
            report["error"] = ordered_json{{"kind", kind}, {"message", message}};
            if (!opt.no_timings) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                report["timings"] = ordered_json{{"total_ms", ms}};
            }
            std::cout << report.dump(2) << "\n";
        } else {
            std::cerr << "error (" << kind << "): " << message << "\n";
        }
        return code;
    };

    try {
        if (c_dim->parsed()) { command = "dim"; return emit(cmd_dim(load_pair(input), opt)); }
        if (c_free->parsed()) { command = "free"; return emit(cmd_free(load_pair(input), opt)); }
        if (c_normal->parsed()) { command = "normal"; return emit(cmd_normal(load_pair(input), opt)); }
        if (c_axiom->parsed()) { command = "check-axiom"; return emit(cmd_check_axiom(load_pair(input), opt)); }
        if (c_reduce->parsed()) { command = "reduce"; return emit(cmd_reduce(load_pair(input), opt)); }
        if (c_cut->parsed()) { command = "cut"; return emit(cmd_cut(load_pair(input), opt)); }
        if (c_root->parsed()) { command = "root"; return emit(cmd_root(load_pair(input), level)); }
        if (c_adim->parsed()) { command = "adim"; return emit(cmd_adim(load_pair(input), opt)); }
        if (c_delta->parsed()) { command = "delta"; return emit(cmd_delta(load_config(input), opt, set, rows)); }
        if (c_drel->parsed()) { command = "delta-rel"; return emit(cmd_delta_rel(load_config(input), opt, set, rows, base_set, base_rows)); }
        if (c_pdim->parsed()) { command = "partial-dim"; return emit(cmd_partial_dim(load_config(input), opt, set, rows)); }
        if (c_strong->parsed()) { command = "strong-ext"; return emit(cmd_strong_ext(load_config(input), opt, base_set, base_rows)); }
        if (c_kdemo->parsed()) { command = "kernel-demo"; return emit(cmd_kernel_demo(opt, size)); }
        std::cerr << "no command selected\n";
        return 1;
    } catch (const ParseError& e) {
        return emit_error("parse", e.what(), 2);
    } catch (const ResourceLimitError& e) {
        return emit_error("resource-limit", e.what(), 3);
    } catch (const PreconditionError& e) {
        return emit_error("precondition", e.what(), 1);
    } catch (const RingMismatchError& e) {
        return emit_error("ring-mismatch", e.what(), 1);
    } catch (const InternalCheckError& e) {
        return emit_error("internal-check", e.what(), 1);
    }
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
