#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclegraph/audit.hpp"
#include "cyclegraph/formulas.hpp"
#include "cyclegraph/gamma.hpp"
#include "cyclegraph/invariants.hpp"
#include "cyclegraph/render.hpp"

namespace {

using namespace cyclegraph;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct GroupArgs {
    std::string kind;
    std::vector<std::string> params;
};

Group build_group(const GroupArgs& args) {
    auto need = [&](size_t count) {
        if (args.params.size() != count)
            throw std::invalid_argument(args.kind + ": expected " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (args.kind == "cyclic") {
        need(1);
        return make_cyclic(std::stoll(args.params[0]));
    }
    if (args.kind == "dihedral") {
        need(1);
        return make_dihedral(std::stoll(args.params[0]));
    }
    if (args.kind == "genq") {
        need(1);
        return make_generalized_quaternion(std::stoi(args.params[0]));
    }
    if (args.kind == "dicyclic") {
        need(1);
        return make_dicyclic(std::stoll(args.params[0]));
    }
    if (args.kind == "minnc") {
        need(3);
        return make_minimal_noncyclic(std::stoll(args.params[0]), std::stoi(args.params[1]),
                                      std::stoll(args.params[2]));
    }
    if (args.kind == "product") {
        need(1);
        std::vector<Group> parts;
        const std::string& token = args.params[0];
        size_t pos = 0;
        while (pos < token.size()) {
            if (token[pos] != 'Z' && token[pos] != 'z')
                throw std::invalid_argument("product: expected token like Z4xZ3xZ3");
            ++pos;
            size_t end = token.find('x', pos);
            if (end == std::string::npos) end = token.size();
            parts.push_back(make_cyclic(std::stoll(token.substr(pos, end - pos))));
            pos = end == token.size() ? end : end + 1;
        }
        return make_direct_product(parts);
    }
    if (args.kind == "cayley") {
        need(1);
        return load_cayley_table(args.params[0]);
    }
    if (args.kind == "sl2") {
        need(1);
        return from_matrix_generators(std::stoll(args.params[0]),
                                      {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}});
    }
    throw std::invalid_argument("unknown family: " + args.kind);
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << content;
}

int run_show(const GroupArgs& args, const std::string& format, const std::string& out_path) {
    Group g = build_group(args);
    GammaGraph gamma = build_gamma(g);
    InvariantSummary summary = summarize(gamma);
    std::string content;
    if (format == "dot") content = render_dot(gamma);
    else if (format == "json") content = render_json(g, gamma, summary);
    else if (format == "text") content = render_text(g, gamma, summary);
    else throw std::invalid_argument("show: unsupported format " + format);
    write_output(content, out_path);
    return kExitOk;
}

// Vertex selector "order:index", e.g. "4:0" for the first order-4 subgroup.
int resolve_selector(const GammaGraph& gamma, const std::string& selector) {
    auto colon = selector.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("selector must look like order:index");
    long long order = std::stoll(selector.substr(0, colon));
    long long index = std::stoll(selector.substr(colon + 1));
    long long seen = 0;
    for (size_t v = 0; v < gamma.vertices.size(); ++v)
        if (gamma.vertices[v].order == order && seen++ == index) return static_cast<int>(v);
    throw std::invalid_argument("no vertex matches selector " + selector);
}

int run_distance(const GroupArgs& args, const std::string& from, const std::string& to) {
    Group g = build_group(args);
    GammaGraph gamma = build_gamma(g);
    int u = resolve_selector(gamma, from);
    int v = resolve_selector(gamma, to);
    auto d = distance(gamma, u, v);
    std::cout << (d ? std::to_string(*d) : "unreachable") << "\n";
    return kExitOk;
}

int run_audit_cmd(const std::string& spec_path, const std::string& preset,
                  const std::string& format, const std::string& out_path, long long cap) {
    audit::CorpusSpec spec;
    if (!spec_path.empty()) spec = audit::parse_corpus_file(spec_path);
    else spec = audit::corpus_preset(preset);
    if (cap > 0) spec.order_cap = cap;

    audit::AuditReport report = audit::run_audit(spec);
    std::string content;
    if (format == "json") content = audit::report_to_json(report);
    else if (format == "csv") content = audit::report_to_csv(report);
    else if (format == "text") content = audit::report_to_text(report);
    else throw std::invalid_argument("audit: unsupported format " + format);

    if (!out_path.empty()) {
        // Report to the file, human summary to stdout.
        write_output(content, out_path);
        std::cout << audit::report_to_text(report);
    } else {
        std::cout << content;
    }
    return report.pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic subgroup graphs: build, inspect, and audit closed-form predictions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    GroupArgs show_args;
    auto* show = app.add_subcommand("show", "Print a group's cyclic subgroup graph");
    show->add_option("family", show_args.kind,
                     "cyclic|dihedral|genq|dicyclic|minnc|product|cayley|sl2")
        ->required();
    show->add_option("params", show_args.params, "family parameters");
    show->add_option("--format", format, "text|dot|json")->capture_default_str();
    show->add_option("--out", out_path, "write to file instead of stdout");

    GroupArgs export_args;
    std::string export_out;
    auto* exp = app.add_subcommand("export", "Write the graph to a file");
    exp->add_option("family", export_args.kind, "group family")->required();
    exp->add_option("params", export_args.params, "family parameters");
    exp->add_option("--format", format, "text|dot|json")->capture_default_str();
    exp->add_option("--out", export_out, "output path")->required();

    GroupArgs dist_args;
    std::string sel_from, sel_to;
    auto* dist = app.add_subcommand("distance", "BFS distance between two subgroup vertices");
    dist->add_option("family", dist_args.kind, "group family")->required();
    dist->add_option("params", dist_args.params, "family parameters, then two order:index selectors")
        ->required();

    std::string audit_spec, audit_preset = "default";
    long long audit_cap = 0;
    auto* aud = app.add_subcommand("audit", "Audit closed-form predictions against brute force");
    aud->add_option("spec", audit_spec, "corpus spec file");
    aud->add_option("--preset", audit_preset, "paper-figures|default")->capture_default_str();
    aud->add_option("--format", format, "text|json|csv")->capture_default_str();
    aud->add_option("--out", out_path, "write the report to a file");
    aud->add_option("--cap", audit_cap, "override the corpus order cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (show->parsed()) return run_show(show_args, format, out_path);
        if (exp->parsed()) return run_show(export_args, format, export_out);
        if (dist->parsed()) {
            // Last two positionals are the vertex selectors.
            if (dist_args.params.size() < 2)
                throw std::invalid_argument("distance: need two order:index selectors");
            sel_to = dist_args.params.back();
            dist_args.params.pop_back();
            sel_from = dist_args.params.back();
            dist_args.params.pop_back();
            return run_distance(dist_args, sel_from, sel_to);
        }
        if (aud->parsed()) return run_audit_cmd(audit_spec, audit_preset, format, out_path,
                                                audit_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
