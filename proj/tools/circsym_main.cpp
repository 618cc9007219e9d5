#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circsym/parallel.hpp"
#include "circsym/symparams.hpp"
#include "json.hpp"

using namespace circsym;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct Options {
    int n = 0, i = 0, j = 0;
    std::string subdivide;  // "", "i", "j"
    int p = 1;
    int n_min = 4, n_max = 12, p_max = 2;
    bool subdivided_sweep = false;
    std::string format = "text";
    bool search = false;
    bool strict = false;
    bool quiet = false;
    std::string out_path;
    BruteBudget brute = BruteBudget::from_env();
    SearchBudget nodes = SearchBudget::from_env();
};

std::string braced(const std::vector<int>& values) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) os << ", ";
        os << values[k];
    }
    os << '}';
    return os.str();
}

std::string braced_labels(const Graph& g, const std::vector<int>& vertices) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (k) os << ", ";
        os << g.label(vertices[k]);
    }
    os << '}';
    return os.str();
}

// Either a base circulant or one of its subdivisions.
struct SpecRef {
    CirculantSpec base;
    std::optional<SubdividedSpec> sub;

    bool subdivided() const { return sub.has_value(); }
    std::string name() const { return sub ? sub->name() : base.name(); }
    Graph graph() const { return sub ? build_subdivided(*sub) : build_circulant(base); }
    long long order() const { return sub ? group_order(*sub) : group_order(base); }
    AutGroup group() const { return sub ? closed_form_group(*sub) : closed_form_group(base); }
    SymmetryReport closed() const { return sub ? closed_form_params(*sub) : closed_form_params(base); }
    std::string twin_class() const {
        if (!sub) return twin_variant_name(twin_classification(base).variant);
        auto c = twin_classification_subdivided(*sub);
        if (c.twin_free) return "twin_free";
        return c.u_pairs.empty() ? "v_pairs" : "v_and_u_pairs";
    }
};

SpecRef parse_spec(const Options& opt) {
    CirculantSpec base = normalize(opt.n, opt.i, opt.j);
    SpecRef ref{base, std::nullopt};
    if (!opt.subdivide.empty()) {
        if (!base.connected())
            throw invalid_spec_error("subdivisions are defined for connected specs only");
        Arc arc = opt.subdivide == "i" ? Arc::I : Arc::J;
        ref.sub = make_subdivided(base, arc, opt.p);
    }
    return ref;
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << payload;
}

// ---- row rendering -----------------------------------------------------------

std::string csv_header() {
    return "n,i,j,arc,p,connected,twin_class,det,dist,cost,aut_order,method";
}

std::string csv_row(const SpecRef& ref, const SymmetryReport& rep, long long order) {
    std::ostringstream os;
    os << ref.base.n << ',' << ref.base.i << ',' << ref.base.j << ',';
    if (ref.sub) os << (ref.sub->arc == Arc::I ? 'i' : 'j');
    os << ',';
    if (ref.sub) os << ref.sub->p;
    os << ",true," << ref.twin_class() << ',' << rep.det << ',' << rep.dist << ',';
    if (rep.cost) os << *rep.cost;
    os << ',' << order << ',' << (rep.method == Method::ClosedForm ? "closed_form" : "search");
    return os.str();
}

json report_json(const SpecRef& ref, const SymmetryReport& rep, long long order) {
    Graph g = ref.graph();
    json out;
    out["spec"] = ref.name();
    out["n"] = ref.base.n;
    out["i"] = ref.base.i;
    out["j"] = ref.base.j;
    if (ref.sub) {
        out["arc"] = ref.sub->arc == Arc::I ? "i" : "j";
        out["p"] = ref.sub->p;
    }
    out["twin_class"] = ref.twin_class();
    out["det"] = rep.det;
    out["dist"] = rep.dist;
    if (rep.cost)
        out["cost"] = *rep.cost;
    else
        out["cost"] = nullptr;
    out["aut_order"] = order;
    out["method"] = rep.method == Method::ClosedForm ? "closed_form" : "search";
    auto labels = [&](const std::vector<int>& vs) {
        json arr = json::array();
        for (int v : vs) arr.push_back(g.label(v));
        return arr;
    };
    if (rep.det_witness) out["det_witness"] = labels(*rep.det_witness);
    if (rep.cost_witness) out["cost_witness"] = labels(*rep.cost_witness);
    if (rep.dist_witness) out["dist_witness"] = *rep.dist_witness;
    return out;
}

std::string text_report(const SpecRef& ref, const SymmetryReport& rep, long long order) {
    Graph g = ref.graph();
    std::ostringstream os;
    os << "spec: " << ref.name() << '\n';
    os << "twin_class: " << ref.twin_class() << '\n';
    os << "det: " << rep.det << '\n';
    os << "dist: " << rep.dist << '\n';
    os << "cost: " << (rep.cost ? std::to_string(*rep.cost) : "n/a") << '\n';
    os << "aut_order: " << order << '\n';
    os << "method: " << (rep.method == Method::ClosedForm ? "closed_form" : "search") << '\n';
    if (rep.det_witness) os << "det_witness: " << braced_labels(g, *rep.det_witness) << '\n';
    if (rep.cost_witness) os << "cost_witness: " << braced_labels(g, *rep.cost_witness) << '\n';
    return os.str();
}

// Summary-table condition buckets, in presentation order.
std::string bucket_of(const SpecRef& ref) {
    if (!ref.sub) {
        switch (twin_classification(ref.base).variant) {
            case TwinVariant::CompleteGraph: return "C_n(i,j): n in {4, 5}";
            case TwinVariant::Six13: return "C_n(i,j): (n,i,j) = (6,1,3)";
            case TwinVariant::Eight13: return "C_n(i,j): (n,i,j) = (8,1,3)";
            case TwinVariant::CoTwin1013: return "C_n(i,j): (n,i,j) = (10,1,3)";
            case TwinVariant::HalfSum: return "C_n(i,j): i+j = n/2, but n != 8";
            case TwinVariant::TwinFree: return "C_n(i,j): otherwise";
        }
    }
    if (!ref.sub->half_sum_arc()) {
        auto st = symbol_stabilizer(ref.base.n, ref.base.i, ref.base.j);
        if (ref.sub->p >= 2 && st.h_prime.size() == 2)
            return "C_n(i%p,j) or C_n(i,j%p), j < n/2: p >= 2 and H' = {+-1}";
        return "C_n(i%p,j) or C_n(i,j%p), j < n/2: otherwise";
    }
    const int j = ref.base.j;
    const int p = ref.sub->p;
    if (p == 1 && j == 2) return "C_n(i,j%p), j = n/2: p = 1, j = 2";
    if (p == 1) return "C_n(i,j%p), j = n/2: p = 1, j >= 3";
    if ((p == 2 && j <= 5) || (p == 3 && j == 3))
        return "C_n(i,j%p), j = n/2: p = 2, j in {2,3,4,5}, or p = j = 3";
    return "C_n(i,j%p), j = n/2: otherwise";
}

const std::vector<std::string>& bucket_order() {
    static const std::vector<std::string> order = {
        "C_n(i,j): n in {4, 5}",
        "C_n(i,j): (n,i,j) = (6,1,3)",
        "C_n(i,j): (n,i,j) = (8,1,3)",
        "C_n(i,j): (n,i,j) = (10,1,3)",
        "C_n(i,j): i+j = n/2, but n != 8",
        "C_n(i,j): otherwise",
        "C_n(i%p,j) or C_n(i,j%p), j < n/2: p >= 2 and H' = {+-1}",
        "C_n(i%p,j) or C_n(i,j%p), j < n/2: otherwise",
        "C_n(i,j%p), j = n/2: p = 1, j = 2",
        "C_n(i,j%p), j = n/2: p = 1, j >= 3",
        "C_n(i,j%p), j = n/2: p = 2, j in {2,3,4,5}, or p = j = 3",
        "C_n(i,j%p), j = n/2: otherwise",
    };
    return order;
}

// ---- spec enumeration --------------------------------------------------------

std::vector<SpecRef> sweep_specs(const Options& opt) {
    std::vector<SpecRef> specs;
    for (int n = std::max(3, opt.n_min); n <= opt.n_max; ++n)
        for (int i = 1; 2 * i < n; ++i)
            for (int j = i + 1; 2 * j <= n; ++j) {
                CirculantSpec base{n, i, j};
                if (!base.connected()) continue;
                specs.push_back({base, std::nullopt});
                if (!opt.subdivided_sweep) continue;
                for (Arc arc : {Arc::I, Arc::J})
                    for (int p = 1; p <= opt.p_max; ++p)
                        specs.push_back({base, make_subdivided(base, arc, p)});
            }
    return specs;
}

// ---- commands ------------------------------------------------------------------

json info_json(const SpecRef& ref) {
    const CirculantSpec& base = ref.base;
    json out;
    out["spec"] = ref.name();
    out["n"] = base.n;
    out["i"] = base.i;
    out["j"] = base.j;
    out["connected"] = true;
    out["twin_class"] = ref.twin_class();
    auto st = symbol_stabilizer(base.n, base.i, base.j);
    out["h"] = st.h;
    out["h_prime"] = st.h_prime;
    out["edge_transitive"] = is_edge_transitive(base);
    if (!base.half_modulus()) out["special_conditions"] = special_conditions(base.n, base.i, base.j).names();
    AutGroup group = ref.group();
    out["group"] = json::parse(group.report_json());
    return out;
}

int cmd_info(const Options& opt) {
    CirculantSpec base = normalize(opt.n, opt.i, opt.j);
    std::ostringstream os;

    if (!base.connected()) {
        auto c = connectivity(base);
        if (opt.format == "json") {
            json out;
            out["spec"] = base.name();
            out["connected"] = false;
            out["component_count"] = c.component_count;
            out["component_spec"] = c.component_spec->name();
            emit(opt, out.dump(2) + "\n");
            return kExitOk;
        }
        os << "spec: " << base.name() << '\n';
        os << "connected: false\n";
        os << "components: " << c.component_count << " x " << c.component_spec->name() << '\n';
        emit(opt, os.str());
        return kExitOk;
    }

    if (opt.format == "json") {
        emit(opt, info_json(parse_spec(opt)).dump(2) + "\n");
        return kExitOk;
    }

    SpecRef ref = parse_spec(opt);
    os << "spec: " << ref.name() << '\n';
    os << "normalized: (" << base.n << ", " << base.i << ", " << base.j << ")\n";
    os << "connected: true\n";
    os << "twin_class: " << ref.twin_class() << '\n';
    if (!ref.subdivided()) {
        auto tc = twin_classification(base);
        if (!tc.classes.empty()) {
            os << "twin_classes:";
            for (const auto& cls : tc.classes) os << ' ' << braced(cls);
            os << '\n';
        }
        auto pairs = co_twin_pairs(build_circulant(base));
        if (!pairs.empty()) {
            os << "co_twin_pairs:";
            for (auto [a, b] : pairs) os << " {" << a << ", " << b << "}";
            os << '\n';
        }
    }
    auto st = symbol_stabilizer(base.n, base.i, base.j);
    os << "H: " << braced(st.h) << '\n';
    os << "H': " << braced(st.h_prime) << '\n';
    os << "edge_transitive: " << (is_edge_transitive(base) ? "true" : "false") << '\n';
    if (base.half_modulus()) {
        os << "special_conditions: n/a (j = n/2)\n";
    } else {
        auto names = special_conditions(base.n, base.i, base.j).names();
        os << "special_conditions: {";
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (k) os << ", ";
            os << names[k];
        }
        os << "}\n";
    }
    AutGroup group = ref.group();
    os << "aut_structure: " << structure_tag_name(group.tag) << '\n';
    os << "aut_order: " << group.order << '\n';
    emit(opt, os.str());
    return kExitOk;
}

int cmd_params(const Options& opt) {
    SpecRef ref = parse_spec(opt);
    if (!ref.base.connected())
        throw invalid_spec_error("params: spec is disconnected (parameters are per component)");
    SymmetryReport rep = ref.closed();
    long long order = ref.order();
    int exit_code = kExitOk;

    if (opt.search) {
        Graph g = ref.graph();
        PermGroupRaw oracle = brute_automorphisms(g, opt.brute);
        SymmetryReport searched = search_params(g, oracle.perms, opt.nodes);
        if (searched.det != rep.det || searched.dist != rep.dist || searched.cost != rep.cost ||
            oracle.order != order) {
            std::cerr << "MISMATCH: closed form (" << rep.det << "," << rep.dist << ","
                      << (rep.cost ? std::to_string(*rep.cost) : "-") << ") order " << order
                      << " vs search (" << searched.det << "," << searched.dist << ","
                      << (searched.cost ? std::to_string(*searched.cost) : "-") << ") order "
                      << oracle.order << '\n';
            exit_code = kExitMismatch;
        }
        rep = searched;
    }

    std::ostringstream os;
    if (opt.format == "csv")
        os << csv_header() << '\n' << csv_row(ref, rep, order) << '\n';
    else if (opt.format == "json")
        os << report_json(ref, rep, order).dump(2) << '\n';
    else if (opt.format == "md")
        os << "| spec | det | dist | cost | aut_order |\n|---|---|---|---|---|\n"
           << "| " << ref.name() << " | " << rep.det << " | " << rep.dist << " | "
           << (rep.cost ? std::to_string(*rep.cost) : "n/a") << " | " << order << " |\n";
    else
        os << text_report(ref, rep, order);
    emit(opt, os.str());
    return exit_code;
}

int cmd_table(const Options& opt) {
    std::vector<SpecRef> specs = sweep_specs(opt);
    std::ostringstream os;
    if (opt.format == "csv") {
        os << csv_header() << '\n';
        for (const auto& ref : specs) os << csv_row(ref, ref.closed(), ref.order()) << '\n';
    } else if (opt.format == "json") {
        json rows = json::array();
        for (const auto& ref : specs) rows.push_back(report_json(ref, ref.closed(), ref.order()));
        os << rows.dump(2) << '\n';
    } else {  // md / text: grouped by condition buckets
        std::map<std::string, std::vector<std::string>> rows;
        for (const auto& ref : specs) {
            SymmetryReport rep = ref.closed();
            std::ostringstream line;
            line << "| " << ref.name() << " | " << rep.det << " | " << rep.dist << " | "
                 << (rep.cost ? std::to_string(*rep.cost) : "n/a") << " | " << ref.order() << " |";
            rows[bucket_of(ref)].push_back(line.str());
        }
        for (const auto& bucket : bucket_order()) {
            auto it = rows.find(bucket);
            if (it == rows.end()) continue;
            os << "### " << bucket << "\n\n";
            os << "| spec | det | dist | cost | aut_order |\n|---|---|---|---|---|\n";
            for (const auto& line : it->second) os << line << '\n';
            os << '\n';
        }
    }
    emit(opt, os.str());
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    std::vector<SpecRef> specs = sweep_specs(opt);
    struct Outcome {
        std::string line;
        bool mismatch = false;
        bool skipped = false;
    };
    std::vector<Outcome> results(specs.size());
    std::mutex progress_mu;

    parallel_for_index(specs.size(), [&](std::size_t k) {
        const SpecRef& ref = specs[k];
        if (!opt.quiet) {
            std::scoped_lock lock(progress_mu);
            std::cerr << "verifying " << ref.name() << '\n';
        }
        Outcome& out = results[k];
        try {
            GroupVerification group = ref.sub ? verify_group(*ref.sub, opt.brute)
                                              : verify_group(ref.base, opt.brute);
            VerifySpecReport rep = ref.sub ? verify_spec(*ref.sub, opt.brute, opt.nodes)
                                           : verify_spec(ref.base, opt.brute, opt.nodes);
            std::ostringstream line;
            if (group.ok && rep.match) {
                line << "MATCH " << ref.name() << " det=" << rep.searched.det
                     << " dist=" << rep.searched.dist << " cost="
                     << (rep.searched.cost ? std::to_string(*rep.searched.cost) : "-")
                     << " order=" << group.brute_order;
            } else {
                out.mismatch = true;
                line << "MISMATCH " << ref.name();
                if (!group.ok) line << " [group: " << group.detail << "]";
                for (const auto& issue : rep.issues) line << " [" << issue << "]";
            }
            out.line = line.str();
        } catch (const budget_exceeded_error& e) {
            out.skipped = true;
            out.line = "SKIPPED " + ref.name() + " (" + std::string(e.what()) + ")";
        }
    });

    std::ostringstream os;
    int mismatches = 0, skipped = 0;
    for (const auto& out : results) {
        os << out.line << '\n';
        mismatches += out.mismatch ? 1 : 0;
        skipped += out.skipped ? 1 : 0;
    }
    os << "checked " << results.size() << " specs: " << (results.size() - mismatches - skipped)
       << " match, " << mismatches << " mismatch, " << skipped << " skipped\n";
    if (mismatches == 0 && skipped == 0) os << "all reports MATCH\n";
    emit(opt, os.str());
    if (mismatches > 0) return kExitMismatch;
    if (skipped > 0 && opt.strict) return kExitBudget;
    return kExitOk;
}

int cmd_appendix(const Options& opt) {
    std::vector<AppendixReport> reports = {verify_appendix_table3(), verify_appendix_repset_lift(),
                                           verify_appendix_c2(6, 12), verify_appendix_c3()};
    std::ostringstream os;
    bool all_ok = true;
    for (const auto& rep : reports) {
        os << rep.check << ": " << (rep.ok ? "PASS" : "FAIL") << " (" << rep.detail << ")\n";
        all_ok = all_ok && rep.ok;
    }
    emit(opt, os.str());
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_export(const Options& opt) {
    SpecRef ref = parse_spec(opt);
    Graph g = ref.graph();
    if (opt.format == "json")
        emit(opt, g.to_json() + "\n");
    else
        emit(opt, g.to_dot());
    return kExitOk;
}

void add_spec_flags(CLI::App* cmd, Options& opt, bool required) {
    cmd->add_option("--n", opt.n, "graph order")->required(required);
    cmd->add_option("--i", opt.i, "first generator")->required(required);
    cmd->add_option("--j", opt.j, "second generator")->required(required);
    cmd->add_option("--subdivide", opt.subdivide, "subdivide the arcs of one generator")
        ->check(CLI::IsMember({"i", "j"}));
    cmd->add_option("--p", opt.p, "number of subdivision vertices per arc")->check(CLI::PositiveNumber);
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv", "md", "dot"}));
    cmd->add_option("--out", opt.out_path, "write output to a file");
    cmd->add_option("--budget-vertices", opt.brute.max_vertices, "brute-force vertex limit");
    cmd->add_option("--budget-nodes", opt.brute.max_nodes, "search node limit");
    cmd->add_flag("--strict", opt.strict, "treat budget refusals as errors");
    cmd->add_flag("--quiet", opt.quiet, "suppress progress output");
}

void add_range_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n-min", opt.n_min, "smallest order");
    cmd->add_option("--n-max", opt.n_max, "largest order");
    cmd->add_option("--p-max", opt.p_max, "largest subdivision depth");
    cmd->add_flag("--subdivided", opt.subdivided_sweep, "include subdivided specs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-generator circulant graphs: automorphisms and symmetry parameters"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* info = app.add_subcommand("info", "spec structure: twins, H/H', group");
    add_spec_flags(info, opt, true);
    add_common_flags(info, opt);

    CLI::App* params = app.add_subcommand("params", "determining/distinguishing/cost report");
    add_spec_flags(params, opt, true);
    add_common_flags(params, opt);
    params->add_flag("--search", opt.search, "confirm the closed form against the brute-force oracle");

    CLI::App* table = app.add_subcommand("table", "closed-form reports for a range of specs");
    add_range_flags(table, opt);
    add_common_flags(table, opt);

    CLI::App* verify = app.add_subcommand("verify", "cross-validate closed forms against the oracle");
    add_range_flags(verify, opt);
    add_common_flags(verify, opt);

    CLI::App* appendix = app.add_subcommand("appendix", "representative-set checks");
    add_common_flags(appendix, opt);

    CLI::App* exporter = app.add_subcommand("export", "emit the graph as DOT or JSON");
    add_spec_flags(exporter, opt, true);
    add_common_flags(exporter, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    // --budget-nodes also caps the symmetry searches
    opt.nodes.max_nodes = opt.brute.max_nodes;

    try {
        if (info->parsed()) return cmd_info(opt);
        if (params->parsed()) return cmd_params(opt);
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (appendix->parsed()) return cmd_appendix(opt);
        if (exporter->parsed()) return cmd_export(opt);
    } catch (const budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return opt.strict ? kExitBudget : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
