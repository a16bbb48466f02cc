#include "balgraph/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "balgraph/formats.hpp"
#include "balgraph/oracle.hpp"
#include "text_util.hpp"

namespace balgraph {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

// Prefixes parse diagnostics with the file they came from.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Parse>
auto read_with(const std::string& path, Parse&& parse) {
    std::string text = detail::read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& ex) {
        throw FileError(path + ": " + ex.what());
    }
}

MultiGraph load_graph(const std::string& path) {
    return read_with(path, [](const std::string& text) { return parse_graph(text); });
}

LabelingRecords load_labels(const std::string& path, const MultiGraph& g, const FiniteAbelianGroup& group) {
    return read_with(path, [&](const std::string& text) { return parse_labeling(g, group, text); });
}

void print_partition(std::ostream& out, const MultiGraph& g, const Partition& part, std::size_t k) {
    out << "con_" << k << " = " << part.size() << '\n';
    for (std::size_t i = 0; i < part.size(); ++i) {
        out << "class " << i + 1 << ':';
        for (auto v : part.block(i)) out << ' ' << g.vertex_id(v);
        out << '\n';
    }
}

std::string edge_list(const MultiGraph& g, const EdgeSet& s) {
    std::string text = "{";
    bool first = true;
    for (auto e : s.members()) {
        if (!first) text += ',';
        text += g.edge(e).id;
        first = false;
    }
    return text + "}";
}

int verdict(std::ostream& out, bool value, const char* yes, const char* no) {
    out << (value ? yes : no) << '\n';
    return value ? kTrue : kFalse;
}

struct Options {
    std::string graph;
    std::string group;
    std::string labels;
    std::string coords;
    std::string which;
    std::size_t k = 1;
    std::size_t weak = 0;
    bool oracle = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced labelings of multigraphs over finite Abelian groups", "balgraph"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_graph = [&](CLI::App* sub) { sub->add_option("-g,--graph", o.graph, "graph file")->required(); };
    auto add_group = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--group", o.group, "group, e.g. Z2xZ4");
        if (required) opt->required();
    };
    auto add_which = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--which", o.which, "H, B or W")->check(CLI::IsMember({"H", "B", "W"}));
        if (required) opt->required();
    };
    auto add_labels = [&](CLI::App* sub) { sub->add_option("--labels", o.labels, "labeling file")->required(); };

    auto* structure = app.add_subcommand("structure", "group structure of H, B, W");
    add_graph(structure);
    add_which(structure, false);
    add_group(structure, false);

    auto* components = app.add_subcommand("components", "k-edge-connectivity classes");
    add_graph(components);
    components->add_option("-k", o.k, "connectivity level")->check(CLI::PositiveNumber);

    auto* cycle_basis = app.add_subcommand("cycle-basis", "fundamental cycles or a weak cycle space basis");
    add_graph(cycle_basis);
    cycle_basis->add_option("--weak", o.weak, "weak k-cycle space")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "is the labeling balanced");
    auto* balanceable = app.add_subcommand("balanceable", "is the vertex labeling balanceable");
    auto* balance = app.add_subcommand("balance", "edge labeling balancing a vertex labeling");
    auto* coords = app.add_subcommand("coords", "coordinates of a balanced full labeling");
    auto* oracle_check = app.add_subcommand("oracle-check", "balancedness by simple-cycle enumeration");
    for (auto* sub : {check, balanceable, balance, coords, oracle_check}) {
        add_graph(sub);
        add_group(sub, true);
        add_labels(sub);
    }

    auto* extend = app.add_subcommand("extend", "balanced full labeling from coordinates");
    add_graph(extend);
    add_group(extend, true);
    extend->add_option("--coords", o.coords, "coordinate file")->required();

    auto* count = app.add_subcommand("count", "number of balanced labelings");
    add_graph(count);
    add_group(count, true);
    add_which(count, true);
    count->add_flag("--oracle", o.oracle, "count by exhaustion");

    auto* oracle_classes = app.add_subcommand("oracle-classes", "k-edge classes by edge deletion");
    add_graph(oracle_classes);
    oracle_classes->add_option("-k", o.k, "connectivity level")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? kTrue : kUsage;
    }

    try {
        const MultiGraph g = load_graph(o.graph);
        const FiniteAbelianGroup group = o.group.empty() ? FiniteAbelianGroup{} : parse_group(o.group);

        if (*structure) {
            const BalanceFrame frame(g);
            std::vector<LabelingKind> kinds{LabelingKind::H, LabelingKind::B, LabelingKind::W};
            if (!o.which.empty()) kinds = {parse_labeling_kind(o.which)};
            for (auto kind : kinds) {
                if (kinds.size() > 1) out << to_string(kind) << ": ";
                auto s = frame.group_structure(kind);
                out << to_string(s);
                if (!o.group.empty()) out << "; |" << to_string(kind) << "| = " << structure_cardinality(s, group);
                out << '\n';
            }
            return kTrue;
        }
        if (*components) {
            print_partition(out, g, k_edge_classes(g, o.k), o.k);
            return kTrue;
        }
        if (*oracle_classes) {
            print_partition(out, g, oracle_k_classes(g, o.k), o.k);
            return kTrue;
        }
        if (*cycle_basis) {
            if (o.weak > 0) {
                auto weak = weak_cycle_space(g, o.weak);
                out << "dim = " << weak.dim << '\n';
                for (const auto& s : weak.basis) out << edge_list(g, s) << '\n';
            } else {
                auto basis = cycle_space_basis(g);
                out << "dim = " << basis.size() << '\n';
                for (const auto& c : basis) out << edge_list(g, c.edges) << "  " << format_ttrail(g, c.trail) << '\n';
            }
            return kTrue;
        }
        if (*count) {
            auto kind = parse_labeling_kind(o.which);
            out << '|' << to_string(kind) << "| = ";
            if (o.oracle)
                out << oracle_count_balanced(g, group, kind) << '\n';
            else
                out << count_balanced(g, group, kind) << '\n';
            return kTrue;
        }
        if (*extend) {
            const BalanceFrame frame(g);
            auto c = read_with(o.coords, [&](const std::string& text) { return parse_coordinates(frame, group, text); });
            out << format_labeling(g, frame.xi_inv(group, c));
            return kTrue;
        }

        const auto records = load_labels(o.labels, g, group);
        if (*check) {
            if (records.any_vertex())
                return verdict(out, is_balanced_full(g, group, require_full_labeling(g, records)), "balanced",
                               "not balanced");
            return verdict(out, is_balanced_edges(g, group, require_edge_labeling(g, records)), "balanced",
                           "not balanced");
        }
        if (*oracle_check) {
            if (records.any_vertex())
                return verdict(out, oracle_is_balanced(g, group, require_full_labeling(g, records)), "balanced",
                               "not balanced");
            return verdict(out, oracle_is_balanced(g, group, require_edge_labeling(g, records)), "balanced",
                           "not balanced");
        }
        if (*balanceable) {
            return verdict(out, is_balanceable(g, group, require_vertex_labeling(g, records)), "balanceable",
                           "not balanceable");
        }
        if (*balance) {
            auto f = balgraph::balance(g, group, require_vertex_labeling(g, records));
            if (!f) return verdict(out, false, "", "not balanceable");
            out << format_labeling(g, *f);
            return kTrue;
        }
        if (*coords) {
            const BalanceFrame frame(g);
            auto h = require_full_labeling(g, records);
            if (!frame.is_balanced_full(group, h)) return verdict(out, false, "", "not balanced");
            out << format_coordinates(frame, frame.xi(group, h));
            return kTrue;
        }
    } catch (const std::logic_error& ex) {
        // invalid_argument and out_of_range are user errors; anything else is a bug.
        if (!dynamic_cast<const std::invalid_argument*>(&ex) && !dynamic_cast<const std::out_of_range*>(&ex)) throw;
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const std::runtime_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace balgraph
