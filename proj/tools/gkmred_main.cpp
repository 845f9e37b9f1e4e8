// gkmred: equivariant cohomology and symplectic-reduction computations for
// Hamiltonian torus spaces given by GKM fixed-point data.
//
// Exit codes: 0 success, 1 domain error (non-regular mu, invalid space, ...),
// 2 usage or parse error.

#include "gkmred/gkmred.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace gkm;

SpacePtr resolve_space(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_space(spec.substr(8));
    return load_space_file(spec);
}

RatVec parse_mu(const std::string& text) {
    RatVec mu;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) mu.push_back(parse_rational(cur));
    if (mu.empty()) throw std::invalid_argument("--mu: empty");
    return mu;
}

Subtorus parse_subtorus(const std::string& text, int ambient_rank) {
    if (text.empty() || text == "full") return Subtorus::full(ambient_rank);
    Subtorus sub;
    std::istringstream cols(text);
    std::string col;
    while (std::getline(cols, col, ';')) {
        IntVec c;
        std::istringstream entries(col);
        std::string e;
        while (std::getline(entries, e, ',')) c.push_back(std::stoll(e));
        if (static_cast<int>(c.size()) != ambient_rank)
            throw std::invalid_argument("--subtorus: column length must equal the torus rank");
        sub.columns.push_back(std::move(c));
    }
    sub.check_valid();
    return sub;
}

std::string ivec_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int cmd_validate(const std::string& space_arg) {
    SpacePtr sp = resolve_space(space_arg);
    ValidationReport rep = validate(*sp);
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    if (rep.ok()) {
        std::cout << "OK: " << sp->name << " (" << sp->point_count() << " fixed points, "
                  << sp->edges.size() << " edges, rank " << sp->rank() << ")\n";
        return 0;
    }
    return 1;
}

int cmd_betti(const std::string& space_arg, int degree_bound) {
    SpacePtr sp = resolve_space(space_arg);
    auto rep = validate(*sp);
    if (!rep.ok()) {
        for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
        return 1;
    }
    if (degree_bound < 0) degree_bound = 2 * sp->complex_dim;
    Cohomology coh(sp);
    std::vector<size_t> dims;
    for (int k = 0; k <= degree_bound; k += 2) dims.push_back(coh.basis(k).dim());
    std::cout << "equivariant Betti numbers of " << sp->name << "\n";
    for (size_t i = 0; i < dims.size(); ++i)
        std::cout << "dim H^" << 2 * i << " = " << dims[i] << "\n";
    return 0;
}

int cmd_reduce(const std::string& space_arg, const std::string& mu_arg,
               const std::string& subtorus_arg, const std::string& directions_arg,
               std::uint64_t seed, bool with_structure, int degree_bound,
               const std::string& json_path) {
    SpacePtr sp = resolve_space(space_arg);
    RatVec mu = parse_mu(mu_arg);
    Subtorus sub = parse_subtorus(subtorus_arg, sp->rank());

    std::vector<IntVec> directions = default_directions(sp, sub);
    if (directions_arg.rfind("walls+samples:", 0) == 0) {
        int n = std::stoi(directions_arg.substr(14));
        SpacePtr t_space = project_moment(sp, sub);
        Lcg rng(seed);
        int guard = 0;
        while (static_cast<int>(directions.size()) <
               static_cast<int>(default_directions(sp, sub).size()) + n) {
            if (++guard > 100 * n + 1000)
                throw std::domain_error("could not sample equality-free directions");
            IntVec xi = random_direction(rng, t_space->rank());
            Rational level = dot(mu, xi);
            bool equality = false;
            for (const auto& p : t_space->points)
                if (dot(p.moment, xi) == level) { equality = true; break; }
            if (!equality) directions.push_back(std::move(xi));
        }
    } else if (directions_arg != "walls" && !directions_arg.empty()) {
        throw std::invalid_argument("--directions: expected 'walls' or 'walls+samples:N'");
    }

    ReductionReport rep = reduce(sp, mu, sub, degree_bound, &directions);

    std::cout << "reduction of " << sp->name << " at mu = (";
    for (size_t i = 0; i < mu.size(); ++i) std::cout << (i ? "," : "") << mu[i].str();
    std::cout << ")" << (rep.proper_subtorus ? " by a proper subtorus" : "") << "\n";
    if (rep.subtorus_nongeneric)
        std::cout << "note: subtorus is not generic (a projected weight vanishes)\n";
    std::cout << "directions:";
    for (const auto& d : rep.directions) std::cout << " " << ivec_str(d);
    std::cout << "\n";
    std::cout << "degree  dim_H  dim_ker  betti\n";
    for (size_t i = 0; i < rep.degrees.size(); ++i)
        std::cout << rep.degrees[i] << "\t" << rep.dim_h[i] << "\t" << rep.dim_kernel[i] << "\t"
                  << rep.betti[i] << "\n";
    if (rep.proper_subtorus) {
        std::cout << "equivariant (classes of the full torus): degree  dim_H  dim_ker\n";
        for (size_t i = 0; i < rep.degrees.size(); ++i)
            std::cout << rep.degrees[i] << "\t" << rep.dim_h_equivariant[i] << "\t"
                      << rep.dim_kernel_equivariant[i] << "\n";
    }

    StructureTable table;
    if (with_structure) {
        table = structure_constants(sp, mu, sub, degree_bound);
        std::cout << "quotient ring representatives per degree:";
        for (size_t i = 0; i < table.degrees.size(); ++i)
            std::cout << " H^" << table.degrees[i] << ":" << table.rep_coords[i].size();
        std::cout << "\n";
        for (const auto& e : table.entries) {
            std::cout << "e" << e.deg_a << "_" << e.ia << " * e" << e.deg_b << "_" << e.ib << " =";
            if (e.coeffs.empty()) std::cout << " 0 (top degree exceeded in the quotient)";
            for (size_t j = 0; j < e.coeffs.size(); ++j)
                std::cout << " " << e.coeffs[j].str() << "*e" << (e.deg_a + e.deg_b) << "_" << j
                          << (j + 1 < e.coeffs.size() ? " +" : "");
            std::cout << "\n";
        }
        if (table.truncated_pairs)
            std::cout << "note: " << table.truncated_pairs
                      << " products exceeded the degree bound and were truncated\n";
    }

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write '" + json_path + "'");
        out << dump_json(report_to_json(rep, with_structure ? &table : nullptr));
        std::cout << "report written to " << json_path << "\n";
    }
    return 0;
}

int cmd_kernel(const std::string& space_arg, const std::string& mu_arg,
               const std::string& subtorus_arg, int degree, bool witness) {
    SpacePtr sp = resolve_space(space_arg);
    RatVec mu = parse_mu(mu_arg);
    Subtorus sub = parse_subtorus(subtorus_arg, sp->rank());
    SpacePtr t_space = project_moment(sp, sub);
    Cohomology coh(t_space);
    auto directions = default_directions(sp, sub);
    auto slices = kernel_ideal(coh, mu, Subtorus::full(t_space->rank()), directions, degree);
    const auto& slice = slices.back();
    std::cout << "kernel slice of " << sp->name << " in degree " << degree << ": dim "
              << slice.subspace.dim() << " (of " << coh.basis(degree).dim() << ")\n";
    for (size_t i = 0; i < slice.subspace.basis().rows(); ++i) {
        RatVec row = slice.subspace.basis().row(i);
        std::cout << "k" << i << " = [";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? ", " : "") << row[j].str();
        std::cout << "]";
        if (witness) {
            EquivariantClass cls = coh.combine(degree, row);
            auto m = verify_class_in_kernel(coh, cls, mu, Subtorus::full(t_space->rank()),
                                            directions, degree);
            std::cout << "  witness:";
            if (m.witnesses.empty()) std::cout << " -";
            for (const auto& w : m.witnesses) std::cout << " " << ivec_str(w);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_plot(const std::string& space_arg, const std::string& out_path, const std::string& mu_arg,
             const std::string& class_expr, bool hyperplanes, bool no_walls, bool no_edges) {
    SpacePtr sp = resolve_space(space_arg);
    PlotSpec spec;
    spec.draw_walls = !no_walls;
    spec.draw_edges = !no_edges;
    spec.draw_mu_hyperplanes = hyperplanes;
    if (!mu_arg.empty()) spec.mu = parse_mu(mu_arg);
    if (!class_expr.empty()) spec.label_class = parse_class_expr(class_expr, sp);
    std::string svg = render_svg(sp, spec);
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << svg;
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_catalog(const std::string& dump_name) {
    if (!dump_name.empty()) {
        SpacePtr sp = builtin_space(dump_name);
        std::cout << dump_json(space_to_json(*sp));
        return 0;
    }
    for (const auto& name : builtin_names()) {
        if (name == "cpn(n)") {
            std::cout << "cpn(n)        projective n-space (parametric, e.g. builtin:cpn(3))\n";
            continue;
        }
        SpacePtr sp = builtin_space(name);
        std::cout << name << "\t" << sp->point_count() << " fixed points, " << sp->edges.size()
                  << " edges, rank " << sp->rank() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant cohomology and Kirwan kernels of GKM spaces"};
    app.require_subcommand(1);

    std::string space_arg, mu_arg, subtorus_arg = "full", directions_arg = "walls";
    std::string json_path, out_path, class_expr, dump_name;
    int degree_bound = -1, degree = 0;
    std::uint64_t seed = 12345;
    bool with_structure = false, witness = false, hyperplanes = false;
    bool no_walls = false, no_edges = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a space document");
    validate_cmd->add_option("--space", space_arg, "builtin:<name> or a JSON file")->required();

    auto* betti_cmd = app.add_subcommand("betti", "equivariant Betti numbers");
    betti_cmd->add_option("--space", space_arg)->required();
    betti_cmd->add_option("--degree-bound", degree_bound);

    auto* reduce_cmd = app.add_subcommand("reduce", "Betti numbers of the symplectic reduction");
    reduce_cmd->add_option("--space", space_arg)->required();
    reduce_cmd->add_option("--mu", mu_arg, "regular value, e.g. 5/4,5/4")->required();
    reduce_cmd->add_option("--subtorus", subtorus_arg, "'full' or inclusion columns 'a,b;c,d'");
    reduce_cmd->add_option("--directions", directions_arg, "walls | walls+samples:N");
    reduce_cmd->add_option("--seed", seed);
    reduce_cmd->add_option("--degree-bound", degree_bound);
    reduce_cmd->add_flag("--structure", with_structure, "emit quotient-ring structure constants");
    reduce_cmd->add_option("--json", json_path, "write the JSON report here");

    auto* kernel_cmd = app.add_subcommand("kernel", "basis of a kernel slice");
    kernel_cmd->add_option("--space", space_arg)->required();
    kernel_cmd->add_option("--mu", mu_arg)->required();
    kernel_cmd->add_option("--subtorus", subtorus_arg);
    kernel_cmd->add_option("--degree", degree)->required();
    kernel_cmd->add_flag("--witness", witness, "report witnessing wall normals per generator");

    auto* plot_cmd = app.add_subcommand("plot", "SVG of the moment image (rank 2)");
    plot_cmd->add_option("--space", space_arg)->required();
    plot_cmd->add_option("--out", out_path)->required();
    plot_cmd->add_option("--mu", mu_arg);
    plot_cmd->add_option("--class", class_expr, "label vertices with this class's restrictions");
    plot_cmd->add_flag("--hyperplanes", hyperplanes, "draw hyperplanes through mu parallel to walls");
    plot_cmd->add_flag("--no-walls", no_walls);
    plot_cmd->add_flag("--no-edges", no_edges);

    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in spaces");
    catalog_cmd->add_option("--dump", dump_name, "print a builtin as a JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(space_arg);
        if (app.got_subcommand(betti_cmd)) return cmd_betti(space_arg, degree_bound);
        if (app.got_subcommand(reduce_cmd))
            return cmd_reduce(space_arg, mu_arg, subtorus_arg, directions_arg, seed,
                              with_structure, degree_bound, json_path);
        if (app.got_subcommand(kernel_cmd))
            return cmd_kernel(space_arg, mu_arg, subtorus_arg, degree, witness);
        if (app.got_subcommand(plot_cmd))
            return cmd_plot(space_arg, out_path, mu_arg, class_expr, hyperplanes, no_walls,
                            no_edges);
        if (app.got_subcommand(catalog_cmd)) return cmd_catalog(dump_name);
    } catch (const gkm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
