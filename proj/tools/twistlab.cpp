#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "twistlab/json_io.hpp"

using namespace twistlab;
using io::json;

namespace {

enum Exit { ok = 0, math_failure = 1, input_error = 2, budget_exceeded = 3 };

struct Common {
    std::uint64_t seed = 1;
    std::string out;
    int threads = 0;
    std::optional<std::uint64_t> budget;
};

json header(const Common& c, const std::string& command)
{
    return {{"schema_version", io::kSchemaVersion}, {"seed", c.seed}, {"command", command}};
}

void emit(const Common& c, const json& j)
{
    if (c.out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    io::write_file(c.out, j);
}

void emit_text(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw io::ParseError("cannot write " + c.out);
    f << text;
}

json quiver_report(const Quiver& q)
{
    json j = io::to_json(q);
    json vertices = json::array();
    for (int i = 0; i < q.n(); ++i)
        vertices.push_back({{"vertex", i + 1}, {"rank", q.rank(i)}, {"rrank", q.rrank(i)}});
    j["vertices"] = vertices;
    j["rank"] = q.rank();
    j["rrank"] = q.rrank();
    return j;
}

int cmd_verify(const Common& c, const std::string& path)
{
    EGrid g = io::grid_from_json(io::read_file(path));
    AxiomReport r = check_axioms(g);
    json out = header(c, "verify");
    out.update(io::to_json(r));
    out["tau_axioms_ok"] = check_tau_axioms(g).ok();
    out["quiver"] = quiver_report(quiver_of(g));
    if (r.ok()) {
        AdmissiblePair p = pair_from_grid(g);
        out["splitted"] = p.splitted();
        out["unital"] = p.unital();
        out["factorizable"] = p.factorizable();
    }
    emit(c, out);
    return r.ok() ? ok : math_failure;
}

int cmd_build(const Common& c, const std::string& path)
{
    EGrid g = io::grid_from_json(io::read_file(path));
    AxiomReport r = check_axioms(g);
    if (!r.ok()) {
        std::cerr << "axiom " << r.first_failure()->name << " fails: " << r.first_failure()->detail << '\n';
        return math_failure;
    }
    json out = header(c, "build");
    out.update(io::twisted_algebra_json(build_twisted_algebra(g, c.threads)));
    emit(c, out);
    return ok;
}

std::optional<AdmissibleShape> shape_from_arg(const std::string& shape, int n)
{
    if (shape == "flip") {
        std::vector<Arrow> loops;
        for (int i = 0; i < n; ++i)
            loops.push_back({i, i});
        return validate_admissible_shape(Quiver(n, loops));
    }
    if (shape == "2cycle")
        return validate_admissible_shape(Quiver(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    if (shape == "path") {
        std::vector<Arrow> arrows;
        for (int i = 0; i < n; ++i) {
            arrows.push_back({i, i});
            if (i + 1 < n)
                arrows.push_back({i, i + 1});
        }
        return validate_admissible_shape(Quiver(n, arrows));
    }
    if (shape == "all" || shape == "two-vertex")
        return std::nullopt;
    return validate_admissible_shape(io::quiver_from_json(io::read_file(shape)));
}

int cmd_classify(const Common& c, const std::string& shape, int n, int m, const std::string& field, int samples,
                 bool count_only)
{
    Field f = Field::parse(field);
    std::mt19937_64 rng(c.seed);
    Sampling s{samples, &rng};
    GridSet grids;
    if (shape == "all")
        grids = classify_all(n, m, f, s);
    else if (shape == "two-vertex")
        grids = classify_two_vertices(m, f, s);
    else
        grids = classify_shape(*shape_from_arg(shape, n), m, f, s);
    json out = header(c, "classify");
    out.update(io::gridset_to_json(grids, c.seed));
    out["field"] = f.to_string();
    out["m"] = m;
    if (count_only)
        out.erase("grids");
    emit(c, out);
    return ok;
}

int cmd_enumerate(const Common& c, const std::string& kind, const std::string& shape, int n, int m,
                  const std::string& field, int samples)
{
    Field f = Field::parse(field);
    json out = header(c, "enumerate");
    out["field"] = f.to_string();
    out["m"] = m;
    json items = json::array();
    if (kind == "rank1") {
        auto sh = shape_from_arg(shape, n);
        if (!sh)
            throw InvalidInput("rank1 enumeration needs a concrete shape");
        for (const auto& d : enumerate_rank1_data(*sh, m))
            items.push_back(io::to_json(d));
    } else if (kind == "cycle") {
        if (f.is_prime_field()) {
            for (const auto& d : enumerate_cycle_data(m, f))
                items.push_back(io::to_json(d));
        } else if (samples > 0) {
            std::mt19937_64 rng(c.seed);
            for (const auto& d : cycle_data(m, f, {samples, &rng}))
                items.push_back(io::to_json(d));
        } else {
            for (const auto& fam : cycle_families(m, f))
                items.push_back(io::to_json(fam));
            out["symbolic"] = true;
        }
    } else {
        throw InvalidInput("unknown kind \"" + kind + "\"; use rank1 or cycle");
    }
    out["count"] = items.size();
    out["data"] = items;
    emit(c, out);
    return ok;
}

int cmd_oracle(const Common& c, int n, int m, std::uint32_t p, bool no_prune, const std::string& compare)
{
    SearchOptions opt;
    opt.prune = !no_prune;
    opt.threads = c.threads;
    if (c.budget)
        opt.budget = *c.budget;
    SearchStats stats;
    GridSet grids = brute_force_twisting_maps(n, m, p, opt, &stats);
    json out = header(c, "oracle");
    out.update(io::gridset_to_json(grids, c.seed));
    out["n"] = n;
    out["m"] = m;
    out["field"] = Field::prime(p).to_string();
    out["nodes"] = stats.nodes;
    if (compare.empty()) {
        emit(c, out);
        return ok;
    }
    GridSet other = io::gridset_from_json(io::read_file(compare));
    SetDifference d = compare_sets(grids, other);
    json report = header(c, "oracle");
    report["oracle_count"] = grids.size();
    report["file_count"] = other.size();
    report["only_in_oracle"] = io::gridset_to_json(d.only_in_a, c.seed)["grids"];
    report["only_in_file"] = io::gridset_to_json(d.only_in_b, c.seed)["grids"];
    report["agree"] = d.empty();
    emit(c, report);
    return d.empty() ? ok : math_failure;
}

int cmd_normalize(const Common& c, const std::string& path)
{
    json in = io::read_file(path);
    if (!in.contains("X") || !in.contains("u") || !in.contains("field"))
        throw io::ParseError("normalize input needs \"field\", \"X\" and \"u\"");
    Field f = Field::parse(in.at("field").get<std::string>());
    Matrix X = io::matrix_from_rows(in.at("X"), f);
    IndexMap u;
    for (const auto& v : in.at("u")) {
        if (!v.is_number_integer() || v.get<int>() < 1)
            throw io::ParseError("\"u\" values are 1-based integers");
        u.push_back(v.get<int>() - 1);
    }
    FiberPartition fibers(u);
    NormalizedMatrix nm = normalize(X, fibers);
    json out = header(c, "normalize");
    out["normalized"] = io::to_json(nm);
    out["same_orbit"] = same_orbit(X, nm.matrix, fibers);
    if (X.rows() == 2)
        out["canonical2"] = io::to_json(normalize2(X, fibers));
    emit(c, out);
    return ok;
}

int cmd_extract(const Common& c, const std::string& path)
{
    json in = io::read_file(path);
    std::vector<OmegaMatrix> ws;
    Field f;
    if (in.contains("omegas")) {
        f = Field::parse(in.at("field").get<std::string>());
        for (const auto& w : in.at("omegas"))
            ws.push_back(io::omega_from_json(w, f));
    } else {
        EGrid g = io::grid_from_json(in);
        f = g.field();
        ws = omegas_from_grid(g);
    }
    CycleDatum d = extract_cycle_datum(ws);
    json out = header(c, "extract");
    out["field"] = f.to_string();
    out.update(io::to_json(d));
    emit(c, out);
    return ok;
}

int cmd_export(const Common& c, const std::string& path, bool dot)
{
    EGrid g = io::grid_from_json(io::read_file(path));
    Quiver q = quiver_of(g);
    if (dot) {
        emit_text(c, export_dot(q));
        return ok;
    }
    json out = header(c, "export");
    out["quiver"] = quiver_report(q);
    emit(c, out);
    return ok;
}

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("-o,--output", c.out, "Output file (default stdout)");
    sub->add_option("--seed", c.seed, "Seed for sampled rationals");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"twistlab: twisting maps, quiver representations and their classification"};
    app.require_subcommand(1);
    Common c;
    std::string path, shape = "2cycle", field = "p:2", kind = "cycle", compare;
    int n = 2, m = 2, samples = 0;
    std::uint32_t p = 2;
    bool no_prune = false, count_only = false, dot = false;
    std::uint64_t budget = 0;

    auto* verify = app.add_subcommand("verify", "Check the twisting axioms of a grid file");
    verify->add_option("grid", path, "EGrid JSON")->required();
    add_common(verify, c);

    auto* build = app.add_subcommand("build", "Structure constants of the twisted tensor product");
    build->add_option("grid", path, "EGrid JSON")->required();
    build->add_option("--threads", c.threads, "Threads for the associativity check (0 = all)");
    add_common(build, c);

    auto* classify = app.add_subcommand("classify", "Grids generated from the rank-one classification");
    classify->add_option("--shape", shape, "flip | 2cycle | path | two-vertex | all | quiver JSON file");
    classify->add_option("--n", n, "Vertices for flip, path and all");
    classify->add_option("--m", m, "Dimension of A = K^m")->required();
    classify->add_option("--field", field, "q or p:<prime>");
    classify->add_option("--sample", samples, "Random rationals per free parameter over q");
    classify->add_flag("--count", count_only, "Only report the number of grids");
    add_common(classify, c);

    auto* enumerate = app.add_subcommand("enumerate", "Classification data");
    enumerate->add_option("--kind", kind, "rank1 | cycle");
    enumerate->add_option("--shape", shape, "Shape for rank1 (flip | path | quiver JSON file)");
    enumerate->add_option("--n", n, "Vertices for flip and path");
    enumerate->add_option("--m", m, "Dimension of A = K^m")->required();
    enumerate->add_option("--field", field, "q or p:<prime>");
    enumerate->add_option("--sample", samples, "Sample the rational families instead of listing them");
    add_common(enumerate, c);

    auto* oracle = app.add_subcommand("oracle", "Brute-force every grid over F_p");
    oracle->add_option("--n", n, "Vertices")->required();
    oracle->add_option("--m", m, "Dimension of A = K^m")->required();
    oracle->add_option("--p", p, "Prime")->required();
    oracle->add_flag("--no-prune", no_prune, "Enumerate every matrix tuple");
    oracle->add_option("--threads", c.threads, "OpenMP threads (1 = serial reference, 0 = all)");
    oracle->add_option("--budget", budget, "Node budget (default TWISTLAB_BUDGET or 1e9)");
    oracle->add_option("--compare", compare, "GridSet file to compare against");
    add_common(oracle, c);

    auto* norm = app.add_subcommand("normalize", "Orbit normal form of an invertible matrix");
    norm->add_option("input", path, "JSON with field, X and u")->required();
    add_common(norm, c);

    auto* extract = app.add_subcommand("extract", "Recover (u, a) from a 2-cycle grid or omega matrices");
    extract->add_option("input", path, "EGrid JSON or {field, omegas}")->required();
    add_common(extract, c);

    auto* exp = app.add_subcommand("export", "Export the quiver of a grid");
    exp->add_option("grid", path, "EGrid JSON")->required();
    exp->add_flag("--dot", dot, "Graphviz output instead of JSON");
    add_common(exp, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    if (budget > 0)
        c.budget = budget;

    try {
        if (*verify)
            return cmd_verify(c, path);
        if (*build)
            return cmd_build(c, path);
        if (*classify)
            return cmd_classify(c, shape, n, m, field, samples, count_only);
        if (*enumerate)
            return cmd_enumerate(c, kind, shape, n, m, field, samples);
        if (*oracle)
            return cmd_oracle(c, n, m, p, no_prune, compare);
        if (*norm)
            return cmd_normalize(c, path);
        if (*extract)
            return cmd_extract(c, path);
        if (*exp)
            return cmd_export(c, path, dot);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return math_failure;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
