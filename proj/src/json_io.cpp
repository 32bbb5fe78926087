#include "twistlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace twistlab::io {

namespace {

const json& field_at(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t size_at(const json& j, const char* key)
{
    const json& v = field_at(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Field field_from(const json& j)
{
    const json& v = field_at(j, "field");
    if (!v.is_string())
        throw ParseError("\"field\" must be \"q\" or \"p:<prime>\"");
    return Field::parse(v.get<std::string>());
}

const json& array_at(const json& j, const char* key, std::size_t expected)
{
    const json& v = field_at(j, key);
    if (!v.is_array() || v.size() != expected)
        throw ParseError(std::string("\"") + key + "\" must be an array of length " + std::to_string(expected));
    return v;
}

IndexMap index_map_from(const json& j, std::size_t range)
{
    if (!j.is_array())
        throw ParseError("a function must be an array of 1-based values");
    IndexMap u;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("function values must be integers");
        long long v = x.get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > range)
            throw ParseError("function value " + std::to_string(v) + " out of range 1.." + std::to_string(range));
        u.push_back(static_cast<int>(v - 1));
    }
    return u;
}

json index_map_json(const IndexMap& u)
{
    json out = json::array();
    for (int v : u)
        out.push_back(v + 1);
    return out;
}

} // namespace

json to_json(const Scalar& s)
{
    if (!s.is_rational())
        return s.residue();
    const mpq_class& q = s.rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalar_from_json(const json& j, const Field& f)
{
    if (j.is_number_integer()) {
        if (!f.is_prime_field())
            return f.from_rational(mpq_class(std::to_string(j.get<long long>())));
        return f.from_int(j.get<long>());
    }
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            throw ParseError("bad scalar \"" + j.get<std::string>() + "\"");
        q.canonicalize();
        return f.from_rational(q);
    }
    throw ParseError("a scalar must be an integer or a \"num/den\" string");
}

json to_json(const Vector& v)
{
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(to_json(v[i]));
    return out;
}

Vector vector_from_json(const json& j, const Field& f)
{
    if (!j.is_array())
        throw ParseError("a vector must be an array");
    Vector v(f, j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = scalar_from_json(j[i], f);
    return v;
}

json matrix_rows(const Matrix& m)
{
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(to_json(m.row(r)));
    return out;
}

Matrix matrix_from_rows(const json& j, const Field& f)
{
    if (!j.is_array())
        throw ParseError("a matrix must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j)
        rows.push_back(vector_from_json(r, f));
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw ParseError("matrix rows have different lengths");
    return Matrix::from_rows(f, cols, rows);
}

json to_json(const Matrix& m)
{
    return {{"dimension", m.rows()}, {"field", m.field().to_string()}, {"entries", matrix_rows(m)}};
}

Matrix endo_from_json(const json& j)
{
    Field f = field_from(j);
    std::size_t d = size_at(j, "dimension");
    Matrix m = matrix_from_rows(field_at(j, "entries"), f);
    if (m.rows() != d || m.cols() != d)
        throw ParseError("entries do not match \"dimension\"");
    return m;
}

json to_json(const Algebra& a)
{
    json structure = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            structure.push_back(to_json(a.product(i, j)));
    return {{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"structure", structure}};
}

Algebra algebra_from_json(const json& j, const Field& f)
{
    std::size_t d = size_at(j, "dim");
    const json& s = array_at(j, "structure", d * d);
    std::vector<Vector> table;
    for (const auto& v : s) {
        table.push_back(vector_from_json(v, f));
        if (table.back().size() != d)
            throw ParseError("structure constants must have length dim");
    }
    Vector unit = vector_from_json(field_at(j, "unit"), f);
    if (unit.size() != d)
        throw ParseError("unit must have length dim");
    return Algebra(f, d, std::move(table), std::move(unit));
}

json to_json(const Quiver& q)
{
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({a.s + 1, a.t + 1});
    return {{"n", q.n()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j)
{
    int n = static_cast<int>(size_at(j, "n"));
    const json& arr = field_at(j, "arrows");
    if (!arr.is_array())
        throw ParseError("\"arrows\" must be an array of [s, t] pairs");
    std::vector<Arrow> arrows;
    for (const auto& a : arr) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw ParseError("each arrow must be [s, t]");
        int s = a[0].get<int>(), t = a[1].get<int>();
        if (s < 1 || s > n || t < 1 || t > n)
            throw ParseError("arrow endpoint out of range 1.." + std::to_string(n));
        arrows.push_back({s - 1, t - 1});
    }
    return Quiver(n, std::move(arrows));
}

json to_json(const EGrid& g)
{
    json E = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.n(); ++j)
            row.push_back(matrix_rows(g(i, j)));
        E.push_back(row);
    }
    json out = {{"n", g.n()}, {"m", g.m()}, {"field", g.field().to_string()}, {"E", E}};
    if (!g.algebra().is_diagonal())
        out["algebra"] = to_json(g.algebra());
    return out;
}

EGrid grid_from_json(const json& j)
{
    Field f = field_from(j);
    std::size_t n = size_at(j, "n"), m = size_at(j, "m");
    if (n == 0)
        throw ParseError("\"n\" must be positive");
    EGrid g = j.contains("algebra") ? EGrid(static_cast<int>(n), algebra_from_json(j.at("algebra"), f))
                                    : EGrid(static_cast<int>(n), f, m);
    if (g.m() != m)
        throw ParseError("\"m\" does not match the algebra dimension");
    const json& E = array_at(j, "E", n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!E[i].is_array() || E[i].size() != n)
            throw ParseError("\"E\" must be an n x n array of matrices");
        for (std::size_t k = 0; k < n; ++k) {
            Matrix e = matrix_from_rows(E[i][k], f);
            if (e.rows() != m || e.cols() != m)
                throw ParseError("E_" + std::to_string(i + 1) + std::to_string(k + 1) + " must be m x m");
            g(static_cast<int>(i), static_cast<int>(k)) = e;
        }
    }
    return g;
}

json gridset_to_json(const GridSet& s, std::uint64_t seed)
{
    json grids = json::array();
    for (const auto& g : s)
        grids.push_back(to_json(g));
    return {{"schema_version", kSchemaVersion}, {"seed", seed}, {"count", s.size()}, {"grids", grids}};
}

GridSet gridset_from_json(const json& j)
{
    const json& arr = j.is_array() ? j : field_at(j, "grids");
    if (!arr.is_array())
        throw ParseError("\"grids\" must be an array");
    std::vector<EGrid> out;
    for (const auto& g : arr)
        out.push_back(grid_from_json(g));
    return canonical_set(std::move(out));
}

json to_json(const CycleDatum& d)
{
    json a = json::array();
    for (const auto& s : d.a)
        a.push_back(to_json(s));
    return {{"u", index_map_json(d.u)}, {"a", a}};
}

CycleDatum cycle_datum_from_json(const json& j, const Field& f)
{
    const json& uj = field_at(j, "u");
    if (!uj.is_array())
        throw ParseError("\"u\" must be an array");
    CycleDatum d{index_map_from(uj, uj.size()), {}};
    const json& aj = array_at(j, "a", d.u.size());
    for (const auto& s : aj)
        d.a.push_back(scalar_from_json(s, f));
    return d;
}

json to_json(const RankOneDatum& d)
{
    json u = json::array();
    for (const auto& ui : d.u)
        u.push_back(index_map_json(ui));
    return {{"shape", to_json(d.shape.quiver())}, {"u", u}};
}

json to_json(const CycleFamily& fam)
{
    json dirs = json::array();
    for (const auto& v : fam.directions) {
        json d = json::array();
        for (const auto& s : v)
            d.push_back(to_json(s));
        dirs.push_back(d);
    }
    json base = json::array(), params = json::array();
    for (const auto& s : fam.base)
        base.push_back(to_json(s));
    for (int p : fam.free)
        params.push_back("a_" + std::to_string(p + 1));
    return {{"u", index_map_json(fam.u)}, {"base", base}, {"free", params}, {"directions", dirs}};
}

json to_json(const AxiomReport& r)
{
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json w = json::array();
        for (int x : a.witness)
            w.push_back(x + 1);
        json e = {{"name", a.name}, {"ok", a.ok}};
        if (!a.ok) {
            e["witness"] = w;
            e["detail"] = a.detail;
        }
        axioms.push_back(e);
    }
    return {{"ok", r.ok()}, {"axioms", axioms}};
}

json twisted_algebra_json(const Algebra& a)
{
    return to_json(a);
}

json to_json(const OmegaMatrix& w)
{
    json rows = json::array();
    for (std::size_t i = 0; i < w.n(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < w.n(); ++k)
            row.push_back(to_json(w(i, k)));
        rows.push_back(row);
    }
    return rows;
}

OmegaMatrix omega_from_json(const json& j, const Field& f)
{
    if (!j.is_array() || j.empty())
        throw ParseError("an omega matrix must be a non-empty n x n array of functionals");
    const std::size_t n = j.size();
    std::size_t m = 0;
    std::vector<Vector> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw ParseError("an omega matrix must be square");
        for (const auto& e : row) {
            entries.push_back(vector_from_json(e, f));
            if (entries.size() == 1)
                m = entries.back().size();
            if (entries.back().size() != m)
                throw ParseError("omega functionals have different lengths");
        }
    }
    OmegaMatrix w(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            w(i, k) = entries[i * n + k];
    return w;
}

json to_json(const NormalizedMatrix& nm)
{
    json sigma = json::array(), Z = json::array();
    for (const auto& s : nm.sigma)
        sigma.push_back(index_map_json(s));
    for (const auto& z : nm.Z)
        Z.push_back(matrix_rows(z));
    return {{"matrix", matrix_rows(nm.matrix)}, {"sigma", sigma}, {"Z", Z}};
}

json to_json(const Canonical2& c)
{
    return {{"form", c.form == CanonicalForm::X1 ? "X1" : "X2"}, {"x", to_json(c.x)}, {"y", to_json(c.y)},
            {"matrix", matrix_rows(c.matrix())}};
}

json to_json(const HochschildData& h)
{
    json left = json::array(), right = json::array(), omega = json::array();
    for (const auto& m : h.left)
        left.push_back(matrix_rows(m));
    for (const auto& m : h.right)
        right.push_back(matrix_rows(m));
    for (const auto& v : h.omega)
        omega.push_back(to_json(v));
    return {{"field", h.field().to_string()}, {"B", to_json(h.B)}, {"dim_m", h.dim_m},
            {"left", left},   {"right", right},   {"omega", omega}};
}

HochschildData hochschild_from_json(const json& j)
{
    Field f = field_from(j);
    HochschildData h;
    h.B = algebra_from_json(field_at(j, "B"), f);
    h.dim_m = size_at(j, "dim_m");
    const std::size_t db = h.B.dim();
    for (const auto& m : array_at(j, "left", db))
        h.left.push_back(matrix_from_rows(m, f));
    for (const auto& m : array_at(j, "right", db))
        h.right.push_back(matrix_from_rows(m, f));
    for (const auto& v : array_at(j, "omega", db * db))
        h.omega.push_back(vector_from_json(v, f));
    check_hochschild_data(h);
    return h;
}

json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace twistlab::io
