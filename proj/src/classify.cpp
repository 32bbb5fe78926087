#include "twistlab/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace twistlab {

ConditionViolated::ConditionViolated(std::string what, int s, int t, int p_)
    : MathError(std::move(what)), arrow_s(s), arrow_t(t), p(p_)
{
}

namespace {

std::string vtx(int i) { return std::to_string(i + 1); }

bool is_identity_function(const IndexMap& u)
{
    for (std::size_t p = 0; p < u.size(); ++p)
        if (u[p] != static_cast<int>(p))
            return false;
    return true;
}

bool fixes(const IndexMap& u, int p) { return u[static_cast<std::size_t>(p)] == p; }

// Where the source of a non-loop arrow lies on a 2-cycle.
struct CycleSource {
    int first, second;
    const std::vector<Scalar>* a;
};

std::optional<ConditionViolated> arrow_violation(const Arrow& arr, const IndexMap& us, const IndexMap& ut,
                                                 const CycleSource* src)
{
    const int m = static_cast<int>(us.size());
    for (int p = 0; p < m; ++p) {
        if (fixes(us, p) || fixes(ut, p))
            continue;
        if (!src)
            return ConditionViolated("arrow " + vtx(arr.s) + " -> " + vtx(arr.t) + ": p = " + vtx(p) +
                                         " is fixed by neither endpoint",
                                     arr.s, arr.t, p);
        // The arrow feeding s(alpha) is the cycle arrow from the other cycle vertex.
        const Scalar& ap = (*src->a)[static_cast<std::size_t>(p)];
        bool fed_by_alpha2 = arr.s == src->first;
        bool good = fed_by_alpha2 ? ap.is_one() : ap.is_zero();
        if (!good)
            return ConditionViolated("arrow " + vtx(arr.s) + " -> " + vtx(arr.t) + ": p = " + vtx(p) +
                                         (fed_by_alpha2 ? " needs a_p = 1" : " needs a_p = 0"),
                                     arr.s, arr.t, p);
    }
    return std::nullopt;
}

std::vector<int> parents_of(const Quiver& q)
{
    std::vector<int> parent(static_cast<std::size_t>(q.n()), -1);
    for (const auto& a : q.arrows())
        if (!a.is_loop()) {
            if (parent[static_cast<std::size_t>(a.t)] >= 0)
                throw RrankTooLarge(a.t);
            parent[static_cast<std::size_t>(a.t)] = a.s;
        }
    return parent;
}

} // namespace

Field field_of(const CycleDatum& d)
{
    if (d.a.empty())
        throw InvalidInput("cycle datum with m = 0");
    return d.a.front().field();
}

CycleDatum normalize_cycle_datum(CycleDatum d)
{
    if (d.u.size() != d.a.size())
        throw DimensionMismatch("cycle datum: u and a have different lengths");
    const Field F = field_of(d);
    for (std::size_t p = 0; p < d.u.size(); ++p) {
        if (d.u[p] < 0 || static_cast<std::size_t>(d.u[p]) >= d.u.size())
            throw InvalidInput("cycle datum: u value out of range");
        if (d.u[p] == static_cast<int>(p))
            d.a[p] = F.zero();
    }
    return d;
}

std::optional<std::string> cycle_condition_violation(const CycleDatum& d)
{
    for (std::size_t p = 0; p < d.u.size(); ++p) {
        auto up = static_cast<std::size_t>(d.u[p]);
        if (up == p) {
            if (!d.a[p].is_zero())
                return "a_" + vtx(static_cast<int>(p)) + " must vanish at a fixed point";
            continue;
        }
        auto uup = static_cast<std::size_t>(d.u[up]);
        if (uup != p && !d.a[p].is_zero() && !d.a[p].is_one())
            return "a_" + vtx(static_cast<int>(p)) + " must be 0 or 1";
        if (uup != up && !(d.a[p] + d.a[up]).is_one())
            return "a_" + vtx(static_cast<int>(p)) + " + a_u(" + vtx(static_cast<int>(p)) + ") != 1";
    }
    return std::nullopt;
}

CycleMaps cycle_maps(const CycleDatum& d)
{
    const Field F = field_of(d);
    const auto m = d.u.size();
    CycleMaps c{EndoMap::zero(F, m), EndoMap::zero(F, m), EndoMap::zero(F, m), EndoMap::zero(F, m)};
    const Scalar one = F.one();
    for (std::size_t p = 0; p < m; ++p) {
        auto up = static_cast<std::size_t>(d.u[p]);
        const Scalar& a = d.a[p];
        Scalar b = one - a;
        c.phi1(p, p) += a;
        c.phi1(p, up) += b;
        c.alpha1(p, p) += a;
        c.alpha1(p, up) -= a;
        c.phi2(p, p) += b;
        c.phi2(p, up) += a;
        c.alpha2(p, p) += b;
        c.alpha2(p, up) -= b;
    }
    return c;
}

std::optional<ConditionViolated> rrank1_violation(const AdmissibleShape& shape, const std::vector<IndexMap>& u,
                                                  const std::vector<CycleAssignment>& cycles)
{
    const Quiver& q = shape.quiver();
    const int n = q.n();
    if (static_cast<int>(u.size()) != n)
        throw DimensionMismatch("one function per vertex required");
    const std::size_t m = u.empty() ? 0 : u.front().size();
    for (const auto& ui : u) {
        if (ui.size() != m)
            throw DimensionMismatch("vertex functions have different lengths");
        for (int x : ui)
            if (x < 0 || static_cast<std::size_t>(x) >= m)
                throw InvalidInput("function value out of range");
    }
    auto parent = parents_of(q);

    std::vector<int> cycle_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        const auto& ca = cycles[c];
        if (!on_two_cycle(q, ca.first, ca.second))
            throw InvalidInput("no 2-cycle between " + vtx(ca.first) + " and " + vtx(ca.second));
        for (int v : {ca.first, ca.second}) {
            if (cycle_of[static_cast<std::size_t>(v)] >= 0)
                throw InvalidInput("vertex " + vtx(v) + " listed in two cycles");
            cycle_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
        if (u[static_cast<std::size_t>(ca.first)] != u[static_cast<std::size_t>(ca.second)])
            return ConditionViolated("cycle vertices " + vtx(ca.first) + ", " + vtx(ca.second) +
                                     " carry different functions");
        if (ca.a.size() != m)
            throw DimensionMismatch("cycle scalars have wrong length");
        CycleDatum d = normalize_cycle_datum({u[static_cast<std::size_t>(ca.first)], ca.a});
        if (auto why = cycle_condition_violation(d))
            return ConditionViolated("cycle " + vtx(ca.first) + " <-> " + vtx(ca.second) + ": " + *why);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (on_two_cycle(q, i, j) && cycle_of[static_cast<std::size_t>(i)] < 0)
                throw InvalidInput("2-cycle " + vtx(i) + " <-> " + vtx(j) + " has no (u, a) data");
        if (cycle_of[static_cast<std::size_t>(i)] >= 0)
            continue;
        if (!is_idempotent_function(u[static_cast<std::size_t>(i)]))
            return ConditionViolated("u_" + vtx(i) + " is not idempotent");
        if (parent[static_cast<std::size_t>(i)] < 0 && !is_identity_function(u[static_cast<std::size_t>(i)]))
            return ConditionViolated("vertex " + vtx(i) + " receives only its loop, so u_" + vtx(i) +
                                     " must be the identity");
    }
    std::vector<std::vector<Scalar>> normalized_a;
    for (const auto& ca : cycles)
        normalized_a.push_back(normalize_cycle_datum({u[static_cast<std::size_t>(ca.first)], ca.a}).a);
    for (const auto& arr : q.arrows()) {
        if (arr.is_loop() || on_two_cycle(q, arr.s, arr.t))
            continue;
        std::optional<CycleSource> src;
        int c = cycle_of[static_cast<std::size_t>(arr.s)];
        if (c >= 0)
            src = CycleSource{cycles[static_cast<std::size_t>(c)].first,
                              cycles[static_cast<std::size_t>(c)].second,
                              &normalized_a[static_cast<std::size_t>(c)]};
        if (auto v = arrow_violation(arr, u[static_cast<std::size_t>(arr.s)],
                                     u[static_cast<std::size_t>(arr.t)], src ? &*src : nullptr))
            return v;
    }
    return std::nullopt;
}

QuiverRep rep_from_rrank1_data(const AdmissibleShape& shape, const std::vector<IndexMap>& u,
                               const std::vector<CycleAssignment>& cycles, const Field& f)
{
    if (auto v = rrank1_violation(shape, u, cycles))
        throw *v;
    const Quiver& q = shape.quiver();
    const int n = q.n();
    const std::size_t m = u.front().size();
    std::vector<EndoMap> vertex_map(static_cast<std::size_t>(n));
    std::map<std::pair<int, int>, EndoMap> cycle_arrow;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (const auto& ca : cycles) {
        for (const auto& s : ca.a)
            if (!(s.field() == f))
                throw FieldMismatch("cycle scalars outside " + f.to_string());
        auto d = normalize_cycle_datum({u[static_cast<std::size_t>(ca.first)], ca.a});
        auto maps = cycle_maps(d);
        vertex_map[static_cast<std::size_t>(ca.first)] = maps.phi1;
        vertex_map[static_cast<std::size_t>(ca.second)] = maps.phi2;
        cycle_arrow[{ca.first, ca.second}] = maps.alpha1;
        cycle_arrow[{ca.second, ca.first}] = maps.alpha2;
        done[static_cast<std::size_t>(ca.first)] = done[static_cast<std::size_t>(ca.second)] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!done[static_cast<std::size_t>(i)])
            vertex_map[static_cast<std::size_t>(i)] = endo_from_function(f, u[static_cast<std::size_t>(i)]);

    const EndoMap id = EndoMap::identity(f, m);
    QuiverRep rep{q, Algebra::diagonal(f, m), {}};
    for (const auto& arr : q.arrows()) {
        if (arr.is_loop())
            rep.phi.push_back(vertex_map[static_cast<std::size_t>(arr.s)]);
        else if (auto it = cycle_arrow.find({arr.s, arr.t}); it != cycle_arrow.end())
            rep.phi.push_back(it->second);
        else
            rep.phi.push_back(id - vertex_map[static_cast<std::size_t>(arr.t)]);
    }
    return rep;
}

namespace {

bool has_two_cycle(const Quiver& q)
{
    for (const auto& a : q.arrows())
        if (!a.is_loop() && q.has_arrow(a.t, a.s))
            return true;
    return false;
}

} // namespace

AdmissiblePair rep_from_rank1_datum(const RankOneDatum& d, const Field& f)
{
    if (has_two_cycle(d.shape.quiver()))
        throw InvalidInput("rank-one datum on a shape with a 2-cycle");
    return AdmissiblePair::from_rep(drop_zero_arrows(rep_from_rrank1_data(d.shape, d.u, {}, f)));
}

AdmissiblePair rep_from_cycle_datum(const CycleDatum& d)
{
    const Field F = field_of(d);
    auto shape = validate_admissible_shape(Quiver(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    auto rep = rep_from_rrank1_data(shape, {d.u, d.u}, {CycleAssignment{0, 1, d.a}}, F);
    return AdmissiblePair::from_rep(drop_zero_arrows(std::move(rep)));
}

AdmissiblePair rep_from_connected_cycle(const ConnectedCycleDatum& d)
{
    auto dec = unique_cycle_decomposition(d.shape);
    if (dec.size() != 1)
        throw InvalidInput("shape is not connected");
    if (dec.front().cycle.size() != 2)
        throw InvalidInput("shape does not contain a 2-cycle");
    if (d.a.empty())
        throw InvalidInput("no cycle scalars");
    const Field F = d.a.front().field();
    CycleAssignment ca{dec.front().cycle[0], dec.front().cycle[1], d.a};
    auto rep = rep_from_rrank1_data(d.shape, d.u, {ca}, F);
    return AdmissiblePair::from_rep(drop_zero_arrows(std::move(rep)));
}

std::vector<RankOneDatum> enumerate_rank1_data(const AdmissibleShape& shape, int m)
{
    const Quiver& q = shape.quiver();
    if (has_two_cycle(q))
        throw InvalidInput("shape contains a 2-cycle");
    if (q.rrank() > 1)
        throw RrankTooLarge(0);
    const auto idem = idempotent_functions(m);
    const int n = q.n();
    std::vector<IndexMap> cur(static_cast<std::size_t>(n));
    std::vector<RankOneDatum> out;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            out.push_back({shape, cur});
            return;
        }
        for (const auto& u : idem) {
            cur[static_cast<std::size_t>(v)] = u;
            bool ok = true;
            for (const auto& a : q.arrows()) {
                if (a.is_loop() || std::max(a.s, a.t) != v)
                    continue;
                if (arrow_violation(a, cur[static_cast<std::size_t>(a.s)], cur[static_cast<std::size_t>(a.t)],
                                    nullptr)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                rec(v + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<CycleFamily> cycle_families(int m, const Field& f)
{
    std::vector<CycleFamily> out;
    const auto M = static_cast<std::size_t>(m);
    for (const auto& u : all_functions(m, m)) {
        std::vector<int> D;
        for (int p = 0; p < m; ++p) {
            int up = u[static_cast<std::size_t>(p)];
            if (up != p && u[static_cast<std::size_t>(up)] != p)
                D.push_back(p);
        }
        for (unsigned long choice = 0; choice < (1ul << D.size()); ++choice) {
            // Unknowns a_p, stored in reversed column order so that the free
            // parameters come out as the smallest indices.
            std::vector<Vector> rows;
            auto col = [&](int p) { return M - 1 - static_cast<std::size_t>(p); };
            auto eq = [&](std::initializer_list<int> ps, long rhs) {
                Vector r(f, M + 1);
                for (int p : ps)
                    r[col(p)] += f.one();
                r[M] = f.from_int(rhs);
                rows.push_back(r);
            };
            for (int p = 0; p < m; ++p) {
                int up = u[static_cast<std::size_t>(p)];
                if (up == p)
                    eq({p}, 0);
                else if (u[static_cast<std::size_t>(up)] != up)
                    eq({p, up}, 1);
            }
            for (std::size_t k = 0; k < D.size(); ++k)
                eq({D[k]}, static_cast<long>(choice >> k & 1));
            auto ech = row_reduce(Matrix::from_rows(f, M + 1, rows));
            if (!ech.pivots.empty() && ech.pivots.back() == M)
                continue; // inconsistent
            std::vector<bool> pivot(M, false);
            for (auto c : ech.pivots)
                pivot[c] = true;
            CycleFamily fam;
            fam.u = u;
            fam.base.assign(M, f.zero());
            for (std::size_t r = 0; r < ech.pivots.size(); ++r)
                fam.base[M - 1 - ech.pivots[r]] = ech.reduced(r, M);
            for (int p = 0; p < m; ++p) {
                if (pivot[col(p)])
                    continue;
                std::vector<Scalar> dir(M, f.zero());
                dir[static_cast<std::size_t>(p)] = f.one();
                for (std::size_t r = 0; r < ech.pivots.size(); ++r)
                    dir[M - 1 - ech.pivots[r]] = -ech.reduced(r, col(p));
                fam.directions.push_back(std::move(dir));
                fam.free.push_back(p);
            }
            out.push_back(std::move(fam));
        }
    }
    return out;
}

CycleDatum instantiate(const CycleFamily& fam, const std::vector<Scalar>& params)
{
    if (params.size() != fam.directions.size())
        throw DimensionMismatch("wrong number of family parameters");
    CycleDatum d{fam.u, fam.base};
    for (std::size_t k = 0; k < params.size(); ++k)
        for (std::size_t p = 0; p < d.a.size(); ++p)
            d.a[p] += params[k] * fam.directions[k][p];
    return d;
}

std::vector<CycleDatum> enumerate_cycle_data(int m, const Field& f)
{
    if (!f.is_prime_field())
        throw InvalidInput("exhaustive enumeration needs a prime field");
    std::vector<CycleDatum> out;
    const std::uint32_t p = f.characteristic();
    for (const auto& fam : cycle_families(m, f)) {
        const std::size_t k = fam.free.size();
        std::vector<std::uint32_t> digits(k, 0);
        while (true) {
            std::vector<Scalar> params;
            for (auto x : digits)
                params.push_back(f.from_int(static_cast<long>(x)));
            out.push_back(instantiate(fam, params));
            std::size_t i = 0;
            while (i < k && ++digits[i] == p)
                digits[i++] = 0;
            if (i == k)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Scalar random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long a = num(rng);
    long b = den(rng);
    return Scalar(mpq_class(a, b));
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng)
{
    if (!f.is_prime_field())
        return random_rational(rng);
    std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
    return f.from_int(d(rng));
}

std::vector<CycleDatum> cycle_data(int m, const Field& f, const Sampling& s)
{
    if (f.is_prime_field())
        return enumerate_cycle_data(m, f);
    if (s.samples <= 0 || !s.rng)
        throw InvalidInput("the rationals need a sample count and a seeded generator");
    std::vector<CycleDatum> out;
    for (const auto& fam : cycle_families(m, f)) {
        int reps = fam.free.empty() ? 1 : s.samples;
        for (int r = 0; r < reps; ++r) {
            std::vector<Scalar> params;
            for (std::size_t k = 0; k < fam.free.size(); ++k)
                params.push_back(random_rational(*s.rng));
            out.push_back(instantiate(fam, params));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct LocalChoice {
    std::vector<std::pair<int, IndexMap>> u;
    std::optional<CycleAssignment> cycle;
};

std::vector<LocalChoice> component_choices(const Quiver& q, const CycleTreeDecomposition& comp,
                                           const std::vector<int>& parent, int m,
                                           const std::vector<CycleDatum>& cdata)
{
    const auto idem = idempotent_functions(m);
    IndexMap identity(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p)
        identity[static_cast<std::size_t>(p)] = p;

    // Order: cycle vertices first, then tree vertices parent-before-child.
    std::vector<int> order = comp.cycle;
    std::set<int> placed(order.begin(), order.end());
    for (const auto& t : comp.trees) {
        std::vector<int> frontier{t.root};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier) {
                if (!placed.count(v)) {
                    order.push_back(v);
                    placed.insert(v);
                }
                for (const auto& a : t.arrows)
                    if (a.s == v)
                        next.push_back(a.t);
            }
            frontier = std::move(next);
        }
    }

    std::vector<LocalChoice> out;
    std::map<int, IndexMap> cur;
    const bool two = comp.cycle.size() == 2;
    std::vector<Scalar> cur_a;

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            LocalChoice c;
            for (auto& [v, u] : cur)
                c.u.emplace_back(v, u);
            if (two)
                c.cycle = CycleAssignment{comp.cycle[0], comp.cycle[1], cur_a};
            out.push_back(std::move(c));
            return;
        }
        int v = order[k];
        bool on_two = two && (v == comp.cycle[0] || v == comp.cycle[1]);
        if (on_two) {
            rec(k + 1); // already assigned with the datum
            return;
        }
        const bool root = parent[static_cast<std::size_t>(v)] < 0;
        for (const auto& u : idem) {
            if (root && u != identity)
                continue;
            cur[v] = u;
            bool ok = true;
            for (const auto& a : q.arrows()) {
                if (a.is_loop() || (a.s != v && a.t != v) || !cur.count(a.s) || !cur.count(a.t))
                    continue;
                if (two && on_two_cycle(q, a.s, a.t))
                    continue;
                std::optional<CycleSource> src;
                if (two && (a.s == comp.cycle[0] || a.s == comp.cycle[1]))
                    src = CycleSource{comp.cycle[0], comp.cycle[1], &cur_a};
                if (arrow_violation(a, cur[a.s], cur[a.t], src ? &*src : nullptr)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                rec(k + 1);
            cur.erase(v);
        }
    };

    if (two) {
        for (const auto& d : cdata) {
            cur.clear();
            cur[comp.cycle[0]] = d.u;
            cur[comp.cycle[1]] = d.u;
            cur_a = d.a;
            rec(0);
        }
    } else {
        rec(0);
    }
    return out;
}

} // namespace

std::vector<EGrid> classify_shape(const AdmissibleShape& shape, int m, const Field& f, const Sampling& s)
{
    const Quiver& q = shape.quiver();
    auto dec = unique_cycle_decomposition(shape);
    auto parent = parents_of(q);
    bool need_cycles = std::any_of(dec.begin(), dec.end(), [](const auto& c) { return c.cycle.size() == 2; });
    std::vector<CycleDatum> cdata;
    if (need_cycles)
        cdata = cycle_data(m, f, s);

    std::vector<std::vector<LocalChoice>> per_comp;
    for (const auto& c : dec)
        per_comp.push_back(component_choices(q, c, parent, m, cdata));

    std::vector<EGrid> out;
    std::vector<IndexMap> u(static_cast<std::size_t>(q.n()));
    std::vector<CycleAssignment> cycles;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == per_comp.size()) {
            out.push_back(grid_from_rep(rep_from_rrank1_data(shape, u, cycles, f)));
            return;
        }
        for (const auto& choice : per_comp[k]) {
            for (const auto& [v, uv] : choice.u)
                u[static_cast<std::size_t>(v)] = uv;
            if (choice.cycle)
                cycles.push_back(*choice.cycle);
            rec(k + 1);
            if (choice.cycle)
                cycles.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EGrid> classify_all(int n, int m, const Field& f, const Sampling& s)
{
    std::vector<EGrid> out;
    for (const auto& shape : admissible_shapes(n, 1)) {
        auto part = classify_shape(shape, m, f, s);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EGrid> classify_two_vertices(int m, const Field& f, const Sampling& s)
{
    std::vector<EGrid> out{EGrid::flip(2, f, static_cast<std::size_t>(m))};
    const std::vector<std::vector<Arrow>> shapes{
        {{0, 0}, {0, 1}, {1, 1}},
        {{0, 0}, {1, 0}, {1, 1}},
        {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
    };
    for (const auto& arr : shapes) {
        auto part = classify_shape(validate_admissible_shape(Quiver(2, arr)), m, f, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IdealDecomposition ideal_decomposition(const AdmissiblePair& p, int vertex)
{
    const EndoMap& phi = p.loop_map(vertex);
    const Algebra& A = p.algebra();
    IdealDecomposition d;
    d.image = image_basis(phi);
    d.kernel = kernel_basis(phi);
    std::vector<Vector> both = d.image;
    both.insert(both.end(), d.kernel.begin(), d.kernel.end());
    d.direct_sum = both.size() == A.dim() &&
                   (both.empty() || rank(Matrix::from_columns(A.field(), A.dim(), both)) == A.dim());
    d.kernel_is_ideal = true;
    for (std::size_t j = 0; j < A.dim() && d.kernel_is_ideal; ++j) {
        Vector bj = Vector::basis(A.field(), A.dim(), j);
        for (const auto& k : d.kernel)
            if (!in_span(d.kernel, A.multiply(bj, k)) || !in_span(d.kernel, A.multiply(k, bj))) {
                d.kernel_is_ideal = false;
                break;
            }
    }
    d.image_is_subalgebra = in_span(d.image, A.unit());
    for (const auto& x : d.image)
        for (const auto& y : d.image)
            if (!in_span(d.image, A.multiply(x, y)))
                d.image_is_subalgebra = false;
    return d;
}

std::optional<Arrow> ideal_product_violation(const AdmissiblePair& p)
{
    const Algebra& A = p.algebra();
    for (const auto& a : p.quiver().arrows()) {
        if (a.is_loop())
            continue;
        auto ks = kernel_basis(p.loop_map(a.s));
        auto kt = kernel_basis(p.loop_map(a.t));
        if (!subspace_product_is_zero(A, ks, kt))
            return a;
    }
    return std::nullopt;
}

} // namespace twistlab
