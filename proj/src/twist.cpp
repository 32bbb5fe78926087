#include "twistlab/twist.hpp"

#include <sstream>

namespace twistlab {

namespace {

std::string idx(std::initializer_list<int> xs)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int x : xs) {
        if (!first)
            os << ',';
        os << x + 1;
        first = false;
    }
    os << ')';
    return os.str();
}

AxiomResult fail(std::string name, std::vector<int> witness, std::string detail)
{
    return AxiomResult{std::move(name), false, std::move(witness), std::move(detail)};
}

} // namespace

EGrid::EGrid(int n, const Field& f, std::size_t m) : EGrid(n, Algebra::diagonal(f, m)) {}

EGrid::EGrid(int n, Algebra a) : n_(n), algebra_(std::move(a))
{
    if (n < 1)
        throw InvalidInput("grid size must be at least 1");
    E_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
              EndoMap::zero(algebra_.field(), algebra_.dim()));
}

EGrid EGrid::flip(int n, const Field& f, std::size_t m)
{
    EGrid g(n, f, m);
    for (int i = 0; i < n; ++i)
        g(i, i) = EndoMap::identity(f, m);
    return g;
}

std::strong_ordering operator<=>(const EGrid& a, const EGrid& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    if (auto c = a.m() <=> b.m(); c != 0)
        return c;
    return a.E_ <=> b.E_;
}

bool AxiomReport::ok() const
{
    return first_failure() == nullptr;
}

const AxiomResult* AxiomReport::first_failure() const
{
    for (const auto& a : axioms)
        if (!a.ok)
            return &a;
    return nullptr;
}

AxiomReport check_axioms(const EGrid& g)
{
    const int n = g.n();
    const auto m = g.m();
    const Field& F = g.field();
    const Algebra& A = g.algebra();
    const EndoMap id = EndoMap::identity(F, m);
    AxiomReport rep;

    AxiomResult orth{"orthogonality", true, {}, {}};
    for (int p = 0; p < n && orth.ok; ++p)
        for (int i = 0; i < n && orth.ok; ++i)
            for (int j = 0; j < n && orth.ok; ++j) {
                EndoMap lhs = compose(g(i, p), g(j, p));
                bool good = i == j ? lhs == g(i, p) : lhs.is_zero();
                if (!good)
                    orth = fail("orthogonality", {i, j, p},
                                "E" + idx({i, p}) + " o E" + idx({j, p}) + " wrong");
            }
    rep.axioms.push_back(orth);

    AxiomResult mult{"multiplicativity", true, {}, {}};
    std::vector<std::vector<Vector>> img(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (std::size_t q = 0; q < m; ++q)
                img[static_cast<std::size_t>(i * n + j)].push_back(g(i, j).column(q));
    for (int i = 0; i < n && mult.ok; ++i)
        for (int j = 0; j < n && mult.ok; ++j)
            for (std::size_t q = 0; q < m && mult.ok; ++q)
                for (std::size_t r = 0; r < m && mult.ok; ++r) {
                    Vector lhs = g(i, j) * A.product(q, r);
                    Vector rhs(F, m);
                    for (int k = 0; k < n; ++k)
                        rhs += A.multiply(img[static_cast<std::size_t>(i * n + k)][q],
                                          img[static_cast<std::size_t>(k * n + j)][r]);
                    if (!(lhs == rhs))
                        mult = fail("multiplicativity", {i, j, static_cast<int>(q), static_cast<int>(r)},
                                    "E" + idx({i, j}) + " on basis pair " +
                                        idx({static_cast<int>(q), static_cast<int>(r)}));
                }
    rep.axioms.push_back(mult);

    AxiomResult cols{"column_sum", true, {}, {}};
    for (int j = 0; j < n && cols.ok; ++j) {
        EndoMap s = EndoMap::zero(F, m);
        for (int i = 0; i < n; ++i)
            s += g(i, j);
        if (!(s == id))
            cols = fail("column_sum", {j}, "sum over column " + std::to_string(j + 1) + " is not Id");
    }
    rep.axioms.push_back(cols);

    AxiomResult unit{"unit", true, {}, {}};
    const Vector& one = A.unit();
    for (int i = 0; i < n && unit.ok; ++i)
        for (int j = 0; j < n && unit.ok; ++j) {
            Vector v = g(i, j) * one;
            bool good = i == j ? v == one : v.is_zero();
            if (!good)
                unit = fail("unit", {i, j}, "E" + idx({i, j}) + "(1) wrong");
        }
    rep.axioms.push_back(unit);
    return rep;
}

namespace {

// Elements of A (x) K^n as coefficient arrays c[p][j] of f_p (x) e_j.
using ATensorB = std::vector<std::vector<Scalar>>;

struct Tau {
    const EGrid& g;
    ATensorB zero() const
    {
        return ATensorB(g.m(), std::vector<Scalar>(static_cast<std::size_t>(g.n()), g.field().zero()));
    }
    // tau(e_i (x) f_q)
    ATensorB basis(int i, std::size_t q) const
    {
        ATensorB out = zero();
        for (int j = 0; j < g.n(); ++j)
            for (std::size_t p = 0; p < g.m(); ++p)
                out[p][static_cast<std::size_t>(j)] = g(i, j)(p, q);
        return out;
    }
    // tau(e_i (x) a)
    ATensorB apply(int i, const Vector& a) const
    {
        ATensorB out = zero();
        for (std::size_t q = 0; q < g.m(); ++q) {
            if (a[q].is_zero())
                continue;
            auto t = basis(i, q);
            for (std::size_t p = 0; p < g.m(); ++p)
                for (std::size_t j = 0; j < static_cast<std::size_t>(g.n()); ++j)
                    out[p][j] += a[q] * t[p][j];
        }
        return out;
    }
};

} // namespace

AxiomReport check_tau_axioms(const EGrid& g)
{
    const int n = g.n();
    const auto m = g.m();
    const Field& F = g.field();
    const Algebra& A = g.algebra();
    Tau tau{g};
    AxiomReport rep;

    // tau o (m_B (x) A) = (A (x) m_B) o (tau (x) B) o (B (x) tau) on e_i (x) e_k (x) f_q
    AxiomResult bmul{"B_multiplication", true, {}, {}};
    for (int i = 0; i < n && bmul.ok; ++i)
        for (int k = 0; k < n && bmul.ok; ++k)
            for (std::size_t q = 0; q < m && bmul.ok; ++q) {
                ATensorB lhs = i == k ? tau.basis(i, q) : tau.zero();
                // B (x) tau: e_i (x) sum c[p][l] f_p (x) e_l
                ATensorB inner = tau.basis(k, q);
                ATensorB rhs = tau.zero();
                for (std::size_t p = 0; p < m; ++p)
                    for (int l = 0; l < n; ++l) {
                        const Scalar& c = inner[p][static_cast<std::size_t>(l)];
                        if (c.is_zero())
                            continue;
                        // (tau (x) B): tau(e_i (x) f_p) (x) e_l, then e_s e_l = delta_sl e_l
                        ATensorB t = tau.basis(i, p);
                        for (std::size_t r = 0; r < m; ++r)
                            rhs[r][static_cast<std::size_t>(l)] += c * t[r][static_cast<std::size_t>(l)];
                    }
                if (lhs != rhs)
                    bmul = fail("B_multiplication", {i, k, static_cast<int>(q)},
                                "on e" + idx({i}) + " e" + idx({k}) + " f" + idx({static_cast<int>(q)}));
            }
    rep.axioms.push_back(bmul);

    // tau o (B (x) m_A) = (m_A (x) B) o (A (x) tau) o (tau (x) A) on e_i (x) f_q (x) f_r
    AxiomResult amul{"A_multiplication", true, {}, {}};
    for (int i = 0; i < n && amul.ok; ++i)
        for (std::size_t q = 0; q < m && amul.ok; ++q)
            for (std::size_t r = 0; r < m && amul.ok; ++r) {
                ATensorB lhs = tau.apply(i, A.product(q, r));
                ATensorB first = tau.basis(i, q);
                ATensorB rhs = tau.zero();
                for (std::size_t p = 0; p < m; ++p)
                    for (int k = 0; k < n; ++k) {
                        const Scalar& c = first[p][static_cast<std::size_t>(k)];
                        if (c.is_zero())
                            continue;
                        // f_p (x) tau(e_k (x) f_r), then f_p * f_s
                        ATensorB second = tau.basis(k, r);
                        for (std::size_t s = 0; s < m; ++s)
                            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                                const Scalar& d = second[s][j];
                                if (d.is_zero())
                                    continue;
                                const Vector& ps = A.product(p, s);
                                for (std::size_t t = 0; t < m; ++t)
                                    rhs[t][j] += c * d * ps[t];
                            }
                    }
                if (lhs != rhs)
                    amul = fail("A_multiplication", {i, static_cast<int>(q), static_cast<int>(r)},
                                "on e" + idx({i}) + " f" + idx({static_cast<int>(q)}) + " f" +
                                    idx({static_cast<int>(r)}));
            }
    rep.axioms.push_back(amul);

    // tau(1_B (x) f_q) = f_q (x) 1_B
    AxiomResult bunit{"B_unit", true, {}, {}};
    for (std::size_t q = 0; q < m && bunit.ok; ++q) {
        ATensorB lhs = tau.zero();
        for (int i = 0; i < n; ++i) {
            auto t = tau.basis(i, q);
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                    lhs[p][j] += t[p][j];
        }
        ATensorB rhs = tau.zero();
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            rhs[q][j] = F.one();
        if (lhs != rhs)
            bunit = fail("B_unit", {static_cast<int>(q)}, "on f" + idx({static_cast<int>(q)}));
    }
    rep.axioms.push_back(bunit);

    // tau(e_i (x) 1_A) = 1_A (x) e_i
    AxiomResult aunit{"A_unit", true, {}, {}};
    for (int i = 0; i < n && aunit.ok; ++i) {
        ATensorB lhs = tau.apply(i, A.unit());
        ATensorB rhs = tau.zero();
        for (std::size_t p = 0; p < m; ++p)
            rhs[p][static_cast<std::size_t>(i)] = A.unit()[p];
        if (lhs != rhs)
            aunit = fail("A_unit", {i}, "on e" + idx({i}));
    }
    rep.axioms.push_back(aunit);
    return rep;
}

Quiver quiver_of(const EGrid& g)
{
    std::vector<Arrow> arr;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (!g(i, j).is_zero())
                arr.push_back({i, j});
    return Quiver(g.n(), arr);
}

const EndoMap& QuiverRep::loop_map(int i) const
{
    return arrow_map(i, i);
}

const EndoMap& QuiverRep::arrow_map(int s, int t) const
{
    int k = quiver.arrow_index(s, t);
    if (k < 0)
        throw InvalidInput("no arrow " + std::to_string(s + 1) + " -> " + std::to_string(t + 1));
    return phi[static_cast<std::size_t>(k)];
}

PredicateResult check_splitted(const QuiverRep& r)
{
    const Field& F = r.algebra.field();
    const auto m = r.algebra.dim();
    const auto& arr = r.quiver.arrows();
    for (int i = 0; i < r.quiver.n(); ++i) {
        std::vector<std::size_t> into;
        for (std::size_t k = 0; k < arr.size(); ++k)
            if (arr[k].t == i)
                into.push_back(k);
        EndoMap sum = EndoMap::zero(F, m);
        for (auto a : into)
            sum += r.phi[a];
        if (!sum.is_identity())
            return {false, "maps into vertex " + std::to_string(i + 1) + " do not sum to Id"};
        for (auto a : into)
            for (auto b : into) {
                EndoMap c = compose(r.phi[a], r.phi[b]);
                bool good = a == b ? c == r.phi[a] : c.is_zero();
                if (!good)
                    return {false, "arrows " + idx({arr[a].s, arr[a].t}) + " and " +
                                       idx({arr[b].s, arr[b].t}) + " into vertex " +
                                       std::to_string(i + 1) + " not orthogonal idempotents"};
            }
    }
    return {};
}

PredicateResult check_unital(const QuiverRep& r)
{
    const Vector& one = r.algebra.unit();
    for (std::size_t k = 0; k < r.phi.size(); ++k) {
        const Arrow& a = r.quiver.arrow(k);
        Vector v = r.phi[k] * one;
        bool good = a.is_loop() ? v == one : v.is_zero();
        if (!good)
            return {false, "arrow " + idx({a.s, a.t}) + " fails on the unit"};
    }
    return {};
}

PredicateResult check_factorizable(const QuiverRep& r)
{
    const Algebra& A = r.algebra;
    const auto m = A.dim();
    const int n = r.quiver.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto two = paths(r.quiver, 2, i, j);
            int direct = r.quiver.arrow_index(i, j);
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t s = 0; s < m; ++s) {
                    Vector lhs(A.field(), m);
                    for (const auto& p : two)
                        lhs += A.multiply(r.phi[p[0]].column(q), r.phi[p[1]].column(s));
                    Vector rhs = direct >= 0 ? r.phi[static_cast<std::size_t>(direct)] * A.product(q, s)
                                             : Vector::zeros(A.field(), m);
                    if (!(lhs == rhs))
                        return {false, "condition at " + idx({i, j}) + " fails on basis pair " +
                                           idx({static_cast<int>(q), static_cast<int>(s)})};
                }
        }
    return {};
}

QuiverRep drop_zero_arrows(QuiverRep r)
{
    std::vector<Arrow> arr;
    std::vector<EndoMap> phi;
    for (std::size_t k = 0; k < r.phi.size(); ++k)
        if (!r.phi[k].is_zero()) {
            arr.push_back(r.quiver.arrow(k));
            phi.push_back(r.phi[k]);
        }
    return QuiverRep{Quiver(r.quiver.n(), arr), std::move(r.algebra), std::move(phi)};
}

AdmissiblePair AdmissiblePair::from_rep(QuiverRep r)
{
    if (r.phi.size() != r.quiver.arrows().size())
        throw DimensionMismatch("one map per arrow required");
    for (const auto& f : r.phi)
        if (f.rows() != r.algebra.dim() || f.cols() != r.algebra.dim())
            throw DimensionMismatch("arrow map has wrong size");
    AdmissibleShape shape = validate_admissible_shape(r.quiver);
    for (std::size_t k = 0; k < r.phi.size(); ++k)
        if (r.phi[k].is_zero())
            throw InvalidInput("arrow " + idx({r.quiver.arrow(k).s, r.quiver.arrow(k).t}) +
                               " carries the zero map");
    AdmissiblePair p(std::move(shape), std::move(r));
    p.splitted_ = check_splitted(p.rep_);
    p.unital_ = check_unital(p.rep_);
    p.factorizable_ = check_factorizable(p.rep_);
    return p;
}

AdmissiblePair pair_from_grid(const EGrid& g)
{
    auto report = check_axioms(g);
    if (const auto* f = report.first_failure())
        throw AxiomViolation(f->name + ": " + f->detail);
    Quiver q = quiver_of(g);
    std::vector<EndoMap> phi;
    for (const auto& a : q.arrows())
        phi.push_back(g(a.s, a.t));
    return AdmissiblePair::from_rep(QuiverRep{q, g.algebra(), std::move(phi)});
}

EGrid grid_from_rep(const QuiverRep& r)
{
    EGrid g(r.quiver.n(), r.algebra);
    for (std::size_t k = 0; k < r.phi.size(); ++k) {
        const Arrow& a = r.quiver.arrow(k);
        if (k > 0 && r.quiver.arrow(k - 1) == a)
            throw MultipleArrows(a.s, a.t);
        g(a.s, a.t) = r.phi[k];
    }
    return g;
}

EGrid grid_from_pair(const AdmissiblePair& p)
{
    return grid_from_rep(p.rep());
}

Algebra twisted_product(const EGrid& g)
{
    const auto n = static_cast<std::size_t>(g.n());
    const auto m = g.m();
    const auto d = n * m;
    const Field& F = g.field();
    const Algebra& A = g.algebra();
    std::vector<Vector> table(d * d, Vector::zeros(F, d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const EndoMap& E = g(static_cast<int>(i), static_cast<int>(j));
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) {
                    // (f_p (x) e_i)(f_q (x) e_j) = f_p E_ij(f_q) (x) e_j
                    Vector prod = A.multiply(Vector::basis(F, m, p), E.column(q));
                    Vector& slot = table[(i * m + p) * d + (j * m + q)];
                    for (std::size_t r = 0; r < m; ++r)
                        slot[j * m + r] = prod[r];
                }
        }
    Vector unit(F, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            unit[i * m + p] = A.unit()[p];
    return Algebra(F, d, std::move(table), std::move(unit));
}

Algebra build_twisted_algebra(const EGrid& g, int threads)
{
    Algebra t = twisted_product(g);
    if (auto i = find_unit_violation(t))
        throw NotAssociative("unit law fails at basis element " + std::to_string(*i + 1));
    auto bad = threads == 1 ? find_associativity_violation(t)
                            : find_associativity_violation_parallel(t, threads);
    if (bad)
        throw NotAssociative("associativity fails at basis triple " +
                             idx({static_cast<int>((*bad)[0]), static_cast<int>((*bad)[1]),
                                  static_cast<int>((*bad)[2])}));
    return t;
}

bool check_identity_loop_characterization(const AdmissiblePair& p)
{
    const Quiver& q = p.quiver();
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Arrow& a = q.arrow(k);
        bool is_id = p.phi(k).is_identity();
        bool predicted = a.is_loop() && q.rank(a.t) == 1;
        if (is_id != predicted)
            return false;
    }
    return true;
}

} // namespace twistlab
