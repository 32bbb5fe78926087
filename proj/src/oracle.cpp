#include "twistlab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>
#include <string>

#include <omp.h>

namespace twistlab {

GridSet canonical_set(std::vector<EGrid> grids)
{
    std::sort(grids.begin(), grids.end());
    grids.erase(std::unique(grids.begin(), grids.end()), grids.end());
    return grids;
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("TWISTLAB_BUDGET")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0)
                return v;
        } catch (const std::exception&) {
        }
        throw InvalidInput(std::string("TWISTLAB_BUDGET is not a positive integer: ") + env);
    }
    return kDefaultBudget;
}

namespace {

constexpr int kMaxM = 6;

// m x m matrix over F_p, column q = image of f_q, stored row-major.
struct Small {
    std::uint8_t a[kMaxM * kMaxM] = {};
};

struct Counters {
    std::atomic<std::uint64_t> nodes{0}, leaves{0};
    std::atomic<bool> exceeded{false};
};

class Search {
public:
    Search(int n, int m, std::uint32_t p, const SearchOptions& opt)
        : n_(n), m_(m), p_(p), opt_(opt)
    {
        const int cells = m * m;
        std::uint64_t total = 1;
        for (int k = 0; k < cells; ++k)
            total *= p;
        std::vector<Small> all;
        for (std::uint64_t code = 0; code < total; ++code) {
            Small s;
            std::uint64_t c = code;
            for (int k = cells - 1; k >= 0; --k) {
                s.a[k] = static_cast<std::uint8_t>(c % p);
                c /= p;
            }
            all.push_back(s);
        }
        if (!opt.prune) {
            cands_ = std::move(all);
        } else {
            for (const auto& s : all)
                if (rows_sum_to(s, 0) && idempotent(s))
                    cands_.push_back(s);
        }
        // Columns left to right, rows top to bottom; the diagonal entry is
        // implied by the column sum when pruning.
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (!opt.prune || i != j)
                    vars_.push_back({i, j});
        grid_.assign(static_cast<std::size_t>(n * n), Small{});
    }

    std::vector<std::vector<Small>> run(SearchStats* stats)
    {
        std::vector<std::vector<Small>> found;
        const bool serial = opt_.threads == 1;
        if (vars_.empty()) {
            Search local = *this;
            local.dfs(0, found);
        } else {
            const long branches = static_cast<long>(cands_.size());
            std::vector<std::vector<std::vector<Small>>> per(cands_.size());
            int threads = serial ? 1 : (opt_.threads > 0 ? opt_.threads : omp_get_max_threads());
            if (serial) {
                for (long b = 0; b < branches; ++b)
                    branch(b, per[static_cast<std::size_t>(b)]);
            } else {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
                for (long b = 0; b < branches; ++b)
                    branch(b, per[static_cast<std::size_t>(b)]);
            }
            for (auto& v : per)
                for (auto& g : v)
                    found.push_back(std::move(g));
        }
        if (counters_->exceeded)
            throw BudgetExceeded("search exceeded the budget of " + std::to_string(opt_.budget) +
                                 " nodes");
        if (stats) {
            stats->nodes = counters_->nodes;
            stats->leaves = counters_->leaves;
        }
        return found;
    }

    EGrid to_grid(const std::vector<Small>& g) const
    {
        Field F = Field::prime(p_);
        EGrid out(n_, F, static_cast<std::size_t>(m_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int r = 0; r < m_; ++r)
                    for (int c = 0; c < m_; ++c)
                        out(i, j)(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                            F.from_int(g[static_cast<std::size_t>(i * n_ + j)].a[r * m_ + c]);
        return out;
    }

private:
    struct Var {
        int i, j;
    };

    Small& at(int i, int j) { return grid_[static_cast<std::size_t>(i * n_ + j)]; }

    Small mul(const Small& x, const Small& y) const
    {
        Small z;
        for (int r = 0; r < m_; ++r)
            for (int c = 0; c < m_; ++c) {
                unsigned s = 0;
                for (int k = 0; k < m_; ++k)
                    s += static_cast<unsigned>(x.a[r * m_ + k]) * y.a[k * m_ + c];
                z.a[r * m_ + c] = static_cast<std::uint8_t>(s % p_);
            }
        return z;
    }

    bool equal(const Small& x, const Small& y) const
    {
        for (int k = 0; k < m_ * m_; ++k)
            if (x.a[k] != y.a[k])
                return false;
        return true;
    }

    bool is_zero(const Small& x) const
    {
        for (int k = 0; k < m_ * m_; ++k)
            if (x.a[k])
                return false;
        return true;
    }

    bool idempotent(const Small& x) const { return equal(mul(x, x), x); }

    bool rows_sum_to(const Small& x, unsigned v) const
    {
        for (int r = 0; r < m_; ++r) {
            unsigned s = 0;
            for (int c = 0; c < m_; ++c)
                s += x.a[r * m_ + c];
            if (s % p_ != v)
                return false;
        }
        return true;
    }

    bool orthogonal(const Small& x, const Small& y) const
    {
        return is_zero(mul(x, y)) && is_zero(mul(y, x));
    }

    // Column j complete except its diagonal: fill and test it.
    bool close_column(int j)
    {
        Small d;
        for (int r = 0; r < m_; ++r)
            for (int c = 0; c < m_; ++c) {
                unsigned s = r == c ? 1u : 0u;
                for (int i = 0; i < n_; ++i)
                    if (i != j)
                        s += p_ - at(i, j).a[r * m_ + c];
                d.a[r * m_ + c] = static_cast<std::uint8_t>(s % p_);
            }
        at(j, j) = d;
        if (!idempotent(d))
            return false;
        for (int i = 0; i < n_; ++i)
            if (i != j && !orthogonal(d, at(i, j)))
                return false;
        return true;
    }

    bool multiplicative() const
    {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const Small& e = grid_[static_cast<std::size_t>(i * n_ + j)];
                for (int q = 0; q < m_; ++q)
                    for (int r = 0; r < m_; ++r)
                        for (int t = 0; t < m_; ++t) {
                            unsigned lhs = q == r ? e.a[t * m_ + q] : 0u;
                            unsigned rhs = 0;
                            for (int k = 0; k < n_; ++k)
                                rhs += static_cast<unsigned>(
                                           grid_[static_cast<std::size_t>(i * n_ + k)].a[t * m_ + q]) *
                                       grid_[static_cast<std::size_t>(k * n_ + j)].a[t * m_ + r];
                            if (lhs != rhs % p_)
                                return false;
                        }
            }
        return true;
    }

    bool full_check() const
    {
        for (int j = 0; j < n_; ++j) {
            for (int i = 0; i < n_; ++i)
                for (int k = 0; k < n_; ++k) {
                    Small c = mul(grid_[static_cast<std::size_t>(i * n_ + j)],
                                  grid_[static_cast<std::size_t>(k * n_ + j)]);
                    if (i == k ? !equal(c, grid_[static_cast<std::size_t>(i * n_ + j)]) : !is_zero(c))
                        return false;
                }
            for (int r = 0; r < m_; ++r)
                for (int c = 0; c < m_; ++c) {
                    unsigned s = 0;
                    for (int i = 0; i < n_; ++i)
                        s += grid_[static_cast<std::size_t>(i * n_ + j)].a[r * m_ + c];
                    if (s % p_ != (r == c ? 1u : 0u))
                        return false;
                }
            for (int i = 0; i < n_; ++i)
                if (!rows_sum_to(grid_[static_cast<std::size_t>(i * n_ + j)], i == j ? 1u : 0u))
                    return false;
        }
        return multiplicative();
    }

    bool visit()
    {
        if (++counters_->nodes > opt_.budget) {
            counters_->exceeded = true;
            return false;
        }
        return !counters_->exceeded;
    }

    void branch(long b, std::vector<std::vector<Small>>& out)
    {
        Search local = *this;
        const Var& v = vars_.front();
        if (!local.visit())
            return;
        local.at(v.i, v.j) = cands_[static_cast<std::size_t>(b)];
        if (local.consistent(0))
            local.dfs(1, out);
    }

    // Checks after assigning vars_[k].
    bool consistent(std::size_t k)
    {
        if (!opt_.prune)
            return true;
        const Var& v = vars_[k];
        const Small& e = at(v.i, v.j);
        for (std::size_t t = 0; t < k; ++t)
            if (vars_[t].j == v.j && !orthogonal(e, at(vars_[t].i, v.j)))
                return false;
        bool last_in_column = k + 1 == vars_.size() || vars_[k + 1].j != v.j;
        if (last_in_column && !close_column(v.j))
            return false;
        return true;
    }

    void dfs(std::size_t k, std::vector<std::vector<Small>>& out)
    {
        if (counters_->exceeded)
            return;
        if (k == vars_.size()) {
            if (opt_.prune && vars_.empty())
                for (int j = 0; j < n_; ++j)
                    if (!close_column(j))
                        return;
            ++counters_->leaves;
            if (opt_.prune ? multiplicative() : full_check())
                out.push_back(grid_);
            return;
        }
        const Var& v = vars_[k];
        for (const auto& c : cands_) {
            if (!visit())
                return;
            at(v.i, v.j) = c;
            if (consistent(k))
                dfs(k + 1, out);
        }
    }

    int n_, m_;
    std::uint32_t p_;
    SearchOptions opt_;
    std::vector<Small> cands_;
    std::vector<Var> vars_;
    std::vector<Small> grid_;
    std::shared_ptr<Counters> counters_ = std::make_shared<Counters>();
};

} // namespace

GridSet brute_force_twisting_maps(int n, int m, std::uint32_t p, const SearchOptions& options,
                                  SearchStats* stats)
{
    if (n < 1 || m < 1)
        throw InvalidInput("n and m must be positive");
    if (m > kMaxM)
        throw InvalidInput("m too large for the brute-force search");
    if (!is_prime(p) || p > 251)
        throw InvalidInput("brute force needs a prime below 256");
    Search s(n, m, p, options);
    auto raw = s.run(stats);
    std::vector<EGrid> grids;
    grids.reserve(raw.size());
    for (const auto& g : raw)
        grids.push_back(s.to_grid(g));
    return canonical_set(std::move(grids));
}

SetDifference compare_sets(const GridSet& a0, const GridSet& b0)
{
    GridSet a = canonical_set(a0), b = canonical_set(b0);
    SetDifference d;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.only_in_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.only_in_b));
    return d;
}

std::uint64_t count_idempotent_functions(int m)
{
    if (m < 1)
        throw InvalidInput("m must be positive");
    std::vector<int> u(static_cast<std::size_t>(m), 0);
    std::uint64_t count = 0;
    while (true) {
        bool idem = true;
        for (int x = 0; x < m && idem; ++x)
            idem = u[static_cast<std::size_t>(u[static_cast<std::size_t>(x)])] == u[static_cast<std::size_t>(x)];
        count += idem;
        int k = m - 1;
        while (k >= 0 && u[static_cast<std::size_t>(k)] == m - 1)
            u[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            break;
        ++u[static_cast<std::size_t>(k)];
    }
    return count;
}

} // namespace twistlab
