#include "twistlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace twistlab {

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows))
{
    if (n < 0)
        throw InvalidInput("quiver: negative vertex count");
    for (const auto& a : arrows_)
        if (a.s < 0 || a.s >= n || a.t < 0 || a.t >= n)
            throw InvalidInput("quiver: arrow endpoint out of range");
    std::stable_sort(arrows_.begin(), arrows_.end());
}

void Quiver::check_vertex(int i) const
{
    if (i < 0 || i >= n_)
        throw InvalidInput("vertex " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n_));
}

int Quiver::rank(int i) const
{
    check_vertex(i);
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                          [i](const Arrow& a) { return a.t == i; }));
}

int Quiver::rrank(int i) const
{
    check_vertex(i);
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                          [i](const Arrow& a) { return a.t == i && a.s != i; }));
}

int Quiver::rank() const
{
    int r = 0;
    for (int i = 0; i < n_; ++i)
        r = std::max(r, rank(i));
    return r;
}

int Quiver::rrank() const
{
    int r = 0;
    for (int i = 0; i < n_; ++i)
        r = std::max(r, rrank(i));
    return r;
}

bool Quiver::has_arrow(int s, int t) const
{
    return arrow_index(s, t) >= 0;
}

int Quiver::arrow_index(int s, int t) const
{
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), Arrow{s, t});
    if (it != arrows_.end() && it->s == s && it->t == t)
        return static_cast<int>(it - arrows_.begin());
    return -1;
}

MultipleArrows::MultipleArrows(int s_, int t_)
    : InvalidInput("multiple arrows " + std::to_string(s_ + 1) + " -> " + std::to_string(t_ + 1)),
      s(s_), t(t_)
{
}

MissingLoop::MissingLoop(int i)
    : InvalidInput("vertex " + std::to_string(i + 1) + " carries no loop"), vertex(i)
{
}

RrankTooLarge::RrankTooLarge(int i)
    : MathError("vertex " + std::to_string(i + 1) + " has reduced rank >= 2"), vertex(i)
{
}

AdmissibleShape validate_admissible_shape(const Quiver& q)
{
    const auto& arr = q.arrows();
    for (std::size_t k = 1; k < arr.size(); ++k)
        if (arr[k] == arr[k - 1])
            throw MultipleArrows(arr[k].s, arr[k].t);
    for (int i = 0; i < q.n(); ++i)
        if (!q.has_loop(i))
            throw MissingLoop(i);
    return AdmissibleShape(q);
}

std::vector<std::vector<int>> connected_components(const Quiver& q)
{
    std::vector<int> parent(static_cast<std::size_t>(q.n()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& a : q.arrows()) {
        int x = find(a.s), y = find(a.t);
        if (x != y)
            parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(static_cast<std::size_t>(q.n()), -1);
    for (int v = 0; v < q.n(); ++v) {
        int r = find(v);
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(v);
    }
    return comps;
}

std::vector<CycleTreeDecomposition> unique_cycle_decomposition(const AdmissibleShape& shape)
{
    const Quiver& q = shape.quiver();
    const auto n = static_cast<std::size_t>(q.n());
    std::vector<int> parent(n, -1);
    for (const auto& a : q.arrows()) {
        if (a.is_loop())
            continue;
        if (parent[static_cast<std::size_t>(a.t)] >= 0)
            throw RrankTooLarge(a.t);
        parent[static_cast<std::size_t>(a.t)] = a.s;
    }

    std::vector<CycleTreeDecomposition> out;
    for (auto& comp : connected_components(q)) {
        CycleTreeDecomposition d;
        d.vertices = comp;
        // Walk parents from the smallest vertex; either a root or a cycle is reached.
        std::vector<int> seen(n, 0);
        int v = comp.front();
        while (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            v = parent[static_cast<std::size_t>(v)];
        }
        std::vector<int> cyc;
        std::vector<bool> on_cycle(n, false);
        if (v >= 0) {
            int w = v;
            do {
                cyc.push_back(w);
                on_cycle[static_cast<std::size_t>(w)] = true;
                w = parent[static_cast<std::size_t>(w)];
            } while (w != v);
            // cyc follows arrows backwards; reverse, then rotate to the smallest vertex.
            std::reverse(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        }
        d.cycle = cyc;

        std::vector<int> roots;
        if (cyc.empty()) {
            for (int x : comp)
                if (parent[static_cast<std::size_t>(x)] < 0)
                    roots.push_back(x);
        } else {
            roots = cyc;
        }
        for (int r : roots) {
            RootedTree t;
            t.root = r;
            std::vector<int> stack{r};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                t.vertices.push_back(x);
                for (int y : comp) {
                    if (y == x || on_cycle[static_cast<std::size_t>(y)])
                        continue;
                    if (parent[static_cast<std::size_t>(y)] == x) {
                        t.arrows.push_back({x, y});
                        stack.push_back(y);
                    }
                }
            }
            std::sort(t.vertices.begin(), t.vertices.end());
            std::sort(t.arrows.begin(), t.arrows.end());
            d.trees.push_back(std::move(t));
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<Path> paths(const Quiver& q, int k, int i, int j)
{
    std::vector<Path> out;
    if (k < 0)
        return out;
    if (k == 0) {
        if (i == j)
            out.emplace_back();
        return out;
    }
    Path cur;
    std::function<void(int)> extend = [&](int at) {
        if (static_cast<int>(cur.size()) == k) {
            if (at == j)
                out.push_back(cur);
            return;
        }
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            if (q.arrow(a).s != at)
                continue;
            cur.push_back(a);
            extend(q.arrow(a).t);
            cur.pop_back();
        }
    };
    extend(i);
    return out;
}

std::string export_dot(const Quiver& q)
{
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int v = 0; v < q.n(); ++v)
        os << "  " << v + 1 << ";\n";
    for (const auto& a : q.arrows())
        os << "  " << a.s + 1 << " -> " << a.t + 1 << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<AdmissibleShape> admissible_shapes(int n, int max_rrank)
{
    std::vector<Arrow> nonloops;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t)
                nonloops.push_back({s, t});
    std::vector<AdmissibleShape> out;
    if (max_rrank <= 1) {
        // Each vertex picks at most one source: (n)^n choices with "none" = itself.
        std::vector<int> par(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int v) {
            if (v == n) {
                std::vector<Arrow> arr;
                for (int x = 0; x < n; ++x) {
                    arr.push_back({x, x});
                    if (par[static_cast<std::size_t>(x)] != x && max_rrank == 1)
                        arr.push_back({par[static_cast<std::size_t>(x)], x});
                }
                out.push_back(validate_admissible_shape(Quiver(n, arr)));
                return;
            }
            for (int p = 0; p < n; ++p) {
                if (max_rrank == 0 && p != v)
                    continue;
                par[static_cast<std::size_t>(v)] = p;
                rec(v + 1);
            }
        };
        if (n > 0)
            rec(0);
        return out;
    }
    const std::size_t k = nonloops.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<Arrow> arr;
        for (int x = 0; x < n; ++x)
            arr.push_back({x, x});
        for (std::size_t b = 0; b < k; ++b)
            if (mask >> b & 1)
                arr.push_back(nonloops[b]);
        Quiver q(n, arr);
        if (q.rrank() <= max_rrank)
            out.push_back(validate_admissible_shape(q));
    }
    return out;
}

bool on_two_cycle(const Quiver& q, int i, int j)
{
    return i != j && q.has_arrow(i, j) && q.has_arrow(j, i);
}

} // namespace twistlab
