#pragma once

#include <cstdint>
#include <vector>

#include "twistlab/twist.hpp"

namespace oracle {

// Residues of E_ij as e[(i * n + j) * m * m + r * m + c].
inline std::vector<std::uint32_t> residues(const twistlab::EGrid& g)
{
    const int n = g.n();
    const std::size_t m = g.m();
    std::vector<std::uint32_t> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    e.push_back(g(i, j)(r, c).residue());
    return e;
}

// Twisted product on f_p (x) e_i with (f_p e_i)(f_q e_j) = E_ij[p][q] f_p e_j:
// associative with unit sum f_p (x) e_i. Grid over F_p and A = K^m.
inline bool twisted_product_is_unital_associative(const std::vector<std::uint32_t>& e, int n, int m,
                                                  std::uint64_t p)
{
    auto E = [&](int i, int j, int r, int c) -> std::uint64_t {
        return e[static_cast<std::size_t>(((i * n + j) * m + r) * m + c)];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        for (int c = 0; c < m; ++c) {
                            std::uint64_t lhs = E(i, j, a, b) * E(j, k, a, c) % p;
                            std::uint64_t rhs = E(i, k, a, b) * E(j, k, b, c) % p;
                            if (lhs != rhs)
                                return false;
                        }
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                std::uint64_t s = 0;
                for (int i = 0; i < n; ++i)
                    s += E(i, j, a, b);
                if (s % p != (a == b ? 1u : 0u))
                    return false;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a) {
                std::uint64_t s = 0;
                for (int b = 0; b < m; ++b)
                    s += E(i, j, a, b);
                if (s % p != (i == j ? 1u : 0u))
                    return false;
            }
    return true;
}

inline bool twisted_product_is_unital_associative(const twistlab::EGrid& g)
{
    return twisted_product_is_unital_associative(residues(g), g.n(), static_cast<int>(g.m()),
                                                 g.field().characteristic());
}

// Maps u on {0..m-1} with u(u(x)) = u(x), by exhaustion.
inline std::uint64_t idempotent_maps(int m)
{
    std::vector<int> u(static_cast<std::size_t>(m), 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            ok = u[static_cast<std::size_t>(u[static_cast<std::size_t>(x)])] == u[static_cast<std::size_t>(x)];
        count += ok;
        int k = 0;
        while (k < m && ++u[static_cast<std::size_t>(k)] == m)
            u[static_cast<std::size_t>(k++)] = 0;
        if (k == m)
            return count;
    }
}

inline std::uint64_t gl_order(int n, std::uint64_t p)
{
    std::uint64_t pn = 1;
    for (int i = 0; i < n; ++i)
        pn *= p;
    std::uint64_t order = 1, pi = 1;
    for (int i = 0; i < n; ++i) {
        order *= pn - pi;
        pi *= p;
    }
    return order;
}

} // namespace oracle
