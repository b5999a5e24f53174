#pragma once

#include "symtoric/fan.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace symtoric {

/// Fan of projective n-space: rays e_1..e_n and -(e_1+..+e_n); maximal cones
/// are all n-element subsets of the rays.
inline Fan projective_space(std::size_t n) {
    if (n == 0) throw input_error("projective_space: dimension must be positive");
    Fan f;
    f.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.emplace_back(n, Int(-1));
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) cone.push_back(i);
        f.max_cones.push_back(std::move(cone));
    }
    return f;
}

/// 0-based ray indices of the torus-fixed points blown up by
/// blowup_projective_space(n, m): the fixed point opposite ray j, for the
/// last m values of j.
inline std::vector<std::size_t> blowup_centers(std::size_t n, std::size_t m) {
    std::vector<std::size_t> centers;
    for (std::size_t j = n + 1 - m; j <= n; ++j) centers.push_back(j);
    return centers;
}

/// Blow-up of projective n-space at m distinct torus-fixed points
/// (1 <= m <= n+1, n >= 2). The fixed point indexed by ray j (the point where
/// all rays except j are "active") is replaced by star subdivision: a new ray
/// -v_j subdivides the cone spanned by the complement of j.
inline Fan blowup_projective_space(std::size_t n, std::size_t m) {
    if (n < 2) throw input_error("blowup_projective_space: need n >= 2");
    if (m < 1 || m > n + 1) throw input_error("blowup_projective_space: need 1 <= m <= n+1");
    Fan f = projective_space(n);
    std::vector<std::size_t> centers = blowup_centers(n, m);
    for (std::size_t j : centers) {
        // star-subdivision ray: the sum of the cone's rays, which equals -v_j
        // because the n+1 original rays sum to zero
        std::vector<Int> sum(n, Int(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k) sum[k] += f.rays[i][k];
        }
        std::size_t new_ray = f.rays.size();
        f.rays.push_back(std::move(sum));

        std::vector<std::size_t> subdivided;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != j) subdivided.push_back(i);
        std::vector<std::vector<std::size_t>> next_cones;
        for (const auto& cone : f.max_cones)
            if (cone != subdivided) next_cones.push_back(cone);
        for (std::size_t drop : subdivided) {
            std::vector<std::size_t> cone;
            for (std::size_t i : subdivided)
                if (i != drop) cone.push_back(i);
            cone.push_back(new_ray);
            std::sort(cone.begin(), cone.end());
            next_cones.push_back(std::move(cone));
        }
        f.max_cones = std::move(next_cones);
    }
    return f;
}

/// Product of two projective lines: rays +-e_1, +-e_2 and the four quadrants.
inline Fan product_p1_p1() {
    Fan f;
    f.dim = 2;
    f.rays = {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}};
    f.max_cones = {{0, 2}, {1, 2}, {0, 3}, {1, 3}};
    return f;
}

/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
inline Fan hirzebruch(Int a) {
    if (a < 0) throw input_error("hirzebruch: parameter must be nonnegative");
    Fan f;
    f.dim = 2;
    f.rays = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), a}, {Int(0), Int(-1)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

/// Registry of named fans usable from the command line as builtin:NAME.
inline const std::map<std::string, Fan>& builtin_fans() {
    static const std::map<std::string, Fan> fans = [] {
        std::map<std::string, Fan> m;
        for (std::size_t n = 1; n <= 4; ++n) m["p" + std::to_string(n)] = projective_space(n);
        m["p1xp1"] = product_p1_p1();
        m["f2"] = hirzebruch(2);
        m["f3"] = hirzebruch(3);
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t k = 1; k <= n + 1; ++k)
                m["bl" + std::to_string(k) + "p" + std::to_string(n)] =
                    blowup_projective_space(n, k);
        return m;
    }();
    return fans;
}

inline std::vector<std::string> builtin_fan_names() {
    std::vector<std::string> names;
    for (const auto& [name, fan] : builtin_fans()) names.push_back(name);
    return names;
}

inline const Fan& builtin_fan(const std::string& name) {
    const auto& fans = builtin_fans();
    auto it = fans.find(name);
    if (it == fans.end()) throw input_error("unknown builtin fan: " + name);
    return it->second;
}

}  // namespace symtoric
