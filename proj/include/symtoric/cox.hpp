#pragma once

#include "symtoric/fan.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace symtoric {

/// The four graded presentations of the Cox ring of the projectivized
/// tangent bundle of a smooth complete toric variety:
///   R          base variables x per ray, fiber variables y on sigma1 only
///              (the antipodal identification y_{-rho} = -y_rho is performed
///              eagerly, eliminating the paired variable);
///   Rtilde     like R but keeping a fiber variable y per ray, with the
///              pair relations x^rho (y_rho + y_{-rho}) as ideal generators;
///   Rprime     base variables x per ray, fiber variables w per ray, one
///              bilinear relation per row of A (the moment relations);
///   RtildePrime  fiber variables w per ray, sigma1-perp relations plus the
///              pair relations x_rho w_rho + x_{-rho} w_{-rho}.
enum class PresentationKind { R, Rtilde, Rprime, RtildePrime };

inline const char* to_string(PresentationKind k) {
    switch (k) {
        case PresentationKind::R: return "R";
        case PresentationKind::Rtilde: return "Rtilde";
        case PresentationKind::Rprime: return "Rprime";
        case PresentationKind::RtildePrime: return "RtildePrime";
    }
    return "?";
}

/// Monomial in the variables of a presentation: exponents of the base
/// variables (one per ray) and of the fiber variables (one per entry of
/// the presentation's t_rays list).
struct PresMonomial {
    std::vector<int> s_exp;
    std::vector<int> t_exp;

    bool operator==(const PresMonomial& o) const = default;
};

struct PresTerm {
    Rat coeff;
    PresMonomial mono;
};

using PresPolynomial = std::vector<PresTerm>;

/// One eliminated fiber variable: y at ray `eliminated` equals -y at ray
/// `kept` (which sits at position `kept_pos` of t_rays).
struct Identification {
    std::size_t eliminated;
    std::size_t kept;
    std::size_t kept_pos;
};

struct Bidegree {
    std::vector<Int> cls;  // divisor class in Z^{N-n}
    int fiber = 0;

    bool operator==(const Bidegree& o) const = default;
};

struct GradedPresentation {
    PresentationKind kind;
    std::size_t n_rays = 0;
    std::vector<std::size_t> t_rays;          // ray index of each fiber variable
    std::vector<Bidegree> s_degree;           // per ray
    std::vector<Bidegree> t_degree;           // per fiber variable
    std::vector<PresPolynomial> relations;
    std::vector<Identification> identifications;  // kind R only

    std::size_t t_index_of_ray(std::size_t ray) const {
        for (std::size_t i = 0; i < t_rays.size(); ++i)
            if (t_rays[i] == ray) return i;
        throw input_error("no fiber variable at ray " + std::to_string(ray));
    }

    std::string s_name(std::size_t ray) const { return "x" + std::to_string(ray); }
    std::string t_name(std::size_t pos) const {
        bool primed = kind == PresentationKind::Rprime || kind == PresentationKind::RtildePrime;
        return (primed ? "w" : "y") + std::to_string(t_rays[pos]);
    }

    Bidegree degree_of(const PresMonomial& m) const {
        Bidegree d;
        d.cls.assign(s_degree.empty() ? 0 : s_degree[0].cls.size(), Int(0));
        for (std::size_t r = 0; r < n_rays; ++r)
            if (m.s_exp[r])
                for (std::size_t j = 0; j < d.cls.size(); ++j)
                    d.cls[j] += m.s_exp[r] * s_degree[r].cls[j];
        for (std::size_t t = 0; t < t_rays.size(); ++t)
            if (m.t_exp[t]) {
                for (std::size_t j = 0; j < d.cls.size(); ++j)
                    d.cls[j] += m.t_exp[t] * t_degree[t].cls[j];
                d.fiber += m.t_exp[t];
            }
        return d;
    }
};

namespace detail {

inline std::vector<Int> negate(std::vector<Int> v) {
    for (auto& x : v) x = -x;
    return v;
}

inline std::vector<Int> add(std::vector<Int> a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// s-exponent of x^rho: x_rho, together with x_{-rho} when the opposite exists
inline std::vector<int> s_hat(std::size_t n_rays, std::size_t ray, const SignedRayPairing& p) {
    std::vector<int> e(n_rays, 0);
    e[ray] = 1;
    if (p.opposite[ray]) e[*p.opposite[ray]] += 1;
    return e;
}

}  // namespace detail

/// Build one of the four presentations from the exact-sequence data and the
/// antipodal pairing of a validated fan.
inline GradedPresentation cox_presentation(const ExactSequenceData& esd,
                                           const SignedRayPairing& pairing,
                                           PresentationKind kind) {
    std::size_t bign = esd.ray_count();
    GradedPresentation pres;
    pres.kind = kind;
    pres.n_rays = bign;

    pres.s_degree.resize(bign);
    for (std::size_t r = 0; r < bign; ++r) pres.s_degree[r] = {esd.divisor_class(r), 0};

    bool primed = kind == PresentationKind::Rprime || kind == PresentationKind::RtildePrime;
    bool reduced = kind == PresentationKind::R;

    if (reduced)
        pres.t_rays = pairing.sigma1;
    else {
        pres.t_rays.resize(bign);
        for (std::size_t r = 0; r < bign; ++r) pres.t_rays[r] = r;
    }

    pres.t_degree.resize(pres.t_rays.size());
    for (std::size_t t = 0; t < pres.t_rays.size(); ++t) {
        std::size_t ray = pres.t_rays[t];
        std::vector<Int> cls = detail::negate(esd.divisor_class(ray));
        if (!primed && pairing.opposite[ray])
            cls = detail::add(std::move(cls), detail::negate(esd.divisor_class(*pairing.opposite[ray])));
        pres.t_degree[t] = {std::move(cls), 1};
    }

    auto blank = [&]() {
        PresMonomial m;
        m.s_exp.assign(bign, 0);
        m.t_exp.assign(pres.t_rays.size(), 0);
        return m;
    };

    if (kind == PresentationKind::Rprime) {
        // one relation per row of A: sum_rho A(j, rho) x_rho w_rho
        for (std::size_t j = 0; j < esd.pic_rank(); ++j) {
            PresPolynomial rel;
            for (std::size_t r = 0; r < bign; ++r) {
                if (esd.a(j, r) == 0) continue;
                PresTerm term{Rat(esd.a(j, r)), blank()};
                term.mono.s_exp[r] = 1;
                term.mono.t_exp[r] = 1;
                rel.push_back(std::move(term));
            }
            pres.relations.push_back(std::move(rel));
        }
        return pres;
    }

    // relations from a basis of sigma1-perp
    Fan dummy;  // perp_spaces only needs rays and pairing
    dummy.dim = esd.dim();
    for (std::size_t r = 0; r < bign; ++r) dummy.rays.push_back(esd.b.row(r));
    PerpSpaces perp = perp_spaces(dummy, pairing);

    for (std::size_t u = 0; u < perp.sigma1_perp.rows(); ++u) {
        PresPolynomial rel;
        for (std::size_t pos = 0; pos < pairing.sigma1.size(); ++pos) {
            if (perp.sigma1_perp(u, pos) == 0) continue;
            std::size_t ray = pairing.sigma1[pos];
            PresTerm term{Rat(perp.sigma1_perp(u, pos)), blank()};
            if (primed)
                term.mono.s_exp[ray] = 1;  // x_rho w_rho
            else
                term.mono.s_exp = detail::s_hat(bign, ray, pairing);  // x^rho y_rho
            term.mono.t_exp[pres.t_index_of_ray(ray)] = 1;
            rel.push_back(std::move(term));
        }
        pres.relations.push_back(std::move(rel));
    }

    for (std::size_t pos = 0; pos < pairing.sigma1.size(); ++pos) {
        std::size_t ray = pairing.sigma1[pos];
        if (!pairing.opposite[ray]) continue;
        std::size_t opp = *pairing.opposite[ray];
        if (kind == PresentationKind::R) {
            pres.identifications.push_back({opp, ray, pres.t_index_of_ray(ray)});
        } else if (kind == PresentationKind::Rtilde) {
            // x^rho (y_rho + y_{-rho})
            PresPolynomial rel;
            for (std::size_t which : {ray, opp}) {
                PresTerm term{Rat(1), blank()};
                term.mono.s_exp = detail::s_hat(bign, ray, pairing);
                term.mono.t_exp[pres.t_index_of_ray(which)] = 1;
                rel.push_back(std::move(term));
            }
            pres.relations.push_back(std::move(rel));
        } else {
            // x_rho w_rho + x_{-rho} w_{-rho}
            PresPolynomial rel;
            for (std::size_t which : {ray, opp}) {
                PresTerm term{Rat(1), blank()};
                term.mono.s_exp[which] = 1;
                term.mono.t_exp[pres.t_index_of_ray(which)] = 1;
                rel.push_back(std::move(term));
            }
            pres.relations.push_back(std::move(rel));
        }
    }
    return pres;
}

/// Signed monomial: the image of a monomial under a ring map that sends
/// variables to signed monomials.
struct SignedPresMonomial {
    int sign = 1;
    PresMonomial mono;
};

/// Image of a monomial of Rprime (or RtildePrime) under the comparison map
/// into Rtilde: w_rho maps to x_{-rho} y_rho when -rho is a ray, to y_rho
/// otherwise; base variables map to themselves. The result is a monomial in
/// the Rtilde variables (fiber variable per ray).
inline PresMonomial phi_bar_image(const SignedRayPairing& pairing, const PresMonomial& primed_mono) {
    PresMonomial out;
    out.s_exp = primed_mono.s_exp;
    out.t_exp.assign(primed_mono.t_exp.size(), 0);
    for (std::size_t r = 0; r < primed_mono.t_exp.size(); ++r) {
        int e = primed_mono.t_exp[r];
        if (e == 0) continue;
        out.t_exp[r] += e;
        if (pairing.opposite[r]) out.s_exp[*pairing.opposite[r]] += e;
    }
    return out;
}

/// Push an Rtilde monomial down to R by the identification y_{-rho} = -y_rho:
/// fiber exponents move onto sigma1 positions and the sign records the
/// parity of the eliminated exponents.
inline SignedPresMonomial reduce_to_r(const SignedRayPairing& pairing,
                                      const GradedPresentation& r_pres,
                                      const PresMonomial& tilde_mono) {
    SignedPresMonomial out;
    out.mono.s_exp = tilde_mono.s_exp;
    out.mono.t_exp.assign(r_pres.t_rays.size(), 0);
    for (std::size_t r = 0; r < tilde_mono.t_exp.size(); ++r) {
        int e = tilde_mono.t_exp[r];
        if (e == 0) continue;
        if (pairing.in_sigma1(r)) {
            out.mono.t_exp[r_pres.t_index_of_ray(r)] += e;
        } else {
            if (e % 2 != 0) out.sign = -out.sign;
            out.mono.t_exp[r_pres.t_index_of_ray(*pairing.opposite[r])] += e;
        }
    }
    return out;
}

/// Every term of every relation of a presentation must have one and the same
/// bidegree (relations are bihomogeneous). Returns false with nothing thrown
/// so property tests can assert it.
inline bool relations_bihomogeneous(const GradedPresentation& pres) {
    for (const auto& rel : pres.relations) {
        if (rel.empty()) continue;
        Bidegree d0 = pres.degree_of(rel[0].mono);
        for (const auto& term : rel)
            if (!(pres.degree_of(term.mono) == d0)) return false;
    }
    return true;
}

}  // namespace symtoric
