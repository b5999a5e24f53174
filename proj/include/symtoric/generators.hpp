#pragma once

#include "symtoric/cox.hpp"
#include "symtoric/fan.hpp"
#include "symtoric/graded.hpp"
#include "symtoric/monomials.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace symtoric {

struct Generator {
    InvariantMonomial mono;
    int fiber_degree = 0;
    bool quotient_redundant = false;
};

struct GeneratorReport {
    std::vector<Generator> generators;
    int degree_bound_used = 0;
    bool certified_complete = false;
    Int certificate_bound;  // a-priori fiber-degree bound for semigroup generators
};

namespace detail {

inline bool divides(const InvariantMonomial& g, const InvariantMonomial& m) {
    for (std::size_t i = 0; i < g.s_exp.size(); ++i)
        if (g.s_exp[i] > m.s_exp[i]) return false;
    for (std::size_t i = 0; i < g.t_exp.size(); ++i)
        if (g.t_exp[i] > m.t_exp[i]) return false;
    return true;
}

// Largest absolute value over all square minors of a (desk-scale matrices:
// the subset count is small).
inline Int max_abs_minor(const IntMatrix& a) {
    Int best(0);
    std::size_t rmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= rmax; ++k) {
        std::vector<std::size_t> rs(k), cs(k);
        for (std::size_t i = 0; i < k; ++i) rs[i] = i;
        bool more_rows = true;
        while (more_rows) {
            for (std::size_t i = 0; i < k; ++i) cs[i] = i;
            bool more_cols = true;
            while (more_cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
                Int d = abs(determinant(sub));
                if (d > best) best = d;
                more_cols = detail::next_subset(cs, a.cols());
            }
            more_rows = detail::next_subset(rs, a.rows());
        }
    }
    return best;
}

// Order in which generators are listed and in which the redundancy rank test
// consumes them: by fiber degree, then descending lexicographic on
// (t_exp, s_exp). The descending tie-break keeps diagonal-type monomials
// late, which is what makes the rank test flag them rather than the
// off-diagonal ones.
inline bool generator_order(const Generator& a, const Generator& b) {
    if (a.fiber_degree != b.fiber_degree) return a.fiber_degree < b.fiber_degree;
    if (a.mono.t_exp != b.mono.t_exp) return a.mono.t_exp > b.mono.t_exp;
    return a.mono.s_exp > b.mono.s_exp;
}

}  // namespace detail

/// The fiber degree of any semigroup generator of the invariant monomials is
/// at most (N+n)*N*max|minor(A)|: a generator is an extreme lattice point of
/// the defining cone up to one Caratheodory combination, extreme rays have
/// entries bounded by Cramer quotients of minors of A, and the fiber degree
/// adds at most N such entries over N+n supports.
inline Int generator_degree_certificate(const ExactSequenceData& esd) {
    Int delta = detail::max_abs_minor(esd.a);
    if (delta == 0) delta = 1;
    std::size_t bign = esd.ray_count();
    std::size_t n = esd.dim();
    return Int(bign + n) * Int(bign) * delta;
}

/// Minimal generating set of the invariant-monomial semigroup in the moment
/// presentation, computed degree by degree: a monomial is a generator unless
/// an already-found generator of strictly lower fiber degree divides it
/// (the quotient by an invariant divisor is again invariant, so checking
/// stored generators is exhaustive). Degree-one generators additionally get
/// a quotient-redundancy flag: processed in the canonical order, a generator
/// is flagged when its monomial lies in the span of the moment relations and
/// the previously kept degree-one generators.
inline GeneratorReport generator_report(MonomialEnumerator& en, int degree_bound) {
    if (degree_bound < 1) throw input_error("generator_report: degree_bound must be >= 1");
    const ExactSequenceData& esd = en.exact_sequence();
    const SignedRayPairing& pairing = en.pairing();

    GeneratorReport rep;
    rep.degree_bound_used = degree_bound;
    rep.certificate_bound = generator_degree_certificate(esd);
    rep.certified_complete = Int(degree_bound) >= rep.certificate_bound;

    for (int d = 1; d <= degree_bound; ++d) {
        std::vector<Generator> found;
        for (auto& m : en.of_degree(PresentationKind::Rprime, d)) {
            bool reducible = false;
            for (const auto& g : rep.generators) {
                if (g.fiber_degree < d && detail::divides(g.mono, m)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) found.push_back({std::move(m), d, false});
        }
        std::sort(found.begin(), found.end(), detail::generator_order);
        for (auto& g : found) rep.generators.push_back(std::move(g));
    }

    // quotient-redundancy pass over degree-one generators: group by balance
    // vector; the moment relations (each term S_rho T^rho has balance zero)
    // seed the zero-balance group
    std::map<std::vector<Int>, detail::RankBlock> blocks;
    std::vector<Generator*> degree_one;
    for (auto& g : rep.generators)
        if (g.fiber_degree == 1) degree_one.push_back(&g);
    for (Generator* g : degree_one) {
        auto key = balance_vector(pairing, PresentationKind::Rprime, g->mono.s_exp, g->mono.t_exp);
        auto& block = blocks[key];
        block.col_index.emplace(std::make_pair(g->mono.s_exp, g->mono.t_exp),
                                block.col_index.size());
    }
    {
        std::vector<Int> zero(esd.ray_count(), Int(0));
        auto it = blocks.find(zero);
        if (it != blocks.end()) {
            detail::RankBlock& block = it->second;
            for (std::size_t j = 0; j < esd.pic_rank(); ++j) {
                std::vector<Rat> row(block.col_index.size(), Rat(0));
                bool complete = true;
                for (std::size_t r = 0; r < esd.ray_count(); ++r) {
                    if (esd.a(j, r) == 0) continue;
                    std::vector<int> s(esd.ray_count(), 0), t(esd.ray_count(), 0);
                    s[r] = 1;
                    t[r] = 1;
                    auto cit = block.col_index.find(std::make_pair(s, t));
                    if (cit == block.col_index.end()) {
                        // relation touches a monomial that is not a degree-one
                        // generator (cannot happen: every degree-one invariant
                        // monomial is a generator); skip the row defensively
                        complete = false;
                        break;
                    }
                    row[cit->second] += Rat(esd.a(j, r));
                }
                if (complete) block.add_row(std::move(row));
            }
        }
    }
    for (Generator* g : degree_one) {
        auto key = balance_vector(pairing, PresentationKind::Rprime, g->mono.s_exp, g->mono.t_exp);
        detail::RankBlock& block = blocks[key];
        std::size_t col = block.col_index.at(std::make_pair(g->mono.s_exp, g->mono.t_exp));
        std::vector<Rat> row(block.col_index.size(), Rat(0));
        row[col] = Rat(1);
        std::size_t before = block.rank();
        block.add_row(std::move(row));
        if (block.rank() == before) g->quotient_redundant = true;
        // kept generators stay in the span; flagged ones were already there
    }
    return rep;
}

inline GeneratorReport generator_report(const Fan& fan, int degree_bound) {
    ExactSequenceData esd = build_exact_sequence(fan);
    SignedRayPairing pairing = select_sigma1(fan);
    MonomialEnumerator en(std::move(esd), std::move(pairing));
    return generator_report(en, degree_bound);
}

}  // namespace symtoric
