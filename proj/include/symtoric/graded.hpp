#pragma once

#include "symtoric/cox.hpp"
#include "symtoric/fan.hpp"
#include "symtoric/monomials.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace symtoric {

struct GradedDims {
    PresentationKind scheme;
    std::vector<long long> dims;  // indexed by fiber degree 0..p_max
};

namespace detail {

// A relation, recorded as exponent shifts per term with fiber exponents
// indexed by ray (uniform for both schemes).
struct RelationShift {
    struct Term {
        Rat coeff;
        std::vector<int> ds, dt;
    };
    std::vector<Term> terms;
};

inline std::vector<RelationShift> relation_shifts(const ExactSequenceData& esd,
                                                  const SignedRayPairing& pairing,
                                                  PresentationKind scheme) {
    GradedPresentation pres = cox_presentation(esd, pairing, scheme);
    std::vector<RelationShift> out;
    for (const auto& rel : pres.relations) {
        RelationShift shift;
        for (const auto& term : rel) {
            RelationShift::Term t;
            t.coeff = term.coeff;
            t.ds = term.mono.s_exp;
            t.dt.assign(esd.ray_count(), 0);
            for (std::size_t pos = 0; pos < pres.t_rays.size(); ++pos)
                t.dt[pres.t_rays[pos]] += term.mono.t_exp[pos];
            shift.terms.push_back(std::move(t));
        }
        out.push_back(std::move(shift));
    }
    return out;
}

// Incremental exact rank computation per weight block: columns are the
// invariant monomials sharing a balance vector, rows arrive one by one.
struct RankBlock {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> col_index;
    std::vector<std::vector<Rat>> reduced;  // rows in echelon form
    std::vector<std::size_t> pivot_col;

    void add_row(std::vector<Rat> row) {
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            const Rat& lead = row[pivot_col[i]];
            if (lead == 0) continue;
            Rat factor = lead / reduced[i][pivot_col[i]];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (reduced[i][j] != 0) row[j] -= factor * reduced[i][j];
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) {
                pivot_col.push_back(j);
                reduced.push_back(std::move(row));
                return;
            }
        }
    }

    std::size_t rank() const { return reduced.size(); }
};

}  // namespace detail

/// Dimensions of the invariant subring by fiber degree. In each degree p the
/// invariant part of the relation ideal is spanned by (invariant monomials of
/// degree p-1) x (relations): every relation has total torus weight zero in
/// each term, so multiplication preserves the balance vector and the span
/// splits into small blocks indexed by it.
inline GradedDims graded_dims(MonomialEnumerator& en, PresentationKind scheme, int p_max) {
    if (p_max < 0) throw input_error("graded_dims: p_max must be nonnegative");
    const ExactSequenceData& esd = en.exact_sequence();
    const SignedRayPairing& pairing = en.pairing();
    auto relations = detail::relation_shifts(esd, pairing, scheme);

    GradedDims result{scheme, {}};
    result.dims.resize(static_cast<std::size_t>(p_max) + 1);

    std::vector<InvariantMonomial> prev;
    for (int p = 0; p <= p_max; ++p) {
        std::vector<InvariantMonomial> monos = en.of_degree(scheme, p);

        std::map<std::vector<Int>, detail::RankBlock> blocks;
        for (const auto& m : monos) {
            auto key = balance_vector(pairing, scheme, m.s_exp, m.t_exp);
            auto& block = blocks[key];
            block.col_index.emplace(std::make_pair(m.s_exp, m.t_exp), block.col_index.size());
        }

        for (const auto& m : prev) {
            auto key = balance_vector(pairing, scheme, m.s_exp, m.t_exp);
            auto it = blocks.find(key);
            if (it == blocks.end())
                throw precondition_error("relation row landed outside the enumerated block");
            detail::RankBlock& block = it->second;
            for (const auto& rel : relations) {
                std::vector<Rat> row(block.col_index.size(), Rat(0));
                bool any = false;
                for (const auto& term : rel.terms) {
                    std::pair<std::vector<int>, std::vector<int>> shifted(m.s_exp, m.t_exp);
                    for (std::size_t r = 0; r < shifted.first.size(); ++r) {
                        shifted.first[r] += term.ds[r];
                        shifted.second[r] += term.dt[r];
                    }
                    auto cit = block.col_index.find(shifted);
                    if (cit == block.col_index.end())
                        throw precondition_error("relation term missing from monomial basis");
                    row[cit->second] += term.coeff;
                    any = true;
                }
                if (any) block.add_row(std::move(row));
            }
        }

        long long dim = static_cast<long long>(monos.size());
        for (const auto& [key, block] : blocks) dim -= static_cast<long long>(block.rank());
        result.dims[static_cast<std::size_t>(p)] = dim;
        prev = std::move(monos);
    }
    return result;
}

inline GradedDims graded_dims(const Fan& fan, PresentationKind scheme, int p_max) {
    ExactSequenceData esd = build_exact_sequence(fan);
    SignedRayPairing pairing = select_sigma1(fan);
    MonomialEnumerator en(std::move(esd), std::move(pairing));
    return graded_dims(en, scheme, p_max);
}

struct AgreementReport {
    std::vector<long long> dims_r;
    std::vector<long long> dims_rprime;
    bool agree = false;
};

/// The reduced and the moment presentations must produce the same graded
/// dimensions; a mismatch on a valid fan is a bug.
inline AgreementReport presentations_agree(MonomialEnumerator& en, int p_max) {
    AgreementReport rep;
    rep.dims_r = graded_dims(en, PresentationKind::R, p_max).dims;
    rep.dims_rprime = graded_dims(en, PresentationKind::Rprime, p_max).dims;
    rep.agree = rep.dims_r == rep.dims_rprime;
    return rep;
}

inline AgreementReport presentations_agree(const Fan& fan, int p_max) {
    ExactSequenceData esd = build_exact_sequence(fan);
    SignedRayPairing pairing = select_sigma1(fan);
    MonomialEnumerator en(std::move(esd), std::move(pairing));
    return presentations_agree(en, p_max);
}

struct GrowthReport {
    std::vector<long long> dims;
    double exponent_estimate = 0.0;
    double expected_exponent = 0.0;  // 2 dim(X) - 1
    int fit_from = 0;
    int fit_to = 0;
};

/// Least-squares slope of log dims[p] against log p on the upper half of the
/// degree range: a numeric growth diagnostic for the section ring (dimension
/// of its spectrum minus one equals the expected exponent).
inline GrowthReport bigness_growth_report(const Fan& fan, int p_max) {
    if (p_max < 4) throw input_error("bigness_growth_report: p_max must be at least 4");
    GrowthReport rep;
    rep.dims = graded_dims(fan, PresentationKind::R, p_max).dims;
    rep.expected_exponent = 2.0 * static_cast<double>(fan.dim) - 1.0;
    rep.fit_from = p_max / 2;
    rep.fit_to = p_max;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int p = rep.fit_from; p <= rep.fit_to; ++p) {
        double lx = std::log(static_cast<double>(p));
        double ly = std::log(static_cast<double>(rep.dims[static_cast<std::size_t>(p)]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    double denom = count * sxx - sx * sx;
    rep.exponent_estimate = denom == 0 ? 0.0 : (count * sxy - sx * sy) / denom;
    return rep;
}

}  // namespace symtoric
