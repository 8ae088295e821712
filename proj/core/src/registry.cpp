#include <algorithm>
#include <array>
#include <numeric>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <typeinfo>

#include "gl3hc/scalar_product.hpp"
#include "gl3hc/verify.hpp"

namespace gl3hc {

namespace {

using Shape = std::vector<std::size_t>;
using Shapes = std::vector<Shape>;

struct CaseInput {
    Side side;
    Shape shape;
    std::vector<ParameterSet> sets;
    KernelContext ctx;
    int window;
    std::uint64_t seed;

    [[nodiscard]] HCQuery query(const ParameterSet& t, const ParameterSet& x, const ParameterSet& s,
                                const ParameterSet& y) const
    {
        return HCQuery{side, Rep::WS, t, x, s, y, ctx.q()};
    }
    [[nodiscard]] std::size_t at(std::size_t i) const { return shape.at(i); }
};

struct Entry {
    IdentityDescriptor descriptor;
    std::vector<std::string> set_names;
    std::function<Shape(const Shape&)> sizes;
    std::function<Shapes(std::optional<Side>, std::size_t, std::size_t)> shapes;
    std::function<std::vector<IdentityPair>(const CaseInput&)> eval;
};

constexpr std::size_t kMaxExtra = 2; // bound on #z in limits and reductions

Shapes grid(std::size_t a_max, std::size_t b_max, const std::function<bool(std::size_t, std::size_t)>& keep)
{
    Shapes out;
    for (std::size_t a = 0; a <= a_max; ++a) {
        for (std::size_t b = 0; b <= b_max; ++b) {
            if (keep(a, b)) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

Shapes grid_n(std::size_t a_max, std::size_t b_max,
              const std::function<std::size_t(std::size_t, std::size_t)>& n_max)
{
    Shapes out;
    for (std::size_t a = 0; a <= a_max; ++a) {
        for (std::size_t b = 0; b <= b_max; ++b) {
            for (std::size_t n = 0; n <= n_max(a, b); ++n) {
                out.push_back({a, b, n});
            }
        }
    }
    return out;
}

Shapes sizes_upto(std::size_t lo, std::size_t hi)
{
    Shapes out;
    for (std::size_t n = lo; n <= hi; ++n) {
        out.push_back({n});
    }
    return out;
}

auto any_ab = [](std::size_t, std::size_t) { return true; };

std::vector<IdentityPair> one_pair(IdentityPair p) { return {std::move(p)}; }

// a, b, and the t, x, s, y sets sized (a, a, b, b).
Shape tx_sy(const Shape& sh) { return {sh[0], sh[0], sh[1], sh[1]}; }

const std::vector<std::string> kTXSY = {"t", "x", "s", "y"};

std::vector<Entry> build_entries()
{
    std::vector<Entry> e;
    auto izergin_n = [](std::size_t lo) {
        return [lo](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
            return sizes_upto(lo, std::max(a_max, b_max));
        };
    };
    auto ab_shapes = [](std::function<bool(std::size_t, std::size_t)> keep) {
        return [keep](std::optional<Side>, std::size_t a_max, std::size_t b_max) { return grid(a_max, b_max, keep); };
    };

    // ---- izergin -------------------------------------------------------------
    e.push_back({{"K_INIT", "izergin", true, "(1)", "K^(l,r)_1(x|y) equals x g(x,y) or y g(x,y)"},
                 {"x", "y"},
                 [](const Shape&) { return Shape{1, 1}; },
                 [](std::optional<Side>, std::size_t, std::size_t) { return Shapes{{1}}; },
                 [](const CaseInput& in) {
                     return one_pair(k_init_pair(in.ctx, in.side, in.sets[0][0], in.sets[1][0]));
                 }});
    e.push_back({{"K_SCAL", "izergin", true, "(n)", "K^(l,r) is invariant under a common rescaling"},
                 {"x", "y", "alpha"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0], 1}; },
                 izergin_n(0),
                 [](const CaseInput& in) {
                     return one_pair(k_scal_pair(in.ctx, in.side, in.sets[0], in.sets[1], in.sets[2][0]));
                 }});
    e.push_back({{"K_RED", "izergin", true, "(n)", "K^(l,r)_{n+1} with a q^2-shifted pair reduces to K_n"},
                 {"x", "y", "z"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0], 1}; },
                 izergin_n(0),
                 [](const CaseInput& in) { return k_red_pairs(in.ctx, in.side, in.sets[0], in.sets[1], in.sets[2][0]); }});
    e.push_back({{"K_INVERS", "izergin", true, "(n)", "K^(l,r)(q^-2 x|y) in terms of K^(r,l)(y|x)"},
                 {"x", "y"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0]}; },
                 izergin_n(0),
                 [](const CaseInput& in) { return one_pair(k_invers_pair(in.ctx, in.side, in.sets[0], in.sets[1])); }});
    e.push_back({{"K_INVERS1", "izergin", true, "(n)", "q -> 1/q exchanges K^(l)(x|y) and K^(r)(y|x)"},
                 {"x", "y"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0]}; },
                 izergin_n(0),
                 [](const CaseInput& in) { return one_pair(k_invers1_pair(in.ctx, in.side, in.sets[0], in.sets[1])); }});
    e.push_back({{"K_RES", "izergin", true, "(n)", "simple pole of K^(l,r)_{n+1} at y_{n+1} = x_{n+1}"},
                 {"x", "y", "z"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0], 1}; },
                 [](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                     const std::size_t hi = std::max(a_max, b_max);
                     return sizes_upto(0, hi == 0 ? 0 : hi - 1);
                 },
                 [](const CaseInput& in) {
                     return one_pair(k_res_pair(in.ctx, in.side, in.sets[0], in.sets[1], in.sets[2][0], in.window));
                 }});
    e.push_back({{"K_INF", "izergin", true, "(n)", "decay and boundedness of K^(l,r) at infinity"},
                 {"x", "y"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0]}; },
                 izergin_n(1),
                 [](const CaseInput& in) { return k_inf_pairs(in.ctx, in.side, in.sets[0], in.sets[1], in.window); }});
    e.push_back({{"LEMMA_SUM", "izergin", true, "(m1, m2)", "partition sum of two Izergin determinants, both closed forms"},
                 {"gamma", "alpha", "beta"},
                 [](const Shape& sh) { return Shape{sh[0] + sh[1], sh[0], sh[1]}; },
                 [](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                     const std::size_t hi = std::max(a_max, b_max);
                     Shapes out;
                     for (std::size_t m1 = 0; m1 <= hi; ++m1) {
                         for (std::size_t m2 = 0; m1 + m2 <= hi; ++m2) {
                             out.push_back({m1, m2});
                         }
                     }
                     return out;
                 },
                 [](const CaseInput& in) { return lemma_pairs(in.ctx, in.side, in.sets[0], in.sets[1], in.sets[2]); }});
    e.push_back({{"MULT_POLE", "izergin", true, "(n, m)", "multiple pole limit of K^(l,r)_{n+m}"},
                 {"x", "y", "z"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0], sh[1]}; },
                 [](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                     const std::size_t hi = std::max(a_max, b_max);
                     Shapes out;
                     for (std::size_t n = 0; n <= hi; ++n) {
                         for (std::size_t m = 0; m <= std::min(kMaxExtra, hi); ++m) {
                             out.push_back({n, m});
                         }
                     }
                     return out;
                 },
                 [](const CaseInput& in) {
                     return one_pair(mult_pole_pair(in.ctx, in.side, in.sets[0], in.sets[1], in.sets[2], in.window));
                 }});

    // ---- hc-reps -------------------------------------------------------------
    e.push_back({{"HC_REP_AGREE", "hc-reps", true, "(a, b)", "all six representations of Z^(l,r)_{a,b} agree"},
                 kTXSY,
                 tx_sy,
                 ab_shapes(any_ab),
                 [](const CaseInput& in) {
                     const auto& [t, x, s, y] = std::tie(in.sets[0], in.sets[1], in.sets[2], in.sets[3]);
                     const Rational ws = highest_coefficient(in.ctx, in.side, Rep::WS, t, x, s, y);
                     std::vector<IdentityPair> out;
                     for (auto rep : kAllReps) {
                         if (rep != Rep::WS) {
                             out.push_back({ws, highest_coefficient(in.ctx, in.side, rep, t, x, s, y)});
                         }
                     }
                     if (t.size() == 1 && s.size() == 1) {
                         out.push_back({ws, z11_closed_form(in.ctx, in.side, t[0], x[0], s[0], y[0])});
                     }
                     return out;
                 }});
    e.push_back({{"DIFF_11", "hc-reps", false, "(1, 1)", "(ts)^-1 Z^(r)_{1,1} - (xy)^-1 Z^(l)_{1,1}"},
                 kTXSY,
                 tx_sy,
                 [](std::optional<Side>, std::size_t, std::size_t) { return Shapes{{1, 1}}; },
                 [](const CaseInput& in) {
                     std::vector<IdentityPair> out;
                     for (auto rep : kAllReps) {
                         out.push_back(diff_11_pair(in.ctx, rep, in.sets[0][0], in.sets[1][0], in.sets[2][0],
                                                    in.sets[3][0]));
                     }
                     return out;
                 }});

    // ---- symmetries ----------------------------------------------------------
    e.push_back({{"HC_SYM_PERM", "symmetries", true, "(a, b)", "Z is symmetric within each of t, x, s, y"},
                 kTXSY,
                 tx_sy,
                 ab_shapes(any_ab),
                 [](const CaseInput& in) {
                     std::mt19937_64 rng(in.seed ^ 0x9e3779b97f4a7c15ULL);
                     std::array<std::vector<std::size_t>, 4> perms;
                     for (std::size_t i = 0; i < 4; ++i) {
                         perms[i].resize(in.sets[i].size());
                         std::iota(perms[i].begin(), perms[i].end(), std::size_t{0});
                         std::shuffle(perms[i].begin(), perms[i].end(), rng);
                     }
                     return one_pair(hc_permutation_pair(in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]), perms));
                 }});
    e.push_back({{"Z_TRIV", "symmetries", true, "(a, b), a = 0 or b = 0", "boundary values Z_{a,0}, Z_{0,b}, Z_{0,0}"},
                 kTXSY,
                 tx_sy,
                 ab_shapes([](std::size_t a, std::size_t b) { return a == 0 || b == 0; }),
                 [](const CaseInput& in) {
                     return one_pair(hc_triv_pair(in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3])));
                 }});
    auto symmetry = [&](const char* id, SymmetryVariant v, const char* summary) {
        const bool scal = v == SymmetryVariant::Z_SCAL;
        e.push_back({{id, "symmetries", true, "(a, b)", summary},
                     scal ? std::vector<std::string>{"t", "x", "s", "y", "alpha"} : kTXSY,
                     [scal](const Shape& sh) {
                         Shape out = tx_sy(sh);
                         if (scal) {
                             out.push_back(1);
                         }
                         return out;
                     },
                     ab_shapes(any_ab),
                     [v, scal](const CaseInput& in) {
                         const Rational alpha = scal ? in.sets[4][0] : Rational(1);
                         return one_pair(
                             hc_symmetry_check(v, in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]), alpha));
                     }});
    };
    symmetry("Z_SCAL", SymmetryVariant::Z_SCAL, "Z is invariant under a common rescaling");
    symmetry("Z_INVERS", SymmetryVariant::Z_INVERS, "Z_{b,a}(s;y|q^-2 t;q^-2 x) in terms of Z_{a,b}(t;x|s;y)");
    symmetry("Z_INVERS1", SymmetryVariant::Z_INVERS1, "q -> 1/q exchanges Z^(l) and Z^(r) with reordered arguments");
    e.push_back({{"Z_INF", "symmetries", true, "(a, b), a + b >= 1", "valuations of Z as one argument goes to infinity"},
                 kTXSY,
                 tx_sy,
                 ab_shapes([](std::size_t a, std::size_t b) { return a + b >= 1; }),
                 [](const CaseInput& in) {
                     return hc_inf_pairs(in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]), in.window);
                 }});
    e.push_back({{"Z_ZERO_VANISH", "symmetries", true, "(a, b), b >= 1 (l) or a >= 1 (r)",
                  "Z^(l) vanishes at y_j = 0, Z^(r) at t_i = 0"},
                 kTXSY,
                 tx_sy,
                 [](std::optional<Side> side, std::size_t a_max, std::size_t b_max) {
                     const bool left = !side || *side == Side::Left;
                     return grid(a_max, b_max, [left](std::size_t a, std::size_t b) { return left ? b >= 1 : a >= 1; });
                 },
                 [](const CaseInput& in) {
                     return one_pair(hc_zero_vanish_pair(in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3])));
                 }});

    // ---- residues ------------------------------------------------------------
    auto residue = [&](const char* id, ResidueVariant v, std::function<bool(std::size_t, std::size_t)> keep,
                       const char* doc, const char* summary) {
        e.push_back({{id, "residues", true, doc, summary},
                     kTXSY,
                     tx_sy,
                     ab_shapes(std::move(keep)),
                     [v](const CaseInput& in) {
                         return one_pair(
                             hc_residue_pair(v, in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]), in.window));
                     }});
    };
    residue("REC_Z_TRIV1", ResidueVariant::S_TO_Y, [](std::size_t, std::size_t b) { return b >= 1; },
            "(a, b), b >= 1", "simple pole of Z at s_b = y_b");
    residue("REC_Z_TRIV2", ResidueVariant::T_TO_X, [](std::size_t a, std::size_t) { return a >= 1; },
            "(a, b), a >= 1", "simple pole of Z at t_a = x_a");
    residue("REC_Z_NONTRIV", ResidueVariant::S_TO_T, [](std::size_t a, std::size_t b) { return a >= 1 && b >= 1; },
            "(a, b), a, b >= 1", "simple pole of Z at s_b = t_a");
    residue("REC_Z_NONTRIV_D", ResidueVariant::Y_TO_X, [](std::size_t a, std::size_t b) { return a >= 1 && b >= 1; },
            "(a, b), a, b >= 1", "simple pole of Z at y_b = x_a");

    auto multiple = [&](const char* id, MultipleLimitVariant v, const char* doc, const char* summary) {
        const bool red = v == MultipleLimitVariant::RED1 || v == MultipleLimitVariant::RED2;
        e.push_back({{id, "residues", true, doc, summary},
                     {"t", "x", "s", "y", "z"},
                     [v](const Shape& sh) {
                         const std::size_t a = sh[0];
                         const std::size_t b = sh[1];
                         const std::size_t n = sh[2];
                         switch (v) {
                         case MultipleLimitVariant::NONTRIV2: return Shape{a - n, a, b - n, b, n};
                         case MultipleLimitVariant::NONTRIV22: return Shape{a, a - n, b, b - n, n};
                         default: return Shape{a, a, b, b, n};
                         }
                     },
                     [red](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                         return grid_n(a_max, b_max, [red, a_max, b_max](std::size_t a, std::size_t b) {
                             return red ? std::min(kMaxExtra, std::max(a_max, b_max)) : std::min({kMaxExtra, a, b});
                         });
                     },
                     [v](const CaseInput& in) {
                         return one_pair(hc_multiple_limit_pair(
                             v, in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]), in.sets[4], in.window));
                     }});
    };
    multiple("RED1", MultipleLimitVariant::RED1, "(a, b, n)", "multiple limit t_j -> x_j of Z_{a+n,b}");
    multiple("RED2", MultipleLimitVariant::RED2, "(a, b, n)", "multiple limit y_j -> s_j of Z_{a,b+n}");
    multiple("NONTRIV2", MultipleLimitVariant::NONTRIV2, "(a, b, n), n <= min(a, b)",
             "multiple limit between t and s of Z_{a,b}");
    multiple("NONTRIV22", MultipleLimitVariant::NONTRIV22, "(a, b, n), n <= min(a, b)",
             "multiple limit between x and y of Z_{a,b}");

    // ---- reductions ----------------------------------------------------------
    auto dec = [&](const char* id, ReductionVariant v, const char* summary) {
        e.push_back({{id, "reductions", true, "(a, b, n), n <= min(a, b)", summary},
                     {"t", "x", "s", "y", "z"},
                     [v](const Shape& sh) {
                         const std::size_t a = sh[0];
                         const std::size_t b = sh[1];
                         const std::size_t n = sh[2];
                         return v == ReductionVariant::DEC2 ? Shape{a - n, a, b - n, b, n} : Shape{a, a - n, b, b - n, n};
                     },
                     [](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                         return grid_n(a_max, b_max,
                                       [](std::size_t a, std::size_t b) { return std::min({kMaxExtra, a, b}); });
                     },
                     [v](const CaseInput& in) {
                         return one_pair(hc_reduction_pair(v, in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]),
                                                           in.sets[4]));
                     }});
    };
    dec("DEC1", ReductionVariant::DEC1, "Z(t;{x,z}|s;{y,q^-2 z}) as a sum over partitions of t");
    dec("DEC2", ReductionVariant::DEC2, "Z({t,q^2 z};x|{s,z};y) as a sum over partitions of y");
    e.push_back({{"DEC1_PC", "reductions", true, "(a, b), a <= b", "Z(t;z|s;{y,q^-2 z}) as a product of two K"},
                 {"t", "s", "y", "z"},
                 [](const Shape& sh) { return Shape{sh[0], sh[1], sh[1] - sh[0], sh[0]}; },
                 ab_shapes([](std::size_t a, std::size_t b) { return a <= b; }),
                 [](const CaseInput& in) {
                     return one_pair(hc_reduction_pair(ReductionVariant::DEC1_PC,
                                                       in.query(in.sets[0], {}, in.sets[1], in.sets[2]), in.sets[3]));
                 }});
    e.push_back({{"DEC2_PC", "reductions", true, "(a, b), b <= a", "Z({t,q^2 z};x|z;y) as a product of two K"},
                 {"t", "x", "y", "z"},
                 [](const Shape& sh) { return Shape{sh[0] - sh[1], sh[0], sh[1], sh[1]}; },
                 ab_shapes([](std::size_t a, std::size_t b) { return b <= a; }),
                 [](const CaseInput& in) {
                     return one_pair(hc_reduction_pair(ReductionVariant::DEC2_PC,
                                                       in.query(in.sets[0], in.sets[1], {}, in.sets[2]), in.sets[3]));
                 }});

    // ---- twins ---------------------------------------------------------------
    for (int variant = 1; variant <= 4; ++variant) {
        const bool a_ge_b = variant <= 2;
        const std::string id = "TWIN_" + std::to_string(variant);
        e.push_back({{id, "twins", true, a_ge_b ? "(a, b), a >= b" : "(a, b), a <= b",
                      "partition sum of three K reducible to one Z"},
                     a_ge_b ? std::vector<std::string>{"t", "s", "y", "xi"} : std::vector<std::string>{"t", "x", "y", "xi"},
                     [a_ge_b](const Shape& sh) {
                         const std::size_t a = sh[0];
                         const std::size_t b = sh[1];
                         return a_ge_b ? Shape{a, b, b, a - b} : Shape{a, a, b, b - a};
                     },
                     ab_shapes([a_ge_b](std::size_t a, std::size_t b) { return a_ge_b ? a >= b : a <= b; }),
                     [variant, a_ge_b](const CaseInput& in) {
                         const HCQuery core = a_ge_b ? in.query(in.sets[0], {}, in.sets[1], in.sets[2])
                                                     : in.query(in.sets[0], in.sets[1], {}, in.sets[2]);
                         return one_pair(hc_twin_sum_pair(variant, core, in.sets[3]));
                     }});
    }

    // ---- prop51 --------------------------------------------------------------
    e.push_back({{"PROP_5_1", "prop51", true, "(a, b, p, n), p <= b",
                  "f(xi,y) Z(t;x|s;{y,w}) as a double partition sum, xi = {q^-2 x, q^-2 z}"},
                 {"t", "x", "s", "y", "w", "z"},
                 [](const Shape& sh) { return Shape{sh[0], sh[0], sh[1], sh[2], sh[1] - sh[2], sh[3]}; },
                 [](std::optional<Side>, std::size_t a_max, std::size_t b_max) {
                     Shapes out;
                     for (std::size_t a = 0; a <= a_max; ++a) {
                         for (std::size_t b = 0; b <= b_max; ++b) {
                             for (std::size_t p = 0; p <= b; ++p) {
                                 for (std::size_t n = 0; n <= kMaxExtra; ++n) {
                                     out.push_back({a, b, p, n});
                                 }
                             }
                         }
                     }
                     return out;
                 },
                 [](const CaseInput& in) {
                     return one_pair(hc_prop51_pair(in.query(in.sets[0], in.sets[1], in.sets[2], in.sets[3]),
                                                    in.sets[4], in.sets[5]));
                 }});

    // ---- scalar --------------------------------------------------------------
    const std::vector<std::string> scalar_names = {"uC", "vC", "uB", "vB"};
    auto scalar_sizes = [](const Shape& sh) { return Shape{sh[0], sh[1], sh[0], sh[1]}; };
    auto scalar_sets = [](const CaseInput& in) { return ScalarSets{in.sets[0], in.sets[1], in.sets[2], in.sets[3]}; };
    e.push_back({{"W_CORNER_L", "scalar", false, "(a, b)", "W_part at k = 0, n = b is Z^(l)(uC;uB|vC;vB)"},
                 scalar_names,
                 scalar_sizes,
                 ab_shapes(any_ab),
                 [scalar_sets](const CaseInput& in) {
                     const auto s = scalar_sets(in);
                     return one_pair({w_part(in.ctx, s.uc, s.ub, {}, {}, s.vc, s.vb, {}, {}),
                                      highest_coefficient(in.ctx, Side::Left, Rep::WS, s.uc, s.ub, s.vc, s.vb)});
                 }});
    e.push_back({{"W_CORNER_R", "scalar", false, "(a, b)", "W_part at k = a, n = 0 is Z^(r)(uB;uC|vB;vC)"},
                 scalar_names,
                 scalar_sizes,
                 ab_shapes(any_ab),
                 [scalar_sets](const CaseInput& in) {
                     const auto s = scalar_sets(in);
                     return one_pair({w_part(in.ctx, {}, {}, s.uc, s.ub, {}, {}, s.vc, s.vb),
                                      highest_coefficient(in.ctx, Side::Right, Rep::WS, s.ub, s.uc, s.vb, s.vc)});
                 }});
    e.push_back({{"SCAL_RES1", "scalar", false, "(a, b)", "coefficient of r1(uB) r3(vC) carries Z^(r)"},
                 scalar_names,
                 scalar_sizes,
                 ab_shapes(any_ab),
                 [scalar_sets](const CaseInput& in) {
                     const auto s = scalar_sets(in);
                     const auto poly = scalar_product_symbolic(in.ctx, s);
                     const Rational norm = f_prod(in.ctx, s.vc, s.uc) * f_prod(in.ctx, s.vb, s.ub);
                     return one_pair({poly.coefficient(right_corner_monomial(s.uc.size(), s.vc.size())),
                                      z_right_extraction_form(in.ctx, s) / norm});
                 }});
    e.push_back({{"SCAL_RES2", "scalar", false, "(a, b)", "coefficient of r1(uC) r3(vB) carries Z^(l)"},
                 scalar_names,
                 scalar_sizes,
                 ab_shapes(any_ab),
                 [scalar_sets](const CaseInput& in) {
                     const auto s = scalar_sets(in);
                     const auto poly = scalar_product_symbolic(in.ctx, s);
                     const Rational norm = f_prod(in.ctx, s.vc, s.uc) * f_prod(in.ctx, s.vb, s.ub);
                     return one_pair({poly.coefficient(left_corner_monomial(s.uc.size(), s.vc.size())),
                                      z_left_extraction_form(in.ctx, s) / norm});
                 }});
    e.push_back({{"SCAL_MULTILINEAR", "scalar", false, "(a, b)", "monomial count and multilinearity of the expansion"},
                 scalar_names,
                 scalar_sizes,
                 ab_shapes(any_ab),
                 [scalar_sets](const CaseInput& in) {
                     const auto s = scalar_sets(in);
                     const auto poly = scalar_product_symbolic(in.ctx, s);
                     const auto expected = expected_monomial_count(s.uc.size(), s.vc.size());
                     return std::vector<IdentityPair>{
                         {Rational(static_cast<long>(poly.size())), Rational(static_cast<long>(expected))},
                         {Rational(poly.is_multilinear() ? 1 : 0), Rational(1)},
                     };
                 }});
    return e;
}

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = build_entries();
    return table;
}

const Entry& find_entry(std::string_view id)
{
    for (const auto& entry : entries()) {
        if (entry.descriptor.id == id) {
            return entry;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

std::string describe(const std::exception& ex)
{
    const char* kind = "error";
    if (dynamic_cast<const PoleError*>(&ex) != nullptr) {
        kind = "pole";
    } else if (dynamic_cast<const TruncationError*>(&ex) != nullptr) {
        kind = "truncation";
    } else if (dynamic_cast<const SingularLimitError*>(&ex) != nullptr) {
        kind = "singular-limit";
    } else if (dynamic_cast<const CardinalityError*>(&ex) != nullptr) {
        kind = "cardinality";
    } else if (dynamic_cast<const SamplerExhausted*>(&ex) != nullptr) {
        kind = "sampler";
    }
    return std::string(kind) + ": " + ex.what();
}

} // namespace

const std::vector<IdentityDescriptor>& registry()
{
    static const std::vector<IdentityDescriptor> list = [] {
        std::vector<IdentityDescriptor> out;
        for (const auto& entry : entries()) {
            out.push_back(entry.descriptor);
        }
        return out;
    }();
    return list;
}

const IdentityDescriptor& find_identity(std::string_view id)
{
    return find_entry(id).descriptor;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"all",       "izergin",    "hc-reps", "symmetries", "residues",
                                                   "reductions", "twins",      "prop51",  "scalar"};
    return names;
}

bool is_suite(std::string_view name)
{
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::vector<std::size_t>> shapes_for(std::string_view id, std::optional<Side> side, std::size_t a_max,
                                                 std::size_t b_max)
{
    return find_entry(id).shapes(side, a_max, b_max);
}

CaseResult run_case(std::string_view id, std::optional<Side> side, const std::vector<std::size_t>& shape,
                    std::uint64_t case_seed_value, const Config& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    CaseResult result;
    result.identity_id = std::string(id);
    result.side = side;
    result.shape = shape;
    result.seed = case_seed_value;
    try {
        const Entry& entry = find_entry(id);
        if (entry.descriptor.sided && !side) {
            throw std::invalid_argument(std::string(id) + " needs a side");
        }
        Config local = cfg;
        local.seed = case_seed_value;
        const Shape sizes = entry.sizes(shape);
        Sample sample = sample_generic(sizes, local);
        result.q = sample.q;
        for (std::size_t i = 0; i < sample.sets.size(); ++i) {
            result.params.emplace_back(entry.set_names.at(i), sample.sets[i]);
        }
        const CaseInput input{side.value_or(Side::Left), shape,          std::move(sample.sets),
                              KernelContext(sample.q),  cfg.laurent_window, case_seed_value};
        const auto pairs = entry.eval(input);
        result.checks = pairs.size();
        result.equal = true;
        for (const auto& p : pairs) {
            if (!p.equal()) {
                result.equal = false;
                result.lhs = p.lhs;
                result.rhs = p.rhs;
                break;
            }
        }
        if (result.equal && !pairs.empty()) {
            result.lhs = pairs.front().lhs;
            result.rhs = pairs.front().rhs;
        }
        if (pairs.empty()) {
            result.error = "error: identity produced no comparison for this shape";
            result.equal = false;
        }
    } catch (const std::exception& ex) {
        result.error = describe(ex);
        result.equal = false;
    }
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    return result;
}

std::vector<CaseKey> plan_identity(std::string_view id, std::size_t a_max, std::size_t b_max, std::size_t trials)
{
    const Entry& entry = find_entry(id);
    std::vector<CaseKey> keys;
    const std::vector<std::optional<Side>> sides = entry.descriptor.sided
        ? std::vector<std::optional<Side>>{Side::Left, Side::Right}
        : std::vector<std::optional<Side>>{std::nullopt};
    for (const auto& side : sides) {
        for (const auto& shape : entry.shapes(side, a_max, b_max)) {
            for (std::size_t trial = 0; trial < trials; ++trial) {
                keys.push_back({entry.descriptor.id, side, shape, trial});
            }
        }
    }
    return keys;
}

std::vector<CaseKey> plan_suite(const SuiteOptions& options)
{
    if (!is_suite(options.suite)) {
        throw std::invalid_argument("unknown suite '" + options.suite + "'");
    }
    std::vector<CaseKey> keys;
    for (const auto& d : registry()) {
        if (options.suite == "all" || options.suite == d.suite) {
            auto part = plan_identity(d.id, options.a_max, options.b_max, options.trials);
            keys.insert(keys.end(), part.begin(), part.end());
        }
    }
    return keys;
}

} // namespace gl3hc
