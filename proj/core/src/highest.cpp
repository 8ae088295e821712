#include "gl3hc/highest.hpp"

#include <string>
#include <tuple>

#include "gl3hc/partitions.hpp"

namespace gl3hc {

namespace {

using LS = LaurentSeries;

template <class S>
struct Kernel {
    const KernelContext& ctx;
    Side side;

    [[nodiscard]] S K(const Set<S>& x, const Set<S>& y) const { return izergin_side(ctx, side, x, y); }
    [[nodiscard]] S Kopp(const Set<S>& x, const Set<S>& y) const { return izergin_side(ctx, opposite(side), x, y); }
    [[nodiscard]] S F(const Set<S>& u, const Set<S>& v) const { return f_prod(ctx, u, v); }
    [[nodiscard]] Set<S> shift(const Set<S>& v, int k) const { return qshift(v, k, ctx.q()); }
    /// (-q)^{sign * e}: upper sign for the left side.
    [[nodiscard]] S mq(int e) const { return S(ctx.minus_q_pow(side_sign(side) * e)); }
};

template <class S>
S rep_ws(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    const int b = static_cast<int>(s.size());
    S sum(0);
    for_each_split(join(s, x), s.size(), [&](const Set<S>& wi, const Set<S>& wii) {
        sum += k.Kopp(s, k.shift(wi, 2)) * k.K(wii, t) * k.K(y, wi) * k.F(wi, wii);
    });
    return k.mq(-b) * sum;
}

template <class S>
S rep_ws_twin(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    const int a = static_cast<int>(t.size());
    S sum(0);
    const Set<S> x2 = k.shift(x, 2);
    for_each_split(join(s, x), s.size(), [&](const Set<S>& wi, const Set<S>& wii) {
        sum += k.Kopp(wii, x2) * k.K(wii, t) * k.K(y, wi) * k.F(wi, wii);
    });
    return k.mq(-a) * sum;
}

template <class S>
S rep_ty(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    const int a = static_cast<int>(t.size());
    const Set<S> tm = k.shift(t, -2);
    const Set<S> xm = k.shift(x, -2);
    S sum(0);
    for_each_split(join(y, tm), t.size(), [&](const Set<S>& ei, const Set<S>& eii) {
        sum += k.Kopp(tm, k.shift(ei, 2)) * k.K(xm, ei) * k.K(eii, s) * k.F(ei, eii);
    });
    return k.mq(-a) * k.F(y, x) * k.F(s, t) * sum;
}

template <class S>
S rep_ty_twin(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    const int b = static_cast<int>(s.size());
    const Set<S> tm = k.shift(t, -2);
    const Set<S> xm = k.shift(x, -2);
    const Set<S> y2 = k.shift(y, 2);
    S sum(0);
    for_each_split(join(y, tm), t.size(), [&](const Set<S>& ei, const Set<S>& eii) {
        sum += k.Kopp(eii, y2) * k.K(xm, ei) * k.K(eii, s) * k.F(ei, eii);
    });
    return k.mq(-b) * k.F(y, x) * k.F(s, t) * sum;
}

template <class S>
S rep_tx(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    S sum(0);
    for (std::size_t n = 0; n <= t.size(); ++n) {
        const S sign = k.mq(static_cast<int>(n));
        for_each_split(t, n, [&](const Set<S>& ti, const Set<S>& tii) {
            const S t_part = k.F(s, ti) * k.F(ti, tii);
            const Set<S> tii_m = k.shift(tii, -2);
            const Set<S> y_ti = join(y, k.shift(ti, -2));
            for_each_split(x, n, [&](const Set<S>& xi, const Set<S>& xii) {
                sum += sign * t_part * k.F(y, xii) * k.F(xii, xi) * k.K(xi, ti) * k.K(xii, tii_m)
                     * k.K(y_ti, join(s, xi));
            });
        });
    }
    return sum;
}

template <class S>
S rep_sy(const Kernel<S>& k, const Set<S>& t, const Set<S>& x, const Set<S>& s, const Set<S>& y)
{
    S sum(0);
    for (std::size_t n = 0; n <= s.size(); ++n) {
        const S sign = k.mq(static_cast<int>(n));
        for_each_split(s, n, [&](const Set<S>& si, const Set<S>& sii) {
            const S s_part = k.F(sii, t) * k.F(si, sii);
            const Set<S> sii_m = k.shift(sii, -2);
            const Set<S> si_x = join(si, x);
            for_each_split(y, n, [&](const Set<S>& yi, const Set<S>& yii) {
                sum += sign * s_part * k.F(yi, x) * k.F(yii, yi) * k.K(yi, si) * k.K(yii, sii_m)
                     * k.K(si_x, join(k.shift(yi, 2), t));
            });
        });
    }
    return sum;
}

KernelContext context_of(const HCQuery& query) { return KernelContext(query.q); }

Rational z_of(const KernelContext& ctx, const HCQuery& query, const ParameterSet& t, const ParameterSet& x,
              const ParameterSet& s, const ParameterSet& y)
{
    return highest_coefficient(ctx, query.side, query.rep, t, x, s, y);
}

LS z_series(const KernelContext& ctx, const HCQuery& query, const Set<LS>& t, const Set<LS>& x, const Set<LS>& s,
            const Set<LS>& y)
{
    return highest_coefficient(ctx, query.side, query.rep, t, x, s, y);
}

void require_size(const ParameterSet& set, std::size_t n, const char* what)
{
    if (set.size() != n) {
        throw CardinalityError(std::string(what) + ": expected " + std::to_string(n) + " elements, got "
                               + std::to_string(set.size()));
    }
}

// The set without its last element.
ParameterSet drop_last(const ParameterSet& set)
{
    return ParameterSet(set.begin(), set.end() - 1);
}

ParameterSet one(const Rational& v) { return ParameterSet{v}; }

Set<LS> lifted(const ParameterSet& set) { return lift<LS>(set); }

// The set with its last element replaced by a Laurent value.
Set<LS> with_last(const ParameterSet& set, const LS& value)
{
    Set<LS> out = lift<LS>(set);
    out.back() = value;
    return out;
}

} // namespace

std::string_view rep_name(Rep rep)
{
    switch (rep) {
    case Rep::WS: return "ws";
    case Rep::WS_TWIN: return "ws-twin";
    case Rep::TY: return "ty";
    case Rep::TY_TWIN: return "ty-twin";
    case Rep::TX: return "tx";
    case Rep::SY: return "sy";
    }
    return "?";
}

Rep parse_rep(std::string_view text)
{
    for (auto rep : kAllReps) {
        if (rep_name(rep) == text) {
            return rep;
        }
    }
    throw ParseError("unknown representation '" + std::string(text) + "'");
}

template <class S>
S highest_coefficient(const KernelContext& ctx, Side side, Rep rep, const Set<S>& t, const Set<S>& x,
                      const Set<S>& s, const Set<S>& y)
{
    if (t.size() != x.size() || s.size() != y.size()) {
        throw CardinalityError("highest coefficient needs #t = #x and #s = #y");
    }
    const Kernel<S> k{ctx, side};
    switch (rep) {
    case Rep::WS: return rep_ws(k, t, x, s, y);
    case Rep::WS_TWIN: return rep_ws_twin(k, t, x, s, y);
    case Rep::TY: return rep_ty(k, t, x, s, y);
    case Rep::TY_TWIN: return rep_ty_twin(k, t, x, s, y);
    case Rep::TX: return rep_tx(k, t, x, s, y);
    case Rep::SY: return rep_sy(k, t, x, s, y);
    }
    throw std::invalid_argument("bad representation");
}

template Rational highest_coefficient<Rational>(const KernelContext&, Side, Rep, const Set<Rational>&,
                                                const Set<Rational>&, const Set<Rational>&, const Set<Rational>&);
template LS highest_coefficient<LS>(const KernelContext&, Side, Rep, const Set<LS>&, const Set<LS>&, const Set<LS>&,
                                    const Set<LS>&);

Rational hc(const HCQuery& query)
{
    const auto ctx = context_of(query);
    return z_of(ctx, query, query.t, query.x, query.s, query.y);
}

Rational z11_closed_form(const KernelContext& ctx, Side side, const Rational& t, const Rational& x,
                         const Rational& s, const Rational& y)
{
    const Rational first = g(ctx, x, t) * g(ctx, y, s) * f(ctx, s, x);
    const Rational second = g(ctx, x, s) * g(ctx, s, t) * g(ctx, y, x);
    if (side == Side::Left) {
        return x * y * first + x * y * s * second;
    }
    return t * s * first + t * s * x * second;
}

Rational hc_difference_11(const KernelContext& ctx, Rep rep, const Rational& t, const Rational& x,
                          const Rational& s, const Rational& y)
{
    const ParameterSet ts{t};
    const ParameterSet xs{x};
    const ParameterSet ss{s};
    const ParameterSet ys{y};
    return highest_coefficient(ctx, Side::Right, rep, ts, xs, ss, ys) / (t * s)
         - highest_coefficient(ctx, Side::Left, rep, ts, xs, ss, ys) / (x * y);
}

IdentityPair diff_11_pair(const KernelContext& ctx, Rep rep, const Rational& t, const Rational& x,
                          const Rational& s, const Rational& y)
{
    return {hc_difference_11(ctx, rep, t, x, s, y), (ctx.q() - ctx.q_inv()) * g(ctx, s, t) * g(ctx, y, x)};
}

IdentityPair hc_symmetry_check(SymmetryVariant variant, const HCQuery& query, const Rational& alpha)
{
    const auto ctx = context_of(query);
    const auto& [t, x, s, y] = std::tie(query.t, query.x, query.s, query.y);
    switch (variant) {
    case SymmetryVariant::Z_SCAL: {
        if (alpha.is_zero()) {
            throw std::invalid_argument("scaling factor must be nonzero");
        }
        auto scale = [&](const ParameterSet& set) {
            ParameterSet out;
            for (const auto& v : set) {
                out.push_back(alpha * v);
            }
            return out;
        };
        return {z_of(ctx, query, scale(t), scale(x), scale(s), scale(y)), z_of(ctx, query, t, x, s, y)};
    }
    case SymmetryVariant::Z_INVERS:
        return {z_of(ctx, query, s, y, qshift(t, -2, ctx.q()), qshift(x, -2, ctx.q())),
                z_of(ctx, query, t, x, s, y) / (f_prod(ctx, y, x) * f_prod(ctx, s, t))};
    case SymmetryVariant::Z_INVERS1:
        return {highest_coefficient(ctx.inverted(), query.side, query.rep, t, x, s, y),
                highest_coefficient(ctx, opposite(query.side), query.rep, y, s, x, t)};
    }
    throw std::invalid_argument("bad symmetry variant");
}

IdentityPair hc_triv_pair(const HCQuery& query)
{
    const auto ctx = context_of(query);
    const Rational lhs = hc(query);
    if (query.t.empty() && query.s.empty()) {
        return {lhs, Rational(1)};
    }
    if (query.s.empty()) {
        return {lhs, izergin_side(ctx, query.side, query.x, query.t)};
    }
    if (query.t.empty()) {
        return {lhs, izergin_side(ctx, query.side, query.y, query.s)};
    }
    throw CardinalityError("boundary values need a = 0 or b = 0");
}

IdentityPair hc_zero_vanish_pair(const HCQuery& query)
{
    HCQuery zeroed = query;
    auto& target = query.side == Side::Left ? zeroed.y : zeroed.t;
    if (target.empty()) {
        throw CardinalityError(query.side == Side::Left ? "vanishing at y_j = 0 needs b >= 1"
                                                        : "vanishing at t_i = 0 needs a >= 1");
    }
    target.back() = Rational(0);
    return {hc(zeroed), Rational(0)};
}

std::vector<IdentityPair> hc_inf_pairs(const HCQuery& query, int window)
{
    const auto ctx = context_of(query);
    const auto& [t, x, s, y] = std::tie(query.t, query.x, query.s, query.y);
    const LS infinity = LS::monomial(Rational(1), -1, window);
    // Z^(l) decays in t and s and stays bounded in x and y; Z^(r) the reverse.
    const bool left = query.side == Side::Left;
    std::vector<IdentityPair> out;
    if (!t.empty()) {
        const auto zt = z_series(ctx, query, with_last(t, infinity), lifted(x), lifted(s), lifted(y));
        const auto zx = z_series(ctx, query, lifted(t), with_last(x, infinity), lifted(s), lifted(y));
        out.push_back({below_order_weight(zt, left ? 1 : 0), Rational(0)});
        out.push_back({below_order_weight(zx, left ? 0 : 1), Rational(0)});
    }
    if (!s.empty()) {
        const auto zs = z_series(ctx, query, lifted(t), lifted(x), with_last(s, infinity), lifted(y));
        const auto zy = z_series(ctx, query, lifted(t), lifted(x), lifted(s), with_last(y, infinity));
        out.push_back({below_order_weight(zs, left ? 1 : 0), Rational(0)});
        out.push_back({below_order_weight(zy, left ? 0 : 1), Rational(0)});
    }
    return out;
}

IdentityPair hc_permutation_pair(const HCQuery& query, const std::array<std::vector<std::size_t>, 4>& perms)
{
    const auto ctx = context_of(query);
    auto permute = [](const ParameterSet& set, const std::vector<std::size_t>& perm) {
        if (perm.size() != set.size()) {
            throw CardinalityError("permutation size does not match the set");
        }
        ParameterSet out;
        for (auto i : perm) {
            out.push_back(set.at(i));
        }
        if (!pairwise_distinct(out) || out.size() != set.size()) {
            throw std::invalid_argument("not a permutation");
        }
        return out;
    };
    return {z_of(ctx, query, permute(query.t, perms[0]), permute(query.x, perms[1]), permute(query.s, perms[2]),
                 permute(query.y, perms[3])),
            hc(query)};
}

IdentityPair hc_residue_pair(ResidueVariant variant, const HCQuery& query, int window)
{
    const auto ctx = context_of(query);
    const auto& [t, x, s, y] = std::tie(query.t, query.x, query.s, query.y);
    auto rhs_residue = [&](const Rational& from, const LS& to, const Rational& regular) {
        return simple_residue(f(ctx, LS(from), to) * LS(regular));
    };
    switch (variant) {
    case ResidueVariant::S_TO_Y: {
        if (s.empty()) {
            throw CardinalityError("s -> y residue needs b >= 1");
        }
        const Rational& yb = y.back();
        const LS sb = LS::variable(yb, Rational(1), window);
        const auto sr = drop_last(s);
        const auto yr = drop_last(y);
        const auto lhs = z_series(ctx, query, lifted(t), lifted(x), with_last(s, sb), lifted(y));
        const Rational regular = f_prod(ctx, one(yb), sr) * f_prod(ctx, yr, one(yb)) * f_prod(ctx, one(yb), x)
                               * z_of(ctx, query, t, x, sr, yr);
        return {simple_residue(lhs), rhs_residue(yb, sb, regular)};
    }
    case ResidueVariant::T_TO_X: {
        if (t.empty()) {
            throw CardinalityError("t -> x residue needs a >= 1");
        }
        const Rational& xa = x.back();
        const LS ta = LS::variable(xa, Rational(1), window);
        const auto tr = drop_last(t);
        const auto xr = drop_last(x);
        const auto lhs = z_series(ctx, query, with_last(t, ta), lifted(x), lifted(s), lifted(y));
        const Rational regular = f_prod(ctx, one(xa), tr) * f_prod(ctx, xr, one(xa)) * f_prod(ctx, s, one(xa))
                               * z_of(ctx, query, tr, xr, s, y);
        return {simple_residue(lhs), rhs_residue(xa, ta, regular)};
    }
    case ResidueVariant::S_TO_T: {
        if (t.empty() || s.empty()) {
            throw CardinalityError("s -> t residue needs a, b >= 1");
        }
        const Rational& ta = t.back();
        const LS sb = LS::variable(ta, Rational(1), window);
        const auto sr = drop_last(s);
        const auto tr = drop_last(t);
        const auto lhs = z_series(ctx, query, lifted(t), lifted(x), with_last(s, sb), lifted(y));
        Rational sum;
        for (std::size_t p = 0; p < x.size(); ++p) {
            const auto [xp, xr] = complement(x, {p});
            sum += izergin_side(ctx, query.side, xp, one(ta)) * f_prod(ctx, xr, xp)
                 * z_of(ctx, query, tr, xr, join(sr, xp), y);
        }
        // f(s_b, t_a) f(s', s_b): the second factor is regular, evaluate it at s_b = t_a.
        const Rational regular = f_prod(ctx, sr, one(ta)) * f_prod(ctx, one(ta), tr) * sum;
        return {simple_residue(lhs), simple_residue(f(ctx, sb, LS(ta)) * LS(regular))};
    }
    case ResidueVariant::Y_TO_X: {
        if (t.empty() || s.empty()) {
            throw CardinalityError("y -> x residue needs a, b >= 1");
        }
        const Rational& xa = x.back();
        const LS yb = LS::variable(xa, Rational(1), window);
        const auto yr = drop_last(y);
        const auto xr = drop_last(x);
        const auto lhs = z_series(ctx, query, lifted(t), lifted(x), lifted(s), with_last(y, yb));
        Rational sum;
        for (std::size_t p = 0; p < s.size(); ++p) {
            const auto [sp, sr] = complement(s, {p});
            sum += izergin_side(ctx, query.side, one(xa), sp) * f_prod(ctx, sp, sr)
                 * z_of(ctx, query, t, join(xr, sp), sr, yr);
        }
        const Rational regular = f_prod(ctx, yr, one(xa)) * f_prod(ctx, one(xa), xr) * sum;
        return {simple_residue(lhs), simple_residue(f(ctx, yb, LS(xa)) * LS(regular))};
    }
    }
    throw std::invalid_argument("bad residue variant");
}

IdentityPair hc_multiple_limit_pair(MultipleLimitVariant variant, const HCQuery& core, const ParameterSet& z,
                                    int window)
{
    const auto ctx = context_of(core);
    const auto& [t, x, s, y] = std::tie(core.t, core.x, core.s, core.y);
    const Set<LS> zl = lifted(z);
    const Set<LS> zp = perturb(z, window);
    auto limit = [&](const LS& value) { return z.empty() ? value.coeff_or_zero(0) : limit_at_zero(value); };
    switch (variant) {
    case MultipleLimitVariant::RED1: {
        const auto lhs = z_series(ctx, core, join(lifted(t), zl), join(lifted(x), zp), lifted(s), lifted(y))
                       / f_prod(ctx, zp, zl);
        const Rational rhs = f_prod(ctx, z, t) * f_prod(ctx, x, z) * f_prod(ctx, s, z) * z_of(ctx, core, t, x, s, y);
        return {limit(lhs), rhs};
    }
    case MultipleLimitVariant::RED2: {
        const auto lhs = z_series(ctx, core, lifted(t), lifted(x), join(lifted(s), zl), join(lifted(y), zp))
                       / f_prod(ctx, zp, zl);
        const Rational rhs = f_prod(ctx, z, x) * f_prod(ctx, z, s) * f_prod(ctx, y, z) * z_of(ctx, core, t, x, s, y);
        return {limit(lhs), rhs};
    }
    case MultipleLimitVariant::NONTRIV2: {
        if (x.size() != t.size() + z.size() || y.size() != s.size() + z.size()) {
            throw CardinalityError("NONTRIV2 needs #x = #t + #z and #y = #s + #z");
        }
        const auto lhs = z_series(ctx, core, join(lifted(t), zp), lifted(x), join(lifted(s), zl), lifted(y))
                       / f_prod(ctx, zl, zp);
        Rational sum;
        for_each_split(x, z.size(), [&](const ParameterSet& xi, const ParameterSet& xii) {
            sum += izergin_side(ctx, core.side, xi, z) * f_prod(ctx, xii, xi) * z_of(ctx, core, t, xii, join(s, xi), y);
        });
        return {limit(lhs), f_prod(ctx, s, z) * f_prod(ctx, z, t) * sum};
    }
    case MultipleLimitVariant::NONTRIV22: {
        if (t.size() != x.size() + z.size() || s.size() != y.size() + z.size()) {
            throw CardinalityError("NONTRIV22 needs #t = #x + #z and #s = #y + #z");
        }
        const auto lhs = z_series(ctx, core, lifted(t), join(lifted(x), zp), lifted(s), join(lifted(y), zl))
                       / f_prod(ctx, zl, zp);
        Rational sum;
        for_each_split(s, z.size(), [&](const ParameterSet& si, const ParameterSet& sii) {
            sum += izergin_side(ctx, core.side, z, si) * f_prod(ctx, si, sii) * z_of(ctx, core, t, join(x, si), sii, y);
        });
        return {limit(lhs), f_prod(ctx, y, z) * f_prod(ctx, z, x) * sum};
    }
    }
    throw std::invalid_argument("bad multiple-limit variant");
}

IdentityPair hc_reduction_pair(ReductionVariant variant, const HCQuery& core, const ParameterSet& z)
{
    const auto ctx = context_of(core);
    const auto& [t, x, s, y] = std::tie(core.t, core.x, core.s, core.y);
    const Rational& q = ctx.q();
    switch (variant) {
    case ReductionVariant::DEC2: {
        if (x.size() != t.size() + z.size() || y.size() != s.size() + z.size()) {
            throw CardinalityError("DEC2 needs #x = #t + #z and #y = #s + #z");
        }
        const Rational lhs = z_of(ctx, core, join(t, qshift(z, 2, q)), x, join(s, z), y);
        Rational sum;
        for_each_split(y, z.size(), [&](const ParameterSet& yi, const ParameterSet& yii) {
            sum += izergin_side(ctx, core.side, yi, z) * z_of(ctx, core, join(t, qshift(yi, 2, q)), x, s, yii)
                 * f_prod(ctx, yii, yi) * f_prod(ctx, yi, x) * f_prod(ctx, yi, s);
        });
        return {lhs, sum};
    }
    case ReductionVariant::DEC1: {
        if (t.size() != x.size() + z.size() || s.size() != y.size() + z.size()) {
            throw CardinalityError("DEC1 needs #t = #x + #z and #s = #y + #z");
        }
        const Rational lhs = z_of(ctx, core, t, join(x, z), s, join(y, qshift(z, -2, q)));
        Rational sum;
        for_each_split(t, z.size(), [&](const ParameterSet& ti, const ParameterSet& tii) {
            sum += izergin_side(ctx, core.side, z, ti) * z_of(ctx, core, tii, x, s, join(y, qshift(ti, -2, q)))
                 * f_prod(ctx, ti, tii) * f_prod(ctx, x, ti) * f_prod(ctx, s, ti);
        });
        return {lhs, sum};
    }
    case ReductionVariant::DEC2_PC: {
        require_size(z, y.size(), "DEC2_PC z");
        require_size(x, t.size() + z.size(), "DEC2_PC x");
        const Rational lhs = z_of(ctx, core, join(t, qshift(z, 2, q)), x, z, y);
        const Rational rhs = f_prod(ctx, y, x) * izergin_side(ctx, core.side, y, z)
                           * izergin_side(ctx, core.side, x, join(t, qshift(y, 2, q)));
        return {lhs, rhs};
    }
    case ReductionVariant::DEC1_PC: {
        require_size(z, t.size(), "DEC1_PC z");
        require_size(s, y.size() + z.size(), "DEC1_PC s");
        const Rational lhs = z_of(ctx, core, t, z, s, join(y, qshift(z, -2, q)));
        const Rational rhs = f_prod(ctx, s, t) * izergin_side(ctx, core.side, z, t)
                           * izergin_side(ctx, core.side, join(y, qshift(t, -2, q)), s);
        return {lhs, rhs};
    }
    }
    throw std::invalid_argument("bad reduction variant");
}

IdentityPair hc_twin_sum_pair(int variant, const HCQuery& core, const ParameterSet& xi)
{
    const auto ctx = context_of(core);
    const auto& [t, x, s, y] = std::tie(core.t, core.x, core.s, core.y);
    const Rational& q = ctx.q();
    const Side side = core.side;
    const Side opp = opposite(side);
    auto K = [&](Side sd, const ParameterSet& a, const ParameterSet& b) { return izergin_side(ctx, sd, a, b); };
    if (variant == 1 || variant == 2) {
        if (s.size() != y.size() || t.size() < s.size() || xi.size() != t.size() - s.size()) {
            throw CardinalityError("twin sums 1, 2 need a >= b, #y = #s = b and #xi = a - b");
        }
        const int b = static_cast<int>(s.size());
        const ParameterSet y2 = qshift(y, 2, q);
        const ParameterSet s2 = qshift(s, 2, q);
        Rational sum;
        for_each_split(t, s.size(), [&](const ParameterSet& ti, const ParameterSet& tii) {
            const Rational first = variant == 1 ? K(opp, ti, y2) * K(side, ti, s2) : K(side, ti, y2) * K(opp, ti, s2);
            sum += first * K(side, xi, tii) * f_prod(ctx, tii, ti);
        });
        const Rational z = variant == 1 ? z_of(ctx, core, t, join(xi, y), s, qshift(y, -2, q))
                                        : z_of(ctx, core, t, join(xi, s), y, qshift(s, -2, q));
        return {sum, ctx.minus_q_pow(side_sign(side) * b) * z / (f_prod(ctx, y, t) * f_prod(ctx, s, t))};
    }
    if (variant == 3 || variant == 4) {
        if (t.size() != x.size() || y.size() < t.size() || xi.size() != y.size() - t.size()) {
            throw CardinalityError("twin sums 3, 4 need a <= b, #t = #x = a and #xi = b - a");
        }
        const int a = static_cast<int>(t.size());
        const ParameterSet tm = qshift(t, -2, q);
        const ParameterSet xm = qshift(x, -2, q);
        Rational sum;
        for_each_split(y, t.size(), [&](const ParameterSet& yi, const ParameterSet& yii) {
            const Rational first = variant == 3 ? K(opp, tm, yi) * K(side, xm, yi) : K(side, tm, yi) * K(opp, xm, yi);
            sum += first * K(side, yii, xi) * f_prod(ctx, yi, yii);
        });
        const Rational z = variant == 3 ? z_of(ctx, core, qshift(t, 2, q), x, join(xi, t), y)
                                        : z_of(ctx, core, qshift(x, 2, q), t, join(xi, x), y);
        return {sum, ctx.minus_q_pow(side_sign(side) * a) * z / (f_prod(ctx, y, t) * f_prod(ctx, y, x))};
    }
    throw std::invalid_argument("twin sum variant must be 1..4");
}

IdentityPair hc_prop51_pair(const HCQuery& core, const ParameterSet& w, const ParameterSet& z)
{
    const auto ctx = context_of(core);
    const auto& [t, x, s, y] = std::tie(core.t, core.x, core.s, core.y);
    const Rational& q = ctx.q();
    const std::size_t p = y.size();
    if (t.size() != x.size() || p > s.size() || w.size() != s.size() - p) {
        throw CardinalityError("double partition sum needs #t = #x, #y = p <= b = #s and #w = b - p");
    }
    const ParameterSet xi = join(qshift(x, -2, q), qshift(z, -2, q));
    const Rational lhs = f_prod(ctx, xi, y) * z_of(ctx, core, t, x, s, join(y, w));
    Rational rhs;
    for (std::size_t k = 0; k <= p; ++k) {
        const Rational sign = ctx.minus_q_pow(-side_sign(core.side) * static_cast<int>(k));
        if (p - k > xi.size()) {
            continue;
        }
        for_each_split(s, k, [&](const ParameterSet& si, const ParameterSet& sii) {
            const Rational s_part = f_prod(ctx, si, sii) * f_prod(ctx, y, si) * f_prod(ctx, w, si) / f_prod(ctx, si, z);
            const ParameterSet si_m = qshift(si, -2, q);
            for_each_split(xi, p - k, [&](const ParameterSet& xi_i, const ParameterSet& xi_ii) {
                rhs += sign * s_part * izergin_side(ctx, opposite(core.side), join(si_m, xi_i), y)
                     * z_of(ctx, core, t, x, sii, join(w, xi_i)) * f_prod(ctx, xi_ii, xi_i);
            });
        });
    }
    return {lhs, rhs};
}

} // namespace gl3hc
