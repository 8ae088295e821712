#include "gl3hc/izergin.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gl3hc/partitions.hpp"

namespace gl3hc {

namespace {

bool exact_zero(const Rational& x) { return x.is_zero(); }
bool exact_zero(const LaurentSeries& x) { return x.is_zero() && x.is_exact(); }

template <class S>
void require_same_size(const Set<S>& x, const Set<S>& y, const char* what)
{
    if (x.size() != y.size()) {
        throw CardinalityError(std::string(what) + ": set sizes " + std::to_string(x.size()) + " and "
                               + std::to_string(y.size()) + " differ");
    }
}

// The set with its last element replaced by 1/delta.
Set<LaurentSeries> last_at_infinity(const ParameterSet& set, int window)
{
    Set<LaurentSeries> out = lift<LaurentSeries>(set);
    out.back() = LaurentSeries::monomial(Rational(1), -1, window);
    return out;
}

} // namespace

Side parse_side(std::string_view text)
{
    if (text == "l" || text == "left") {
        return Side::Left;
    }
    if (text == "r" || text == "right") {
        return Side::Right;
    }
    throw ParseError("side must be l or r, got '" + std::string(text) + "'");
}

KernelContext::KernelContext(Rational q) : q_(std::move(q))
{
    validate_q(q_);
    q_inv_ = q_.inverse();
}

template <class S>
S f(const KernelContext& ctx, const S& u, const S& v)
{
    return (S(ctx.q()) * u - S(ctx.q_inv()) * v) / (u - v);
}

template <class S>
S g(const KernelContext& ctx, const S& u, const S& v)
{
    return S(ctx.q() - ctx.q_inv()) / (u - v);
}

template <class S>
S f_prod(const KernelContext& ctx, const Set<S>& us, const Set<S>& vs)
{
    S out(1);
    for (const auto& u : us) {
        for (const auto& v : vs) {
            out *= f(ctx, u, v);
        }
    }
    return out;
}

template <class S>
S determinant(std::vector<std::vector<S>> m)
{
    const std::size_t n = m.size();
    S det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        int best = 0;
        bool inexact_zero_seen = false;
        for (std::size_t r = c; r < n; ++r) {
            const auto order = pivot_order(m[r][c]);
            if (!order) {
                inexact_zero_seen = inexact_zero_seen || !exact_zero(m[r][c]);
                continue;
            }
            if (pivot == n || *order < best) {
                pivot = r;
                best = *order;
            }
        }
        if (pivot == n) {
            if (inexact_zero_seen) {
                throw TruncationError("determinant column vanishes to retained precision");
            }
            return S(0);
        }
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const S inv = S(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (exact_zero(m[r][c])) {
                continue;
            }
            const S factor = m[r][c] * inv;
            for (std::size_t k = c + 1; k < n; ++k) {
                m[r][k] -= factor * m[c][k];
            }
        }
    }
    return det;
}

// Row i of the matrix is scaled by prod_l (q x_i - y_l / q), which turns the
// entries into polynomials over a single pole (x_i - y_j). The scaled form
// stays finite at y_l = q^2 x_i, where the unscaled entries are singular.
template <class S>
S izergin(const KernelContext& ctx, const Set<S>& x, const Set<S>& y)
{
    require_same_size(x, y, "izergin");
    const std::size_t n = x.size();
    if (n == 0) {
        return S(1);
    }
    const S q(ctx.q());
    const S qi(ctx.q_inv());
    const S qq(ctx.q() - ctx.q_inv());
    std::vector<std::vector<S>> m(n, std::vector<S>(n));
    std::vector<S> h(n);
    std::vector<S> prefix(n + 1);
    std::vector<S> suffix(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            h[l] = q * x[i] - qi * y[l];
        }
        prefix[0] = S(1);
        for (std::size_t l = 0; l < n; ++l) {
            prefix[l + 1] = prefix[l] * h[l];
        }
        suffix[n] = S(1);
        for (std::size_t l = n; l > 0; --l) {
            suffix[l - 1] = suffix[l] * h[l - 1];
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = qq * prefix[j] * suffix[j + 1] / (x[i] - y[j]);
        }
    }
    S vandermonde(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            vandermonde *= (x[i] - x[j]) * (y[j] - y[i]);
        }
    }
    return determinant(std::move(m)) / vandermonde;
}

template <class S>
S izergin_side(const KernelContext& ctx, Side side, const Set<S>& x, const Set<S>& y)
{
    return (side == Side::Left ? product(x) : product(y)) * izergin(ctx, x, y);
}

template <class S>
S lemma_partition_sum(const KernelContext& ctx, Side side, const Set<S>& gamma, const Set<S>& alpha,
                      const Set<S>& beta)
{
    if (gamma.size() != alpha.size() + beta.size()) {
        throw CardinalityError("lemma: #gamma must equal #alpha + #beta");
    }
    S sum(0);
    for_each_split(gamma, alpha.size(), [&](const Set<S>& gi, const Set<S>& gii) {
        sum += izergin_side(ctx, side, gi, alpha) * izergin_side(ctx, opposite(side), beta, gii)
             * f_prod(ctx, gii, gi);
    });
    return sum;
}

Rational lemma_closed_form_1(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                             const ParameterSet& alpha, const ParameterSet& beta)
{
    const int m1 = static_cast<int>(alpha.size());
    return ctx.minus_q_pow(-side_sign(side) * m1) * f_prod(ctx, gamma, alpha)
         * izergin_side(ctx, opposite(side), join(qshift(alpha, -2, ctx.q()), beta), gamma);
}

Rational lemma_closed_form_2(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                             const ParameterSet& alpha, const ParameterSet& beta)
{
    const int m2 = static_cast<int>(beta.size());
    return ctx.minus_q_pow(side_sign(side) * m2) * f_prod(ctx, beta, gamma)
         * izergin_side(ctx, side, gamma, join(alpha, qshift(beta, 2, ctx.q())));
}

Set<LaurentSeries> perturb(const ParameterSet& z, int window)
{
    Set<LaurentSeries> out;
    out.reserve(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        out.push_back(LaurentSeries::variable(z[j], Rational(static_cast<long>(j + 1)), window));
    }
    return out;
}

Rational limit_at_zero(const LaurentSeries& s)
{
    if (!s.is_zero() && s.valuation() < 0) {
        throw SingularLimitError("limit is singular: eps^" + std::to_string(s.valuation()) + " term survives");
    }
    return s.coeff_or_zero(0);
}

Rational simple_residue(const LaurentSeries& s)
{
    if (!s.is_zero() && s.valuation() < -1) {
        throw SingularLimitError("unexpected pole of order " + std::to_string(-s.valuation()));
    }
    return s.coeff_or_zero(-1);
}

Rational mult_pole_limit(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                         const ParameterSet& z, int window)
{
    require_same_size(x, y, "mult_pole_limit");
    if (z.empty()) {
        return izergin_side(ctx, side, x, y);
    }
    const auto zl = lift<LaurentSeries>(z);
    const auto zp = perturb(z, window);
    const auto lhs = izergin_side(ctx, side, join(lift<LaurentSeries>(x), zl), join(lift<LaurentSeries>(y), zp))
                   / f_prod(ctx, zl, zp);
    return limit_at_zero(lhs);
}

IdentityPair k_init_pair(const KernelContext& ctx, Side side, const Rational& x, const Rational& y)
{
    return {izergin_side(ctx, side, ParameterSet{x}, ParameterSet{y}),
            (side == Side::Left ? x : y) * g(ctx, x, y)};
}

IdentityPair k_scal_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                         const Rational& alpha)
{
    ParameterSet ax;
    ParameterSet ay;
    for (const auto& v : x) {
        ax.push_back(alpha * v);
    }
    for (const auto& v : y) {
        ay.push_back(alpha * v);
    }
    return {izergin_side(ctx, side, ax, ay), izergin_side(ctx, side, x, y)};
}

std::vector<IdentityPair> k_red_pairs(const KernelContext& ctx, Side side, const ParameterSet& x,
                                      const ParameterSet& y, const Rational& z)
{
    const Rational rhs = -ctx.q_pow(-side_sign(side)) * izergin_side(ctx, side, x, y);
    const Rational zm = z * ctx.q_pow(-2);
    const Rational zp = z * ctx.q_pow(2);
    return {
        {izergin_side(ctx, side, join(x, ParameterSet{zm}), join(y, ParameterSet{z})), rhs},
        {izergin_side(ctx, side, join(x, ParameterSet{z}), join(y, ParameterSet{zp})), rhs},
    };
}

IdentityPair k_invers_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y)
{
    const int n = static_cast<int>(x.size());
    return {izergin_side(ctx, side, qshift(x, -2, ctx.q()), y),
            ctx.minus_q_pow(-side_sign(side) * n) / f_prod(ctx, y, x) * izergin_side(ctx, opposite(side), y, x)};
}

IdentityPair k_invers1_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y)
{
    return {izergin_side(ctx.inverted(), side, x, y), izergin_side(ctx, opposite(side), y, x)};
}

IdentityPair k_res_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                        const Rational& z, int window)
{
    const LaurentSeries zl(z);
    const LaurentSeries zp = LaurentSeries::variable(z, Rational(1), window);
    const auto xl = lift<LaurentSeries>(x);
    const auto yl = lift<LaurentSeries>(y);
    const auto lhs = izergin_side(ctx, side, join(xl, Set<LaurentSeries>{zl}), join(yl, Set<LaurentSeries>{zp}));
    const auto rhs = f(ctx, zl, zp) * LaurentSeries(f_prod(ctx, ParameterSet{z}, y) * f_prod(ctx, x, ParameterSet{z})
                                                    * izergin_side(ctx, side, x, y));
    return {simple_residue(lhs), simple_residue(rhs)};
}

std::vector<IdentityPair> k_inf_pairs(const KernelContext& ctx, Side side, const ParameterSet& x,
                                      const ParameterSet& y, int window)
{
    if (x.empty()) {
        return {};
    }
    // K^(l) decays in y and stays bounded in x; K^(r) the other way round.
    const int x_bound = side == Side::Left ? 0 : 1;
    const int y_bound = side == Side::Left ? 1 : 0;
    const auto kx = izergin_side(ctx, side, last_at_infinity(x, window), lift<LaurentSeries>(y));
    const auto ky = izergin_side(ctx, side, lift<LaurentSeries>(x), last_at_infinity(y, window));
    return {{below_order_weight(kx, x_bound), Rational(0)}, {below_order_weight(ky, y_bound), Rational(0)}};
}

std::vector<IdentityPair> lemma_pairs(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                                      const ParameterSet& alpha, const ParameterSet& beta)
{
    const Rational lhs = lemma_partition_sum(ctx, side, gamma, alpha, beta);
    return {{lhs, lemma_closed_form_1(ctx, side, gamma, alpha, beta)},
            {lhs, lemma_closed_form_2(ctx, side, gamma, alpha, beta)}};
}

IdentityPair mult_pole_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                            const ParameterSet& z, int window)
{
    return {mult_pole_limit(ctx, side, x, y, z, window),
            f_prod(ctx, x, z) * f_prod(ctx, z, y) * izergin_side(ctx, side, x, y)};
}

Rational below_order_weight(const LaurentSeries& s, int bound)
{
    Rational sum;
    if (s.is_zero()) {
        static_cast<void>(s.coeff_or_zero(bound - 1));
        return sum;
    }
    for (int k = s.valuation(); k < bound; ++k) {
        const Rational c = s.coeff_or_zero(k);
        sum += c * c;
    }
    return sum;
}

#define GL3HC_INSTANTIATE(S)                                                                                    \
    template S f<S>(const KernelContext&, const S&, const S&);                                                  \
    template S g<S>(const KernelContext&, const S&, const S&);                                                  \
    template S f_prod<S>(const KernelContext&, const Set<S>&, const Set<S>&);                                   \
    template S determinant<S>(std::vector<std::vector<S>>);                                                     \
    template S izergin<S>(const KernelContext&, const Set<S>&, const Set<S>&);                                  \
    template S izergin_side<S>(const KernelContext&, Side, const Set<S>&, const Set<S>&);                       \
    template S lemma_partition_sum<S>(const KernelContext&, Side, const Set<S>&, const Set<S>&, const Set<S>&);

GL3HC_INSTANTIATE(Rational)
GL3HC_INSTANTIATE(LaurentSeries)

#undef GL3HC_INSTANTIATE

} // namespace gl3hc
