#pragma once

// Kernel functions f, g, the Izergin determinant and its left/right versions.
//
// Every template here is instantiated for Rational (point evaluation) and
// LaurentSeries (evaluation along a perturbation).

#include <string_view>
#include <vector>

#include "gl3hc/exactnum.hpp"
#include "gl3hc/params.hpp"

namespace gl3hc {

enum class Side { Left, Right };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
/// +1 for the left side (upper signs), -1 for the right side (lower signs).
constexpr int side_sign(Side s) { return s == Side::Left ? 1 : -1; }
constexpr char side_char(Side s) { return s == Side::Left ? 'l' : 'r'; }
/// Accepts "l"/"left" and "r"/"right".
Side parse_side(std::string_view text);

class KernelContext {
public:
    /// Throws std::invalid_argument for q in {0, 1, -1}.
    explicit KernelContext(Rational q);

    [[nodiscard]] const Rational& q() const { return q_; }
    [[nodiscard]] const Rational& q_inv() const { return q_inv_; }
    /// The same kernel with q replaced by 1/q.
    [[nodiscard]] KernelContext inverted() const { return KernelContext(q_inv_); }
    [[nodiscard]] Rational q_pow(int e) const { return q_.pow(e); }
    /// (-q)^e
    [[nodiscard]] Rational minus_q_pow(int e) const { return (-q_).pow(e); }

private:
    Rational q_;
    Rational q_inv_;
};

/// Both sides of one instance of an identity.
struct IdentityPair {
    Rational lhs;
    Rational rhs;
    [[nodiscard]] bool equal() const { return lhs == rhs; }
};

/// (q u - v/q) / (u - v)
template <class S>
S f(const KernelContext& ctx, const S& u, const S& v);

/// (q - 1/q) / (u - v)
template <class S>
S g(const KernelContext& ctx, const S& u, const S& v);

/// prod_{u in U} prod_{v in V} f(u, v); 1 when either set is empty.
template <class S>
S f_prod(const KernelContext& ctx, const Set<S>& us, const Set<S>& vs);

/// Gaussian elimination. Over LaurentSeries the pivot is the entry of lowest
/// valuation; a column that vanishes only to retained precision throws.
template <class S>
S determinant(std::vector<std::vector<S>> m);

/// K_n(x|y); K_0 = 1. Throws CardinalityError when #x != #y.
template <class S>
S izergin(const KernelContext& ctx, const Set<S>& x, const Set<S>& y);

/// K^(l) = prod(x) K, K^(r) = prod(y) K.
template <class S>
S izergin_side(const KernelContext& ctx, Side side, const Set<S>& x, const Set<S>& y);

template <class S>
S izergin_left(const KernelContext& ctx, const Set<S>& x, const Set<S>& y)
{
    return izergin_side(ctx, Side::Left, x, y);
}

template <class S>
S izergin_right(const KernelContext& ctx, const Set<S>& x, const Set<S>& y)
{
    return izergin_side(ctx, Side::Right, x, y);
}

/// sum over gamma => {I, II}, #I = #alpha:
///   K^(side)(gamma_I|alpha) K^(opp)(beta|gamma_II) f(gamma_II, gamma_I)
template <class S>
S lemma_partition_sum(const KernelContext& ctx, Side side, const Set<S>& gamma, const Set<S>& alpha,
                      const Set<S>& beta);

/// The two closed forms of the sum above.
Rational lemma_closed_form_1(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                             const ParameterSet& alpha, const ParameterSet& beta);
Rational lemma_closed_form_2(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                             const ParameterSet& alpha, const ParameterSet& beta);

// --- limits -----------------------------------------------------------------

/// {z_j + (j+1) eps}: one perturbation line with distinct slopes.
Set<LaurentSeries> perturb(const ParameterSet& z, int window);

/// The eps^0 coefficient of a series that must be regular at eps = 0.
/// Throws SingularLimitError when a negative order survives.
Rational limit_at_zero(const LaurentSeries& s);

/// The eps^-1 coefficient. Throws SingularLimitError on a higher-order pole.
Rational simple_residue(const LaurentSeries& s);

/// lim f^{-1}(z, z') K^(side)_{n+m}({x, z}|{y, z'}) as z' -> z.
Rational mult_pole_limit(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                         const ParameterSet& z, int window);

// --- property evaluators ----------------------------------------------------

IdentityPair k_init_pair(const KernelContext& ctx, Side side, const Rational& x, const Rational& y);
IdentityPair k_scal_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                         const Rational& alpha);
/// Both reduction forms: shift on the x side and shift on the y side.
std::vector<IdentityPair> k_red_pairs(const KernelContext& ctx, Side side, const ParameterSet& x,
                                      const ParameterSet& y, const Rational& z);
IdentityPair k_invers_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y);
IdentityPair k_invers1_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y);
/// eps^-1 coefficients of both sides with y_{n+1} = z + eps.
IdentityPair k_res_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                        const Rational& z, int window);
/// Valuation bounds as the last x or y goes to infinity. Each pair is
/// (sum of squares of coefficients below the bound, 0).
std::vector<IdentityPair> k_inf_pairs(const KernelContext& ctx, Side side, const ParameterSet& x,
                                      const ParameterSet& y, int window);
/// The partition sum against both closed forms.
std::vector<IdentityPair> lemma_pairs(const KernelContext& ctx, Side side, const ParameterSet& gamma,
                                      const ParameterSet& alpha, const ParameterSet& beta);
IdentityPair mult_pole_pair(const KernelContext& ctx, Side side, const ParameterSet& x, const ParameterSet& y,
                            const ParameterSet& z, int window);

/// Sum of c_k^2 over k < bound: zero exactly when valuation >= bound.
Rational below_order_weight(const LaurentSeries& s, int bound);

} // namespace gl3hc
