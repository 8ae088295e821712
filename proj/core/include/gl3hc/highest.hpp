#pragma once

// Left/right highest coefficients Z^(l,r)_{a,b}(t;x|s;y) of the GL(3)
// trigonometric scalar product, through six equivalent partition sums, and
// both sides of the identities they satisfy.

#include <array>
#include <string_view>
#include <vector>

#include "gl3hc/izergin.hpp"

namespace gl3hc {

enum class Rep {
    WS,      ///< sum over partitions of {s, x}
    WS_TWIN, ///< twin of WS
    TY,      ///< sum over partitions of {y, t q^-2}
    TY_TWIN, ///< twin of TY
    TX,      ///< double sum over partitions of t and x
    SY,      ///< double sum over partitions of s and y
};

inline constexpr std::array<Rep, 6> kAllReps = {Rep::WS, Rep::WS_TWIN, Rep::TY, Rep::TY_TWIN, Rep::TX, Rep::SY};

std::string_view rep_name(Rep rep);
/// Accepts ws, ws-twin, ty, ty-twin, tx, sy.
Rep parse_rep(std::string_view text);

struct HCQuery {
    Side side = Side::Left;
    Rep rep = Rep::WS;
    ParameterSet t; ///< a elements
    ParameterSet x; ///< a elements
    ParameterSet s; ///< b elements
    ParameterSet y; ///< b elements
    Rational q;
};

/// Z^(side)_{a,b}(t;x|s;y) by the requested representation.
/// Throws CardinalityError unless #t = #x and #s = #y.
template <class S>
S highest_coefficient(const KernelContext& ctx, Side side, Rep rep, const Set<S>& t, const Set<S>& x,
                      const Set<S>& s, const Set<S>& y);

Rational hc(const HCQuery& query);

/// Closed form for a = b = 1.
Rational z11_closed_form(const KernelContext& ctx, Side side, const Rational& t, const Rational& x,
                         const Rational& s, const Rational& y);

/// (ts)^-1 Z^(r)_{1,1} - (xy)^-1 Z^(l)_{1,1}
Rational hc_difference_11(const KernelContext& ctx, Rep rep, const Rational& t, const Rational& x,
                          const Rational& s, const Rational& y);
/// The difference above against (q - 1/q) g(s,t) g(y,x).
IdentityPair diff_11_pair(const KernelContext& ctx, Rep rep, const Rational& t, const Rational& x,
                          const Rational& s, const Rational& y);

enum class SymmetryVariant { Z_SCAL, Z_INVERS, Z_INVERS1 };
IdentityPair hc_symmetry_check(SymmetryVariant variant, const HCQuery& query, const Rational& alpha);

/// Boundary values: Z_{a,0} = K_a(x|t), Z_{0,b} = K_b(y|s), Z_{0,0} = 1.
IdentityPair hc_triv_pair(const HCQuery& query);

/// Z with the last y (left) or last t (right) set to zero, against 0.
IdentityPair hc_zero_vanish_pair(const HCQuery& query);

/// One pair per nonempty family: the last element sent to infinity, checked as
/// (sum of squares of the coefficients below the required order, 0).
std::vector<IdentityPair> hc_inf_pairs(const HCQuery& query, int window);

/// Invariance under the given reorderings of t, x, s, y.
IdentityPair hc_permutation_pair(const HCQuery& query, const std::array<std::vector<std::size_t>, 4>& perms);

/// Simple poles as one variable approaches another. The colliding pair is the
/// last element of each set involved. Returns the two eps^-1 coefficients.
enum class ResidueVariant {
    S_TO_Y, ///< s_b -> y_b
    T_TO_X, ///< t_a -> x_a
    S_TO_T, ///< s_b -> t_a
    Y_TO_X, ///< y_b -> x_a
};
IdentityPair hc_residue_pair(ResidueVariant variant, const HCQuery& query, int window);

/// Multiple limits with n = #z:
///   RED1:      Z_{a+n,b}({t,z};{x,z'}|s;y),   core sizes (a, a, b, b)
///   RED2:      Z_{a,b+n}(t;x|{s,z};{y,z'}),   core sizes (a, a, b, b)
///   NONTRIV2:  Z_{a,b}({t,z'};x|{s,z};y),     core sizes (a-n, a, b-n, b)
///   NONTRIV22: Z_{a,b}(t;{x,z'}|s;{y,z}),     core sizes (a, a-n, b, b-n)
enum class MultipleLimitVariant { RED1, RED2, NONTRIV2, NONTRIV22 };
IdentityPair hc_multiple_limit_pair(MultipleLimitVariant variant, const HCQuery& core, const ParameterSet& z,
                                    int window);

/// Reductions at deliberately coinciding arguments, n = #z:
///   DEC1:    Z(t;{x,z}|s;{y,q^-2 z}),    core sizes (a, a-n, b, b-n)
///   DEC2:    Z({t,q^2 z};x|{s,z};y),     core sizes (a-n, a, b-n, b)
///   DEC1_PC: Z(t;z|s;{y,q^-2 z}), a<=b,  core sizes (a, -, b, b-a), #z = a
///   DEC2_PC: Z({t,q^2 z};x|z;y), b<=a,   core sizes (a-b, a, -, b), #z = b
enum class ReductionVariant { DEC1, DEC2, DEC1_PC, DEC2_PC };
IdentityPair hc_reduction_pair(ReductionVariant variant, const HCQuery& core, const ParameterSet& z);

/// Sums over partitions reducible to a single Z.
///   variants 1, 2 (a >= b): core sizes (a, -, b, b), #xi = a - b
///   variants 3, 4 (a <= b): core sizes (a, a, -, b), #xi = b - a
IdentityPair hc_twin_sum_pair(int variant, const HCQuery& core, const ParameterSet& xi);

/// Core sizes (a, a, b, p) with p <= b; #w = b - p, #z = n.
IdentityPair hc_prop51_pair(const HCQuery& core, const ParameterSet& w, const ParameterSet& z);

} // namespace gl3hc
