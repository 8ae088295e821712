#pragma once

// The scalar product S_{a,b} as a multilinear polynomial in formal symbols
// r1(u) (u in uC, uB) and r3(v) (v in vC, vB), with rational coefficients
// built from products of left and right highest coefficients.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gl3hc/highest.hpp"

namespace gl3hc {

/// One monomial: r1 over uC[i] and uB[i], r3 over vC[j] and vB[j], each
/// listed by sorted 0-based index into its family.
struct Monomial {
    std::vector<std::size_t> uc;
    std::vector<std::size_t> ub;
    std::vector<std::size_t> vc;
    std::vector<std::size_t> vb;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    [[nodiscard]] std::string str() const;
    /// Number of symbols (every exponent is 1).
    [[nodiscard]] std::size_t degree() const { return uc.size() + ub.size() + vc.size() + vb.size(); }
};

class WeightPolynomial {
public:
    void add(const Monomial& m, const Rational& c);
    /// Coefficient of m, or 0 when absent.
    [[nodiscard]] Rational coefficient(const Monomial& m) const;
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// Every index appears at most once per family in every monomial.
    [[nodiscard]] bool is_multilinear() const;
    WeightPolynomial& operator+=(const WeightPolynomial& rhs);

private:
    std::map<Monomial, Rational> terms_;
};

/// Polynomial-over-polynomial in the spectral variable: text form
/// "num:a0,a1,...;den:b0,b1,..." (den defaults to 1).
struct RationalFunctionSpec {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator{Rational(1)};

    static RationalFunctionSpec parse(std::string_view text);
    static RationalFunctionSpec constant(const Rational& c);
    /// Throws PoleError where the denominator vanishes.
    [[nodiscard]] Rational operator()(const Rational& u) const;
};

struct ScalarSets {
    ParameterSet uc; ///< a elements
    ParameterSet vc; ///< b elements
    ParameterSet ub; ///< a elements
    ParameterSet vb; ///< b elements
};

/// W_part for uC => {I, II}, uB => {I, II} (#uC_I = #uB_I = k) and
/// vC => {I, II}, vB => {I, II} (#vC_I = #vB_I = n).
Rational w_part(const KernelContext& ctx, const ParameterSet& uc_ii, const ParameterSet& ub_ii,
                const ParameterSet& uc_i, const ParameterSet& ub_i, const ParameterSet& vc_i,
                const ParameterSet& vb_i, const ParameterSet& vc_ii, const ParameterSet& vb_ii);

/// Sum over the four simultaneous partitions of
///   r1(uC_II) r1(uB_I) r3(vC_II) r3(vB_I) W_part / (f(vC, uC) f(vB, uB)).
WeightPolynomial scalar_product_symbolic(const KernelContext& ctx, const ScalarSets& sets);

/// Substitute r1 and r3 into the symbolic form.
Rational evaluate(const WeightPolynomial& poly, const ScalarSets& sets, const RationalFunctionSpec& r1,
                  const RationalFunctionSpec& r3);

Rational scalar_product_numeric(const KernelContext& ctx, const ScalarSets& sets, const RationalFunctionSpec& r1,
                                const RationalFunctionSpec& r3);

/// The monomial r1(uB) r3(vC), whose coefficient carries Z^(r).
Monomial right_corner_monomial(std::size_t a, std::size_t b);
/// The monomial r1(uC) r3(vB), whose coefficient carries Z^(l).
Monomial left_corner_monomial(std::size_t a, std::size_t b);

/// Z^(r)_{a,b}(uB;uC|vB;vC) written as the sum over {uC, vB} that arises when
/// extracting the r1(uB) r3(vC) coefficient.
Rational z_right_extraction_form(const KernelContext& ctx, const ScalarSets& sets);
/// Z^(l)_{a,b}(uC;uB|vC;vB) as the sum over {uB, vC} from the r1(uC) r3(vB) coefficient.
Rational z_left_extraction_form(const KernelContext& ctx, const ScalarSets& sets);

/// Expected number of monomials: sum_k C(a,k)^2 * sum_n C(b,n)^2.
std::size_t expected_monomial_count(std::size_t a, std::size_t b);

} // namespace gl3hc
