#include "gl3hc/scalar_product.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "gl3hc/partitions.hpp"

namespace gl3hc {

namespace {

void print_family(std::ostringstream& os, bool& first, const char* symbol, const char* family,
                  const std::vector<std::size_t>& indices)
{
    for (auto i : indices) {
        os << (first ? "" : "*") << symbol << "(" << family << "[" << i << "])";
        first = false;
    }
}

bool strictly_increasing(const std::vector<std::size_t>& v)
{
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

std::vector<std::size_t> all_indices(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = i;
    }
    return out;
}

std::vector<Rational> parse_coefficients(std::string_view text)
{
    auto values = parse_set(text);
    if (values.empty()) {
        throw ParseError("rational function needs at least one coefficient");
    }
    return values;
}

Rational horner(const std::vector<Rational>& c, const Rational& u)
{
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * u + *it;
    }
    return acc;
}

void require_scalar_sizes(const ScalarSets& sets)
{
    if (sets.uc.size() != sets.ub.size() || sets.vc.size() != sets.vb.size()) {
        throw CardinalityError("scalar product needs #uC = #uB and #vC = #vB");
    }
}

} // namespace

std::string Monomial::str() const
{
    std::ostringstream os;
    bool first = true;
    print_family(os, first, "r1", "uC", uc);
    print_family(os, first, "r1", "uB", ub);
    print_family(os, first, "r3", "vC", vc);
    print_family(os, first, "r3", "vB", vb);
    if (first) {
        os << "1";
    }
    return os.str();
}

void WeightPolynomial::add(const Monomial& m, const Rational& c)
{
    if (c.is_zero()) {
        // a zero coefficient still records the monomial as generated
        terms_.try_emplace(m, Rational());
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
    }
}

Rational WeightPolynomial::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

bool WeightPolynomial::is_multilinear() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
        const Monomial& m = term.first;
        return strictly_increasing(m.uc) && strictly_increasing(m.ub) && strictly_increasing(m.vc)
            && strictly_increasing(m.vb);
    });
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_) {
        add(m, c);
    }
    return *this;
}

RationalFunctionSpec RationalFunctionSpec::parse(std::string_view text)
{
    RationalFunctionSpec spec;
    bool have_num = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto semi = text.find(';', start);
        const std::string_view part = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
        if (part.rfind("num:", 0) == 0) {
            spec.numerator = parse_coefficients(part.substr(4));
            have_num = true;
        } else if (part.rfind("den:", 0) == 0) {
            spec.denominator = parse_coefficients(part.substr(4));
        } else if (!part.empty()) {
            throw ParseError("rational function must look like 'num:a0,a1,...;den:b0,...', got '"
                             + std::string(text) + "'");
        }
        if (semi == std::string_view::npos) {
            break;
        }
        start = semi + 1;
    }
    if (!have_num) {
        throw ParseError("rational function is missing 'num:'");
    }
    if (std::all_of(spec.denominator.begin(), spec.denominator.end(), [](const Rational& c) { return c.is_zero(); })) {
        throw ParseError("rational function denominator is identically zero");
    }
    return spec;
}

RationalFunctionSpec RationalFunctionSpec::constant(const Rational& c)
{
    RationalFunctionSpec spec;
    spec.numerator = {c};
    return spec;
}

Rational RationalFunctionSpec::operator()(const Rational& u) const
{
    const Rational den = horner(denominator, u);
    if (den.is_zero()) {
        throw PoleError("rational function denominator vanishes at " + u.str());
    }
    return horner(numerator, u) / den;
}

Rational w_part(const KernelContext& ctx, const ParameterSet& uc_ii, const ParameterSet& ub_ii,
                const ParameterSet& uc_i, const ParameterSet& ub_i, const ParameterSet& vc_i,
                const ParameterSet& vb_i, const ParameterSet& vc_ii, const ParameterSet& vb_ii)
{
    if (uc_i.size() != ub_i.size() || uc_ii.size() != ub_ii.size() || vc_i.size() != vb_i.size()
        || vc_ii.size() != vb_ii.size()) {
        throw CardinalityError("W_part needs matching part sizes in uC/uB and vC/vB");
    }
    const Rational factors = f_prod(ctx, ub_ii, ub_i) * f_prod(ctx, uc_i, uc_ii) * f_prod(ctx, vb_i, vb_ii)
                           * f_prod(ctx, vc_ii, vc_i) * f_prod(ctx, vc_i, uc_i) * f_prod(ctx, vb_ii, ub_ii);
    if (factors.is_zero()) {
        return factors;
    }
    return factors * highest_coefficient(ctx, Side::Left, Rep::WS, uc_ii, ub_ii, vc_i, vb_i)
         * highest_coefficient(ctx, Side::Right, Rep::WS, ub_i, uc_i, vb_ii, vc_ii);
}

WeightPolynomial scalar_product_symbolic(const KernelContext& ctx, const ScalarSets& sets)
{
    require_scalar_sizes(sets);
    const std::size_t a = sets.uc.size();
    const std::size_t b = sets.vc.size();
    const Rational norm = f_prod(ctx, sets.vc, sets.uc) * f_prod(ctx, sets.vb, sets.ub);
    WeightPolynomial poly;
    for (std::size_t k = 0; k <= a; ++k) {
        for (TwoSetPartitionStream us(a, {k, a - k}, a, {k, a - k}); !us.done(); us.advance()) {
            const auto& uc_idx = us.first();
            const auto& ub_idx = us.second();
            const auto [uc_i, uc_ii] = complement(sets.uc, uc_idx[0]);
            const auto [ub_i, ub_ii] = complement(sets.ub, ub_idx[0]);
            for (std::size_t n = 0; n <= b; ++n) {
                for (TwoSetPartitionStream vs(b, {n, b - n}, b, {n, b - n}); !vs.done(); vs.advance()) {
                    const auto& vc_idx = vs.first();
                    const auto& vb_idx = vs.second();
                    const auto [vc_i, vc_ii] = complement(sets.vc, vc_idx[0]);
                    const auto [vb_i, vb_ii] = complement(sets.vb, vb_idx[0]);
                    Monomial m{uc_idx[1], ub_idx[0], vc_idx[1], vb_idx[0]};
                    poly.add(m, w_part(ctx, uc_ii, ub_ii, uc_i, ub_i, vc_i, vb_i, vc_ii, vb_ii) / norm);
                }
            }
        }
    }
    return poly;
}

Rational evaluate(const WeightPolynomial& poly, const ScalarSets& sets, const RationalFunctionSpec& r1,
                  const RationalFunctionSpec& r3)
{
    Rational total;
    for (const auto& [m, c] : poly.terms()) {
        Rational term = c;
        for (auto i : m.uc) {
            term *= r1(sets.uc.at(i));
        }
        for (auto i : m.ub) {
            term *= r1(sets.ub.at(i));
        }
        for (auto j : m.vc) {
            term *= r3(sets.vc.at(j));
        }
        for (auto j : m.vb) {
            term *= r3(sets.vb.at(j));
        }
        total += term;
    }
    return total;
}

Rational scalar_product_numeric(const KernelContext& ctx, const ScalarSets& sets, const RationalFunctionSpec& r1,
                                const RationalFunctionSpec& r3)
{
    return evaluate(scalar_product_symbolic(ctx, sets), sets, r1, r3);
}

Monomial right_corner_monomial(std::size_t a, std::size_t b)
{
    return Monomial{{}, all_indices(a), all_indices(b), {}};
}

Monomial left_corner_monomial(std::size_t a, std::size_t b)
{
    return Monomial{all_indices(a), {}, {}, all_indices(b)};
}

Rational z_right_extraction_form(const KernelContext& ctx, const ScalarSets& sets)
{
    require_scalar_sizes(sets);
    const std::size_t a = sets.uc.size();
    const ParameterSet uc2 = qshift(sets.uc, 2, ctx.q());
    Rational sum;
    for_each_split(join(sets.uc, sets.vb), a, [&](const ParameterSet& xi_i, const ParameterSet& xi_ii) {
        sum += izergin_left(ctx, xi_i, uc2) * izergin_right(ctx, xi_i, sets.ub) * izergin_right(ctx, sets.vc, xi_ii)
             * f_prod(ctx, xi_ii, xi_i);
    });
    return ctx.minus_q_pow(static_cast<int>(a)) * sum;
}

Rational z_left_extraction_form(const KernelContext& ctx, const ScalarSets& sets)
{
    require_scalar_sizes(sets);
    const std::size_t b = sets.vc.size();
    const ParameterSet vc_m = qshift(sets.vc, -2, ctx.q());
    Rational sum;
    for_each_split(join(sets.ub, sets.vc), b, [&](const ParameterSet& eta_i, const ParameterSet& eta_ii) {
        sum += izergin_right(ctx, vc_m, eta_i) * izergin_left(ctx, sets.vb, eta_i) * izergin_left(ctx, eta_ii, sets.uc)
             * f_prod(ctx, eta_i, eta_ii);
    });
    return ctx.minus_q_pow(-static_cast<int>(b)) * sum;
}

std::size_t expected_monomial_count(std::size_t a, std::size_t b)
{
    std::size_t ua = 0;
    for (std::size_t k = 0; k <= a; ++k) {
        ua += binomial(a, k) * binomial(a, k);
    }
    std::size_t vb = 0;
    for (std::size_t n = 0; n <= b; ++n) {
        vb += binomial(b, n) * binomial(b, n);
    }
    return ua * vb;
}

} // namespace gl3hc
