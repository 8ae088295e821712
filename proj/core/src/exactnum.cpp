#include "gl3hc/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace gl3hc {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// v + p where p may be the exact sentinel.
int shift_precision(int v, int p)
{
    return p == LaurentSeries::kExact ? LaurentSeries::kExact : v + p;
}

} // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw PoleError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw PoleError("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0 && is_zero()) {
        throw PoleError("negative power of zero");
    }
    mpz_class num;
    mpz_class den;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return exponent < 0 ? Rational(mpq_class(den, num)) : Rational(mpq_class(num, den));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw PoleError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(const Rational& constant)
    : valuation_(0), coefficients_{constant}, precision_(kExact), window_(0)
{
    normalize();
}

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coefficients)
    : valuation_(valuation),
      coefficients_(std::move(coefficients)),
      precision_(valuation + static_cast<int>(coefficients_.size())),
      window_(static_cast<int>(coefficients_.size()))
{
    if (coefficients_.empty()) {
        throw TruncationError("series needs at least one retained coefficient");
    }
    normalize();
}

LaurentSeries LaurentSeries::from_scalar(const Rational& c, int window)
{
    if (window < 1) {
        throw std::invalid_argument("window must be positive");
    }
    std::vector<Rational> coefficients(static_cast<std::size_t>(window));
    coefficients[0] = c;
    return LaurentSeries(0, std::move(coefficients));
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int order, int window)
{
    LaurentSeries s(c);
    if (!s.is_zero()) {
        s.valuation_ = order;
    }
    s.window_ = window;
    return s;
}

LaurentSeries LaurentSeries::variable(const Rational& base, const Rational& slope, int window)
{
    if (window < 1) {
        throw std::invalid_argument("window must be positive");
    }
    LaurentSeries s;
    s.valuation_ = 0;
    s.coefficients_ = {base, slope};
    s.precision_ = kExact;
    s.window_ = window;
    s.normalize();
    return s;
}

void LaurentSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < coefficients_.size() && coefficients_[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }
    if (is_exact()) {
        while (!coefficients_.empty() && coefficients_.back().is_zero()) {
            coefficients_.pop_back();
        }
        if (coefficients_.empty()) {
            valuation_ = kExact;
        }
    } else if (coefficients_.empty()) {
        valuation_ = precision_;
    }
}

Rational LaurentSeries::coeff(int k) const
{
    if (k >= precision_ || (!is_zero() && k < valuation_)) {
        throw TruncationError("order not retained: " + std::to_string(k));
    }
    if (is_zero()) {
        return Rational();
    }
    const auto idx = static_cast<std::size_t>(k - valuation_);
    return idx < coefficients_.size() ? coefficients_[idx] : Rational();
}

Rational LaurentSeries::coeff_or_zero(int k) const
{
    if (k >= precision_) {
        throw TruncationError("order not retained: " + std::to_string(k));
    }
    if (is_zero() || k < valuation_) {
        return Rational();
    }
    const auto idx = static_cast<std::size_t>(k - valuation_);
    return idx < coefficients_.size() ? coefficients_[idx] : Rational();
}

LaurentSeries LaurentSeries::inverse() const
{
    if (is_zero()) {
        throw TruncationError("non-invertible at this truncation");
    }
    LaurentSeries out;
    out.window_ = window_;
    out.valuation_ = -valuation_;
    if (is_exact() && coefficients_.size() == 1) {
        out.coefficients_ = {coefficients_[0].inverse()};
        out.precision_ = kExact;
        return out;
    }
    const std::size_t n = is_exact()
        ? static_cast<std::size_t>(window_ > 0 ? window_ : kDefaultWindow)
        : coefficients_.size();
    const Rational lead_inv = coefficients_[0].inverse();
    std::vector<Rational> r;
    r.reserve(n);
    r.push_back(lead_inv);
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k && j < coefficients_.size(); ++j) {
            acc += coefficients_[j] * r[k - j];
        }
        r.push_back(-(acc * lead_inv));
    }
    out.coefficients_ = std::move(r);
    out.precision_ = out.valuation_ + static_cast<int>(n);
    out.normalize();
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs)
{
    if (rhs.is_zero() && rhs.is_exact()) {
        return *this;
    }
    if (is_zero() && is_exact()) {
        return *this = rhs;
    }
    const int p = std::min(precision_, rhs.precision_);
    const int v = std::min(valuation_, rhs.valuation_);
    const int end = p != kExact
        ? p
        : std::max(valuation_ + static_cast<int>(coefficients_.size()),
                   rhs.valuation_ + static_cast<int>(rhs.coefficients_.size()));
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, end - v)));
    for (int k = v; k < end; ++k) {
        Rational& slot = c[static_cast<std::size_t>(k - v)];
        if (!is_zero() && k >= valuation_ && k - valuation_ < static_cast<int>(coefficients_.size())) {
            slot += coefficients_[static_cast<std::size_t>(k - valuation_)];
        }
        if (!rhs.is_zero() && k >= rhs.valuation_
            && k - rhs.valuation_ < static_cast<int>(rhs.coefficients_.size())) {
            slot += rhs.coefficients_[static_cast<std::size_t>(k - rhs.valuation_)];
        }
    }
    valuation_ = std::min(v, p);
    coefficients_ = std::move(c);
    precision_ = p;
    window_ = std::max(window_, rhs.window_);
    normalize();
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs)
{
    return *this += -rhs;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& rhs)
{
    return *this = *this * rhs;
}

LaurentSeries& LaurentSeries::operator/=(const LaurentSeries& rhs)
{
    return *this = *this / rhs;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    const bool a_exact_zero = a.is_zero() && a.is_exact();
    const bool b_exact_zero = b.is_zero() && b.is_exact();
    if (a_exact_zero || b_exact_zero) {
        return LaurentSeries();
    }
    LaurentSeries out;
    out.window_ = std::max(a.window_, b.window_);
    const int v = a.valuation_ + b.valuation_;
    const int p = std::min(shift_precision(a.valuation_, b.precision_), shift_precision(b.valuation_, a.precision_));
    const int la = static_cast<int>(a.coefficients_.size());
    const int lb = static_cast<int>(b.coefficients_.size());
    const int end = p != LaurentSeries::kExact ? p : v + la + lb - 1;
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, end - v)));
    for (int i = 0; i < la; ++i) {
        for (int j = 0; j < lb && i + j < end - v; ++j) {
            c[static_cast<std::size_t>(i + j)] += a.coefficients_[static_cast<std::size_t>(i)]
                                                  * b.coefficients_[static_cast<std::size_t>(j)];
        }
    }
    out.valuation_ = std::min(v, p);
    out.coefficients_ = std::move(c);
    out.precision_ = p;
    out.normalize();
    return out;
}

LaurentSeries operator-(const LaurentSeries& x)
{
    LaurentSeries out = x;
    for (auto& c : out.coefficients_) {
        c = -c;
    }
    return out;
}

std::string LaurentSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i].is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << coefficients_[i].str();
        const int k = valuation_ + static_cast<int>(i);
        if (k != 0) {
            os << "*e^" << k;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    if (!is_exact()) {
        os << " + O(e^" << precision_ << ")";
    }
    return os.str();
}

} // namespace gl3hc
