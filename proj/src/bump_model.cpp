#include "wavearith/bump_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "wavearith/errors.hpp"
#include "wavearith/kernels.hpp"

namespace wavearith {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw DomainError("integer overflow in exact rational arithmetic");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DomainError("integer overflow in exact rational arithmetic");
    }
    return out;
}

std::int64_t require_positive(std::int64_t v, const char* what)
{
    if (v < 1) {
        throw DomainError(std::string(what) + " must be a positive integer, got " + std::to_string(v));
    }
    return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw DomainError("rational denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b)
{
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t den = checked_mul(a.den_ / g, b.den_);
    const std::int64_t num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return {num, den};
}

Rational operator*(const Rational& a, const Rational& b)
{
    // Cross-reduce first to keep intermediates small.
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const auto n1 = g1 == 0 ? a.num_ : a.num_ / g1;
    const auto d2 = g1 == 0 ? b.den_ : b.den_ / g1;
    const auto n2 = g2 == 0 ? b.num_ : b.num_ / g2;
    const auto d1 = g2 == 0 ? a.den_ : a.den_ / g2;
    return {checked_mul(n1, n2), checked_mul(d1, d2)};
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        if (!part.empty() && part.front() == '+') {
            part.remove_prefix(1);
        }
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw DomainError("not a rational number: '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return {parse_int(text)};
    }
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

BumpComb::BumpComb(std::vector<BumpTerm> terms) : terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(),
              [](const BumpTerm& a, const BumpTerm& b) { return a.shift < b.shift; });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].shift == terms_[i - 1].shift) {
            throw DomainError("bump comb terms must have distinct shifts");
        }
    }
}

BumpComb BumpComb::uniform(std::int64_t n, const Rational& amplitude)
{
    if (n < 0) {
        throw DomainError("bump count must be non-negative");
    }
    std::vector<BumpTerm> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k <= n; ++k) {
        terms.push_back({k, amplitude});
    }
    BumpComb comb;
    comb.terms_ = std::move(terms);
    return comb;
}

BumpComb BumpComb::natural(std::int64_t n) { return uniform(n, Rational(1)); }

BumpComb BumpComb::rational(std::int64_t m, std::int64_t n)
{
    if (n < 1) {
        throw DomainError("rational representation needs a positive denominator");
    }
    const std::int64_t sign = m < 0 ? -1 : 1;
    const std::int64_t count = m < 0 ? -m : m;
    return uniform(count, Rational(sign, n));
}

Rational BumpComb::exact_value() const
{
    Rational total;
    for (const BumpTerm& t : terms_) {
        total = total + t.amplitude;
    }
    return total;
}

double BumpComb::operator()(double x) const
{
    if (terms_.empty()) {
        return 0.0;
    }
    // phi_k is centered at k - 1; at most one bump is nonzero at x.
    const auto k = static_cast<std::int64_t>(std::llround(x)) + 1;
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                     [](const BumpTerm& t, std::int64_t s) { return t.shift < s; });
    if (it == terms_.end() || it->shift != k) {
        return 0.0;
    }
    return eval_shifted_scaled(k, it->amplitude.to_double(), x);
}

double BumpComb::integrate(const ApproxConfig& cfg) const
{
    double total = 0.0;
    for (const BumpTerm& t : terms_) {
        const double center = static_cast<double>(t.shift - 1);
        const double pieces[3] = {center - 0.5, center, center + 0.5};
        const auto k = t.shift;
        const double mass =
            integrate_1d([k](double x) { return eval_shifted_scaled(k, 1.0, x); }, pieces, cfg).value;
        total += t.amplitude.to_double() * mass;
    }
    return total;
}

Factor1D BumpComb::as_factor() const
{
    if (terms_.empty()) {
        return {[](double) { return 0.0; }, 0.0, 0.0, {}};
    }
    std::vector<double> breaks;
    breaks.reserve(2 * terms_.size() + 1);
    for (const BumpTerm& t : terms_) {
        const double center = static_cast<double>(t.shift - 1);
        if (breaks.empty() || breaks.back() < center - 0.5) {
            breaks.push_back(center - 0.5);
        }
        breaks.push_back(center);
        breaks.push_back(center + 0.5);
    }
    const double lo = breaks.front();
    const double hi = breaks.back();
    return {[comb = *this](double x) { return comb(x); }, lo, hi, std::move(breaks)};
}

GridArrangement::GridArrangement(std::vector<std::int64_t> dims, Rational amplitude,
                                 std::vector<double> spacings)
    : dims_(std::move(dims)), amplitude_(amplitude), spacings_(std::move(spacings))
{
    for (std::int64_t d : dims_) {
        require_positive(d, "grid extent");
    }
    if (spacings_.empty()) {
        spacings_.assign(dims_.size(), 1.0);
    }
    if (spacings_.size() != dims_.size()) {
        throw DomainError("grid needs one spacing per axis");
    }
    for (double s : spacings_) {
        if (!(s > 0.0) || !std::isfinite(s)) {
            throw DomainError("grid spacings must be positive and finite");
        }
    }
}

Rational GridArrangement::exact_value() const
{
    Rational total = amplitude_;
    for (std::int64_t d : dims_) {
        total = total * Rational(d);
    }
    return total;
}

namespace {

// sum_{i=0}^{count-1} phi(x - i * spacing)
double axis_comb(std::int64_t count, double spacing, double x)
{
    const auto first = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil((x - 0.5) / spacing)));
    const auto last = std::min<std::int64_t>(count - 1, static_cast<std::int64_t>(std::floor((x + 0.5) / spacing)));
    double total = 0.0;
    for (std::int64_t i = first; i <= last; ++i) {
        total += eval_bump(x - static_cast<double>(i) * spacing);
    }
    return total;
}

} // namespace

double GridArrangement::operator()(std::span<const double> point) const
{
    if (point.size() != dims_.size()) {
        throw DomainError("point dimension does not match the grid");
    }
    double value = amplitude_.to_double();
    for (std::size_t a = 0; a < dims_.size() && value != 0.0; ++a) {
        value *= axis_comb(dims_[a], spacings_[a], point[a]);
    }
    return value;
}

std::vector<Factor1D> GridArrangement::axis_factors() const
{
    std::vector<Factor1D> factors;
    factors.reserve(dims_.size());
    for (std::size_t a = 0; a < dims_.size(); ++a) {
        const std::int64_t count = dims_[a];
        const double spacing = spacings_[a];
        std::vector<double> breaks;
        for (std::int64_t i = 0; i < count; ++i) {
            const double c = static_cast<double>(i) * spacing;
            breaks.insert(breaks.end(), {c - 0.5, c, c + 0.5});
        }
        std::sort(breaks.begin(), breaks.end());
        breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
        const double lo = -0.5;
        const double hi = static_cast<double>(count - 1) * spacing + 0.5;
        factors.push_back({[count, spacing](double x) { return axis_comb(count, spacing, x); }, lo, hi,
                           std::move(breaks)});
    }
    return factors;
}

double GridArrangement::integrate(const ApproxConfig& cfg) const
{
    const std::vector<Factor1D> factors = axis_factors();
    return amplitude_.to_double() * integrate_separable(factors, cfg);
}

double nat_value(std::int64_t n, const ApproxConfig& cfg)
{
    if (n < 0) {
        throw DomainError("nat_value requires n >= 0");
    }
    return BumpComb::natural(n).integrate(cfg);
}

double rational_value(std::int64_t m, std::int64_t n, const ApproxConfig& cfg)
{
    if (n < 1) {
        throw DomainError("rational_value requires a denominator >= 1");
    }
    return BumpComb::rational(m, n).integrate(cfg);
}

double rational_value(const Rational& r, const ApproxConfig& cfg) { return rational_value(r.num(), r.den(), cfg); }

double mul_value(std::int64_t a, std::int64_t b, const ApproxConfig& cfg)
{
    require_positive(a, "mul_value: a");
    require_positive(b, "mul_value: b");
    return GridArrangement({a, b}, Rational(1)).integrate(cfg);
}

double pow_value(std::int64_t a, std::int64_t b, const ApproxConfig& cfg)
{
    require_positive(a, "pow_value: a");
    require_positive(b, "pow_value: b");
    constexpr std::int64_t limit = std::int64_t{1} << 53;
    std::int64_t power = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        if (__builtin_mul_overflow(power, a, &power) || power >= limit) {
            throw DomainError("pow_value: a^b must stay below 2^53");
        }
    }
    return GridArrangement(std::vector<std::int64_t>(static_cast<std::size_t>(b), a), Rational(1)).integrate(cfg);
}

std::string_view axiom_name(Axiom axiom)
{
    switch (axiom) {
    case Axiom::add_comm: return "add_comm";
    case Axiom::add_assoc: return "add_assoc";
    case Axiom::mul_comm: return "mul_comm";
    case Axiom::mul_assoc: return "mul_assoc";
    case Axiom::distributive: return "distributive";
    case Axiom::neutral_add: return "neutral_add";
    case Axiom::neutral_mul: return "neutral_mul";
    case Axiom::linearity: return "linearity";
    case Axiom::inversion: return "inversion";
    }
    return "?";
}

Axiom parse_axiom(std::string_view name)
{
    for (Axiom a : all_axioms) {
        if (axiom_name(a) == name) {
            return a;
        }
    }
    throw DomainError("unknown axiom id '" + std::string(name) + "'");
}

std::size_t axiom_arity(Axiom axiom)
{
    switch (axiom) {
    case Axiom::neutral_add:
    case Axiom::neutral_mul:
    case Axiom::inversion: return 1;
    case Axiom::add_comm:
    case Axiom::mul_comm:
    case Axiom::linearity: return 2;
    case Axiom::add_assoc:
    case Axiom::mul_assoc:
    case Axiom::distributive: return 3;
    }
    return 0;
}

bool axiom_requires_naturals(Axiom axiom)
{
    return axiom == Axiom::mul_comm || axiom == Axiom::mul_assoc || axiom == Axiom::distributive ||
           axiom == Axiom::neutral_mul;
}

AxiomCheck check_axiom(Axiom axiom, std::span<const Rational> operands, const ApproxConfig& cfg)
{
    if (operands.size() != axiom_arity(axiom)) {
        throw DomainError(std::string(axiom_name(axiom)) + " takes " + std::to_string(axiom_arity(axiom)) +
                          " operands, got " + std::to_string(operands.size()));
    }
    std::vector<std::int64_t> nat;
    if (axiom_requires_naturals(axiom)) {
        for (const Rational& r : operands) {
            if (!r.is_integer() || r.num() < 1) {
                throw DomainError(std::string(axiom_name(axiom)) + " is defined on positive integers only");
            }
            nat.push_back(r.num());
        }
    }
    auto q = [&](const Rational& r) { return rational_value(r, cfg); };
    const auto& o = operands;

    double lhs = 0.0;
    double rhs = 0.0;
    switch (axiom) {
    case Axiom::add_comm:
        lhs = q(o[0] + o[1]);
        rhs = q(o[1] + o[0]);
        break;
    case Axiom::add_assoc:
        lhs = q((o[0] + o[1]) + o[2]);
        rhs = q(o[0] + (o[1] + o[2]));
        break;
    case Axiom::mul_comm:
        lhs = mul_value(nat[0], nat[1], cfg);
        rhs = mul_value(nat[1], nat[0], cfg);
        break;
    case Axiom::mul_assoc:
        lhs = mul_value(checked_mul(nat[0], nat[1]), nat[2], cfg);
        rhs = mul_value(nat[0], checked_mul(nat[1], nat[2]), cfg);
        break;
    case Axiom::distributive:
        lhs = mul_value(nat[0], checked_add(nat[1], nat[2]), cfg);
        rhs = mul_value(nat[0], nat[1], cfg) + mul_value(nat[0], nat[2], cfg);
        break;
    case Axiom::neutral_add:
        lhs = q(o[0] + Rational(0));
        rhs = q(o[0]);
        break;
    case Axiom::neutral_mul:
        lhs = mul_value(nat[0], 1, cfg);
        rhs = nat_value(nat[0], cfg);
        break;
    case Axiom::linearity:
        lhs = q(o[0] + o[1]);
        rhs = q(o[0]) + q(o[1]);
        break;
    case Axiom::inversion:
        lhs = q(-o[0]);
        rhs = -q(o[0]);
        break;
    }
    const double defect = std::fabs(lhs - rhs);
    return {defect < axiom_defect_threshold, defect, lhs, rhs};
}

} // namespace wavearith
