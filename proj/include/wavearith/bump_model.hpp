#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wavearith/quadrature.hpp"

namespace wavearith {

/// Exact rational m/n kept in lowest terms with n > 0.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return {-num_, den_}; }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Parses "m" or "m/n".
Rational parse_rational(std::string_view text);

struct BumpTerm {
    std::int64_t shift;  // k: the bump phi_k sits on [k - 3/2, k - 1/2]
    Rational amplitude;
};

/// A 1D sum of disjointly supported, amplitude-scaled shifted bumps. The
/// represented number is the sum of the amplitudes; integrate() recovers it
/// by quadrature.
class BumpComb {
public:
    BumpComb() = default;
    /// Throws DomainError if two terms share a shift.
    explicit BumpComb(std::vector<BumpTerm> terms);

    /// n unit bumps at shifts 1..n; n = 0 is the empty comb.
    static BumpComb natural(std::int64_t n);
    /// |m| bumps of amplitude sgn(m)/n.
    static BumpComb rational(std::int64_t m, std::int64_t n);
    static BumpComb rational(const Rational& r) { return rational(r.num(), r.den()); }
    /// n bumps of the given common amplitude.
    static BumpComb uniform(std::int64_t n, const Rational& amplitude);

    std::span<const BumpTerm> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational exact_value() const;

    double operator()(double x) const;

    /// Quadrature over each bump's support, summed.
    double integrate(const ApproxConfig& cfg) const;

    /// The comb as a separable factor over its support, with break points at
    /// the bump junctions.
    Factor1D as_factor() const;

private:
    std::vector<BumpTerm> terms_;  // sorted by shift
};

/// An amplitude-scaled tensor grid of product bumps, one bump per index
/// vector in [0, d_1) x ... x [0, d_k); bump centers lie at index * spacing.
class GridArrangement {
public:
    GridArrangement(std::vector<std::int64_t> dims, Rational amplitude,
                    std::vector<double> spacings = {});

    std::span<const std::int64_t> dims() const { return dims_; }
    std::span<const double> spacings() const { return spacings_; }
    const Rational& amplitude() const { return amplitude_; }

    /// amplitude * prod(dims), exact.
    Rational exact_value() const;

    double operator()(std::span<const double> point) const;

    /// One comb-like factor per axis; the grid is their tensor product.
    std::vector<Factor1D> axis_factors() const;

    /// amplitude * product of the axis-factor integrals.
    double integrate(const ApproxConfig& cfg) const;

private:
    std::vector<std::int64_t> dims_;
    Rational amplitude_;
    std::vector<double> spacings_;
};

double nat_value(std::int64_t n, const ApproxConfig& cfg = {});
double rational_value(std::int64_t m, std::int64_t n, const ApproxConfig& cfg = {});
double rational_value(const Rational& r, const ApproxConfig& cfg = {});
double mul_value(std::int64_t a, std::int64_t b, const ApproxConfig& cfg = {});
/// Throws DomainError unless a^b < 2^53.
double pow_value(std::int64_t a, std::int64_t b, const ApproxConfig& cfg = {});

enum class Axiom {
    add_comm,
    add_assoc,
    mul_comm,
    mul_assoc,
    distributive,
    neutral_add,
    neutral_mul,
    linearity,
    inversion,
};

inline constexpr Axiom all_axioms[] = {
    Axiom::add_comm,    Axiom::add_assoc,   Axiom::mul_comm,  Axiom::mul_assoc, Axiom::distributive,
    Axiom::neutral_add, Axiom::neutral_mul, Axiom::linearity, Axiom::inversion,
};

std::string_view axiom_name(Axiom axiom);
/// Throws DomainError on an unknown name.
Axiom parse_axiom(std::string_view name);
std::size_t axiom_arity(Axiom axiom);
/// mul_comm, mul_assoc, distributive and neutral_mul need positive integers;
/// the bump model has no rational-by-rational product.
bool axiom_requires_naturals(Axiom axiom);

struct AxiomCheck {
    bool holds;
    double defect;
    double lhs;
    double rhs;
};

inline constexpr double axiom_defect_threshold = 1e-8;

/// Evaluates both sides of the identity through the bump representations.
AxiomCheck check_axiom(Axiom axiom, std::span<const Rational> operands, const ApproxConfig& cfg = {});

} // namespace wavearith
