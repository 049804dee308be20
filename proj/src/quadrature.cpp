#include "wavearith/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "wavearith/errors.hpp"

namespace wavearith {

void ApproxConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) || !std::isfinite(abs_tol)) {
        throw DomainError("quadrature tolerances must be positive and finite");
    }
    if (grid_per_unit < 16) {
        throw DomainError("grid_per_unit must be at least 16");
    }
    if (max_depth < 1) {
        throw DomainError("max_depth must be at least 1");
    }
}

void Box2D::validate() const
{
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw DomainError("box bounds must satisfy lo < hi on both axes");
    }
}

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
    int depth;

    bool operator<(const Segment& other) const { return error < other.error; }
};

double sample(const Func1D& f, double x)
{
    const double y = f(x);
    if (!std::isfinite(y)) {
        throw DomainError("integrand is not finite at x = " + std::to_string(x));
    }
    return y;
}

Segment gauss_kronrod(const Func1D& f, double lo, double hi, int depth)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = sample(f, center);
    double res_g = fc * wg[3];
    double res_k = fc * wgk[7];
    double res_abs = std::fabs(res_k);
    double f1[7];
    double f2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        f1[j] = sample(f, center - dx);
        f2[j] = sample(f, center + dx);
        const double pair = f1[j] + f2[j];
        res_k += wgk[j] * pair;
        res_abs += wgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
        if (j % 2 == 1) {
            res_g += wg[j / 2] * pair;
        }
    }
    const double mean = 0.5 * res_k;
    double res_asc = wgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        res_asc += wgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
    }

    const double value = res_k * half;
    res_abs *= std::fabs(half);
    res_asc *= std::fabs(half);
    double error = std::fabs((res_k - res_g) * half);
    if (res_asc != 0.0 && error != 0.0) {
        error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
    }
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::max(50.0 * eps * res_abs, error);
    }
    return {lo, hi, value, error, depth};
}

constexpr std::size_t max_segments = 200000;

bool within_tolerance(double value, double error, const ApproxConfig& cfg)
{
    return error <= cfg.rel_tol * std::fabs(value) + cfg.abs_tol;
}

} // namespace

QuadResult integrate_1d(const Func1D& f, double lo, double hi, const ApproxConfig& cfg)
{
    if (!(lo <= hi)) {
        throw DomainError("integrate_1d requires lo <= hi");
    }
    if (lo == hi) {
        return {};
    }

    std::priority_queue<Segment> work;
    work.push(gauss_kronrod(f, lo, hi, 0));
    double value = work.top().value;
    double error = work.top().error;

    while (!within_tolerance(value, error, cfg)) {
        Segment worst = work.top();
        if (worst.depth + 1 > cfg.max_depth || work.size() >= max_segments) {
            throw ConvergenceError("integrate_1d: max_depth " + std::to_string(cfg.max_depth) +
                                   " exceeded on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                   "], error estimate " + std::to_string(error));
        }
        work.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Segment left = gauss_kronrod(f, worst.lo, mid, worst.depth + 1);
        const Segment right = gauss_kronrod(f, mid, worst.hi, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        work.push(left);
        work.push(right);
    }

    // Resum in a fixed order so the result does not carry the running-update drift.
    std::vector<Segment> segments;
    segments.reserve(work.size());
    while (!work.empty()) {
        segments.push_back(work.top());
        work.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    QuadResult result;
    for (const Segment& s : segments) {
        result.value += s.value;
        result.err_estimate += s.error;
    }
    result.intervals = segments.size();
    return result;
}

QuadResult integrate_1d(const Func1D& f, std::span<const double> breakpoints, const ApproxConfig& cfg)
{
    QuadResult total;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const QuadResult piece = integrate_1d(f, breakpoints[i - 1], breakpoints[i], cfg);
        total.value += piece.value;
        total.err_estimate += piece.err_estimate;
        total.intervals += piece.intervals;
    }
    return total;
}

double Factor1D::integrate(const ApproxConfig& cfg) const
{
    if (breaks.empty()) {
        return integrate_1d(fn, lo, hi, cfg).value;
    }
    std::vector<double> points;
    points.reserve(breaks.size() + 2);
    points.push_back(lo);
    for (double b : breaks) {
        if (b > lo && b < hi) {
            points.push_back(b);
        }
    }
    points.push_back(hi);
    return integrate_1d(fn, points, cfg).value;
}

double integrate_separable(std::span<const Factor1D> factors, const ApproxConfig& cfg)
{
    double product = 1.0;
    for (const Factor1D& factor : factors) {
        product *= factor.integrate(cfg);
    }
    return product;
}

std::size_t grid_intervals(double length, const ApproxConfig& cfg)
{
    const double n = std::ceil(length * static_cast<double>(cfg.grid_per_unit) - 1e-9);
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

namespace {

struct AxisGrid {
    double lo;
    double step;
    std::size_t intervals;

    AxisGrid(double a, double b, const ApproxConfig& cfg)
        : lo(a), intervals(grid_intervals(b - a, cfg))
    {
        step = (b - a) / static_cast<double>(intervals);
    }

    double point(std::size_t k) const { return lo + static_cast<double>(k) * step; }
    double weight(std::size_t k) const { return (k == 0 || k == intervals) ? 0.5 * step : step; }
};

} // namespace

double l2_distance_2d(const Func2D& f, const Func2D& g, const Box2D& box, const ApproxConfig& cfg)
{
    box.validate();
    const AxisGrid gx(box.x_lo, box.x_hi, cfg);
    const AxisGrid gy(box.y_lo, box.y_hi, cfg);
    double total = 0.0;
    for (std::size_t i = 0; i <= gx.intervals; ++i) {
        const double x = gx.point(i);
        double column = 0.0;
        for (std::size_t j = 0; j <= gy.intervals; ++j) {
            const double y = gy.point(j);
            const double d = f(x, y) - g(x, y);
            if (!std::isfinite(d)) {
                throw DomainError("l2_distance_2d: non-finite integrand");
            }
            column += gy.weight(j) * d * d;
        }
        total += gx.weight(i) * column;
    }
    return std::sqrt(total);
}

SeparableField2D::SeparableField2D(Basis x_basis, Basis y_basis)
    : x_basis_(std::move(x_basis)), y_basis_(std::move(y_basis)),
      coeffs_(x_basis_->size() * y_basis_->size(), 0.0)
{
}

double SeparableField2D::operator()(double x, double y) const
{
    std::vector<std::pair<std::size_t, double>> ux;
    for (std::size_t i = 0; i < x_size(); ++i) {
        const Factor1D& u = (*x_basis_)[i];
        if (x >= u.lo && x <= u.hi) {
            ux.emplace_back(i, u.fn(x));
        }
    }
    if (ux.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < y_size(); ++j) {
        const Factor1D& v = (*y_basis_)[j];
        if (y < v.lo || y > v.hi) {
            continue;
        }
        const double vy = v.fn(y);
        for (const auto& [i, uval] : ux) {
            total += coefficient(i, j) * uval * vy;
        }
    }
    return total;
}

std::vector<double> SeparableField2D::x_marginal(const ApproxConfig& cfg) const
{
    std::vector<double> mass(y_size());
    for (std::size_t j = 0; j < y_size(); ++j) {
        mass[j] = (*y_basis_)[j].integrate(cfg);
    }
    std::vector<double> weights(x_size(), 0.0);
    for (std::size_t i = 0; i < x_size(); ++i) {
        for (std::size_t j = 0; j < y_size(); ++j) {
            weights[i] += coefficient(i, j) * mass[j];
        }
    }
    return weights;
}

std::vector<double> SeparableField2D::y_marginal(const ApproxConfig& cfg) const
{
    std::vector<double> mass(x_size());
    for (std::size_t i = 0; i < x_size(); ++i) {
        mass[i] = (*x_basis_)[i].integrate(cfg);
    }
    std::vector<double> weights(y_size(), 0.0);
    for (std::size_t i = 0; i < x_size(); ++i) {
        for (std::size_t j = 0; j < y_size(); ++j) {
            weights[j] += coefficient(i, j) * mass[i];
        }
    }
    return weights;
}

double SeparableField2D::integral(const ApproxConfig& cfg) const
{
    const std::vector<double> wx = x_marginal(cfg);
    double total = 0.0;
    for (std::size_t i = 0; i < x_size(); ++i) {
        if (wx[i] != 0.0) {
            total += wx[i] * (*x_basis_)[i].integrate(cfg);
        }
    }
    return total;
}

SeparableField2D SeparableField2D::operator-(const SeparableField2D& other) const
{
    if (x_basis_ != other.x_basis_ || y_basis_ != other.y_basis_) {
        throw DomainError("SeparableField2D difference requires shared bases");
    }
    SeparableField2D out(x_basis_, y_basis_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
    }
    return out;
}

namespace {

struct GramEntry {
    std::size_t row;
    std::size_t col;
    double value;
};

// Trapezoid inner products of the basis functions on the axis grid. Only
// pairs whose sampled supports overlap produce entries; both (a, b) and
// (b, a) are emitted.
std::vector<GramEntry> gram_matrix(const std::vector<Factor1D>& basis, const AxisGrid& grid)
{
    struct Sampled {
        std::size_t first = 1;
        std::size_t last = 0;  // empty when first > last
        std::vector<double> values;
    };
    std::vector<Sampled> sampled(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Factor1D& f = basis[b];
        const double from = std::ceil((f.lo - grid.lo) / grid.step - 1e-9);
        const double to = std::floor((f.hi - grid.lo) / grid.step + 1e-9);
        const double first = std::max(0.0, from);
        const double last = std::min(static_cast<double>(grid.intervals), to);
        if (first > last) {
            continue;
        }
        Sampled& s = sampled[b];
        s.first = static_cast<std::size_t>(first);
        s.last = static_cast<std::size_t>(last);
        s.values.resize(s.last - s.first + 1);
        for (std::size_t k = s.first; k <= s.last; ++k) {
            const double v = f.fn(grid.point(k));
            if (!std::isfinite(v)) {
                throw DomainError("l2_norm_2d: non-finite basis sample");
            }
            s.values[k - s.first] = v;
        }
    }

    std::vector<GramEntry> entries;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const Sampled& sa = sampled[a];
        if (sa.first > sa.last) {
            continue;
        }
        for (std::size_t b = a; b < basis.size(); ++b) {
            const Sampled& sb = sampled[b];
            if (sb.first > sb.last) {
                continue;
            }
            const std::size_t from = std::max(sa.first, sb.first);
            const std::size_t to = std::min(sa.last, sb.last);
            if (from > to) {
                continue;
            }
            double dot = 0.0;
            for (std::size_t k = from; k <= to; ++k) {
                dot += grid.weight(k) * sa.values[k - sa.first] * sb.values[k - sb.first];
            }
            if (dot == 0.0) {
                continue;
            }
            entries.push_back({a, b, dot});
            if (a != b) {
                entries.push_back({b, a, dot});
            }
        }
    }
    return entries;
}

} // namespace

double l2_norm_2d(const SeparableField2D& field, const Box2D& box, const ApproxConfig& cfg)
{
    box.validate();
    const AxisGrid gx(box.x_lo, box.x_hi, cfg);
    const AxisGrid gy(box.y_lo, box.y_hi, cfg);
    const std::size_t nx = field.x_size();
    const std::size_t ny = field.y_size();

    const std::vector<GramEntry> gram_x = gram_matrix(*field.x_basis(), gx);
    const std::vector<GramEntry> gram_y = gram_matrix(*field.y_basis(), gy);

    // E = C * Gy
    std::vector<double> cg(nx * ny, 0.0);
    for (const GramEntry& e : gram_y) {
        for (std::size_t i = 0; i < nx; ++i) {
            cg[i * ny + e.row] += field.coefficient(i, e.col) * e.value;
        }
    }
    // sum over Gx(i, i') * <C[i, :], E[i', :]>
    double total = 0.0;
    for (const GramEntry& e : gram_x) {
        double dot = 0.0;
        for (std::size_t j = 0; j < ny; ++j) {
            dot += field.coefficient(e.row, j) * cg[e.col * ny + j];
        }
        total += e.value * dot;
    }
    return std::sqrt(std::max(0.0, total));
}

} // namespace wavearith
