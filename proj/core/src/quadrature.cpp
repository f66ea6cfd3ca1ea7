#include "hfk/quadrature.hpp"
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace hfk {
namespace {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule.
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double component_error(double diff, double resasc, double resabs) {
    double err = std::fabs(diff);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * DBL_EPSILON * resabs;
    if (floor > 0.0 && err < floor)
        err = floor;
    return err;
}

} // namespace

void QuadratureSpec::validate(double a, double b) const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    double prev = a;
    for (double bp : breakpoints) {
        if (!(bp > a && bp < b))
            throw std::invalid_argument("QuadratureSpec: breakpoint outside open interval");
        if (!(bp > prev) && prev != a)
            throw std::invalid_argument("QuadratureSpec: breakpoints must be sorted and unique");
        prev = bp;
    }
}

Complex gk15_panel(const Integrand& f, double a, double b, double& err, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const Complex fc = f(c);
    Complex fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
    }
    evals += 15;

    Complex resg = wg[3] * fc;
    Complex resk = wgk[7] * fc;
    double resabs_re = wgk[7] * std::fabs(fc.real());
    double resabs_im = wgk[7] * std::fabs(fc.imag());
    for (int j = 0; j < 7; ++j) {
        const Complex fsum = fv1[j] + fv2[j];
        resk += wgk[j] * fsum;
        resabs_re += wgk[j] * (std::fabs(fv1[j].real()) + std::fabs(fv2[j].real()));
        resabs_im += wgk[j] * (std::fabs(fv1[j].imag()) + std::fabs(fv2[j].imag()));
        if (j % 2 == 1)
            resg += wg[j / 2] * fsum;
    }

    const Complex reskh = 0.5 * resk;
    double resasc_re = wgk[7] * std::fabs(fc.real() - reskh.real());
    double resasc_im = wgk[7] * std::fabs(fc.imag() - reskh.imag());
    for (int j = 0; j < 7; ++j) {
        resasc_re += wgk[j] * (std::fabs(fv1[j].real() - reskh.real()) +
                               std::fabs(fv2[j].real() - reskh.real()));
        resasc_im += wgk[j] * (std::fabs(fv1[j].imag() - reskh.imag()) +
                               std::fabs(fv2[j].imag() - reskh.imag()));
    }

    const double err_re =
        component_error((resk.real() - resg.real()) * h, resasc_re * std::fabs(h),
                        resabs_re * std::fabs(h));
    const double err_im =
        component_error((resk.imag() - resg.imag()) * h, resasc_im * std::fabs(h),
                        resabs_im * std::fabs(h));
    err = std::hypot(err_re, err_im);
    return resk * h;
}

namespace {

struct Panel {
    double a, b;
    Complex value;
    double err;
    long seq;
    bool splittable;
};

struct PanelOrder {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err)
            return p.err < q.err;      // largest error on top
        return p.seq > q.seq;          // deterministic tie-break
    }
};

} // namespace

IntegralResult integrate_complex(const Integrand& f, double a, double b,
                                 const QuadratureSpec& spec) {
    if (!(a < b))
        throw std::invalid_argument("integrate_complex: requires a < b");
    spec.validate(a, b);

    IntegralResult out;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    std::vector<Panel> done;
    long seq = 0;

    Complex total = 0.0;
    double total_err = 0.0;

    auto push_panel = [&](double lo, double hi) {
        Panel p;
        p.a = lo;
        p.b = hi;
        p.seq = seq++;
        p.value = gk15_panel(f, lo, hi, p.err, out.evaluations);
        const double width_floor = 50.0 * DBL_EPSILON *
            std::max({std::fabs(lo), std::fabs(hi), 1.0});
        p.splittable = (hi - lo) > width_floor;
        total += p.value;
        total_err += p.err;
        queue.push(p);
    };

    double lo = a;
    for (double bp : spec.breakpoints) {
        push_panel(lo, bp);
        lo = bp;
    }
    push_panel(lo, b);

    int panels = static_cast<int>(queue.size());
    while (panels < spec.max_subdivisions) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (total_err <= tol)
            break;
        if (queue.empty())
            break;
        Panel worst = queue.top();
        if (!worst.splittable || worst.err == 0.0) {
            // nothing left that subdivision can improve
            break;
        }
        queue.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
        ++panels;
    }

    // re-sum in interval order so the result does not depend on the queue's
    // drain sequence
    while (!queue.empty()) {
        done.push_back(queue.top());
        queue.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    Complex value = 0.0;
    double err = 0.0;
    for (const Panel& p : done) {
        value += p.value;
        err += p.err;
    }
    out.value = value;
    out.err_estimate = err;
    out.tolerance_met = err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
    return out;
}

IntegralResult integrate_complex_2d(const Integrand2D& f, const Rectangle& dom,
                                    const QuadratureSpec& spec) {
    if (!(dom.ax < dom.bx) || !(dom.ay < dom.by))
        throw std::invalid_argument("integrate_complex_2d: domain axes must be ordered");

    QuadratureSpec outer = spec;
    outer.breakpoints = dom.x_breakpoints;
    outer.validate(dom.ax, dom.bx);

    QuadratureSpec inner = spec;
    inner.breakpoints = dom.y_breakpoints;
    inner.abs_tol = 0.25 * spec.abs_tol / (dom.bx - dom.ax);
    inner.rel_tol = 0.25 * spec.rel_tol;
    inner.validate(dom.ay, dom.by);

    long inner_evals = 0;
    double inner_err_sum = 0.0;
    long inner_calls = 0;
    bool inner_ok = true;

    Integrand slice = [&](double x) {
        IntegralResult r = integrate_complex(
            [&](double y) { return f(x, y); }, dom.ay, dom.by, inner);
        inner_evals += r.evaluations;
        inner_err_sum += r.err_estimate;
        ++inner_calls;
        inner_ok = inner_ok && r.tolerance_met;
        return r.value;
    };

    IntegralResult out = integrate_complex(slice, dom.ax, dom.bx, outer);
    out.evaluations += inner_evals;
    if (inner_calls > 0)
        out.err_estimate += (inner_err_sum / static_cast<double>(inner_calls)) *
                            (dom.bx - dom.ax);
    out.tolerance_met =
        inner_ok && out.err_estimate <=
                        std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
    return out;
}

} // namespace hfk
