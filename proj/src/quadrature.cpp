#include "catsize/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace catsize::quad {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half stored).
constexpr int kGlPoints = 15;
constexpr double kGlNode[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
constexpr double kGlWeight[8] = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

using cvec = std::vector<std::complex<double>>;

double max_abs(const cvec& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void add_to(cvec& acc, const cvec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

cvec gl_panel(const Integrand1D& f, double a, double b, cvec& scratch) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    cvec sum(scratch.size(), 0.0);
    for (int i = 0; i < 8; ++i) {
        const double w = kGlWeight[i] * half;
        f(mid + half * kGlNode[i], scratch);
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w * scratch[c];
        if (i == 0) continue;
        f(mid - half * kGlNode[i], scratch);
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w * scratch[c];
    }
    return sum;
}

struct Panel1D {
    double a, b;
    cvec estimate;
    int depth;
};

cvec gl_panel2d(const Integrand2D& f, double ax, double bx, double ay, double by,
                cvec& scratch) {
    const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    cvec sum(scratch.size(), 0.0);
    double xs[kGlPoints], ws[kGlPoints];
    double ys[kGlPoints], wys[kGlPoints];
    for (int i = 0; i < 8; ++i) {
        xs[7 + i] = mx + hx * kGlNode[i];
        ws[7 + i] = kGlWeight[i] * hx;
        ys[7 + i] = my + hy * kGlNode[i];
        wys[7 + i] = kGlWeight[i] * hy;
        if (i == 0) continue;
        xs[7 - i] = mx - hx * kGlNode[i];
        ws[7 - i] = ws[7 + i];
        ys[7 - i] = my - hy * kGlNode[i];
        wys[7 - i] = wys[7 + i];
    }
    for (int i = 0; i < kGlPoints; ++i) {
        for (int j = 0; j < kGlPoints; ++j) {
            const double w = ws[i] * wys[j];
            f(xs[i], ys[j], scratch);
            for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += w * scratch[c];
        }
    }
    return sum;
}

struct Panel2D {
    double ax, bx, ay, by;
    cvec estimate;
    int depth;
};

} // namespace

double ipow(double x, long n) {
    double r = 1.0;
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

std::vector<std::complex<double>> integrate(const Integrand1D& f, double a, double b,
                                            int components, const Options& opts) {
    cvec scratch(components, 0.0);
    cvec total(components, 0.0);

    std::vector<Panel1D> stack;
    stack.push_back({a, b, gl_panel(f, a, b, scratch), 0});
    double scale = std::max(max_abs(stack.back().estimate), opts.abs_tol);
    const double span = b - a;

    double worst_rejected = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        Panel1D p = std::move(stack.back());
        stack.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        cvec left = gl_panel(f, p.a, mid, scratch);
        cvec right = gl_panel(f, mid, p.b, scratch);
        cvec refined(components, 0.0);
        add_to(refined, left);
        add_to(refined, right);
        const double err = max_abs_diff(p.estimate, refined);
        const double local_tol = opts.rel_tol * scale * std::max((p.b - p.a) / span, 1e-3);
        if (err <= local_tol || p.depth >= opts.max_depth) {
            if (err > local_tol) {
                converged = false;
                worst_rejected = std::max(worst_rejected, err);
            }
            add_to(total, refined);
            scale = std::max(scale, max_abs(total));
        } else {
            stack.push_back({p.a, mid, std::move(left), p.depth + 1});
            stack.push_back({mid, p.b, std::move(right), p.depth + 1});
        }
    }
    if (!converged) {
        throw QuadratureError("quadrature did not converge at max refinement depth",
                              total, worst_rejected);
    }
    return total;
}

std::vector<std::complex<double>> integrate2d(const Integrand2D& f,
                                              double ax, double bx,
                                              double ay, double by,
                                              int components, const Options& opts) {
    cvec scratch(components, 0.0);
    cvec total(components, 0.0);

    std::vector<Panel2D> stack;
    stack.push_back({ax, bx, ay, by, gl_panel2d(f, ax, bx, ay, by, scratch), 0});
    double scale = std::max(max_abs(stack.back().estimate), opts.abs_tol);
    const double area = (bx - ax) * (by - ay);

    double worst_rejected = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        Panel2D p = std::move(stack.back());
        stack.pop_back();
        const double mx = 0.5 * (p.ax + p.bx);
        const double my = 0.5 * (p.ay + p.by);
        cvec q00 = gl_panel2d(f, p.ax, mx, p.ay, my, scratch);
        cvec q01 = gl_panel2d(f, p.ax, mx, my, p.by, scratch);
        cvec q10 = gl_panel2d(f, mx, p.bx, p.ay, my, scratch);
        cvec q11 = gl_panel2d(f, mx, p.bx, my, p.by, scratch);
        cvec refined(components, 0.0);
        add_to(refined, q00);
        add_to(refined, q01);
        add_to(refined, q10);
        add_to(refined, q11);
        const double err = max_abs_diff(p.estimate, refined);
        const double frac = (p.bx - p.ax) * (p.by - p.ay) / area;
        const double local_tol = opts.rel_tol * scale * std::max(frac, 1e-4);
        if (err <= local_tol || p.depth >= opts.max_depth_2d) {
            if (err > local_tol) {
                converged = false;
                worst_rejected = std::max(worst_rejected, err);
            }
            add_to(total, refined);
            scale = std::max(scale, max_abs(total));
        } else {
            stack.push_back({p.ax, mx, p.ay, my, std::move(q00), p.depth + 1});
            stack.push_back({p.ax, mx, my, p.by, std::move(q01), p.depth + 1});
            stack.push_back({mx, p.bx, p.ay, my, std::move(q10), p.depth + 1});
            stack.push_back({mx, p.bx, my, p.by, std::move(q11), p.depth + 1});
        }
    }
    if (!converged) {
        throw QuadratureError("2-D quadrature did not converge at max refinement depth",
                              total, worst_rejected);
    }
    return total;
}

} // namespace catsize::quad
