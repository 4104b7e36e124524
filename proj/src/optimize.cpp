#include "iontrap/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace iontrap {

MinimizeResult brent_minimize(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int max_iter) {
    if (!(a < b))
        throw PreconditionError("brent_minimize: need a < b");
    constexpr double kGold = 0.3819660112501051; // 2 - golden ratio
    int evals = 0;
    auto eval = [&](double x) {
        ++evals;
        return f(x);
    };

    double x = a + kGold * (b - a), w = x, v = x;
    double fx = eval(x), fw = fx, fv = fx;
    const double fa = eval(a), fb = eval(b);
    double d = 0, e = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        const double xm = 0.5 * (a + b);
        const double tol1 = rel_tol * std::abs(x) + 1e-300;
        const double tol2 = 2 * tol1;
        if (std::abs(x - xm) <= tol2 - 0.5 * (b - a))
            break;
        bool parabolic_ok = false;
        if (std::abs(e) > tol1) {
            // trial parabolic fit through (x, w, v)
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2 * (q - r);
            if (q > 0)
                p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2)
                    d = (xm > x) ? tol1 : -tol1;
                parabolic_ok = true;
            }
        }
        if (!parabolic_ok) {
            e = (x >= xm) ? a - x : b - x;
            d = kGold * e;
        }
        const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
        const double fu = eval(u);
        if (fu <= fx) {
            if (u >= x)
                a = x;
            else
                b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x)
                a = u;
            else
                b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    if (fx >= std::min(fa, fb))
        throw NoMinimum("objective is monotone on the bracket");
    return {x, fx, evals};
}

double brent_root(const std::function<double(double)>& f, double a, double b, double x_tol,
                  int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0)
        return a;
    if (fb == 0)
        return b;
    if ((fa > 0) == (fb > 0))
        throw NoSignChange("no sign change on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2 * 2.22e-16 * std::abs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2 * xm * s;
                q = 1 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2 * xm * qq * (qq - r) - (b - a) * (r - 1));
                q = (qq - 1) * (r - 1) * (s - 1);
            }
            if (p > 0)
                q = -q;
            p = std::abs(p);
            if (2 * p < std::min(3 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

} // namespace iontrap
