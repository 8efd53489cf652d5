#include "ect/svg.hpp"

#include <algorithm>
#include <sstream>

namespace ect {

namespace {

constexpr double kWidth = 640, kHeight = 400, kMargin = 48;

struct Mapper {
    double x0, x1, y0, y1;

    double x(double v) const {
        return kMargin + (v - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
    }
    double y(double v) const {
        return kHeight - kMargin - (v - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
    }
};

double approx(const Rational& q) { return static_cast<double>(q); }

void pad(double& lo, double& hi) {
    if (hi - lo < 1e-9) {
        lo -= 1;
        hi += 1;
    }
}

std::string line(const Mapper& m, double ax, double ay, double bx, double by,
                 const char* style = "stroke:#1f5fa8;stroke-width:2") {
    std::ostringstream s;
    s << "  <line x1=\"" << m.x(ax) << "\" y1=\"" << m.y(ay) << "\" x2=\"" << m.x(bx)
      << "\" y2=\"" << m.y(by) << "\" style=\"" << style << "\"/>\n";
    return s.str();
}

std::string dot(const Mapper& m, double cx, double cy, bool filled) {
    std::ostringstream s;
    s << "  <circle cx=\"" << m.x(cx) << "\" cy=\"" << m.y(cy) << "\" r=\"4\" fill=\""
      << (filled ? "#1f5fa8" : "white") << "\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    return s.str();
}

std::string axes(const Mapper& m) {
    std::ostringstream s;
    double y_axis_x = std::clamp(0.0, m.x0, m.x1);
    double x_axis_y = std::clamp(0.0, m.y0, m.y1);
    s << line(m, m.x0, x_axis_y, m.x1, x_axis_y, "stroke:#999;stroke-width:1");
    s << line(m, y_axis_x, m.y0, y_axis_x, m.y1, "stroke:#999;stroke-width:1");
    return s.str();
}

}  // namespace

std::string render_svg(const AnyCurve& curve) {
    std::ostringstream body;
    Mapper m{};

    if (const auto* step = std::get_if<StepCurve>(&curve)) {
        const auto& bp = step->breakpoints();
        const auto& vals = step->values();
        double lo_x, hi_x;
        if (bp.empty()) {
            lo_x = -1;
            hi_x = 1;
        } else {
            lo_x = approx(bp.front()) - 1;
            hi_x = approx(bp.back()) + 1;
        }
        double lo_y = approx(*std::min_element(vals.begin(), vals.end()));
        double hi_y = approx(*std::max_element(vals.begin(), vals.end()));
        pad(lo_x, hi_x);
        pad(lo_y, hi_y);
        m = Mapper{lo_x, hi_x, lo_y, hi_y};
        body << axes(m);
        // horizontal segments per interval
        for (std::size_t i = 0; i < vals.size(); ++i) {
            double a = i == 0 ? lo_x : approx(bp[i - 1]);
            double b = i == bp.size() ? hi_x : approx(bp[i]);
            body << line(m, a, approx(vals[i]), b, approx(vals[i]));
        }
        // right continuity made visible: closed dot at the value taken at
        // the breakpoint, open dot at the one-sided limit not taken.
        for (std::size_t i = 0; i < bp.size(); ++i) {
            double x = approx(bp[i]);
            double left = approx(vals[i]);
            double right = approx(vals[i + 1]);
            bool takes_right = step->continuity() == Continuity::Right;
            body << dot(m, x, takes_right ? left : right, false);
            body << dot(m, x, takes_right ? right : left, true);
        }
    } else {
        const auto& pl = std::get<PiecewiseLinearCurve>(curve);
        const auto& knots = pl.knots();
        const auto& vals = pl.values();
        double lo_x = approx(knots.front()), hi_x = approx(knots.back());
        double lo_y = approx(*std::min_element(vals.begin(), vals.end()));
        double hi_y = approx(*std::max_element(vals.begin(), vals.end()));
        pad(lo_x, hi_x);
        pad(lo_y, hi_y);
        m = Mapper{lo_x, hi_x, lo_y, hi_y};
        body << axes(m);
        std::ostringstream pts;
        for (std::size_t i = 0; i < knots.size(); ++i)
            pts << m.x(approx(knots[i])) << "," << m.y(approx(vals[i])) << " ";
        body << "  <polyline points=\"" << pts.str()
             << "\" fill=\"none\" style=\"stroke:#1f5fa8;stroke-width:2\"/>\n";
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
}

}  // namespace ect
