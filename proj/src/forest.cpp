#include "nnhm/forest.hpp"

#include <algorithm>
#include <cmath>

#include "nnhm/format.hpp"
#include "nnhm/special.hpp"

namespace nnhm {

namespace {

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double v) {
  std::string s = strformat("%.6g", v);
  return s == "-0" ? "0" : s;
}

std::vector<double> exp_ladder(double lo, double hi) {
  // 0.25 and 4 sit where a 1-2-5 ladder would leave a gap around 1
  static const double base[] = {0.1, 0.25, 0.5, 1, 2, 4};
  static const double outer[] = {1, 2, 5};
  std::vector<double> vals(std::begin(base), std::end(base));
  for (int d = 1; d <= 12; ++d) {
    for (double o : outer) {
      vals.push_back(o * std::pow(10.0, d));
      vals.push_back(1.0 / (o * std::pow(10.0, d)));
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<double> out;
  for (double v : vals) {
    double x = std::log(v);
    if (x >= lo - 1e-12 && x <= hi + 1e-12) out.push_back(v);
  }
  while (out.size() > 9) {
    auto one = std::find(out.begin(), out.end(), 1.0);
    std::ptrdiff_t anchor = one == out.end() ? 0 : one - out.begin();
    std::vector<double> thin;
    for (std::size_t i = 0; i < out.size(); ++i)
      if ((static_cast<std::ptrdiff_t>(i) - anchor) % 2 == 0) thin.push_back(out[i]);
    out = std::move(thin);
  }
  return out;
}

struct Frame {
  double lo, hi;
  double left, right;
  double px(double v) const { return left + (v - lo) / (hi - lo) * (right - left); }
};

}  // namespace

std::vector<double> axis_ticks(double lo, double hi, AxisScale scale) {
  if (!(hi > lo)) return {lo};
  if (scale == AxisScale::Exp) return exp_ladder(lo, hi);
  double raw = (hi - lo) / 6.0;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = 10.0 * mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> out;
  for (double k = std::ceil(lo / step - 1e-9); k * step <= hi + 1e-9 * step; k += 1.0) {
    double v = k * step;
    out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  return out;
}

std::string forest_svg(const AnalysisReport& r, const ForestOptions& opts) {
  const double z = special::norm_ppf(0.5 + r.tau.level / 2.0);
  const std::size_t k = r.studies.size();
  const int row_h = 26;
  const int top = opts.title.empty() ? 30 : 50;
  const int rows = static_cast<int>(k) + 3;  // studies, gap, mu, prediction
  const int plot_bottom = top + rows * row_h;
  const int height = plot_bottom + 70;
  const int width = opts.width;
  const bool ex = opts.axis == AxisScale::Exp;

  double lo = std::min({r.mu.lo, r.prediction.lo});
  double hi = std::max({r.mu.hi, r.prediction.hi});
  for (std::size_t i = 0; i < k; ++i) {
    lo = std::min({lo, r.studies[i].y - z * r.studies[i].sigma, r.shrinkage[i].lo});
    hi = std::max({hi, r.studies[i].y + z * r.studies[i].sigma, r.shrinkage[i].hi});
  }
  if (!ex) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  double pad = 0.05 * (hi - lo);
  if (!(pad > 0.0)) pad = 1.0;
  lo -= pad;
  hi += pad;
  Frame f{lo, hi, 0.30 * width, 0.72 * width};
  auto disp = [&](double v) { return fixed(ex ? std::exp(v) : v); };
  auto interval = [&](double m, double a, double b) { return disp(m) + " [" + disp(a) + ", " + disp(b) + "]"; };

  std::string s;
  s += strformat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\" "
      "font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\">\n",
      width, height, width, height);
  s += strformat("<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n", width, height);
  if (!opts.title.empty())
    s += strformat("<text x=\"%d\" y=\"24\" font-size=\"15\" font-weight=\"bold\">%s</text>\n", 10,
                   esc(opts.title).c_str());
  s += strformat("<text x=\"10\" y=\"%d\" font-weight=\"bold\">Study</text>\n", top - 8);
  s += strformat("<text x=\"%.2f\" y=\"%d\" font-weight=\"bold\">Estimate [%g%% CI]</text>\n", f.right + 14.0,
                 top - 8, 100.0 * r.tau.level);

  // reference lines
  double null_v = 0.0;
  if (null_v >= lo && null_v <= hi)
    s += strformat("<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"#444\" stroke-width=\"1\"/>\n",
                   f.px(null_v), top, f.px(null_v), plot_bottom);
  s += strformat(
      "<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"#888\" stroke-dasharray=\"4,3\" "
      "stroke-width=\"1\"/>\n",
      f.px(r.mu.median), top, f.px(r.mu.median), plot_bottom);

  for (std::size_t i = 0; i < k; ++i) {
    const auto& st = r.studies[i];
    const auto& sh = r.shrinkage[i];
    double yc = top + (static_cast<double>(i) + 0.5) * row_h;
    double a = st.y - z * st.sigma, b = st.y + z * st.sigma;
    s += strformat("<text x=\"10\" y=\"%.2f\">%s</text>\n", yc + 1.0, esc(st.label).c_str());
    s += strformat(
        "<line class=\"study\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        f.px(a), yc - 4.0, f.px(b), yc - 4.0);
    s += strformat("<rect x=\"%.2f\" y=\"%.2f\" width=\"7\" height=\"7\" fill=\"black\"/>\n", f.px(st.y) - 3.5,
                   yc - 7.5);
    s += strformat("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\" stroke-width=\"1.5\"/>\n",
                   f.px(sh.lo), yc + 5.0, f.px(sh.hi), yc + 5.0);
    s += strformat("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#999\"/>\n", f.px(sh.median), yc + 5.0);
    s += strformat("<text x=\"%.2f\" y=\"%.2f\">%s</text>\n", f.right + 14.0, yc - 1.0,
                   esc(interval(st.y, a, b)).c_str());
    s += strformat("<text x=\"%.2f\" y=\"%.2f\" fill=\"#777\">%s</text>\n", f.right + 14.0, yc + 11.0,
                   esc(interval(sh.median, sh.lo, sh.hi)).c_str());
  }

  double ym = top + (static_cast<double>(k) + 1.5) * row_h;
  s += strformat("<text x=\"10\" y=\"%.2f\" font-weight=\"bold\">mean (mu)</text>\n", ym + 4.0);
  s += strformat("<polygon class=\"summary\" points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f %.2f,%.2f\" fill=\"#1f4e9c\"/>\n", f.px(r.mu.lo), ym,
                 f.px(r.mu.median), ym - 7.0, f.px(r.mu.hi), ym, f.px(r.mu.median), ym + 7.0);
  s += strformat("<text x=\"%.2f\" y=\"%.2f\">%s</text>\n", f.right + 14.0, ym + 4.0,
                 esc(interval(r.mu.median, r.mu.lo, r.mu.hi)).c_str());

  double yp = ym + row_h;
  s += strformat("<text x=\"10\" y=\"%.2f\" font-weight=\"bold\">prediction</text>\n", yp + 4.0);
  s += strformat("<rect class=\"summary\" x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"6\" fill=\"#8fb3e8\"/>\n", f.px(r.prediction.lo),
                 yp - 3.0, f.px(r.prediction.hi) - f.px(r.prediction.lo));
  s += strformat("<text x=\"%.2f\" y=\"%.2f\">%s</text>\n", f.right + 14.0, yp + 4.0,
                 esc(interval(r.prediction.median, r.prediction.lo, r.prediction.hi)).c_str());

  // axis
  s += strformat("<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"black\" stroke-width=\"1\"/>\n", f.left,
                 plot_bottom, f.right, plot_bottom);
  for (double t : axis_ticks(lo, hi, opts.axis)) {
    double x = f.px(ex ? std::log(t) : t);
    s += strformat("<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"black\" stroke-width=\"1\"/>\n", x,
                   plot_bottom, x, plot_bottom + 5);
    s += strformat("<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\">%s</text>\n", x, plot_bottom + 18,
                   tick_label(t).c_str());
  }
  if (!opts.x_label.empty())
    s += strformat("<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\">%s</text>\n", 0.5 * (f.left + f.right),
                   plot_bottom + 36, esc(opts.x_label).c_str());

  s += strformat("<text x=\"10\" y=\"%d\">\xCF\x84: %s [%s, %s]</text>\n", height - 10, fixed(r.tau.median).c_str(),
                 fixed(r.tau.lo).c_str(), fixed(r.tau.hi).c_str());
  s += "</svg>\n";
  return s;
}

std::string tau_density_svg(const GridPosterior& gp, int width, int height) {
  const double left = 50, right = width - 15.0, top = 15, bottom = height - 40.0;
  double t_hi = gp.tau_quantile(0.995) * 1.15;
  if (!(t_hi > 0.0)) t_hi = 1.0;
  const int n = 200;
  std::vector<double> xs(n + 1), post(n + 1), prior(n + 1);
  double ymax = 0.0;
  for (int i = 0; i <= n; ++i) {
    xs[i] = t_hi * i / n;
    post[i] = gp.tau_density(xs[i]);
    prior[i] = gp.prior().proper() ? gp.prior().density(xs[i]) : 0.0;
    ymax = std::max(ymax, post[i]);
  }
  for (double p : prior) ymax = std::max(ymax, std::isfinite(p) ? std::min(p, 3.0 * ymax) : 0.0);
  if (!(ymax > 0.0)) ymax = 1.0;
  ymax *= 1.05;
  auto px = [&](double t) { return left + t / t_hi * (right - left); };
  auto py = [&](double d) { return bottom - std::min(d, ymax) / ymax * (bottom - top); };
  auto poly = [&](const std::vector<double>& ys) {
    std::string pts;
    for (int i = 0; i <= n; ++i) {
      if (!std::isfinite(ys[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += strformat("%.2f,%.2f", px(xs[i]), py(ys[i]));
    }
    return pts;
  };

  std::string s = strformat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\" "
      "font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\">\n",
      width, height, width, height);
  s += strformat("<rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n", width, height);
  if (gp.prior().proper())
    s += "<polyline fill=\"none\" stroke=\"#888\" stroke-dasharray=\"5,3\" stroke-width=\"1.5\" points=\"" +
         poly(prior) + "\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"" + poly(post) + "\"/>\n";
  s += strformat("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left, bottom, right,
                 bottom);
  for (double t : axis_ticks(0.0, t_hi, AxisScale::Identity)) {
    s += strformat("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", px(t), bottom, px(t),
                   bottom + 5);
    s += strformat("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%s</text>\n", px(t), bottom + 18,
                   tick_label(t).c_str());
  }
  s += strformat("<text x=\"%.2f\" y=\"%d\" text-anchor=\"middle\">\xCF\x84</text>\n", 0.5 * (left + right),
                 height - 6);
  s += "</svg>\n";
  return s;
}

}  // namespace nnhm
