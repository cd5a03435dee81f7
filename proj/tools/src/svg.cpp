#include "lst_cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lst/error.hpp"

namespace lst::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 40.0;

constexpr const char* kPalette[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};
constexpr const char* kDash[] = {"", "6,4", "2,3", "8,3,2,3"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
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

struct Range {
  double lo;
  double hi;
};

Range padded(const Eigen::VectorXd& v) {
  double lo = v.minCoeff();
  double hi = v.maxCoeff();
  if (hi == lo) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_svg(const Dataset& data, std::span<const PlotLine> lines) {
  if (data.p() != 2) fail(ErrorCode::kUnsupportedDimension, "plots need exactly one carrier");
  const Eigen::VectorXd x = data.design().col(1);
  const Eigen::VectorXd& y = data.response();
  const Range xr = padded(x);
  const Range yr = padded(y);
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double v) { return kTop + (yr.hi - v) / (yr.hi - yr.lo) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  out << "<defs><clipPath id=\"plot\"><rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\"/></clipPath></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"#444444\"/>\n";

  // Axis extremes as tick labels.
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444444\">\n";
  out << "<text x=\"" << num(kLeft) << "\" y=\"" << num(kHeight - kBottom + 15) << "\">" << num(xr.lo) << "</text>\n";
  out << "<text x=\"" << num(kWidth - kRight) << "\" y=\"" << num(kHeight - kBottom + 15) << "\" text-anchor=\"end\">"
      << num(xr.hi) << "</text>\n";
  out << "<text x=\"" << num(kLeft - 5) << "\" y=\"" << num(kHeight - kBottom) << "\" text-anchor=\"end\">"
      << num(yr.lo) << "</text>\n";
  out << "<text x=\"" << num(kLeft - 5) << "\" y=\"" << num(kTop + 10) << "\" text-anchor=\"end\">" << num(yr.hi)
      << "</text>\n";
  out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 8) << "\" text-anchor=\"middle\">x</text>\n";
  out << "<text x=\"15\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\">y</text>\n";
  out << "</g>\n";

  out << "<g fill=\"#1f77b4\" fill-opacity=\"0.7\">\n";
  for (Index i = 0; i < data.n(); ++i) {
    out << "<circle cx=\"" << num(sx(x(i))) << "\" cy=\"" << num(sy(y(i))) << "\" r=\"3\"/>\n";
  }
  out << "</g>\n";

  out << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Coefficients& b = lines[k].beta;
    const char* dash = kDash[k % std::size(kDash)];
    out << "<polyline stroke=\"" << kPalette[k % std::size(kPalette)] << '"';
    if (*dash) out << " stroke-dasharray=\"" << dash << '"';
    out << " points=\"" << num(sx(xr.lo)) << ',' << num(sy(b(0) + b(1) * xr.lo)) << ' ' << num(sx(xr.hi)) << ','
        << num(sy(b(0) + b(1) * xr.hi)) << "\"/>\n";
  }
  out << "</g>\n";

  if (!lines.empty()) {
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const double ly = kTop + 16.0 + 16.0 * static_cast<double>(k);
      const double lx = kWidth - kRight - 150.0;
      const char* dash = kDash[k % std::size(kDash)];
      out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 24) << "\" y2=\""
          << num(ly - 4) << "\" stroke=\"" << kPalette[k % std::size(kPalette)] << "\" stroke-width=\"1.5\"";
      if (*dash) out << " stroke-dasharray=\"" << dash << '"';
      out << "/>\n<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly) << "\">" << escape(lines[k].label)
          << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lst::cli
