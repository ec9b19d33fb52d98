#include "pinchkit/svg.hpp"

#include <sstream>

#include "pinchkit/invariants.hpp"

namespace pinchkit {

namespace {

constexpr std::int64_t kUnit = 16;
constexpr std::int64_t kMargin = 48;

struct Frame {
  LatticeBox box;

  std::int64_t x(std::int64_t e) const { return kMargin + (e - box.e_min) * kUnit; }
  std::int64_t y(std::int64_t b) const { return kMargin + (box.b_max - b) * kUnit; }
  std::int64_t width() const { return 2 * kMargin + (box.e_max - box.e_min) * kUnit; }
  std::int64_t height() const { return 2 * kMargin + (box.b_max - box.b_min) * kUnit; }
};

std::string point_text(const LatticePoint& pt) {
  return "(" + std::to_string(pt.e) + ", " + std::to_string(pt.b) + ")";
}

// The two boundary rays of a wedge, run up to one row past the box top.
void wedge_arms(std::ostream& out, const Frame& f, const Wedge& w, const char* stroke,
                const char* id) {
  const std::int64_t top = f.box.b_max + 1;
  const std::int64_t rise = top - w.apex_b();
  out << "  <polyline id=\"" << id << "\" points=\"" << f.x(w.apex_e() - 2 * rise) << ','
      << f.y(top) << ' ' << f.x(w.apex_e()) << ',' << f.y(w.apex_b()) << ' '
      << f.x(w.apex_e() + 2 * rise) << ',' << f.y(top)
      << "\" fill=\"none\" stroke=\"" << stroke
      << "\" stroke-width=\"2\" stroke-dasharray=\"6,4\" clip-path=\"url(#window)\"/>\n";
}

}  // namespace

std::vector<LabeledPoint> reference_fillings(const TorusKnot& k) {
  if (k.p() == 4 && k.q() == 9) return {{{-34, 1}, "F_min"}};
  return {};
}

std::string render_geography_svg(const TorusKnot& k, const LatticeBox& box) {
  const Frame f{box};
  const Wedge wf = pinch_wedge(k);
  const Wedge ws = sigma_wedge(k);
  const Wedge wu = upsilon_wedge(k);
  const RealizableSet realizable = realizable_set(k, box);

  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width()
      << "\" height=\"" << f.height() << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height()
      << "\">\n";
  out << "  <title>" << to_string(k) << " geography: " << to_string(realizable.status)
      << "</title>\n";
  out << "  <defs><clipPath id=\"window\"><rect x=\"" << f.x(box.e_min) << "\" y=\""
      << f.y(box.b_max) << "\" width=\"" << f.x(box.e_max) - f.x(box.e_min) << "\" height=\""
      << f.y(box.b_min) - f.y(box.b_max) << "\"/></clipPath></defs>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // W_F, shaded.
  {
    const std::int64_t top = box.b_max + 1;
    const std::int64_t rise = top - wf.apex_b();
    out << "  <polygon id=\"pinch-wedge\" points=\"" << f.x(wf.apex_e() - 2 * rise) << ','
        << f.y(top) << ' ' << f.x(wf.apex_e()) << ',' << f.y(wf.apex_b()) << ' '
        << f.x(wf.apex_e() + 2 * rise) << ',' << f.y(top)
        << "\" fill=\"#c6dbef\" stroke=\"none\" clip-path=\"url(#window)\"/>\n";
  }

  // Axes: e along the bottom row of the box, b at e = 0 when visible.
  const std::int64_t axis_e = (box.e_min <= 0 && 0 <= box.e_max) ? 0 : box.e_max;
  out << "  <line x1=\"" << f.x(box.e_min) << "\" y1=\"" << f.y(box.b_min) << "\" x2=\""
      << f.x(box.e_max) + kUnit << "\" y2=\"" << f.y(box.b_min)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <line x1=\"" << f.x(axis_e) << "\" y1=\"" << f.y(box.b_min) << "\" x2=\""
      << f.x(axis_e) << "\" y2=\"" << f.y(box.b_max) - kUnit
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  <text x=\"" << f.x(box.e_max) + kUnit + 4 << "\" y=\"" << f.y(box.b_min) + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">e</text>\n";
  out << "  <text x=\"" << f.x(axis_e) - 4 << "\" y=\"" << f.y(box.b_max) - kUnit - 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">b</text>\n";

  wedge_arms(out, f, ws, "#2171b5", "sigma-wedge");
  wedge_arms(out, f, wu, "#cb181d", "upsilon-wedge");
  out << "  <text x=\"" << f.x(ws.apex_e()) << "\" y=\"" << f.y(box.b_min) + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#2171b5\" "
         "text-anchor=\"middle\">2&#963;=" << ws.apex_e() << "</text>\n";
  out << "  <text x=\"" << f.x(wu.apex_e()) << "\" y=\"" << f.y(box.b_min) + 32
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#cb181d\" "
         "text-anchor=\"middle\">4&#965;=" << wu.apex_e() << "</text>\n";

  // Parity-valid lattice points; members of W_F drawn larger.
  out << "  <g id=\"lattice\">\n";
  for (std::int64_t b = box.b_min; b <= box.b_max; ++b) {
    for (std::int64_t e = box.e_min; e <= box.e_max; ++e) {
      if (e % 2 != 0 || (((e - 2 * b) % 4) + 4) % 4 != 0) continue;
      const bool member = wf.contains(e, b);
      out << "    <circle cx=\"" << f.x(e) << "\" cy=\"" << f.y(b) << "\" r=\""
          << (member ? "2.5" : "1.5") << "\" fill=\"" << (member ? "#08306b" : "#969696")
          << "\"/>\n";
    }
  }
  out << "  </g>\n";

  const LatticePoint apex = wf.apex();
  out << "  <circle id=\"pinch-apex\" cx=\"" << f.x(apex.e) << "\" cy=\"" << f.y(apex.b)
      << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  out << "  <text x=\"" << f.x(apex.e) + 8 << "\" y=\"" << f.y(apex.b) + 14
      << "\" font-family=\"sans-serif\" font-size=\"12\">(e(F), b1(F)) = " << point_text(apex)
      << "</text>\n";
  for (const LabeledPoint& ref : reference_fillings(k)) {
    out << "  <circle class=\"reference\" cx=\"" << f.x(ref.point.e) << "\" cy=\""
        << f.y(ref.point.b) << "\" r=\"5\" fill=\"none\" stroke=\"#238b45\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << f.x(ref.point.e) + 8 << "\" y=\"" << f.y(ref.point.b) - 6
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#238b45\">" << ref.label << ' '
        << point_text(ref.point) << "</text>\n";
  }
  out << "  <text x=\"" << kMargin << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
      << to_string(k) << "  status: " << to_string(realizable.status) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string format_geography_listing(const TorusKnot& k, const LatticeBox& box) {
  const RealizableSet rs = realizable_set(k, box);
  const Wedge wf = pinch_wedge(k);
  const Wedge ws = sigma_wedge(k);
  const Wedge wu = upsilon_wedge(k);

  std::ostringstream out;
  out.imbue(std::locale::classic());
  const auto list = [&out](const char* name, const std::vector<LatticePoint>& pts) {
    out << name << " (" << pts.size() << "):";
    for (const LatticePoint& pt : pts) out << ' ' << point_text(pt);
    out << '\n';
  };
  out << "knot: " << to_string(k) << '\n';
  out << "status: " << to_string(rs.status) << '\n';
  out << "W_F apex: " << point_text(wf.apex()) << '\n';
  out << "W_sigma apex: " << point_text(ws.apex()) << '\n';
  out << "W_upsilon apex: " << point_text(wu.apex()) << '\n';
  for (const LabeledPoint& ref : reference_fillings(k)) {
    out << "reference " << ref.label << ": " << point_text(ref.point)
        << (ws.contains(ref.point) && wu.contains(ref.point) ? " (inside W_sigma and W_upsilon)"
                                                             : " (outside outer bound)")
        << '\n';
  }
  list("inner", rs.inner);
  list("outer", rs.outer);
  return out.str();
}

}  // namespace pinchkit
