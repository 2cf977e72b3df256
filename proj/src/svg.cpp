#include "tropfiber/svg.hpp"

#include <cstdio>
#include <sstream>

#include "tropfiber/error.hpp"
#include "tropfiber/metrics.hpp"

namespace tropfiber {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Viewport {
 public:
  Viewport(const Box& box, const RenderSpec& spec) : box_(box), spec_(spec) {}

  std::string xy(const RatVector& u) const {
    const Rational x = (u[0] - box_.xmin) / (box_.xmax - box_.xmin) * spec_.width;
    const Rational y = (box_.ymax - u[1]) / (box_.ymax - box_.ymin) * spec_.height;
    return num(to_double(x)) + " " + num(to_double(y));
  }

 private:
  Box box_;
  const RenderSpec& spec_;
};

std::string piece_path(const Piece& piece, const Viewport& vp, double r) {
  if (piece.size() == 1) {
    const std::string d = num(2 * r);
    return "M " + vp.xy(piece[0]) + " m -" + num(r) + " 0 a " + num(r) + " " + num(r) + " 0 1 0 " + d +
           " 0 a " + num(r) + " " + num(r) + " 0 1 0 -" + d + " 0 Z";
  }
  std::string d = "M " + vp.xy(piece[0]);
  for (std::size_t i = 1; i < piece.size(); ++i) d += " L " + vp.xy(piece[i]);
  if (piece.size() > 2) d += " Z";
  return d;
}

}  // namespace

std::string render_svg(const Polytope& p, const std::vector<PLComplex>& layers, const PLComplex* locus,
                       const RenderSpec& spec) {
  if (p.dim != 2) throw DomainError("rendering is only supported in dimension 2");
  const Box box = bounding_box(p, spec.margin);
  const Viewport vp(box, spec);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"facets\" stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  const HSystem cl = closed(p);
  for (std::size_t j = 0; j < p.facets.size(); ++j) {
    HSystem face = cl;
    face.equalities.push_back({p.facets[j].normal, p.facets[j].offset});
    const auto vs = vertices(face);
    out << "<path data-facet=\"" << j + 1 << "\" d=\"" << piece_path(vs, vp, spec.point_radius) << "\"/>\n";
  }
  out << "</g>\n";

  auto draw = [&](const PLComplex& c, const std::string& id, const std::string& color, double width,
                  double opacity) {
    out << "<g id=\"" << id << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\" fill=\""
        << color << "\" fill-opacity=\"" << num(opacity) << "\">\n";
    const auto set = planar_set(c, box);
    for (const auto& piece : set.pieces)
      out << "<path d=\"" << piece_path(piece, vp, spec.point_radius) << "\"/>\n";
    out << "</g>\n";
  };
  for (std::size_t k = 0; k < layers.size(); ++k)
    draw(layers[k], "layer" + std::to_string(k + 1), spec.colors[k % spec.colors.size()], 1.5, 0.15);
  if (locus) draw(*locus, "locus", "#d62728", 4, 0.5);
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropfiber
