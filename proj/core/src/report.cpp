#include "bivalg/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace bivalg {

namespace {

using Json = nlohmann::ordered_json;

std::string sci(const Real& x) { return format_sci(x, 17); }

Json complex_json(const Complex& z) { return Json{{"re", sci(z.re)}, {"im", sci(z.im)}}; }

Json log_json(const LogComplex& v) {
  if (v.zero) return Json{{"value", "0"}, {"log10_modulus", "-inf"}, {"argument", "0"}};
  return Json{{"value", format_value(v)},
              {"log10_modulus", sci(v.log10_modulus())},
              {"argument", sci(v.argument)}};
}

Json local_json(const LocalData& d) {
  Json checks = Json::object();
  for (const auto& c : d.checks) checks[c.name] = c.passed;
  return Json{{"H_x", complex_json(d.hx)}, {"H_y", complex_json(d.hy)}, {"chi1", complex_json(d.chi1)},
              {"chi2", complex_json(d.chi2)}, {"M", complex_json(d.m)}, {"checks", checks}};
}

}  // namespace

std::string format_value(const LogComplex& v, int digits) {
  if (v.zero) return "0";
  // Mantissa and decimal exponent are split so the value never overflows.
  const Real l10 = v.log10_modulus();
  const Real e = floor(l10);
  const Real mant = pow(Real(10), l10 - e);
  auto part = [&](const Real& c) {
    if (c == 0) return std::string("0");
    std::string m = format_sci(mant * c, digits);
    const auto pos = m.find('e');
    const long exp10 = std::stol(m.substr(pos + 1)) + e.convert_to<long>();
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", exp10);
    return m.substr(0, pos) + buf;
  };
  const Real c = cos(v.argument);
  const Real s = sin(v.argument);
  if (abs(s) <= Real(1e-30)) return part(c);
  if (abs(c) <= Real(1e-30)) return part(s) + "i";
  std::string im = part(s);
  if (im.front() != '-') im = "+" + im;
  return part(c) + im + "i";
}

std::string critical_report(const CriticalAnalysis& analysis, const ReportContext& ctx) {
  Json root;
  root["H"] = ctx.h;
  root["direction"] = ctx.direction;
  Json points = Json::array();
  for (std::size_t k = 0; k < analysis.points.size(); ++k) {
    const auto& pt = analysis.points[k];
    Json j;
    j["index"] = k;
    j["p"] = complex_json(pt.p);
    j["q"] = complex_json(pt.q);
    j["abs_p"] = sci(abs(pt.p));
    j["abs_q"] = sci(abs(pt.q));
    j["residual_H"] = sci(pt.residual_h);
    j["residual_direction"] = sci(pt.residual_direction);
    j["smooth"] = pt.smooth;
    j["minimality"] = to_string(pt.minimality);
    if (pt.minimality != Minimality::kNotProbed) j["min_margin"] = sci(pt.min_margin);
    if (pt.witness) {
      j["witness"] = Json{{"x", complex_json(pt.witness->x)},
                          {"y", complex_json(pt.witness->y)},
                          {"margin", sci(pt.witness->margin)}};
    }
    j["torus_class"] = pt.torus_class;
    points.push_back(std::move(j));
  }
  root["points"] = std::move(points);
  Json classes = Json::array();
  for (const auto& cls : analysis.classes) {
    classes.push_back(Json{{"members", cls.members},
                           {"abs_p", sci(cls.abs_p)},
                           {"abs_q", sci(cls.abs_q)},
                           {"weight", sci(cls.weight)},
                           {"dominant", cls.dominant}});
  }
  root["torus_classes"] = std::move(classes);
  return root.dump(2) + "\n";
}

std::string estimate_report(const std::vector<AsymptoticEstimate>& estimates, const ReportContext& ctx) {
  Json root;
  root["H"] = ctx.h;
  root["direction"] = ctx.direction;
  Json list = Json::array();
  for (const auto& est : estimates) {
    Json j;
    j["r"] = est.r;
    j["s"] = est.s;
    j["formula"] = to_string(est.formula);
    if (est.ray) j["branch_ray"] = Json{{"angle", sci(est.ray->angle)}, {"lower", sci(est.ray->lower)}};
    Json contributions = Json::array();
    for (const auto& c : est.contributions) {
      contributions.push_back(Json{{"p", complex_json(c.p)},
                                   {"q", complex_json(c.q)},
                                   {"local", local_json(c.local)},
                                   {"omega", c.omega},
                                   {"branch_value", log_json(c.branch_value)},
                                   {"contribution", log_json(c.value)}});
    }
    j["contributions"] = std::move(contributions);
    j["estimate"] = log_json(est.value);
    j["warnings"] = est.warnings;
    list.push_back(std::move(j));
  }
  root["estimates"] = std::move(list);
  return root.dump(2) + "\n";
}

}  // namespace bivalg
