#include "macexp/curve.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace macexp {

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_sig12(double v) {
  return std::strtod(format_sig12(v).c_str(), nullptr);
}

void round_figure(figure_data& f) {
  for (auto& [k, v] : f.params) v = round_sig12(v);
  for (auto& c : f.curves) {
    for (auto& [k, v] : c.params) v = round_sig12(v);
    for (auto& pt : c.points) {
      pt.x = round_sig12(pt.x);
      pt.y = round_sig12(pt.y);
    }
  }
}

bool identifier_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
              (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(std::string("figure: ") + msg);
}

void check_params(const std::map<std::string, double>& params) {
  for (const auto& [k, v] : params) {
    require(identifier_ok(k), "parameter keys must be identifiers");
    require(std::isfinite(v), "parameter values must be finite");
  }
}

}  // namespace

void validate_figure(const figure_data& f, bool require_increasing_x) {
  require(identifier_ok(f.name), "name must be an identifier");
  require(identifier_ok(f.x_name), "x axis name must be an identifier");
  require(identifier_ok(f.y_name), "y axis name must be an identifier");
  check_params(f.params);
  require(!f.curves.empty(), "at least one curve required");
  for (const auto& c : f.curves) {
    require(identifier_ok(c.label), "curve labels must be identifiers");
    check_params(c.params);
    require(!c.points.empty(), "curves must have at least one point");
    for (size_t i = 0; i < c.points.size(); ++i) {
      require(std::isfinite(c.points[i].x) && std::isfinite(c.points[i].y),
              "points must be finite");
      if (require_increasing_x && i > 0) {
        require(c.points[i - 1].x < c.points[i].x,
                "x values must be strictly increasing");
      }
    }
  }
  for (size_t i = 0; i < f.curves.size(); ++i) {
    for (size_t j = i + 1; j < f.curves.size(); ++j) {
      require(f.curves[i].label != f.curves[j].label, "curve labels must be unique");
    }
  }
}

std::string figure_to_csv(const figure_data& f) {
  validate_figure(f, false);
  std::ostringstream out;
  out << "# figure: " << f.name << "\n";
  out << "# x: " << f.x_name << "\n";
  out << "# y: " << f.y_name << "\n";
  for (const auto& [k, v] : f.params) {
    out << "# param: " << k << " = " << format_sig12(round_sig12(v)) << "\n";
  }
  for (const auto& c : f.curves) {
    out << "# curve: " << c.label << "\n";
    for (const auto& [k, v] : c.params) {
      out << "# curve_param: " << c.label << " " << k << " = "
          << format_sig12(round_sig12(v)) << "\n";
    }
  }
  out << "curve," << f.x_name << "," << f.y_name << "\n";
  for (const auto& c : f.curves) {
    for (const auto& pt : c.points) {
      out << c.label << "," << format_sig12(round_sig12(pt.x)) << ","
          << format_sig12(round_sig12(pt.y)) << "\n";
    }
  }
  return out.str();
}

std::string figure_to_json(const figure_data& f) {
  validate_figure(f, false);
  nlohmann::ordered_json j;
  j["figure"] = f.name;
  j["x_name"] = f.x_name;
  j["y_name"] = f.y_name;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : f.params) j["params"][k] = round_sig12(v);
  j["curves"] = nlohmann::ordered_json::array();
  for (const auto& c : f.curves) {
    nlohmann::ordered_json jc;
    jc["label"] = c.label;
    jc["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) jc["params"][k] = round_sig12(v);
    jc["points"] = nlohmann::ordered_json::array();
    for (const auto& pt : c.points) {
      jc["points"].push_back({round_sig12(pt.x), round_sig12(pt.y)});
    }
    j["curves"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

namespace {

double parse_value(const std::string& s, const char* what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || !end || *end != '\0') {
    throw std::invalid_argument(std::string("figure: malformed number in ") + what);
  }
  return v;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// "key = value" -> pair
std::pair<std::string, double> parse_assignment(const std::string& s, const char* what) {
  size_t eq = s.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument(std::string("figure: missing '=' in ") + what);
  }
  std::string key = trim(s.substr(0, eq));
  double v = parse_value(trim(s.substr(eq + 1)), what);
  return {key, v};
}

}  // namespace

figure_data figure_from_csv(const std::string& text) {
  figure_data f;
  std::map<std::string, size_t> index;  // label -> position in f.curves
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      auto starts = [&](const char* tag) {
        return body.rfind(tag, 0) == 0;
      };
      if (starts("figure:")) {
        f.name = trim(body.substr(7));
      } else if (starts("x:")) {
        f.x_name = trim(body.substr(2));
      } else if (starts("y:")) {
        f.y_name = trim(body.substr(2));
      } else if (starts("param:")) {
        auto [k, v] = parse_assignment(trim(body.substr(6)), "param");
        f.params[k] = v;
      } else if (starts("curve:")) {
        std::string label = trim(body.substr(6));
        if (!index.count(label)) {
          index[label] = f.curves.size();
          f.curves.push_back(curve{label, {}, {}});
        }
      } else if (starts("curve_param:")) {
        std::string rest = trim(body.substr(12));
        size_t sp = rest.find(' ');
        if (sp == std::string::npos) {
          throw std::invalid_argument("figure: malformed curve_param line");
        }
        std::string label = rest.substr(0, sp);
        auto it = index.find(label);
        if (it == index.end()) {
          throw std::invalid_argument("figure: curve_param before curve declaration");
        }
        auto [k, v] = parse_assignment(trim(rest.substr(sp + 1)), "curve_param");
        f.curves[it->second].params[k] = v;
      } else {
        throw std::invalid_argument("figure: unrecognized comment line");
      }
      continue;
    }
    if (!header_seen) {
      std::string expected = "curve," + f.x_name + "," + f.y_name;
      if (line != expected) {
        throw std::invalid_argument("figure: unexpected CSV header row");
      }
      header_seen = true;
      continue;
    }
    size_t c1 = line.find(',');
    size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::invalid_argument("figure: data rows need three fields");
    }
    std::string label = line.substr(0, c1);
    auto it = index.find(label);
    if (it == index.end()) {
      throw std::invalid_argument("figure: data row for undeclared curve");
    }
    curve_point pt;
    pt.x = parse_value(trim(line.substr(c1 + 1, c2 - c1 - 1)), "x value");
    pt.y = parse_value(trim(line.substr(c2 + 1)), "y value");
    f.curves[it->second].points.push_back(pt);
  }
  validate_figure(f, false);
  return f;
}

figure_data figure_from_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  figure_data f;
  f.name = j.at("figure").get<std::string>();
  f.x_name = j.at("x_name").get<std::string>();
  f.y_name = j.at("y_name").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) {
    f.params[k] = v.get<double>();
  }
  for (const auto& jc : j.at("curves")) {
    curve c;
    c.label = jc.at("label").get<std::string>();
    for (const auto& [k, v] : jc.at("params").items()) {
      c.params[k] = v.get<double>();
    }
    for (const auto& pt : jc.at("points")) {
      if (!pt.is_array() || pt.size() != 2) {
        throw std::invalid_argument("figure: points must be [x, y] pairs");
      }
      c.points.push_back({pt[0].get<double>(), pt[1].get<double>()});
    }
    f.curves.push_back(std::move(c));
  }
  validate_figure(f, false);
  return f;
}

bool figures_equal(const figure_data& a, const figure_data& b) {
  if (a.name != b.name || a.x_name != b.x_name || a.y_name != b.y_name) return false;
  if (a.params != b.params) return false;
  if (a.curves.size() != b.curves.size()) return false;
  for (size_t i = 0; i < a.curves.size(); ++i) {
    const curve& ca = a.curves[i];
    const curve& cb = b.curves[i];
    if (ca.label != cb.label || ca.params != cb.params) return false;
    if (ca.points.size() != cb.points.size()) return false;
    for (size_t k = 0; k < ca.points.size(); ++k) {
      if (ca.points[k].x != cb.points[k].x || ca.points[k].y != cb.points[k].y) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace macexp
