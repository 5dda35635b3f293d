#include <sstream>

#include "json.hpp"

#include "aperykit/cli.hpp"
#include "aperykit/errors.hpp"

namespace aperykit::cli {

std::string render_staircase(const GroebnerBasis& basis,
                             const std::map<std::size_t, std::int64_t>& fixed,
                             std::pair<std::size_t, std::size_t> axes,
                             std::int64_t extent) {
  const std::size_t n = basis.num_vars();
  const auto [h, v] = axes;
  if (h >= n || v >= n || h == v) {
    throw BadAxes("staircase needs two distinct axes among " + std::to_string(n) +
                  " variables");
  }
  if (fixed.count(h) || fixed.count(v)) throw BadAxes("an axis variable is also fixed");
  if (extent < 1 || extent > 500) throw InvalidArgument("extent must lie in 1..500");

  ExponentVector p(n);
  for (const auto& [var, value] : fixed) {
    if (var >= n) throw BadAxes("fixed variable out of range");
    if (value < 0) throw InvalidArgument("fixed values must be nonnegative");
    p[var] = value;
  }

  const auto width = std::to_string(extent - 1).size();
  auto pad = [width](const std::string& s) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << variable_name(v) << '\n';
  for (std::int64_t b = extent - 1; b >= 0; --b) {
    out << pad(std::to_string(b)) << " |";
    p[v] = b;
    for (std::int64_t a = 0; a < extent; ++a) {
      p[h] = a;
      out << ' ' << pad(in_staircase_complement(p, basis) ? "o" : "#");
    }
    out << '\n';
  }
  out << std::string(width, ' ') << " +" << std::string((width + 1) * extent, '-') << '\n';
  out << std::string(width, ' ') << "  ";
  for (std::int64_t a = 0; a < extent; ++a) out << ' ' << pad(std::to_string(a));
  out << ' ' << variable_name(h) << '\n';
  if (!fixed.empty()) {
    out << "fixed:";
    for (const auto& [var, value] : fixed) out << ' ' << variable_name(var) << '=' << value;
    out << '\n';
  }
  return out.str();
}

std::string basis_json(const GroebnerBasis& basis) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& b : basis.elements()) {
    elements.push_back({{"lead", std::vector<std::int64_t>(b.lead.begin(), b.lead.end())},
                        {"trail", std::vector<std::int64_t>(b.trail.begin(), b.trail.end())}});
  }
  return nlohmann::json{{"order", basis.order().label()}, {"elements", elements}}.dump();
}

}  // namespace aperykit::cli
