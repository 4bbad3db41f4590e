#include "su2holo/output.hpp"

#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

namespace su2holo {

std::string format_sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

nlohmann::json matrix_to_json(const Matrix2& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (int c = 0; c < 2; ++c) {
      rrow.push_back(round_sig(m(r, c).real()));
      irow.push_back(round_sig(m(r, c).imag()));
    }
    re.push_back(rrow);
    im.push_back(irow);
  }
  return {{"re", re}, {"im", im}};
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

}  // namespace su2holo
