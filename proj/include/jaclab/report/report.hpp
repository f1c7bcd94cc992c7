#pragma once

// JSON and CSV documents for the command-line front-end. Exact values are rational
// strings or {minpoly, box} objects; decimal renderings are only added on request.

#include "jaclab/jacobian/jacobian.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jaclab {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::optional<int> order;  // truncation order; 2 * deg^2 when unset
  std::uint64_t seed = 0;
  int tower_depth = kDefaultTowerDepth;
  std::optional<int> decimals;
};

class JsonWriter {
public:
  explicit JsonWriter(std::optional<int> decimals = {}) : decimals_(decimals) {}

  Json value(const Value& v) const;
  Json values(const std::vector<Value>& vs) const;
  /// Series coefficient: rational string, or {tower_var, repr, minpoly, box}.
  Json number(const Number& a) const;
  Json series(const FractionalSeries& s) const;
  Json change(const LinearChange& c) const;
  Json fiber(const FiberReport& f) const;
  Json theorem1(const Theorem1Report& r) const;
  Json lemma6(const Lemma6Report& r) const;
  Json nonproper(const NonProperSet& np) const;

private:
  std::optional<int> decimals_;
};

Json analyze_poly(const std::string& h_text, const RunConfig& config);
Json analyze_map(const std::string& p_text, const std::string& q_text, const RunConfig& config);

/// Semicolon-separated "p(t)|q(t)" pairs.
std::vector<std::pair<QPoly, QPoly>> parse_components(const std::string& text);
Json theorem2(const std::string& components_text, const RunConfig& config);

struct CurveSample {
  Rational t, u, v;
};
std::vector<CurveSample> sample_curve(const std::string& param_text, const std::vector<Rational>& ts);
/// `count` equally spaced parameters from `from` to `to` inclusive.
std::vector<Rational> parameter_grid(const Rational& from, const Rational& to, int count);
std::string samples_csv(const std::vector<CurveSample>& rows);
Json samples_json(const std::vector<CurveSample>& rows);

}  // namespace jaclab
