#include "cylindric/io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace cylindric {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view line) {
  try {
    return Json::parse(line);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("unexpected JSON shape: ") + e.what());
  }
}

Json factors_json(const std::vector<QtFactor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back({f.q_exp, f.t_exp});
  return out;
}

Json cpp_json(const CylindricPlanePartition& c) {
  Json mu = Json::array();
  for (const auto& p : c.mu) mu.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
  return Json{{"profile", c.profile.str()}, {"mu", std::move(mu)}};
}

Json factor_list_json(const FactorList& f) {
  return Json{{"num", factors_json(f.numerator())}, {"den", factors_json(f.denominator())}};
}

}  // namespace

std::string to_json(const CylindricPlanePartition& c) { return cpp_json(c).dump(); }

CylindricPlanePartition cpp_from_json(std::string_view line) {
  const Json j = parse(line);
  return guarded([&] {
    Profile profile(j.at("profile").get<std::string>());
    std::vector<Partition> mu;
    for (const auto& parts : j.at("mu")) mu.emplace_back(parts.get<std::vector<int>>());
    return validate(std::move(profile), std::move(mu));
  });
}

std::string to_json(const FactorList& f) { return factor_list_json(f).dump(); }

FactorList factors_from_json(std::string_view line) {
  const Json j = parse(line);
  return guarded([&] {
    auto list = [](const Json& arr) {
      std::vector<QtFactor> out;
      for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("factor must be a pair [a, b]");
        const int a = pair[0].get<int>(), b = pair[1].get<int>();
        if (a < 0 || b < 0) throw std::invalid_argument("factor exponents must be nonnegative");
        out.push_back({a, b});
      }
      return out;
    };
    return FactorList(list(j.at("num")), list(j.at("den")));
  });
}

std::string to_json(const PathFamily& f) {
  Json paths = Json::array();
  for (const auto& p : f.paths) paths.push_back({{"start", p.start}, {"steps", p.steps}});
  return Json{{"T", f.period}, {"paths", std::move(paths)}}.dump();
}

PathFamily path_family_from_json(std::string_view line) {
  const Json j = parse(line);
  return guarded([&] {
    PathFamily f;
    const long T = j.at("T").get<long>();
    if (T <= 0) throw std::invalid_argument("path family period must be positive");
    f.period = static_cast<std::size_t>(T);
    for (const auto& p : j.at("paths"))
      f.paths.push_back({p.at("start").get<int>(), p.at("steps").get<std::string>()});
    from_paths(f);
    return f;
  });
}

std::string weight_record(const CylindricPlanePartition& c, const std::optional<QtPoint>& point) {
  const FactorList w = macdonald_weight(c);
  Json j = cpp_json(c);
  j["weight"] = weight(c);
  j["num"] = factors_json(w.numerator());
  j["den"] = factors_json(w.denominator());
  if (point) j["value"] = w.value(*point).get_str();
  return j.dump();
}

namespace {

Json series_json(const Series& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(Json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"variables", f.space()->names()}, {"terms", std::move(terms)}};
}

}  // namespace

std::string to_json(const Series& f) { return series_json(f).dump(); }

std::string to_json(const IdentityReport& r) {
  Json j{{"profile", r.profile.str()},
         {"max_weight", r.options.max_weight},
         {"refined", r.options.refined},
         {"mode", r.options.mode.describe()},
         {"pass", r.passed()},
         {"lhs", series_json(r.lhs)},
         {"rhs", series_json(r.rhs)}};
  if (r.first_mismatch)
    j["first_mismatch"] = {{"exponents", r.first_mismatch->exponents},
                           {"lhs", r.first_mismatch->lhs.get_str()},
                           {"rhs", r.first_mismatch->rhs.get_str()}};
  return j.dump();
}

}  // namespace cylindric
