#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lindep/verifier.hpp"

namespace lindep::verifier {

namespace {

using nlohmann::ordered_json;

std::string real_string(const Real& v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

ordered_json value_json(const ClaimValue& v) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(const BigInt& i) const {
      if (i >= std::numeric_limits<std::int64_t>::min() &&
          i <= std::numeric_limits<std::int64_t>::max()) {
        return i.convert_to<std::int64_t>();
      }
      return i.str();
    }
    ordered_json operator()(const Real& r) const { return real_string(r); }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::string value_text(const ClaimValue& v, std::size_t limit) {
  std::string s;
  if (std::holds_alternative<std::monostate>(v)) {
    s = "-";
  } else if (const auto* b = std::get_if<bool>(&v)) {
    s = *b ? "true" : "false";
  } else if (const auto* i = std::get_if<BigInt>(&v)) {
    s = i->str();
  } else if (const auto* r = std::get_if<Real>(&v)) {
    s = real_string(*r);
  } else {
    s = std::get<std::string>(v);
  }
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

ordered_json coeffs_json(const ExactPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

std::string render_json(const VerificationReport& r) {
  ordered_json j;
  j["meta"] = {{"p", r.meta.p},
               {"k", r.meta.k},
               {"n", r.meta.n},
               {"q", r.meta.q},
               {"N", r.meta.N.str()},
               {"registry_version", kRegistryVersion}};
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim_id", c.claim_id},
                      {"paper_anchor", c.paper_anchor},
                      {"predicted", value_json(c.predicted)},
                      {"computed", value_json(c.computed)},
                      {"match", c.match},
                      {"status", std::string(to_string(c.status))},
                      {"note", c.note}});
  }
  j["claims"] = std::move(claims);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.charpoly_checks) {
    checks.push_back({{"matrix", std::string(spectra::to_string(c.matrix))},
                      {"computed_coeffs", coeffs_json(c.computed)},
                      {"predicted_coeffs", coeffs_json(c.predicted)},
                      {"equal", c.equal}});
  }
  j["charpoly_checks"] = std::move(checks);
  ordered_json timings = ordered_json::object();
  for (const auto& [stage, ms] : r.timings) timings[stage + "_ms"] = ms;
  j["timings"] = std::move(timings);
  return j.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "GF(" << r.meta.p << "^" << r.meta.k << "), q = " << r.meta.q
     << ", n = " << r.meta.n << ", N = " << r.meta.N << "\n\n";
  os << "| claim | predicted | computed | status | note |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& c : r.claims) {
    os << "| " << c.claim_id << " | " << value_text(c.predicted, 60) << " | "
       << value_text(c.computed, 60) << " | " << to_string(c.status) << " | "
       << c.note << " |\n";
  }
  if (!r.charpoly_checks.empty()) {
    os << "\n| matrix | degree | equal |\n|---|---|---|\n";
    for (const auto& c : r.charpoly_checks) {
      os << "| " << spectra::to_string(c.matrix) << " | " << c.computed.degree()
         << " | " << (c.equal ? "yes" : "no") << " |\n";
    }
  }
  os << "\n| stage | ms |\n|---|---|\n";
  for (const auto& [stage, ms] : r.timings) {
    os << "| " << stage << " | " << std::fixed << std::setprecision(1) << ms << " |\n";
  }
  return os.str();
}

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string render_report(const VerificationReport& r, ReportFormat format) {
  return format == ReportFormat::json ? render_json(r) : render_markdown(r);
}

std::string render_report(const VerificationReport& r, std::string_view format) {
  return render_report(r, report_format_from_string(format));
}

}  // namespace lindep::verifier
