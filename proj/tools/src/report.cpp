#include "covmat/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>

#include <json.hpp>

#include "covmat/error.hpp"

namespace covmat::cli {

using nlohmann::json;

namespace {

std::string party_label(int i) { return std::string(1, static_cast<char>('A' + i)); }

json verdict_to_json(const CriterionVerdict& v) {
  json diags = json::array();
  for (const auto& d : v.diagnostics) diags.push_back({{"name", d.name}, {"value", d.value}});
  return {{"name", v.name},       {"lhs", v.lhs},
          {"rhs", v.rhs},         {"margin", v.margin},
          {"conclusion", to_string(v.conclusion)}, {"diagnostics", diags}};
}

CriterionVerdict verdict_from_json(const json& j) {
  CriterionVerdict v;
  v.name = j.at("name").get<std::string>();
  v.lhs = j.at("lhs").get<double>();
  v.rhs = j.at("rhs").get<double>();
  v.margin = j.at("margin").get<double>();
  v.conclusion = conclusion_from_string(j.at("conclusion").get<std::string>());
  for (const auto& d : j.at("diagnostics")) {
    v.diagnostics.push_back({d.at("name").get<std::string>(), d.at("value").get<double>()});
  }
  return v;
}

json multipartite_to_json(const MultipartiteReport& m) {
  json pairs = json::array();
  for (const auto& [pair, pv] : m.pair_verdicts) {
    pairs.push_back({{"parties", {pair.first, pair.second}},
                     {"hs", verdict_to_json(pv.hs)},
                     {"kf", verdict_to_json(pv.kf)}});
  }
  json bisep = json::object();
  for (const auto& [label, refuted] : m.bisep_refuted) bisep[label] = refuted;
  return {{"pairs", pairs},
          {"full_sep_refuted", m.full_sep_refuted},
          {"bisep_refuted", bisep},
          {"fully_entangled", m.fully_entangled}};
}

MultipartiteReport multipartite_from_json(const json& j) {
  MultipartiteReport m;
  for (const auto& p : j.at("pairs")) {
    const auto parties = p.at("parties").get<std::vector<int>>();
    if (parties.size() != 2) throw InvalidArgument("report: pair needs two parties");
    m.pair_verdicts.emplace(std::make_pair(parties[0], parties[1]),
                            PairVerdicts{verdict_from_json(p.at("hs")), verdict_from_json(p.at("kf"))});
  }
  m.full_sep_refuted = j.at("full_sep_refuted").get<bool>();
  for (const auto& [label, refuted] : j.at("bisep_refuted").items()) {
    m.bisep_refuted[label] = refuted.get<bool>();
  }
  m.fully_entangled = j.at("fully_entangled").get<bool>();
  return m;
}

json bounds_to_json(const ConcurrenceBounds& b) {
  return {{"m", b.m},
          {"n", b.n},
          {"swapped", b.swapped},
          {"ppt_norm", b.ppt_norm},
          {"realign_norm", b.realign_norm},
          {"bound_ccnr_ppt", b.bound_ccnr_ppt},
          {"bound_lur", b.bound_lur},
          {"lur_basis", b.lur_basis},
          {"bound_optimized", b.bound_optimized},
          {"exact_pure", b.exact_pure ? json(*b.exact_pure) : json(nullptr)},
          {"best", b.best}};
}

ConcurrenceBounds bounds_from_json(const json& j) {
  ConcurrenceBounds b;
  b.m = j.at("m").get<int>();
  b.n = j.at("n").get<int>();
  b.swapped = j.at("swapped").get<bool>();
  b.ppt_norm = j.at("ppt_norm").get<double>();
  b.realign_norm = j.at("realign_norm").get<double>();
  b.bound_ccnr_ppt = j.at("bound_ccnr_ppt").get<double>();
  b.bound_lur = j.at("bound_lur").get<double>();
  b.lur_basis = j.at("lur_basis").get<std::string>();
  b.bound_optimized = j.at("bound_optimized").get<double>();
  if (!j.at("exact_pure").is_null()) b.exact_pure = j.at("exact_pure").get<double>();
  b.best = j.at("best").get<double>();
  return b;
}

std::string join_dims(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "x" : "") + std::to_string(dims[i]);
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void write_text(std::ostream& out, const AnalysisReport& r) {
  out << "state:    " << r.state_description << "\n";
  out << "dims:     " << join_dims(r.dims) << "\n";
  out << "purities:";
  for (std::size_t i = 0; i < r.purities.size(); ++i) {
    out << " " << party_label(static_cast<int>(i)) << "=" << format_number(r.purities[i]);
  }
  out << "\n\n";
  out << pad("criterion", 12) << pad("lhs", 20) << pad("rhs", 20) << pad("margin", 20) << "verdict\n";
  for (const auto& v : r.verdicts) {
    out << pad(v.name, 12) << pad(format_number(v.lhs), 20) << pad(format_number(v.rhs), 20)
        << pad(format_number(v.margin), 20) << to_string(v.conclusion) << "\n";
    for (const auto& d : v.diagnostics) {
      out << "  " << d.name << " = " << format_number(d.value) << "\n";
    }
  }
  if (r.multipartite) {
    const auto& m = *r.multipartite;
    out << "\nfull separability refuted: " << (m.full_sep_refuted ? "yes" : "no") << "\n";
    for (const auto& [label, refuted] : m.bisep_refuted) {
      out << "  separable across " << pad(label, 8) << (refuted ? "refuted" : "not refuted") << "\n";
    }
    out << "fully entangled (one criterion refutes every cut): "
        << (m.fully_entangled ? "yes" : "no") << "\n";
  }
  if (r.bounds) {
    const auto& b = *r.bounds;
    out << "\nconcurrence lower bounds (M=" << b.m << ", N=" << b.n
        << (b.swapped ? ", parties swapped" : "") << "):\n";
    out << "  ppt/realignment   " << format_number(b.bound_ccnr_ppt) << "  (||T_A||="
        << format_number(b.ppt_norm) << ", ||R||=" << format_number(b.realign_norm) << ")\n";
    out << "  local uncertainty " << format_number(b.bound_lur) << "  (" << b.lur_basis << " bases)\n";
    out << "  optimized         " << format_number(b.bound_optimized) << "\n";
    if (b.exact_pure) out << "  exact (pure)      " << format_number(*b.exact_pure) << "\n";
    out << "  best              " << format_number(b.best) << "\n";
  }
  out << "\ntiming_ms:";
  for (const auto& [stage, ms] : r.timing_ms) out << " " << stage << "=" << format_number(ms);
  out << "\n";
}

void write_csv(std::ostream& out, const AnalysisReport& r) {
  out << "name,lhs,rhs,margin,conclusion\n";
  for (const auto& v : r.verdicts) {
    out << v.name << "," << format_number(v.lhs) << "," << format_number(v.rhs) << ","
        << format_number(v.margin) << "," << to_string(v.conclusion) << "\n";
  }
  if (r.bounds) {
    const auto& b = *r.bounds;
    out << "bound_ccnr_ppt," << format_number(b.bound_ccnr_ppt) << ",,,\n";
    out << "bound_lur," << format_number(b.bound_lur) << ",,,\n";
    out << "bound_optimized," << format_number(b.bound_optimized) << ",,,\n";
  }
}

}  // namespace

Format format_from_string(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw InvalidArgument("unknown format '" + text + "' (expected text, json or csv)");
}

bool AnalysisReport::any_entangled() const {
  for (const auto& v : verdicts)
    if (v.entangled()) return true;
  return false;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  (void)ec;
  return std::string(buf, ptr);
}

std::string report_to_json(const AnalysisReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  json j = {{"state", r.state_description},
            {"dims", r.dims},
            {"purities", r.purities},
            {"verdicts", verdicts},
            {"multipartite", r.multipartite ? multipartite_to_json(*r.multipartite) : json(nullptr)},
            {"bounds", r.bounds ? bounds_to_json(*r.bounds) : json(nullptr)},
            {"timing_ms", r.timing_ms}};
  return j.dump(2);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    AnalysisReport r;
    r.state_description = j.at("state").get<std::string>();
    r.dims = j.at("dims").get<std::vector<int>>();
    r.purities = j.at("purities").get<std::vector<double>>();
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    if (!j.at("multipartite").is_null()) r.multipartite = multipartite_from_json(j.at("multipartite"));
    if (!j.at("bounds").is_null()) r.bounds = bounds_from_json(j.at("bounds"));
    r.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

void write_report(std::ostream& out, const AnalysisReport& report, Format format) {
  switch (format) {
    case Format::kText: write_text(out, report); break;
    case Format::kJson: out << report_to_json(report) << "\n"; break;
    case Format::kCsv: write_csv(out, report); break;
  }
}

}  // namespace covmat::cli
