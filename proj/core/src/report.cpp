#include "mlcl/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace mlcl {

namespace {

using nlohmann::json;

std::string cell(const Rat& v, int sig) { return to_decimal(v, sig); }

json interval_json(const RatInterval& v, int sig) {
  if (v.is_exact()) return json{{"value", cell(v.lo, sig)}, {"exact", true}};
  return json{{"lo", cell(v.lo, sig)}, {"hi", cell(v.hi, sig)}, {"exact", false}};
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const ScanResult& scan, const ReportOptions& opt) {
  out << "n,term_lo,term_hi,runmin_lo,runmin_hi,argmin\n";
  for (const auto& r : scan.records) {
    out << r.n.get_str() << ',' << cell(r.term.lo, opt.sig_digits) << ','
        << cell(r.term.hi, opt.sig_digits) << ',' << cell(r.running_min.lo, opt.sig_digits) << ','
        << cell(r.running_min.hi, opt.sig_digits) << ',' << r.argmin.get_str() << '\n';
  }
}

void write_sum_series_csv(std::ostream& out, const SumSeries& series, const ReportOptions& opt) {
  out << "N";
  for (const auto& col : series.columns) {
    out << ',' << col.name << "_lo," << col.name << "_hi";
  }
  out << '\n';
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    out << series.checkpoints[i].get_str();
    for (const auto& col : series.columns) {
      out << ',' << cell(col.values[i].lo, opt.sig_digits) << ','
          << cell(col.values[i].hi, opt.sig_digits);
    }
    out << '\n';
  }
}

void write_mc_csv(std::ostream& out, const McReport& report) {
  out << "sample,seed,N,count,undecided\n";
  for (const auto& r : report.rows) {
    out << r.sample << ',' << r.sub_seed << ',' << r.checkpoint.get_str() << ',' << r.count << ','
        << r.undecided << '\n';
  }
}

void write_dhyp_csv(std::ostream& out, const DhypReport& report, const ReportOptions& opt) {
  out << "N,M,average\n";
  for (const auto& row : report.rows) {
    out << row.N.get_str() << ',' << row.M << ',' << cell(row.average, opt.sig_digits) << '\n';
  }
}

void write_phi_sweep_csv(std::ostream& out, const PhiSweepResult& sweep, const ReportOptions& opt) {
  out << "d,N,ratio\n";
  for (const auto& c : sweep.cells) {
    out << c.d << ',' << c.N << ',' << cell(c.ratio, opt.sig_digits) << '\n';
  }
}

std::string construction_json(const ConstructionResult& r, const ReportOptions& opt) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["m_bins"] = r.m_bins;
  j["bin_index"] = r.bin_index;
  j["bin_counts"] = r.bin_counts;
  json sel = json::array();
  for (const auto& s : r.selected) {
    sel.push_back(json{{"ell", s.ell},
                       {"sigma", s.sigma.get_str()},
                       {"tau", interval_json(s.tau, opt.sig_digits)}});
  }
  j["selected"] = sel;
  j["sigma_prime"] = r.sigma_prime.get_str();
  json tv = json::array();
  for (const auto& t : r.t) tv.push_back(t.get_str());
  j["t"] = tv;
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json{{"i", p.i},
                         {"j", p.j},
                         {"ratio", cell(p.ratio, opt.sig_digits)},
                         {"certified", p.certified},
                         {"log_ratio", interval_json(p.log_ratio, opt.sig_digits)},
                         {"log_ratio_exponents", interval_json(p.log_ratio_exponents, opt.sig_digits)},
                         {"log_ratio_tau", interval_json(p.log_ratio_tau, opt.sig_digits)},
                         {"forms_agree", p.forms_agree}});
  }
  j["pairs"] = pairs;
  j["min_log_ratio"] = interval_json(r.min_log_ratio, opt.sig_digits);
  json sup = json::array();
  for (const auto& p : r.prime_support) sup.push_back(p.get_str());
  j["prime_support"] = sup;
  return j.dump(2);
}

std::string bwgap_json(const BwGapResult& r, const ReportOptions& opt) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json rows = json::array();
  for (const auto& row : r.per_height) {
    rows.push_back(json{{"B", row.height},
                        {"min_gap", interval_json(row.min_gap, opt.sig_digits)},
                        {"argmin", row.argmin}});
  }
  j["per_height"] = rows;
  j["min_gap"] = interval_json(r.min_gap, opt.sig_digits);
  j["argmin"] = r.argmin;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r.fitted_kappa);
  j["fitted_kappa"] = buf;
  j["kappa_certified"] = r.kappa_certified;
  return j.dump(2);
}

std::string mc_summary_json(const McReport& report, const ReportOptions& opt) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["chain"] = report.config.chain_descriptor;
  j["psi"] = report.config.psi_descriptor;
  j["samples"] = report.config.samples;
  j["n_max"] = report.config.n_max.get_str();
  j["seed"] = report.config.seed;
  json cps = json::array();
  for (std::size_t i = 0; i < report.checkpoints.size(); ++i) {
    cps.push_back(json{{"N", report.checkpoints[i].get_str()},
                       {"median_count", report.median_count[i]},
                       {"mean_count", cell(report.mean_count[i], opt.sig_digits)},
                       {"reference_sum_lambda", interval_json(report.reference[i], opt.sig_digits)}});
  }
  j["checkpoints"] = cps;
  j["verdict"] = report.verdict;
  return j.dump(2);
}

std::string sum_series_json(const SumSeries& series, const ReportOptions& opt) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["exact_switch"] = series.exact_switch.get_str();
  j["note"] = series.note;
  json cols = json::array();
  for (const auto& col : series.columns) {
    json vals = json::array();
    for (const auto& v : col.values) vals.push_back(interval_json(v, opt.sig_digits));
    cols.push_back(json{{"name", col.name}, {"note", col.note}, {"exact", col.exact}, {"values", vals}});
  }
  json cps = json::array();
  for (const auto& cp : series.checkpoints) cps.push_back(cp.get_str());
  j["checkpoints"] = cps;
  j["columns"] = cols;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// manifests

std::string RunManifest::to_json_string() const {
  json j;
  j["schema_version"] = schema_version;
  j["tool_version"] = tool_version;
  j["subcommand"] = subcommand;
  j["config"] = config;
  j["seed"] = seed;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  json outs = json::array();
  for (const auto& o : outputs) {
    outs.push_back(json{{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
  }
  j["outputs"] = outs;
  return j.dump(2);
}

RunManifest RunManifest::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed manifest JSON: ") + e.what());
  }
  RunManifest m;
  try {
    m.schema_version = j.at("schema_version").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.subcommand = j.at("subcommand").get<std::string>();
    m.config = j.at("config").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.started_at = j.value("started_at", "");
    m.finished_at = j.value("finished_at", "");
    for (const auto& o : j.at("outputs")) {
      m.outputs.push_back(OutputDigest{o.at("path").get<std::string>(),
                                       o.at("sha256").get<std::string>(),
                                       o.value("bytes", std::uint64_t(0))});
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("manifest missing required fields: ") + e.what());
  }
  return m;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write manifest: " + path);
  out << to_json_string() << '\n';
}

RunManifest RunManifest::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open manifest: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_string(text);
}

std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace mlcl
