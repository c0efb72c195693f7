#include "nnhm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nnhm/errors.hpp"
#include "nnhm/format.hpp"

namespace nnhm {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

namespace {

// one input row, raw cell text keyed by column name
struct Record {
  std::size_t row = 0;
  std::map<std::string, std::string> cells;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t row) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw InputError(strformat("row %zu: unterminated quote", row));
  out.push_back(trim(cur));
  return out;
}

class Fields {
 public:
  explicit Fields(const Record& r) : r_(r) {}

  bool has(const std::string& key) const {
    auto it = r_.cells.find(key);
    return it != r_.cells.end() && !it->second.empty();
  }

  double num(const std::string& key) const {
    auto it = r_.cells.find(key);
    if (it == r_.cells.end() || it->second.empty())
      throw InputError(strformat("row %zu: missing value for column '%s'", r_.row, key.c_str()));
    const std::string& s = it->second;
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
      throw InputError(strformat("row %zu: column '%s' is not a number: '%s'", r_.row, key.c_str(), s.c_str()));
    return v;
  }

  std::optional<double> opt(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return num(key);
  }

  std::string label() const {
    auto it = r_.cells.find("label");
    return it == r_.cells.end() ? std::string() : it->second;
  }

  std::size_t row() const { return r_.row; }

 private:
  const Record& r_;
};

std::vector<std::string> required_columns(Measure m) {
  switch (m) {
    case Measure::MeanDifference:
    case Measure::Smd: return {"mean1", "sd1", "n1", "mean2", "sd2", "n2"};
    case Measure::LogOr: return {"events1", "total1", "events2", "total2"};
    case Measure::LogOdds: return {"events", "total"};
    case Measure::LogRatioCi: return {"ratio", "lower", "upper"};
    case Measure::FisherZ: return {"r", "n"};
    case Measure::Precomputed: return {"y", "sigma"};
  }
  return {};
}

EffectEstimate derive(const Fields& f, const LoadOptions& opts) {
  std::string label = f.label();
  switch (opts.measure) {
    case Measure::MeanDifference:
    case Measure::Smd: {
      TwoGroupContinuous g{f.num("mean1"), f.num("sd1"), f.num("n1"), f.num("mean2"), f.num("sd2"), f.num("n2")};
      return opts.measure == Measure::Smd ? smd_hedges_g(g, label) : mean_difference(g, label);
    }
    case Measure::LogOr:
      return log_or({f.num("events1"), f.num("total1"), f.num("events2"), f.num("total2")}, opts.continuity, label);
    case Measure::LogOdds:
      return log_odds({f.num("events"), f.num("total")}, opts.continuity, label);
    case Measure::LogRatioCi: {
      RatioWithCI r{f.num("ratio"), f.num("lower"), f.num("upper")};
      if (auto lv = f.opt("level")) r.level = *lv;
      EffectEstimate e = log_ratio_from_ci(r, label);
      e.n = f.opt("n");
      return e;
    }
    case Measure::FisherZ:
      return fisher_z({f.num("r"), f.num("n")}, label);
    case Measure::Precomputed: {
      EffectEstimate e{label, f.num("y"), f.num("sigma"), f.opt("n")};
      if (!(e.sigma > 0.0)) throw InputError(strformat("row %zu: sigma must be positive", f.row()));
      return e;
    }
  }
  throw InputError("unsupported measure");
}

Dataset build(const std::vector<Record>& records, const LoadOptions& opts) {
  if (records.empty()) throw InputError("input has no data rows");
  if (!(opts.rescale > 0.0)) throw InputError("rescale factor must be positive");
  std::vector<EffectEstimate> out;
  for (const auto& rec : records) {
    Fields f(rec);
    try {
      EffectEstimate e = derive(f, opts);
      if (opts.rescale != 1.0) e = rescale(std::move(e), opts.rescale);
      out.push_back(std::move(e));
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("row ", 0) == 0) throw;
      throw InputError(strformat("row %zu: %s", rec.row, msg.c_str()));
    }
  }
  return make_dataset(std::move(out), opts.measure);
}

}  // namespace

Dataset parse_csv_dataset(std::string_view text, const LoadOptions& opts) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw InputError("CSV input is empty");
  std::string head = lines[i];
  if (head.rfind("\xEF\xBB\xBF", 0) == 0) head.erase(0, 3);
  auto header = split_csv_line(head, i + 1);
  for (auto& h : header)
    for (auto& c : h) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& col : required_columns(opts.measure))
    if (std::find(header.begin(), header.end(), col) == header.end())
      throw InputError("CSV header lacks required column '" + col + "' for measure " + to_string(opts.measure));

  std::vector<Record> records;
  for (++i; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto cells = split_csv_line(lines[i], i + 1);
    if (cells.size() != header.size())
      throw InputError(strformat("row %zu: expected %zu fields, found %zu", i + 1, header.size(), cells.size()));
    Record r;
    r.row = i + 1;
    for (std::size_t c = 0; c < header.size(); ++c) r.cells[header[c]] = cells[c];
    records.push_back(std::move(r));
  }
  return build(records, opts);
}

Dataset parse_json_dataset(std::string_view text, const LoadOptions& opts) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  const json* arr = &doc;
  if (doc.is_object() && doc.contains("studies")) arr = &doc["studies"];
  if (!arr->is_array()) throw InputError("JSON input must be an array of studies or {\"studies\": [...]}");
  std::vector<Record> records;
  std::size_t row = 0;
  for (const auto& item : *arr) {
    ++row;
    if (!item.is_object()) throw InputError(strformat("row %zu: study entry is not an object", row));
    Record r;
    r.row = row;
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (it.value().is_string())
        r.cells[it.key()] = it.value().get<std::string>();
      else if (it.value().is_number())
        r.cells[it.key()] = strformat("%.17g", it.value().get<double>());
      else if (!it.value().is_null())
        throw InputError(strformat("row %zu: field '%s' must be a number or string", row, it.key().c_str()));
    }
    records.push_back(std::move(r));
  }
  return build(records, opts);
}

Dataset load_dataset(const std::string& path, const LoadOptions& opts) {
  std::string text = read_file(path);
  InputFormat fmt = opts.format;
  if (fmt == InputFormat::Auto) {
    bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    fmt = json_ext ? InputFormat::Json : InputFormat::Csv;
  }
  return fmt == InputFormat::Json ? parse_json_dataset(text, opts) : parse_csv_dataset(text, opts);
}

std::string estimates_csv(const std::vector<EffectEstimate>& rows) {
  std::string out = "label,y,sigma,n\n";
  for (const auto& e : rows) {
    std::string label = e.label;
    if (label.find_first_of(",\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : label) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      label = q + "\"";
    }
    out += strformat("%s,%.17g,%.17g,", label.c_str(), e.y, e.sigma);
    if (e.n) out += strformat("%.17g", *e.n);
    out += "\n";
  }
  return out;
}

namespace {

std::string line(const std::string& name, const Summary& s) {
  return name + "  " + fixed(s.median) + "  [" + fixed(s.lo) + ", " + fixed(s.hi) + "]\n";
}

json summary_json(const Summary& s) {
  return {{"median", s.median}, {"lo", s.lo},   {"hi", s.hi},
          {"mean", s.mean},     {"sd", s.sd},   {"level", s.level},
          {"ci", s.kind == CiKind::Shortest ? "shortest" : "central"}};
}

Summary summary_from(const json& j) {
  Summary s;
  s.median = j.at("median").get<double>();
  s.lo = j.at("lo").get<double>();
  s.hi = j.at("hi").get<double>();
  s.mean = j.at("mean").get<double>();
  s.sd = j.at("sd").get<double>();
  s.level = j.at("level").get<double>();
  s.kind = j.at("ci").get<std::string>() == "central" ? CiKind::Central : CiKind::Shortest;
  return s;
}

}  // namespace

std::string report_text(const AnalysisReport& r) {
  std::string out = "prior  " + r.prior_label + "\n";
  out += "effect prior  " + r.effect_prior_spec + "\n";
  out += strformat("level  %g (%s)\n", r.tau.level, r.tau.kind == CiKind::Shortest ? "shortest" : "central");
  out += line("tau", r.tau);
  out += line("mu", r.mu);
  out += line("prediction", r.prediction);
  for (std::size_t i = 0; i < r.shrinkage.size(); ++i) out += line("theta[" + r.studies[i].label + "]", r.shrinkage[i]);
  out += "tau MAP  " + fixed(r.map_tau) + "\n";
  if (r.uisd) out += "UISD  " + fixed(*r.uisd) + "\n";
  return out;
}

std::string report_json(const AnalysisReport& r) {
  json j;
  j["schema"] = r.schema;
  j["prior"] = {{"spec", r.prior_spec}, {"label", r.prior_label}};
  j["effect_prior"] = r.effect_prior_spec;
  j["measure"] = to_string(r.measure);
  json studies = json::array();
  for (const auto& s : r.studies) {
    json e = {{"label", s.label}, {"y", s.y}, {"sigma", s.sigma}};
    e["n"] = s.n ? json(*s.n) : json(nullptr);
    studies.push_back(e);
  }
  j["studies"] = studies;
  j["tau"] = summary_json(r.tau);
  j["mu"] = summary_json(r.mu);
  j["prediction"] = summary_json(r.prediction);
  json sh = json::array();
  for (const auto& s : r.shrinkage) sh.push_back(summary_json(s));
  j["shrinkage"] = sh;
  j["map_tau"] = r.map_tau;
  j["uisd"] = r.uisd ? json(*r.uisd) : json(nullptr);
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  try {
    AnalysisReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw InputError(strformat("unsupported report schema %d", r.schema));
    r.prior_spec = j.at("prior").at("spec").get<std::string>();
    r.prior_label = j.at("prior").at("label").get<std::string>();
    r.effect_prior_spec = j.at("effect_prior").get<std::string>();
    r.measure = parse_measure(j.at("measure").get<std::string>());
    for (const auto& s : j.at("studies")) {
      EffectEstimate e{s.at("label").get<std::string>(), s.at("y").get<double>(), s.at("sigma").get<double>(),
                       std::nullopt};
      if (!s.at("n").is_null()) e.n = s.at("n").get<double>();
      r.studies.push_back(e);
    }
    r.tau = summary_from(j.at("tau"));
    r.mu = summary_from(j.at("mu"));
    r.prediction = summary_from(j.at("prediction"));
    for (const auto& s : j.at("shrinkage")) r.shrinkage.push_back(summary_from(s));
    r.map_tau = j.at("map_tau").get<double>();
    if (!j.at("uisd").is_null()) r.uisd = j.at("uisd").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_csv(const AnalysisReport& r) {
  std::string out = "parameter,median,lo,hi,mean,sd\n";
  auto row = [&](const std::string& name, const Summary& s) {
    out += strformat("\"%s\",%.17g,%.17g,%.17g,%.17g,%.17g\n", name.c_str(), s.median, s.lo, s.hi, s.mean, s.sd);
  };
  row("tau", r.tau);
  row("mu", r.mu);
  for (std::size_t i = 0; i < r.shrinkage.size(); ++i) row("theta[" + r.studies[i].label + "]", r.shrinkage[i]);
  row("prediction", r.prediction);
  return out;
}

}  // namespace nnhm
