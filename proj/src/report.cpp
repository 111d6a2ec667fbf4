#include "pss/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "pss/errors.hpp"

namespace pss
{

using nlohmann::json;

namespace
{

json number(double v)
{
  if (std::isfinite(v))
    return v;
  return format_double(v);
}

double parse_double(const std::string& s)
{
  if (s == "inf")
    return HUGE_VAL;
  if (s == "-inf")
    return -HUGE_VAL;
  if (s == "nan")
    return std::nan("");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ExportError("malformed number '" + s + "'");
  }
  if (used != s.size())
    throw ExportError("malformed number '" + s + "'");
  return v;
}

double number_from(const json& j)
{
  if (j.is_string())
    return parse_double(j.get<std::string>());
  return j.get<double>();
}

std::vector<double> numbers_from(const json& j)
{
  std::vector<double> out;
  for (const auto& v : j)
    out.push_back(number_from(v));
  return out;
}

json numbers(const std::vector<double>& values)
{
  json a = json::array();
  for (double v : values)
    a.push_back(number(v));
  return a;
}

json stats_json(const StatsSummary& s)
{
  return {{"min", number(s.min)},   {"max", number(s.max)}, {"median", number(s.median)},
          {"mean", number(s.mean)}, {"std", number(s.std)}, {"count", s.count}};
}

StatsSummary stats_from(const json& j)
{
  StatsSummary s;
  s.min = number_from(j.at("min"));
  s.max = number_from(j.at("max"));
  s.median = number_from(j.at("median"));
  s.mean = number_from(j.at("mean"));
  s.std = number_from(j.at("std"));
  s.count = j.at("count").get<std::size_t>();
  return s;
}

const char* format_name(ReportFormat f) { return f == ReportFormat::json ? "json" : "csv"; }

std::vector<std::string> split(const std::string& line, char sep)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep))
    out.push_back(field);
  if (!line.empty() && line.back() == sep)
    out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double v)
{
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const BatchReport& report, std::ostream& out)
{
  out << "run,seed,final_error";
  for (std::size_t m : report.config.milestones)
    out << ",milestone_" << m;
  out << '\n';

  for (const auto& r : report.runs) {
    out << r.run << ',' << r.seed << ',' << format_double(r.final_error);
    for (double e : r.milestone_errors)
      out << ',' << format_double(e);
    out << '\n';
  }

  const StatsSummary& s = report.error_stats;
  out << "# stats\n";
  out << "min," << format_double(s.min) << '\n';
  out << "max," << format_double(s.max) << '\n';
  out << "median," << format_double(s.median) << '\n';
  out << "mean," << format_double(s.mean) << '\n';
  out << "std," << format_double(s.std) << '\n';
  if (report.success_rate)
    out << "success_rate," << format_double(*report.success_rate) << '\n';
}

void write_json(const BatchReport& report, std::ostream& out)
{
  const ExperimentConfig& c = report.config;
  json config = {
    {"problem", c.problem},
    {"dims", c.dims ? json(*c.dims) : json(nullptr)},
    {"alpha", number(c.params.alpha)},
    {"beta", c.params.beta},
    {"gamma", c.params.gamma},
    {"replicates", c.replicates},
    {"base_seed", c.base_seed},
    {"milestones", c.milestones},
    {"output", c.output_path},
    {"format", format_name(c.format)},
    {"jobs", c.jobs},
    {"retighten_on_stall", c.retighten_on_stall},
    {"region_lower", numbers(c.region_lower)},
    {"region_upper", numbers(c.region_upper)},
  };

  json runs = json::array();
  for (const auto& r : report.runs)
    runs.push_back({
      {"run", r.run},
      {"seed", r.seed},
      {"final_error", number(r.final_error)},
      {"final_fitness", number(r.final_fitness)},
      {"final_x", numbers(r.final_x)},
      {"milestone_errors", numbers(r.milestone_errors)},
      {"evaluations", r.evaluations},
      {"wall_seconds", number(r.wall_seconds)},
    });

  json doc = {
    {"config", std::move(config)},
    {"optimum", report.optimum ? number(*report.optimum) : json(nullptr)},
    {"runs", std::move(runs)},
    {"stats", stats_json(report.error_stats)},
    {"fitness_stats", stats_json(report.fitness_stats)},
    {"success_rate", report.success_rate ? number(*report.success_rate) : json(nullptr)},
  };
  out << doc.dump(2) << '\n';
}

BatchReport read_json(std::istream& in)
{
  try {
    const json doc = json::parse(in);
    BatchReport report;

    const json& c = doc.at("config");
    ExperimentConfig& cfg = report.config;
    cfg.problem = c.at("problem").get<std::string>();
    if (!c.at("dims").is_null())
      cfg.dims = c.at("dims").get<std::size_t>();
    cfg.params.alpha = number_from(c.at("alpha"));
    cfg.params.beta = c.at("beta").get<std::size_t>();
    cfg.params.gamma = c.at("gamma").get<std::size_t>();
    cfg.replicates = c.at("replicates").get<std::size_t>();
    cfg.base_seed = c.at("base_seed").get<std::uint64_t>();
    cfg.milestones = c.at("milestones").get<std::vector<std::size_t>>();
    cfg.output_path = c.at("output").get<std::string>();
    cfg.format = c.at("format").get<std::string>() == "json" ? ReportFormat::json : ReportFormat::csv;
    cfg.jobs = c.at("jobs").get<std::size_t>();
    cfg.retighten_on_stall = c.at("retighten_on_stall").get<bool>();
    cfg.region_lower = numbers_from(c.at("region_lower"));
    cfg.region_upper = numbers_from(c.at("region_upper"));

    if (!doc.at("optimum").is_null())
      report.optimum = number_from(doc.at("optimum"));
    for (const auto& r : doc.at("runs")) {
      RunResult rr;
      rr.run = r.at("run").get<std::size_t>();
      rr.seed = r.at("seed").get<std::uint64_t>();
      rr.final_error = number_from(r.at("final_error"));
      rr.final_fitness = number_from(r.at("final_fitness"));
      rr.final_x = numbers_from(r.at("final_x"));
      rr.milestone_errors = numbers_from(r.at("milestone_errors"));
      rr.evaluations = r.at("evaluations").get<std::size_t>();
      rr.wall_seconds = number_from(r.at("wall_seconds"));
      report.runs.push_back(std::move(rr));
    }
    report.error_stats = stats_from(doc.at("stats"));
    report.fitness_stats = stats_from(doc.at("fitness_stats"));
    if (!doc.at("success_rate").is_null())
      report.success_rate = number_from(doc.at("success_rate"));
    return report;
  } catch (const json::exception& e) {
    throw ExportError(std::string("malformed JSON report: ") + e.what());
  }
}

CsvReport read_csv(std::istream& in)
{
  CsvReport out;
  std::string line;
  if (!std::getline(in, line))
    throw ExportError("empty CSV report");
  out.header = split(line, ',');
  if (out.header.size() < 3 || out.header[0] != "run" || out.header[1] != "seed" || out.header[2] != "final_error")
    throw ExportError("unexpected CSV header '" + line + "'");

  bool in_stats = false;
  while (std::getline(in, line)) {
    if (line == "# stats") {
      in_stats = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (!in_stats) {
      if (fields.size() != out.header.size())
        throw ExportError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(out.header.size()));
      out.seeds.push_back(std::stoull(fields[1]));
      std::vector<double> row;
      for (std::size_t i = 2; i < fields.size(); ++i)
        row.push_back(parse_double(fields[i]));
      out.rows.push_back(std::move(row));
      continue;
    }
    if (fields.size() != 2)
      throw ExportError("malformed stats line '" + line + "'");
    const double v = parse_double(fields[1]);
    if (fields[0] == "min")
      out.stats.min = v;
    else if (fields[0] == "max")
      out.stats.max = v;
    else if (fields[0] == "median")
      out.stats.median = v;
    else if (fields[0] == "mean")
      out.stats.mean = v;
    else if (fields[0] == "std")
      out.stats.std = v;
    else if (fields[0] == "success_rate")
      out.success_rate = v;
    else
      throw ExportError("unknown stats key '" + fields[0] + "'");
  }
  if (!in_stats)
    throw ExportError("CSV report lacks the '# stats' block");
  out.stats.count = out.rows.size();
  return out;
}

void export_report(const BatchReport& report)
{
  const std::string& path = report.config.output_path;
  auto write = [&](std::ostream& os) {
    if (report.config.format == ReportFormat::json)
      write_json(report, os);
    else
      write_csv(report, os);
  };

  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout)
      throw ExportError("failed writing report to stdout");
    return;
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os)
    throw ExportError("cannot open '" + path + "' for writing");
  write(os);
  os.flush();
  if (!os)
    throw ExportError("failed writing report to '" + path + "'");
}

}  // namespace pss
