#include "darp/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace darp {

double gap(Minutes cost, Minutes bks) {
  if (!(bks > 0.0)) throw std::invalid_argument("best known cost must be positive");
  return 100.0 * (cost - bks) / bks;
}

std::optional<Minutes> known_bks(std::string_view name) {
  std::string key;
  for (char c : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "r1a" || key == "pr01") return 190.02;
  if (key == "r3a" || key == "pr03") return 532.00;
  if (key == "r6a" || key == "pr06") return 785.26;
  if (key == "r8a" || key == "pr08") return 487.84;
  return std::nullopt;
}

std::optional<Minutes> cost_at(const std::vector<TraceRecord>& trace, double at_ms) {
  std::optional<Minutes> cost;
  for (const auto& r : trace) {
    if (r.elapsed_ms > at_ms) break;
    cost = r.best_cost;
  }
  return cost;
}

std::optional<double> median(std::vector<std::optional<double>> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (!a || !b) return a.has_value() && !b.has_value();
    return *a < *b;
  });
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  if (!values[mid - 1] || !values[mid]) return std::nullopt;
  return (*values[mid - 1] + *values[mid]) / 2.0;
}

BenchSummary summarize(std::string instance, const std::vector<std::uint64_t>& seeds,
                       const std::vector<std::vector<TraceRecord>>& traces, const std::vector<double>& checkpoints_s,
                       std::optional<Minutes> bks, const std::vector<std::string>& failures) {
  BenchSummary s;
  s.instance = std::move(instance);
  s.seeds = seeds;
  s.checkpoints_s = checkpoints_s;
  s.bks = bks;

  for (std::size_t t = 0; t < traces.size(); ++t) {
    TrialSummary trial;
    trial.seed = t < seeds.size() ? seeds[t] : 0;
    if (t < failures.size() && !failures[t].empty()) {
      trial.failed = true;
      trial.error = failures[t];
    }
    const auto& trace = traces[t];
    for (const auto& r : trace) {
      if (r.best_cost) {
        trial.first_feasible_ms = r.elapsed_ms;
        trial.first_feasible_cost = r.best_cost;
        break;
      }
    }
    for (double c : checkpoints_s) trial.checkpoint_costs.push_back(cost_at(trace, c * 1000.0));
    if (!trace.empty()) trial.final_cost = trace.back().best_cost;
    s.trials.push_back(std::move(trial));
  }

  for (std::size_t c = 0; c < checkpoints_s.size(); ++c) {
    std::vector<std::optional<double>> costs;
    for (const auto& trial : s.trials) {
      if (!trial.failed) costs.push_back(trial.checkpoint_costs[c]);
    }
    s.median_costs.push_back(median(std::move(costs)));
  }
  std::vector<std::optional<double>> finals;
  for (const auto& trial : s.trials) {
    if (!trial.failed) finals.push_back(trial.final_cost);
  }
  s.median_final = median(std::move(finals));
  if (bks && s.median_final) s.final_gap = gap(*s.median_final, *bks);
  return s;
}

namespace {

std::string fixed2(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::string seconds_label(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gs", s);
  return buf;
}

}  // namespace

std::string format_summary_csv(const BenchSummary& s) {
  std::ostringstream out;
  out << "instance,seed,status,first_feasible_ms,first_feasible_cost";
  for (double c : s.checkpoints_s) out << ",cost_" << seconds_label(c);
  out << ",final_cost,final_gap_pct\n";
  for (const auto& t : s.trials) {
    out << s.instance << ',' << t.seed << ',' << (t.failed ? "failed" : "ok") << ','
        << fixed2(t.first_feasible_ms) << ',' << fixed2(t.first_feasible_cost);
    for (const auto& c : t.checkpoint_costs) out << ',' << fixed2(c);
    std::optional<double> g;
    if (s.bks && t.final_cost) g = gap(*t.final_cost, *s.bks);
    out << ',' << fixed2(t.final_cost) << ',' << fixed2(g) << '\n';
  }
  out << s.instance << ",median,,,";
  for (const auto& c : s.median_costs) out << ',' << fixed2(c);
  out << ',' << fixed2(s.median_final) << ',' << fixed2(s.final_gap) << '\n';
  return out.str();
}

std::string format_summary_table(const BenchSummary& s) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"seed", "first ms", "first cost"};
  for (double c : s.checkpoints_s) header.push_back(seconds_label(c));
  header.push_back("final");
  header.push_back("gap %");
  rows.push_back(header);
  for (const auto& t : s.trials) {
    std::vector<std::string> row{std::to_string(t.seed) + (t.failed ? " (failed)" : ""), fixed2(t.first_feasible_ms),
                                 fixed2(t.first_feasible_cost)};
    for (const auto& c : t.checkpoint_costs) row.push_back(fixed2(c));
    std::optional<double> g;
    if (s.bks && t.final_cost) g = gap(*t.final_cost, *s.bks);
    row.push_back(fixed2(t.final_cost));
    row.push_back(fixed2(g));
    rows.push_back(row);
  }
  std::vector<std::string> med{"median", "", ""};
  for (const auto& c : s.median_costs) med.push_back(fixed2(c));
  med.push_back(fixed2(s.median_final));
  med.push_back(fixed2(s.final_gap));
  rows.push_back(med);

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  out << s.instance;
  if (s.bks) out << " (BKS " << fixed2(s.bks) << ")";
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "  " : "") << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace darp
