#include "mothernet/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mothernet/schreier.hpp"

namespace mothernet {

namespace {

template <class T>
std::string cell(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return format_double(value);
  } else {
    return to_string(value);
  }
}

template <class T>
nlohmann::json json_value(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return value;
  } else {
    return to_string(value);
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

template <class T>
nlohmann::json bound_report_to_json(const BoundReport<T>& report) {
  nlohmann::json doc;
  doc["bound"] = json_value(report.bound);
  if constexpr (!std::is_same_v<T, double>) doc["bound_float"] = report.bound.get_d();
  if (report.solver_resistance) doc["res"] = *report.solver_resistance;
  if (report.gap_ratio) doc["ratio"] = *report.gap_ratio;
  auto& rows = doc["cutsets"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json item{{"id", row.id}, {"size", row.size}};
    if (!row.label.empty()) item["label"] = row.label;
    if (row.weight) item["weight"] = json_value(*row.weight);
    item["split_conductance"] = row.split_conductance ? json_value(*row.split_conductance) : nlohmann::json("inf");
    item["contribution"] = json_value(row.contribution);
    rows.push_back(std::move(item));
  }
  return doc;
}

template <class T>
std::string bound_report_csv(const BoundReport<T>& report) {
  std::ostringstream out;
  out << "cutset,size,weight,split_conductance,contribution\n";
  for (const auto& row : report.rows) {
    out << row.id << ',' << row.size << ',' << (row.weight ? cell(*row.weight) : "") << ','
        << (row.split_conductance ? cell(*row.split_conductance) : "inf") << ',' << cell(row.contribution) << '\n';
  }
  return out.str();
}

template nlohmann::json bound_report_to_json<Rational>(const BoundReport<Rational>&);
template nlohmann::json bound_report_to_json<double>(const BoundReport<double>&);
template std::string bound_report_csv<Rational>(const BoundReport<Rational>&);
template std::string bound_report_csv<double>(const BoundReport<double>&);

nlohmann::json theorem_certificate(const TheoremBound& bound, const TreeShape& shape, bool embed_allocation) {
  nlohmann::json doc = bound_report_to_json(bound.report);
  doc["d"] = bound.degree;
  doc["shape"] = bound.shape;
  doc["s"] = bound.s;
  doc["t"] = bound.t;
  doc["n"] = bound.n;
  doc["window"] = {bound.first, bound.last};
  doc["sources"] = "positions [0, " + std::to_string(bound.first) + ")";
  doc["sinks"] = "positions [" + std::to_string(std::uint64_t{1} << bound.t) + ", " +
                 std::to_string(std::uint64_t{1} << bound.n) + ")";
  if (bound.resistance) {
    doc["res_mode"] = bound.resistance->mode == SolveMode::exact ? "exact" : "float";
    if (bound.resistance->exact) doc["res_exact"] = to_string(*bound.resistance->exact);
    if (bound.resistance->mode != SolveMode::exact) doc["residual"] = bound.resistance->residual;
  }
  if (embed_allocation) {
    const Network net = build_projected(bound.degree, shape, bound.n);
    const auto family = enlarged_family(net, bound.first, bound.last);
    auto& rows = doc["cutsets"];
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto shares = cutset_shares(net, family[i], shape);
      auto& edges = rows[i]["edges"] = nlohmann::json::array();
      for (std::size_t j = 0; j < family[i].edges.size(); ++j) {
        const Edge& e = net.edge(family[i].edges[j]);
        edges.push_back({{"u", net.vertex(e.u).word.to_string()},
                         {"v", net.vertex(e.v).word.to_string()},
                         {"type", e.type},
                         {"conductance", to_string(e.conductance)},
                         {"share", to_string(shares[j])}});
      }
    }
  }
  return doc;
}

std::string cutset_table_csv(int d, const TreeShape& shape, std::size_t n, std::uint64_t first, std::uint64_t last) {
  const Network net = build_projected(d, shape, n);
  const auto family = enlarged_family(net, first, last);
  std::ostringstream out;
  out << "a_hat,size,conductance,asymptotic,ratio\n";
  for (const MotherCutset& cut : family) {
    const Rational c = cutset_conductance(cut, net, shape);
    out << cut.position.value << ',' << cut.edges.size() << ',' << to_string(c) << ',';
    if (cut.position.value >= 2) {
      const double asym = asymptotic_conductance(cut.position, shape, d);
      out << format_double(asym) << ',' << format_double(c.get_d() / asym);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "t,bound,res,ratio,bound_per_step,bound_per_log_step\n";
  for (const auto& row : rows) {
    out << row.t << ',' << to_string(row.bound) << ',' << (row.resistance ? format_double(*row.resistance) : "")
        << ',' << (row.resistance ? format_double(row.bound.get_d() / *row.resistance) : "") << ','
        << format_double(row.per_step) << ',' << format_double(row.per_log_step) << '\n';
  }
  return out.str();
}

std::string recurrence_csv(const std::vector<RecurrenceRow>& rows) {
  std::ostringstream out;
  out << "t,bound,increment,res\n";
  for (const auto& row : rows) {
    out << row.t << ',' << to_string(row.bound) << ',' << to_string(row.increment) << ','
        << (row.resistance ? format_double(*row.resistance) : "") << '\n';
  }
  return out.str();
}

}  // namespace mothernet
