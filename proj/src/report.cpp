#include "hsc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hsc::report {
namespace {

using nlohmann::json;

void write(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << json(it.key()).dump() << ": ";
        write(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        write(os, v, indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

json opt(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_opt(const std::optional<double>& v) {
  return v ? csv_num(*v) : std::string{};
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string dump(const json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << "\n";
  return os.str();
}

json to_json(const convexity::ConvexityReport& r) {
  return {
      {"mode", std::string(convexity::to_string(r.mode))},
      {"s", r.s},
      {"max_violation", r.max_violation},
      {"witness", {{"x", r.witness.x}, {"y", r.witness.y}, {"t", r.witness.t}}},
      {"samples", r.samples},
      {"seed", r.seed ? json(*r.seed) : json(nullptr)},
  };
}

json to_json(const bounds::BoundResult& r) {
  return {
      {"theorem", r.theorem},
      {"x", r.x},
      {"a", r.a},
      {"b", r.b},
      {"s", r.s},
      {"q", opt(r.q)},
      {"p", opt(r.p)},
      {"M", opt(r.M)},
      {"lhs", r.lhs},
      {"rhs", r.rhs},
      {"slack", r.slack},
      {"hypothesis_ok", r.hypothesis_ok},
      {"fd_derivative", r.fd_derivative},
  };
}

json to_json(const verify::VerifyReport& r) {
  json results = json::array();
  for (const auto& b : r.results) results.push_back(to_json(b));
  return {
      {"theorem", r.theorem},
      {"grid",
       {{"fn", r.grid.fn},
        {"a", r.grid.a},
        {"b", r.grid.b},
        {"s", r.grid.s},
        {"q", opt(r.grid.q)},
        {"p", opt(r.grid.p)},
        {"M", opt(r.grid.M)},
        {"x_count", r.grid.x_count}}},
      {"hypothesis", to_json(r.gate)},
      {"hypothesis_ok", r.hypothesis_ok},
      {"results", results},
      {"min_slack", opt(r.min_slack)},
      {"slack_tolerance", verify::kSlackTolerance},
      {"pass", r.pass},
  };
}

json to_json(const bounds::LambdaArgs& a) {
  return {{"kind", a.kind}, {"theta", a.theta}, {"x", a.x},
          {"s", a.s},       {"vartheta", a.vartheta}, {"rho", a.rho}};
}

std::string csv_header() {
  return "theorem,x,a,b,s,q,p,M,lhs,rhs,slack,hypothesis_ok\n";
}

std::string csv_row(const bounds::BoundResult& r) {
  std::ostringstream os;
  os << r.theorem << ',' << csv_num(r.x) << ',' << csv_num(r.a) << ','
     << csv_num(r.b) << ',' << csv_num(r.s) << ',' << csv_opt(r.q) << ','
     << csv_opt(r.p) << ',' << csv_opt(r.M) << ',' << csv_num(r.lhs) << ','
     << csv_num(r.rhs) << ',' << csv_num(r.slack) << ','
     << (r.hypothesis_ok ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace hsc::report
