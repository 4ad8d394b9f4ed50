// Copyright 2026 The pfsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfsched/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

#include <json.hpp>

namespace pfsched {

namespace {

using json = nlohmann::ordered_json;

Rat to_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return Rat(static_cast<long long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    return Rat::parse(v.get<std::string>());
  }
  throw Error(Errc::kIoError,
              where + " must be an integer or an \"a/b\" string");
}

json rat_json(const Rat& r) {
  if (r.den_str() == "1") {
    const std::string& num = r.num_str();
    try {
      size_t used = 0;
      long long n = std::stoll(num, &used);
      if (used == num.size()) return json(n);
    } catch (const std::exception&) {
      // falls through to the string form
    }
  }
  return json(r.str());
}

const json& field(const json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::kIoError, where + " needs a \"" + key + "\" field");
  }
  return obj.at(key);
}

int to_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw Error(Errc::kIoError, where + " must be an integer");
  }
  return v.get<int>();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kIoError, std::string("bad JSON: ") + e.what());
  }
}

std::vector<Rat> to_rat_list(const json& v, const std::string& where) {
  if (!v.is_array()) {
    throw Error(Errc::kIoError, where + " must be an array");
  }
  std::vector<Rat> out;
  for (const json& item : v) out.push_back(to_rat(item, where));
  return out;
}

PiecewiseLinearFn to_function(const json& v, const std::string& where) {
  return PiecewiseLinearFn(
      to_rat_list(field(v, "breakpoints", where), where + ".breakpoints"),
      to_rat(field(v, "initial", where), where + ".initial"),
      to_rat_list(field(v, "slopes", where), where + ".slopes"));
}

const char* name_kind(const std::string& name) {
  if (name == "sum_cj" || name == "sum_wj_tj") return "sum";
  if (name == "lmax" || name == "cmax") return "max";
  if (name == "wulj") return "wulj";
  throw Error(Errc::kIoError, "unknown criterion name \"" + name + "\"");
}

}  // namespace

Criterion criterion_by_name(const std::string& name, const Instance& instance,
                            const std::optional<Rat>& common_due) {
  name_kind(name);
  if (name == "sum_cj") return criterion_sum_completion(instance.n());
  if (name == "sum_wj_tj") return criterion_weighted_tardiness(instance);
  if (name == "lmax") return criterion_lmax(instance);
  if (name == "cmax") return criterion_cmax(instance.n());
  if (!common_due) {
    throw Error(Errc::kIoError, "the wulj criterion needs a common due date");
  }
  return criterion_weighted_late_common_due(*common_due);
}

InstanceDocument parse_instance_document(const std::string& text) {
  json doc = parse_text(text);
  int machines = to_int(field(doc, "machines", "instance"), "machines");
  const json& jobs_json = field(doc, "jobs", "instance");
  if (!jobs_json.is_array()) {
    throw Error(Errc::kIoError, "\"jobs\" must be an array");
  }
  std::vector<Job> jobs;
  for (const json& item : jobs_json) {
    Job j;
    j.id = to_int(field(item, "id", "job"), "job.id");
    j.release = to_rat(field(item, "release", "job"), "job.release");
    j.processing = to_rat(field(item, "processing", "job"), "job.processing");
    if (item.contains("due")) j.due = to_rat(item.at("due"), "job.due");
    if (item.contains("weight")) {
      j.weight = to_rat(item.at("weight"), "job.weight");
    }
    jobs.push_back(std::move(j));
  }
  Instance instance(machines, std::move(jobs));

  const json& crit = field(doc, "criterion", "instance");
  const json& kind_json = field(crit, "kind", "criterion");
  if (!kind_json.is_string()) {
    throw Error(Errc::kIoError, "criterion.kind must be a string");
  }
  std::string kind = kind_json.get<std::string>();

  if (kind == "wulj") {
    if (crit.contains("functions")) {
      throw Error(Errc::kIoError,
                  "the wulj criterion carries no cost functions");
    }
    Rat d = to_rat(field(crit, "common_due", "criterion"),
                   "criterion.common_due");
    return InstanceDocument{std::move(instance),
                            criterion_weighted_late_common_due(d),
                            std::nullopt};
  }
  if (kind != "sum" && kind != "max") {
    throw Error(Errc::kIoError, "criterion.kind must be \"sum\", \"max\" or "
                                "\"wulj\", not \"" + kind + "\"");
  }
  if (crit.contains("common_due")) {
    throw Error(Errc::kIoError,
                "common_due only applies to the wulj criterion");
  }
  const json& fns = field(crit, "functions", "criterion");
  if (fns.is_string()) {
    std::string name = fns.get<std::string>();
    if (kind != name_kind(name)) {
      throw Error(Errc::kIoError, "criterion \"" + name +
                                      "\" goes with kind \"" +
                                      name_kind(name) + "\", not \"" + kind +
                                      "\"");
    }
    Criterion criterion = criterion_by_name(name, instance, std::nullopt);
    return InstanceDocument{std::move(instance), std::move(criterion),
                            std::move(name)};
  }
  if (!fns.is_array()) {
    throw Error(Errc::kIoError,
                "criterion.functions must be a name or an array");
  }
  if (static_cast<int>(fns.size()) != instance.n()) {
    throw Error(Errc::kIoError,
                "criterion.functions must list one function per job");
  }
  Criterion criterion;
  criterion.kind =
      kind == "sum" ? CriterionKind::kSum : CriterionKind::kMax;
  for (const json& fn : fns) {
    criterion.per_job.push_back(to_function(fn, "criterion function"));
  }
  return InstanceDocument{std::move(instance), std::move(criterion),
                          std::nullopt};
}

std::string render_instance_document(const InstanceDocument& doc) {
  json out;
  out["machines"] = doc.instance.machines();
  json jobs = json::array();
  for (const Job& j : doc.instance.jobs()) {
    json item;
    item["id"] = j.id;
    item["release"] = rat_json(j.release);
    item["processing"] = rat_json(j.processing);
    if (j.due) item["due"] = rat_json(*j.due);
    if (j.weight) item["weight"] = rat_json(*j.weight);
    jobs.push_back(std::move(item));
  }
  out["jobs"] = std::move(jobs);

  json crit;
  switch (doc.criterion.kind) {
    case CriterionKind::kSum:
      crit["kind"] = "sum";
      break;
    case CriterionKind::kMax:
      crit["kind"] = "max";
      break;
    case CriterionKind::kWeightedLateCommonDue:
      crit["kind"] = "wulj";
      break;
  }
  if (doc.criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    crit["common_due"] = rat_json(*doc.criterion.common_due);
  } else if (doc.criterion_name) {
    crit["functions"] = *doc.criterion_name;
  } else {
    json fns = json::array();
    for (const PiecewiseLinearFn& fn : doc.criterion.per_job) {
      json item;
      json breakpoints = json::array();
      for (const Rat& b : fn.breakpoints()) breakpoints.push_back(rat_json(b));
      item["breakpoints"] = std::move(breakpoints);
      item["initial"] = rat_json(fn.initial_value());
      json slopes = json::array();
      for (const Rat& s : fn.slopes()) slopes.push_back(rat_json(s));
      item["slopes"] = std::move(slopes);
      fns.push_back(std::move(item));
    }
    crit["functions"] = std::move(fns);
  }
  out["criterion"] = std::move(crit);
  return out.dump(2) + "\n";
}

ScheduleDocument parse_schedule_document(const std::string& text) {
  json doc = parse_text(text);
  const json& pieces_json = field(doc, "pieces", "schedule");
  if (!pieces_json.is_array()) {
    throw Error(Errc::kIoError, "\"pieces\" must be an array");
  }
  std::vector<Piece> pieces;
  for (const json& item : pieces_json) {
    Piece p;
    p.job = to_int(field(item, "job", "piece"), "piece.job");
    p.machine = to_int(field(item, "machine", "piece"), "piece.machine");
    p.start = to_rat(field(item, "start", "piece"), "piece.start");
    p.end = to_rat(field(item, "end", "piece"), "piece.end");
    pieces.push_back(std::move(p));
  }
  ScheduleDocument out{Schedule(std::move(pieces)), std::nullopt, std::nullopt,
                       std::nullopt};
  if (doc.contains("value")) out.value = to_rat(doc.at("value"), "value");
  if (doc.contains("order")) {
    const json& order_json = doc.at("order");
    if (!order_json.is_array()) {
      throw Error(Errc::kIoError, "\"order\" must be an array");
    }
    std::vector<int> order;
    for (const json& id : order_json) order.push_back(to_int(id, "order"));
    out.order = std::move(order);
  }
  if (doc.contains("certificate")) {
    if (!doc.at("certificate").is_string()) {
      throw Error(Errc::kIoError, "\"certificate\" must be a string");
    }
    out.certificate = doc.at("certificate").get<std::string>();
  }
  return out;
}

std::string render_schedule_document(const ScheduleDocument& doc) {
  json out;
  json pieces = json::array();
  for (const Piece& p : doc.schedule.pieces()) {
    json item;
    item["job"] = p.job;
    item["machine"] = p.machine;
    item["start"] = rat_json(p.start);
    item["end"] = rat_json(p.end);
    pieces.push_back(std::move(item));
  }
  out["pieces"] = std::move(pieces);
  if (doc.value) out["value"] = doc.value->str();
  if (doc.order) out["order"] = *doc.order;
  if (doc.certificate) out["certificate"] = *doc.certificate;
  return out.dump(2) + "\n";
}

namespace {

double rat_to_double(const Rat& r) {
  return std::stod(r.num_str()) / std::stod(r.den_str());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

}  // namespace

std::string render_gantt_svg(const Instance& instance,
                             const Schedule& schedule) {
  const double x0 = 70.0;
  const double plot_w = 660.0;
  const double top = 20.0;
  const double band_h = 34.0;
  const double bar_h = 24.0;
  const int m = instance.machines();
  const double axis_y = top + m * band_h + 8.0;
  const double width = x0 + plot_w + 20.0;
  const double height = axis_y + 30.0;

  Rat t_max(1);
  std::set<Rat> ticks{Rat(0)};
  std::set<Rat> releases;
  for (const Job& j : instance.jobs()) {
    t_max = rat_max(t_max, j.release);
    releases.insert(j.release);
  }
  for (const Piece& p : schedule.pieces()) {
    t_max = rat_max(t_max, p.end);
    ticks.insert(p.start);
    ticks.insert(p.end);
  }
  ticks.insert(t_max);
  ticks.insert(releases.begin(), releases.end());
  auto X = [&](const Rat& t) {
    return x0 + rat_to_double(t / t_max) * plot_w;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" fill=\"#ffffff\"/>\n";

  for (int i = 1; i <= m; ++i) {
    double y = top + (i - 1) * band_h;
    svg += "<text x=\"10\" y=\"" + fmt(y + bar_h / 2 + 4) +
           "\" font-family=\"sans-serif\" font-size=\"13\">M" +
           std::to_string(i) + "</text>\n";
    svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y) + "\" width=\"" +
           fmt(plot_w) + "\" height=\"" + fmt(bar_h) +
           "\" fill=\"#f7f7f7\" stroke=\"#bbbbbb\"/>\n";
  }

  for (const Piece& p : schedule.pieces()) {
    double xa = X(p.start);
    double xb = X(p.end);
    double y = top + (p.machine - 1) * band_h;
    const char* color = kPalette[(p.job - 1) % 12];
    svg += "<rect x=\"" + fmt(xa) + "\" y=\"" + fmt(y) + "\" width=\"" +
           fmt(xb - xa) + "\" height=\"" + fmt(bar_h) + "\" fill=\"" + color +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + fmt((xa + xb) / 2) + "\" y=\"" +
           fmt(y + bar_h / 2 + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#ffffff\">" +
           std::to_string(p.job) + "</text>\n";
  }

  for (const Rat& r : releases) {
    double x = X(r);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(top) + "\" x2=\"" +
           fmt(x) + "\" y2=\"" + fmt(axis_y) +
           "\" stroke=\"#d33333\" stroke-dasharray=\"4 2\"/>\n";
  }

  svg += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" +
         fmt(x0 + plot_w) + "\" y2=\"" + fmt(axis_y) +
         "\" stroke=\"#000000\"/>\n";
  for (const Rat& t : ticks) {
    double x = X(t);
    svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" +
           fmt(x) + "\" y2=\"" + fmt(axis_y + 5) +
           "\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(axis_y + 18) +
           "\" font-family=\"sans-serif\" font-size=\"10\" "
           "text-anchor=\"middle\">" +
           t.str() + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace pfsched
