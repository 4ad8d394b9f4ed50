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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfsched/io.hpp"
#include "pfsched/oracle.hpp"
#include "pfsched/pfs_lp.hpp"
#include "pfsched/transform.hpp"
#include "pfsched/validate.hpp"

namespace {

using json = nlohmann::ordered_json;
using pfsched::Criterion;
using pfsched::CriterionKind;
using pfsched::Errc;
using pfsched::Error;
using pfsched::Instance;
using pfsched::InstanceDocument;
using pfsched::Rat;
using pfsched::Schedule;
using pfsched::ScheduleDocument;
using pfsched::ValidationReport;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::kIoError, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << content;
  if (!out) {
    throw Error(Errc::kIoError, "cannot write " + out_path);
  }
}

struct Args {
  std::string instance_path;
  std::string schedule_path;
  std::string out_path;
  std::vector<int> order;
  std::string criterion;
  std::string common_due;
  std::string mode;
  int exchange_j = 0;
  int exchange_k = 0;
  bool check_non_delay = false;
  bool check_vertical = false;
  bool check_pfs = false;
  int n = 1;
  int m = 1;
  int max_value = 10;
  std::uint64_t seed = 0;
  bool agreeable = false;
  int oracle_cap = 0;
};

InstanceDocument load_instance(const Args& a) {
  InstanceDocument doc = pfsched::parse_instance_document(
      read_file(a.instance_path));
  if (!a.criterion.empty()) {
    std::optional<Rat> due;
    if (!a.common_due.empty()) {
      due = Rat::parse(a.common_due);
    } else if (doc.criterion.common_due) {
      due = doc.criterion.common_due;
    }
    doc.criterion = pfsched::criterion_by_name(a.criterion, doc.instance, due);
    doc.criterion_name =
        a.criterion == "wulj" ? std::nullopt
                              : std::optional<std::string>(a.criterion);
  } else if (!a.common_due.empty()) {
    if (doc.criterion.kind != CriterionKind::kWeightedLateCommonDue) {
      throw Error(Errc::kInvalidArgument,
                  "--common-due only applies to the wulj criterion");
    }
    doc.criterion.common_due = Rat::parse(a.common_due);
  }
  return doc;
}

ScheduleDocument load_schedule(const Args& a) {
  return pfsched::parse_schedule_document(read_file(a.schedule_path));
}

int cmd_solve(const Args& a) {
  InstanceDocument doc = load_instance(a);
  ScheduleDocument out{Schedule(std::vector<pfsched::Piece>{}), std::nullopt,
                       std::nullopt, std::nullopt};
  if (doc.criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    if (!a.order.empty()) {
      throw Error(Errc::kInvalidArgument,
                  "--order does not apply to the late-jobs procedure");
    }
    pfsched::CommonDueResult res = pfsched::solve_common_due_late_jobs(
        doc.instance, *doc.criterion.common_due);
    std::cerr << "on-time prefix: " << res.k_star << " of "
              << doc.instance.n() << " jobs\n";
    out = ScheduleDocument{std::move(res.schedule), std::move(res.value),
                           std::move(res.certificate.permutation),
                           pfsched::order_case_name(res.certificate.kind)};
  } else {
    pfsched::SolveResult res =
        a.order.empty()
            ? pfsched::solve(doc.instance, doc.criterion)
            : pfsched::solve(doc.instance, doc.criterion, &a.order);
    out = ScheduleDocument{std::move(res.schedule), std::move(res.value),
                           std::move(res.certificate.permutation),
                           pfsched::order_case_name(res.certificate.kind)};
  }
  emit(a.out_path, pfsched::render_schedule_document(out));
  return 0;
}

json report_json(const ValidationReport& report) {
  json arr = json::array();
  for (const pfsched::Violation& v : report.violations) {
    json item;
    item["kind"] = pfsched::violation_kind_name(v.kind);
    item["jobs"] = v.jobs;
    if (v.from) item["from"] = v.from->str();
    if (v.to) item["to"] = v.to->str();
    item["message"] = v.message;
    arr.push_back(std::move(item));
  }
  return arr;
}

int cmd_verify(const Args& a) {
  InstanceDocument doc = load_instance(a);
  ScheduleDocument sdoc = load_schedule(a);
  const std::vector<int>* order =
      sdoc.order ? &*sdoc.order : nullptr;

  std::vector<std::pair<std::string, ValidationReport>> checks;
  checks.emplace_back("feasible",
                      pfsched::check_feasible(doc.instance, sdoc.schedule));
  if (a.check_non_delay) {
    checks.emplace_back("non_delay",
                        pfsched::is_non_delay(doc.instance, sdoc.schedule));
  }
  if (a.check_vertical) {
    checks.emplace_back("vertical", pfsched::is_vertically_ordered(
                                        doc.instance, sdoc.schedule, order));
  }
  if (a.check_pfs) {
    checks.emplace_back(
        "pfs", pfsched::is_pfs_like(doc.instance, sdoc.schedule, order));
  }

  bool all_ok = true;
  json out;
  json check_list = json::array();
  for (const auto& [name, report] : checks) {
    all_ok = all_ok && report.ok();
    json item;
    item["name"] = name;
    item["ok"] = report.ok();
    item["violations"] = report_json(report);
    check_list.push_back(std::move(item));
    if (report.ok()) {
      std::cerr << "ok " << name << "\n";
    } else {
      std::cerr << "FAIL " << name << ": "
                << report.violations.front().message << "\n";
    }
  }
  out["ok"] = all_ok;
  out["checks"] = std::move(check_list);
  std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 3;
}

void print_completions(const char* label, const Instance& instance,
                       const Schedule& schedule) {
  std::cerr << label << ":";
  for (const pfsched::Job& j : instance.jobs()) {
    std::cerr << " C_" << j.id << "="
              << pfsched::completion_time(schedule, j.id).str();
  }
  std::cerr << "\n";
}

int cmd_transform(const Args& a) {
  InstanceDocument doc = load_instance(a);
  ScheduleDocument sdoc = load_schedule(a);
  const std::vector<int>* order =
      !a.order.empty() ? &a.order : (sdoc.order ? &*sdoc.order : nullptr);

  print_completions("before", doc.instance, sdoc.schedule);
  Schedule result(std::vector<pfsched::Piece>{});
  bool keep_tags = true;
  if (a.mode == "normalize") {
    result = pfsched::left_shift_normalize(doc.instance, sdoc.schedule);
  } else if (a.mode == "vertical") {
    result = pfsched::vertical_order(doc.instance, sdoc.schedule, order);
  } else if (a.mode == "pfs") {
    result = pfsched::make_pfs(doc.instance, sdoc.schedule, order);
  } else if (a.mode == "exchange") {
    result = pfsched::exchange_pair(doc.instance, sdoc.schedule, a.exchange_j,
                                    a.exchange_k);
    keep_tags = false;  // the swap moves completions out of the tagged order
  } else {
    throw Error(Errc::kInvalidArgument,
                "mode must be normalize, vertical, pfs or exchange");
  }
  print_completions("after", doc.instance, result);

  Rat value = pfsched::evaluate(doc.instance, result, doc.criterion);
  ScheduleDocument out{std::move(result), std::move(value),
                       keep_tags ? sdoc.order : std::nullopt,
                       keep_tags ? sdoc.certificate : std::nullopt};
  emit(a.out_path, pfsched::render_schedule_document(out));
  return 0;
}

int cmd_gantt(const Args& a) {
  InstanceDocument doc = load_instance(a);
  ScheduleDocument sdoc = load_schedule(a);
  emit(a.out_path, pfsched::render_gantt_svg(doc.instance, sdoc.schedule));
  return 0;
}

int cmd_gen(const Args& a) {
  pfsched::GeneratorConfig config;
  config.n = a.n;
  config.m = a.m;
  config.max_value = a.max_value;
  config.seed = a.seed;
  config.agreeable = a.agreeable;
  Instance instance = pfsched::random_instance(config);
  std::string name = a.criterion.empty() ? "sum_cj" : a.criterion;
  std::optional<Rat> due;
  if (!a.common_due.empty()) due = Rat::parse(a.common_due);
  Criterion criterion = pfsched::criterion_by_name(name, instance, due);
  InstanceDocument doc{std::move(instance), std::move(criterion),
                       name == "wulj" ? std::nullopt
                                      : std::optional<std::string>(name)};
  emit(a.out_path, pfsched::render_instance_document(doc));
  return 0;
}

int cmd_oracle(const Args& a) {
  InstanceDocument doc = load_instance(a);
  json out;
  if (doc.criterion.kind == CriterionKind::kWeightedLateCommonDue) {
    int cap = a.oracle_cap > 0 ? a.oracle_cap : 16;
    pfsched::LateJobsResult res = pfsched::brute_force_late_jobs(
        doc.instance, *doc.criterion.common_due, cap);
    out["value"] = res.value.str();
    out["on_time"] = res.on_time_set;
  } else {
    int cap = a.oracle_cap > 0 ? a.oracle_cap : 8;
    pfsched::EnumerationResult res =
        pfsched::enumerate_orders_optimum(doc.instance, doc.criterion, cap);
    out["value"] = res.value.str();
    out["order"] = res.order;
    out["global_optimum"] = res.global_optimum;
  }
  emit(a.out_path, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pfsched: preemptive scheduling on identical parallel machines.\n"
      "Exit codes: 0 success, 1 I/O or parse failure, 2 job order not\n"
      "agreeable, 3 verification failure, 4 transformation precondition\n"
      "violated (also raised by solve --order when the supplied order\n"
      "breaks the completion-order hypothesis)."};
  app.require_subcommand(1);
  Args a;

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance and print the schedule document");
  solve->add_option("instance", a.instance_path, "instance JSON path")
      ->required();
  solve->add_option("--order", a.order, "job order override, e.g. 2,1,3")
      ->delimiter(',');
  solve->add_option("--criterion", a.criterion,
                    "criterion override: sum_cj, sum_wj_tj, lmax, cmax, wulj");
  solve->add_option("--common-due", a.common_due,
                    "common due date for the wulj criterion");
  solve->add_option("--out", a.out_path, "write the document here");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check a schedule document against its instance");
  verify->add_option("instance", a.instance_path, "instance JSON path")
      ->required();
  verify->add_option("schedule", a.schedule_path, "schedule JSON path")
      ->required();
  verify->add_flag("--non-delay", a.check_non_delay,
                   "also require the non-delay property");
  verify->add_flag("--vertical", a.check_vertical,
                   "also require vertical machine ordering");
  verify->add_flag("--pfs", a.check_pfs,
                   "also require the flow-shop-like shape");

  CLI::App* transform = app.add_subcommand(
      "transform", "Rewrite a schedule and print the new document");
  transform->add_option("instance", a.instance_path, "instance JSON path")
      ->required();
  transform->add_option("schedule", a.schedule_path, "schedule JSON path")
      ->required();
  transform
      ->add_option("--mode", a.mode,
                   "normalize, vertical, pfs, or exchange")
      ->required();
  transform->add_option("--order", a.order,
                        "job order for vertical/pfs, e.g. 2,1,3")
      ->delimiter(',');
  transform->add_option("--j", a.exchange_j, "first job for exchange");
  transform->add_option("--k", a.exchange_k, "second job for exchange");
  transform->add_option("--out", a.out_path, "write the document here");

  CLI::App* gantt =
      app.add_subcommand("gantt", "Render a schedule as an SVG chart");
  gantt->add_option("instance", a.instance_path, "instance JSON path")
      ->required();
  gantt->add_option("schedule", a.schedule_path, "schedule JSON path")
      ->required();
  gantt->add_option("--out", a.out_path, "SVG output path")->required();

  CLI::App* gen =
      app.add_subcommand("gen", "Generate a random instance document");
  gen->add_option("--n", a.n, "job count")->required();
  gen->add_option("--m", a.m, "machine count")->required();
  gen->add_option("--max-value", a.max_value, "data bound (default 10)");
  gen->add_option("--seed", a.seed, "random seed");
  gen->add_flag("--agreeable", a.agreeable,
                "co-sort releases and processing times");
  gen->add_option("--criterion", a.criterion,
                  "criterion to embed (default sum_cj)");
  gen->add_option("--common-due", a.common_due,
                  "common due date when embedding wulj");
  gen->add_option("--out", a.out_path, "write the document here");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive-search reference value for an instance");
  oracle->add_option("instance", a.instance_path, "instance JSON path")
      ->required();
  oracle->add_option("--criterion", a.criterion,
                     "criterion override: sum_cj, sum_wj_tj, lmax, cmax, wulj");
  oracle->add_option("--common-due", a.common_due,
                     "common due date for the wulj criterion");
  oracle->add_option("--oracle-cap", a.oracle_cap,
                     "search size cap (default 8 orders / 16 subsets)");
  oracle->add_option("--out", a.out_path, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(a);
    if (app.got_subcommand(verify)) return cmd_verify(a);
    if (app.got_subcommand(transform)) return cmd_transform(a);
    if (app.got_subcommand(gantt)) return cmd_gantt(a);
    if (app.got_subcommand(gen)) return cmd_gen(a);
    if (app.got_subcommand(oracle)) return cmd_oracle(a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::kNotAgreeable:
        return 2;
      case Errc::kOrderHypothesisViolated:
      case Errc::kPreconditionViolated:
        return 4;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
