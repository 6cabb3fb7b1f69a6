#pragma once

#include <string>

#include <json.hpp>

#include "cjsp/error.hpp"
#include "cjsp/schedule.hpp"

namespace cjsp {

// Schedule document as written by `solve` and read by `gantt`/`validate`.
// Times stay in internal units; `scale` converts to display units.
struct ScheduleDocument {
  std::string instance;
  int order = 1;
  Schedule schedule;
};

inline nlohmann::ordered_json to_json(const ScheduleDocument& doc) {
  nlohmann::ordered_json out;
  out["instance"] = doc.instance;
  out["order"] = doc.order;
  out["scale"] = doc.schedule.scale;
  out["makespan"] = doc.schedule.makespan;
  auto& entries = out["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.schedule.entries) {
    nlohmann::ordered_json row;
    row["job"] = e.job;
    row["base_job"] = e.job / doc.order;
    row["copy"] = e.job % doc.order;
    row["op"] = e.op;
    row["machine"] = e.machine;
    row["start"] = e.start;
    row["end"] = e.end;
    entries.push_back(std::move(row));
  }
  return out;
}

inline std::string dump_schedule_json(const ScheduleDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ScheduleDocument parse_schedule_json(const std::string& text) {
  ScheduleDocument doc;
  try {
    const auto in = nlohmann::json::parse(text);
    doc.instance = in.value("instance", std::string{});
    doc.order = in.value("order", 1);
    doc.schedule.scale = in.value("scale", 1);
    doc.schedule.makespan = in.at("makespan").get<Time>();
    for (const auto& row : in.at("entries")) {
      doc.schedule.entries.push_back(ScheduledOp{row.at("job").get<int>(), row.at("op").get<int>(),
                                                 row.at("machine").get<int>(), row.at("start").get<Time>(),
                                                 row.at("end").get<Time>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedHeader, std::string("bad schedule JSON: ") + e.what());
  }
  if (doc.order < 1) throw Error(ErrorKind::OrderZero, "schedule JSON has order < 1");
  return doc;
}

}  // namespace cjsp
