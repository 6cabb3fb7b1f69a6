#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "cjsp/error.hpp"
#include "cjsp/schedule.hpp"

namespace cjsp {

enum class GanttFormat { Svg, Ascii };

namespace detail {

inline std::string fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

inline char job_glyph(int job) {
  static constexpr char kGlyphs[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  return kGlyphs[job % (sizeof(kGlyphs) - 1)];
}

// Tick spacing of 1, 2 or 5 times a power of ten, about ten ticks per axis.
inline Time tick_step(Time span) {
  Time step = 1;
  while (span / step > 10) {
    if (span / (step * 2) <= 10) return step * 2;
    if (span / (step * 5) <= 10) return step * 5;
    step *= 10;
  }
  return step;
}

inline std::vector<ScheduledOp> sorted_by_lane(const Schedule& sched) {
  std::vector<ScheduledOp> ops = sched.entries;
  std::sort(ops.begin(), ops.end(), [](const ScheduledOp& a, const ScheduledOp& b) {
    if (a.machine != b.machine) return a.machine < b.machine;
    if (a.start != b.start) return a.start < b.start;
    return a.job < b.job;
  });
  return ops;
}

inline int lane_count(const Schedule& sched) {
  int lanes = 0;
  for (const auto& e : sched.entries) lanes = std::max(lanes, e.machine + 1);
  return lanes;
}

inline std::string render_svg(const Schedule& sched) {
  constexpr double kLeft = 60, kTop = 20, kLane = 28, kGap = 6, kPlot = 1000;
  const int lanes = lane_count(sched);
  const Time span = std::max<Time>(sched.makespan, 1);
  const double per_unit = kPlot / static_cast<double>(span);
  const double axis_y = kTop + lanes * (kLane + kGap);
  const double width = kLeft + kPlot + 40;
  const double height = axis_y + 40;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(width) + "\" height=\"" + fixed2(height) +
         "\" font-family=\"monospace\" font-size=\"11\">\n";
  for (int m = 0; m < lanes; ++m) {
    const double y = kTop + m * (kLane + kGap);
    out += "<text x=\"4\" y=\"" + fixed2(y + kLane / 2 + 4) + "\">M" + std::to_string(m) + "</text>\n";
  }
  for (const auto& e : sorted_by_lane(sched)) {
    const double x = kLeft + e.start * per_unit;
    const double y = kTop + e.machine * (kLane + kGap);
    const double w = (e.end - e.start) * per_unit;
    const int hue = (e.job * 47) % 360;
    out += "<rect x=\"" + fixed2(x) + "\" y=\"" + fixed2(y) + "\" width=\"" + fixed2(w) + "\" height=\"" +
           fixed2(kLane) + "\" fill=\"hsl(" + std::to_string(hue) + ",65%,60%)\" stroke=\"black\"><title>J" +
           std::to_string(e.job) + " op" + std::to_string(e.op) + " [" + format_time(e.start, sched.scale) + ", " +
           format_time(e.end, sched.scale) + ")</title></rect>\n";
    if (w >= 14) {
      out += "<text x=\"" + fixed2(x + 2) + "\" y=\"" + fixed2(y + kLane / 2 + 4) + "\">" + std::to_string(e.job) +
             "</text>\n";
    }
  }
  out += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(axis_y) + "\" x2=\"" + fixed2(kLeft + kPlot) +
         "\" y2=\"" + fixed2(axis_y) + "\" stroke=\"black\"/>\n";
  // Ticks are placed in display units so labels come out round.
  const Time step = tick_step(std::max<Time>(span / sched.scale, 1)) * sched.scale;
  for (Time t = 0; t <= span; t += step) {
    const double x = kLeft + t * per_unit;
    out += "<line x1=\"" + fixed2(x) + "\" y1=\"" + fixed2(axis_y) + "\" x2=\"" + fixed2(x) + "\" y2=\"" +
           fixed2(axis_y + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(axis_y + 18) + "\" text-anchor=\"middle\">" +
           format_time(t, sched.scale) + "</text>\n";
  }
  out += "<text x=\"" + fixed2(kLeft + kPlot) + "\" y=\"" + fixed2(axis_y + 34) +
         "\" text-anchor=\"end\">makespan " + format_time(sched.makespan, sched.scale) + "</text>\n";
  out += "</svg>\n";
  return out;
}

inline std::string render_ascii(const Schedule& sched) {
  constexpr Time kWidth = 80;
  const int lanes = lane_count(sched);
  const Time span = std::max<Time>(sched.makespan, 1);
  const std::size_t label = std::to_string(std::max(lanes - 1, 0)).size() + 1;

  std::vector<std::string> rows(lanes, std::string(kWidth, '.'));
  for (const auto& e : sorted_by_lane(sched)) {
    if (e.end <= e.start) continue;
    Time from = e.start * kWidth / span;
    Time to = std::max(e.end * kWidth / span, from + 1);
    for (Time c = from; c < std::min(to, kWidth); ++c) rows[e.machine][c] = job_glyph(e.job);
  }
  std::string out;
  for (int m = 0; m < lanes; ++m) {
    std::string name = "M" + std::to_string(m);
    name.resize(label, ' ');
    out += name + " |" + rows[m] + "|\n";
  }
  return out;
}

}  // namespace detail

// One lane per machine, one bar per operation coloured by job. Output is a
// pure function of the schedule.
inline std::string render_gantt(const Schedule& sched, GanttFormat format) {
  if (sched.entries.empty()) throw Error(ErrorKind::EmptySchedule, "schedule has no operations");
  return format == GanttFormat::Svg ? detail::render_svg(sched) : detail::render_ascii(sched);
}

}  // namespace cjsp
