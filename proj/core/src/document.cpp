// Copyright 2026 the msvf authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "msvf/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "msvf/errors.hpp"
#include "msvf/format.hpp"

namespace msvf {

namespace {

using nlohmann::json;

CompactSet parse_set(const json& j) {
  if (j.is_array()) {
    std::vector<Interval> comps;
    for (const json& pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw ParseError("interval-union set entries must be [lo, hi] pairs");
      comps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (comps.empty()) throw ParseError("set entry must not be empty");
    return IntervalUnion::normalized(std::move(comps));
  }
  if (j.is_object() && j.contains("dim") && j.contains("points")) {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Point> pts;
    for (const json& p : j.at("points")) {
      if (!p.is_array()) throw ParseError("point entries must be coordinate arrays");
      Point q;
      for (const json& v : p) q.push_back(v.get<double>());
      pts.push_back(std::move(q));
    }
    return PointCloud::of(dim, std::move(pts));
  }
  throw ParseError("set entry must be an interval list or a {dim, points} object");
}

json set_to_json(const CompactSet& s) {
  if (s.is_interval_union()) {
    json out = json::array();
    for (const Interval& c : s.intervals().components()) out.push_back({c.lo, c.hi});
    return out;
  }
  json out;
  out["dim"] = s.cloud().dim();
  out["points"] = json::array();
  for (const Point& p : s.cloud().points()) out["points"].push_back(p);
  return out;
}

}  // namespace

SVFDocument SVFDocument::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    SVFDocument doc;
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1)
      throw ParseError("expected schema_version 1");
    doc.partition = j.at("partition").get<std::vector<double>>();
    for (const json& s : j.at("sets")) doc.sets.push_back(parse_set(s));
    if (j.contains("domain")) {
      const auto dom = j.at("domain").get<std::vector<double>>();
      if (dom.size() != 2 || doc.partition.empty() || dom[0] != doc.partition.front() ||
          dom[1] != doc.partition.back())
        throw ParseError("domain must equal [first knot, last knot]");
    }
    if (j.contains("metadata")) doc.metadata_json = j.at("metadata").dump();
    doc.to_svf();  // validate knots/sets now so failures map to parse errors
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
}

SVFDocument SVFDocument::from_file(const std::string& path) {
  return from_json_text(read_text_file(path));
}

SVFDocument SVFDocument::from_svf(const SampledSVF& f) {
  SVFDocument doc;
  doc.partition = f.partition.knots();
  doc.sets = f.values;
  return doc;
}

std::string SVFDocument::to_json_text() const {
  json j;
  j["schema_version"] = schema_version;
  j["domain"] = {partition.front(), partition.back()};
  j["partition"] = partition;
  j["sets"] = json::array();
  for (const CompactSet& s : sets) j["sets"].push_back(set_to_json(s));
  j["metadata"] = json::parse(metadata_json);
  return j.dump(2) + "\n";
}

void SVFDocument::to_file(const std::string& path) const {
  write_text_file(path, to_json_text());
}

SampledSVF SVFDocument::to_svf() const {
  return SampledSVF::of(Partition::of(partition), sets);
}

std::string eval_csv(const std::vector<std::pair<double, CompactSet>>& results) {
  std::string out;
  bool clouds = !results.empty() && results.front().second.is_point_cloud();
  out += clouds ? "x,coords\n" : "x,lo,hi\n";
  for (const auto& [x, value] : results) {
    if (value.is_interval_union()) {
      for (const Interval& c : value.intervals().components()) {
        out += format_double(x);
        out += ',';
        out += format_double(c.lo);
        out += ',';
        out += format_double(c.hi);
        out += '\n';
      }
    } else {
      for (const Point& p : value.cloud().points()) {
        out += format_double(x);
        for (double v : p) {
          out += ',';
          out += format_double(v);
        }
        out += '\n';
      }
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << text;
  if (!f) throw Error("failed writing: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace msvf
