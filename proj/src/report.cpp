// Copyright 2026 The dirkit authors
//
// This file is part of dirkit, distributed under the terms of the
// Apache License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0.

#include "dirkit/report.hpp"

#include <algorithm>
#include <cmath>

namespace dirkit {

using json = nlohmann::ordered_json;

CheckRecord make_check(std::string name, double lhs, double rhs, double tolerance) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
  r.tolerance = tolerance;
  r.pass = r.rel_err <= tolerance;
  return r;
}

CheckRecord make_bound_check(std::string name, double value, double threshold) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = value;
  r.rhs = threshold;
  r.abs_err = std::max(0.0, threshold - value);
  r.rel_err = r.abs_err;
  r.tolerance = 0.0;
  r.pass = value >= threshold;
  return r;
}

int RunReport::failures() const {
  int n = 0;
  for (const CheckRecord& r : records)
    if (!r.pass) ++n;
  return n;
}

void RunReport::sort_by_name() {
  std::sort(records.begin(), records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

namespace {

json record_to_json(const CheckRecord& r) {
  return json{{"name", r.name},         {"lhs", r.lhs},
              {"rhs", r.rhs},           {"abs_err", r.abs_err},
              {"rel_err", r.rel_err},   {"tolerance", r.tolerance},
              {"verdict", r.pass ? "pass" : "fail"}};
}

}  // namespace

std::string RunReport::to_json_lines() const {
  std::string out;
  for (const CheckRecord& r : records) {
    out += record_to_json(r).dump();
    out += '\n';
  }
  const json summary{{"summary",
                      json{{"command", command},
                           {"digest", digest},
                           {"seed", seed},
                           {"checks", records.size()},
                           {"failures", failures()},
                           {"verdict", all_pass() ? "pass" : "fail"}}}};
  out += summary.dump();
  out += '\n';
  return out;
}

std::string RunReport::to_csv() const {
  std::string out = "name,lhs,rhs,abs_err,rel_err,tolerance,verdict\n";
  for (const CheckRecord& r : records) {
    out += r.name + "," + json(r.lhs).dump() + "," + json(r.rhs).dump() + "," + json(r.abs_err).dump() +
           "," + json(r.rel_err).dump() + "," + json(r.tolerance).dump() + "," +
           (r.pass ? "pass" : "fail") + "\n";
  }
  return out;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& data) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace dirkit
