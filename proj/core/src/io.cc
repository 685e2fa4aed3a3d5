// Copyright 2026 The WGP Authors
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

#include "wgp/io.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wgp {
namespace {

using Json = nlohmann::ordered_json;

Json Parse(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedInputError(std::string(what) + ": " + e.what());
  }
}

void CheckFields(const Json& object, std::string_view what,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!object.is_object()) {
    throw MalformedInputError(std::string(what) + " must be a JSON object");
  }
  for (std::string_view key : required) {
    if (!object.contains(key)) {
      throw MalformedInputError(std::string(what) + " is missing field \"" +
                                std::string(key) + "\"");
    }
  }
  std::set<std::string_view> known(required);
  known.insert(optional.begin(), optional.end());
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      throw MalformedInputError(std::string(what) + " has unknown field \"" +
                                key + "\"");
    }
  }
}

std::int64_t Integer(const Json& value, std::string_view what,
                     std::int64_t min_value) {
  if (!value.is_number_integer()) {
    throw MalformedInputError(std::string(what) + " must be an integer");
  }
  const auto n = value.get<std::int64_t>();
  if (n < min_value) {
    throw MalformedInputError(std::string(what) + " must be at least " +
                              std::to_string(min_value));
  }
  return n;
}

int SmallInteger(const Json& value, std::string_view what,
                 std::int64_t min_value) {
  const std::int64_t n = Integer(value, what, min_value);
  if (n > std::numeric_limits<int>::max()) {
    throw MalformedInputError(std::string(what) + " is too large");
  }
  return static_cast<int>(n);
}

const Json& Array(const Json& value, std::string_view what) {
  if (!value.is_array()) {
    throw MalformedInputError(std::string(what) + " must be an array");
  }
  return value;
}

}  // namespace

std::string InstanceToJson(const Instance& instance) {
  const Network& network = instance.network();
  Json edges = Json::array();
  for (const Edge& e : network.edges()) edges.push_back({e.u, e.v});
  Json packets = Json::array();
  for (const Packet& p : instance.packets()) {
    Json packet;
    packet["origin"] = p.origin;
    packet["release"] = p.release;
    packets.push_back(std::move(packet));
  }
  Json out;
  out["nodes"] = network.node_count();
  out["edges"] = std::move(edges);
  out["sink"] = network.sink();
  out["d_I"] = network.interference_radius();
  out["packets"] = std::move(packets);
  if (!instance.comment().empty()) out["comment"] = instance.comment();
  return out.dump() + "\n";
}

Instance InstanceFromJson(std::string_view text) {
  const Json root = Parse(text, "instance");
  CheckFields(root, "instance", {"nodes", "edges", "sink", "d_I", "packets"},
              {"comment"});
  const int nodes = SmallInteger(root["nodes"], "nodes", 1);
  std::vector<Edge> edges;
  for (const Json& e : Array(root["edges"], "edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw MalformedInputError("each edge must be a [u, v] pair");
    }
    edges.push_back(
        {SmallInteger(e[0], "edge endpoint", 0),
         SmallInteger(e[1], "edge endpoint", 0)});
  }
  const int sink = SmallInteger(root["sink"], "sink", 0);
  const int radius = SmallInteger(root["d_I"], "d_I", 1);
  std::vector<Packet> packets;
  for (const Json& p : Array(root["packets"], "packets")) {
    CheckFields(p, "packet", {"origin", "release"});
    packets.push_back({SmallInteger(p["origin"], "packet origin", 0),
                       Integer(p["release"], "packet release", 0)});
  }
  std::string comment;
  if (root.contains("comment")) {
    if (!root["comment"].is_string()) {
      throw MalformedInputError("comment must be a string");
    }
    comment = root["comment"].get<std::string>();
  }
  Network network(nodes, std::move(edges), sink, radius);
  return Instance(std::move(network), std::move(packets), std::move(comment));
}

std::string ScheduleToJson(const Schedule& schedule) {
  Schedule sorted = schedule;
  Canonicalize(sorted);
  Json rounds = Json::array();
  for (const auto& round : sorted.rounds) {
    Json calls = Json::array();
    for (const Call& c : round) {
      Json call;
      call["packet"] = c.packet;
      call["from"] = c.from;
      call["to"] = c.to;
      calls.push_back(std::move(call));
    }
    rounds.push_back(std::move(calls));
  }
  Json out;
  out["sigma"] = sorted.sigma;
  out["rounds"] = std::move(rounds);
  return out.dump() + "\n";
}

Schedule ScheduleFromJson(std::string_view text) {
  const Json root = Parse(text, "schedule");
  CheckFields(root, "schedule", {"sigma", "rounds"});
  Schedule schedule;
  schedule.sigma = SmallInteger(root["sigma"], "sigma", 1);
  for (const Json& round : Array(root["rounds"], "rounds")) {
    auto& calls = schedule.rounds.emplace_back();
    for (const Json& c : Array(round, "round")) {
      CheckFields(c, "call", {"packet", "from", "to"});
      calls.push_back({SmallInteger(c["packet"], "call packet", 0),
                       SmallInteger(c["from"], "call from", 0),
                       SmallInteger(c["to"], "call to", 0)});
    }
  }
  return schedule;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error("failed writing " + path.string());
}

std::string FormatRational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::string FormatRationalWithDecimal(const Rational& value) {
  // Scaled to 10^4 with half-away-from-zero rounding, in integer arithmetic.
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  const bool negative = num < 0;
  const std::int64_t magnitude = negative ? -num : num;
  const std::int64_t scaled = (magnitude * 10000 * 2 + den) / (2 * den);
  std::ostringstream out;
  out << FormatRational(value) << " (" << (negative ? "-" : "")
      << scaled / 10000 << ".";
  const std::int64_t frac = scaled % 10000;
  out << (frac < 1000 ? "0" : "") << (frac < 100 ? "0" : "")
      << (frac < 10 ? "0" : "") << frac << ")";
  return out.str();
}

Rational ParseRational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t n = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, n);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw MalformedInputError("not a rational: \"" + std::string(text) +
                                "\"");
    }
    return n;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw MalformedInputError("zero denominator in \"" +
                                          std::string(text) + "\"");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace wgp
