#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "arex/arquiver.hpp"

namespace arex {

struct InstanceOptions {
  std::size_t indec_bound = 256;
  int trial_bound = 64;
  bool strict_scan = false;
};

struct InstanceFile {
  QuiverPresentation presentation;
  InstanceOptions options;
};

/// Throws Error with Io, Malformed (naming the key or line) or NonAdmissible.
InstanceFile parse_instance(const std::string& path);
InstanceFile parse_instance_json(const nlohmann::json& j);

/// {"dims": [..], "arrows": {"name": [[row], ...]}}; missing arrows act as zero.
ModuleRep parse_module_json(const Algebra& a, const nlohmann::json& j);
ModuleRep parse_module(const Algebra& a, const std::string& path);
/// {"x", "y", "z": modules, "f", "g": {"vertex": block}}; certified before return.
Conflation parse_conflation(const Algebra& a, const std::string& path);

/// DOT digraph: nodes labeled by registry labels, solid arrows, dashed tau edges.
std::string dot_string(const IndecRegistry& reg, const ARQuiverGraph& g);
/// Throws Error(Io).
void export_dot(const IndecRegistry& reg, const ARQuiverGraph& g, const std::string& path);

constexpr const char* kToolName = "arex";
constexpr const char* kToolVersion = "0.1.0";

/// Parses arguments, runs one command and writes a JSON report to out.
/// Exit codes: 0 success, 2 check failed, 3 bound exceeded, 4 invalid input, 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arex
