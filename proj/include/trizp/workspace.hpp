#pragma once

// Batch front end: a YAML workspace config names rings, bimodules,
// triangular rings and a list of tasks; run() executes the tasks selected by
// a subcommand and writes one JSON report per task plus index.json.
//
//   modulus: 3
//   enumeration_bound: 1000
//   rings:
//     - {name: Z3, builtin: Zm}
//     - {name: UT2, builtin: UT, n: 2}
//     - {name: Ext, trivial_extension: T}
//     - {name: C, rank: 1, structure_constants: [[[1]]], unity: [1]}
//   bimodules:
//     - {name: M, type: regular, ring: Z3}
//   triangulars:
//     - {name: T, r: Z3, m: M, s: Z3}
//   tasks:
//     - {type: solve, kind: ZP_CENTRALIZER, ring: T}
//     - {type: verify-thm-4-1, ring: T}
//     - {type: decompose, ring: T, tau: maps/tau.json, delta: maps/delta.json}
//     - {type: diagnostics, ring: T, map: maps/phi.json, check: centralizer}
//
// Map paths are relative to the config file.

#include "trizp/errors.hpp"
#include "trizp/theorems.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trizp::cli {

inline constexpr const char* tool_name = "trizp";
inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema = 1;

enum ExitCode : int {
    exit_ok = 0,
    exit_theorem_violated = 1,
    exit_config_error = 2,
    exit_bound_exceeded = 3,
};

/// Anything wrong with the config or the files it references.
class ConfigError : public Error {
public:
    using Error::Error;
};

enum class Command { validate, solve, decompose, verify, report };

enum class TaskType { solve, verify_thm_3_1, verify_thm_4_1, verify_corollaries, decompose, diagnostics };

std::string_view task_type_name(TaskType t) noexcept;

struct Task {
    TaskType type = TaskType::solve;
    std::string ring;  // a ring or triangular name
    std::optional<ConditionSpec> kind;  // solve
    std::optional<AdditiveMap> tau;     // decompose
    std::optional<AdditiveMap> delta;   // decompose
    std::optional<AdditiveMap> map;     // diagnostics
    std::string map_path;               // as written in the config
    std::string check;                  // diagnostics: "centralizer" or "delta"
};

struct Workspace {
    Modulus modulus{3};
    std::uint64_t enumeration_bound = default_enumeration_bound;
    std::string config_hash;  // sha256 of the config bytes, hex
    std::map<std::string, FiniteRing> rings;
    std::map<std::string, Bimodule> bimodules;
    std::map<std::string, TriangularRing> triangulars;
    std::vector<Task> tasks;

    /// A triangular ring's underlying ring is addressable by the same name.
    const FiniteRing& ring(const std::string& name) const;
    const TriangularRing& triangular(const std::string& name) const;
};

/// Throws ConfigError for unreadable or malformed configs and for any ring,
/// bimodule or map that fails validation.
Workspace load_workspace(const std::filesystem::path& config);

struct RunFlags {
    std::filesystem::path out_dir = "reports";
    unsigned workers = 1;
    std::optional<std::uint64_t> bound;
    std::uint64_t seed = 1;
};

bool command_runs(Command c, TaskType t) noexcept;

/// Loads, runs and writes reports; returns the process exit code. Progress
/// and errors go to log.
int run(Command command, const std::filesystem::path& config, const RunFlags& flags,
        std::ostream& log);

// Map files: {"schema": 1, "label": ..., "modulus": m, "k": k, "entries": [...]}.
std::string serialize_map(const AdditiveMap& f);
AdditiveMap parse_map(const std::string& text, const FiniteRing& ring);
AdditiveMap load_map(const std::filesystem::path& path, const FiniteRing& ring);

std::string sha256_hex(std::string_view bytes);

}  // namespace trizp::cli
