#include "trizp/workspace.hpp"

#include "trizp/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace trizp::cli {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string_view task_type_name(TaskType t) noexcept {
    switch (t) {
    case TaskType::solve: return "solve";
    case TaskType::verify_thm_3_1: return "verify-thm-3-1";
    case TaskType::verify_thm_4_1: return "verify-thm-4-1";
    case TaskType::verify_corollaries: return "verify-corollaries";
    case TaskType::decompose: return "decompose";
    case TaskType::diagnostics: return "diagnostics";
    }
    return "?";
}

namespace {

TaskType parse_task_type(const std::string& s) {
    for (auto t : {TaskType::solve, TaskType::verify_thm_3_1, TaskType::verify_thm_4_1,
                   TaskType::verify_corollaries, TaskType::decompose, TaskType::diagnostics})
        if (task_type_name(t) == s) return t;
    throw ConfigError("unknown task type '" + s + "'");
}

}  // namespace

bool command_runs(Command c, TaskType t) noexcept {
    switch (c) {
    case Command::validate: return false;
    case Command::solve: return t == TaskType::solve;
    case Command::decompose: return t == TaskType::decompose || t == TaskType::diagnostics;
    case Command::verify:
        return t == TaskType::verify_thm_3_1 || t == TaskType::verify_thm_4_1 ||
               t == TaskType::verify_corollaries;
    case Command::report: return true;
    }
    return false;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

// ------------------------------------------------------------------ maps

namespace {

json map_json(const AdditiveMap& f) {
    json j;
    j["label"] = f.ring().label();
    j["modulus"] = f.ring().modulus().value();
    j["k"] = f.ring().rank();
    j["entries"] = f.to_vec();
    return j;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::string serialize_map(const AdditiveMap& f) {
    json j;
    j["schema"] = report_schema;
    j.update(map_json(f));
    return j.dump(2) + "\n";
}

AdditiveMap parse_map(const std::string& text, const FiniteRing& ring) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("map file is not valid JSON: ") + e.what());
    }
    try {
        if (j.value("schema", report_schema) != report_schema)
            throw ConfigError("map file has unsupported schema");
        const auto m = j.at("modulus").get<Residue>();
        const auto k = j.at("k").get<std::size_t>();
        if (m != ring.modulus().value())
            throw ConfigError("map modulus " + std::to_string(m) + " does not match ring modulus " +
                              std::to_string(ring.modulus().value()));
        if (k != ring.rank())
            throw ConfigError("map rank " + std::to_string(k) + " does not match ring rank " +
                              std::to_string(ring.rank()));
        const auto entries = j.at("entries").get<Vec>();
        if (entries.size() != k * k)
            throw ConfigError("map needs " + std::to_string(k * k) + " entries, got " +
                              std::to_string(entries.size()));
        return AdditiveMap::from_vec(ring, entries);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed map file: ") + e.what());
    }
}

AdditiveMap load_map(const fs::path& path, const FiniteRing& ring) {
    try {
        return parse_map(read_file(path), ring);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

// ------------------------------------------------------------- workspace

const FiniteRing& Workspace::ring(const std::string& name) const {
    if (auto it = rings.find(name); it != rings.end()) return it->second;
    if (auto it = triangulars.find(name); it != triangulars.end()) return it->second.ring;
    throw ConfigError("unknown ring '" + name + "'");
}

const TriangularRing& Workspace::triangular(const std::string& name) const {
    if (auto it = triangulars.find(name); it != triangulars.end()) return it->second;
    throw ConfigError("'" + name + "' is not a triangular ring");
}

namespace {

template <class T>
T get(const YAML::Node& n, const char* key, const std::string& where) {
    if (!n[key]) throw ConfigError(where + ": missing '" + key + "'");
    try {
        return n[key].as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(where + ": bad value for '" + key + "'");
    }
}

std::string entry_name(const YAML::Node& n, const char* section, std::size_t i) {
    return n["name"] ? n["name"].as<std::string>() : std::string(section) + "[" + std::to_string(i) + "]";
}

template <class Fn>
auto with_context(const std::string& where, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
    } catch (const YAML::Exception& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

FiniteRing build_ring(const Workspace& ws, const YAML::Node& n, const std::string& name) {
    const auto& m = ws.modulus;
    if (n["builtin"]) {
        const auto b = get<std::string>(n, "builtin", name);
        const auto size = n["n"] ? get<std::size_t>(n, "n", name) : std::size_t{2};
        if (b == "Zm") return ring_zm(m);
        if (b == "Mat") return ring_matrices(m, size);
        if (b == "UT") return ring_upper_triangular(m, size);
        if (b == "Product") {
            const auto f = get<std::vector<std::string>>(n, "factors", name);
            if (f.size() != 2) throw ConfigError(name + ": Product takes exactly two factors");
            return ring_product(ws.ring(f[0]), ws.ring(f[1]));
        }
        throw ConfigError(name + ": unknown builtin '" + b + "'");
    }
    if (n["trivial_extension"]) {
        const auto base = get<std::string>(n, "trivial_extension", name);
        if (n["bimodule"]) {
            const auto bm = get<std::string>(n, "bimodule", name);
            auto it = ws.bimodules.find(bm);
            if (it == ws.bimodules.end()) throw ConfigError(name + ": unknown bimodule '" + bm + "'");
            return trivial_extension(ws.ring(base), it->second);
        }
        return trivial_extension(ws.ring(base));
    }
    const auto rank = get<std::size_t>(n, "rank", name);
    auto sc = get<StructureConstants>(n, "structure_constants", name);
    auto unity = get<Vec>(n, "unity", name);
    return FiniteRing::make(m, rank, std::move(sc), std::move(unity),
                            n["label"] ? n["label"].as<std::string>() : name);
}

Bimodule build_bimodule(const Workspace& ws, const YAML::Node& n, const std::string& name) {
    const auto type = get<std::string>(n, "type", name);
    if (type == "regular") return Bimodule::regular(ws.ring(get<std::string>(n, "ring", name)));
    if (type == "scalar_columns") return Bimodule::scalar_columns(ws.modulus, get<std::size_t>(n, "n", name));
    if (type == "matrix_block")
        return Bimodule::matrix_block(ws.modulus, get<std::size_t>(n, "n", name),
                                      get<std::size_t>(n, "p", name));
    const auto& left = ws.ring(get<std::string>(n, "left", name));
    const auto& right = ws.ring(get<std::string>(n, "right", name));
    if (type == "zero") return Bimodule::zero(left, right);
    if (type == "explicit")
        return Bimodule::make(left, right, get<std::size_t>(n, "rank", name),
                              get<std::vector<std::vector<Vec>>>(n, "left_action", name),
                              get<std::vector<std::vector<Vec>>>(n, "right_action", name),
                              n["label"] ? n["label"].as<std::string>() : name);
    throw ConfigError(name + ": unknown bimodule type '" + type + "'");
}

Task build_task(const Workspace& ws, const YAML::Node& n, const std::string& where,
                const fs::path& base) {
    Task t;
    t.type = parse_task_type(get<std::string>(n, "type", where));
    t.ring = get<std::string>(n, "ring", where);
    const auto& ring = ws.ring(t.ring);
    switch (t.type) {
    case TaskType::solve:
        t.kind = ConditionSpec::parse(get<std::string>(n, "kind", where));
        break;
    case TaskType::verify_thm_3_1:
    case TaskType::verify_thm_4_1:
    case TaskType::verify_corollaries:
        ws.triangular(t.ring);
        break;
    case TaskType::decompose:
        ws.triangular(t.ring);
        t.tau = load_map(base / get<std::string>(n, "tau", where), ring);
        t.delta = load_map(base / get<std::string>(n, "delta", where), ring);
        break;
    case TaskType::diagnostics:
        ws.triangular(t.ring);
        t.map_path = get<std::string>(n, "map", where);
        t.map = load_map(base / t.map_path, ring);
        t.check = n["check"] ? get<std::string>(n, "check", where) : "centralizer";
        if (t.check != "centralizer" && t.check != "delta")
            throw ConfigError(where + ": check must be 'centralizer' or 'delta'");
        break;
    }
    return t;
}

}  // namespace

Workspace load_workspace(const fs::path& config) {
    const std::string text = read_file(config);
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(config.string() + ": " + e.what());
    }
    if (!root.IsMap()) throw ConfigError(config.string() + ": top level must be a mapping");

    Workspace ws;
    ws.config_hash = sha256_hex(text);
    with_context("modulus", [&] {
        ws.modulus = Modulus(get<Residue>(root, "modulus", "config"));
        return 0;
    });
    if (root["enumeration_bound"])
        ws.enumeration_bound = get<std::uint64_t>(root, "enumeration_bound", "config");

    // Trivial extensions may refer to triangular rings, so they are built last.
    std::vector<std::pair<YAML::Node, std::string>> deferred;
    const auto section = [&](const char* key) {
        const auto n = root[key];
        if (n && !n.IsSequence() && !n.IsNull())
            throw ConfigError(std::string("'") + key + "' must be a list");
        return n && n.IsSequence() ? n : YAML::Node(YAML::NodeType::Sequence);
    };
    const auto check_fresh = [&](const std::string& name) {
        if (ws.rings.count(name) || ws.triangulars.count(name) || ws.bimodules.count(name))
            throw ConfigError("duplicate name '" + name + "'");
    };

    const auto rings = section("rings");
    for (std::size_t i = 0; i < rings.size(); ++i) {
        const auto name = entry_name(rings[i], "rings", i);
        check_fresh(name);
        if (rings[i]["trivial_extension"]) {
            deferred.emplace_back(rings[i], name);
            continue;
        }
        ws.rings.emplace(name, with_context("ring '" + name + "'",
                                            [&] { return build_ring(ws, rings[i], name); }));
    }
    const auto bimods = section("bimodules");
    for (std::size_t i = 0; i < bimods.size(); ++i) {
        const auto name = entry_name(bimods[i], "bimodules", i);
        check_fresh(name);
        ws.bimodules.emplace(name, with_context("bimodule '" + name + "'",
                                                [&] { return build_bimodule(ws, bimods[i], name); }));
    }
    const auto tris = section("triangulars");
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto name = entry_name(tris[i], "triangulars", i);
        check_fresh(name);
        const std::string where = "triangular '" + name + "'";
        ws.triangulars.emplace(name, with_context(where, [&] {
            const auto bm = get<std::string>(tris[i], "m", where);
            const auto it = ws.bimodules.find(bm);
            if (it == ws.bimodules.end()) throw ConfigError(where + ": unknown bimodule '" + bm + "'");
            return make_triangular(ws.ring(get<std::string>(tris[i], "r", where)), it->second,
                                   ws.ring(get<std::string>(tris[i], "s", where)));
        }));
    }
    for (const auto& [node, name] : deferred)
        ws.rings.emplace(name, with_context("ring '" + name + "'",
                                            [&] { return build_ring(ws, node, name); }));

    const auto tasks = section("tasks");
    const auto base = config.parent_path();
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string where = "task " + std::to_string(i);
        ws.tasks.push_back(with_context(where, [&] { return build_task(ws, tasks[i], where, base); }));
    }
    return ws;
}

// -------------------------------------------------------------- reports

namespace {

json module_json(const SolutionModule& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["modulus"] = s.modulus().value();
    j["cardinality"] = s.cardinality_string();
    j["generators"] = s.generators().to_rows();
    return j;
}

json checks_json(const CheckRecord& rec) {
    json a = json::array();
    for (const auto& c : rec.checks) {
        json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        if (!c.passed) j["witness"] = c.witness;
        a.push_back(std::move(j));
    }
    return a;
}

json verification_json(const VerificationReport& r) {
    json j;
    j["name"] = r.name;
    j["ring"] = r.ring_label;
    json mods = json::array();
    for (const auto& m : r.modules) {
        json mj;
        mj["name"] = m.name;
        mj.update(module_json(m.module));
        mods.push_back(std::move(mj));
    }
    j["modules"] = std::move(mods);
    j["checks"] = checks_json(r.checks);
    return j;
}

enum class Status { passed, failed, bound_exceeded };

std::string_view status_name(Status s) {
    switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::bound_exceeded: return "bound_exceeded";
    }
    return "?";
}

struct TaskOutcome {
    Status status;
    json body;
    std::string summary;
};

TaskOutcome execute(const Workspace& ws, const Task& task, const VerifyOptions& vopts) {
    const auto& ring = ws.ring(task.ring);
    json body;
    switch (task.type) {
    case TaskType::solve: {
        const auto s = solve(*task.kind, ring, vopts.solve);
        body["kind"] = std::string(task.kind->name());
        body["ring"] = ring.label();
        body["module"] = module_json(s);
        return {Status::passed, body, "cardinality " + s.cardinality_string()};
    }
    case TaskType::verify_thm_3_1:
    case TaskType::verify_thm_4_1:
    case TaskType::verify_corollaries: {
        const auto& t = ws.triangular(task.ring);
        const auto r = task.type == TaskType::verify_thm_3_1   ? verify_theorem_3_1(t, vopts)
                       : task.type == TaskType::verify_thm_4_1 ? verify_theorem_4_1(t, vopts)
                                                               : verify_corollaries(t, vopts);
        if (task.type == TaskType::verify_thm_4_1) body["seed"] = vopts.seed;
        body["verification"] = verification_json(r);
        const auto* f = r.checks.first_failure();
        return {r.passed() ? Status::passed : Status::failed, body,
                f ? "failed check " + f->name + ": " + f->witness
                  : std::to_string(r.checks.checks.size()) + " checks"};
    }
    case TaskType::decompose: {
        const auto& t = ws.triangular(task.ring);
        body["tau"] = map_json(*task.tau);
        body["delta"] = map_json(*task.delta);
        try {
            const auto d = decompose_tau(*task.tau, *task.delta, t, vopts.solve);
            json r;
            r["w"] = d.w.coords;
            r["d"] = map_json(d.d);
            r["delta_one"] = d.delta_one.coords;
            r["tau_one"] = d.tau_one.coords;
            r["phi"] = map_json(d.phi);
            r["phi_value_at_one"] = d.phi_certificate.c.coords;
            r["checks"] = checks_json(d.checks);
            body["decomposition"] = std::move(r);
            return {Status::passed, body, "tau = d + R_" + format_element(d.tau_one)};
        } catch (const TheoremViolated& e) {
            body["error"] = {{"type", "TheoremViolated"}, {"step", e.step()}, {"witness", e.witness()}};
            return {Status::failed, body, std::string("theorem violated at ") + e.step()};
        } catch (const PreconditionViolated& e) {
            body["error"] = {{"type", "PreconditionViolated"}, {"message", e.what()}};
            return {Status::failed, body, e.what()};
        }
    }
    case TaskType::diagnostics: {
        const auto& t = ws.triangular(task.ring);
        body["check"] = task.check;
        body["map_file"] = task.map_path;
        body["map"] = map_json(*task.map);
        const auto rec = task.check == "centralizer"
                             ? peirce_diagnostics_centralizer(*task.map, t, vopts.diagnostics)
                             : peirce_diagnostics_delta(*task.map, t, vopts.diagnostics);
        body["checks"] = checks_json(rec);
        const auto* f = rec.first_failure();
        return {f ? Status::failed : Status::passed, body,
                f ? "failed diagnostic " + f->name + ": " + f->witness
                  : std::to_string(rec.checks.size()) + " diagnostics"};
    }
    }
    throw Error("unreachable task type");
}

std::string task_description(const Task& t) {
    std::string s(task_type_name(t.type));
    if (t.kind) s += " " + std::string(t.kind->name());
    return s + " on " + t.ring;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + p.string());
    out << text;
}

std::string_view command_name(Command c) {
    switch (c) {
    case Command::validate: return "validate";
    case Command::solve: return "solve";
    case Command::decompose: return "decompose";
    case Command::verify: return "verify";
    case Command::report: return "report";
    }
    return "?";
}

}  // namespace

int run(Command command, const fs::path& config, const RunFlags& flags, std::ostream& log) {
    Workspace ws;
    try {
        ws = load_workspace(config);
    } catch (const Error& e) {
        log << "config error: " << e.what() << "\n";
        return exit_config_error;
    }

    if (command == Command::validate) {
        log << "config ok: modulus " << ws.modulus.value() << ", " << ws.rings.size() << " rings, "
            << ws.bimodules.size() << " bimodules, " << ws.triangulars.size() << " triangular rings, "
            << ws.tasks.size() << " tasks\n";
        return exit_ok;
    }

    VerifyOptions vopts;
    vopts.solve.enumeration_bound = flags.bound.value_or(ws.enumeration_bound);
    vopts.solve.workers = std::max(1u, flags.workers);
    vopts.diagnostics.exhaustive_bound = vopts.solve.enumeration_bound;
    vopts.seed = flags.seed;

    std::error_code ec;
    fs::create_directories(flags.out_dir, ec);
    if (ec) {
        log << "cannot create " << flags.out_dir.string() << ": " << ec.message() << "\n";
        return exit_config_error;
    }

    json index;
    index["schema"] = report_schema;
    index["tool"] = tool_name;
    index["tool_version"] = tool_version;
    index["config_hash"] = ws.config_hash;
    index["command"] = std::string(command_name(command));
    json entries = json::array();
    std::string summary;
    bool any_failed = false, any_bound = false;

    for (std::size_t i = 0; i < ws.tasks.size(); ++i) {
        const auto& task = ws.tasks[i];
        if (!command_runs(command, task.type)) continue;

        json report;
        report["schema"] = report_schema;
        report["tool"] = tool_name;
        report["tool_version"] = tool_version;
        report["config_hash"] = ws.config_hash;
        report["task"] = {{"index", i}, {"type", std::string(task_type_name(task.type))},
                          {"ring", task.ring}};

        TaskOutcome out;
        try {
            out = execute(ws, task, vopts);
        } catch (const EnumerationBoundExceeded& e) {
            out = {Status::bound_exceeded, json{{"error", {{"type", "EnumerationBoundExceeded"},
                                                          {"message", e.what()}}}},
                   e.what()};
        } catch (const Error& e) {
            out = {Status::failed, json{{"error", {{"type", "Error"}, {"message", e.what()}}}},
                   e.what()};
        }
        any_failed |= out.status == Status::failed;
        any_bound |= out.status == Status::bound_exceeded;
        report["status"] = std::string(status_name(out.status));
        report.update(out.body);

        char file[64];
        std::snprintf(file, sizeof file, "task-%02zu-%s.json", i,
                      std::string(task_type_name(task.type)).c_str());
        write_text(flags.out_dir / file, report.dump(2) + "\n");

        const std::string line = "task " + std::to_string(i) + " " + task_description(task) + ": " +
                                 std::string(status_name(out.status)) + " (" + out.summary + ")";
        log << line << "\n";
        summary += line + "\n";
        entries.push_back({{"index", i},
                           {"type", std::string(task_type_name(task.type))},
                           {"ring", task.ring},
                           {"file", file},
                           {"status", std::string(status_name(out.status))}});
    }

    const int code = any_bound ? exit_bound_exceeded : any_failed ? exit_theorem_violated : exit_ok;
    index["exit_code"] = code;
    index["reports"] = std::move(entries);
    write_text(flags.out_dir / "index.json", index.dump(2) + "\n");
    write_text(flags.out_dir / "summary.txt", summary);
    return code;
}

}  // namespace trizp::cli
