#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

#include "tropical/errors.hpp"

using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(MAPSOLVE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

// Interpreter for the subset of JSON Schema the shipped report schema uses:
// type, enum, required, properties, additionalProperties, items, oneOf,
// pattern, minimum and local $ref.
bool validate(const json& schema, const json& value, const json& root);

bool validate_type(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
}

bool validate(const json& schema, const json& value, const json& root) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return validate(root["definitions"][ref.substr(prefix.size())], value, root);
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const json& alt : schema["oneOf"])
            if (validate(alt, value, root)) ++hits;
        return hits == 1;
    }
    if (schema.contains("enum")) {
        for (const json& alt : schema["enum"])
            if (alt == value) return true;
        return false;
    }
    if (schema.contains("type") && !validate_type(schema["type"], value)) return false;
    if (schema.contains("pattern")) {
        if (!value.is_string()) return false;
        if (!std::regex_match(value.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
            return false;
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>())
        return false;
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (schema.contains("properties") && schema["properties"].contains(it.key())) {
                if (!validate(schema["properties"][it.key()], it.value(), root)) return false;
            } else if (schema.contains("additionalProperties")) {
                if (schema["additionalProperties"].is_boolean()) {
                    if (!schema["additionalProperties"].get<bool>()) return false;
                } else if (!validate(schema["additionalProperties"], it.value(), root)) {
                    return false;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const json& item : value)
            if (!validate(schema["items"], item, root)) return false;
    return true;
}

json shipped_schema() {
    std::ifstream in(SCHEMA_FILE);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve reports the looser system") {
    CmdResult r = run_cli("solve " + data("s_second.map"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status: Reduced") != std::string::npos);
    CHECK(r.out.find("surviving: x1") != std::string::npos);
    CHECK(r.out.find("sample: 0 -11 -10 -11") != std::string::npos);
}

TEST_CASE("solve emits schema-valid JSON for every bundled system") {
    json schema = shipped_schema();
    for (const char* file : {"s.map", "s_prime.map", "s_second.map", "positive.map"}) {
        CmdResult r = run_cli("solve " + data(file) + " --format json");
        CHECK(r.exit_code == 0);
        json rep = json::parse(r.out);
        CHECK(validate(schema, rep, schema));
    }
}

TEST_CASE("JSON fields of the looser system") {
    CmdResult r = run_cli("solve " + data("s_second.map") + " --format json");
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "Reduced");
    CHECK(rep["classification"] == "HasNegative");
    CHECK(rep["matrices"]["F_wedge"] == json::parse("[[-11]]"));
    CHECK(rep["samples"][0] == json::parse("[0,-11,-10,-11]"));
}

TEST_CASE("check passes and fails with diagnostics") {
    CmdResult pass = run_cli("check " + data("s_second.map") + " \"0,-11,-10,-11\"");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("PASS") != std::string::npos);

    // Leading dashes need the positional marker.
    CmdResult all_bottom = run_cli("check " + data("s_second.map") + " -- \"-inf,-inf,-inf,-inf\"");
    CHECK(all_bottom.exit_code == 0);

    CmdResult fail = run_cli("check " + data("s_second.map") + " \"0,0,0,0\"");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("FAIL") != std::string::npos);
    CHECK(fail.out.find("x3 <= -10 + x1") != std::string::npos);

    CmdResult arity = run_cli("check " + data("s_second.map") + " \"0,0\"");
    CHECK(arity.exit_code == 2);
}

TEST_CASE("sampling is seeded and self-checked") {
    CmdResult a = run_cli("sample " + data("s_second.map") + " 5 --seed 7");
    CmdResult b = run_cli("sample " + data("s_second.map") + " 5 --seed 7");
    CmdResult c = run_cli("sample " + data("s_second.map") + " 5 --seed 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);

    CmdResult bottom = run_cli("sample " + data("s_prime.map") + " 3");
    CHECK(bottom.out == "-inf,-inf,-inf,-inf\n");

    CmdResult none = run_cli("sample " + data("s_second.map") + " 0");
    CHECK(none.out.empty());
}

TEST_CASE("oracle subcommand summarizes the grid") {
    CmdResult r = run_cli("oracle " + data("s_prime.map") + " --grid 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("solutions: 1") != std::string::npos);

    CmdResult blown = run_cli("oracle " + data("s_second.map") + " --grid 40 --budget 100");
    CHECK(blown.exit_code == 4);
}

TEST_CASE("environment variable overrides the budget") {
    CmdResult blown = run_cli("oracle " + data("s_prime.map") + " --grid 3 --budget 2");
    CHECK(blown.exit_code == 4);
    // A generous env budget rescues the same invocation.
    std::string cmd = "TROPICAL_MAP_BUDGET=100000 " + std::string(MAPSOLVE_BIN) + " oracle " +
                      data("s_prime.map") + " --grid 3 --budget 2 >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
}

TEST_CASE("syntax errors exit with the input code") {
    std::string bad = std::string(DATA_DIR) + "/../build/bad_input.map";
    {
        std::ofstream out(bad);
        out << "x <= !\n";
    }
    CmdResult r = run_cli("solve " + bad);
    CHECK(r.exit_code == 2);

    CmdResult missing = run_cli("solve /nonexistent.map");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("fractional offsets serialize losslessly") {
    std::string path = std::string(DATA_DIR) + "/../build/fractional.map";
    {
        std::ofstream out(path);
        out << "a <= -2.5 + b\n";
    }
    CmdResult r = run_cli("solve " + path + " --format json");
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(validate(shipped_schema(), rep, shipped_schema()));
    CHECK(rep["matrices"]["J"][0][0] == "-5/2");
}

TEST_CASE("positive systems report the sharp generator") {
    CmdResult r = run_cli("solve " + data("positive.map") + " --format json");
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "PositiveSharp");
    CHECK(rep["classification"] == "AllPositive");
    CHECK(rep["nontrivial_columns"] == 4);
    CHECK(rep["matrices"]["sharp"][0] == json::parse("[0,\"-inf\",\"-inf\",\"-inf\"]"));
}

}  // TEST_SUITE
