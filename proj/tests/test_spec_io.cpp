#include "doctest.h"

#include <string>

#include "bornson/scenarios.hpp"
#include "bornson/system_spec.hpp"

using namespace bornson;

namespace {

const std::string data_dir = BORNSON_DATA_DIR;

std::string parse_error(const std::string& text)
{
    try {
        parse_system_spec(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("spec-io") {

TEST_CASE("from/to records are stored as T(to, from)")
{
    const auto spec = parse_system_spec(R"({
        "dimension": 3,
        "transfer_entries": [{"from": 1, "to": 3, "re": 0.5, "im": -2.0}]
    })");
    const auto op = transfer_operator(spec);
    CHECK(op.nnz() == 1);
    CHECK(op.at(2, 0) == Amplitude(0.5, -2.0));
    CHECK(spec.label(2) == "3");
}

TEST_CASE("bundled fixtures load and round trip")
{
    for (const char* name : {"diamond.json", "cascade3.json", "double_diamond.json", "cycle2.json",
                             "diamond_dark.json", "diamond_generic.json", "quasi_half.json",
                             "scattering.json"}) {
        CAPTURE(name);
        const auto spec = load_system_spec(data_dir + "/" + name);
        CHECK(parse_system_spec(serialize_system_spec(spec)) == spec);
    }

    const auto diamond = load_system_spec(data_dir + "/diamond.json");
    CHECK(transfer_operator(diamond) == build_diamond({1.0, 1.0, 1.0, 1.0}).op());

    const auto dark = load_system_spec(data_dir + "/diamond_dark.json");
    CHECK(dark.label(0) == "g");
    CHECK(dark.label(3) == "f");
}

TEST_CASE("spec_from_operator inverts transfer_operator")
{
    const auto op = build_double_diamond({0.4, -1.2, 2.0, 0.7, 1.1, Amplitude(0, 1), -0.3, 2.5}).op();
    const auto spec = spec_from_operator(op);
    CHECK(spec.dimension == 7);
    CHECK(transfer_operator(spec) == op);
    CHECK(transfer_operator(parse_system_spec(serialize_system_spec(spec))) == op);

    const auto& entries = std::get<0>(spec.form);
    for (std::size_t k = 1; k < entries.size(); ++k)
        CHECK(std::pair(entries[k - 1].from, entries[k - 1].to) < std::pair(entries[k].from, entries[k].to));
}

TEST_CASE("scattering form")
{
    const auto spec = load_system_spec(data_dir + "/scattering.json");
    CHECK(spec.is_scattering());
    const auto op = transfer_operator(spec);
    // T(2,1) = V(2,1) / (E - e2)
    CHECK(std::abs(op.at(1, 0) - 0.2 / (Amplitude(0.5, 0.1) - 1.0)) < 1e-15);
    CHECK(std::abs(op.at(2, 1) - 0.3 / (Amplitude(0.5, 0.1) - 2.5)) < 1e-15);

    try {
        parse_system_spec(R"({"dimension": 2, "free_hamiltonian": [0.0, 1.0],
                              "potential_entries": [], "energy": {"re": 1.0, "im": 0.0}})");
        FAIL("expected ResonanceError");
    } catch (const ResonanceError& e) {
        CHECK(e.level() == 1);
        CHECK(contains(e.what(), "level 2"));
    }
}

TEST_CASE("parse errors name the offending record")
{
    CHECK(contains(parse_error(R"({"dimension": 4, "transfer_entries": [
        {"from": 1, "to": 2, "re": 1, "im": 0},
        {"from": 1, "to": 3, "re": 1, "im": 0},
        {"from": 5, "to": 4, "re": 1, "im": 0}]})"),
                   "transfer_entries[2]: 'from' = 5 out of range 1..4"));
    CHECK(contains(parse_error(R"({"dimension": 2, "transfer_entries": [
        {"from": 1, "to": 2, "re": 1, "im": 0},
        {"from": 1, "to": 2, "re": 2, "im": 0}]})"),
                   "transfer_entries[1]: duplicate transition 1 -> 2"));
    CHECK(contains(parse_error(R"({"dimension": 2, "transfer_entries": [
        {"from": 1, "to": 2, "re": 1}]})"),
                   "transfer_entries[0]: missing 'im'"));
    CHECK(contains(parse_error(R"({"dimension": 2, "transfer_entries": [
        {"from": 1, "to": 2, "re": 1, "im": 0, "weight": 3}]})"),
                   "unknown key 'weight'"));
    CHECK(contains(parse_error(R"({"dimension": 0, "transfer_entries": []})"), "dimension"));
    CHECK(contains(parse_error(R"({"dimension": 2})"), "exactly one of"));
    CHECK(contains(parse_error(R"({"dimension": 2, "transfer_entries": [],
        "free_hamiltonian": [0, 1], "potential_entries": [], "energy": {"re": 3, "im": 0}})"),
                   "exactly one of"));
    CHECK(contains(parse_error(R"({"dimension": 2, "basis_labels": ["a"], "transfer_entries": []})"),
                   "basis_labels"));
    CHECK(contains(parse_error(R"({"dimension": 2, "free_hamiltonian": [0],
        "potential_entries": [], "energy": {"re": 3, "im": 0}})"), "free_hamiltonian"));
    CHECK(contains(parse_error("{not json"), "malformed JSON"));
    CHECK(contains(parse_error("[1, 2]"), "top level"));

    CHECK_THROWS_AS(load_system_spec(data_dir + "/no_such_file.json"), ParseError);
}

TEST_CASE("state vector files")
{
    const auto phi = load_state_vector(data_dir + "/phi_diamond.json", 4);
    CHECK(phi[0] == Amplitude(1.0));
    CHECK(phi[1] == Amplitude(0.0, 0.5));
    CHECK(phi[3] == Amplitude(-0.25));

    CHECK_THROWS_AS(load_state_vector(data_dir + "/phi_diamond.json", 3), ParseError);
    CHECK_THROWS_AS(parse_state_vector(R"({"amplitudes": [{"re": 1}]})", 1), ParseError);
    CHECK_THROWS_AS(parse_state_vector(R"({"values": []})", 1), ParseError);
}

} // TEST_SUITE
