#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "qillum/sweep.hpp"

using namespace qillum;
using Catch::Matchers::WithinAbs;

TEST_CASE("eta range parsing") {
    const eta_range full = eta_range::parse("0:1:101");
    REQUIRE(full.count == 101);
    const std::vector<double> v = full.values();
    REQUIRE(v.size() == 101);
    REQUIRE(v.front() == 0.0);
    REQUIRE(v.back() == 1.0);
    REQUIRE_THAT(v[50], WithinAbs(0.5, 1e-15));

    const eta_range single = eta_range::parse("0.3");
    REQUIRE(single.count == 1);
    REQUIRE(single.values() == std::vector<double>{0.3});

    const eta_range degenerate = eta_range::parse("0:0:1");
    REQUIRE(degenerate.values() == std::vector<double>{0.0});

    const eta_range pair = eta_range::parse("0.25:0.75:3");
    REQUIRE_THAT(pair.values()[1], WithinAbs(0.5, 1e-15));
    REQUIRE(pair.values()[2] == 0.75);
}

TEST_CASE("eta range rejects malformed input") {
    REQUIRE_THROWS_AS(eta_range::parse("-0.5:1:10"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("0:2:5"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("0.9:0.1:5"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("0:1"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("0:1:0"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("a:b:c"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("0.5x"), std::invalid_argument);
    REQUIRE_THROWS_AS(eta_range::parse("1.5"), std::invalid_argument);
}

TEST_CASE("sweep point checkpoints") {
    const sweep_record r = evaluate_sweep_point(illumination_config(2, 1.0, 0.5));
    REQUIRE_THAT(r.i_q, WithinAbs(0.548794940695398, 1e-12));
    REQUIRE_THAT(r.i_c_max, WithinAbs(0.311278124459133, 1e-12));
    REQUIRE_THAT(r.delta_i, WithinAbs(0.237516816236266, 1e-12));
    REQUIRE_THAT(r.discord_enc, WithinAbs(0.237516816236266, 1e-12));
    REQUIRE_THAT(r.discord, WithinAbs(1.0, 1e-12));
    REQUIRE(r.concurrence.has_value());
    REQUIRE_THAT(*r.concurrence, WithinAbs(1.0, 1e-9));
    REQUIRE_THAT(*r.eof, WithinAbs(1.0, 1e-9));

    // no closed-form entanglement columns beyond qubits
    const sweep_record r3 = evaluate_sweep_point(illumination_config(3, 0.5, 0.5));
    REQUIRE_FALSE(r3.concurrence.has_value());
    REQUIRE_FALSE(r3.eof.has_value());
}

TEST_CASE("sweep ordering and the zero-reflectivity row") {
    const std::vector<sweep_record> records =
        run_sweep({3, 2}, {0.75, 0.25}, eta_range::parse("0:1:3"), 1e-9);
    REQUIRE(records.size() == 12);
    // ordering follows the given axes: d outer, then p0, then eta
    REQUIRE(records[0].d == 3);
    REQUIRE(records[0].p0 == 0.75);
    REQUIRE(records[0].eta == 0.0);
    REQUIRE(records[1].eta == 0.5);
    REQUIRE(records[3].p0 == 0.25);
    REQUIRE(records[6].d == 2);

    // eta = 0 carries no information at all
    REQUIRE_THAT(records[0].i_q, WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(records[0].i_c_max, WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(records[0].discord_enc, WithinAbs(0.0, 1e-15));
}

TEST_CASE("sweep enforces the equality tolerance") {
    REQUIRE_THROWS_AS(run_sweep({2}, {0.5}, eta_range::parse("0:1:101"), 0.0),
                      std::runtime_error);
    REQUIRE_THROWS_AS(run_sweep({}, {0.5}, eta_range::parse("0:1:3"), 1e-9),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(run_sweep({2}, {0.5}, eta_range::parse("0:1:3"), -1.0),
                      std::invalid_argument);
}

TEST_CASE("CSV serialization") {
    const std::vector<sweep_record> records =
        run_sweep({2, 3}, {0.5}, eta_range::parse("0:1:2"), 1e-9);
    std::ostringstream out;
    write_sweep_csv(out, records);
    const std::string text = out.str();

    REQUIRE(text.rfind("d,eta,p0,i_q,i_c_max,delta_i,discord,discord_avg,discord_enc,"
                       "concurrence,eof\n", 0) == 0);
    REQUIRE(text.find("\r") == std::string::npos);  // LF only

    // d=2 rows fill the entanglement columns, d=3 rows leave them empty
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);  // header
    std::getline(lines, line);
    REQUIRE(line.rfind("2,0,0.5,", 0) == 0);
    REQUIRE(line.substr(line.size() - 2) != ",,");
    std::getline(lines, line);  // d=2, eta=1
    std::getline(lines, line);  // d=3, eta=0
    REQUIRE(line.rfind("3,", 0) == 0);
    REQUIRE(line.substr(line.size() - 2) == ",,");

    // byte-identical on repeat
    std::ostringstream again;
    write_sweep_csv(again, records);
    REQUIRE(text == again.str());
}

TEST_CASE("sweep respects the theorem on a dense qubit grid") {
    const std::vector<sweep_record> records =
        run_sweep({2}, {0.5}, eta_range::parse("0:1:101"), 1e-9);
    REQUIRE(records.size() == 101);
    for (const sweep_record& r : records) {
        REQUIRE(std::abs(r.delta_i - r.discord_enc) <= 1e-9);
        REQUIRE(r.delta_i >= -1e-12);
    }
}
