#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "weylcdma/io.hpp"
#include "weylcdma/sequences.hpp"

using namespace weylcdma;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(kInf) == "inf");

    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double x = uni(gen) * std::pow(10.0, static_cast<int>(gen() % 41) - 20);
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("sequence csv round-trips bit for bit") {
    const ComplexVector s = weyl_sequence({3, 11, 0.2});
    std::stringstream buf;
    write_sequence_csv(buf, s);

    std::string header;
    std::getline(buf, header);
    CHECK(header == "index,re,im");
    buf.seekg(0);

    const ComplexVector back = read_sequence_csv(buf);
    REQUIRE(back.size() == s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);
}

TEST_CASE("sequence csv rows are 1-indexed") {
    ComplexVector s(2);
    s << Complex(1, 0), Complex(0, -1);
    std::ostringstream buf;
    write_sequence_csv(buf, s);
    CHECK(buf.str() == "index,re,im\n1,1,0\n2,0,-1\n");
}

TEST_CASE("sequence csv reader rejects junk") {
    std::istringstream empty("index,re,im\n");
    CHECK_THROWS_AS(read_sequence_csv(empty), std::invalid_argument);
    std::istringstream short_row("index,re,im\n1,0.5\n");
    CHECK_THROWS_AS(read_sequence_csv(short_row), std::invalid_argument);
    std::istringstream bad_number("index,re,im\n1,zero,0\n");
    CHECK_THROWS_AS(read_sequence_csv(bad_number), std::invalid_argument);
}

TEST_CASE("sequence json round-trips bit for bit") {
    const ComplexVector s = gold_sequence({5, 0, 0, 0, 0, 2});
    std::stringstream buf;
    write_sequence_json(buf, s);
    const ComplexVector back = read_sequence_json(buf);
    REQUIRE(back.size() == s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);
}

TEST_CASE("sequence json reader rejects junk") {
    std::istringstream not_array("{\"a\": 1}");
    CHECK_THROWS_AS(read_sequence_json(not_array), std::invalid_argument);
    std::istringstream bad_pair("[[1, 0], [1]]");
    CHECK_THROWS_AS(read_sequence_json(bad_pair), std::invalid_argument);
    std::istringstream not_number("[[1, \"x\"]]");
    CHECK_THROWS_AS(read_sequence_json(not_number), std::invalid_argument);
    std::istringstream not_json("chips");
    CHECK_THROWS_AS(read_sequence_json(not_json), std::invalid_argument);
}

TEST_CASE("profile csv lists gap, parts, and magnitude") {
    std::ostringstream buf;
    write_profile_csv(buf, {Complex(1, 0), Complex(0, -1)});
    CHECK(buf.str() == "gap,re,im,abs\n0,1,0,1\n1,0,-1,1\n");
}

TEST_CASE("coefficients csv lists m, parts, and magnitude") {
    CoefficientVector coeffs;
    coeffs.kind = CoefficientKind::alpha;
    coeffs.values.resize(2);
    coeffs.values << Complex(3, 4), Complex(-1, 0);
    std::ostringstream buf;
    write_coefficients_csv(buf, coeffs);
    CHECK(buf.str() == "m,re,im,abs\n1,3,4,5\n2,-1,0,1\n");
}

TEST_CASE("ber csv uses the documented column order") {
    BerResult r;
    r.family = Family::gold;
    r.n = 63;
    r.users = 30;
    r.ebn0_db = 10.0;
    r.bits_simulated = 1000;
    r.bit_errors = 25;
    r.ber = 0.025;
    r.ci95 = 0.0096837;
    std::ostringstream buf;
    write_ber_csv(buf, {r});
    CHECK(buf.str() ==
          "family,N,K,ebn0_db,bits,errors,ber,ci95\n"
          "gold,63,30,10,1000,25,0.025,0.0096837\n");
}

TEST_CASE("ber csv writes noiseless points as inf") {
    BerResult r;
    r.ebn0_db = kInf;
    std::ostringstream buf;
    write_ber_csv(buf, {r});
    CHECK(buf.str().find(",inf,") != std::string::npos);
}

TEST_CASE("ber json mirrors the csv fields") {
    BerResult finite;
    finite.family = Family::weyl;
    finite.n = 63;
    finite.users = 10;
    finite.ebn0_db = 8.0;
    finite.bits_simulated = 500;
    finite.bit_errors = 3;
    finite.ber = 0.006;
    finite.ci95 = 0.0068;
    BerResult noiseless;
    noiseless.ebn0_db = kInf;

    std::stringstream buf;
    write_ber_json(buf, {finite, noiseless});
    const auto parsed = nlohmann::json::parse(buf.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["family"] == "weyl");
    CHECK(parsed[0]["N"] == 63);
    CHECK(parsed[0]["K"] == 10);
    CHECK(parsed[0]["ebn0_db"] == 8.0);
    CHECK(parsed[0]["bits"] == 500);
    CHECK(parsed[0]["errors"] == 3);
    CHECK(parsed[0]["ber"] == 0.006);
    CHECK(parsed[0]["ci95"] == 0.0068);
    CHECK(parsed[1]["ebn0_db"] == "inf");
}

TEST_CASE("family names") {
    CHECK(family_name(Family::weyl) == "weyl");
    CHECK(family_name(Family::gold) == "gold");
}
