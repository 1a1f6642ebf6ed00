#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "ringfactor/elementary.hpp"
#include "ringfactor/exponential.hpp"
#include "ringfactor/json_io.hpp"

#include "test_support.hpp"

using namespace ringfactor;
using testing::Rng;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(RINGFACTOR_CLI) + " " + args + " > cli_stdout.txt 2> cli_stderr.txt";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("descriptor and element JSON round-trips") {
    const RingDescriptor rings[] = {
        RingDescriptor::rationals(),
        RingDescriptor::gaussian_rationals(),
        RingDescriptor::integers(),
        RingDescriptor::poly(RingDescriptor::gaussian_rationals()),
        RingDescriptor::jet(RingDescriptor::rationals(), 4),
        RingDescriptor::product({RingDescriptor::jet(RingDescriptor::rationals(), 2),
                                 RingDescriptor::rationals()}),
    };
    Rng rng(301);
    for (const auto& desc : rings) {
        CHECK(io::descriptor_from_json(io::descriptor_to_json(desc)) == desc);
        for (int trial = 0; trial < 10; ++trial) {
            auto e = testing::random_element(desc, rng);
            CHECK(io::element_from_json(io::element_to_json(e), desc) == e);
        }
    }
}

TEST_CASE("descriptor JSON matches the documented layout") {
    auto jr = RingDescriptor::jet(RingDescriptor::rationals(), 3);
    auto j = io::descriptor_to_json(jr);
    CHECK(j.at("kind") == "jet");
    CHECK(j.at("base") == "rational");
    CHECK(j.at("order") == 3);
    auto e = io::element_to_json(RingElement::gaussian(Rat(1) / 2, Rat(-3)));
    CHECK(e.at("re") == "1/2");
    CHECK(e.at("im") == "-3");
}

TEST_CASE("matrix and certificate JSON round-trips") {
    Rng rng(303);
    auto jr = RingDescriptor::jet(RingDescriptor::rationals(), 3);
    auto x = testing::random_sl(3, jr, rng, 6);
    CHECK(io::matrix_from_json(io::matrix_to_json(x)) == x);

    auto cert = factor_bsr1_sln(x);
    auto back = io::factorization_from_json(io::factorization_to_json(cert));
    CHECK(back.target == cert.target);
    REQUIRE(back.factors.size() == cert.factors.size());
    for (size_t i = 0; i < back.factors.size(); ++i)
        CHECK(back.factors[i].matrix() == cert.factors[i].matrix());
    CHECK(verify_factorization(back).pass);

    auto ec = sl_to_exponentials(x);
    auto eback = io::exp_certificate_from_json(io::exp_certificate_to_json(ec));
    CHECK(eback.target == ec.target);
    CHECK(replay_exp_certificate(eback));
}

TEST_CASE("single-entry factors use 1-based indices") {
    auto qq = RingDescriptor::rationals();
    FactorizationCertificate cert{RingMatrix::identity(2, qq),
                                  {ElementaryFactor::single_entry(2, 0, 1, RingElement::rational(5))},
                                  "test"};
    auto j = io::factorization_to_json(cert);
    CHECK(j.at("factors")[0].at("i") == 1);
    CHECK(j.at("factors")[0].at("j") == 2);
}

TEST_CASE("the multivariable fixture is rejected with UnsupportedRing") {
    auto j = io::read_json_file(std::string(RINGFACTOR_TEST_DATA) + "/cohn.json");
    try {
        (void)io::matrix_from_json(j);
        FAIL("expected UnsupportedRing");
    } catch (const RingError& e) {
        CHECK(e.code() == Errc::UnsupportedRing);
    }
}

TEST_CASE("cli: factor then verify round-trips with exit 0") {
    {
        std::ofstream out("cli_m.json");
        out << R"({"ring": "rational", "n": 2, "entries": [["2","1"],["3","2"]]})";
    }
    CHECK(run_cli("factor cli_m.json -o cli_m.cert.json") == 0);
    CHECK(run_cli("verify cli_m.cert.json") == 0);
    CHECK(run_cli("factor cli_m.json --algorithm gauss -o cli_m2.cert.json") == 0);
    CHECK(run_cli("verify cli_m2.cert.json") == 0);
}

TEST_CASE("cli: tampered certificate fails verification with exit 1") {
    {
        std::ofstream out("cli_t.json");
        out << R"({"ring": "rational", "n": 2, "entries": [["1","4"],["0","1"]]})";
    }
    REQUIRE(run_cli("factor cli_t.json -o cli_t.cert.json") == 0);
    auto j = io::read_json_file("cli_t.cert.json");
    j["target"]["entries"][0][1] = "5"; // change the target, keep the factors
    io::write_json_file("cli_t.cert.json", j);
    CHECK(run_cli("verify cli_t.cert.json") == 1);
    CHECK(slurp("cli_stdout.txt").find("entry (1,2)") != std::string::npos);
}

TEST_CASE("cli: parse errors exit with 2 and name the field") {
    {
        std::ofstream out("cli_bad.json");
        out << R"({"ring": "rational", "entries": []})";
    }
    CHECK(run_cli("factor cli_bad.json") == 2);
    CHECK(slurp("cli_stderr.txt").find("'n'") != std::string::npos);
    CHECK(run_cli(std::string("factor ") + RINGFACTOR_TEST_DATA + "/cohn.json") == 2);
    CHECK(slurp("cli_stderr.txt").find("UnsupportedRing") != std::string::npos);
}

TEST_CASE("cli: --ring reinterprets the entries over another ring") {
    {
        std::ofstream out("cli_r.json");
        out << R"({"ring": "integer", "n": 2, "entries": [["2","1"],["1","1"]]})";
    }
    CHECK(run_cli("factor cli_r.json --algorithm euclid -o cli_r1.cert.json") == 0);
    CHECK(run_cli("factor cli_r.json --ring rational --algorithm gauss -o cli_r2.cert.json") == 0);
    auto j = io::read_json_file("cli_r2.cert.json");
    CHECK(j.at("target").at("ring") == "rational");
}

TEST_CASE("cli: exp-factor and three-exp write verifiable certificates") {
    {
        std::ofstream out("cli_e.json");
        out << R"({"ring": {"kind":"jet","base":"rational","order":3}, "n": 2,)"
            << R"( "entries": [[["1","2"], ["0"]], [["0"], ["1","2"]]]})";
    }
    CHECK(run_cli("exp-factor cli_e.json -o cli_e.cert.json") == 0);
    CHECK(run_cli("verify cli_e.cert.json") == 0);
    {
        std::ofstream out("cli_p.json");
        out << R"({"ring": {"kind":"poly","base":"rational"}, "n": 2,)"
            << R"( "entries": [[["1"], []], [["0","1"], ["1"]]]})";
    }
    CHECK(run_cli("three-exp cli_p.json -o cli_p.cert.json --seed 11 --extra-samples 8") == 0);
    CHECK(run_cli("verify cli_p.cert.json") == 0);
    CHECK(run_cli("homotopy cli_p.json --grid-n 10 -o cli_p.csv") == 0);
    std::string csv = slurp("cli_p.csv");
    CHECK(csv.find("t,z_re,z_im,e11_re") == 0);
}
