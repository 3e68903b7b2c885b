#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qprime/cli.hpp"
#include "qprime/formspec.hpp"
#include "qprime/serialize.hpp"

using namespace qprime;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args, int expected_code = cli::exit_ok)
{
    const auto r = run_cli(args);
    INFO(r.err);
    REQUIRE(r.code == expected_code);
    return Json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("qprime_cli_" + name);
}

} // namespace

TEST_CASE("form spec grammar")
{
    CHECK(parse_form_spec("G4") == QuasiForm::eisenstein(4));
    CHECK(parse_form_spec(" D^2 G2 ") == QuasiForm::eisenstein(2, 2));
    CHECK(parse_form_spec("D D G2") == QuasiForm::eisenstein(2, 2));
    CHECK(parse_form_spec("DELTA") == QuasiForm::cusp_form(12, 0));
    CHECK(parse_form_spec("D DELTA") == QuasiForm::cusp_form(12, 0, 1));
    CHECK(parse_form_spec("S24.1 - 1/2 S24.0") == QuasiForm::cusp_form(24, 1) + QuasiForm::cusp_form(24, 0, 0, Rational(-1, 2)));
    CHECK(parse_form_spec("H8") == hk_form(8));
    CHECK(parse_form_spec("-3/4*G6 + G4") == QuasiForm::eisenstein(6, 0, Rational(-3, 4)) + QuasiForm::eisenstein(4));
    CHECK(parse_form_spec("2(G4 + G6)") == QuasiForm::eisenstein(4, 0, 2) + QuasiForm::eisenstein(6, 0, 2));
    CHECK(parse_form_spec("0").is_zero());

    const auto classical = EisensteinConvention::classical;
    CHECK(parse_form_spec("G2^2", classical)
        == QuasiForm::eisenstein(4, 0, Rational(5, 12)) + QuasiForm::eisenstein(2, 1, Rational(-1, 2)));
    CHECK(parse_form_spec("240^3 G4^3 - 504^2 G6^2", classical) == QuasiForm::cusp_form(12, 0, 0, 1728));

    try {
        parse_form_spec("G4 + X");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_form_spec(""), ParseError);
    CHECK_THROWS_AS(parse_form_spec("G3"), ParseError);
    CHECK_THROWS_AS(parse_form_spec("H5"), ParseError);
    CHECK_THROWS_AS(parse_form_spec("S12.1"), ParseError);
    CHECK_THROWS_AS(parse_form_spec("G4 * DELTA"), ParseError);
    CHECK_THROWS_AS(parse_form_spec("(G4"), ParseError);
    CHECK_THROWS_AS(parse_form_spec("G4 G8 +"), ParseError);
}

TEST_CASE("json round trips")
{
    const QuasiForm f = hk_form(10) + QuasiForm::cusp_form(24, 1, 2, Rational(-7, 3)) + QuasiForm::constant_form(Rational(1, 5));
    CHECK(quasiform_from_json(Json::parse(to_json(f).dump())) == f);
    CHECK(to_json(QuasiForm::eisenstein(4)).dump() == R"({"eis":[[4,0,"1"]],"cusp":[]})");

    const QExpansion e = quasiform_expand(f, 30);
    CHECK(expansion_from_json(Json::parse(to_json(e).dump())) == e);
    CHECK(to_json(e).dump() == to_json(expansion_from_json(to_json(e))).dump());

    const auto d = split_eis_cusp(f);
    const auto back = decomposition_from_json(Json::parse(to_json(d).dump()));
    CHECK(back.eis_part == d.eis_part);
    CHECK(back.cusp_part == d.cusp_part);
    CHECK(back.certificate_precision == 60);

    CHECK(rational_from_json(Json("-3/9")) == Rational(-1, 3));
    CHECK(rational_from_json(Json(4)) == 4);
}

TEST_CASE("expand examples")
{
    const Json g4 = run_json({"expand", "G4", "--precision", "5"});
    CHECK(g4["coeffs"] == Json::array({"-1/240", "1", "9", "28", "73", "126"}));
    CHECK(g4["precision"] == 5);

    CHECK(run_json({"expand", "H6", "--precision", "6"})["coeffs"][6] == "20");
    CHECK(run_json({"expand", "D^2 G2", "--precision", "3"})["coeffs"] == Json::array({"0", "1", "12", "36"}));
    CHECK(run_json({"--eisenstein-constant-sign", "classical", "expand", "G4", "--precision", "1"})["coeffs"][0]
        == "1/240");
    CHECK(run_json({"expand", "G4", "--eisenstein-constant-sign", "classical", "--precision", "1"})["coeffs"][0]
        == "1/240");

    const auto csv = run_cli({"expand", "DELTA", "--precision", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,coefficient\n0,0\n1,1\n2,-24\n3,252\n");
}

TEST_CASE("expand output round-trips bit-exactly")
{
    for (const std::string spec : {"H12 + 3/7 D^3 DELTA", "G2^2*G6 - S24.1", "G4"}) {
        const auto r = run_cli({"expand", spec, "--precision", "40"});
        REQUIRE(r.code == 0);
        const QExpansion parsed = expansion_from_json(Json::parse(r.out));
        CHECK(parsed == quasiform_expand(parse_form_spec(spec), 40));
        CHECK(to_json(parsed).dump() + "\n" == r.out);
    }
}

TEST_CASE("usage and parse errors exit 2")
{
    CHECK(run_cli({}).code == cli::exit_usage);
    CHECK(run_cli({"expand"}).code == cli::exit_usage);
    CHECK(run_cli({"frobnicate", "G4"}).code == cli::exit_usage);
    CHECK(run_cli({"expand", "G4", "--precision", "0"}).code == cli::exit_usage);
    CHECK(run_cli({"expand", "G4", "--precision", "-3"}).code == cli::exit_usage);
    CHECK(run_cli({"expand", "G4", "--format", "xml"}).code == cli::exit_usage);
    CHECK(run_cli({"expand", "G4", "--eisenstein-constant-sign", "negative"}).code == cli::exit_usage);
    CHECK(run_cli({"signstats", "DELTA", "--bound", "1"}).code == cli::exit_usage);
    CHECK(run_cli({"deligne", "--weight", "24"}).code == cli::exit_usage);
    CHECK(run_cli({"finite-check", "DELTA"}).code == cli::exit_usage);
    CHECK(run_cli({"finite-check", "G4", "--primes", "2,9"}).code == cli::exit_usage);

    const auto bad = run_cli({"expand", "G4 + X"});
    CHECK(bad.code == cli::exit_usage);
    CHECK(bad.err.find("position 5") != std::string::npos);
    CHECK(bad.out.empty());
}

TEST_CASE("decompose")
{
    const Json j = run_json({"decompose", "G4^3", "--eisenstein-constant-sign", "classical"});
    CHECK(j["certificate_precision"] == 60);
    CHECK(j["cusp_part"]["cusp"].size() == 1);
    CHECK(j["eis_part"]["eis"].size() == 1);
    CHECK(run_json({"decompose", "DELTA"})["eis_part"]["eis"].empty());
}

TEST_CASE("decide verdicts and exit codes")
{
    const Json h8 = run_json({"decide", "H8"});
    CHECK(h8["omega_tilde"]["verdict"] == "InOmegaTilde");
    CHECK(h8["omega_scan"]["passed"] == true);

    const Json g4 = run_json({"decide", "G4", "--bound", "10"}, cli::exit_verdict_not);
    CHECK(g4["omega_tilde"]["verdict"] == "Not");
    CHECK(g4["omega_tilde"]["witnesses"][0]["kind"] == "prime");
    CHECK(g4["omega_tilde"]["witnesses"][0]["p"] == 2);

    const Json d = run_json({"decide", "DELTA"}, cli::exit_verdict_not);
    CHECK(d["omega_tilde"]["witnesses"][0]["kind"] == "cusp");

    // In Omega-tilde but the small-n scan flags c(1) = 0.
    const Json small = run_json({"decide", "H6", "--include-small"}, cli::exit_verdict_not);
    CHECK(small["omega_tilde"]["verdict"] == "InOmegaTilde");
    CHECK(small["omega_scan"]["passed"] == false);

    const Json capped = run_json({"decide", "G4", "--bound", "200", "--max-violations", "3"}, cli::exit_verdict_not);
    CHECK(capped["omega_scan"]["violations"].size() == 3);
    CHECK(capped["omega_scan"]["total_violations"] == 46);
}

TEST_CASE("finite-check")
{
    const Json h8 = run_json({"finite-check", "H8"});
    CHECK(h8["finite_check"]["verdict"] == "VanishesAtAllPrimes");
    CHECK(h8["primes"].size() == 6);

    const Json g4 = run_json({"finite-check", "G4", "--primes", "2"}, cli::exit_verdict_not);
    CHECK(g4["finite_check"]["verdict"] == "NotAllPrimes");
    CHECK(g4["finite_check"]["witness"]["value"] == "9");

    const Json few = run_json({"finite-check", "H8", "--primes", "2,3,3"}, cli::exit_verdict_not);
    CHECK(few["finite_check"]["verdict"] == "InsufficientPrimes");
    CHECK(few["finite_check"]["needed"] == 6);
}

TEST_CASE("signstats")
{
    const Json d = run_json({"signstats", "DELTA", "--bound", "10"});
    CHECK(d["sign_changes"] == 2);
    CHECK(d["prime_coefficients"]
        == Json::array({Json::array({2, "-24"}), Json::array({3, "252"}), Json::array({5, "4830"}),
            Json::array({7, "-16744"})}));

    CHECK(run_json({"signstats", "G4", "--bound", "100"})["sign_changes"] == 0);
    const Json zero = run_json({"signstats", "0", "--bound", "50", "--grid", "10,50"});
    CHECK(zero["sign_changes"] == 0);

    const auto csv = run_cli({"signstats", "DELTA", "--bound", "10", "--grid", "3,10", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "x,partial_sum,partial_sum_abs,partial_sum_sq\n3,228,276,64080\n10,-11686,21850,303754516\n");

    const auto plot = run_cli({"signstats", "DELTA", "--bound", "100", "--plot-data"});
    CHECK(plot.code == 0);
    CHECK(plot.out.rfind("x,normalized_sq\n10,", 0) == 0);

    CHECK(run_cli({"signstats", "DELTA", "--bound", "100", "--grid", "50,10"}).code == cli::exit_usage);
}

TEST_CASE("deligne and macmahon")
{
    const Json d = run_json({"deligne", "--weight", "16", "--bound", "500"});
    CHECK(d["passed"] == true);
    CHECK(d["weight"] == 16);

    const auto csv = run_cli({"macmahon", "--bound", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("n,M_1,M_2,identity_holds,is_prime\n", 0) == 0);
    CHECK(csv.out.find("5,6,9,1,1\n") != std::string::npos);

    const Json j = run_json({"macmahon", "--amax", "3", "--bound", "6"});
    CHECK(j["a_max"] == 3);
}

TEST_CASE("--output and QuasiForm JSON input")
{
    const auto form_path = scratch("form.json");
    const auto out_path = scratch("out.json");
    {
        std::ofstream file(form_path);
        file << to_json(hk_form(6) + QuasiForm::cusp_form(12, 0, 1)).dump();
    }
    const auto r = run_cli({"expand", form_path.string(), "--precision", "8", "--output", out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    const QExpansion e = expansion_from_json(Json::parse(in));
    CHECK(e == quasiform_expand(hk_form(6) + QuasiForm::cusp_form(12, 0, 1), 8));

    CHECK(run_cli({"expand", "G4", "--output", "/nonexistent/dir/x.json"}).code == cli::exit_usage);
    std::filesystem::remove(form_path);
    std::filesystem::remove(out_path);
}
