#include <nsgrad/grading.hpp>
#include <nsgrad/io/json.hpp>
#include <nsgrad/magma/embeddability.hpp>
#include <nsgrad/magma/replay.hpp>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

#include <string>

using namespace nsgrad;
using io::Json;

namespace {

const std::string data_dir = NSGRAD_DATA_DIR;

std::string expect_input_error(const std::string& text) {
    try {
        io::parse_algebra(text);
    } catch (const io::InputError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no error for " << text;
    return {};
}

}  // namespace

TEST(AlgebraFile, OneDimensionalIdempotent) {
    const Algebra alg = io::parse_algebra(
        R"({"dim": 1, "basis": ["e"], "products": [{"left_index": 0, "right_index": 0, "result_index": 0, "coefficient": "1"}]})");
    EXPECT_EQ(alg.dim(), 1u);
    EXPECT_EQ(alg.coeff(0, 0, 0), 1);
}

TEST(AlgebraFile, ShippedWorkedFixtureMatchesConstruction) {
    const Algebra a = io::load_algebra(data_dir + "/paper_A_ffff.json");
    const Algebra b = io::load_algebra(data_dir + "/ffff_family.json");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, build_family({2, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 1}, {0, 0}},
                               Matrix{{0, 1}, {0, 0}}}));
}

TEST(AlgebraFile, ErrorsNameTheRecord) {
    const std::string zero_den = expect_input_error(
        R"({"dim": 1, "basis": ["e"], "products": [{"left_index": 0, "right_index": 0, "result_index": 0, "coefficient": "1/0"}]})");
    EXPECT_NE(zero_den.find("products[0].coefficient"), std::string::npos);
    EXPECT_NE(zero_den.find("zero denominator"), std::string::npos);

    const std::string range = expect_input_error(
        R"({"dim": 1, "basis": ["e"], "products": [{"left_index": 0, "right_index": 3, "result_index": 0, "coefficient": "1"}]})");
    EXPECT_NE(range.find("out of range"), std::string::npos);

    const std::string dup = expect_input_error(R"({"dim": 1, "basis": ["e"], "products": [
        {"left_index": 0, "right_index": 0, "result_index": 0, "coefficient": "1"},
        {"left_index": 0, "right_index": 0, "result_index": 0, "coefficient": "2"}]})");
    EXPECT_NE(dup.find("products[1]"), std::string::npos);
    EXPECT_NE(dup.find("duplicate"), std::string::npos);

    EXPECT_NE(expect_input_error(R"({"dim": 2, "basis": ["e"], "products": []})").find("differs from dim"),
              std::string::npos);
    EXPECT_NE(expect_input_error(
                  R"({"dim": 1, "basis": ["e"], "products": [{"left_index": 0, "right_index": 0, "result_index": 0, "coefficient": 0.5}]})")
                  .find("must be strings"),
              std::string::npos);
    EXPECT_NE(expect_input_error(R"({"dim": 1, "basis": ["e"]})").find("missing field 'products'"), std::string::npos);
    EXPECT_NE(expect_input_error(R"({"dim": 1, "basis": ["e"], )").find("syntax error"), std::string::npos);
    EXPECT_NE(expect_input_error(R"({"dim": 2, "basis": ["e", "e"], "products": []})").find("distinct"),
              std::string::npos);
}

TEST(AlgebraFile, RoundTrip) {
    oracle::Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        Algebra alg = Algebra::with_default_names(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    if (rng.chance(0.3)) alg.set_coeff(i, j, k, Rational(rng.uniform(-9, 9), rng.uniform(1, 5)));
        EXPECT_EQ(io::parse_algebra(io::to_json(alg).dump()), alg);
    }
}

TEST(FamilyFile, ValidatesShapes) {
    const Json bad = Json::parse(R"({"v_dim": 2,
        "f_L": {"rows": 2, "cols": 2, "entries": ["0", "1", "0", "0"]},
        "f_R": {"rows": 2, "cols": 2, "entries": ["0", "1", "0"]},
        "g_L": {"rows": 2, "cols": 2, "entries": ["0", "1", "0", "0"]},
        "g_R": {"rows": 2, "cols": 2, "entries": ["0", "1", "0", "0"]}})");
    try {
        io::family_from_json(bad);
        FAIL();
    } catch (const io::InputError& e) {
        EXPECT_NE(std::string(e.what()).find("family.f_R.entries"), std::string::npos);
    }
    const FamilySpec s{1, Matrix{{1}}, Matrix{{2}}, Matrix{{Rational(1, 3)}}, Matrix{{-4}}};
    const FamilySpec back = io::family_from_json(io::to_json(s));
    EXPECT_EQ(back.g_left, s.g_left);
    EXPECT_EQ(back.g_right, s.g_right);
}

TEST(MagmaFile, ParseAndErrors) {
    const magma::PartialMagma m = io::load_magma(data_dir + "/ffff_magma.json");
    EXPECT_EQ(m.elements(), (std::vector<std::string>{"0", "-1", "1"}));
    EXPECT_EQ(m.defined_count(), 5u);
    EXPECT_THROW(io::magma_from_json(Json::parse(R"({"elements": ["x"], "table": [{"left": "x", "right": "y", "result": "x"}]})")),
                 io::InputError);
    EXPECT_THROW(io::magma_from_json(Json::parse(R"({"elements": ["x"], "table": [
        {"left": "x", "right": "x", "result": "x"}, {"left": "x", "right": "x", "result": "x"}]})")),
                 io::InputError);
    EXPECT_THROW(io::load_magma(data_dir + "/no_such_file.json"), io::InputError);
}

TEST(CertificateJson, RoundTripsAndReplays) {
    const std::vector<std::string> files{"ffff_magma.json", "mod3.json", "square_only.json", "idempotent_magma.json",
                                         "empty2.json"};
    for (const auto& f : files) {
        const magma::PartialMagma m = io::load_magma(data_dir + "/" + f);
        const magma::EmbeddabilityVerdict v = magma::embeddability(m);
        const Json j = io::to_json(m, v);
        const magma::EmbeddabilityVerdict back = io::verdict_from_json(m, Json::parse(j.dump()));
        EXPECT_EQ(back, v) << f;
        EXPECT_TRUE(magma::replay_certificate(m, back).valid) << f;
    }
    const magma::PartialMagma adv = io::load_magma(data_dir + "/adversarial.json");
    const auto unknown = magma::embeddability(adv, {2, 1, 0, 1});
    EXPECT_EQ(io::verdict_from_json(adv, io::to_json(adv, unknown)), unknown);
}

TEST(CertificateJson, TableWithFreshElement) {
    magma::PartialMagma m({"x", "y"});
    m.define("x", "x", "y");
    const magma::CayleyTable t{{"x", "y", "_s1"}, {2, 2, 2, 2, 2, 2, 2, 2, 2}};
    const magma::EmbeddabilityVerdict v{magma::Verdict::Embeddable, t, "finite_search"};
    const Json j = io::to_json(m, v);
    EXPECT_EQ(j["certificate"]["table"][0][0], "_s1");
    EXPECT_EQ(io::verdict_from_json(m, j), v);
    EXPECT_FALSE(magma::replay_certificate(m, v).valid);  // x * x must stay y
}

TEST(MatrixJson, RejectsWrongCounts) {
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": ["1"]})"), "m"), io::InputError);
    EXPECT_THROW(io::matrix_from_json(Json::parse(R"({"rows": -1, "cols": 2, "entries": []})"), "m"), io::InputError);
    const Matrix m = io::matrix_from_json(Json::parse(R"({"rows": 1, "cols": 2, "entries": ["1/2", "-3"]})"), "m");
    EXPECT_EQ(m, (Matrix{{Rational(1, 2), -3}}));
}
