#include <gtest/gtest.h>

#include "hopfweave/hopfweave.hpp"
#include "oracles.hpp"

namespace hopfweave {
namespace {

using json_io::FormatError;
using json_io::Json;

TEST(TreeJson, Layout) {
    const PlumbingTree t = knot_plumb(unknot(), KnotKind::figure_eight, {}, 1);
    EXPECT_EQ(json_io::tree_to_string(t), R"({"bands":[{"sign":"+","x":[]},{"sign":"-","x":[1]}]})");
    EXPECT_EQ(json_io::tree_to_string(unknot()), R"({"bands":[]})");
}

TEST(TreeJson, BitExactRoundTrip) {
    oracle::Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        const PlumbingTree t = oracle::random_tree(rng, 8, 3);
        const std::string text = json_io::tree_to_string(t);
        const PlumbingTree back = json_io::tree_from_string(text);
        ASSERT_EQ(back, t);
        ASSERT_EQ(json_io::tree_to_string(back), text);
    }
}

TEST(TreeJson, LabelsAndBigIntegersSurvive) {
    PlumbingTree t = hopf_plumb(unknot(), BandSign::positive, {}, "core");
    GluingVector x{Integer("-123456789012345678901234567890")};
    t = hopf_plumb(t, BandSign::negative, x);
    const std::string text = json_io::tree_to_string(t);
    EXPECT_EQ(text,
              R"({"bands":[{"label":"core","sign":"+","x":[]},{"sign":"-","x":["-123456789012345678901234567890"]}]})");
    const PlumbingTree back = json_io::tree_from_string(text);
    EXPECT_EQ(back.bands()[0].label, std::optional<std::string>("core"));
    EXPECT_EQ(back.bands()[1].gluing, x);
    EXPECT_EQ(json_io::tree_to_string(back), text);
}

TEST(TreeJson, RejectsMalformedInput) {
    EXPECT_THROW(json_io::tree_from_string(R"({"band":[]})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":{}})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":[{"sign":"*","x":[]}]})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":[{"sign":"+","x":[1]}]})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":[{"sign":"+","x":[1.5]}]})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":[{"sign":"+","x":["1x"]}]})"), FormatError);
    EXPECT_THROW(json_io::tree_from_string(R"({"bands":[)"), Json::parse_error);
}

TEST(ManifoldJson, RoundTrip) {
    for (const ManifoldModel& m : {ManifoldModel::sphere(), ManifoldModel("S1xS2", {0}),
                                   ManifoldModel("L(3,1)", {3}), ManifoldModel("S1xS2#RP3", {2, 0})}) {
        const Json j = json_io::manifold_to_json(m);
        const ManifoldModel back = json_io::manifold_from_json(j);
        EXPECT_EQ(back, m);
        EXPECT_EQ(back.name(), m.name());
        EXPECT_EQ(json_io::manifold_to_json(back).dump(), j.dump());
    }
    EXPECT_EQ(json_io::manifold_to_json(ManifoldModel("L(3,1)", {3})).dump(), R"j({"h1":[3],"name":"L(3,1)"})j");
    EXPECT_THROW(json_io::manifold_from_json(Json::parse(R"({"name":"x","h1":[1]})")), FormatError);
    EXPECT_THROW(json_io::manifold_from_json(Json::parse(R"({"h1":[]})")), FormatError);
}

TEST(FieldClassJson, RoundTrip) {
    const ManifoldModel m("S1xS2#RP3", {2, 0});
    oracle::Rng rng(82);
    for (int trial = 0; trial < 200; ++trial) {
        const PlaneFieldClass xi(m, H1Element(m, {oracle::uniform(rng, 0, 1), oracle::uniform(rng, -9, 9)}),
                                 H1Element(m, {oracle::uniform(rng, 0, 1), oracle::uniform(rng, -9, 9)}),
                                 oracle::uniform(rng, -99, 99));
        const std::string text = json_io::field_class_to_json(xi).dump();
        const PlaneFieldClass back = json_io::field_class_from_json(Json::parse(text), m);
        ASSERT_EQ(back, xi);
        ASSERT_EQ(json_io::field_class_to_json(back).dump(), text);
    }
    EXPECT_EQ(json_io::field_class_to_json(PlaneFieldClass::reference(m)).dump(),
              R"({"c":[0,0],"euler":[0,0],"framing":0})");
    EXPECT_THROW(json_io::field_class_from_json(Json::parse(R"({"c":[0],"euler":[0,0],"framing":0})"), m),
                 FormatError);
    EXPECT_THROW(json_io::field_class_from_json(Json::parse(R"({"c":[0,0],"euler":[0,0]})"), m), FormatError);
}

TEST(CertificateJson, RoundTrip) {
    const PlumbingTree t = knot_plumb(unknot(), KnotKind::trefoil, {}, 1);
    const PlumbingTree e = knot_plumb(unknot(), KnotKind::figure_eight, {}, 1);
    SearchConfig cfg;
    const auto cert = common_stabilization(t, e, cfg);
    ASSERT_TRUE(cert);
    const std::string text = json_io::certificate_to_json(*cert).dump();
    EXPECT_EQ(text.find(R"({"budget":1,"left":[{"sign":"-","x":[1,0]}],"matched":)"), 0U);
    const StabilizationCertificate back = json_io::certificate_from_json(Json::parse(text));
    EXPECT_EQ(back, *cert);
    EXPECT_EQ(json_io::certificate_to_json(back).dump(), text);
    EXPECT_TRUE(verify_certificate(t, e, back));

    Json bad = Json::parse(text);
    bad["budget"] = -1;
    EXPECT_THROW(json_io::certificate_from_json(bad), FormatError);
    bad.erase("budget");
    EXPECT_THROW(json_io::certificate_from_json(bad), FormatError);
}

TEST(ReportJson, FigureEight) {
    const Json j = json_io::report_to_json(invariants(knot_plumb(unknot(), KnotKind::figure_eight, {}, 1)));
    EXPECT_EQ(j["mu"], 2);
    EXPECT_EQ(j["lambda"], 1);
    EXPECT_EQ(j["sigma"], 0);
    EXPECT_EQ(j["alexander"]["text"], "t^2 - 3t + 1");
    EXPECT_EQ(j["alexander"]["coefficients"], Json::parse("[1,-3,1]"));
    EXPECT_EQ(j["fingerprint"]["symmetrized_smith"], Json::parse("[1,5]"));
    EXPECT_EQ(json_io::gk_to_json({2, 1}).dump(), R"({"lambda":1,"mu":2})");
}

}  // namespace
}  // namespace hopfweave
