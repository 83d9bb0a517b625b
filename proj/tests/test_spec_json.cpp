#include <doctest.h>

#include "spheremap/spec_json.hpp"

using namespace spheremap;

TEST_CASE("parse the four spec families") {
  const auto gnom = parse_spec(R"({"type":"gnomonic","tangent_lat":-90,"tangent_lon":0})");
  REQUIRE(std::holds_alternative<Gnomonic>(gnom));
  CHECK(std::get<Gnomonic>(gnom).tangent_point.lat() == doctest::Approx(-kHalfPi));

  const auto conic = parse_spec(R"({"type":"delisle","phi1":47.5,"phi2":62.5})");
  REQUIRE(std::holds_alternative<EquidistantConic>(conic));
  CHECK(std::get<EquidistantConic>(conic).params.n ==
        doctest::Approx(0.8168147228238901).epsilon(1e-14));  // frozen oracle

  const auto stereo = parse_spec(R"({"type":"stereographic","pole":"north"})");
  REQUIRE(std::holds_alternative<Stereographic>(stereo));
  CHECK(std::get<Stereographic>(stereo).projection_pole == Pole::North);

  const auto cyl = parse_spec(R"({"type":"cylindrical","profile":"conformal"})");
  REQUIRE(std::holds_alternative<Cylindrical>(cyl));
  CHECK(std::get<Cylindrical>(cyl).ref_lat == 0.0);  // default

  const auto cyl2 = parse_spec(R"({"type":"cylindrical","profile":"equal_area","ref_lat":30})");
  CHECK(std::get<Cylindrical>(cyl2).ref_lat == doctest::Approx(deg_to_rad(30)));
}

TEST_CASE("parse errors name the field and constraint") {
  CHECK_THROWS_WITH_AS(parse_spec(R"({"type":"delisle","phi1":70,"phi2":40})"),
                       doctest::Contains("phi1"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"delisle","phi1":0,"phi2":40})"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"delisle","phi1":10})"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"mercator"})"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"stereographic","pole":"up"})"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"gnomonic","tangent_lat":95,"tangent_lon":0})"),
                  SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"cylindrical","profile":"conformal","ref_lat":90})"),
                  SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"cylindrical","profile":"conic"})"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("not json at all"), SpecParseError);
  CHECK_THROWS_AS(parse_spec("[1,2,3]"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(R"({"type":"gnomonic","tangent_lat":"x","tangent_lon":0})"),
                  SpecParseError);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), SpecParseError);
}

TEST_CASE("canonical encoding round trips") {
  const std::vector<std::string> texts = {
      R"({"type":"stereographic","pole":"south"})",
      R"({"type":"gnomonic","tangent_lat":55,"tangent_lon":10})",
      R"({"type":"cylindrical","profile":"equirectangular","ref_lat":45})",
      R"({"type":"delisle","phi1":47.5,"phi2":62.5})",
  };
  for (const auto& text : texts) {
    const ProjectionSpec spec = parse_spec(text);
    const ProjectionSpec again = parse_spec(spec_to_json(spec));
    CHECK(spec.index() == again.index());
    const GeoPoint probe = GeoPoint::from_degrees(50, 5);
    if (in_domain(spec, probe)) {
      CHECK((forward(spec, probe) - forward(again, probe)).norm() < 1e-12);
    }
  }
}
