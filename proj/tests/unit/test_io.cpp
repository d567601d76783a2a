#include <gtest/gtest.h>

#include "support.hpp"

using namespace graev;
using support::q;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, SpaceRoundTrip) {
  const auto space = support::fixture_space("line4.json");
  const auto again = io::space_from_json(io::to_json(space), "roundtrip");
  EXPECT_EQ(again.names(), space.names());
  EXPECT_EQ(again.matrix(), space.matrix());
  EXPECT_EQ(again.basepoint(), space.basepoint());
}

TEST(Io, NonzeroBasepointIndex) {
  const auto space = support::fixture_space("tree5.json");
  EXPECT_EQ(space.basepoint(), 2u);
  EXPECT_TRUE(validate_space(space).ok());
}

TEST(Io, ParseErrorsNameSourceAndField) {
  const auto bad_entry = nlohmann::json::parse(R"({"points":["*","a"],"basepoint":"*","dist":[["0","x"],["1","0"]]})");
  const std::string m1 = message_of([&] { io::space_from_json(bad_entry, "s.json"); });
  EXPECT_NE(m1.find("s.json"), std::string::npos);
  EXPECT_NE(m1.find("dist"), std::string::npos);

  const auto missing = nlohmann::json::parse(R"({"points":["*","a"],"dist":[]})");
  EXPECT_NE(message_of([&] { io::space_from_json(missing, "m.json"); }).find("basepoint"), std::string::npos);

  const auto space = support::fixture_space("discrete3.json");
  const auto unknown = nlohmann::json::parse(R"({"coeffs":{"z":"1"}})");
  EXPECT_NE(message_of([&] { io::word_from_json(unknown, space, "w.json"); }).find("'z'"), std::string::npos);
  const auto fractional = nlohmann::json::parse(R"({"coeffs":{"a":"1/2"}})");
  EXPECT_NE(message_of([&] { io::word_from_json(fractional, space, "w.json"); }).find("integer"), std::string::npos);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST(Io, WordAndLincomb) {
  const auto space = support::fixture_space("discrete3.json");
  const auto w = io::word_from_json(nlohmann::json::parse(R"({"coeffs":{"a":"2","b":-1}})"), space, "inline");
  EXPECT_EQ(w, support::word(space, {{"a", 2}, {"b", -1}}));
  const auto v = io::lincomb_from_json(nlohmann::json::parse(R"({"coeffs":{"a":"1/2"}})"), space, "inline");
  EXPECT_EQ(v.coeff(1), q(1, 2));
  EXPECT_EQ(io::word_from_json(io::to_json(w, space), space, "rt"), w);
}

TEST(Io, Angles) {
  const auto a = io::angle_from_json(nlohmann::json::parse(R"({"rat":"1/4"})"), "a");
  EXPECT_EQ(a, torus::Angle::rational(q(1, 4)));
  const auto b = io::angle_from_json(nlohmann::json::parse(R"({"coords":{"1":"0","sqrt2":"1"}})"), "b");
  EXPECT_EQ(b, torus::Angle::sqrt_prime(1));
  EXPECT_EQ(io::angle_from_json(io::to_json(b), "rt"), b);
  EXPECT_THROW(io::angle_from_json(nlohmann::json::parse(R"({"coords":{"sqrt4":"1"}})"), "c"), InputError);
}

TEST(Io, EmbeddingModelFixture) {
  const std::string path = support::fixture_path("models/model.json");
  const auto file = io::embedding_model_from_json(io::read_json_file(path), path);
  EXPECT_EQ(file.model.e_dim, 2u);
  EXPECT_EQ(file.model.m_count(), 3u);
  EXPECT_EQ(file.model.n_max, 3u);
  EXPECT_EQ(file.metrics.size(), 2u);
}
