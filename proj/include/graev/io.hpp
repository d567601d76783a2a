#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graev/core.hpp"
#include "graev/embedding.hpp"
#include "graev/free_seminorm.hpp"
#include "graev/graev_norm.hpp"
#include "graev/rolewicz.hpp"
#include "graev/torus.hpp"

/// JSON encodings of every file format the tools read or write. Rationals
/// are strings "n" or "p/q"; parse failures raise InputError naming the
/// source and the offending field.
namespace graev::io {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json json_argument(const std::string& text, const std::string& what);

Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& q);

PointedSpace space_from_json(const Json& j, const std::string& source);
Json to_json(const PointedSpace& space);

Word word_from_json(const Json& j, const PointedSpace& space, const std::string& source);
LinComb lincomb_from_json(const Json& j, const PointedSpace& space, const std::string& source);
Json to_json(const Word& w, const PointedSpace& space);
Json to_json(const LinComb& v, const PointedSpace& space);

Json to_json(const MatchingCertificate& cert, const PointedSpace& space);
Json to_json(const FlowCertificate& cert, const PointedSpace& space);
Json to_json(const DualWitness& witness, const PointedSpace& space);

torus::Angle angle_from_json(const Json& j, const std::string& where);
Json to_json(const torus::Angle& a);
/// An array of angles, or a single angle for a one-dimensional point.
torus::TorusPoint torus_point_from_json(const Json& j, const std::string& where);
Json to_json(const torus::TorusPoint& p);
Json to_json(const torus::NetCheckResult& r);

Json to_json(const rolewicz::OmegaTorusModel& model, const rolewicz::GeneratorCertificate& cert);
std::pair<rolewicz::OmegaTorusModel, rolewicz::GeneratorCertificate> certificate_from_json(const Json& j,
                                                                                         const std::string& source);
Json to_json(const rolewicz::ConditionReport& c);

struct EmbeddingModelFile {
  embedding::AmbientModel model;
  std::vector<embedding::EMetric> metrics;  // every metric the checks run under
};
EmbeddingModelFile embedding_model_from_json(const Json& j, const std::string& source);
Json to_json(const embedding::LatticeElement& k);
Json to_json(const embedding::TildeDistance& d);

}  // namespace graev::io
