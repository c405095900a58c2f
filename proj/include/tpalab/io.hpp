#pragma once

#include "tpalab/catalog.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tpalab {

using json = nlohmann::json;

// malformed input; message carries the position (line/column or JSON path)
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json algebra_to_json(const AlgebraTable& t);
AlgebraTable algebra_from_json(const json& j);
AlgebraTable parse_algebra(const std::string& text);
AlgebraTable load_algebra(const std::string& path);
void save_json(const json& j, const std::string& path);

json residuals_to_json(const ResidualList& r);
json derivation_space_to_json(const DerivationSpace& s);
json verification_to_json(const VerificationReport& r, const AlgebraTable& bracket, const CommutativeProduct& product);

json params_to_json(const Params& p);
Params params_from_json(const json& j);

// every family at default parameters with its TP variants, each product on its branch
json catalog_json(size_t n_s = 5, size_t n_r = 3);

}  // namespace tpalab
