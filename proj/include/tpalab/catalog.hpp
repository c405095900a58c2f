#pragma once

#include "tpalab/tpa.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tpalab {

enum class Family { n_n1, Q_2n, s1, s2, s3, s4, s_n2, r_lambda, r_eps, r_lambdas, r_2n2 };

using Params = std::map<std::string, Rational>;

std::string to_string(Family f);
Family parse_family(const std::string& s);  // throws listing valid names
std::vector<Family> all_families();
// Q_2n and the r families (dimension 2n nilradical); the rest sit over n_{n,1}
bool has_Q_nilradical(Family f);

struct FamilySpec {
    Family family;
    size_t n;
    Params params;
};

struct TPSpec {
    FamilySpec family;
    std::string variant;
    Params params;
};

struct TPVariantInfo {
    std::string key;
    std::vector<std::string> params;
    std::string branch;  // condition on the algebra parameters, human readable
    bool disputed = false;
    bool corrected = false;  // engine-corrected form of a printed table
    std::string note;
};

struct CatalogEntry {
    Family family;
    std::string description;
    std::vector<std::string> param_schema;
    std::vector<TPVariantInfo> variants;  // for the given n
};

// algebra parameter names for (family, n)
std::vector<std::string> param_names(Family f, size_t n);
Params default_params(Family f, size_t n);
void validate(const FamilySpec& spec);  // throws naming the violated constraint

AlgebraTable make_algebra(const FamilySpec& spec);
std::vector<std::string> basis_names(Family f, size_t n);

// TP variants of the theorem that applies at (family, n); includes all branches
std::vector<TPVariantInfo> tp_variants(Family f, size_t n);
TPVariantInfo tp_variant(Family f, size_t n, const std::string& key);
// whether the algebra parameters lie on the variant's branch
bool on_branch(const FamilySpec& spec, const std::string& key);
// algebra parameters placing the family on the variant's branch (defaults elsewhere)
Params branch_params(Family f, size_t n, const std::string& key);
CommutativeProduct make_tp_product(const TPSpec& spec);

std::vector<CatalogEntry> list_catalog(size_t n_s = 5, size_t n_r = 3);

std::optional<size_t> expected_halfderivation_dim(const FamilySpec& spec);
std::optional<size_t> expected_tpa_space_dim(const FamilySpec& spec);

// parameter values used for "generic" sampling and the special values per family
std::vector<Rational> generic_values(Family f, size_t n);
std::vector<Rational> special_values(Family f, size_t n);

// Normalizations of the TP tables. Raw products carry the unnormalized parameters
// (alpha, beta[, gamma]) before the change of basis.
CommutativeProduct raw_product(const FamilySpec& spec, const Params& raw);
LinearMap normalization_map(const TPSpec& target, const Params& raw);

struct NormalizationCase {
    std::string label;
    TPSpec target;
    Params raw;
};
std::vector<NormalizationCase> normalization_cases(size_t n);

std::string params_to_string(const Params& p);

// nonzero numerator in [-5,5], denominator in [1,3]
Rational random_rational(std::mt19937_64& rng);
// algebra parameter sets covering generic draws and every special value
std::vector<Params> parameter_grid(Family f, size_t n, std::mt19937_64& rng);
Params random_tp_params(const TPVariantInfo& v, std::mt19937_64& rng);

}  // namespace tpalab
