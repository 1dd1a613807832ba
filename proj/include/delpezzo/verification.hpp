#pragma once

// Named verification claims, each an (expected, actual) pair. The CLI's
// `report` command runs all of them; other commands run the relevant subset.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "delpezzo/tame_symbol.hpp"

namespace delpezzo {

struct Claim {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    bool pass = false;
};

Claim make_claim(std::string name, nlohmann::json expected, nlohmann::json actual);

// Number of (-1)-curves per degree: 9 -> 0, 8 -> 1, ..., 1 -> 240.
std::size_t expected_neg_one_count(int degree);

std::vector<int> all_degrees();  // 1..9

std::vector<Claim> count_table_claims(const std::vector<int>& degrees);
std::vector<Claim> census_claims(const std::vector<int>& degrees);
std::vector<Claim> branch_lemma_claims(const std::vector<int>& degrees);
std::vector<Claim> incidence_claims(const std::vector<int>& degrees);
std::vector<Claim> candidate_pair_claims(const std::vector<int>& degrees);
std::vector<Claim> bitangent_claims();
std::vector<Claim> double_six_claims();
std::vector<Claim> boundary_claims();
std::vector<Claim> xi_cocycle_claims(const std::vector<int>& degrees);
std::vector<Claim> tame_cocycle_claims(std::size_t trials, std::uint64_t seed);
std::vector<Claim> weyl_closure_claims(const std::vector<int>& degrees);
std::vector<Claim> rational_count_claims(long max_degree);

// Everything above across degrees 1..9.
std::vector<Claim> full_report();

// A random pair (f, g) of degree-0 products of integer linear forms whose
// support lines are in general position.
std::pair<LinearFormFunction, LinearFormFunction> random_tame_configuration(std::mt19937_64& rng);

}  // namespace delpezzo
