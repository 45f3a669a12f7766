#pragma once

#include "usctec/coded_multiply.hpp"
#include "usctec/division.hpp"
#include "usctec/errors.hpp"
#include "usctec/load_solver.hpp"
#include "usctec/model.hpp"
#include "usctec/placement.hpp"
#include "usctec/simulator.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace usctec::io {

using nlohmann::json;

/// Bad input document; `pointer()` is a JSON pointer to the offending field.
class ConfigError : public InputError {
public:
    ConfigError(std::string pointer, const std::string& message)
        : InputError(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

struct MatrixConfig {
    std::size_t rows = 0;
    std::size_t inner = 4;
    std::size_t columns = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> csv_a;
    std::optional<std::string> csv_b;
};

/// Full system description; see README for the schema.
struct SystemConfig {
    SystemParams params;
    SpeedDistribution distribution;
    std::uint64_t prime = PrimeField::kDefaultPrime;
    MatrixConfig matrices;
};

json parse_document(const std::string& text);

/// Rationals are strings "p/q" (also "p" or decimals); plain JSON integers are accepted.
Rational rational_at(const json& doc, const std::string& pointer);
RationalVec rationals_at(const json& doc, const std::string& pointer);

/// Throws ConfigError for structural problems. Model invariants are checked separately by make_model.
SystemConfig parse_system(const json& doc);
LoadProblem parse_load_problem(const json& doc);
DivisionProblem parse_division_problem(const json& doc);

json to_json(const Rational& r);
json to_json(std::span<const Rational> values);
json to_json(const Interval& iv);
json to_json(const IntervalSet& set);
json to_json(const LoadSolution& solution);
json to_json(const DivisionResult& result, std::size_t machines);
json to_json(const Scheme& scheme);
json to_json(const BlockAssignment& assignment, const std::vector<IndexRange>* columns);
json to_json(const PlacementResult& result);
json to_json(const SystemReport& report);
json to_json(const VerifyReport& report);

/// Integer matrix from comma-separated rows, reduced into the field.
FieldMatrix read_matrix_csv(const std::string& path, const PrimeField& field);

}  // namespace usctec::io
