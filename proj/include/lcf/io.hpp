#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lcf/classical.hpp"
#include "lcf/complexes.hpp"
#include "lcf/embedding.hpp"
#include "lcf/f2.hpp"
#include "lcf/generalized.hpp"
#include "lcf/products.hpp"
#include "lcf/rational.hpp"
#include "lcf/subdivision.hpp"

namespace lcf {

using json = nlohmann::json;

inline constexpr const char* kFormat = "lcf/1";

// Malformed input: bad JSON text, wrong field types, or values that fail validation.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses text; on syntax errors the message carries "line L, column C".
json parse_json(const std::string& text, const std::string& source = "<input>");
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);  // "-" is stdout

// {"format": "lcf/1", "type": type, ...body}
json document(const std::string& type, json body);
// Checks format and type; returns the document unchanged.
const json& expect_document(const json& doc, const std::string& type);
std::string document_type(const json& doc);

json to_json(const BitVector& v);  // support list
BitVector bitvector_from_json(const json& j, std::size_t n);

json to_json(const SparseBitMatrix& m);
SparseBitMatrix matrix_from_json(const json& j);

json to_json(const Rational& r);  // "p/q" string
Rational rational_from_json(const json& j);

json to_json(const ChainComplex3& x);
ChainComplex3 chain_complex_from_json(const json& j);

json to_json(const ClassicalCode& c);
ClassicalCode classical_code_from_json(const json& j);

json to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);  // {"order","mul"}, {"cyclic": n} or {"dihedral": n}

json to_json(const SquareComplex& s);
SquareComplex square_complex_from_json(const json& j);

// Stores the base and L; the vertex table and X_L are written out in full. Reading rebuilds
// the pieces from the base and keeps the stored X_L as found.
json to_json(const SubdividedComplex& s);
SubdividedComplex subdivided_from_json(const json& j);

json to_json(const BoundaryComplex& y);
BoundaryComplex boundary_complex_from_json(const json& j);

json to_json(const BoundaryGraph& g);
BoundaryGraph boundary_graph_from_json(const json& j);

// Points keyed by vertex id; edges are appended when given so a and b can be recomputed.
json to_json(const LatticeEmbedding& e, const EdgeList* edges = nullptr);
LatticeEmbedding embedding_from_json(const json& j, EdgeList* edges = nullptr);

json to_json(const CodeReport& r);
CodeReport code_report_from_json(const json& j);

struct RunConfig {
    std::string command;
    std::string input;
    std::string output = "-";
    std::optional<std::size_t> L;
    std::optional<std::size_t> D;
    std::uint64_t seed = 1;
    std::optional<std::size_t> guard_n;
    bool force = false;
    std::optional<Rational> alpha, beta, gamma;
    std::optional<Rational> eta;     // boundary expansion
    std::optional<Rational> C, Cb;   // functional inequalities
    bool sweep = false;
    std::string what;
    std::optional<std::size_t> level;
    std::optional<std::size_t> r;       // bpt
    std::optional<std::size_t> copies;  // stack
    std::optional<std::size_t> samples; // sampled expansion check
    std::string side = "coboundary";
    std::string csv;

    [[nodiscard]] Guards guards() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

json to_json(const RunConfig& c);
RunConfig run_config_from_json(const json& j);

}  // namespace lcf
