#pragma once

// JSON encodings of the library's inputs and outputs.
//
//   scalar      "3/5", "-1/2+2i", or an integer
//   matrix      [[scalar, ...], ...]           (rows)
//   algebra     {"blocks": [2, 3]}             (or just [2, 3])
//   element     [matrix, ...]                  (one per block)
//   hom         {"multiplicity": [[...]], "unital": true,
//                "codomain": algebra?, "assignment": [[[block, copy], ...], ...]?}
//   spec        {"depth": 1, "rotation_depth": 1, "transpositions": true,
//                "pythagorean": true, "rotations": [element, ...]}
//   ab diagram  {"variance": "covariant"?, "nodes": [{"id", "generators", "relations"?}],
//                "edges": [{"id", "source", "target", "images"}]}
//   lattice diagram
//               {"variance": ...?, "nodes": [{"id", "elements", "order"} | {"id", "powerset"}],
//                "edges": [{"id", "source", "target", "map"}]}
//
// Parse errors throw ValidationError naming the offending location.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncspectrum/abelian.hpp"
#include "ncspectrum/semilattice.hpp"
#include "ncspectrum/subdiagram.hpp"

namespace ncs::io {

using json = nlohmann::json;

class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& where, const std::string& what)
        : std::invalid_argument(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
json load(const std::string& text_or_path, const std::string& where);

GaussianRational scalar_from_json(const json& j, const std::string& where);
json to_json(const GaussianRational& x);

ExactMatrix matrix_from_json(const json& j, const std::string& where);
json to_json(const ExactMatrix& m);

IntegerMatrix integer_matrix_from_json(const json& j, const std::string& where, std::size_t cols_if_empty = 0);
json to_json(const IntegerMatrix& m);
json to_json(const Word& w);

MultiMatrixAlgebra algebra_from_json(const json& j, const std::string& where);
json to_json(const MultiMatrixAlgebra& a);

AlgebraElement element_from_json(const MultiMatrixAlgebra& a, const json& j, const std::string& where);
json to_json(const AlgebraElement& x);

StarHom hom_from_json(const MultiMatrixAlgebra& domain, const json& j, const std::string& where);
json to_json(const StarHom& phi);

SubdiagramSpec spec_from_json(const MultiMatrixAlgebra& a, const json& j, const std::string& where);

AbDiagram ab_diagram_from_json(const json& j, const std::string& where);
LatticeDiagram lattice_diagram_from_json(const json& j, const std::string& where);

json to_json(const InvariantFactors& f);
/// Group string, invariant factors and canonical coordinate orders.
json group_json(const PresentedAbGroup& g);

}  // namespace ncs::io
