#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "fspace/complexes.hpp"
#include "fspace/group_actions.hpp"
#include "fspace/homotopy.hpp"
#include "fspace/poset.hpp"
#include "fspace/subposet_sums.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace fspace {

// Text formats. All readers skip blank lines and '#' comments and raise
// FormatError with 1-based line numbers on malformed input; semantic
// problems (cycles, Def-3.1 violations, group axioms) surface as domain
// errors from the underlying constructors.
//
//   .poset  first data line n, optional "labels: a b c ...", then lines
//           "i j" (1-based) meaning x_i < x_j
//   .pm     n lines of n characters from {0,1}
//   .cplx   one facet per line, whitespace-separated vertex tokens
//   .act    one permutation per line, "name: p(1) ... p(n)" (1-based
//           images, name optional); the first must be the identity

Poset read_poset(std::istream& in, const std::string& source = "<poset>");
ZeroOneMatrix read_matrix(std::istream& in, const std::string& source = "<pm>");
SimplicialComplex read_complex(std::istream& in, const std::string& source = "<cplx>");
std::vector<Permutation> read_action(std::istream& in, const std::string& source = "<act>");

Poset load_poset_file(const std::string& path);
ZeroOneMatrix load_matrix_file(const std::string& path);
SimplicialComplex load_complex_file(const std::string& path);
std::vector<Permutation> load_action_file(const std::string& path);

// Loads a poset from either a .poset or a .pm file, keyed on the extension.
Poset load_poset_or_matrix(const std::string& path);

std::string write_poset(const Poset& p);
std::string write_matrix(const ZeroOneMatrix& m);
std::string write_complex(const SimplicialComplex& k);

// JSON views (stable, alphabetically ordered keys; every document carries
// "schema": "fspace/1").

// Exact integers render as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
nlohmann::json big_to_json(const BigInt& v);
nlohmann::json json_document(const std::string& command);
nlohmann::json to_json(const Poset& p);
nlohmann::json to_json(const ZeroOneMatrix& m);
nlohmann::json to_json(const SumProfile& s);
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const InvariantsBundle& b);
nlohmann::json to_json(const SimplicialComplex& k);
nlohmann::json to_json(const GammaTable& t);
nlohmann::json to_json(const IntPolynomial& p);

}  // namespace fspace
