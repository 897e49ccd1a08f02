#pragma once

#include <string>

#include <json.hpp>

#include "abq/error.hpp"
#include "abq/fp.hpp"
#include "abq/group.hpp"
#include "abq/homology.hpp"
#include "abq/linalg.hpp"
#include "abq/quandle.hpp"

namespace abq::io {

// Key order is insertion order so that output bytes are stable.
using Json = nlohmann::ordered_json;

// Integers are numbers below 2^53 in magnitude and decimal strings beyond.
Json integer(linalg::Integer const& v);
Json integer(std::int64_t v);
// Accepts either representation; ParseError otherwise.
linalg::Integer parse_integer(Json const& j);
std::int64_t parse_int64(Json const& j);

// Matrices are always arrays of rows of decimal strings.
Json matrix(linalg::IntMatrix const& m);
linalg::IntMatrix parse_matrix(Json const& j);

Json integers(std::vector<linalg::Integer> const& v);

// {"size": n, "table": [[...]]} plus "labels" when present.
Json quandle_to_json(QuandleTable const& q);
// Shape and axiom failures surface as the usual validation errors;
// structural JSON problems as ParseError.
QuandleTable quandle_from_json(Json const& j);

// {"r": r, "collections": [[[m11], [m21, m22], ...], ...]}
Json params_to_json(FpParameters const& p);
FpParameters params_from_json(Json const& j);

Json error_to_json(Error const& e);

// Payload of the `group` command.
Json group_report(FreeAbelianCertificate const& cert, std::size_t r);
// Payload of the `homology` command.
Json homology_report(Homology2Result const& h2, linalg::AbelianGroupSpec const& h1);

// Reads and parses a JSON file; unreadable files throw IoError, bad JSON
// throws Error(ParseError).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Json read_json_file(std::string const& path);

}  // namespace abq::io
