#include <fstream>
#include <sstream>

#include "abq/io.hpp"

namespace abq::io {

namespace {

constexpr std::int64_t kExactLimit = std::int64_t{1} << 53;

[[noreturn]] void parse_fail(std::string const& what) {
  throw Error(ErrorKind::ParseError, what);
}

Json const& field(Json const& j, char const* key) {
  if (!j.is_object()) parse_fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

Json integer(linalg::Integer const& v) {
  if (v.fits_slong_p()) return integer(static_cast<std::int64_t>(v.get_si()));
  return v.get_str();
}

Json integer(std::int64_t v) {
  if (v > -kExactLimit && v < kExactLimit) return v;
  return std::to_string(v);
}

linalg::Integer parse_integer(Json const& j) {
  if (j.is_number_integer()) return linalg::Integer(j.get<long>());
  if (j.is_string()) {
    linalg::Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      parse_fail("not a decimal integer: \"" + j.get<std::string>() + "\"");
    }
    return v;
  }
  parse_fail("expected an integer, got " + j.dump());
}

std::int64_t parse_int64(Json const& j) {
  auto const v = parse_integer(j);
  if (!v.fits_slong_p()) parse_fail("integer out of range: " + v.get_str());
  return v.get_si();
}

Json matrix(linalg::IntMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

linalg::IntMatrix parse_matrix(Json const& j) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  if (j.empty()) return {};
  std::size_t const cols = j[0].is_array() ? j[0].size() : 0;
  linalg::IntMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) parse_fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_integer(j[r][c]);
  }
  return m;
}

Json integers(std::vector<linalg::Integer> const& v) {
  Json out = Json::array();
  for (auto const& x : v) out.push_back(integer(x));
  return out;
}

Json quandle_to_json(QuandleTable const& q) {
  Json j;
  j["size"] = q.size();
  Json rows = Json::array();
  for (auto const& row : q.rows()) rows.push_back(row);
  j["table"] = std::move(rows);
  if (!q.labels().empty()) j["labels"] = q.labels();
  return j;
}

QuandleTable quandle_from_json(Json const& j) {
  auto const size = parse_int64(field(j, "size"));
  auto const& table = field(j, "table");
  if (!table.is_array()) parse_fail("\"table\" must be an array of rows");
  std::vector<std::vector<std::int64_t>> raw;
  for (auto const& row : table) {
    if (!row.is_array()) parse_fail("\"table\" rows must be arrays");
    std::vector<std::int64_t> r;
    for (auto const& v : row) r.push_back(parse_int64(v));
    raw.push_back(std::move(r));
  }
  if (size < 0 || static_cast<std::size_t>(size) != raw.size()) {
    throw Error(ErrorKind::InvalidShape,
                "\"size\" is " + std::to_string(size) + " but the table has " +
                    std::to_string(raw.size()) + " rows",
                {size});
  }
  auto q = validate_table(raw);
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) parse_fail("\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    for (auto const& l : *it) {
      if (!l.is_string()) parse_fail("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    q.set_labels(std::move(labels));
  }
  return q;
}

Json params_to_json(FpParameters const& p) {
  Json j;
  j["r"] = p.r;
  Json cols = Json::array();
  for (auto const& c : p.collections) {
    Json rows = Json::array();
    for (auto const& row : c.m) {
      Json jr = Json::array();
      for (auto v : row) jr.push_back(integer(v));
      rows.push_back(std::move(jr));
    }
    cols.push_back(std::move(rows));
  }
  j["collections"] = std::move(cols);
  return j;
}

FpParameters params_from_json(Json const& j) {
  auto const r = parse_int64(field(j, "r"));
  if (r < 1) throw Error(ErrorKind::InvalidParameters, "\"r\" must be positive", {r});
  auto const& cols = field(j, "collections");
  if (!cols.is_array()) parse_fail("\"collections\" must be an array");
  FpParameters p;
  p.r = static_cast<std::size_t>(r);
  for (auto const& c : cols) {
    if (!c.is_array()) parse_fail("each collection must be an array of rows");
    ParamCollection M;
    M.r = p.r;
    for (auto const& row : c) {
      if (!row.is_array()) parse_fail("collection rows must be arrays");
      std::vector<std::int64_t> v;
      for (auto const& x : row) v.push_back(parse_int64(x));
      M.m.push_back(std::move(v));
    }
    p.collections.push_back(std::move(M));
  }
  p.validate();
  return p;
}

Json error_to_json(Error const& e) {
  Json j;
  j["kind"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  Json w = Json::array();
  for (auto v : e.witness()) w.push_back(integer(v));
  j["witness"] = std::move(w);
  return j;
}

Json group_report(FreeAbelianCertificate const& cert, std::size_t r) {
  Json j;
  j["abelian_quandle"] = cert.abelian_quandle;
  j["r"] = r;
  j["parameter_group"] =
      cert.parameter_group ? integers(cert.parameter_group->invariant_factors) : Json(nullptr);
  j["structure_group_free_abelian"] = cert.free_abelian;

  Json crit = Json::object();
  auto opt = [](std::optional<bool> const& b) { return b ? Json(*b) : Json(nullptr); };
  crit["parameter_group_trivial"] = opt(cert.by_parameter_group);
  crit["maximal_minors_gcd"] = cert.minors_gcd ? integer(*cert.minors_gcd) : Json(nullptr);
  crit["minors_coprime"] = opt(cert.by_minors);
  if (cert.z3) {
    Json z;
    z["result"] = cert.z3->result;
    z["conditions"] = cert.z3->conditions;
    z["delta"] = integer(cert.z3->delta);
    Json vars = Json::object();
    auto const& table = z3_variable_table();
    for (std::size_t k = 0; k < table.size(); ++k) {
      Json v;
      v["parameter"] = table[k].second;
      v["value"] = integer(cert.z3->values[k]);
      vars[table[k].first] = std::move(v);
    }
    z["variables"] = std::move(vars);
    crit["three_orbit"] = std::move(z);
  } else {
    crit["three_orbit"] = nullptr;
  }
  crit["diagonal"] = opt(cert.by_diagonal);
  j["criteria"] = std::move(crit);
  j["parameter_matrix"] = cert.matrix ? matrix(cert.matrix->matrix) : Json(nullptr);
  return j;
}

Json homology_report(Homology2Result const& h2, linalg::AbelianGroupSpec const& h1) {
  Json j;
  j["h1_rank"] = h1.free_rank();
  Json h;
  h["free_rank"] = h2.total_free_rank;
  h["torsion"] = integers(h2.total_torsion);
  Json per = Json::array();
  for (auto const& o : h2.per_orbit) {
    Json e;
    e["free_rank"] = o.free_rank;
    e["torsion"] = integers(o.torsion);
    per.push_back(std::move(e));
  }
  h["per_orbit"] = std::move(per);
  j["h2"] = std::move(h);
  return j;
}

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  try {
    return Json::parse(buf.str());
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

}  // namespace abq::io
