#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "abq/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> const& args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = abq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

abq::io::Json json_of(Run const& r) { return abq::io::Json::parse(r.out); }

class Workdir {
 public:
  Workdir() : path_(fs::temp_directory_path() / ("abq_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }

  std::string write(std::string const& name, std::string const& text) const {
    auto const p = (path_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  [[nodiscard]] std::string file(std::string const& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build and check") {
  Workdir w;
  auto const b = run({"build", "u", "2", "3"});
  REQUIRE(b.code == 0);
  auto const table = json_of(b);
  CHECK(table["size"] == 5);
  CHECK(table["table"].size() == 5);
  auto const f = w.write("u23.json", b.out);

  auto const c = run({"--format", "json", "check", f});
  CHECK(c.code == 0);
  auto const report = json_of(c);
  CHECK(report["valid"] == true);
  CHECK(report["r"] == 2);
  CHECK(report["abelian"] == true);
  CHECK(report["two_reductive"] == true);

  auto const text = run({"check", f});
  CHECK(text.out.find("abelian: yes") != std::string::npos);

  auto const one = run({"--format", "json", "check", w.write("one.json", R"({"size":1,"table":[[0]]})")});
  CHECK(one.code == 0);
  CHECK(json_of(one)["r"] == 1);

  auto const triv = json_of(run({"build", "trivial", "4"}));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t bb = 0; bb < 4; ++bb) CHECK(triv["table"][a][bb] == a);
}

TEST_CASE("check reports the first violation") {
  Workdir w;
  auto const f = w.write("bad.json", R"({"size":3,"table":[[0,0,0],[1,1,1],[2,1,2]]})");
  auto const r = run({"--format", "json", "check", f});
  CHECK(r.code == 1);
  auto const j = json_of(r);
  CHECK(j["valid"] == false);
  CHECK(j["error"]["kind"] == "NotAPermutation");
  CHECK(j["error"]["witness"] == abq::io::Json::array({1}));
}

TEST_CASE("exit codes") {
  Workdir w;
  CHECK(run({"check", w.file("missing.json")}).code == 2);
  CHECK(run({"check", w.write("broken.json", "{")}).code == 1);
  CHECK(run({"check", w.write("shape.json", R"({"size":2})")}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"build", "u", "2"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  auto const big = run({"build", "u", "4096", "1"});
  CHECK(big.code == 1);
  CHECK(big.err.find("SizeTooLarge") != std::string::npos);
}

TEST_CASE("group") {
  Workdir w;
  auto const f = w.write("u24.json", run({"build", "u", "2", "4"}).out);
  auto const j = json_of(run({"--format", "json", "group", f}));
  CHECK(j["abelian_quandle"] == true);
  CHECK(j["r"] == 2);
  CHECK(j["parameter_group"] == abq::io::Json::array({2}));
  CHECK(j["structure_group_free_abelian"] == false);
  CHECK(j["parameter_matrix"] == abq::io::Json::parse(R"([["2"],["-4"]])"));
  std::vector<std::string> keys;
  for (auto const& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"abelian_quandle", "r", "parameter_group",
                                         "structure_group_free_abelian", "criteria",
                                         "parameter_matrix"});

  auto const g3 = w.write("g.json", run({"build", "graphic", "2", "4", "2"}).out);
  auto const z = json_of(run({"--format", "json", "group", g3}))["criteria"]["three_orbit"];
  CHECK(z["result"] == false);
  CHECK(z["variables"]["w"]["parameter"] == "-m(2)_2");
}

TEST_CASE("homology") {
  Workdir w;
  auto const f = w.write("us.json", run({"build", "ustarstar", "2", "2"}).out);
  auto const j = json_of(run({"--format", "json", "homology", f}));
  CHECK(j["h1_rank"] == 3);
  CHECK(j["h2"]["free_rank"] == 9);
  CHECK(j["h2"]["torsion"] == abq::io::Json::array({2, 2, 2}));
  CHECK(j["h2"]["per_orbit"].size() == 3);
  CHECK(j["h2"]["per_orbit"][0]["free_rank"] == 3);
}

TEST_CASE("params round trip and isomorphism") {
  Workdir w;
  auto const g = w.write("g.json", run({"build", "graphic", "2", "4", "2"}).out);
  auto const p = w.write("p.json", run({"--format", "json", "params", "--canonical", g}).out);
  auto const first = run({"build", "fp", p});
  REQUIRE(first.code == 0);
  auto const fp1 = w.write("fp1.json", first.out);
  auto const p2 = w.write("p2.json", run({"--format", "json", "params", fp1}).out);
  CHECK(run({"build", "fp", p2}).out == first.out);

  auto const a = w.write("u23.json", run({"build", "u", "2", "3"}).out);
  auto const u32 = abq::family_u(3, 2);
  auto const relabelled = abq::relabel(u32, {4, 0, 3, 1, 2});
  auto const b = w.write("u32.json", abq::io::quandle_to_json(relabelled).dump());
  auto const iso = json_of(run({"--format", "json", "isomorphic", a, b}));
  CHECK(iso["isomorphic"] == true);
  CHECK(iso["method"] == "canonical_parameters");

  auto const c = w.write("u24.json", run({"build", "u", "2", "4"}).out);
  CHECK(json_of(run({"--format", "json", "isomorphic", a, c}))["isomorphic"] == false);

  auto const d3 = w.write("d3.json", R"({"size":3,"table":[[0,2,1],[2,1,0],[1,0,2]]})");
  auto const d3b = w.write("d3b.json", R"({"size":3,"table":[[0,1,2],[2,1,0],[1,0,2]]})");
  auto const s = run({"--format", "json", "isomorphic", d3, d3});
  CHECK(json_of(s)["method"] == "search");
  CHECK(json_of(s)["isomorphic"] == true);
  CHECK(run({"isomorphic", d3, d3b}).code == 1);
}

TEST_CASE("enumerate") {
  auto const ab = json_of(run({"--format", "json", "enumerate", "--size", "4", "--abelian"}));
  std::size_t brute = 0;
  for (auto const& q : abq::enumerate_quandles(4, true))
    if (abq::is_abelian(q)) ++brute;
  CHECK(ab["count"] == brute);
  auto const all = json_of(run({"--format", "json", "enumerate", "--size", "4"}));
  CHECK(all["count"] == 7);
  auto const two = json_of(run({"--format", "json", "enumerate", "--size", "4", "--orbits", "2"}));
  CHECK(two["count"].get<int>() < 7);
  CHECK(run({"enumerate", "--size", "9"}).code == 1);
}

TEST_CASE("output is deterministic") {
  Workdir w;
  auto const f = w.write("g.json", run({"build", "graphic", "2", "2", "2"}).out);
  for (auto const& cmd : std::vector<std::vector<std::string>>{
           {"--format", "json", "homology", f},
           {"--format", "json", "group", f},
           {"homology", f},
           {"--format", "json", "enumerate", "--size", "5", "--abelian"}}) {
    auto const a = run(cmd);
    auto const b = run(cmd);
    CHECK(a.out == b.out);
    auto serial = cmd;
    serial.insert(serial.begin(), "--serial");
    CHECK(run(serial).out == a.out);
  }
}

TEST_CASE("integer encoding") {
  using abq::io::integer;
  CHECK(integer(std::int64_t{42}) == 42);
  CHECK(integer(std::int64_t{1} << 53) == "9007199254740992");
  CHECK(integer(abq::linalg::Integer("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(abq::io::parse_integer(abq::io::Json("-77")) == -77);
  CHECK_THROWS_AS(abq::io::parse_integer(abq::io::Json("x1")), abq::Error);
  abq::linalg::IntMatrix const m{{1, -2}, {3, 4}};
  CHECK(abq::io::parse_matrix(abq::io::matrix(m)) == m);
}

}  // TEST_SUITE
