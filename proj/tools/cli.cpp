#include "cli.hpp"

#include <ostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "abq/error.hpp"
#include "abq/fp.hpp"
#include "abq/group.hpp"
#include "abq/homology.hpp"
#include "abq/io.hpp"
#include "abq/quandle.hpp"

namespace abq::cli {

namespace {

using io::Json;
using linalg::Integer;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool serial = false;

  [[nodiscard]] bool json() const { return format == "json"; }
  [[nodiscard]] Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

char const* yes_no(bool b) { return b ? "yes" : "no"; }

// "Z^4 + Z/2 + Z/2", or "0" for the trivial group.
std::string describe(std::size_t free_rank, std::vector<Integer> const& torsion) {
  std::string s;
  auto add = [&s](std::string const& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  for (auto const& t : torsion) add("Z/" + t.get_str());
  return s.empty() ? "0" : s;
}

std::string describe(linalg::AbelianGroupSpec const& g) {
  return describe(g.free_rank(), g.torsion());
}

void emit(std::ostream& out, Json const& j) { out << j.dump() << '\n'; }

QuandleTable load_quandle(std::string const& path) {
  return io::quandle_from_json(io::read_json_file(path));
}

int cmd_check(Options const& opt, std::string const& path, std::ostream& out) {
  auto const doc = io::read_json_file(path);
  QuandleTable q;
  try {
    q = io::quandle_from_json(doc);
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    if (opt.json()) {
      Json j;
      j["valid"] = false;
      j["error"] = io::error_to_json(e);
      emit(out, j);
    } else {
      out << "valid: no\n" << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    }
    return kInvalid;
  }
  auto const od = orbit_decomposition(q);
  auto const sizes = od.sizes();
  bool const abelian = is_abelian(q);
  bool const reductive = is_two_reductive(q);
  if (opt.json()) {
    Json j;
    j["valid"] = true;
    j["size"] = q.size();
    j["r"] = od.count();
    j["orbit_sizes"] = sizes;
    j["abelian"] = abelian;
    j["two_reductive"] = reductive;
    emit(out, j);
  } else {
    out << "valid: yes\nsize: " << q.size() << "\norbits: " << od.count() << " (sizes";
    for (auto s : sizes) out << ' ' << s;
    out << ")\nabelian: " << yes_no(abelian) << "\n2-reductive: " << yes_no(reductive) << '\n';
  }
  return kOk;
}

int cmd_params(Options const& opt, std::string const& path, bool canonical, std::ostream& out) {
  auto const q = load_quandle(path);
  auto const p = canonical ? canonical_parameters(q) : extract_parameters(q);
  if (opt.json()) {
    emit(out, io::params_to_json(p));
  } else {
    out << to_string(p) << '\n';
  }
  return kOk;
}

int cmd_group(Options const& opt, std::string const& path, std::ostream& out) {
  auto const q = load_quandle(path);
  auto const cert = structure_group_is_free_abelian(q, opt.exec());
  std::size_t const r = cert.parameters ? cert.parameters->r : orbit_decomposition(q).count();
  if (opt.json()) {
    emit(out, io::group_report(cert, r));
    return kOk;
  }
  out << "abelian quandle: " << yes_no(cert.abelian_quandle) << "\norbits: " << r << '\n';
  if (cert.parameter_group) out << "parameter group: " << describe(*cert.parameter_group) << '\n';
  out << "structure group free abelian: " << yes_no(cert.free_abelian) << '\n';
  if (cert.minors_gcd) out << "maximal minors gcd: " << cert.minors_gcd->get_str() << '\n';
  if (cert.z3) {
    out << "three-orbit conditions:";
    for (bool c : cert.z3->conditions) out << ' ' << (c ? 1 : 0);
    out << '\n';
  }
  if (cert.by_diagonal) out << "diagonal criterion: " << yes_no(*cert.by_diagonal) << '\n';
  return kOk;
}

int cmd_homology(Options const& opt, std::string const& path, std::ostream& out) {
  auto const q = load_quandle(path);
  auto const h2 = homology_h2(q, opt.exec());
  auto const h1 = homology_h1(q, opt.exec());
  if (opt.json()) {
    emit(out, io::homology_report(h2, h1));
    return kOk;
  }
  out << "H1 = " << describe(h1) << "\nH2 = " << describe(h2.total_free_rank, h2.total_torsion)
      << '\n';
  for (std::size_t i = 0; i < h2.per_orbit.size(); ++i) {
    out << "  orbit " << i << ": "
        << describe(h2.per_orbit[i].free_rank, h2.per_orbit[i].torsion) << '\n';
  }
  return kOk;
}

int cmd_isomorphic(Options const& opt, std::string const& a, std::string const& b,
                   std::ostream& out) {
  auto const q = load_quandle(a);
  auto const p = load_quandle(b);
  bool iso = false;
  std::string method;
  std::optional<std::vector<Element>> map;
  bool const qa = is_abelian(q);
  bool const pa = is_abelian(p);
  if (q.size() != p.size()) {
    method = "size";
  } else if (qa != pa) {
    method = "abelian";
  } else if (qa) {
    method = "canonical_parameters";
    iso = canonical_parameters(q) == canonical_parameters(p);
  } else {
    method = "search";
    map = find_isomorphism(q, p);
    iso = map.has_value();
  }
  if (opt.json()) {
    Json j;
    j["isomorphic"] = iso;
    j["method"] = method;
    if (map) j["map"] = *map;
    emit(out, j);
  } else {
    out << "isomorphic: " << yes_no(iso) << " (" << method << ")\n";
  }
  return kOk;
}

int cmd_enumerate(Options const& opt, std::size_t size, bool abelian,
                  std::optional<std::size_t> orbits, bool labelled, std::ostream& out) {
  Json items = Json::array();
  if (abelian) {
    for (auto const& p : enumerate_abelian_quandles(size, orbits, opt.exec()))
      items.push_back(io::params_to_json(p));
  } else {
    for (auto const& q : enumerate_quandles(size, !labelled, opt.exec())) {
      if (orbits && orbit_decomposition(q).count() != *orbits) continue;
      items.push_back(io::quandle_to_json(q));
    }
  }
  if (opt.json()) {
    Json j;
    j["size"] = size;
    j["abelian"] = abelian;
    j["orbits"] = orbits ? Json(*orbits) : Json(nullptr);
    j["up_to_isomorphism"] = abelian || !labelled;
    j["count"] = items.size();
    j["items"] = std::move(items);
    emit(out, j);
  } else {
    out << "count: " << items.size() << '\n';
    for (auto const& it : items) out << it.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite abelian quandles: parameters, structure groups and homology", "abq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Accepted for scripting; no command is randomised");
  app.add_flag("--serial", opt.serial, "Use the serial reference kernels");

  std::string file;
  std::string file2;
  std::vector<std::int64_t> nums;
  bool canonical = false;
  bool abelian = false;
  bool labelled = false;
  std::size_t size = 0;
  std::optional<std::size_t> orbits;

  auto* check = app.add_subcommand("check", "Validate a quandle table");
  check->add_option("file", file)->required();

  auto* build = app.add_subcommand("build", "Emit the quandle JSON of a family or parameter file");
  build->require_subcommand(1);
  auto* b_fp = build->add_subcommand("fp", "FP quandle of a parameters file");
  b_fp->add_option("file", file)->required();
  std::map<std::string, CLI::App*> two_arg;
  for (auto const* name : {"u", "ustar", "ustarstar"}) {
    auto* s = build->add_subcommand(name, std::string("Family ") + name + " M N");
    s->add_option("m_n", nums, "M N")->required()->expected(2);
    two_arg[name] = s;
  }
  auto* b_graphic = build->add_subcommand("graphic", "Graphic quandle with orbit sizes N...");
  b_graphic->add_option("sizes", nums)->required()->expected(2, 64);
  auto* b_trivial = build->add_subcommand("trivial", "Trivial quandle on N elements");
  b_trivial->add_option("n", size)->required();

  auto* params = app.add_subcommand("params", "Extract FP parameters");
  params->add_option("file", file)->required();
  params->add_flag("--canonical", canonical, "Minimise over orbit orderings");

  auto* group = app.add_subcommand("group", "Parameter group and free-abelian criteria");
  group->add_option("file", file)->required();

  auto* homology = app.add_subcommand("homology", "H1 and H2 with per-orbit slices");
  homology->add_option("file", file)->required();

  auto* isomorphic = app.add_subcommand("isomorphic", "Decide isomorphism of two quandles");
  isomorphic->add_option("first", file)->required();
  isomorphic->add_option("second", file2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List quandles of a given size");
  enumerate->add_option("--size", size)->required();
  enumerate->add_flag("--abelian", abelian, "Abelian quandles via canonical parameters");
  enumerate->add_option("--orbits", orbits, "Keep only quandles with this many orbits");
  enumerate->add_flag("--labelled", labelled, "Every table rather than one per class");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (check->parsed()) return cmd_check(opt, file, out);
    if (build->parsed()) {
      QuandleTable q;
      if (b_fp->parsed()) {
        q = build_fp_quandle(io::params_from_json(io::read_json_file(file)));
      } else if (two_arg["u"]->parsed()) {
        q = family_u(nums[0], nums[1]);
      } else if (two_arg["ustar"]->parsed()) {
        q = family_u_star(nums[0], nums[1]);
      } else if (two_arg["ustarstar"]->parsed()) {
        q = family_u_starstar(nums[0], nums[1]);
      } else if (b_graphic->parsed()) {
        q = family_graphic(nums);
      } else {
        q = trivial_quandle(size);
      }
      // The quandle JSON is both the machine and the human form.
      emit(out, io::quandle_to_json(q));
      return kOk;
    }
    if (params->parsed()) return cmd_params(opt, file, canonical, out);
    if (group->parsed()) return cmd_group(opt, file, out);
    if (homology->parsed()) return cmd_homology(opt, file, out);
    if (isomorphic->parsed()) return cmd_isomorphic(opt, file, file2, out);
    return cmd_enumerate(opt, size, abelian, orbits, labelled, out);
  } catch (io::IoError const& e) {
    err << "abq: " << e.what() << '\n';
    return kIoFailure;
  } catch (Error const& e) {
    err << "abq: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (opt.json()) {
      Json j;
      j["error"] = io::error_to_json(e);
      emit(out, j);
    }
    return kInvalid;
  }
}

}  // namespace abq::cli
