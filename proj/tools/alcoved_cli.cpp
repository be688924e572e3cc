// Command-line front end over the C API.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alcoved/alcoved.h"

using nlohmann::json;

namespace {

struct Flags {
  std::string type;
  int rank = 0;
  std::string spec;
  bool json_output = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  unsigned jobs = 1;
  std::int64_t k = 0;
  std::int64_t K = 0;
  std::vector<std::int64_t> b;
  std::uint64_t limit = 0;
  std::string model = "matrix";
  std::string point;
};

int exit_code(alc_status s) {
  switch (s) {
    case ALC_OK:
      return 0;
    case ALC_INVALID:
      return 1;
    case ALC_BUDGET:
      return 3;
    default:
      return 2;
  }
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string poly_text(const json& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k].get<std::int64_t>();
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    const auto a = c < 0 ? -c : c;
    if (k == 0 || a != 1) out << a;
    if (k == 1) out << "q";
    if (k > 1) out << "q^" << k;
    first = false;
  }
  return first ? "0" : out.str();
}

void print_human(const json& j) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << key << ":\n";
      for (const auto& row : value) std::cout << "  " << row.dump() << "\n";
    } else {
      std::cout << key << ": " << scalar(value) << "\n";
    }
  }
}

// Records with one object per line in JSON mode (enumerate, stats).
void print_lines(const json& j, const std::string& list_key, bool json_mode) {
  if (json_mode) {
    for (const auto& row : j.at(list_key)) std::cout << row.dump() << "\n";
  } else {
    print_human(j);
  }
}

class Runner {
 public:
  explicit Runner(const Flags& f) : flags_(f) { alc_options_default(&options_); }
  ~Runner() {
    if (system_) alc_system_free(system_);
    if (polytope_) alc_polytope_free(polytope_);
  }

  const alc_options* options() {
    if (flags_.budget != 0) options_.budget = flags_.budget;
    options_.jobs = flags_.jobs;
    return &options_;
  }

  alc_system* system() {
    if (!system_) {
      if (flags_.type.empty() || flags_.rank <= 0) fail(ALC_INVALID, "--type and --rank are required");
      const auto s = alc_system_create(flags_.type.c_str(), flags_.rank, &system_);
      if (s != ALC_OK) fail(s, alc_last_error());
    }
    return system_;
  }

  alc_polytope* polytope() {
    if (!polytope_) {
      if (flags_.spec.empty()) fail(ALC_INVALID, "--spec is required");
      const auto s = alc_polytope_from_file(flags_.spec.c_str(), &polytope_);
      if (s != ALC_OK) fail(s, alc_last_error());
    }
    return polytope_;
  }

  // Runs a JSON-producing call and renders its output.
  int run(const std::function<alc_status(char**)>& call,
          const std::function<void(const json&)>& render = nullptr) {
    char* out = nullptr;
    const alc_status s = call(&out);
    if (out) {
      const json j = json::parse(out);
      alc_string_free(out);
      if (flags_.json_output || !render) {
        if (flags_.json_output) std::cout << j.dump() << "\n";
        else print_human(j);
      } else {
        render(j);
      }
    }
    if (s != ALC_OK) report(s, alc_last_error());
    return exit_code(s);
  }

  [[noreturn]] void fail(alc_status s, const std::string& message) {
    report(s, message);
    throw Exit{exit_code(s)};
  }

  struct Exit {
    int code;
  };

 private:
  static void report(alc_status s, const std::string& message) {
    std::string text = message;
    if (text.empty() && s == ALC_DEFECT) text = "identity violated";
    std::cerr << "alcoved: " << (s == ALC_DEFECT ? "defect: " : s == ALC_BUDGET ? "budget: " : "error: ") << text
              << "\n";
  }

  const Flags& flags_;
  alc_options options_{};
  alc_system* system_ = nullptr;
  alc_polytope* polytope_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with affine Weyl groups and alcoved polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--type", f.type, "Root system type (A-G)");
  app.add_option("--rank", f.rank, "Rank");
  app.add_option("--spec", f.spec, "Polytope spec JSON file");
  app.add_flag("--json", f.json_output, "Print JSON");
  app.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app.add_option("--budget", f.budget, "Enumeration budget (search nodes)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--k", f.k, "Hypersimplex index, or lower theta bound for thick-check");
  app.add_option("--K", f.K, "Upper theta bound for thick-check");
  app.add_option("--b", f.b, "Side lengths b_1..b_r for thick-check")->delimiter(',');
  app.add_option("--limit", f.limit, "Maximum number of elements to print");
  app.add_option("--model", f.model, "Element format: matrix or permutation")->capture_default_str();
  app.add_option("--point", f.point, "Coweight coordinates, e.g. 1/3,1/3");

  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"info", "Root system data"},
           {"enumerate", "List Weyl group elements"},
           {"stats", "Descents, cdes, delta and cmaj per element"},
           {"qweyl", "Check the q-analogue of Weyl's order formula"},
           {"double-coset", "Check cdes/cmaj behaviour on double cosets of C"},
           {"cross-table", "Joint distribution of cmaj(w) and cmaj(w^-1)"},
           {"volume", "Volume of an alcoved polytope"},
           {"vol-identity", "Compare volume with lattice points of translated polytopes"},
           {"hypersimplex", "Volumes of generalized hypersimplices"},
           {"thick-check", "Check the thick hypersimplex identity"},
           {"groebner", "Quadratic Groebner basis of a polytope"},
           {"triangulate", "Alcove triangulation from the Groebner basis"},
           {"alcove-of", "Reduce a point into the fundamental alcove"},
           {"selfcheck", "Run every identity check for a root system"}})
    sub[name] = app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Runner r(f);
  try {
    if (*sub["info"]) return r.run([&](char** o) { return alc_system_info(r.system(), o); });
    if (*sub["enumerate"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_enumerate(sys, f.limit, f.model.c_str(), o); },
                   [&](const json& j) { print_lines(j, "elements", false); });
    }
    if (*sub["stats"]) {
      auto sys = r.system();
      char* out = nullptr;
      const auto s = alc_stats(sys, f.limit, &out);
      if (out) {
        const json j = json::parse(out);
        alc_string_free(out);
        if (f.json_output) {
          print_lines(j, "elements", true);
        } else {
          std::cout << "C = " << j.at("c_group").dump() << "\n";
          std::cout << "index\tlength\tcdes\tcmaj\tdelta\tdescents\n";
          for (const auto& e : j.at("elements"))
            std::cout << e.at("index") << "\t" << e.at("length") << "\t" << e.at("cdes") << "\t" << e.at("cmaj") << "\t"
                      << e.at("delta").dump() << "\t" << e.at("descents").dump() << "\n";
        }
      }
      if (s != ALC_OK) std::cerr << "alcoved: error: " << alc_last_error() << "\n";
      return exit_code(s);
    }
    if (*sub["qweyl"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_qweyl(sys, o); },
                   [&](const json& j) {
                     std::cout << "sum_w q^cdes(w) e^cmaj(w):\n";
                     for (const auto& t : j.at("lhs")) std::cout << "  e^" << t.at("class").dump() << "  " << t.at("text").get<std::string>() << "\n";
                     std::cout << "(sum_x e^x) A_r(q) prod [a_i]_q:\n";
                     for (const auto& t : j.at("rhs")) std::cout << "  e^" << t.at("class").dump() << "  " << t.at("text").get<std::string>() << "\n";
                     std::cout << "scalar: " << j.at("scalar_text").get<std::string>() << "\n";
                     std::cout << "identity_holds: " << j.at("identity_holds") << "\n";
                   });
    }
    if (*sub["double-coset"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_double_coset(sys, o); });
    }
    if (*sub["cross-table"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_cross_table(sys, o); },
                   [&](const json& j) {
                     std::cout << "rows: cmaj(w), columns: cmaj(w^-1); C = " << j.at("c_elements").dump() << "\n";
                     for (const auto& row : j.at("entries")) {
                       for (const auto& p : row) std::cout << "  " << poly_text(p);
                       std::cout << "\n";
                     }
                     std::cout << "total_at_one: " << j.at("total_at_one") << "\n";
                     std::cout << "transpose_symmetric: " << j.at("transpose_symmetric") << "\n";
                   });
    }
    if (*sub["volume"]) {
      auto p = r.polytope();
      return r.run([&](char** o) { return alc_volume(p, r.options(), o); });
    }
    if (*sub["vol-identity"]) {
      auto p = r.polytope();
      return r.run([&](char** o) { return alc_volume_identity(p, r.options(), o); });
    }
    if (*sub["hypersimplex"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_hypersimplex(sys, f.k, r.options(), o); });
    }
    if (*sub["thick-check"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_thick_check(sys, f.b.data(), f.b.size(), f.k, f.K, r.options(), o); });
    }
    if (*sub["groebner"]) {
      auto p = r.polytope();
      return r.run([&](char** o) { return alc_groebner(p, r.options(), o); },
                   [&](const json& j) {
                     std::cout << j.at("vertices").size() << " vertices (coordinates in the basis omega_i / a_i), "
                               << j.at("count") << " binomials\n";
                     for (const auto& b : j.at("binomials"))
                       std::cout << "  x" << b.at("lead")[0].dump() << " x" << b.at("lead")[1].dump() << "  ->  x"
                                 << b.at("trail")[0].dump() << " x" << b.at("trail")[1].dump() << "\n";
                   });
    }
    if (*sub["triangulate"]) {
      auto p = r.polytope();
      return r.run([&](char** o) { return alc_triangulate(p, r.options(), o); },
                   [&](const json& j) {
                     std::cout << j.at("count") << " simplices, volume " << j.at("volume") << "\n";
                     for (const auto& s : j.at("simplices")) std::cout << "  " << s.dump() << "\n";
                   });
    }
    if (*sub["alcove-of"]) {
      auto sys = r.system();
      if (f.point.empty()) r.fail(ALC_INVALID, "--point is required");
      json coords = json::array();
      std::stringstream in(f.point);
      for (std::string part; std::getline(in, part, ',');) coords.push_back(part);
      const std::string text = coords.dump();
      return r.run([&](char** o) { return alc_alcove_of(sys, text.c_str(), o); });
    }
    if (*sub["selfcheck"]) {
      auto sys = r.system();
      return r.run([&](char** o) { return alc_selfcheck(sys, f.seed, r.options(), o); },
                   [&](const json& j) {
                     std::cout << "selfcheck " << j.at("type").get<std::string>() << j.at("rank") << " (seed "
                               << j.at("seed") << ")\n";
                     for (const auto& c : j.at("checks")) {
                       std::cout << "  " << c.at("name").get<std::string>() << ": " << c.at("status").get<std::string>();
                       if (!c.at("detail").get<std::string>().empty())
                         std::cout << "  [" << c.at("detail").get<std::string>() << "]";
                       std::cout << "\n";
                     }
                     std::cout << (j.at("all_passed").get<bool>() ? "all passed" : "FAILURES") << "\n";
                   });
    }
  } catch (const Runner::Exit& e) {
    return e.code;
  }
  return 1;
}
