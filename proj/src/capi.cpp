#include "alcoved/alcoved.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "geometry.hpp"
#include "groebner.hpp"
#include "polytope.hpp"
#include "selfcheck.hpp"
#include "statistics.hpp"
#include "weyl.hpp"

using nlohmann::json;
using namespace alcoved;

struct alc_system {
  explicit alc_system(RootSystem r) : rs(std::move(r)) {}

  const WeylStatistics& statistics() const {
    std::lock_guard lock(mutex);
    if (!stats) stats = std::make_unique<WeylStatistics>(WeylGroup(rs));
    return *stats;
  }

  RootSystem rs;
  mutable std::mutex mutex;
  mutable std::unique_ptr<WeylStatistics> stats;
};

struct alc_polytope {
  AlcovedPolytope p;
};

namespace {

thread_local std::string last_error;

json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return to_string(q);
}

json qvector_json(const QVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

json ivector_json(const IntVector& v) { return to_std(v); }

json imatrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(ivector_json(m.row(i).transpose()));
  return rows;
}

json polynomial_json(const Polynomial& p) { return p.coeffs(); }

json algebra_json(const GroupAlgebraElement& x) {
  json out = json::array();
  for (const auto& [cls, poly] : x.terms())
    out.push_back({{"class", qvector_json(cls.frac)}, {"polynomial", polynomial_json(poly)}, {"text", poly.to_string()}});
  return out;
}

EnumerationOptions to_options(const alc_options* options) {
  EnumerationOptions out;
  if (options) {
    if (options->budget != 0) out.budget = options->budget;
    out.jobs = options->jobs == 0 ? 1 : options->jobs;
  }
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw InvalidArgument(what);
}

alc_status emit(const json& j, char** out, alc_status status = ALC_OK) {
  const std::string text = j.dump();
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  *out = buffer;
  return status;
}

template <class F>
alc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return ALC_INVALID;
  } catch (const DefectError& e) {
    last_error = e.what();
    return ALC_DEFECT;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return ALC_BUDGET;
  } catch (const json::exception& e) {
    last_error = std::string("invalid JSON: ") + e.what();
    return ALC_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ALC_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ALC_INTERNAL;
  }
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidArgument("coordinates must be integers or strings like \"1/3\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw InvalidArgument("cannot parse rational \"" + s + "\"");
    return value;
  };
  const std::string_view view(s);
  if (slash == std::string::npos) return Rational(parse_int(view));
  const auto den = parse_int(view.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in \"" + s + "\"");
  return Rational(parse_int(view.substr(0, slash)), den);
}

json element_json(const RootSystem& rs, const WeylGroup& group, std::size_t idx, bool permutation) {
  json j = {{"index", idx}, {"length", group[idx].length}};
  if (permutation) {
    j["permutation"] = rs.type() == RootType::A ? to_permutation(rs, group[idx]) : to_signed_permutation(rs, group[idx]);
  } else {
    j["matrix"] = imatrix_json(group[idx].root_action);
  }
  return j;
}

bool has_permutation_model(const RootSystem& rs) { return rs.type() == RootType::A || rs.type() == RootType::C; }

json vertex_json(const LatticeVertex& v) { return ivector_json(v.n); }

}  // namespace

extern "C" {

void alc_options_default(alc_options* options) {
  if (!options) return;
  options->budget = EnumerationOptions::kDefaultBudget;
  options->jobs = 1;
}

const char* alc_last_error(void) { return last_error.c_str(); }

const char* alc_version(void) { return "0.1.0"; }

void alc_string_free(char* s) { std::free(s); }

alc_status alc_system_create(const char* type, int rank, alc_system** out) {
  return guarded([&] {
    require(type && out, "null argument");
    *out = new alc_system(RootSystem::build(std::string_view(type), rank));
    return ALC_OK;
  });
}

void alc_system_free(alc_system* sys) { delete sys; }

alc_status alc_system_info(const alc_system* sys, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto& rs = sys->rs;
    json roots = json::array();
    for (const auto& a : rs.positive_roots()) roots.push_back(ivector_json(a));
    const json j = {{"type", std::string(1, type_letter(rs.type()))},
                    {"rank", rs.rank()},
                    {"label", rs.label()},
                    {"cartan", imatrix_json(rs.cartan())},
                    {"symmetrizer", rs.symmetrizer()},
                    {"marks", ivector_json(rs.marks())},
                    {"theta", ivector_json(rs.theta())},
                    {"theta_covector", ivector_json(rs.theta_covector())},
                    {"h", rs.h_star()},
                    {"f", rs.index_of_connection()},
                    {"positive_roots", roots}};
    return emit(j, out);
  });
}

alc_status alc_weyl_order(const alc_system* sys, uint64_t* order) {
  return guarded([&] {
    require(sys && order, "null argument");
    *order = sys->statistics().group().size();
    return ALC_OK;
  });
}

alc_status alc_enumerate(const alc_system* sys, uint64_t limit, const char* model, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const std::string m = model ? model : "matrix";
    require(m == "matrix" || m == "permutation", "model must be \"matrix\" or \"permutation\"");
    const bool perm = m == "permutation";
    if (perm) require(has_permutation_model(sys->rs), "permutation model is only available for types A and C");
    const auto& group = sys->statistics().group();
    const std::size_t n = limit == 0 ? group.size() : std::min<std::size_t>(group.size(), limit);
    json elements = json::array();
    for (std::size_t i = 0; i < n; ++i) elements.push_back(element_json(sys->rs, group, i, perm));
    return emit({{"order", group.size()}, {"elements", elements}}, out);
  });
}

alc_status alc_stats(const alc_system* sys, uint64_t limit, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto& st = sys->statistics();
    const auto& group = st.group();
    const bool perm = has_permutation_model(sys->rs);
    const std::size_t n = limit == 0 ? group.size() : std::min<std::size_t>(group.size(), limit);
    json rows = json::array();
    for (std::size_t w = 0; w < n; ++w) {
      json row = element_json(sys->rs, group, w, perm);
      if (!perm) row.erase("matrix");
      row["descents"] = st.descents(w);
      row["cdes"] = st.cdes(w);
      row["delta"] = ivector_json(st.delta(w));
      row["cmaj"] = st.cmaj(w);
      row["cmaj_class"] = qvector_json(st.cmaj_class(w).frac);
      rows.push_back(row);
    }
    return emit({{"c_group", st.c_group().elements()}, {"elements", rows}}, out);
  });
}

alc_status alc_qweyl(const alc_system* sys, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto rep = qweyl_check(sys->statistics());
    const json j = {{"lhs", algebra_json(rep.lhs)},
                    {"rhs", algebra_json(rep.rhs)},
                    {"scalar_lhs", polynomial_json(rep.scalar_lhs)},
                    {"scalar_rhs", polynomial_json(rep.scalar_rhs)},
                    {"scalar_text", rep.scalar_lhs.to_string()},
                    {"identity_holds", rep.holds}};
    return emit(j, out, rep.holds ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_double_coset(const alc_system* sys, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto rep = double_coset_check(sys->statistics());
    const json j = {{"checked", rep.checked},
                    {"cdes_failures", rep.cdes_failures},
                    {"cmaj_failures", rep.cmaj_failures},
                    {"remark_holds", rep.remark_holds},
                    {"identity_holds", rep.holds}};
    return emit(j, out, rep.holds ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_cross_table(const alc_system* sys, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto& st = sys->statistics();
    const auto table = cmaj_cross_table(st);
    json entries = json::array();
    for (const auto& row : table.entries) {
      json r = json::array();
      for (const auto& p : row) r.push_back(polynomial_json(p));
      entries.push_back(r);
    }
    json classes = json::array();
    for (const auto& x : st.c_group().classes()) classes.push_back(qvector_json(x.frac));
    const bool total_ok = table.total_at_one == st.group().size();
    const json j = {{"c_elements", table.c_elements},
                    {"classes", classes},
                    {"entries", entries},
                    {"total_at_one", table.total_at_one},
                    {"transpose_symmetric", table.transpose_symmetric}};
    return emit(j, out, total_ok ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_hypersimplex(const alc_system* sys, int64_t k, const alc_options* options, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const auto opts = to_options(options);
    if (k != 0) {
      const auto p = hypersimplex(sys->rs, k);
      return emit({{"k", k}, {"volume", volume(p, opts)}, {"lattice_points", lattice_point_count(p, opts)}}, out);
    }
    const auto rep = hypersimplex_statistic_check(sys->statistics(), opts);
    const json j = {{"volumes", rep.volumes},
                    {"coset_counts", rep.coset_counts},
                    {"element_counts", rep.element_counts},
                    {"constant_on_cosets", rep.constant_on_cosets},
                    {"generating_function", polynomial_json(rep.generating_function)},
                    {"expected", polynomial_json(rep.expected)},
                    {"identity_holds", rep.holds}};
    return emit(j, out, rep.holds ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_thick_check(const alc_system* sys, const int64_t* b, size_t b_len, int64_t k, int64_t K,
                           const alc_options* options, char** out) {
  return guarded([&] {
    require(sys && out && (b || b_len == 0), "null argument");
    const std::vector<std::int64_t> sides(b, b + b_len);
    const auto rep = thick_identity_check(sys->rs, sides, k, K, to_options(options));
    const json j = {{"volume", rep.volume},
                    {"slice_volumes", rep.slice_volumes},
                    {"inner_lattice_counts", rep.inner_lattice_counts},
                    {"sum", rep.sum},
                    {"negated_range_sum", rep.negated_range_sum},
                    {"identity_holds", rep.holds}};
    return emit(j, out, rep.holds ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_alcove_of(const alc_system* sys, const char* point_json, char** out) {
  return guarded([&] {
    require(sys && point_json && out, "null argument");
    const auto& rs = sys->rs;
    const json input = json::parse(point_json);
    require(input.is_array() && input.size() == static_cast<std::size_t>(rs.rank()),
            "point must be an array with one coordinate per simple root");
    QVector p;
    for (const auto& x : input) p.push_back(parse_rational(x));
    const auto red = reduce_to_fundamental(rs, p);
    json j = {{"point", qvector_json(p)},
              {"reduction",
               {{"image", qvector_json(red.image)},
                {"steps", red.steps},
                {"linear", imatrix_json(red.map.linear)},
                {"translation", ivector_json(red.map.translation)}}}};
    const QVector scaled = scale(p, Rational(rs.h_star()));
    const bool central = is_integral(scaled) && is_central(rs, to_integer(scaled));
    j["central"] = central;
    if (central) {
      const auto z = make_central_point(rs, to_integer(scaled));
      j["y"] = ivector_json(z.y);
      j["m"] = alcove_of(rs, z).m;
      json nbrs = json::array();
      for (const auto& n : neighbors(rs, z)) nbrs.push_back(ivector_json(n.y));
      j["neighbors"] = nbrs;
    }
    return emit(j, out);
  });
}

alc_status alc_selfcheck(const alc_system* sys, uint64_t seed, const alc_options* options, char** out) {
  return guarded([&] {
    require(sys && out, "null argument");
    const json j = selfcheck(sys->rs, seed, to_options(options));
    return emit(j, out, j.at("all_passed").get<bool>() ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_polytope_from_json(const char* spec_json, alc_polytope** out) {
  return guarded([&] {
    require(spec_json && out, "null argument");
    *out = new alc_polytope{make_polytope(PolytopeSpec::from_json(json::parse(spec_json)))};
    return ALC_OK;
  });
}

alc_status alc_polytope_from_file(const char* path, alc_polytope** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new alc_polytope{make_polytope(PolytopeSpec::from_file(path))};
    return ALC_OK;
  });
}

void alc_polytope_free(alc_polytope* p) { delete p; }

alc_status alc_polytope_bounds(const alc_polytope* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    json j = p->p.to_spec().to_json();
    j["empty"] = p->p.is_empty();
    return emit(j, out);
  });
}

alc_status alc_volume(const alc_polytope* p, const alc_options* options, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    const auto opts = to_options(options);
    const auto vol = volume(p->p, opts);
    const auto bfs = volume_by_bfs(p->p, opts);
    const json j = {{"volume", vol},
                    {"alcove_count_bfs", bfs},
                    {"lattice_points", lattice_point_count(p->p, opts)},
                    {"empty", p->p.is_empty()}};
    return emit(j, out, vol == bfs ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_lattice_point_count(const alc_polytope* p, const alc_options* options, uint64_t* count) {
  return guarded([&] {
    require(p && count, "null argument");
    *count = lattice_point_count(p->p, to_options(options));
    return ALC_OK;
  });
}

alc_status alc_volume_identity(const alc_polytope* p, const alc_options* options, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    const WeylStatistics st{WeylGroup(p->p.root_system())};
    const auto reps = st.coset_representatives();
    const auto rep = volume_identity_check(p->p, st.group(), reps, to_options(options));
    const json j = {{"volume", rep.volume},
                    {"representatives", rep.representatives},
                    {"per_coset", rep.per_coset},
                    {"lattice_sum", rep.lattice_sum},
                    {"identity_holds", rep.holds}};
    return emit(j, out, rep.holds ? ALC_OK : ALC_DEFECT);
  });
}

alc_status alc_groebner(const alc_polytope* p, const alc_options* options, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    const GroebnerBasis basis(p->p, to_options(options));
    const auto& vs = basis.vertices();
    json vertices = json::array();
    for (const auto& v : vs) vertices.push_back(vertex_json(v));
    json binomials = json::array();
    for (const auto& b : basis.binomials())
      binomials.push_back({{"lead", {vertex_json(vs[b.lead.first]), vertex_json(vs[b.lead.second])}},
                           {"trail", {vertex_json(vs[b.trail.first]), vertex_json(vs[b.trail.second])}}});
    return emit({{"vertices", vertices}, {"binomials", binomials}, {"count", basis.binomials().size()}}, out);
  });
}

alc_status alc_triangulate(const alc_polytope* p, const alc_options* options, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    const auto opts = to_options(options);
    const GroebnerBasis basis(p->p, opts);
    const auto simplices = basis.triangulate(opts);
    json list = json::array();
    for (const auto& s : simplices) {
      json simplex = json::array();
      for (auto v : s) simplex.push_back(vertex_json(basis.vertices()[v]));
      list.push_back(simplex);
    }
    return emit({{"simplices", list}, {"count", simplices.size()}, {"volume", volume(p->p, opts)}}, out);
  });
}

}  // extern "C"
