// Python bindings for the main operations: parameter assignments, the
// epsilon/mu sign calculus, quantum minors, degree-bounded ideal membership
// and the suite runner (returning the JSON report as a string).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "manin/runner.hpp"

namespace py = pybind11;
using namespace manin;

namespace {

Field field_of(const std::string& spec) {
  if (spec == "Q" || spec == "q") return Field::rationals();
  if (spec.empty() || spec == "default") return Field::default_fp();
  return Field::fp(std::stoull(spec));
}

Mode mode_of(const std::string& name) {
  auto m = mode_from_name(name);
  if (!m) throw MathError("unknown mode: " + name);
  return *m;
}

/// Small in-process handle combining an assignment with a square generator
/// matrix, enough to expose minors and membership checks to python.
struct Session {
  ParameterAssignment assign;
  Alphabet alphabet;
  AlgMatrix M;
  RelationSet rels;

  Session(int n, int m, const std::string& mode, uint64_t seed,
          const std::string& field)
      : assign(ParameterAssignment::make(n, m, mode_of(mode), seed,
                                         field_of(field))),
        alphabet({{Family::M, n, m}}),
        M(AlgMatrix::generators(alphabet, Family::M, assign.field())),
        rels(alphabet, assign.field()) {
    add_manin_relations(rels, family_gen(alphabet, Family::M, assign.field()),
                        n, m, ParamView::q_of(assign),
                        ParamView::p_of(assign));
  }

  std::string lookup(const std::string& sym, int i, int j) const {
    return assign.lookup(sym.at(0), i, j).to_string();
  }

  std::string eps_index_str(const MultiIndex& I) const {
    return eps_index(ParamView::q_of(assign), I).to_string();
  }
  std::string eps_perm_str(const MultiIndex& I, const Perm& s) const {
    return eps_perm(ParamView::q_of(assign), I, s).to_string();
  }
  std::string mu_perm_str(const MultiIndex& J, const Perm& s) const {
    return mu_perm(ParamView::p_of(assign), J, s).to_string();
  }

  std::string minor_str(const std::string& orientation,
                        const std::string& kind, const MultiIndex& I,
                        const MultiIndex& J) const {
    MinorSpec spec;
    spec.orientation = orientation == "row" ? MinorOrientation::row
                                            : MinorOrientation::column;
    if (kind == "det")
      spec.kind = MinorKind::det;
    else if (kind == "per")
      spec.kind = MinorKind::per;
    else
      spec.kind = MinorKind::per_normalized;
    spec.I = I;
    spec.J = J;
    bool det = spec.kind == MinorKind::det;
    ParamView v =
        det ? ParamView::q_of(assign) : ParamView::p_of(assign);
    return minor(spec, M, v).to_string(alphabet);
  }

  std::string cdet_str() const {
    MultiIndex full = iota_index(assign.n());
    return cdet(ParamView::q_of(assign), full, submatrix_entry(M, full, full))
        .to_string(alphabet);
  }

  /// Membership of a minor-difference style polynomial is exposed through
  /// the suites; here we offer the raw check on relation generators times
  /// words, mostly for smoke testing.
  bool is_member_of_manin_ideal(int rel_index, const MultiIndex& left_word,
                                const MultiIndex& right_word) const {
    const auto& rl = rels.relations();
    if (rel_index < 0 || rel_index >= (int)rl.size())
      throw MathError("relation index out of range");
    Field f = assign.field();
    NCPoly p = rl[rel_index].poly;
    for (auto it = left_word.rbegin(); it != left_word.rend(); ++it) {
      int i = (*it - 1) / assign.m() + 1, j = (*it - 1) % assign.m() + 1;
      p = NCPoly::generator(alphabet.letter(Family::M, i, j), f) * p;
    }
    for (int v : right_word) {
      int i = (v - 1) / assign.m() + 1, j = (v - 1) % assign.m() + 1;
      p = p * NCPoly::generator(alphabet.letter(Family::M, i, j), f);
    }
    MembershipEngine eng(rels);
    return eng.test(p).member;
  }

  size_t relation_count() const { return rels.size(); }
};

std::string run_suites_json(const std::vector<std::string>& suites, int n,
                            int m, int s, int degree, const std::string& mode,
                            const std::string& field,
                            const std::vector<uint64_t>& seeds) {
  RunConfig cfg;
  cfg.suites = suites;
  cfg.n = n;
  cfg.m = m;
  cfg.s = s;
  cfg.degree = degree;
  cfg.mode = mode_of(mode);
  cfg.prime = field_of(field).prime;
  if (!seeds.empty()) cfg.seeds = seeds;
  RunOutcome out = run(cfg);
  return out.report.dump(2);
}

}  // namespace

PYBIND11_MODULE(_maninverify, mod) {
  mod.doc() =
      "verification engine for the identities of multiparameter Manin "
      "matrices (quantum determinants, Capelli, MacMahon, Cayley-Hamilton, "
      "Yang-Baxter) by degree-bounded ideal membership over exact fields";

  py::register_exception<MathError>(mod, "MathError");
  py::register_exception<GuardExceeded>(mod, "GuardExceeded");

  py::class_<Session>(mod, "Session",
                      "a parameter assignment with its generic matrix and "
                      "Manin relation set")
      .def(py::init<int, int, const std::string&, uint64_t,
                    const std::string&>(),
           py::arg("n"), py::arg("m"), py::arg("mode") = "generic",
           py::arg("seed") = 1, py::arg("field") = "default")
      .def("lookup", &Session::lookup, py::arg("sym"), py::arg("i"),
           py::arg("j"), "parameter value as an exact string")
      .def("eps_index", &Session::eps_index_str, py::arg("I"))
      .def("eps_perm", &Session::eps_perm_str, py::arg("I"), py::arg("sigma"))
      .def("mu_perm", &Session::mu_perm_str, py::arg("J"), py::arg("sigma"))
      .def("minor", &Session::minor_str, py::arg("orientation"),
           py::arg("kind"), py::arg("I"), py::arg("J"))
      .def("cdet", &Session::cdet_str)
      .def("is_member_of_manin_ideal", &Session::is_member_of_manin_ideal,
           py::arg("rel_index"), py::arg("left_word") = MultiIndex{},
           py::arg("right_word") = MultiIndex{})
      .def_property_readonly("relation_count", &Session::relation_count);

  mod.def("catalogue", [] { return catalogue_ids(); },
          "known suite identifiers");
  mod.def("run_suites", &run_suites_json, py::arg("suites"), py::arg("n") = 2,
          py::arg("m") = 2, py::arg("s") = 2, py::arg("degree") = 0,
          py::arg("mode") = "generic", py::arg("field") = "default",
          py::arg("seeds") = std::vector<uint64_t>{},
          "run suites and return the JSON report as a string");
  mod.def("default_prime", [] { return Field::kMersenne61; });
}
