#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ydkit/errors.hpp"
#include "ydkit/shellio.hpp"

namespace py = pybind11;
using namespace ydkit;

namespace {

CatalogEntry load(const std::string& builtin_name, const std::string& path, unsigned field, bool verify) {
  if (builtin_name.empty() == path.empty()) throw ParseError("give exactly one of builtin or path");
  if (!builtin_name.empty()) return builtin(builtin_name, field);
  return load_hopf_file(path, {verify, field});
}

QTPtr qt_of(const CatalogEntry& e, bool verify) {
  return std::make_shared<const QTHopf>(verify ? make_qt(e.hopf, e.R) : QTHopf(e.hopf, e.R));
}

SplitOptions options(const QTHopf& q, std::uint64_t seed, std::int64_t max_den) {
  SplitOptions o;
  o.seed = seed;
  o.max_den = max_den;
  o.field = q.hopf().field();
  return o;
}

py::dict report_dict(const Report& r) {
  py::dict d;
  for (const auto& e : r.entries) {
    py::dict x;
    x["passed"] = e.passed;
    x["skipped"] = e.skipped;
    x["informational"] = e.informational;
    x["witness"] = e.witness;
    d[py::str(e.id)] = x;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact classification of irreducible Yetter-Drinfeld modules";

  // Later registrations are tried first.
  auto& base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<VerifyError>(m, "VerifyError", base.ptr());
  py::register_exception<FieldNotSplitting>(m, "FieldNotSplitting", base.ptr());
  py::register_exception<CheckFailed>(m, "CheckFailed", base.ptr());

  m.def("builtin_names", &builtin_names);

  m.def(
      "export_hopf",
      [](const std::string& name, unsigned field) { return export_hopf(builtin(name, field)); },
      py::arg("name"), py::arg("field") = 0, "HopfFileV1 text of a builtin");

  m.def(
      "verify",
      [](const std::string& builtin_name, const std::string& path, unsigned field) {
        const CatalogEntry e = load(builtin_name, path, field, false);
        SplitOptions o;
        o.field = e.hopf.field();
        py::dict d;
        const Report rh = verify_hopf(e.hopf, o);
        d["hopf"] = report_dict(rh);
        if (!rh.ok()) return d;
        const QTHopf q(e.hopf, e.R);
        d["qt"] = report_dict(verify_qt(q));
        d["e_R"] = report_dict(check_separable_idempotent(q));
        d["integral_cocomm"] = report_dict(check_integral_cocommutative(q));
        return d;
      },
      py::arg("builtin") = "", py::arg("path") = "", py::arg("field") = 0);

  m.def(
      "classify_record",
      [](const std::string& builtin_name, const std::string& path, std::uint64_t seed, unsigned field,
         std::int64_t max_den, bool verify) {
        const CatalogEntry e = load(builtin_name, path, field, verify);
        const QTPtr q = qt_of(e, verify);
        const SplitOptions o = options(*q, seed, max_den);
        Classification c;
        {
          py::gil_scoped_release release;
          c = classify_all(q, o, e.name);
        }
        const RecordChecks checks = run_record_checks(*q, c, o);
        return classification_record(c, e, checks, max_den).dump();
      },
      py::arg("builtin") = "", py::arg("path") = "", py::arg("seed") = 0, py::arg("field") = 0,
      py::arg("max_den") = kDefaultMaxDen, py::arg("verify") = true, "ClassificationRecordV1 as JSON text");

  m.def(
      "table",
      [](const std::string& builtin_name, const std::string& path, std::uint64_t seed, unsigned field) {
        const CatalogEntry e = load(builtin_name, path, field, true);
        const QTPtr q = qt_of(e, true);
        return format_table(classify_all(q, options(*q, seed, kDefaultMaxDen), e.name), e.hopf.names());
      },
      py::arg("builtin") = "", py::arg("path") = "", py::arg("seed") = 0, py::arg("field") = 0);

  m.def(
      "crosscheck_group",
      [](const std::string& name, std::uint64_t seed, unsigned field) {
        const CatalogEntry e = builtin(name, field);
        if (!e.group) throw ParseError("'" + name + "' is not a group algebra");
        const QTPtr q = qt_of(e, true);
        const SplitOptions o = options(*q, seed, kDefaultMaxDen);
        const CrosscheckResult r = crosscheck_group(q, *e.group, classify_all(q, o, e.name), o);
        return py::make_tuple(r.matched, r.total, r.multisets_equal);
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("field") = 0, "(matched, total, multisets_equal)");

  m.def("sha256_hex", &sha256_hex);
}
