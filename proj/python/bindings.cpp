#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "parityseq/cli.hpp"
#include "parityseq/convolution_sequences.hpp"
#include "parityseq/digit_sequences.hpp"
#include "parityseq/lcm_sequences.hpp"
#include "parityseq/nim_sequences.hpp"
#include "parityseq/oeis_io.hpp"
#include "parityseq/parity_kernel.hpp"
#include "parityseq/sort_sequences.hpp"
#include "parityseq/verifier.hpp"
#include "parityseq/version.hpp"

namespace py = pybind11;
using namespace parityseq;

namespace {

py::int_ to_py(const Term& t) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(t.get_str().c_str(), nullptr, 10));
}

Term from_py(const py::int_& v) { return Term(py::str(v).cast<std::string>(), 10); }

py::list to_py(const std::vector<Term>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

template <Term (*F)(std::uint64_t)>
py::int_ term_fn(std::uint64_t n) {
  return to_py(F(n));
}

template <Parity (*F)(std::uint64_t)>
int parity_fn(std::uint64_t n) {
  return F(n).value();
}

const SequenceDescriptor& lookup(const std::string& id) {
  const auto* seq = find_sequence(id);
  if (!seq) throw py::key_error("unknown sequence id '" + id + "'");
  return *seq;
}

const Morphism& morphism_named(const std::string& name) {
  static const Morphism tm = Morphism::thue_morse();
  static const Morphism master = Morphism::master();
  if (name == "thue_morse") return tm;
  if (name == "master") return master;
  throw py::value_error("morphism must be 'thue_morse' or 'master'");
}

py::object relation_to_py(const std::optional<ParityRelation>& rel) {
  if (!rel) return py::none();
  return py::make_tuple(rel->shift, rel->complement);
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

BFileTable table_from_rows(const std::string& id, const std::vector<std::pair<std::int64_t, py::int_>>& rows) {
  BFileTable t{id, {}};
  for (const auto& [index, value] : rows) t.rows.push_back({index, from_py(value)});
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thue-Morse parity sequences: generators, parity verification and OEIS b-file tools";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<BFileError>(m, "BFileError", PyExc_ValueError);

  // Thue-Morse kernel
  m.def("binary_weight", &binary_weight, py::arg("n"));
  m.def("thue_morse", &parity_fn<thue_morse>, py::arg("n"));
  m.def("thue_morse_bar", &parity_fn<thue_morse_bar>, py::arg("n"));
  m.def("master_m", &parity_fn<master_m>, py::arg("n"));
  m.def("master_m_recursive", &parity_fn<master_m_recursive>, py::arg("n"));
  m.def("a228495", &parity_fn<a228495>, py::arg("n"));
  m.def("evil", &evil, py::arg("k"));
  m.def("odious", &odious, py::arg("k"));
  m.def("thue_morse_word", [](std::size_t length) { return thue_morse_word(length).to_string(); },
        py::arg("length"));
  m.def("master_word", [](std::size_t length) { return master_word(length).to_string(); }, py::arg("length"));
  m.def(
      "apply_morphism",
      [](const std::string& word, const std::string& morphism) {
        return apply_morphism(BinaryWord::from_string(word), morphism_named(morphism)).to_string();
      },
      py::arg("word"), py::arg("morphism"), "morphism is 'thue_morse' or 'master'");
  m.def(
      "max_run", [](const std::string& word, int symbol) {
        return max_run(BinaryWord::from_string(word), static_cast<std::uint8_t>(symbol));
      },
      py::arg("word"), py::arg("symbol"));
  m.def(
      "has_cube", [](const std::string& word, std::size_t max_block) {
        return has_cube(BinaryWord::from_string(word), max_block);
      },
      py::arg("word"), py::arg("max_block"));

  // Nim
  m.def("ordered_p_count_closed", &term_fn<ordered_p_count_closed>, py::arg("n"));
  m.def("ordered_p_count_bruteforce", &term_fn<ordered_p_count_bruteforce>, py::arg("n"));
  m.def("a128975_closed", &term_fn<a128975_closed>, py::arg("n"));
  m.def("a128975_bruteforce", &term_fn<a128975_bruteforce>, py::arg("n"));

  // lcm sums
  m.def("lcm_range", [](std::int64_t lo, std::int64_t hi) { return to_py(lcm_range(lo, hi)); }, py::arg("lo"),
        py::arg("hi"));
  m.def("two_adic_valuation", [](const py::int_& n) { return two_adic_valuation(from_py(n)); }, py::arg("n"));
  m.def("a061297", &term_fn<a061297>, py::arg("n"));
  m.def("a093431", &term_fn<a093431>, py::arg("n"));
  m.def("a061297_parity_shortcut", &parity_fn<a061297_parity_shortcut>, py::arg("n"));
  m.def("quotient_term_is_odd", &quotient_term_is_odd, py::arg("n"), py::arg("r"));

  // Digit re-readings
  m.def("smallest_prime_factor", &smallest_prime_factor, py::arg("n"));
  m.def("a092524", &term_fn<a092524>, py::arg("n"));
  m.def("a104258", &term_fn<a104258>, py::arg("n"));
  m.def("a102393", &term_fn<a102393>, py::arg("n"));

  // Convolutions
  m.def("a001285", &term_fn<a001285>, py::arg("n"));
  m.def("a029886", &term_fn<a029886>, py::arg("n"));
  m.def("a247303", &term_fn<a247303>, py::arg("n"));

  // Sorting counts
  m.def("a003071", &term_fn<a003071>, py::arg("n"));
  m.def("a003071_simulate", &term_fn<a003071_simulate>, py::arg("n"));
  m.def("a001855", &term_fn<a001855>, py::arg("n"));
  m.def("a113474", &term_fn<a113474>, py::arg("n"));
  m.def("a101925", &term_fn<a101925>, py::arg("k"));
  m.def("a005187", &term_fn<a005187>, py::arg("n"));
  m.def("a122248", &term_fn<a122248>, py::arg("n"));
  m.def(
      "simulate_list_merge",
      [](std::uint64_t n) {
        const auto s = simulate_list_merge(n);
        return py::make_tuple(s.rounds, s.comparisons);
      },
      py::arg("n"), "Returns (rounds of list sizes, total comparisons).");

  // Catalogue and verification
  m.def("sequence_ids", [] {
    std::vector<std::string> ids;
    for (const auto& d : catalogue()) ids.push_back(d.id);
    return ids;
  });
  m.def("parity_sequence_ids", [] {
    std::vector<std::string> ids;
    for (const auto* d : parity_catalogue()) ids.push_back(d->id);
    return ids;
  });
  m.def(
      "generate",
      [](const std::string& id, std::optional<std::uint64_t> first, std::size_t count) {
        const auto& seq = lookup(id);
        const auto from = first.value_or(seq.offset);
        if (from < seq.offset) throw py::value_error(id + " starts at index " + std::to_string(seq.offset));
        return to_py(seq.generate(from, count));
      },
      py::arg("id"), py::arg("first") = py::none(), py::arg("count") = 10);
  m.def(
      "check_relation",
      [](const std::string& id, int shift, bool complement, std::uint64_t n_max) {
        return check_relation(lookup(id), {shift, complement}, n_max);
      },
      py::arg("id"), py::arg("shift"), py::arg("complement"), py::arg("n_max"));
  m.def(
      "fit_relation",
      [](const std::string& id, std::uint64_t n_max, int max_shift) {
        return relation_to_py(fit_relation(lookup(id), n_max, max_shift));
      },
      py::arg("id"), py::arg("n_max"), py::arg("max_shift") = kMaxShift,
      "Returns (shift, complement) or None.");
  m.def(
      "verify_all",
      [](std::uint64_t n_max_cheap, std::uint64_t n_max_heavy) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_all(n_max_cheap, n_max_heavy);
        }
        return json_to_py(to_json(report));
      },
      py::arg("n_max_cheap") = 4096, py::arg("n_max_heavy") = 512);

  // b-files
  m.def(
      "parse_bfile",
      [](const std::string& text) {
        std::vector<std::pair<std::int64_t, py::int_>> rows;
        for (const auto& r : parse_bfile(text).rows) rows.emplace_back(r.index, to_py(r.value));
        return rows;
      },
      py::arg("text"), "Returns a list of (index, value) pairs.");
  m.def(
      "serialize_bfile",
      [](const std::vector<std::pair<std::int64_t, py::int_>>& rows) {
        return serialize_bfile(table_from_rows("", rows));
      },
      py::arg("rows"));
  m.def(
      "cross_check",
      [](const std::string& id, const std::string& text, std::size_t limit) {
        const auto result = cross_check(lookup(id), parse_bfile(text, id), limit);
        if (result.offset_error) throw BFileError(*result.offset_error);
        py::list out;
        for (const auto& mm : result.mismatches) out.append(py::make_tuple(mm.index, to_py(mm.expected), to_py(mm.actual)));
        return out;
      },
      py::arg("id"), py::arg("text"), py::arg("limit") = 1000,
      "Returns (index, expected, actual) triples; raises BFileError on an offset disagreement.");
  m.def("bundled_fixture", [](const std::string& id) -> std::optional<std::string> {
    auto f = bundled_fixture(id);
    if (!f) return std::nullopt;
    return std::string(*f);
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
