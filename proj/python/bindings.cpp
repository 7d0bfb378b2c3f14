#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stepseq/core.hpp"
#include "stepseq/generators.hpp"
#include "stepseq/graycode.hpp"
#include "stepseq/search.hpp"
#include "stepseq/text.hpp"
#include "stepseq/transforms.hpp"

namespace py = pybind11;
using namespace stepseq;

namespace {

std::string repr_sequence(const SteppingSequence& seq) {
    std::ostringstream out;
    out << "SteppingSequence(m=" << seq.m << ", moves=[";
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        if (i > 0) out << ", ";
        out << seq.moves[i];
    }
    out << "])";
    return out.str();
}

} // namespace

PYBIND11_MODULE(_stepseq, m) {
    m.doc() = "stepping sequences through nested set chains and the Gray codes they induce";

    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<BudgetExhaustedError>(m, "BudgetExhaustedError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<SteppingSequence>(m, "SteppingSequence")
        .def(py::init<int, std::vector<int>>(), py::arg("m"), py::arg("moves"))
        .def_readonly("m", &SteppingSequence::m)
        .def_readonly("moves", &SteppingSequence::moves)
        .def("__len__", [](const SteppingSequence& s) { return s.moves.size(); })
        .def("__eq__", [](const SteppingSequence& a, const SteppingSequence& b) { return a == b; })
        .def("__lt__", [](const SteppingSequence& a, const SteppingSequence& b) { return a < b; })
        .def("__hash__",
             [](const SteppingSequence& s) {
                 std::size_t h = std::hash<int>{}(s.m);
                 for (int mv : s.moves) h = h * 1315423911u + static_cast<std::size_t>(mv);
                 return h;
             })
        .def("__repr__", &repr_sequence);

    py::class_<DifferenceSequence>(m, "DifferenceSequence")
        .def(py::init<int>(), py::arg("m"))
        .def_property_readonly("m", &DifferenceSequence::m)
        .def("label", &DifferenceSequence::label, py::arg("i"))
        .def("subset", &DifferenceSequence::subset, py::arg("i"))
        .def("labels", &DifferenceSequence::labels)
        .def("__eq__", [](const DifferenceSequence& a, const DifferenceSequence& b) { return a == b; });

    py::enum_<FailureReason>(m, "FailureReason")
        .value("RepeatedSubset", FailureReason::RepeatedSubset)
        .value("InitialSubsetRevisited", FailureReason::InitialSubsetRevisited)
        .value("WrongLength", FailureReason::WrongLength)
        .value("IndexOutOfRange", FailureReason::IndexOutOfRange)
        .value("ConsecutiveEqualMoves", FailureReason::ConsecutiveEqualMoves);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("valid", &VerificationReport::valid)
        .def_readonly("failure_step", &VerificationReport::failure_step)
        .def_readonly("reason", &VerificationReport::reason)
        .def_readonly("repeated_subset", &VerificationReport::repeated_subset)
        .def("__bool__", [](const VerificationReport& r) { return r.valid; })
        .def("__repr__", [](const VerificationReport& r) {
            if (r.valid) return std::string("VerificationReport(valid)");
            std::string out = "VerificationReport(" + to_string(*r.reason);
            if (r.failure_step) out += " at step " + std::to_string(*r.failure_step);
            return out + ")";
        });

    m.def("new_chain", &new_chain, py::arg("m"));
    m.def("apply_move", &apply_move, py::arg("chain"), py::arg("i"));
    m.def("subset_at", &subset_at, py::arg("chain"), py::arg("i"));
    m.def("verify", &verify, py::arg("seq"), py::arg("limit") = kDefaultVerifyLimit);
    m.def("occurrence_profile", &occurrence_profile, py::arg("seq"));
    m.def("is_well_formed", &is_well_formed, py::arg("seq"));
    m.def("stepping_length", &stepping_length, py::arg("m"));
    m.def("v2", &v2, py::arg("c"));
    m.def("hamming_weight", &hamming_weight, py::arg("c"));

    py::class_<MoveStream>(m, "MoveStream")
        .def("next", &MoveStream::next)
        .def_property_readonly("m", &MoveStream::m)
        .def_property_readonly("emitted", &MoveStream::emitted)
        .def_property_readonly("total_expected", &MoveStream::total_expected)
        .def_property_readonly("state_words", &MoveStream::state_words)
        .def("__iter__", [](MoveStream& s) -> MoveStream& { return s; })
        .def("__next__", [](MoveStream& s) {
            if (auto mv = s.next()) return *mv;
            throw py::stop_iteration();
        });

    py::class_<ForCStream, MoveStream>(m, "ForCStream").def(py::init<int>(), py::arg("m"));
    py::class_<ForJStream, MoveStream>(m, "ForJStream")
        .def(py::init<int>(), py::arg("m"))
        .def_property_readonly("t", &ForJStream::t);

    m.def("recursive_r", &recursive_r, py::arg("m"), py::arg("limit") = kDefaultMaterializeLimit);
    m.def("greedy", &greedy, py::arg("m"), py::arg("limit") = kDefaultGreedyLimit);
    m.def("humble", &humble, py::arg("m"), py::arg("limit") = kDefaultGreedyLimit);
    m.def("stream_for_c", [](int width) { return ForCStream(width); }, py::arg("m"));
    m.def("stream_for_j", [](int width) { return ForJStream(width); }, py::arg("m"));
    m.def("combine_first", &combine_first, py::arg("a"), py::arg("b"), py::arg("strict") = false);
    m.def("combine_second", &combine_second, py::arg("a"), py::arg("b"), py::arg("strict") = false);

    m.def("complement", &complement, py::arg("seq"));
    m.def("reverse", &reverse, py::arg("seq"));
    m.def("commutations", &commutations, py::arg("seq"));
    m.def(
        "orbit_closure",
        [](const std::vector<SteppingSequence>& seeds, bool use_reverse, bool use_complement,
           bool use_commutation, std::size_t max_size) {
            return orbit_closure(seeds, OrbitOps{use_reverse, use_complement, use_commutation},
                                 max_size);
        },
        py::arg("seeds"), py::arg("reverse") = true, py::arg("complement") = true,
        py::arg("commutation") = true, py::arg("max_size") = kDefaultOrbitCap);

    py::enum_<Filter>(m, "Filter")
        .value("All", Filter::All)
        .value("Contiguous", Filter::Contiguous)
        .value("StronglyContiguous", Filter::StronglyContiguous);

    py::enum_<Mode>(m, "Mode").value("Count", Mode::Count).value("Collect", Mode::Collect);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("count", &SearchResult::count)
        .def_readonly("nodes", &SearchResult::nodes)
        .def_readonly("sequences", &SearchResult::sequences);

    m.def(
        "enumerate",
        [](int width, Filter filter, Mode mode, std::optional<std::uint64_t> node_budget,
           int threads) {
            SearchConfig config;
            config.m = width;
            config.filter = filter;
            config.mode = mode;
            config.node_budget = node_budget;
            config.threads = threads;
            return enumerate(config);
        },
        py::arg("m"), py::arg("filter") = Filter::All, py::arg("mode") = Mode::Count,
        py::arg("node_budget") = py::none(), py::arg("threads") = 1);

    py::class_<CensusM4>(m, "CensusM4")
        .def_readonly("total", &CensusM4::total)
        .def_readonly("all", &CensusM4::all)
        .def_readonly("combinator_products", &CensusM4::combinator_products)
        .def_readonly("product_family", &CensusM4::product_family)
        .def_readonly("remaining_family", &CensusM4::remaining_family)
        .def_readonly("reverse_equals_complement", &CensusM4::reverse_equals_complement)
        .def_readonly("families_disjoint", &CensusM4::families_disjoint)
        .def_readonly("families_cover_all", &CensusM4::families_cover_all);

    m.def("census_m4", &census_m4);
    m.def("parity_check", &parity_check, py::arg("m"));

    py::class_<GrayOrdering>(m, "GrayOrdering")
        .def(py::init<int, std::vector<Mask>>(), py::arg("m"), py::arg("words"))
        .def_readonly("m", &GrayOrdering::m)
        .def_readonly("words", &GrayOrdering::words)
        .def("__len__", [](const GrayOrdering& g) { return g.words.size(); })
        .def("__eq__", [](const GrayOrdering& a, const GrayOrdering& b) { return a == b; });

    py::class_<KSubsetOrdering>(m, "KSubsetOrdering")
        .def_readonly("m", &KSubsetOrdering::m)
        .def_readonly("k", &KSubsetOrdering::k)
        .def_readonly("sets", &KSubsetOrdering::sets)
        .def("__len__", [](const KSubsetOrdering& g) { return g.sets.size(); });

    py::class_<NestingViolation>(m, "NestingViolation")
        .def_readonly("position", &NestingViolation::position)
        .def_readonly("word", &NestingViolation::word)
        .def_readonly("family", &NestingViolation::family);

    m.def("to_ordering", &to_ordering, py::arg("seq"), py::arg("verify_limit") = kDefaultVerifyLimit);
    m.def("is_contiguous", &is_contiguous, py::arg("seq"));
    m.def("is_strongly_contiguous", &is_strongly_contiguous, py::arg("seq"));
    m.def("is_cyclic_gray", &is_cyclic_gray, py::arg("ordering"));
    m.def("restrict_to_k", &restrict_to_k, py::arg("seq"), py::arg("k"),
          py::arg("verify_limit") = kDefaultVerifyLimit);
    m.def("brgc", &brgc, py::arg("m"));
    m.def("nesting_violation", &nesting_violation, py::arg("ordering"));
    m.def("a6", []() { return a6(); });

    m.def("format_moves", &format_moves, py::arg("seq"));
    m.def("parse_moves", [](const std::string& line, int width) { return parse_moves(line, width); },
          py::arg("line"), py::arg("m"));
    m.def("format_mask_binary", &format_mask_binary, py::arg("bits"), py::arg("m"));
    m.def("format_subset", &format_subset, py::arg("bits"), py::arg("label_base") = 0);

    m.attr("DEFAULT_VERIFY_LIMIT") = kDefaultVerifyLimit;
    m.attr("DEFAULT_MATERIALIZE_LIMIT") = kDefaultMaterializeLimit;
    m.attr("__version__") = "0.1.0";
}
