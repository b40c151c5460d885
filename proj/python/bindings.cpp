#include "sqw/community.hpp"
#include "sqw/complex.hpp"
#include "sqw/edge_list.hpp"
#include "sqw/error.hpp"
#include "sqw/hodge.hpp"
#include "sqw/qwalk.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;

namespace {

using VertexTuple = std::vector<sqw::VertexId>;

py::tuple to_tuple(const sqw::Simplex& s) { return py::tuple(py::cast(s.vertices())); }

sqw::Simplex to_simplex(const VertexTuple& v) { return sqw::canonical_simplex(v); }

sqw::Adjacency parse_flavor(const std::string& flavor) {
    if (flavor == "upper") return sqw::Adjacency::upper;
    if (flavor == "lower") return sqw::Adjacency::lower;
    throw sqw::InvalidParameter("flavor must be 'upper' or 'lower'");
}

sqw::CoinOrdering parse_ordering(const std::string& order) {
    if (order == "face") return sqw::CoinOrdering::face_grouped;
    if (order == "canonical") return sqw::CoinOrdering::canonical;
    throw sqw::InvalidParameter("coin_order must be 'face' or 'canonical'");
}

py::list communities_to_list(const sqw::SimplicialComplex& k, const sqw::CommunityPartition& p) {
    const auto layer = k.simplices(p.n);
    py::list out;
    for (const auto& members : p.communities) {
        py::list group;
        for (auto s : members) group.append(to_tuple(layer[s]));
        out.append(group);
    }
    return out;
}

/// Walk plus a lazily computed spectral decomposition.
class PyWalk {
public:
    PyWalk(const sqw::SimplicialComplex& k, int n, const std::string& order)
        : walk_(sqw::WalkSpace::build(k, n, parse_ordering(order))) {}

    const sqw::UnitaryWalk& walk() const { return walk_; }
    std::size_t index(const VertexTuple& v) const { return walk_.space().simplex_index(to_simplex(v)); }

    const sqw::UnitarySpectrum& spectrum() {
        if (!spectrum_) spectrum_ = sqw::spectral_decomposition(walk_);
        return *spectrum_;
    }

    py::dict table(const sqw::TransitionTable& t) const {
        py::dict out;
        for (std::size_t k = 0; k < t.targets.size(); ++k) {
            out[to_tuple(walk_.space().simplex(t.targets[k]))] = t.values[k];
        }
        return out;
    }

private:
    sqw::UnitaryWalk walk_;
    std::optional<sqw::UnitarySpectrum> spectrum_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simplicial complexes, Hodge Laplacians and Fourier quantum walks on simplices";

    auto error = py::register_exception<sqw::Error>(m, "Error", PyExc_ValueError);
    py::register_exception<sqw::DegenerateSimplex>(m, "DegenerateSimplex", error);
    py::register_exception<sqw::InvalidEdge>(m, "InvalidEdge", error);
    py::register_exception<sqw::InvalidParameter>(m, "InvalidParameter", error);
    py::register_exception<sqw::UnknownSimplex>(m, "UnknownSimplex", error);
    py::register_exception<sqw::IsolatedSimplex>(m, "IsolatedSimplex", error);
    py::register_exception<sqw::NoAdjacency>(m, "NoAdjacency", error);
    py::register_exception<sqw::NumericalError>(m, "NumericalError", error);
    py::register_exception<sqw::IoError>(m, "IoError", error);
    py::register_exception<sqw::ParseError>(m, "ParseError", error);

    py::class_<sqw::SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("max_dim", &sqw::SimplicialComplex::max_dim)
        .def("count", &sqw::SimplicialComplex::count, py::arg("n"))
        .def("counts", [](const sqw::SimplicialComplex& k) {
            std::vector<std::size_t> out;
            for (int n = 0; n <= k.max_dim(); ++n) out.push_back(k.count(n));
            return out;
        })
        .def("simplices", [](const sqw::SimplicialComplex& k, int n) {
            py::list out;
            for (const auto& s : k.simplices(n)) out.append(to_tuple(s));
            return out;
        }, py::arg("n"))
        .def("index_of", [](const sqw::SimplicialComplex& k, const VertexTuple& v) {
            return k.index_of(to_simplex(v));
        })
        .def("__contains__", [](const sqw::SimplicialComplex& k, const VertexTuple& v) {
            return k.contains(to_simplex(v));
        });

    m.def("canonical_simplex", [](const VertexTuple& v) { return to_tuple(to_simplex(v)); });
    m.def("from_simplices", [](const std::vector<VertexTuple>& simplices) {
        std::vector<sqw::Simplex> list;
        for (const auto& v : simplices) list.push_back(to_simplex(v));
        return sqw::SimplicialComplex::from_simplices(std::move(list));
    }, "Smallest complex containing the given simplices");
    m.def("clique_complex", [](const std::vector<sqw::Edge>& edges, int max_dim) {
        return sqw::clique_complex(edges, max_dim);
    }, py::arg("edges"), py::arg("max_dim") = 4);
    m.def("read_edge_list", [](const std::filesystem::path& p) { return sqw::read_edge_list(p); });
    m.def("load_edge_list", [](const std::filesystem::path& p, int max_dim) {
        return sqw::clique_complex(sqw::read_edge_list(p), max_dim);
    }, py::arg("path"), py::arg("max_dim") = 4, "Clique complex of an edge-list file");

    m.def("boundary_matrix", [](const sqw::SimplicialComplex& k, int n) {
        return Eigen::MatrixXi(sqw::boundary_matrix(k, n).entries);
    }, py::arg("complex"), py::arg("n"));
    m.def("adjacency", [](const sqw::SimplicialComplex& k, int n, const std::string& flavor) {
        return Eigen::MatrixXi(sqw::adjacency(k, n, parse_flavor(flavor)).entries);
    }, py::arg("complex"), py::arg("n"), py::arg("flavor"));
    m.def("lower_neighbourhood", [](const sqw::SimplicialComplex& k, int n, const VertexTuple& v) {
        py::list out;
        for (const auto& s : sqw::lower_neighbourhood(k, n, to_simplex(v))) out.append(to_tuple(s));
        return out;
    });

    m.def("hodge_laplacian", [](const sqw::SimplicialComplex& k, int n) {
        auto l = sqw::hodge_laplacian(k, n);
        return std::make_tuple(l.up, l.down, l.total);
    }, py::arg("complex"), py::arg("n"), "(L_up, L_down, L_total) as dense arrays");
    m.def("laplacian_spectrum", [](const sqw::SimplicialComplex& k, int n, double tol) {
        auto r = sqw::laplacian_spectrum(k, n, tol);
        return std::make_tuple(r.eigenvalues, r.betti);
    }, py::arg("complex"), py::arg("n"), py::arg("tolerance") = sqw::kDefaultKernelTolerance);
    m.def("betti_number", &sqw::betti_number, py::arg("complex"), py::arg("n"),
          py::arg("tolerance") = sqw::kDefaultKernelTolerance);
    m.def("verify_chain_identities", [](const sqw::SimplicialComplex& k, int n) {
        auto r = sqw::verify_chain_identities(k, n);
        py::dict out;
        out["boundary_of_boundary_zero"] = r.boundary_of_boundary_zero;
        out["up_down_zero"] = r.up_down_zero;
        out["down_up_zero"] = r.down_up_zero;
        return out;
    });

    py::class_<PyWalk>(m, "QuantumWalk")
        .def(py::init<const sqw::SimplicialComplex&, int, const std::string&>(), py::arg("complex"),
             py::arg("n"), py::arg("coin_order") = "face")
        .def_property_readonly("arc_count", [](const PyWalk& w) { return w.walk().dimension(); })
        .def_property_readonly("arcs", [](const PyWalk& w) {
            const auto& space = w.walk().space();
            py::list out;
            for (const auto& a : space.arcs()) {
                out.append(py::make_tuple(to_tuple(space.simplex(a.source)), to_tuple(space.simplex(a.target))));
            }
            return out;
        })
        .def("matrix", [](const PyWalk& w) { return w.walk().matrix(); })
        .def("coin_matrix", [](const PyWalk& w) { return w.walk().coin_matrix(); })
        .def("shift_matrix", [](const PyWalk& w) { return w.walk().shift_matrix(); })
        .def("evolve", [](const PyWalk& w, const Eigen::VectorXcd& state, std::size_t t) {
            return sqw::evolve(w.walk(), state, t);
        }, py::arg("state"), py::arg("t"))
        .def("transition_probability", [](const PyWalk& w, const VertexTuple& x, const VertexTuple& y, std::size_t t) {
            return sqw::transition_probability(w.walk(), w.index(x), w.index(y), t);
        }, py::arg("source"), py::arg("target"), py::arg("t"))
        .def("finite_time_average", [](const PyWalk& w, const VertexTuple& x, std::size_t T) {
            return w.table(sqw::finite_time_average(w.walk(), w.index(x), T));
        }, py::arg("source"), py::arg("time_steps") = 100)
        .def("long_time_average", [](PyWalk& w, const VertexTuple& x) {
            return w.table(sqw::long_time_average(w.walk(), w.spectrum(), w.index(x)));
        }, py::arg("source"))
        .def("amplitude_lower_bound", [](PyWalk& w, const VertexTuple& x, const VertexTuple& y) {
            return sqw::amplitude_lower_bound(w.walk(), w.spectrum(), w.index(x), w.index(y));
        }, py::arg("source"), py::arg("target"))
        .def("phases", [](PyWalk& w) { return w.spectrum().phases; });

    m.def("exact_down_communities", [](const sqw::SimplicialComplex& k, int n) {
        return communities_to_list(k, sqw::exact_down_communities(k, n));
    });
    m.def("exact_up_communities", [](const sqw::SimplicialComplex& k, int n) {
        return communities_to_list(k, sqw::exact_up_communities(k, n));
    });
    m.def("verify_symmetry", [](const sqw::SimplicialComplex& k, int n) { return sqw::verify_symmetry(k, n).holds; });
    m.def("simplicial_modularity", [](const sqw::SimplicialComplex& k, int n, const std::vector<std::vector<VertexTuple>>& groups) {
        std::vector<std::vector<sqw::Simplex>> communities;
        for (const auto& g : groups) {
            auto& c = communities.emplace_back();
            for (const auto& v : g) c.push_back(to_simplex(v));
        }
        return sqw::simplicial_modularity(k, n, sqw::partition_from_simplices(k, n, communities)).q;
    }, py::arg("complex"), py::arg("n"), py::arg("communities"));
    m.def("detect_communities", [](const sqw::SimplicialComplex& k, int n, const std::string& method,
                                   std::size_t time_steps, const std::string& threshold, const std::string& coin_order) {
        sqw::DetectionOptions options;
        if (method != "finite" && method != "spectral") throw sqw::InvalidParameter("method must be 'finite' or 'spectral'");
        if (threshold != "strict" && threshold != "geq") throw sqw::InvalidParameter("threshold must be 'strict' or 'geq'");
        options.estimator = method == "spectral" ? sqw::Estimator::spectral : sqw::Estimator::finite;
        options.time_steps = time_steps;
        options.threshold = threshold == "strict" ? sqw::Threshold::strict : sqw::Threshold::at_least;
        options.ordering = parse_ordering(coin_order);
        return communities_to_list(k, sqw::detect_communities(k, n, options));
    }, py::arg("complex"), py::arg("n"), py::arg("method") = "finite", py::arg("time_steps") = 100,
       py::arg("threshold") = "geq", py::arg("coin_order") = "face");
}
