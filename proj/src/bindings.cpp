#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mimopnc/csv_io.hpp"
#include "mimopnc/harness.hpp"

namespace py = pybind11;
using namespace mimopnc;

PYBIND11_MODULE(_mimopnc, m) {
    m.doc() = "2x2 MIMO two-way relay detection schemes and BER harness";

    py::register_exception<DegenerateChannel>(m, "DegenerateChannel");
    py::register_exception<InvalidCoefficient>(m, "InvalidCoefficient");
    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NoCrossing>(m, "NoCrossing");

    py::class_<Vec2>(m, "Vec2")
        .def(py::init([](Cplx a, Cplx b) { return Vec2{a, b}; }), py::arg("a"), py::arg("b"))
        .def_readwrite("a", &Vec2::a)
        .def_readwrite("b", &Vec2::b);

    py::class_<Mat2>(m, "Mat2")
        .def(py::init([](Cplx h11, Cplx h12, Cplx h21, Cplx h22) {
                 return Mat2{h11, h12, h21, h22};
             }),
             py::arg("h11"), py::arg("h12"), py::arg("h21"), py::arg("h22"))
        .def_readwrite("h11", &Mat2::h11)
        .def_readwrite("h12", &Mat2::h12)
        .def_readwrite("h21", &Mat2::h21)
        .def_readwrite("h22", &Mat2::h22)
        .def("det", &Mat2::det);

    py::class_<QrFactors>(m, "QrFactors")
        .def_readonly("q", &QrFactors::q)
        .def_readonly("r", &QrFactors::r)
        .def("r11", &QrFactors::r11)
        .def("r12", &QrFactors::r12)
        .def("r22", &QrFactors::r22);

    m.def("qr_decompose", &qr_decompose, py::arg("h"));
    m.def("swap_columns", &swap_columns, py::arg("h"));
    m.def("apply_qh", &apply_qh, py::arg("factors"), py::arg("y"));

    py::enum_<DetectorId>(m, "DetectorId")
        .value("vblast_nc", DetectorId::vblast_nc)
        .value("vblast_pnc", DetectorId::vblast_pnc)
        .value("sorted_vblast_nc", DetectorId::sorted_vblast_nc)
        .value("sorted_vblast_pnc", DetectorId::sorted_vblast_pnc)
        .value("linear_zf_nc", DetectorId::linear_zf_nc)
        .value("ml_oracle", DetectorId::ml_oracle);

    m.def("detector_name", &detector_name);
    m.def("snr_to_sigma", [](double snr_db) {
        const NoiseParams p = snr_to_sigma(snr_db);
        return py::make_tuple(p.sigma, p.sigma_sq);
    });
    m.def("compute_k",
          [](double r11, Cplx r12) { return compute_k(r11, r12).k; },
          py::arg("r11"), py::arg("r12"));
    m.def("pnc_map", [](Cplx est, int k) {
        const BitPair b = pnc_map(est, k);
        return py::make_tuple(int(b.b_re), int(b.b_im));
    });

    m.def("detect",
          [](DetectorId id, const Vec2& y, const Mat2& h, double sigma) {
              const DetectorInput in{y, h, NoiseParams{sigma, sigma * sigma}};
              const BitPair b = run_detector(id, in).bits;
              return py::make_tuple(int(b.b_re), int(b.b_im));
          },
          py::arg("detector"), py::arg("y"), py::arg("h"), py::arg("sigma") = 0.0,
          "Hard decision on the XOR of the two transmitted bit pairs.");

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("snr_db_grid", &SimConfig::snr_db_grid)
        .def_readwrite("symbols_per_point", &SimConfig::symbols_per_point)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("detectors", &SimConfig::detectors)
        .def_readwrite("max_workers", &SimConfig::max_workers);

    py::class_<BerRecord>(m, "BerRecord")
        .def_readonly("detector", &BerRecord::detector)
        .def_readonly("snr_db", &BerRecord::snr_db)
        .def_readonly("bits_total", &BerRecord::bits_total)
        .def_readonly("bit_errors", &BerRecord::bit_errors)
        .def_readonly("ber", &BerRecord::ber)
        .def_readonly("degenerate_count", &BerRecord::degenerate_count)
        .def("__repr__", [](const BerRecord& r) {
            return "<BerRecord " + format_csv_row(r) + ">";
        });

    m.def("run_sweep", &run_sweep, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_point", &run_point, py::arg("config"), py::arg("snr_db"),
          py::call_guard<py::gil_scoped_release>());
    m.def("estimate_gap_db", &estimate_gap_db, py::arg("records"), py::arg("det_a"),
          py::arg("det_b"), py::arg("target_ber"));

    m.def("write_csv", &write_csv, py::arg("records"), py::arg("path"));
    m.def("read_csv", &read_csv, py::arg("path"));
}
