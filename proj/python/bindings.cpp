#include <pybind11/pybind11.h>
PYBIND11_MODULE(supint_native, m) { m.doc() = "stub"; }
