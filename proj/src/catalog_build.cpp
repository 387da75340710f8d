#include "catalog_build.hpp"

namespace supint {

Catalog build_catalog() {
    Catalog c;
    c.version = 1;
    build::add_d1(c);
    build::add_d2(c);
    build::add_d3(c);
    build::add_d4(c);
    build::add_ccm(c);
    return c;
}

} // namespace supint
