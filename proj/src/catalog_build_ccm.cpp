#include "catalog_build.hpp"

namespace supint::build {

void add_ccm(Catalog& c) {
    (void)c; // records appended as the transcription proceeds
}

} // namespace supint::build
