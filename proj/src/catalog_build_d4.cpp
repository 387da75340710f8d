#include "catalog_build.hpp"

namespace supint::build {

void add_d4(Catalog& c) {
    (void)c; // records appended as the transcription proceeds
}

} // namespace supint::build
