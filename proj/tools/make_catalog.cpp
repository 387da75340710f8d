// Regenerates the catalog data file from the in-source builders and prints
// its SHA-256, so the checked-in file can be pinned byte-for-byte.
#include <cstdio>
#include <string>

#include "supint/catalog.hpp"

int main(int argc, char** argv) {
    std::string out = argc > 1 ? argv[1] : "data/catalog.sup";
    supint::Catalog cat = supint::build_catalog();
    supint::save_catalog_file(cat, out);
    std::string text = supint::catalog_to_text(cat);
    std::printf("%s  %s  (%zu systems, %zu charts, %zu bytes)\n",
                supint::sha256_hex(text).c_str(), out.c_str(), cat.systems.size(),
                cat.charts.size(), text.size());
    return 0;
}
