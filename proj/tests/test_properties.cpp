#include <doctest.h>

#include "properties.hpp"

TEST_CASE("module properties") {
    for (const auto& p : burgetree::props::all_properties()) {
        SUBCASE((p.module + ": " + p.name).c_str()) {
            const std::string failure = p.run();
            INFO(failure);
            CHECK(failure.empty());
        }
    }
}
