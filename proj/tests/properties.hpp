#pragma once

#include <functional>
#include <string>
#include <vector>

namespace burgetree::props {

// A property returns "" when it holds, otherwise a description of the first counterexample.
struct Property {
    std::string module;
    std::string name;
    std::function<std::string()> run;
};

const std::vector<Property>& all_properties();

}  // namespace burgetree::props
