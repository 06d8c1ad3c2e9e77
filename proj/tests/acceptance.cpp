#include <iostream>
#include <numeric>

#include "su11/validation.hpp"

int main() {
    std::vector<int> ids(8);
    std::iota(ids.begin(), ids.end(), 1);
    const auto results = su11::run_criteria(ids);
    bool all = true;
    for (const auto& r : results) {
        std::cout << su11::format_result(r) << '\n';
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
