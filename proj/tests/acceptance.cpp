#include "tambara/acceptance.hpp"

#include <iostream>

int main() {
    int failed = 0;
    for (const auto& r : tambara::run_acceptance()) {
        std::cout << tambara::format_result(r) << "\n";
        failed += !r.pass;
    }
    return failed == 0 ? 0 : 1;
}
