#include <iostream>

#include "ctk/acceptance.hpp"

int main() {
    bool ok = ctk::acceptance::run_all(std::cout, /*quick=*/false);
    return ok ? 0 : 1;
}
