#include <iostream>

#include "facloc/check_suite.hpp"

int main() {
    return facloc::run_check_suite(std::cout) ? 0 : 1;
}
