#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "sdc/cli.hpp"

int main(int argc, char** argv)
{
    if (const char* t = std::getenv("SDC_THREADS")) {
        int n = std::atoi(t);
        if (n > 0)
            omp_set_num_threads(n);
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return sdc::run_command(args, std::cout, std::cerr);
}
