// Compares the OpenMP block evaluator against the serial reference on the
// expensive exact-rational kernels (blockwise inversion and composition) and
// insists the results are bit-identical. Exit 1 on any mismatch.
#include <chrono>
#include <iostream>
#include <string>

#include "engine/cochain_ops.hpp"

using namespace conic;

namespace {

using Clock = std::chrono::steady_clock;

double run_timed(const std::function<void()>& body) {
    auto t0 = Clock::now();
    body();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct KernelRow {
    std::string name;
    double serial = 0, parallel = 0;
    bool identical = false;
};

void print_row(const KernelRow& r) {
    std::cout << r.name << ": serial " << r.serial << "s, parallel " << r.parallel
              << "s, speedup " << (r.parallel > 0 ? r.serial / r.parallel : 0.0) << "x, "
              << (r.identical ? "bit-identical" : "MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t dim = 3;
    int cutoff = 4;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--quick") {
            dim = 2;
            cutoff = 4;
        } else if (arg == "--full") {
            dim = 3;
            cutoff = 5;
        } else {
            std::cerr << "usage: bench [--quick|--full]\n";
            return 2;
        }
    }
    std::cout << "level-2 cochain, dim " << dim << ", cutoff " << cutoff << "\n";

    Cochain psi = random_cochain(2, dim, cutoff, 2024, false);
    bool all_ok = true;

    {
        KernelRow row{"blockwise inverse"};
        Cochain serial = Cochain::identity(2, dim, cutoff), parallel = serial;
        auto gen = [&](const MultiIndex& r) { return psi.block(r).inverse(); };
        row.serial = run_timed([&] { serial = Cochain(2, dim, cutoff, gen, false); });
        row.parallel = run_timed([&] { parallel = Cochain(2, dim, cutoff, gen, true); });
        row.identical = serial == parallel;
        all_ok = all_ok && row.identical;
        print_row(row);
    }
    {
        KernelRow row{"blockwise compose"};
        Cochain serial = Cochain::identity(2, dim, cutoff), parallel = serial;
        auto gen = [&](const MultiIndex& r) { return psi.block(r) * psi.block(r); };
        row.serial = run_timed([&] { serial = Cochain(2, dim, cutoff, gen, false); });
        row.parallel = run_timed([&] { parallel = Cochain(2, dim, cutoff, gen, true); });
        row.identical = serial == parallel;
        all_ok = all_ok && row.identical;
        print_row(row);
    }

    // The composite operation exercised hardest by the suites, parallel path.
    double d = run_timed([&] { (void)coboundary(psi); });
    std::cout << "coboundary (parallel path): " << d << "s\n";

    return all_ok ? 0 : 1;
}
