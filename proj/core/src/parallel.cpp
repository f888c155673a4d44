#include "modspace/parallel.hpp"

#include <cstdlib>
#include <string>

namespace modspace {

int thread_budget() {
    if (const char* env = std::getenv("MODSPACE_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) return 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

}  // namespace modspace
