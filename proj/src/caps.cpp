#include "rlab/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace rlab {

static Caps parse_env() {
    Caps caps;
    const char* env = std::getenv("RLAB_CAPS");
    if (!env) return caps;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (...) {
            continue;
        }
        if (value <= 0) continue;
        if (key == "dense") caps.dense_eigen = static_cast<int>(value);
        else if (key == "ball") caps.ball_vertices = value;
        else if (key == "alpha") caps.exact_alpha = static_cast<int>(value);
        else if (key == "walkq") caps.walk_q = static_cast<int>(value);
        else if (key == "nodes") caps.backtrack_nodes = value;
        else if (key == "mult") caps.multiplier = value;
        else if (key == "states") caps.quotient_states = value;
    }
    return caps;
}

const Caps& Caps::get() {
    static const Caps caps = parse_env();
    return caps;
}

} // namespace rlab
