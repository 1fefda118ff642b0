#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covertroute {

using NodeId = int;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct SystemNode {
    NodeId id = 0;
    Point position;
    double noise_var = 1.0; // receiver noise variance, linear units
};

struct Warden {
    Point position;
    double noise_var = 1.0;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Network geometry and physics. Immutable after construction; safe to share
// read-only across parallel workers.
struct Scenario {
    double dimension = 0.0; // side length d of the [0,d]^2 area
    double alpha = 2.0;     // path-loss exponent
    std::vector<SystemNode> nodes; // includes Alice and Bob
    std::vector<Warden> wardens;
    NodeId source = 0;
    NodeId dest = 0;

    // Throws ValidationError with a field-level message on any invariant
    // violation.
    void validate() const;

    std::size_t index_of(NodeId id) const;
    const SystemNode& node(NodeId id) const { return nodes[index_of(id)]; }
};

// Seeded uniform placement: Alice at (0,0), Bob at (d,d), n_nodes relays and
// n_wardens wardens i.i.d. uniform on [0,d]^2. Relays and wardens draw from
// independent substreams of the seed, so the first v draws of either
// population are a prefix of the first v' draws for v < v' (nested sets).
Scenario generate_random(std::uint64_t seed, int n_nodes, int n_wardens,
                         double dimension, double alpha, double node_noise,
                         double warden_noise);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

} // namespace covertroute
