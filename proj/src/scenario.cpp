#include "covertroute/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "covertroute/random.hpp"
#include "json.hpp"

namespace covertroute {

namespace {
constexpr std::uint64_t kRelayStreamTag = 1;
constexpr std::uint64_t kWardenStreamTag = 2;
} // namespace

void Scenario::validate() const {
    if (!(dimension > 0.0) || !std::isfinite(dimension))
        throw ValidationError("dimension must be positive and finite");
    if (!(alpha >= 2.0) || !std::isfinite(alpha))
        throw ValidationError("alpha < 2");
    if (nodes.size() < 2)
        throw ValidationError("scenario needs at least source and dest nodes");
    if (source == dest)
        throw ValidationError("source == dest");

    std::set<NodeId> ids;
    std::set<std::pair<double, double>> positions;
    for (const auto& n : nodes) {
        if (n.id < 0)
            throw ValidationError("node id must be non-negative");
        if (!ids.insert(n.id).second)
            throw ValidationError("duplicate node id " + std::to_string(n.id));
        if (!std::isfinite(n.position.x) || !std::isfinite(n.position.y))
            throw ValidationError("node position must be finite");
        if (!positions.insert({n.position.x, n.position.y}).second)
            throw ValidationError("node positions must be distinct");
        if (!(n.noise_var > 0.0))
            throw ValidationError("node noise_var must be > 0");
    }
    if (!ids.count(source))
        throw ValidationError("source id not present in nodes");
    if (!ids.count(dest))
        throw ValidationError("dest id not present in nodes");
    for (const auto& w : wardens) {
        if (!std::isfinite(w.position.x) || !std::isfinite(w.position.y))
            throw ValidationError("warden position must be finite");
        if (!(w.noise_var > 0.0))
            throw ValidationError("warden noise_var must be > 0");
    }
}

std::size_t Scenario::index_of(NodeId id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return i;
    throw ValidationError("unknown node id " + std::to_string(id));
}

Scenario generate_random(std::uint64_t seed, int n_nodes, int n_wardens,
                         double dimension, double alpha, double node_noise,
                         double warden_noise) {
    if (n_nodes < 0 || n_wardens < 0)
        throw ValidationError("node and warden counts must be >= 0");

    Scenario s;
    s.dimension = dimension;
    s.alpha = alpha;
    s.source = 0;
    s.dest = 1;
    s.nodes.push_back({0, {0.0, 0.0}, node_noise});                 // Alice
    s.nodes.push_back({1, {dimension, dimension}, node_noise});     // Bob

    Xoshiro256StarStar relay_rng(derive_seed(seed, kRelayStreamTag));
    for (int i = 0; i < n_nodes; ++i) {
        Point p{relay_rng.uniform(0.0, dimension),
                relay_rng.uniform(0.0, dimension)};
        s.nodes.push_back({2 + i, p, node_noise});
    }

    Xoshiro256StarStar warden_rng(derive_seed(seed, kWardenStreamTag));
    for (int k = 0; k < n_wardens; ++k) {
        Point p{warden_rng.uniform(0.0, dimension),
                warden_rng.uniform(0.0, dimension)};
        s.wardens.push_back({p, warden_noise});
    }

    s.validate();
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    nlohmann::json j;
    j["dimension"] = s.dimension;
    j["alpha"] = s.alpha;
    j["source"] = s.source;
    j["dest"] = s.dest;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : s.nodes)
        j["nodes"].push_back({{"id", n.id},
                              {"x", n.position.x},
                              {"y", n.position.y},
                              {"noise_var", n.noise_var}});
    j["wardens"] = nlohmann::json::array();
    for (const auto& w : s.wardens)
        j["wardens"].push_back({{"x", w.position.x},
                                {"y", w.position.y},
                                {"noise_var", w.noise_var}});
    return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("scenario parse error: ") + e.what());
    }
    Scenario s;
    try {
        s.dimension = j.at("dimension").get<double>();
        s.alpha = j.at("alpha").get<double>();
        s.source = j.at("source").get<NodeId>();
        s.dest = j.at("dest").get<NodeId>();
        for (const auto& n : j.at("nodes")) {
            s.nodes.push_back({n.at("id").get<NodeId>(),
                               {n.at("x").get<double>(), n.at("y").get<double>()},
                               n.at("noise_var").get<double>()});
        }
        for (const auto& w : j.at("wardens")) {
            s.wardens.push_back({{w.at("x").get<double>(), w.at("y").get<double>()},
                                 w.at("noise_var").get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("scenario field error: ") + e.what());
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& s, const std::string& path) {
    s.validate();
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write scenario file: " + path);
    out << scenario_to_json(s);
}

} // namespace covertroute
