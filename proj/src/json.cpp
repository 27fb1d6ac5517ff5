#include "bip/json.hpp"

#include <sstream>

namespace bip {

namespace {

json perm_list(const std::vector<Permutation>& perms)
{
    json a = json::array();
    for (const auto& p : perms)
        a.push_back(p.to_string());
    return a;
}

json pair_list(const std::vector<std::pair<int, int>>& pairs)
{
    json a = json::array();
    for (auto [x, y] : pairs)
        a.push_back({x, y});
    return a;
}

} // namespace

json to_json(const IntervalPoset& poset)
{
    return {{"order_kind", to_string(poset.order_kind)},
            {"w", poset.top.to_string()},
            {"elements", perm_list(poset.elements)},
            {"covers", pair_list(poset.covers)}};
}

json to_json(const Skeleton& sk)
{
    auto j = to_json(sk.poset());
    json degrees = json::object();
    for (std::size_t u = 0; u < sk.size(); ++u)
        degrees[sk[u].to_string()] = sk.degree(u);
    j["degrees"] = std::move(degrees);
    return j;
}

json to_json(const LabeledDag& g)
{
    return {{"n", g.rank()}, {"reduced", g.reduced()}, {"edges", pair_list(g.edges())}};
}

json to_json(const ThetaClass& c)
{
    return {{"w", c.w.to_string()}, {"bot", c.bot.to_string()}, {"top", c.top.to_string()},
            {"members", perm_list(c.members)}};
}

json to_json(const SmoothnessWitness& s)
{
    return {{"at_w", s.at_w}, {"tree", s.tree}, {"palindromic", s.palindromic}};
}

json face_vector_json(const Skeleton& sk)
{
    const auto fv = face_vector(sk);
    return {{"w", sk.w().to_string()}, {"dim", fv.dim},
            {"f", fv.f},
            {"h", fv.h},
            {"simple", is_simple_everywhere(sk)},
            {"smooth", to_json(smoothness_criteria(sk))}};
}

json to_json(const OracleEdges& e, const Permutation& w)
{
    return {{"w", w.to_string()}, {"vertices", perm_list(e.vertices)}, {"edges", pair_list(e.edges)}};
}

json to_json(const OracleFaces& f, const Permutation& w)
{
    json faces = json::array();
    for (const auto& face : f.lattice.faces) {
        json verts = json::array();
        for (int v : face.vertices)
            verts.push_back(f.vertices[static_cast<std::size_t>(v)].to_string());
        faces.push_back({{"dim", face.dim}, {"vertices", std::move(verts)}});
    }
    return {{"w", w.to_string()}, {"dim", f.lattice.dim}, {"f", f.lattice.f_vector()}, {"faces", std::move(faces)}};
}

json to_json(const SweepReport& r, bool timing)
{
    auto witnesses = [](const std::vector<Witness>& ws) {
        json a = json::array();
        for (const auto& w : ws) {
            json item = {{"w", w.w.to_string()}};
            for (const auto& [k, v] : w.args)
                item[k] = v;
            item["message"] = w.message;
            a.push_back(std::move(item));
        }
        return a;
    };
    json sampled = json::object();
    for (auto [n, k] : r.sampled)
        sampled[std::to_string(n)] = k == 0 ? json("exhaustive") : json(k);
    json j = {{"theorem", r.theorem},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"ranks", std::move(sampled)},
              {"instances", r.instances},
              {"seed", r.seed},
              {"workers", r.workers},
              {"pass", r.pass()},
              {"failures", witnesses(r.failures)},
              {"observations", witnesses(r.observations)}};
    if (timing)
        j["wall_ms"] = r.wall.count();
    return j;
}

std::string to_dot(const IntervalPoset& poset, const std::string& name)
{
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (const auto& e : poset.elements)
        os << "  \"" << e.to_string() << "\";\n";
    for (auto [lo, hi] : poset.covers)
        os << "  \"" << poset.elements[static_cast<std::size_t>(lo)].to_string() << "\" -> \""
           << poset.elements[static_cast<std::size_t>(hi)].to_string() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace bip
