// One line per acceptance criterion; exits 1 if any criterion fails.

#include "bip/check.hpp"
#include "bip/cli.hpp"
#include "bip/faces.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace bip;

namespace {

struct Verdict
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void sweep(const SweepReport& r)
    {
        std::string what = r.theorem + ": " + std::to_string(r.failures.size()) + " failures";
        if (!r.failures.empty())
            what += " (first: w=" + r.failures.front().w.to_string() + ", " + r.failures.front().message + ")";
        require(r.pass(), what);
    }
};

SweepReport sweep(const std::string& id, int n, std::optional<long long> sample = {}, int workers = 1,
                  std::uint64_t seed = 1)
{
    CheckOptions o;
    o.n_max = n;
    o.sample = sample;
    o.workers = workers;
    o.seed = seed;
    return check(id, o);
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Verdict lattice()
{
    Verdict v;
    const auto t = std::chrono::steady_clock::now();
    v.sweep(sweep("lattice", 5));
    const double s = seconds_since(t);
    v.require(s <= 120, "took " + std::to_string(s) + " s");
    return v;
}

Verdict edges()
{
    Verdict v;
    const auto t = std::chrono::steady_clock::now();
    const auto r = sweep("edges", 5, 50);
    v.sweep(r);
    v.require(r.sampled.at(4) == 0 && r.sampled.at(5) >= 50, "coverage below 24 + 50");
    const double s = seconds_since(t);
    v.require(s <= 300, "took " + std::to_string(s) + " s");
    return v;
}

Verdict h_vectors()
{
    Verdict v;
    v.sweep(sweep("hvector", 5));
    std::vector<long long> eulerian(4, 0);
    for (const auto& x : all_permutations(4))
        ++eulerian[static_cast<std::size_t>(ascent_count(x))];
    v.require(eulerian == std::vector<long long>{1, 11, 11, 1}, "Eulerian count of S_4 is off");
    v.require(h_vector(Permutation::longest(4)).h == eulerian, "h(4321) differs from the Eulerian numbers");
    v.require(h_vector(Permutation::parse("231")).h == std::vector<long long>{1, 2, 1}, "h(231) != (1,2,1)");
    return v;
}

Verdict determinism()
{
    Verdict v;
    for (const std::string id : {"lattice", "mixed-meet", "two-faces", "degree-monotone", "non-revisiting"}) {
        const int n = std::min(5, theorem_info(id).max_rank);
        const auto a = sweep(id, n, 500, 1, 2024);
        const auto b = sweep(id, n, 500, 4, 2024);
        v.require(a.pass() == b.pass() && a.failures == b.failures && a.observations == b.observations &&
                      a.instances == b.instances,
                  id + " differs between 1 and 4 workers");
    }
    // The command line report must match byte for byte apart from the worker count.
    auto run_cli = [](const std::string& workers) {
        std::ostringstream out, err;
        bip::run({"check", "two-faces", "--seed", "5", "--workers", workers}, out, err);
        auto s = out.str();
        const auto pos = s.find("\"workers\":");
        return s.substr(0, pos);
    };
    v.require(run_cli("1") == run_cli("4"), "CLI reports differ between 1 and 4 workers");
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"lattice: P_w is a lattice with join Bot(Top u v Top v), n <= 5", lattice},
        {"edge ground truth: combinatorial edges equal hull edges, S_4 and 50 of S_5", edges},
        {"simplicity localization on S_6",
         [] {
             Verdict v;
             v.sweep(sweep("simple", 6));
             return v;
         }},
        {"degree monotonicity on S_5 and all of S_6",
         [] {
             Verdict v;
             v.sweep(sweep("degree-monotone", 6));
             return v;
         }},
        {"smoothness criteria agree on S_6",
         [] {
             Verdict v;
             v.sweep(sweep("smooth", 6));
             return v;
         }},
        {"h-vector double formula on S_5 plus fixed values", h_vectors},
        {"class structure on S_5",
         [] {
             Verdict v;
             v.sweep(sweep("classes", 5));
             return v;
         }},
        {"order preservation and isomorphism on S_5",
         [] {
             Verdict v;
             v.sweep(sweep("top-order", 5));
             return v;
         }},
        {"parabolic map on S_5 and mixed meet on S_4 plus 10^4 pairs of S_5",
         [] {
             Verdict v;
             v.sweep(sweep("parabolic", 5));
             const auto r = sweep("mixed-meet", 5, 10000);
             v.sweep(r);
             v.require(r.sampled.at(4) == 0 && r.sampled.at(5) == 10000, "mixed meet coverage is short");
             return v;
         }},
        {"path transfer and edge injection on S_5",
         [] {
             Verdict v;
             v.sweep(sweep("path-transfer", 5));
             v.sweep(sweep("injection", 5));
             return v;
         }},
        {"two-face classification on S_4",
         [] {
             Verdict v;
             v.sweep(sweep("two-faces", 4));
             return v;
         }},
        {"directional simplicity and face counts on S_4",
         [] {
             Verdict v;
             v.sweep(sweep("faces", 4));
             return v;
         }},
        {"determinism across worker counts", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t = std::chrono::steady_clock::now();
        const auto v = criteria[i].second();
        failed += !v.ok;
        std::printf("criterion %2zu %s  %s  (%.1f s)%s%s\n", i + 1, v.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds_since(t), v.detail.empty() ? "" : "  ", v.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
