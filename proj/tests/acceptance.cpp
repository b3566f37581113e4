// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <string>

#include "oracles.hpp"
#include "rdpivot/rdpivot.hpp"

namespace {

using namespace rd;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr MoveModel kModels[] = {MoveModel::Restricted, MoveModel::Monkey};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            pass = false;
            detail << "failed: " << what;
        }
    }
};

Outcome fig5_super_rigid(const MoveCatalog& cat) {
    Outcome o;
    const auto fig5 = super_rigid_labeled();
    for (auto model : kModels) {
        const auto t0 = Clock::now();
        const auto v = is_super_rigid(fig5.config, cat, model);
        const double dt = seconds_since(t0);
        o.require(v.super_rigid, std::string(to_string(model)) + " verdict");
        o.require(dt < 1.0, std::string(to_string(model)) + " under 1 s");
        for (const char* label : {"1", "C"}) {
            const Position p = fig5.labels.at(label);
            bool sandwiched = false;
            for (const auto& m : v.modules)
                if (m.module == p) sandwiched = m.reason == Elimination::Sandwich;
            o.require(sandwiched, std::string("module ") + label + " eliminated by the sandwich rule");
        }
        o.detail << to_string(model) << " " << dt << " s; ";
    }
    return o;
}

Outcome fig5_component(const MoveCatalog& cat) {
    Outcome o;
    for (auto model : kModels) {
        const auto t0 = Clock::now();
        const auto stats = explore(super_rigid_config(), cat, model);
        const double dt = seconds_since(t0);
        o.require(stats.complete && stats.states == 1, std::string(to_string(model)) + " single state");
        o.require(dt < 1.0, std::string(to_string(model)) + " under 1 s");
        o.detail << to_string(model) << " " << stats.states << " state(s); ";
    }
    return o;
}

Outcome free_rigid(const MoveCatalog& cat) {
    Outcome o;
    const auto [a, b] = free_rigid_pair();
    for (auto model : kModels) {
        const std::string m(to_string(model));
        o.require(is_rigid(a, cat, model), m + " (a) rigid");
        const auto v = is_super_rigid(a, cat, model);
        o.require(!v.super_rigid, m + " (a) not super rigid");
        o.require(mobility(b, cat, model).count(MobilityVerdict::Mobile) > 0, m + " (b) has a mobile module");
        bool replayed = false;
        for (const auto& mod : v.modules) {
            if (!mod.witness) continue;
            const LegalMove mv{mod.witness->module, mod.witness->move};
            const auto& sup = mod.witness->superconfiguration;
            bool superset = true;
            for (auto p : a.modules()) superset = superset && sup.contains(p);
            if (superset && is_connected(sup) && is_legal(sup, mv)) {
                const auto after = apply_move(sup, mv);
                replayed = after.contains(mv.destination()) && !after.contains(mv.module);
            }
            break;
        }
        o.require(replayed, m + " witness replays as a legal move");
    }
    return o;
}

Outcome capped_roofs(const MoveCatalog& cat) {
    Outcome o;
    double worst = 0;
    for (int r = 1; r <= 3; ++r)
        for (int len = 2; len <= 4; ++len) {
            const std::string tag = "r=" + std::to_string(r) + " L=" + std::to_string(len);
            const auto t0 = Clock::now();
            const auto c = capped_roof(r, len);
            const auto rep = mobility(c, cat, MoveModel::Restricted);
            const double dt = seconds_since(t0);
            worst = std::max(worst, dt);
            o.require(rep.rigid(), tag + " rigid");
            o.require(dt < 10.0, tag + " under 10 s");
            const auto disk = roof(r, 0);
            std::size_t disconnecting = 0;
            for (const auto& m : rep.modules) {
                if (disk.contains(m.module)) {
                    int in_layer = 0;
                    for (std::size_t i = 0; i < 6; ++i) in_layer += disk.contains(m.module + kNeighborOffsets[i]);
                    if (in_layer == 6)
                        o.require(m.verdict == MobilityVerdict::Blocked, tag + " interior roof module blocked");
                } else {
                    o.require(m.verdict != MobilityVerdict::Mobile, tag + " path module immobile");
                    disconnecting += m.verdict == MobilityVerdict::Disconnecting;
                }
            }
            o.require(disconnecting > 0, tag + " some path modules only move by disconnecting");
        }
    o.detail << "slowest case " << worst << " s; ";
    return o;
}

Outcome sandwich_confinement(const MoveCatalog& cat) {
    Outcome o;
    const auto layout = sandwich_layout(roof(2, 0));
    for (auto model : kModels)
        o.require(layer_confinement(layout.config, layout.band, cat, model),
                  std::string(to_string(model)) + " one-step confinement");
    SearchLimits limits;
    limits.max_depth = 5;
    SearchOptions opts;
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = Clock::now();
    const auto stats = explore(layout.config, cat, MoveModel::Restricted, limits, opts, true);
    const auto reference = oracle::layer_histogram(layout.config);
    std::size_t escaped = 0;
    for (const auto& s : stats.visited) escaped += oracle::layer_histogram(s) != reference;
    o.require(escaped == 0, "no depth-5 state with a module outside its layer");
    o.detail << stats.states << " states to depth 5 in " << seconds_since(t0) << " s; ";
    return o;
}

Outcome catalog_integrity(const MoveCatalog& cat) {
    Outcome o;
    for (auto model : kModels)
        o.require(verify_sandwich_lemma(cat, model), std::string(to_string(model)) + " sandwich lemma");
    const auto r = check_catalog(cat);
    o.require(r.symmetry_failures == 0, "symmetry closure");
    o.require(r.reversal_failures == 0, "reversal closure");
    o.require(r.equivalence.all_match(), "2D slice matches the hexagonal catalog");
    o.detail << r.templates[0] << " restricted / " << r.templates[1] << " monkey templates; ";
    return o;
}

Outcome oracle_agreement(const MoveCatalog& cat) {
    Outcome o;
    std::mt19937 rng(7);
    std::size_t compared = 0;
    for (int i = 0; i < 500; ++i) {
        const auto c = oracle::random_configuration(rng, std::uniform_int_distribution<std::size_t>(1, 10)(rng));
        for (auto model : kModels) {
            std::vector<oracle::NaiveMove> lib;
            for (const auto& mv : legal_moves(c, cat, model)) lib.push_back({mv.module, mv.destination(), mv.move});
            std::sort(lib.begin(), lib.end());
            o.require(lib == oracle::naive_moves(c, cat, model), "legal moves on a random configuration");
            compared += lib.size();
        }
    }
    for (std::size_t n : {3u, 4u})
        for (auto model : kModels) {
            for (const auto& [shape, size] : oracle::component_sizes(n, cat, model)) {
                const auto stats = explore(Configuration(shape), cat, model);
                o.require(stats.complete && stats.states == size,
                          "component size, n=" + std::to_string(n) + " " + std::string(to_string(model)));
            }
        }
    o.detail << compared << " moves compared; ";
    return o;
}

Outcome reversibility(const MoveCatalog& cat) {
    Outcome o;
    std::mt19937 rng(11);
    int samples = 0;
    while (samples < 1000) {
        const auto model = kModels[samples % 2];
        const auto c = oracle::random_configuration(rng, std::uniform_int_distribution<std::size_t>(2, 10)(rng));
        const auto moves = legal_moves(c, cat, model);
        if (moves.empty()) continue;
        const auto& mv = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        const auto mid = apply_move(c, mv);
        const auto back = reverse_move(cat, mv);
        const bool ok = back && (back->move->model == MoveModel::Restricted || model == MoveModel::Monkey) &&
                        is_legal(mid, *back) && apply_move(mid, *back) == c;
        o.require(ok, "reverse move restores the configuration");
        ++samples;
    }
    return o;
}

Outcome superset_stability(const MoveCatalog& cat) {
    Outcome o;
    std::mt19937 rng(13);
    const auto fig5 = super_rigid_config();
    for (int i = 0; i < 1000; ++i) {
        const auto sup =
            oracle::random_superset(rng, fig5, std::uniform_int_distribution<std::size_t>(1, 15)(rng));
        for (auto model : kModels)
            for (auto p : fig5.modules())
                o.require(legal_moves_of(sup, p, cat, model).empty(), "fig5 module stays immobile in a superset");
    }
    return o;
}

}  // namespace

int main() {
    const auto& cat = MoveCatalog::builtin();
    const std::pair<const char*, std::function<Outcome(const MoveCatalog&)>> criteria[] = {
        {"fig5 super rigid under both models; modules 1 and C sandwiched", fig5_super_rigid},
        {"fig5 component is a single state under both models", fig5_component},
        {"fig6 pair: (a) rigid, not super rigid, witness replays; (b) mobile", free_rigid},
        {"capped roofs r in 1..3, L in 2..4 rigid; interior blocked, paths immobile", capped_roofs},
        {"radius-2 disk sandwich confined in one step and to depth 5", sandwich_confinement},
        {"catalog: sandwich lemma, symmetry and reversal closure, 2D slice", catalog_integrity},
        {"legal moves and n=3,4 components agree with naive oracles", oracle_agreement},
        {"1000 apply-then-reverse samples restore the configuration", reversibility},
        {"1000 random supersets leave every fig5 module immobile", superset_stability},
    };
    int failures = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check(cat);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("criterion %d: %s  %s  [%s]\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
