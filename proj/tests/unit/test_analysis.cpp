#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "rdpivot/rdpivot.hpp"

using namespace rd;

namespace {
const MoveCatalog& cat() { return MoveCatalog::builtin(); }
constexpr MoveModel kModels[] = {MoveModel::Restricted, MoveModel::Monkey};
}  // namespace

TEST_CASE("mobility verdicts partition the modules consistently with the oracle") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_configuration(rng, 2 + i % 9);
        for (auto model : kModels) {
            const auto rep = mobility(c, cat(), model);
            REQUIRE(rep.modules.size() == c.size());
            const auto naive = oracle::naive_moves(c, cat(), model);
            for (const auto& m : rep.modules) {
                std::size_t n = 0;
                for (const auto& mv : naive) n += mv.source == m.module;
                CHECK((m.verdict == MobilityVerdict::Mobile) == (n > 0));
                CHECK(m.moves.size() == n);
                if (m.verdict == MobilityVerdict::Disconnecting) {
                    CHECK(m.fitting_templates > 0);
                    CHECK_FALSE(is_connected_without(c, m.module));
                }
                if (m.verdict == MobilityVerdict::Blocked) CHECK(m.fitting_templates == 0);
            }
            CHECK(rep.rigid() == naive.empty());
            CHECK(is_rigid(c, cat(), model) == naive.empty());
        }
    }
}

TEST_CASE("a straight line of three: the middle is blocked, the ends can move") {
    const Configuration line({{0, 0, 0}, {1, -1, 0}, {2, -2, 0}});
    const auto rep = mobility(line, cat(), MoveModel::Restricted);
    CHECK(rep.at({1, -1, 0}).verdict == MobilityVerdict::Blocked);
    CHECK(rep.at({0, 0, 0}).verdict == MobilityVerdict::Mobile);
    CHECK_THROWS_AS(rep.at({5, 5, 0}), Error);
}

TEST_CASE("fig5 is rigid and super rigid with the labelled modules sandwiched") {
    const auto fig5 = super_rigid_labeled();
    for (auto model : kModels) {
        CHECK(is_rigid(fig5.config, cat(), model));
        const auto v = is_super_rigid(fig5.config, cat(), model);
        CHECK(v.super_rigid);
        for (const auto& m : v.modules) {
            CHECK(m.reason != Elimination::Enabled);
            CHECK_FALSE(m.witness);
            if (m.reason == Elimination::Sandwich) {
                REQUIRE(m.sandwich_pair);
                CHECK(m.sandwich_pair->first == -m.sandwich_pair->second);
                CHECK(fig5.config.contains(m.module + m.sandwich_pair->first));
            }
            if (m.module == fig5.labels.at("C") || m.module == fig5.labels.at("1"))
                CHECK(m.reason == Elimination::Sandwich);
            if (m.module == fig5.labels.at("A") || m.module == fig5.labels.at("2"))
                CHECK(m.reason == Elimination::Covered);
        }
    }
}

TEST_CASE("covered verdict agrees with a direct template scan") {
    const auto g = super_rigid_config();
    for (auto model : kModels)
        for (auto m : g.modules()) {
            std::size_t open = 0;
            for (const auto& t : cat().full(model)) {
                bool free = true;
                for (auto e : t.empty) free = free && !g.contains(m + e);
                open += free;
            }
            CHECK(enabling_templates(g, m, cat(), model).size() == open);
        }
}

TEST_CASE("fig6 (a) is rigid but some superset frees a module; (b) moves") {
    const auto [a, b] = free_rigid_pair();
    for (auto model : kModels) {
        CHECK(is_rigid(a, cat(), model));
        CHECK_FALSE(is_rigid(b, cat(), model));
        const auto v = is_super_rigid(a, cat(), model);
        CHECK_FALSE(v.super_rigid);
        std::size_t witnesses = 0;
        for (const auto& m : v.modules) {
            if (!m.witness) continue;
            ++witnesses;
            const auto& sup = m.witness->superconfiguration;
            for (auto p : a.modules()) CHECK(sup.contains(p));
            CHECK(is_connected(sup));
            CHECK(is_legal(sup, LegalMove{m.witness->module, m.witness->move}));
        }
        CHECK(witnesses > 0);
    }
    // Adding the extra module of (b) to (a) is itself a witness.
    CHECK(b.size() == a.size() + 1);
}

TEST_CASE("witness construction fails cleanly when nothing can be enabled") {
    const auto g = super_rigid_config();
    const auto c = g.modules()[0];
    const auto& t = cat().full(MoveModel::Restricted)[0];
    if (enabling_templates(g, c, cat(), MoveModel::Restricted).empty())
        CHECK_THROWS_AS(witness_superconfiguration(g, c, t), Error);
}

TEST_CASE("a lone module is confined only when nothing fits") {
    // Tower of three; the top module can climb down or roll around.
    const Configuration tower({{0, 0, 0}, {1, 1, 0}, {2, 2, 0}});
    const LayerBand top{2, 2};
    CHECK_FALSE(band_escapes(tower, top, cat(), MoveModel::Restricted).empty());
    CHECK_FALSE(layer_confinement(tower, top, cat(), MoveModel::Restricted));
    for (const auto& mv : band_escapes(tower, top, cat(), MoveModel::Restricted)) {
        CHECK(top.contains(layer_of(mv.module)));
        CHECK_FALSE(top.contains(layer_of(mv.destination())));
    }
    // The whole configuration's layer range cannot be escaped downward or upward
    // past an empty band check on a band holding nothing.
    CHECK(layer_confinement(tower, LayerBand{10, 10}, cat(), MoveModel::Restricted));
}

TEST_CASE("sandwich lemma checker rejects a template with an unguarded axis") {
    auto t = cat().canonical(MoveModel::Restricted)[0];
    std::vector<MoveTemplate> ts{t};
    CHECK(sandwich_lemma_holds(ts));
    // Drop every empty cell on one axis except the target.
    for (std::size_t i = 0; i < 12; ++i) {
        auto u = t;
        const Offset d = kNeighborOffsets[i];
        std::erase_if(u.empty, [&](Offset e) { return (e == d || e == -d) && e != t.target; });
        if (u.empty.size() == t.empty.size()) continue;
        std::vector<MoveTemplate> one{u};
        const bool guarded = std::binary_search(u.empty.begin(), u.empty.end(), d) ||
                             std::binary_search(u.empty.begin(), u.empty.end(), -d);
        CHECK(sandwich_lemma_holds(one) == guarded);
    }
}

TEST_CASE("verdict names") {
    CHECK(to_string(MobilityVerdict::Disconnecting) == "disconnecting");
    CHECK(to_string(Elimination::Sandwich) == "sandwich");
}
