#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "rdpivot/config.hpp"
#include "rdpivot/error.hpp"

using namespace rd;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("configurations are validated and sorted") {
    const Configuration c({{1, 1, 0}, {0, 0, 0}});
    CHECK(c.modules().front() == Position{0, 0, 0});
    CHECK(c.contains({1, 1, 0}));
    CHECK(c.index_of({1, 1, 0}) == 1u);
    CHECK_FALSE(c.index_of({2, 0, 0}));
    CHECK(code_of([] { Configuration({}); }) == ErrorCode::EmptyConfiguration);
    CHECK(code_of([] { Configuration({{1, 0, 0}}); }) == ErrorCode::ParityViolation);
    CHECK(code_of([] { Configuration({{0, 0, 0}, {0, 0, 0}}); }) == ErrorCode::DuplicateModule);
}

TEST_CASE("editing helpers") {
    const Configuration c({{0, 0, 0}, {1, -1, 0}});
    CHECK(c.translated({1, 1, 0}).contains({2, 0, 0}));
    CHECK(c.relocated({1, -1, 0}, {1, 0, -1}).contains({1, 0, -1}));
    CHECK(code_of([&] { (void)c.relocated({5, 5, 0}, {0, 2, 0}); }) == ErrorCode::PositionNotInConfiguration);
    CHECK(c.without({0, 0, 0}).size() == 1);
    const Position extra[] = {{2, -2, 0}};
    CHECK(c.with(extra).size() == 3);
    CHECK(c.min_corner() == Position{0, -1, 0});
    CHECK(c.max_corner() == Position{1, 0, 0});
}

TEST_CASE("json round trip in both coordinate systems") {
    std::mt19937 rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto c = oracle::random_configuration(rng, 1 + i % 9);
        CHECK(parse_configuration(serialize_configuration(c)) == c);
        CHECK(parse_configuration(serialize_configuration(c, CoordSystem::Hex)) == c);
        CHECK(parse_configuration(serialize_configuration(c, CoordSystem::Xyz, true)) == c);
    }
}

TEST_CASE("serializer emits sorted xyz by default") {
    const Configuration c({{1, 1, 0}, {0, 0, 0}});
    CHECK(serialize_configuration(c) == R"({"coords":"xyz","modules":[[0,0,0],[1,1,0]]})");
}

TEST_CASE("parser rejects malformed input") {
    CHECK(code_of([] { parse_configuration("{"); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { parse_configuration(R"({"coords":"abc","modules":[[0,0,0]]})"); }) ==
          ErrorCode::MalformedInput);
    CHECK(code_of([] { parse_configuration(R"({"coords":"xyz","modules":[[0,0]]})"); }) == ErrorCode::MalformedInput);
    CHECK(code_of([] { parse_configuration(R"({"coords":"xyz","modules":[[1,0,0]]})"); }) ==
          ErrorCode::ParityViolation);
    CHECK(code_of([] { parse_configuration(R"({"coords":"xyz","modules":[]})"); }) == ErrorCode::EmptyConfiguration);
    CHECK(code_of([] { parse_configuration(R"({"coords":"xyz","modules":[[0,0,0],[4,0,0]]})", true); }) ==
          ErrorCode::Disconnected);
    CHECK_NOTHROW(parse_configuration(R"({"coords":"xyz","modules":[[0,0,0]],"note":"extra keys are fine"})"));
}

TEST_CASE("connectivity and cut vertices agree with the oracle") {
    std::mt19937 rng(2);
    for (int i = 0; i < 200; ++i) {
        auto c = oracle::random_configuration(rng, 2 + i % 12);
        CHECK(is_connected(c) == oracle::connected(oracle::cells_of(c)));
        const auto cuts = articulation_points(c);
        for (std::size_t k = 0; k < c.size(); ++k) {
            auto rest = oracle::cells_of(c);
            rest.erase(c.modules()[k]);
            CHECK(cuts[k] == !oracle::connected(rest));
            CHECK(is_connected_without(c, c.modules()[k]) == oracle::connected(rest));
        }
        // Dropping a random module may disconnect; both sides must agree.
        const auto cut = c.without(c.modules()[i % c.size()]);
        CHECK(is_connected(cut) == oracle::connected(oracle::cells_of(cut)));
    }
}

TEST_CASE("canonical forms ignore translation and, optionally, symmetry") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_configuration(rng, 1 + i % 8);
        const auto moved = c.translated({3, -1, 2});
        CHECK(canonicalize(moved) == canonicalize(c));
        const auto op = all_symmetries()[i % 12];
        CHECK(canonicalize_up_to_symmetry(c.transformed(op)) == canonicalize_up_to_symmetry(c));
        CHECK(canonicalize(c).modules().front() == Position{});
    }
}

TEST_CASE("occupancy grid answers membership and indices") {
    const Configuration c({{0, 0, 0}, {1, 1, 0}, {2, 0, 0}});
    const OccupancyGrid g(c.modules(), 2);
    CHECK(g.occupied({1, 1, 0}));
    CHECK_FALSE(g.occupied({1, -1, 0}));
    CHECK_FALSE(g.occupied({50, 50, 0}));
    CHECK(g.index({2, 0, 0}) == 2);
    CHECK(g.index({-40, 0, 0}) == -1);
}

TEST_CASE("error codes have stable kebab-case names") {
    CHECK(to_string(ErrorCode::ParityViolation) == "parity-violation");
    CHECK(to_string(ErrorCode::InputNotSingleLayer) == "input-not-single-layer");
    CHECK(to_string(ErrorCode::NoWitnessFound) == "no-witness-found");
}
