#include "rdpivot/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "moves_internal.hpp"
#include "rdpivot/error.hpp"

namespace rd {

std::string_view to_string(SearchOutcome o) noexcept {
    switch (o) {
        case SearchOutcome::Reached: return "reached";
        case SearchOutcome::Exhausted: return "exhausted";
        case SearchOutcome::LimitHit: return "limit_hit";
    }
    return "unknown";
}

SearchLimits parse_limits(std::string_view text) {
    SearchLimits lim;
    if (text.empty()) return lim;
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "limits must be states:depth:seconds");
    auto number = [](std::string_view s, auto& out) {
        if (s.empty()) return;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || ptr != s.data() + s.size() || out <= 0)
            throw Error(ErrorCode::InvalidArgument, "limit '" + std::string(s) + "' is not a positive number");
    };
    number(parts[0], lim.max_states);
    number(parts[1], lim.max_depth);
    number(parts[2], lim.max_seconds);
    return lim;
}

namespace {

using Clock = std::chrono::steady_clock;

struct KeyHash {
    std::size_t operator()(const Configuration& c) const noexcept {
        std::size_t h = c.size();
        PositionHash ph;
        for (auto p : c.modules()) h = h * 0x100000001B3ULL ^ ph(p);
        return h;
    }
};

Configuration key_of(const Configuration& c, bool symmetric) {
    return symmetric ? canonicalize_up_to_symmetry(c) : canonicalize(c);
}

std::vector<Configuration> successors(const Configuration& c, const MoveCatalog& catalog, MoveModel model,
                                      const SearchOptions& opt) {
    std::vector<Configuration> out;
    for (const auto& mv : detail::moves_unchecked(c, catalog, model, opt.moves))
        out.push_back(key_of(c.relocated(mv.module, mv.destination()), opt.symmetry_reduction));
    return out;
}

// Level-synchronous BFS. Expansion runs in parallel; insertion is sequential in
// frontier order, so the visited order never depends on scheduling.
class Bfs {
public:
    Bfs(const MoveCatalog& catalog, MoveModel model, SearchLimits limits, SearchOptions opt)
        : catalog_(catalog), model_(model), limits_(limits), opt_(opt), start_(Clock::now()) {}

    enum class Stop { None, Found, Limit };

    Stop run(const Configuration& s, const std::optional<Configuration>& goal) {
        insert(key_of(s, opt_.symmetry_reduction), -1, 0);
        if (goal && states_.front() == *goal) {
            found_ = 0;
            return Stop::Found;
        }
        std::size_t level_begin = 0;
        for (std::size_t depth = 0;; ++depth) {
            const std::size_t level_end = states_.size();
            if (level_begin == level_end) return Stop::None;
            if (depth >= limits_.max_depth || out_of_time()) return Stop::Limit;
            auto expanded = expand(level_begin, level_end);
            for (std::size_t i = level_begin; i < level_end; ++i) {
                for (auto& next : expanded[i - level_begin]) {
                    if (index_.count(next)) continue;
                    if (states_.size() >= limits_.max_states) return Stop::Limit;
                    insert(std::move(next), static_cast<std::ptrdiff_t>(i), depth + 1);
                    if (goal && states_.back() == *goal) {
                        found_ = states_.size() - 1;
                        return Stop::Found;
                    }
                }
            }
            level_begin = level_end;
        }
    }

    std::vector<std::size_t> path_to_found() const {
        std::vector<std::size_t> path;
        for (auto i = static_cast<std::ptrdiff_t>(found_); i >= 0; i = parent_[static_cast<std::size_t>(i)])
            path.push_back(static_cast<std::size_t>(i));
        std::reverse(path.begin(), path.end());
        return path;
    }

    const std::vector<Configuration>& states() const { return states_; }
    const std::vector<std::size_t>& depths() const { return depth_; }

private:
    void insert(Configuration c, std::ptrdiff_t parent, std::size_t depth) {
        index_.emplace(c, states_.size());
        states_.push_back(std::move(c));
        parent_.push_back(parent);
        depth_.push_back(depth);
    }

    bool out_of_time() const {
        return std::chrono::duration<double>(Clock::now() - start_).count() > limits_.max_seconds;
    }

    std::vector<std::vector<Configuration>> expand(std::size_t begin, std::size_t end) {
        std::vector<std::vector<Configuration>> out(end - begin);
        const unsigned workers = std::max(1u, std::min<unsigned>(opt_.threads, static_cast<unsigned>(end - begin)));
        auto work = [&](unsigned w) {
            for (std::size_t i = begin + w; i < end; i += workers)
                out[i - begin] = successors(states_[i], catalog_, model_, opt_);
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        return out;
    }

    const MoveCatalog& catalog_;
    MoveModel model_;
    SearchLimits limits_;
    SearchOptions opt_;
    Clock::time_point start_;
    std::vector<Configuration> states_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<std::size_t> depth_;
    std::unordered_map<Configuration, std::size_t, KeyHash> index_;
    std::size_t found_ = 0;
};

// Recovers concrete moves in s's frame that follow a chain of state keys.
std::vector<LegalMove> realize(const Configuration& s, const std::vector<Configuration>& keys,
                               const MoveCatalog& catalog, MoveModel model, const SearchOptions& opt) {
    std::vector<LegalMove> out;
    Configuration cur = s;
    for (std::size_t k = 1; k < keys.size(); ++k) {
        bool stepped = false;
        for (const auto& mv : detail::moves_unchecked(cur, catalog, model, opt.moves)) {
            auto next = cur.relocated(mv.module, mv.destination());
            if (key_of(next, opt.symmetry_reduction) == keys[k]) {
                out.push_back(mv);
                cur = std::move(next);
                stepped = true;
                break;
            }
        }
        if (!stepped) throw Error(ErrorCode::IllegalMove, "search path could not be replayed");
    }
    return out;
}

void check_inputs(const Configuration& s, const Configuration& t) {
    if (s.size() != t.size()) throw Error(ErrorCode::SizeMismatch, "start and target differ in module count");
    if (!is_connected(s) || !is_connected(t)) throw Error(ErrorCode::Disconnected, "search needs connected input");
}

}  // namespace

SearchResult reachable(const Configuration& s, const Configuration& t, const MoveCatalog& catalog, MoveModel model,
                       SearchLimits limits, SearchOptions options) {
    check_inputs(s, t);
    Bfs bfs(catalog, model, limits, options);
    const auto stop = bfs.run(s, key_of(t, options.symmetry_reduction));
    SearchResult r;
    r.states_explored = bfs.states().size();
    if (stop == Bfs::Stop::Found) {
        std::vector<Configuration> keys;
        for (auto i : bfs.path_to_found()) keys.push_back(bfs.states()[i]);
        r.outcome = SearchOutcome::Reached;
        r.moves = realize(s, keys, catalog, model, options);
    } else {
        r.outcome = stop == Bfs::Stop::None ? SearchOutcome::Exhausted : SearchOutcome::LimitHit;
    }
    return r;
}

SearchResult reachable_iddfs(const Configuration& s, const Configuration& t, const MoveCatalog& catalog,
                             MoveModel model, SearchLimits limits, SearchOptions options) {
    check_inputs(s, t);
    const auto goal = key_of(t, options.symmetry_reduction);
    const auto start = Clock::now();
    SearchResult r;
    std::vector<Configuration> path{key_of(s, options.symmetry_reduction)};
    bool stop = false;
    std::function<bool(std::size_t)> dfs = [&](std::size_t budget) -> bool {
        if (path.back() == goal) return true;
        if (budget == 0 || stop) return false;
        if (++r.states_explored >= limits.max_states ||
            std::chrono::duration<double>(Clock::now() - start).count() > limits.max_seconds) {
            stop = true;
            return false;
        }
        for (auto& next : successors(path.back(), catalog, model, options)) {
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            path.push_back(std::move(next));
            if (dfs(budget - 1)) return true;
            path.pop_back();
        }
        return false;
    };
    for (std::size_t depth = 0; depth <= limits.max_depth && !stop; ++depth) {
        if (dfs(depth)) {
            r.outcome = SearchOutcome::Reached;
            r.moves = realize(s, path, catalog, model, options);
            return r;
        }
        if (depth == std::numeric_limits<std::size_t>::max()) break;
    }
    r.outcome = SearchOutcome::LimitHit;
    return r;
}

ExploreStats explore(const Configuration& s, const MoveCatalog& catalog, MoveModel model, SearchLimits limits,
                     SearchOptions options, bool keep_states) {
    if (!is_connected(s)) throw Error(ErrorCode::Disconnected, "search needs connected input");
    Bfs bfs(catalog, model, limits, options);
    const auto stop = bfs.run(s, std::nullopt);
    ExploreStats st;
    st.states = bfs.states().size();
    st.complete = stop == Bfs::Stop::None;
    for (auto d : bfs.depths()) {
        if (st.depth_profile.size() <= d) st.depth_profile.resize(d + 1, 0);
        ++st.depth_profile[d];
    }
    if (keep_states) st.visited = bfs.states();
    return st;
}

Configuration replay(const Configuration& s, const std::vector<LegalMove>& moves, MoveOptions options) {
    Configuration cur = s;
    for (const auto& mv : moves) cur = apply_move(cur, mv, options);
    return cur;
}

std::string trace_json(const std::vector<LegalMove>& moves, bool pretty) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& mv : moves) {
        const auto d = mv.destination();
        out.push_back({{"source", {mv.module.x, mv.module.y, mv.module.z}},
                       {"target", {d.x, d.y, d.z}},
                       {"class", mv.move->move_class}});
    }
    return out.dump(pretty ? 1 : -1);
}

}  // namespace rd
