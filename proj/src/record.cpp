#include "surround/record.hpp"

#include <cstdint>

#include "surround/errors.hpp"

namespace surround {

std::string variant_name(Variant v) {
    return v == Variant::surround ? "surround" : "capture";
}

std::string mode_name(RefineMode m) {
    return m == RefineMode::worklist ? "worklist" : "faithful";
}

Variant variant_from_name(const std::string& name) {
    if (name == "surround") return Variant::surround;
    if (name == "capture") return Variant::capture;
    throw parse_error("unknown game variant: " + name);
}

RefineMode mode_from_name(const std::string& name) {
    if (name == "worklist") return RefineMode::worklist;
    if (name == "faithful") return RefineMode::faithful;
    throw parse_error("unknown refine mode: " + name);
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

nlohmann::json to_json(const ResultRecord& rec) {
    nlohmann::json trials = nlohmann::json::array();
    for (const KTrial& t : rec.result.trials) {
        trials.push_back({{"k", t.k}, {"robber_wins", t.robber_wins}, {"seconds", t.seconds}});
    }
    nlohmann::json j{
        {"graph", rec.graph},
        {"variant", variant_name(rec.variant)},
        {"mode", mode_name(rec.mode)},
        {"number", rec.result.number},
        {"bracket", {{"lo", rec.result.bracket.lo}, {"hi", rec.result.bracket.hi}}},
        {"pinned_by_bounds", rec.result.pinned_by_bounds},
        {"k_tested", std::move(trials)},
    };
    if (!rec.digest.empty()) j["digest"] = rec.digest;
    return j;
}

nlohmann::json bracket_json(const Bracket& b, const LowerBounds& lo, const UpperBounds& hi) {
    nlohmann::json j{
        {"lo", b.lo},
        {"hi", b.hi},
        {"lower",
         {{"min_degree", lo.min_degree},
          {"clique_minus_one", lo.clique_minus_one},
          {"exact", lo.exact}}},
        {"upper",
         {{"vertex_cover", hi.vertex_cover},
          {"elim_width_plus_one", hi.elim_width_plus_one},
          {"exact", hi.exact}}},
    };
    if (lo.girth_rule) j["lower"]["girth_rule"] = *lo.girth_rule;
    return j;
}

}  // namespace surround
