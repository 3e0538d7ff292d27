#include "alba/frame.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace alba {

FiniteFrame::FiniteFrame(int n) : size(n), r_succ(n), r_pred(n), rp_succ(n), rp_pred(n) {
    if (n < 1 || n > 64) throw std::invalid_argument("frame size must be between 1 and 64");
}

FiniteFrame FiniteFrame::from_masks(int n, std::uint64_t r_mask, std::uint64_t rp_mask) {
    FiniteFrame f(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int bit = u * n + v;
            if ((r_mask >> bit) & 1) f.add_r(u, v);
            if ((rp_mask >> bit) & 1) f.add_rp(u, v);
        }
    return f;
}

void FiniteFrame::add_r(int u, int v) {
    r_succ.at(u) |= WorldSet{1} << v;
    r_pred.at(v) |= WorldSet{1} << u;
}

void FiniteFrame::add_rp(int u, int v) {
    rp_succ.at(u) |= WorldSet{1} << v;
    rp_pred.at(v) |= WorldSet{1} << u;
}

namespace {

std::vector<std::pair<int, int>> pairs(const std::vector<WorldSet>& succ) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(succ.size()); ++u)
        for (int v = 0; v < static_cast<int>(succ.size()); ++v)
            if ((succ[u] >> v) & 1) out.emplace_back(u, v);
    return out;
}

}  // namespace

std::vector<std::pair<int, int>> FiniteFrame::r_pairs() const { return pairs(r_succ); }
std::vector<std::pair<int, int>> FiniteFrame::rp_pairs() const { return pairs(rp_succ); }

WorldSet FiniteFrame::r_image(WorldSet u) const {
    WorldSet out = 0;
    for (int w = 0; w < size; ++w)
        if ((u >> w) & 1) out |= r_succ[w];
    return out;
}

WorldSet FiniteFrame::rp_preimage(WorldSet u) const {
    WorldSet out = 0;
    for (int w = 0; w < size; ++w)
        if (rp_succ[w] & u) out |= WorldSet{1} << w;
    return out;
}

AdmissibleFamily AdmissibleFamily::powerset(const FiniteFrame& f) {
    if (f.size > 20) throw std::invalid_argument("powerset family is too large");
    AdmissibleFamily fam;
    for (WorldSet s = 0; s <= f.all(); ++s) fam.sets.push_back(s);
    return fam;
}

AdmissibleFamily AdmissibleFamily::generated(const FiniteFrame& f, const std::vector<WorldSet>& generators) {
    std::vector<WorldSet> sets{0, f.all()};
    for (WorldSet g : generators) sets.push_back(g & f.all());
    bool grew = true;
    while (grew) {
        grew = false;
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<WorldSet> add;
        for (WorldSet a : sets) {
            add.push_back(f.all() & ~a);
            add.push_back(f.rp_preimage(a));
            for (WorldSet b : sets) {
                add.push_back(a | b);
                add.push_back(a & b);
            }
        }
        for (WorldSet a : add)
            if (!std::binary_search(sets.begin(), sets.end(), a)) {
                sets.push_back(a);
                grew = true;
            }
    }
    return AdmissibleFamily{sets};
}

bool AdmissibleFamily::contains(WorldSet s) const { return std::binary_search(sets.begin(), sets.end(), s); }

std::optional<std::string> family_violation(const FiniteFrame& f, const AdmissibleFamily& fam) {
    if (!std::is_sorted(fam.sets.begin(), fam.sets.end()) ||
        std::adjacent_find(fam.sets.begin(), fam.sets.end()) != fam.sets.end())
        return "family must be sorted without duplicates";
    for (WorldSet a : fam.sets)
        if (a & ~f.all()) return "family member outside the frame";
    if (!fam.contains(0)) return "family lacks the empty set";
    if (!fam.contains(f.all())) return "family lacks the whole space";
    for (WorldSet a : fam.sets) {
        if (!fam.contains(f.all() & ~a)) return "family is not closed under complement";
        if (!fam.contains(f.rp_preimage(a))) return "family is not closed under R' preimage";
        for (WorldSet b : fam.sets) {
            if (!fam.contains(a | b)) return "family is not closed under union";
            if (!fam.contains(a & b)) return "family is not closed under intersection";
        }
    }
    return std::nullopt;
}

std::string frame_to_json(const FiniteFrame& f, const AdmissibleFamily* fam) {
    nlohmann::ordered_json j;
    j["size"] = f.size;
    j["R"] = nlohmann::ordered_json::array();
    for (auto [u, v] : f.r_pairs()) j["R"].push_back({u, v});
    j["Rp"] = nlohmann::ordered_json::array();
    for (auto [u, v] : f.rp_pairs()) j["Rp"].push_back({u, v});
    if (fam) {
        j["family"] = nlohmann::ordered_json::array();
        for (WorldSet s : fam->sets) {
            nlohmann::ordered_json m = nlohmann::ordered_json::array();
            for (int w = 0; w < f.size; ++w)
                if ((s >> w) & 1) m.push_back(w);
            j["family"].push_back(m);
        }
    }
    return j.dump();
}

FiniteFrame frame_from_json(const std::string& text, std::optional<AdmissibleFamily>* fam) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("frame file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer())
        throw std::invalid_argument("frame file: missing integer \"size\"");
    FiniteFrame f(j["size"].get<int>());
    auto edges = [&](const char* key, bool prime) {
        if (!j.contains(key)) return;
        for (const auto& e : j[key]) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument(std::string("frame file: bad pair in ") + key);
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= f.size || v >= f.size)
                throw std::invalid_argument(std::string("frame file: world out of range in ") + key);
            prime ? f.add_rp(u, v) : f.add_r(u, v);
        }
    };
    edges("R", false);
    edges("Rp", true);
    if (fam) {
        fam->reset();
        if (j.contains("family")) {
            AdmissibleFamily a;
            for (const auto& m : j["family"]) {
                WorldSet s = 0;
                for (const auto& w : m) {
                    int x = w.get<int>();
                    if (x < 0 || x >= f.size) throw std::invalid_argument("frame file: world out of range in family");
                    s |= WorldSet{1} << x;
                }
                a.sets.push_back(s);
            }
            std::sort(a.sets.begin(), a.sets.end());
            a.sets.erase(std::unique(a.sets.begin(), a.sets.end()), a.sets.end());
            *fam = a;
        }
    }
    return f;
}

}  // namespace alba
