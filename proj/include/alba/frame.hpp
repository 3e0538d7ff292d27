#pragma once
// Finite birelational frames (X, R, R') and admissible families.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alba {

using WorldSet = std::uint64_t;  // bit w is world w; frames have at most 64 worlds

struct FiniteFrame {
    int size = 1;
    // adjacency as world sets: r_succ[u] holds v iff R(u,v)
    std::vector<WorldSet> r_succ, r_pred, rp_succ, rp_pred;

    FiniteFrame() : FiniteFrame(1) {}
    explicit FiniteFrame(int n);

    // bit u*n+v of r_mask is R(u,v); same for rp_mask and R'
    static FiniteFrame from_masks(int n, std::uint64_t r_mask, std::uint64_t rp_mask);

    void add_r(int u, int v);
    void add_rp(int u, int v);
    bool r(int u, int v) const { return (r_succ[u] >> v) & 1; }
    bool rp(int u, int v) const { return (rp_succ[u] >> v) & 1; }
    WorldSet all() const { return size >= 64 ? ~WorldSet{0} : (WorldSet{1} << size) - 1; }
    std::vector<std::pair<int, int>> r_pairs() const;
    std::vector<std::pair<int, int>> rp_pairs() const;

    WorldSet r_image(WorldSet u) const;        // R[U]
    WorldSet rp_preimage(WorldSet u) const;    // R'^-1[U]

    friend bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
        return a.size == b.size && a.r_succ == b.r_succ && a.rp_succ == b.rp_succ;
    }
};

// Sets standing in for the clopens of a general frame.
struct AdmissibleFamily {
    std::vector<WorldSet> sets;  // sorted, no duplicates

    static AdmissibleFamily powerset(const FiniteFrame& f);
    // smallest family containing the generators with the required closure
    static AdmissibleFamily generated(const FiniteFrame& f, const std::vector<WorldSet>& generators);
    bool contains(WorldSet s) const;
};

// Reason the family fails its invariants, if it does.
std::optional<std::string> family_violation(const FiniteFrame& f, const AdmissibleFamily& fam);

// {"size": n, "R": [[u,v],...], "Rp": [[u,v],...], "family": [[w,...],...]}
std::string frame_to_json(const FiniteFrame& f, const AdmissibleFamily* fam = nullptr);
FiniteFrame frame_from_json(const std::string& text, std::optional<AdmissibleFamily>* fam = nullptr);

// All frames of size n, ordered by (R mask, R' mask); stops when fn returns false.
template <class Fn>
bool for_each_frame(int n, Fn&& fn) {
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t r = 0; r < count; ++r)
        for (std::uint64_t rp = 0; rp < count; ++rp)
            if (!fn(FiniteFrame::from_masks(n, r, rp))) return false;
    return true;
}

}  // namespace alba
