#include "ordalg/poset.hpp"

#include <algorithm>

namespace ordalg {

std::vector<int> to_indices(Bits s) {
    std::vector<int> out;
    for (Bits t = s; t; t &= t - 1) out.push_back(lowest(t));
    return out;
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxCarrier)
        throw CapExceeded("carrier larger than " + std::to_string(kMaxCarrier));
    for (size_t i = 0; i < labels_.size(); ++i)
        for (size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw DuplicateLabel(labels_[i]);
}

int Carrier::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

int Carrier::require(const std::string& label) const {
    int i = index_of(label);
    if (i < 0) throw ParseError(0, "unknown element label: " + label);
    return i;
}

Poset Poset::from_leq(int n, const std::vector<std::vector<bool>>& leq) {
    if (n > kMaxCarrier) throw CapExceeded("poset larger than " + std::to_string(kMaxCarrier));
    for (int x = 0; x < n; ++x)
        if (!leq[x][x]) throw NotAPoset("reflexive", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && leq[x][y] && leq[y][x]) throw NotAPoset("antisymmetric", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!leq[x][y]) continue;
            for (int z = 0; z < n; ++z)
                if (leq[y][z] && !leq[x][z]) throw NotAPoset("transitive", {x, y, z});
        }
    Poset p;
    p.n_ = n;
    p.up_.assign(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq[x][y]) p.up_[x] |= bit(y);
    p.finish();
    return p;
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& below) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) leq[x][x] = true;
    for (auto [x, y] : below) leq[x][y] = true;
    // Warshall closure, then hand to the validating constructor (which will
    // report the first antisymmetry violation if the input had a cycle).
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x) {
            if (!leq[x][k]) continue;
            for (int y = 0; y < n; ++y)
                if (leq[k][y]) leq[x][y] = true;
        }
    return from_leq(n, leq);
}

void Poset::finish() {
    down_.assign(n_, 0);
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (has(up_[x], y)) down_[y] |= bit(x);
    Bits all = full_mask(n_);
    top_.reset();
    bottom_.reset();
    for (int x = 0; x < n_; ++x) {
        if (down_[x] == all) top_ = x;
        if (up_[x] == all) bottom_ = x;
    }
}

Bits Poset::lower(Bits a) const {
    Bits out = full_mask(n_);
    for (Bits t = a; t; t &= t - 1) out &= down_[lowest(t)];
    return out;
}

Bits Poset::upper(Bits a) const {
    Bits out = full_mask(n_);
    for (Bits t = a; t; t &= t - 1) out &= up_[lowest(t)];
    return out;
}

std::optional<int> Poset::greatest(Bits a) const {
    for (Bits t = a; t; t &= t - 1) {
        int x = lowest(t);
        if ((a & ~down_[x]) == 0) return x; // everything in a sits below x
    }
    return std::nullopt;
}

std::optional<int> Poset::least(Bits a) const {
    for (Bits t = a; t; t &= t - 1) {
        int x = lowest(t);
        if ((a & ~up_[x]) == 0) return x;
    }
    return std::nullopt;
}

std::vector<int> Poset::maximal(Bits a) const {
    std::vector<int> out;
    for (Bits t = a; t; t &= t - 1) {
        int x = lowest(t);
        if ((a & up_[x] & ~bit(x)) == 0) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::minimal(Bits a) const {
    std::vector<int> out;
    for (Bits t = a; t; t &= t - 1) {
        int x = lowest(t);
        if ((a & down_[x] & ~bit(x)) == 0) out.push_back(x);
    }
    return out;
}

bool Poset::is_lattice() const {
    std::pair<int, int> w;
    std::string which;
    return is_lattice(w, which);
}

bool Poset::is_lattice(std::pair<int, int>& witness, std::string& which) const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!meet(x, y)) {
                witness = {x, y};
                which = "meet";
                return false;
            }
            if (!join(x, y)) {
                witness = {x, y};
                which = "join";
                return false;
            }
        }
    return true;
}

bool Poset::is_join_semilattice(std::pair<int, int>& witness) const {
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (!join(x, y)) {
                witness = {x, y};
                return false;
            }
    return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (x == y || !leq(x, y)) continue;
            // strictly between: z with x < z < y
            Bits between = up_[x] & down_[y] & ~bit(x) & ~bit(y);
            if (between == 0) out.emplace_back(x, y);
        }
    return out;
}

Poset Poset::dual() const {
    Poset p;
    p.n_ = n_;
    p.up_ = down_;
    p.finish();
    return p;
}

Poset Poset::restrict(Bits keep, std::vector<int>& map_out) const {
    map_out = to_indices(keep);
    int m = static_cast<int>(map_out.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) leq[i][j] = this->leq(map_out[i], map_out[j]);
    return from_leq(m, leq);
}

} // namespace ordalg
