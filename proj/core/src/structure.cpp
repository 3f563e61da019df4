#include "ordalg/structure.hpp"

namespace ordalg {

std::string render_witness(const Carrier& c, const std::vector<int>& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += w[i] >= 0 && w[i] < c.size() ? c.label(w[i]) : std::to_string(w[i]);
    }
    out += ")";
    return out;
}

Poset induced_poset(const std::vector<std::vector<int>>& star, int one) {
    int n = static_cast<int>(star.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) leq[x][y] = star[x][y] == one;
    return Poset::from_leq(n, leq);
}

Structure::Structure(Carrier carrier, Poset poset, std::vector<std::vector<int>> star,
                     int one, std::vector<int> comp)
    : carrier_(std::move(carrier)), poset_(std::move(poset)), one_(one) {
    int n = poset_.size();
    if (carrier_.size() != n) throw MissingTable("carrier size differs from order size");
    if (!poset_.top() || *poset_.top() != one_) throw NoTop();
    if (!star.empty()) set_star(std::move(star));
    if (!comp.empty()) set_comp(std::move(comp));
}

void Structure::set_star(std::vector<std::vector<int>> t) {
    int n = size();
    if (static_cast<int>(t.size()) != n) throw MissingTable("binary table row count");
    for (auto& row : t) {
        if (static_cast<int>(row.size()) != n) throw MissingTable("binary table row length");
        for (int v : row)
            if (v < 0 || v >= n) throw MissingTable("binary table entry out of range");
    }
    star_ = std::move(t);
}

void Structure::set_comp(std::vector<int> t) {
    int n = size();
    if (static_cast<int>(t.size()) != n) throw MissingTable("complement table length");
    for (int v : t)
        if (v < 0 || v >= n) throw MissingTable("complement entry out of range");
    comp_ = std::move(t);
}

std::optional<int> Structure::cone_inf(int a, int b, const std::vector<int>& extra) const {
    // Greatest element of lower( upper(a, b) ∪ extra ): everything below all
    // common upper bounds of a and b, and below each extra element.
    Bits low = poset_.lower(poset_.up(a) & poset_.up(b));
    for (int e : extra) low &= poset_.down(e);
    return poset_.greatest(low);
}

Verdict Structure::order_agrees_with_table() const {
    if (!has_star()) throw MissingComponent("binary table");
    int n = size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool by_table = star_[x][y] == one_;
            if (by_table != poset_.leq(x, y)) {
                std::string d = "order and table disagree at " +
                                render_witness(carrier_, {x, y}) + ": table gives " +
                                (by_table ? "below" : "not below") + ", order gives " +
                                (by_table ? "not below" : "below");
                return Verdict::fail("order-table-agreement", {x, y}, d);
            }
        }
    return Verdict::ok();
}

} // namespace ordalg
