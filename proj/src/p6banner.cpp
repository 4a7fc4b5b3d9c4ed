#include "ptcolor/p6banner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "ptcolor/listcolor.hpp"

namespace ptc {

namespace {

constexpr int kColors = 4;

int mod(int a, int m) { return ((a % m) + m) % m; }

std::uint8_t cbit(int i, int len) { return static_cast<std::uint8_t>(1u << mod(i, len)); }

bool anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (g.adjacent(x, y)) return false;
    return true;
}

bool complete_to(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (x != y && !g.adjacent(x, y)) return false;
    return true;
}

std::vector<int> join(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_star(const Graph& g, const std::vector<int>& vs) {
    if (vs.size() <= 1) return true;
    for (int center : vs) {
        bool ok = true;
        for (int x : vs) {
            if (x == center) continue;
            if (!g.adjacent(center, x)) ok = false;
            for (int y : vs)
                if (y != center && y != x && g.adjacent(x, y)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

ColorLists restrict_lists(const ColorLists& lists, const std::vector<int>& subset) {
    ColorLists out{lists.k, {}};
    for (int v : subset) out.lists.push_back(lists.lists[static_cast<std::size_t>(v)]);
    return out;
}

// Proper colorings of g[order] in lexicographic order (vertices colored in
// the listed order, colors ascending). With `symmetric`, lists are ignored
// (full palette) and only the first of the unused colors is tried, which
// enumerates the colorings up to a palette permutation.
void for_each_coloring(const Graph& g, const std::vector<int>& order, const ColorLists& lists, bool symmetric,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> colors(order.size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int max_used) -> bool {
        if (i == order.size()) return visit(colors);
        const int v = order[i];
        const int top = symmetric ? std::min(lists.k, max_used + 1) : lists.k;
        for (int c = 1; c <= top; ++c) {
            if (!symmetric && !lists.contains(v, c)) continue;
            bool clash = false;
            for (std::size_t j = 0; j < i && !clash; ++j) clash = colors[j] == c && g.adjacent(order[j], v);
            if (clash) continue;
            colors[i] = c;
            if (rec(i + 1, std::max(max_used, c))) return true;
        }
        colors[i] = 0;
        return false;
    };
    rec(0, 0);
}

Decision not_colorable(std::string reason) {
    Decision d;
    d.kind = Decision::Kind::NotColorable;
    d.reason = std::move(reason);
    return d;
}

Decision colorable(Coloring c) {
    Decision d;
    d.kind = Decision::Kind::Colorable;
    d.coloring = std::move(c);
    return d;
}

// A structural fact failed: hunt the forbidden subgraph (or K5) that its
// proof implies. Reaching the end means the fact failed on a genuine class
// member, which the theory rules out.
Decision explain_violation(const Graph& g, const std::string& fact, bool c5_forbidden) {
    if (auto v = class_violation(g, GraphClass::P6_banner_free)) {
        Decision d;
        d.kind = Decision::Kind::NotInClass;
        d.reason = fact;
        d.certificate = std::move(v);
        return d;
    }
    if (c5_forbidden) {
        if (auto c = find_induced(g, pattern::cycle(5), "C5")) {
            Decision d;
            d.kind = Decision::Kind::NotInClass;
            d.reason = fact + " (route requires a C5-free graph)";
            d.certificate = std::move(c);
            return d;
        }
    }
    if (has_clique(g, 5)) return not_colorable("K5");
    throw std::logic_error("structural fact failed on a (P6, banner)-free K5-free graph: " + fact);
}

std::vector<std::string> c5_gate(const Graph& g, const SClassification& s) {
    std::vector<std::string> out;
    auto fail = [&](std::string what) { out.push_back(std::move(what)); };
    const auto& s0 = s.s(0);

    if (!s.irregular.empty()) fail("a 2- or 3-vertex has a cycle neighborhood that is not a P2/P3");
    for (int i = 0; i < 5; ++i) {
        const std::string tag = "(v" + std::to_string(i) + ")";
        if (!g.is_clique(s.s3[static_cast<std::size_t>(i)])) fail("S3" + tag + " is not a clique");
        if (!g.is_clique(s.s4[static_cast<std::size_t>(i)])) fail("S4" + tag + " is not a clique");
        if (s.s3[static_cast<std::size_t>(i)].size() > 2) fail("|S3" + tag + "| > 2");
        if (s.s4[static_cast<std::size_t>(i)].size() > 2) fail("|S4" + tag + "| > 2");
    }

    // S0 versus the other buckets
    std::vector<int> s1_all, s2_all, s3_all, s4_all;
    for (int i = 0; i < 5; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        s1_all.insert(s1_all.end(), s.s1[ui].begin(), s.s1[ui].end());
        s2_all.insert(s2_all.end(), s.s2[ui].begin(), s.s2[ui].end());
        s3_all.insert(s3_all.end(), s.s3[ui].begin(), s.s3[ui].end());
        s4_all.insert(s4_all.end(), s.s4[ui].begin(), s.s4[ui].end());
    }
    if (!anticomplete(g, s0, join({&s1_all, &s2_all, &s4_all})))
        fail("S0 is not anti-complete to S1 u S2 u S4");
    if (!s0.empty()) {
        VertexSet s3set = VertexSet::from(g.order(), s3_all);
        for (const auto& comp : g.components(VertexSet::from(g.order(), s0))) {
            VertexSet first = g.neighbors(comp.front()) & s3set;
            for (int a : comp)
                if (!((g.neighbors(a) & s3set) == first)) {
                    fail("an S0 component has non-uniform S3 neighborhoods");
                    break;
                }
        }
    }

    // S1 buckets among themselves
    for (int i = 0; i < 5; ++i) {
        const auto& a = s.s1[static_cast<std::size_t>(i)];
        const auto& two = s.s1[static_cast<std::size_t>(mod(i + 2, 5))];
        const auto& one = s.s1[static_cast<std::size_t>(mod(i + 1, 5))];
        const std::string tag = "(v" + std::to_string(i) + ")";
        if (!complete_to(g, a, two)) fail("S1" + tag + " not complete to S1(v" + std::to_string(mod(i + 2, 5)) + ")");
        if (!anticomplete(g, a, one)) fail("S1" + tag + " not anti-complete to S1(v" + std::to_string(mod(i + 1, 5)) + ")");
        if (!a.empty() && !two.empty() && (a.size() > 3 || two.size() > 3))
            fail("S1" + tag + " and S1(v" + std::to_string(mod(i + 2, 5)) + ") both nonempty with one larger than 3");
    }

    // S1 against S2
    for (int i = 0; i < 5; ++i) {
        const auto& a = s.s1[static_cast<std::size_t>(i)];
        const std::string tag = "(v" + std::to_string(i) + ")";
        for (int j = 0; j < 5; ++j)
            if (j != i && !anticomplete(g, a, s.s2[static_cast<std::size_t>(j)]))
                fail("S1" + tag + " meets S2(v" + std::to_string(j) + ")");
        bool neighbor_bucket = !s.s1[static_cast<std::size_t>(mod(i + 1, 5))].empty() ||
                               !s.s1[static_cast<std::size_t>(mod(i - 1, 5))].empty();
        if (neighbor_bucket && !anticomplete(g, a, s.s2[static_cast<std::size_t>(i)]))
            fail("S1" + tag + " meets S2" + tag + " although an adjacent S1 bucket is nonempty");
    }

    // lone S1 bucket: its S2 partner
    int nonempty = 0, only = -1;
    for (int i = 0; i < 5; ++i)
        if (!s.s1[static_cast<std::size_t>(i)].empty()) ++nonempty, only = i;
    if (nonempty == 1) {
        const auto& s2i = s.s2[static_cast<std::size_t>(only)];
        if (s2i.size() >= 3 && !anticomplete(g, s.s1[static_cast<std::size_t>(only)], s2i) && !is_star(g, s2i))
            fail("S2(v" + std::to_string(only) + ") is not a star");
    }
    return out;
}

class C5Route {
public:
    C5Route(const Graph& g, SClassification s) : g_(g), s_(std::move(s)) {
        for (int i = 0; i < 5; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            s1_.insert(s1_.end(), s_.s1[ui].begin(), s_.s1[ui].end());
            s2_.insert(s2_.end(), s_.s2[ui].begin(), s_.s2[ui].end());
        }
        std::sort(s1_.begin(), s1_.end());
        std::sort(s2_.begin(), s2_.end());
    }

    Decision run() {
        if (!g_.is_independent(s_.s(5))) return not_colorable("S5 not independent");
        if (auto gate = c5_gate(g_, s_); !gate.empty()) return explain_violation(g_, gate.front(), false);

        // base set: the cycle, then its 3- and 4-vertices
        std::vector<int> base = s_.cycle;
        for (int i = 0; i < 5; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            base.insert(base.end(), s_.s3[ui].begin(), s_.s3[ui].end());
            base.insert(base.end(), s_.s4[ui].begin(), s_.s4[ui].end());
        }
        std::optional<Coloring> found;
        const ColorLists full = ColorLists::full(g_.order(), kColors);
        for_each_coloring(g_, base, full, true, [&](const std::vector<int>& phi) {
            ++precolorings_;
            ColorLists lists = full;
            for (std::size_t i = 0; i < base.size(); ++i) lists.lists[static_cast<std::size_t>(base[i])] = color_bit(phi[i]);
            auto updated = propagate(g_, lists);
            if (!updated) return false;
            std::vector<int> color(static_cast<std::size_t>(g_.order()), 0);
            if (!extend_s0(*updated, color) || !extend_s1_s2(*updated, color)) return false;
            found = assemble(*updated, color);
            return true;
        });
        Decision d = found ? colorable(std::move(*found)) : not_colorable("no pre-coloring of the C5 base set extends");
        d.precolorings = precolorings_;
        return d;
    }

private:
    Coloring assemble(const ColorLists& lists, const std::vector<int>& color) const {
        Coloring out{kColors, color};
        for (int v = 0; v < g_.order(); ++v)
            if (out.colors[static_cast<std::size_t>(v)] == 0) {
                if (!lists.singleton(v)) throw std::logic_error("C5 route left a vertex undecided");
                out.colors[static_cast<std::size_t>(v)] = lists.single_color(v);
            }
        if (!is_proper(g_, out)) throw std::logic_error("C5 route assembled an improper coloring");
        return out;
    }

    void write(const std::vector<int>& subset, const Coloring& sub, std::vector<int>& color) const {
        for (std::size_t i = 0; i < subset.size(); ++i) color[static_cast<std::size_t>(subset[i])] = sub.colors[i];
    }

    // Each S0 component only sees pre-colored vertices outside itself, so it
    // is an independent list-coloring instance on at most three colors.
    bool extend_s0(const ColorLists& lists, std::vector<int>& color) const {
        const auto& s0 = s_.s(0);
        if (s0.empty()) return true;
        for (const auto& comp : g_.components(VertexSet::from(g_.order(), s0))) {
            VertexSet outside(g_.order());
            for (int a : comp) outside |= g_.neighbors(a);
            for (int a : comp) outside.reset(a);
            outside.for_each([&](int w) {
                if (!lists.singleton(w)) throw std::logic_error("S0 component attached to an undecided vertex");
            });
            auto sub = solve_exact(g_.induced(comp), restrict_lists(lists, comp));
            if (!sub) return false;
            write(comp, *sub, color);
        }
        return true;
    }

    // S1 (lists of at most three colors, exact solver) and S2 (lists of at
    // most two colors, 2-SAT) once no undecided S1 vertex sees an undecided
    // S2 vertex.
    bool finish_split(const ColorLists& lists, std::vector<int>& color) const {
        for (int a : s1_)
            for (int b : s2_)
                if (g_.adjacent(a, b) && !lists.singleton(a) && !lists.singleton(b))
                    throw std::logic_error("S1 and S2 still interact after branching");
        if (!s1_.empty()) {
            auto sub = solve_exact(g_.induced(s1_), restrict_lists(lists, s1_));
            if (!sub) return false;
            write(s1_, *sub, color);
        }
        if (!s2_.empty()) {
            auto sub = solve_two_lists(g_.induced(s2_), restrict_lists(lists, s2_));
            if (!sub) return false;
            write(s2_, *sub, color);
        }
        return true;
    }

    // Tries every list coloring of `subset`, propagates, then finishes.
    bool precolor_then_finish(const ColorLists& lists, const std::vector<int>& subset, std::vector<int>& color) const {
        if (subset.empty()) return finish_split(lists, color);
        bool ok = false;
        for_each_coloring(g_, subset, lists, false, [&](const std::vector<int>& phi) {
            ColorLists next = lists;
            for (std::size_t i = 0; i < subset.size(); ++i) next.lists[static_cast<std::size_t>(subset[i])] = color_bit(phi[i]);
            auto updated = propagate(g_, next);
            if (!updated) return false;
            std::vector<int> attempt = color;
            if (!finish_split(*updated, attempt)) return false;
            for (int v : join({&s1_, &s2_}))
                if (attempt[static_cast<std::size_t>(v)] == 0) attempt[static_cast<std::size_t>(v)] = updated->single_color(v);
            color = std::move(attempt);
            ok = true;
            return true;
        });
        return ok;
    }

    bool extend_s1_s2(const ColorLists& lists, std::vector<int>& color) const {
        std::uint8_t z = 0;
        for (int i = 0; i < 5; ++i)
            if (!s_.s1[static_cast<std::size_t>(i)].empty()) z |= cbit(i, 5);
        const int count = std::popcount(z);
        auto bucket = [&](int i) -> const std::vector<int>& { return s_.s1[static_cast<std::size_t>(mod(i, 5))]; };

        if (count == 0) return finish_split(lists, color);

        // center of three consecutive buckets, if they form a P3 on the cycle
        int p3_center = -1;
        if (count == 3)
            for (int i = 0; i < 5; ++i)
                if (z == (cbit(i - 1, 5) | cbit(i, 5) | cbit(i + 1, 5))) p3_center = i;
        bool adjacent_pair = false;
        if (count == 2)
            for (int i = 0; i < 5; ++i)
                if (z == (cbit(i, 5) | cbit(i + 1, 5))) adjacent_pair = true;

        if (count >= 4 || (count == 3 && p3_center < 0) || (count == 2 && !adjacent_pair)) {
            // every nonempty bucket has a nonempty bucket two steps away, so all are small
            return precolor_then_finish(lists, s1_, color);
        }
        if (count == 2) return finish_split(lists, color);
        if (count == 3) {
            return precolor_then_finish(lists, join({&bucket(p3_center - 1), &bucket(p3_center + 1)}), color);
        }
        // a single nonempty bucket S1(v_i)
        const int i = std::countr_zero(z);
        const auto& s2i = s_.s2[static_cast<std::size_t>(i)];
        if (s2i.size() <= 2) return precolor_then_finish(lists, s2i, color);
        if (anticomplete(g_, bucket(i), s2i)) return finish_split(lists, color);
        // S2(v_i) is a star with both of its cycle neighbors pre-colored: two colorings
        return precolor_then_finish(lists, s2i, color);
    }

    const Graph& g_;
    SClassification s_;
    std::vector<int> s1_, s2_;
    std::uint64_t precolorings_ = 0;
};

Decision with_routes(Decision d, std::string route) {
    d.routes.push_back(std::move(route));
    return d;
}

Decision decide_block(const Graph& b) {
    if (b.order() <= 2) {
        Coloring c{kColors, {}};
        for (int v = 0; v < b.order(); ++v) c.colors.push_back(v + 1);
        return with_routes(colorable(std::move(c)), "trivial");
    }
    if (has_clique(b, 5)) return with_routes(not_colorable("K5"), "k5");
    if (auto c5 = find_induced(b, pattern::cycle(5), "C5")) return with_routes(case_c5(b, c5->vertices), "c5");
    if (auto c7 = find_induced(b, pattern::c7_complement(), "C7bar")) return with_routes(case_c7bar(b, c7->vertices), "c7bar");
    auto c = k_coloring(b, kColors);
    return with_routes(c ? colorable(std::move(*c)) : not_colorable("perfect block needs more than 4 colors"), "perfect");
}

}  // namespace

std::string to_string(Decision::Kind k) {
    switch (k) {
        case Decision::Kind::Colorable: return "colorable";
        case Decision::Kind::NotColorable: return "not_colorable";
        case Decision::Kind::NotInClass: return "not_in_class";
    }
    return "?";
}

SClassification classify_against_cycle(const Graph& g, const std::vector<int>& cycle, CycleFlavor flavor) {
    const int len = flavor == CycleFlavor::C5 ? 5 : 7;
    const Graph pat = flavor == CycleFlavor::C5 ? pattern::cycle(5) : pattern::c7_complement();
    if (!validates(g, pat, cycle))
        throw std::invalid_argument(flavor == CycleFlavor::C5 ? "cycle does not induce C5" : "cycle does not induce the C7 complement");

    SClassification s;
    s.flavor = flavor;
    s.cycle = cycle;
    s.cycle_neighbors.assign(static_cast<std::size_t>(g.order()), 0);
    s.by_count.assign(static_cast<std::size_t>(len) + 1, {});
    std::vector<bool> on_cycle(static_cast<std::size_t>(g.order()), false);
    for (int v : cycle) on_cycle[static_cast<std::size_t>(v)] = true;

    for (int v = 0; v < g.order(); ++v) {
        if (on_cycle[static_cast<std::size_t>(v)]) continue;
        std::uint8_t m = 0;
        for (int i = 0; i < len; ++i)
            if (g.adjacent(v, cycle[static_cast<std::size_t>(i)])) m |= cbit(i, len);
        s.cycle_neighbors[static_cast<std::size_t>(v)] = m;
        const int cnt = std::popcount(m);
        s.by_count[static_cast<std::size_t>(cnt)].push_back(v);

        if (flavor == CycleFlavor::C7Complement) {
            if (cnt == 2)
                for (int i = 0; i < 7; ++i)
                    if (m == (cbit(i, 7) | cbit(i + 1, 7))) s.irregular.push_back(v);
            continue;
        }
        bool placed = cnt == 0 || cnt == 5;
        for (int i = 0; i < 5 && !placed; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (cnt == 1 && m == cbit(i, 5)) s.s1[ui].push_back(v), placed = true;
            else if (cnt == 2 && m == (cbit(i + 2, 5) | cbit(i - 2, 5))) s.s2[ui].push_back(v), placed = true;
            else if (cnt == 3 && m == (cbit(i - 1, 5) | cbit(i, 5) | cbit(i + 1, 5))) s.s3[ui].push_back(v), placed = true;
            else if (cnt == 4 && m == (0x1f & ~cbit(i, 5))) s.s4[ui].push_back(v), placed = true;
        }
        if (!placed) s.irregular.push_back(v);
    }
    return s;
}

Decision case_c7bar(const Graph& g, const std::vector<int>& cycle) {
    SClassification s = classify_against_cycle(g, cycle, CycleFlavor::C7Complement);
    if (!s.s(7).empty()) return not_colorable("a vertex sees the whole C7 complement");
    if (auto gate = audit_c7bar_claims(g, s); !gate.empty()) {
        if (!g.connected()) throw std::invalid_argument("case_c7bar expects a connected graph");
        return explain_violation(g, gate.front(), true);
    }

    std::optional<Coloring> found;
    std::uint64_t tried = 0;
    const ColorLists full = ColorLists::full(g.order(), kColors);
    for_each_coloring(g, cycle, full, true, [&](const std::vector<int>& phi) {
        ++tried;
        ColorLists lists = full;
        for (std::size_t i = 0; i < cycle.size(); ++i) lists.lists[static_cast<std::size_t>(cycle[i])] = color_bit(phi[i]);
        auto updated = propagate(g, lists);
        if (!updated) return false;
        for (int v = 0; v < g.order(); ++v)
            if (updated->list_size(v) > 2) throw std::logic_error("list of size > 2 after pre-coloring the C7 complement");
        found = solve_two_lists(g, *updated);
        return found.has_value();
    });
    Decision d = found ? colorable(std::move(*found)) : not_colorable("no 4-coloring of the C7 complement extends");
    d.precolorings = tried;
    return d;
}

Decision case_c5(const Graph& g, const std::vector<int>& cycle) {
    return C5Route(g, classify_against_cycle(g, cycle, CycleFlavor::C5)).run();
}

Decision solve4(const Graph& g) {
    if (auto v = class_violation(g, GraphClass::P6_banner_free)) {
        Decision d;
        d.kind = Decision::Kind::NotInClass;
        d.reason = "forbidden induced " + v->pattern_name;
        d.certificate = std::move(v);
        return d;
    }
    const BlockDecomposition decomp = blocks(g);
    std::vector<Coloring> per_block;
    Decision out;
    for (const auto& block : decomp.blocks) {
        Decision d = decide_block(g.induced(block));
        out.routes.insert(out.routes.end(), d.routes.begin(), d.routes.end());
        out.precolorings += d.precolorings;
        if (d.kind != Decision::Kind::Colorable) {
            d.routes = out.routes;
            d.precolorings = out.precolorings;
            if (d.certificate)
                for (int& v : d.certificate->vertices) v = block[static_cast<std::size_t>(v)];
            return d;
        }
        per_block.push_back(std::move(*d.coloring));
    }
    out.kind = Decision::Kind::Colorable;
    out.coloring = merge_block_colorings(g, decomp, per_block, kColors);
    return out;
}

std::vector<std::string> audit_c5_claims(const Graph& g, const SClassification& s) {
    std::vector<std::string> out = c5_gate(g, s);
    // with 2-connectivity and S5 independent: an S0 component with no S3
    // neighbor is complete to S5
    const auto& s0 = s.s(0);
    if (!s0.empty() && g.is_independent(s.s(5))) {
        std::vector<int> s3_all;
        for (const auto& b : s.s3) s3_all.insert(s3_all.end(), b.begin(), b.end());
        for (const auto& comp : g.components(VertexSet::from(g.order(), s0)))
            if (anticomplete(g, comp, s3_all) && (!complete_to(g, comp, s.s(5)) || s.s(5).size() < 2))
                out.push_back("an S0 component without S3 neighbors is not complete to at least two 5-vertices");
    }
    return out;
}

std::vector<std::string> audit_c7bar_claims(const Graph& g, const SClassification& s) {
    std::vector<std::string> out;
    if (!s.s(1).empty()) out.push_back("S1 nonempty for the C7 complement");
    if (!s.irregular.empty()) out.push_back("S2(v_i, v_i+1) nonempty for the C7 complement");
    if (!s.s(0).empty()) {
        out.push_back("S0 nonempty for the C7 complement");
        for (int i = 2; i <= 6; ++i)
            if (!anticomplete(g, s.s(0), s.s(i))) out.push_back("S0 meets S" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> audit_structure(const Graph& g, bool all_cycles) {
    std::vector<std::string> out;
    for (const auto& block : blocks(g).blocks) {
        if (block.size() < 5) continue;
        Graph b = g.induced(block);
        if (has_clique(b, 5)) continue;
        std::string where = "block of " + std::to_string(block.size()) + " vertices: ";
        bool any_c5 = false;
        for_each_induced(b, pattern::cycle(5), [&](const std::vector<int>& cyc) {
            any_c5 = true;
            for (auto& line : audit_c5_claims(b, classify_against_cycle(b, cyc, CycleFlavor::C5)))
                out.push_back(where + line);
            return !all_cycles;
        });
        if (any_c5) continue;
        if (auto c7 = find_induced(b, pattern::c7_complement())) {
            SClassification s = classify_against_cycle(b, c7->vertices, CycleFlavor::C7Complement);
            if (!s.s(7).empty()) continue;
            for (auto& line : audit_c7bar_claims(b, s)) out.push_back(where + line);
        }
    }
    return out;
}

}  // namespace ptc
