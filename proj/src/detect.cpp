#include "ptcolor/detect.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ptc {

namespace pattern {

Graph path(int t) {
    if (t < 1) throw std::invalid_argument("path pattern needs t >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    return Graph(t, es);
}

Graph cycle(int l) {
    if (l < 3) throw std::invalid_argument("cycle pattern needs length >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < l; ++i) es.emplace_back(i, (i + 1) % l);
    return Graph(l, es);
}

Graph complete(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph(k, es);
}

Graph banner() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

Graph c7_complement() { return cycle(7).complement(); }

}  // namespace pattern

bool validates(const Graph& host, const Graph& pattern, const std::vector<int>& vertices) {
    const int h = pattern.order();
    if (static_cast<int>(vertices.size()) != h) return false;
    for (int i = 0; i < h; ++i) {
        if (vertices[static_cast<std::size_t>(i)] < 0 || vertices[static_cast<std::size_t>(i)] >= host.order()) return false;
        for (int j = i + 1; j < h; ++j) {
            int a = vertices[static_cast<std::size_t>(i)], b = vertices[static_cast<std::size_t>(j)];
            if (a == b) return false;
            if (host.adjacent(a, b) != pattern.adjacent(i, j)) return false;
        }
    }
    return true;
}

namespace {

class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& pattern, const std::function<bool(const std::vector<int>&)>& visit)
        : host_(host), pattern_(pattern), visit_(visit) {}

    bool run() {
        image_.assign(static_cast<std::size_t>(pattern_.order()), -1);
        return extend(0, host_.all());
    }
    const std::vector<int>& image() const { return image_; }

private:
    bool extend(int i, const VertexSet& unused) {
        if (i == pattern_.order()) return visit_(image_);
        VertexSet cand = unused;
        for (int j = 0; j < i && cand.any(); ++j) {
            const VertexSet& nb = host_.neighbors(image_[static_cast<std::size_t>(j)]);
            if (pattern_.adjacent(i, j)) cand &= nb;
            else cand -= nb;
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            image_[static_cast<std::size_t>(i)] = v;
            VertexSet rest = unused;
            rest.reset(v);
            if (extend(i + 1, rest)) return true;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<int> image_;
};

class PathSearch {
public:
    PathSearch(const Graph& host, int t, const VertexSet& within) : host_(host), t_(t), within_(within) {}

    bool run() {
        path_.clear();
        for (int s = within_.first(); s >= 0; s = within_.next(s)) {
            path_.assign(1, s);
            if (extend(VertexSet(host_.order()))) return true;
        }
        return false;
    }
    const std::vector<int>& path() const { return path_; }

private:
    // `blocked` is the union of closed neighborhoods of all path vertices but the last
    bool extend(const VertexSet& blocked) {
        if (static_cast<int>(path_.size()) == t_) return true;
        int last = path_.back();
        VertexSet cand = host_.neighbors(last) & within_;
        cand -= blocked;
        if (cand.empty()) return false;
        VertexSet next_blocked = blocked | host_.neighbors(last);
        next_blocked.set(last);
        for (int w = cand.first(); w >= 0; w = cand.next(w)) {
            path_.push_back(w);
            if (extend(next_blocked)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& host_;
    int t_;
    const VertexSet& within_;
    std::vector<int> path_;
};

// Maximum clique by branch and bound; greedy coloring of the candidate set
// bounds how much a branch can still add.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int target) : g_(g), target_(target) {}

    std::vector<int> run() {
        std::vector<int> current;
        expand(current, g_.all());
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    bool done() const { return target_ > 0 && static_cast<int>(best_.size()) >= target_; }

    void expand(std::vector<int>& current, VertexSet cand) {
        // greedy sequential coloring: order[] with color bound[]
        std::vector<int> order, bound;
        VertexSet uncolored = cand;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            VertexSet avail = uncolored;
            while (avail.any()) {
                int v = avail.first();
                avail.reset(v);
                avail -= g_.neighbors(v);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            int limit = static_cast<int>(current.size()) + bound[static_cast<std::size_t>(i)];
            if (limit <= static_cast<int>(best_.size())) return;
            if (target_ > 0 && limit < target_) return;
            int v = order[static_cast<std::size_t>(i)];
            current.push_back(v);
            VertexSet next = cand & g_.neighbors(v);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            if (done()) return;
            cand.reset(v);
        }
    }

    const Graph& g_;
    int target_;
    std::vector<int> best_;
};

}  // namespace

std::optional<InducedCertificate> find_induced(const Graph& host, const Graph& pattern, std::string name) {
    if (pattern.order() > host.order()) return std::nullopt;
    const std::function<bool(const std::vector<int>&)> stop = [](const std::vector<int>&) { return true; };
    InducedSearch search(host, pattern, stop);
    if (!search.run()) return std::nullopt;
    return InducedCertificate{std::move(name), search.image()};
}

void for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const std::vector<int>&)>& visit) {
    if (pattern.order() > host.order()) return;
    InducedSearch(host, pattern, visit).run();
}

std::optional<InducedCertificate> find_induced_path(const Graph& host, int t, const VertexSet& within) {
    if (t < 1) throw std::invalid_argument("find_induced_path: t must be at least 1");
    PathSearch search(host, t, within);
    if (!search.run()) return std::nullopt;
    return InducedCertificate{"P" + std::to_string(t), search.path()};
}

std::optional<InducedCertificate> find_induced_path(const Graph& host, int t) {
    return find_induced_path(host, t, host.all());
}

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

std::vector<int> max_clique(const Graph& g) { return CliqueSearch(g, 0).run(); }

std::optional<InducedCertificate> has_clique(const Graph& g, int k) {
    if (k <= 0) return InducedCertificate{"K" + std::to_string(k), {}};
    auto c = CliqueSearch(g, k).run();
    if (static_cast<int>(c.size()) < k) return std::nullopt;
    c.resize(static_cast<std::size_t>(k));
    return InducedCertificate{"K" + std::to_string(k), c};
}

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::P6_banner_free: return "P6_banner_free";
        case GraphClass::P6_free: return "P6_free";
        case GraphClass::P7_free: return "P7_free";
    }
    return "?";
}

GraphClass parse_graph_class(const std::string& s) {
    if (s == "P6_banner_free") return GraphClass::P6_banner_free;
    if (s == "P6_free") return GraphClass::P6_free;
    if (s == "P7_free") return GraphClass::P7_free;
    throw std::invalid_argument("unknown graph class: " + s);
}

std::optional<InducedCertificate> class_violation(const Graph& g, GraphClass c) {
    switch (c) {
        case GraphClass::P7_free: return find_induced_path(g, 7);
        case GraphClass::P6_free: return find_induced_path(g, 6);
        case GraphClass::P6_banner_free:
            if (auto p = find_induced_path(g, 6)) return p;
            return find_induced(g, pattern::banner(), "banner");
    }
    return std::nullopt;
}

Graph pattern_by_name(const std::string& name) {
    if (name == "banner") return pattern::banner();
    if (name == "C7bar") return pattern::c7_complement();
    if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(name.substr(1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == name.size() - 1 && x >= 1) {
            if (name[0] == 'P') return pattern::path(x);
            if (name[0] == 'C') return pattern::cycle(x);
            return pattern::complete(x);
        }
    }
    throw std::invalid_argument("unknown pattern: " + name);
}

}  // namespace ptc
