#pragma once

#include <cstdint>
#include <vector>

namespace ptc {

class Graph;

/// Bit c-1 of a mask stands for color c.
using ColorMask = std::uint32_t;

constexpr ColorMask color_bit(int c) { return ColorMask{1} << (c - 1); }
constexpr ColorMask full_mask(int k) { return k >= 32 ? ~ColorMask{0} : (ColorMask{1} << k) - 1; }

/// Per-vertex candidate colors over the palette {1..k}. An empty list is a
/// representable, terminal (infeasible) state.
struct ColorLists {
    int k = 0;
    std::vector<ColorMask> lists;

    static ColorLists full(int n, int k) { return {k, std::vector<ColorMask>(static_cast<std::size_t>(n), full_mask(k))}; }

    int size() const { return static_cast<int>(lists.size()); }
    int list_size(int v) const;
    bool singleton(int v) const;
    /// The only color of a singleton list (undefined otherwise).
    int single_color(int v) const;
    bool contains(int v, int c) const { return lists[static_cast<std::size_t>(v)] & color_bit(c); }
    std::vector<int> colors_of(int v) const;
};

/// One color per vertex, colors in {1..k}.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    int size() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[static_cast<std::size_t>(v)]; }
};

/// Endpoints of every edge differ and every color is within {1..k}.
bool is_proper(const Graph& g, const Coloring& c);
/// Proper and each vertex's color is on its list.
bool respects_lists(const Graph& g, const ColorLists& lists, const Coloring& c);

}  // namespace ptc
