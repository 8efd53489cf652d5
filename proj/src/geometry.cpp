#include "ect/geometry.hpp"

#include <stdexcept>

namespace ect {

Rational dot(const Point& x, const Direction& v) {
    if (x.size() != v.size()) throw std::invalid_argument("dimension mismatch in dot product");
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * v[i];
    return acc;
}

bool is_zero_vector(const Direction& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

std::vector<Direction> sample_directions(int count, int ambient_dim, DirectionScheme scheme) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    if (count < 1) throw std::invalid_argument("direction count must be >= 1");
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(count));
    switch (scheme) {
        case DirectionScheme::Axes: {
            for (int i = 0; i < count; ++i) {
                Direction d(static_cast<std::size_t>(ambient_dim), Rational(0));
                d[static_cast<std::size_t>(i % ambient_dim)] = 1;
                out.push_back(std::move(d));
            }
            break;
        }
        case DirectionScheme::RationalGrid: {
            // k = 0, 1, -1, 2, -2, ...; (1, k, k^2, ...) are pairwise
            // non-parallel for distinct k (Vandermonde).
            for (int i = 0; i < count; ++i) {
                int k = (i % 2 == 0) ? i / 2 : -(i / 2 + 1);
                Direction d;
                d.reserve(static_cast<std::size_t>(ambient_dim));
                Rational p = 1;
                for (int j = 0; j < ambient_dim; ++j) {
                    d.push_back(p);
                    p *= k;
                }
                out.push_back(std::move(d));
            }
            break;
        }
        case DirectionScheme::Explicit:
            throw std::invalid_argument("explicit scheme requires a direction list");
    }
    return out;
}

std::vector<Direction> validate_directions(const std::vector<Direction>& dirs) {
    if (dirs.empty()) throw std::invalid_argument("empty direction list");
    const std::size_t n = dirs.front().size();
    for (const auto& d : dirs) {
        if (d.size() != n) throw std::invalid_argument("inconsistent direction dimensions");
        if (is_zero_vector(d)) throw std::invalid_argument("zero direction vector");
    }
    return dirs;
}

}  // namespace ect
