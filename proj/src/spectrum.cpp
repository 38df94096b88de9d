#include "robin/spectrum.hpp"

#include <algorithm>
#include <tuple>

namespace robin {

std::size_t Spectrum::count_with_multiplicity() const
{
    std::size_t n = 0;
    for (const Level& l : levels)
        n += std::size_t(l.multiplicity);
    return n;
}

std::vector<double> Spectrum::expanded() const
{
    std::vector<double> out;
    out.reserve(count_with_multiplicity());
    for (const Level& l : levels)
        for (int i = 0; i < l.multiplicity; ++i)
            out.push_back(l.value);
    return out;
}

std::size_t Spectrum::counting(double x) const
{
    std::size_t n = 0;
    for (const Level& l : levels) {
        if (l.value > x)
            break;
        n += std::size_t(l.multiplicity);
    }
    return n;
}

void sort_levels(std::vector<Level>& levels)
{
    std::sort(levels.begin(), levels.end(), [](const Level& p, const Level& q) {
        return std::tie(p.value, p.a, p.b) < std::tie(q.value, q.a, q.b);
    });
}

} // namespace robin
