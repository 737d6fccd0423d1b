#ifndef GRAPHFREQ_SCALAR_FIELD_HPP
#define GRAPHFREQ_SCALAR_FIELD_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace graphfreq {

// Vertex -> value map together with the set of vertices where harmonicity is
// asserted. Vertices outside `interior` are boundary or truncation vertices
// and carry no harmonicity claim.
struct ScalarField {
    std::vector<double> values;           // one entry per vertex
    std::vector<std::uint8_t> interior;   // 0/1 mask, same length as values
    // Largest harmonicity defect over `interior`; set by residual().
    double max_residual = std::numeric_limits<double>::quiet_NaN();

    int interior_count() const {
        int c = 0;
        for (auto m : interior) c += m != 0;
        return c;
    }
};

}  // namespace graphfreq

#endif
