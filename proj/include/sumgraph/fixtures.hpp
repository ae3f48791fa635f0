#pragma once

#include <string>
#include <vector>

#include "sumgraph/labelling.hpp"

namespace sumgraph {

/**
 * An explicit labelling from the literature, keyed by section, together with
 * the graph it is supposed to induce. Fixtures are embedded in the binary;
 * each is expected to verify exactly.
 */
struct Fixture {
    std::string id;        // e.g. "FIX-9.3-Q4-r24"
    std::string section;
    std::string note;
    Labelling labelling;
    Graph target;
    long radius = -1;      // stated radius for integral fixtures, when given
};

const std::vector<Fixture>& all_fixtures();
const Fixture& fixture(const std::string& id);  // errors: UnknownFixture

// The reference kernel basis (u1, u2, u3) printed alongside the 4D-cube
// labellings, used by change-of-basis checks.
const std::vector<std::vector<BigInt>>& q4_reference_basis();

// The documented sum-graph isomorphism between the C_4 labellings over Z_5
// and over the units mod 11 (vertex map is the identity under the fixtures'
// shared cyclic order).
std::vector<int> z5_units11_iso_map();

}  // namespace sumgraph
