#pragma once

// Coherent band surgery on PD diagrams: coherence checking, band
// application, and fixture files that name an expected target link.

#include <string>
#include <vector>

#include "cp2/diagram.hpp"

namespace cp2 {

enum class Side { Left, Right };

struct BandSpec {
    int edge1 = 0;
    double pos1 = 0.5;
    Side side1 = Side::Left;
    int edge2 = 0;
    double pos2 = 0.5;
    Side side2 = Side::Left;
    struct CoreStep {
        int edge = 0;
        bool over = true; // band passes over the crossed edge
        double pos = 0.5;
    };
    std::vector<CoreStep> core; // transversal crossings, in core order
    int half_twists = 0;        // sign = handedness
};

// True iff the post-surgery identifications admit a consistent
// orientation: the attachment arcs are anti-parallel across the band.
// Symmetric in the two attachments.
bool check_coherent(const Diagram& d, const BandSpec& b);

// Replace the two attachment arcs by the band's sides. Each core step
// contributes two crossings (band over or under the crossed edge), each
// half twist one crossing between the sides. Component count changes by
// exactly one. Throws ValidationError for incoherent bands.
Diagram apply_band(const Diagram& d, const BandSpec& b);

struct BandFixture {
    std::string diagram_name;
    Diagram diagram;
    BandSpec band;
    int expect_components = 0;
    std::string expect_target;
};

// key=value lines: diagram=, attach1=edge:pos, attach2=edge:pos,
// sides=left|right,left|right, core=edge[:pos]/over;..., twists=,
// expect_components=, expect_target=.
BandFixture parse_band_fixture(const std::string& text, const std::string& pd_dir);
BandFixture load_band_fixture_file(const std::string& path, const std::string& pd_dir = "");

Diagram load_pd_file(const std::string& path);
// Bundled PD by name (share/pd/<name>.pd).
Diagram load_catalog_pd(const std::string& name, const std::string& pd_dir = "");

struct BandVerification {
    bool coherent = false;
    int components = 0;
    bool components_match = false;
    Laurent jones_result;
    Laurent jones_target;
    bool jones_match = false;
    bool linking_match = false;
    bool ok() const { return coherent && components_match && jones_match && linking_match; }
};

BandVerification verify_band_fixture(const BandFixture& f, const std::string& pd_dir = "");

} // namespace cp2
