#pragma once

// Slice-degree obstruction filters and their composition: per-knot degree
// reports plus the mirror-propagation fixpoint over a catalog.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cp2/catalog.hpp"

namespace cp2 {

enum class Rule { KM, GV, OS, ARF, LAWSON };

const char* rule_tag(Rule r);

struct Exclusion {
    Rule rule;
    std::string detail; // instantiated inequality or propagation reason
    bool operator==(const Exclusion&) const = default;
};

enum class SliceVerdict { PossiblySlice, NotSlice };

struct DegreeReport {
    std::string knot;
    std::set<int> surviving;                   // |d| classes
    std::map<int, std::vector<Exclusion>> exclusions;
    SliceVerdict verdict() const {
        return surviving.empty() ? SliceVerdict::NotSlice : SliceVerdict::PossiblySlice;
    }
};

// {0} union { d >= 1 : (d-1)(d-2) <= 2 g4 }.
std::set<int> km_window(int g4);

// 4 genus + 2 >= |d^2 - 2 - 2 sigma|; d must be even (0 included).
bool gv_allows(int sigma, int genus, int d);

// Alternating knots only (tau = -sigma/2); inapplicable otherwise.
// true iff genus >= sigma/2 + d(1-d)/2.
bool os_allows(int sigma, bool alternating, int genus, int d);

// arf = (d^2-1)/8 (mod 2); d must be odd.
bool robertello_allows(int arf, int d);

// Intersection of the filters at genus 0 over the KM window.
DegreeReport intrinsic_degrees(const KnotRecord& r);

using Reports = std::map<std::string, DegreeReport>;

Reports intrinsic_reports(const CatalogStore& store);

// Mirror propagation to a fixpoint:
//  (a) a realized odd degree >= 3 removes all odd degrees from the mirror;
//  (b) realized degree 1 removes odd degrees > 1 from the mirror;
//  (c) an amphichiral record loses its own odd degrees >= 3.
// Removals are tagged LAWSON. Only ever shrinks surviving sets.
Reports lawson_propagate(const CatalogStore& store, Reports reports);

enum class TheoremCheck { Inapplicable, Holds, Violated };

// Alternating with |sigma| = 4 and one of the pair realizing an odd
// degree >= 3: at most one of (K, mK) may keep a nonempty surviving set.
TheoremCheck theorem2_check(const KnotRecord& r, const KnotRecord& mirror,
                            const Reports& reports);

// true iff alternating, sigma = 4, g4 <= 2, arf = 0; such records must
// have an empty intrinsic surviving set (asserted).
bool theorem3_check(const KnotRecord& r);

} // namespace cp2
