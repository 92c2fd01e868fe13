#pragma once

#include "shadow/braid.hpp"
#include "shadow/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace shadow {

enum class Framing { zero, drilled, plain };
const char* to_string(Framing f);

// volume of the regular ideal octahedron
double v8();
// v8 to the requested number of significant digits, computed as 8 * Lobachevsky(pi/4)
std::string v8_digits(int digits);

struct AugmentedLink {
    BraidWord base{1, {}};
    LinkDiagram diagram;
    std::string axis_component = "C";
    std::vector<std::string> added_components;  // R1 .. R(k+1), one per face off C
    int complexity = 0;
    double predicted_volume = 0;
};

struct SurgeryPresentation {
    LinkDiagram diagram;
    std::vector<Framing> framing;  // parallel to diagram.components
    int complexity = 0;
    int zero_count() const;
};

// Closure of b pushed one strand over, a front strand C, and for each region of the
// projection not touching C a thin circle reaching from that region across C.
AugmentedLink augment_to_fsl(const BraidWord& b);

// Same circles, 0-framed, plus one plain meridian circle per 0-framed circle lying in
// its region (the region circles of the shadow link).
SurgeryPresentation fsl_surgery_presentation(const BraidWord& b);

// Plat closure of a k-crossing twist region with C around it and one circle per inner
// region; twists = (finger index, crossing parity) half twists of C with that finger's edge.
LinkDiagram chain_link(int k, const std::vector<std::pair<int, int>>& twists = {});

struct FamilyLink {
    char family = 'K';
    int k = 1;
    LinkDiagram diagram;
    int expected_crossings = 0;
    int expected_components = 0;
    double predicted_volume = 0;
};
FamilyLink make_family(char family, int k);

struct TableLinksCatalog {
    std::map<std::string, std::vector<std::string>> rows;  // FSL1 .. FSL6
    std::vector<std::string> theorem_links;                 // all 17 links of volume 2 v8
    std::map<std::string, std::string> family_match;        // FSL3 -> L1, ...
    std::map<std::string, std::string> complexity_two;      // name -> status
    std::map<std::string, std::string> unresolved;          // name -> note
};
TableLinksCatalog catalog_table_links();

struct WhiteheadRecord {
    int k = 0;
    int chain_components = 0;    // 2k+1
    int max_fsl_components = 0;  // k+4
    bool distinct = false;
    std::string explanation;
};
WhiteheadRecord whitehead_distinct(int k);

} // namespace shadow
