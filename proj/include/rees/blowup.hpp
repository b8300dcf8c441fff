#pragma once

#include <string>
#include <vector>

#include "rees/derived.hpp"

namespace rees {

// One chart of a blow-up atlas. For a base X = (C, h) and centre
// (f_1..f_n), chart k lives over C extended by coordinates X_r (r != k)
// and carries the sequence h followed by (f_r - X_r * f_k).
struct BlowupChart {
    std::size_t index; // k, 0-based position in the centre
    DerivedLocus locus;
    // coord_var[r] = ambient index of the chart coordinate for centre
    // position r; -1 at r == index.
    std::vector<int> coord_var;
    std::vector<Poly> center_in_chart; // centre elements over the chart ambient
};

// Pairwise gluing data: both Rabinowitsch localizations and the two
// transition maps between them.
struct ChartOverlap {
    std::size_t k, l;
    RingPtr loc_k; // chart k with the coordinate of l inverted
    RingPtr loc_l; // chart l with the coordinate of k inverted
    RingMap to_k;  // loc_l -> loc_k
    RingMap to_l;  // loc_k -> loc_l
};

struct BlowupAtlas {
    DerivedLocus base;
    std::vector<Poly> center;
    std::vector<BlowupChart> charts;
    std::vector<ChartOverlap> overlaps;
    bool empty() const { return charts.empty(); }
};

// Charts pulled back from the blow-up of the origin in affine n-space.
// Centre length 0 gives the empty atlas; length 1 gives a single chart
// equal to X.
BlowupAtlas blowup_atlas(const DerivedLocus& X, const std::vector<Poly>& center);

// Chart k of the exceptional divisor: chart k's locus with f_k appended.
std::vector<DerivedLocus> exceptional_divisor(const BlowupAtlas& B);

// Candidate virtual Cartier divisor over (X, Z): a locus S mapping to X,
// one cutting element d, and coefficients a_i with f_i = a_i * d on S.
struct DivisorWitness {
    DerivedLocus locus;    // S
    RingMap structure_map; // X's ambient -> S's ambient
    Poly cutting;          // d
    std::vector<Poly> coeffs;
};

// The tautological witness on chart k: d = f_k, a_r = chart coordinates,
// a_k = 1.
DivisorWitness tautological_witness(const BlowupAtlas& B, std::size_t k);

// Classical-level checks of the three divisor conditions. a_ok is
// structural (one cutting element). b_ok compares the cut ideal with the
// pulled-back centre ideal. c_ok is the conormal surjectivity test
// 1 in (a_1..a_n) + (d) + S-ideal. witness_ok records whether the
// witness identities f_i = a_i * d hold on pi_0(S); verdicts are still
// computed when they fail.
struct DivisorVerdict {
    bool witness_ok;
    bool a_ok;
    bool b_ok;
    bool c_ok;
    bool all() const { return witness_ok && a_ok && b_ok && c_ok; }
};
DivisorVerdict verify_divisor(const DerivedLocus& X, const std::vector<Poly>& center,
                              const DivisorWitness& W);

// Homotopy-level form of the same conditions: pi0_iso matches b_ok, and
// pi1_surj asks that the syzygy classes of the pulled-back centre,
// pushed through the witness coefficients, generate the annihilator of
// the cutting element over pi_0(S).
struct HomotopyVerdict {
    bool witness_ok;
    bool pi0_iso;
    bool pi1_surj;
};
HomotopyVerdict verify_divisor_homotopy(const DerivedLocus& X, const std::vector<Poly>& center,
                                        const DivisorWitness& W);

// Chart-by-chart comparison of the blow-up with Proj of the symmetric
// algebra on the Koszul presentation of the centre's ideal module:
// dehomogenize the linear forms f_i X_j - f_j X_i at X_k = 1 and compare
// ideals with chart k. X must have an empty base sequence.
std::vector<bool> classical_truncation_compare(const DerivedLocus& X,
                                               const std::vector<Poly>& center);

// Product charts of the simultaneous blow-up in several centres, with a
// classicality verdict per chart.
struct SimultaneousChart {
    std::vector<std::size_t> indices; // one chart index per centre
    DerivedLocus locus;
    bool classical;
};
std::vector<SimultaneousChart> simultaneous_blowup(const DerivedLocus& X,
                                                   const std::vector<std::vector<Poly>>& centers);

// Immersion of Bl_Z X into Bl_Z Y for X = (C, h) inside Y = (C, ()) and
// Z cut by h followed by the centre f inside X. In the chart of f_k the
// immersion is cut by the coordinates W_j matched to the h_j.
struct StrictTransformChart {
    std::size_t index;      // position of f_k within the centre f
    DerivedLocus big_chart; // chart of Bl_Z Y at f_k
    std::vector<Poly> cut;  // the W_j as elements of the big chart ambient
    bool matches;           // W = 0 turns the big chart into Bl_Z X's chart
};
std::vector<StrictTransformChart> strict_transform_immersion(const DerivedLocus& Y,
                                                             const DerivedLocus& X,
                                                             const std::vector<Poly>& center);

// Deformation family over the affine line: n localized charts plus the
// chart of the added coordinate t. Restriction at t = 1 recovers X and
// at t = 0 the trivialized normal bundle over the centre.
struct DeformationAtlas {
    DerivedLocus base;
    std::vector<Poly> center;
    std::vector<DerivedLocus> charts; // k-charts, localized away from the strict transform
    DerivedLocus t_chart;
    std::string t_name; // name of the deformation parameter in every chart
};
DeformationAtlas deformation_atlas(const DerivedLocus& X, const std::vector<Poly>& center);

// Substitute t = value in every chart (k-charts first, t-chart last).
std::vector<DerivedLocus> restrict_t(const DeformationAtlas& D, const Rat& value);

} // namespace rees
