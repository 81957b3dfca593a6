#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "mc.hpp"

namespace phasecov {

// Disjoint cells of the partition that {CPT, EBC, TLG} generates inside PT
// (EBC is contained in CPT, so 6 of the 8 sign patterns survive).
enum class Cell {
  PtNotCptNotTlg,
  PtTlgNotCpt,
  CptNotEbcNotTlg,
  CptTlgNotEbc,
  EbcNotTlg,
  EbcTlg,
};

inline constexpr std::array<Cell, 6> kAllCells = {
    Cell::PtNotCptNotTlg, Cell::PtTlgNotCpt, Cell::CptNotEbcNotTlg,
    Cell::CptTlgNotEbc,   Cell::EbcNotTlg,   Cell::EbcTlg,
};

std::string_view cell_name(Cell c);
bool cell_contains(Cell c, const RegionMask& m);

// Closed-form fraction of V(PT) occupied by the cell, assembled from the
// tabulated region measures; nullopt when a needed measure is unknown.
std::optional<double> analytic_cell_fraction(Surface s, Cell c);

// Fraction of V(PT) occupied by a region (nullopt when unknown).
std::optional<double> analytic_region_fraction(Surface s, Region r);

struct ReportRow {
  std::string name;
  std::optional<double> analytic;  // fraction of V(PT)
  double mc = 0.0;                 // hits / PT hits
  double std_error = 0.0;
  std::optional<double> sigma;     // |mc - analytic| / std_error
  std::uint64_t hits = 0;
};

struct SummaryReport {
  Surface surface = Surface::Full3D;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t pt_hits = 0;
  std::vector<ReportRow> rows;  // region rows first, then the 6 cells
};

// Single-pass report: for each region intersection and each disjoint cell,
// the analytic fraction of V(PT) where known, the Monte Carlo fraction, its
// standard error, and the deviation in sigmas.
SummaryReport summary_report(Surface s, std::uint64_t samples, std::uint64_t seed,
                             int workers);

}  // namespace phasecov
