#include "summary.hpp"

#include <cmath>

namespace phasecov {

std::string_view cell_name(Cell c) {
  switch (c) {
    case Cell::PtNotCptNotTlg: return "PT_not_CPT_not_TLG";
    case Cell::PtTlgNotCpt: return "PTxTLG_not_CPT";
    case Cell::CptNotEbcNotTlg: return "CPT_not_EBC_not_TLG";
    case Cell::CptTlgNotEbc: return "CPTxTLG_not_EBC";
    case Cell::EbcNotTlg: return "EBC_not_TLG";
    case Cell::EbcTlg: return "EBCxTLG";
  }
  return "?";
}

bool cell_contains(Cell c, const RegionMask& m) {
  if (!m.pt) return false;
  switch (c) {
    case Cell::PtNotCptNotTlg: return !m.cpt && !m.tlg;
    case Cell::PtTlgNotCpt: return m.tlg && !m.cpt;
    case Cell::CptNotEbcNotTlg: return m.cpt && !m.ebc && !m.tlg;
    case Cell::CptTlgNotEbc: return m.cpt && m.tlg && !m.ebc;
    case Cell::EbcNotTlg: return m.ebc && !m.tlg;
    case Cell::EbcTlg: return m.ebc && m.tlg;
  }
  return false;
}

std::optional<double> analytic_region_fraction(Surface s, Region r) {
  const auto pt = lebesgue_measure(Region::PT, s);
  const auto v = lebesgue_measure(r, s);
  if (!pt || !v) return std::nullopt;
  return *v / *pt;
}

std::optional<double> analytic_cell_fraction(Surface s, Cell c) {
  const auto pt = lebesgue_measure(Region::PT, s);
  const auto cpt = lebesgue_measure(Region::CPT, s);
  const auto ebc = lebesgue_measure(Region::EBC, s);
  const auto ptt = lebesgue_measure(Region::PTxTLG, s);
  const auto cptt = lebesgue_measure(Region::CPTxTLG, s);
  const auto ebct = lebesgue_measure(Region::EBCxTLG, s);
  if (!pt || !cpt || !ebc || !ptt || !cptt || !ebct) return std::nullopt;
  switch (c) {
    case Cell::PtNotCptNotTlg: return (*pt - *cpt - *ptt + *cptt) / *pt;
    case Cell::PtTlgNotCpt: return (*ptt - *cptt) / *pt;
    case Cell::CptNotEbcNotTlg: return (*cpt - *ebc - *cptt + *ebct) / *pt;
    case Cell::CptTlgNotEbc: return (*cptt - *ebct) / *pt;
    case Cell::EbcNotTlg: return (*ebc - *ebct) / *pt;
    case Cell::EbcTlg: return *ebct / *pt;
  }
  return std::nullopt;
}

namespace {

ReportRow make_row(std::string name, std::optional<double> analytic,
                   std::uint64_t hits, std::uint64_t pt_hits) {
  ReportRow row;
  row.name = std::move(name);
  row.analytic = analytic;
  row.hits = hits;
  if (pt_hits > 0) {
    const double f = static_cast<double>(hits) / static_cast<double>(pt_hits);
    row.mc = f;
    row.std_error = std::sqrt(f * (1.0 - f) / static_cast<double>(pt_hits));
    if (analytic && row.std_error > 0.0)
      row.sigma = std::abs(f - *analytic) / row.std_error;
  }
  return row;
}

}  // namespace

SummaryReport summary_report(Surface s, std::uint64_t samples, std::uint64_t seed,
                             int workers) {
  const RegionCounts counts = mc_region_counts(s, samples, seed, workers);

  SummaryReport rep;
  rep.surface = s;
  rep.samples = samples;
  rep.seed = seed;
  rep.pt_hits = counts.count(Region::PT);

  const Region region_rows[] = {Region::PT,     Region::CPT,     Region::EBC,
                                Region::PTxTLG, Region::CPTxTLG, Region::EBCxTLG};
  for (Region r : region_rows) {
    rep.rows.push_back(make_row(std::string(region_name(r)),
                                analytic_region_fraction(s, r), counts.count(r),
                                rep.pt_hits));
  }
  for (Cell c : kAllCells) {
    std::uint64_t hits = 0;
    for (unsigned b = 0; b < 16; ++b)
      if (cell_contains(c, RegionMask::from_bits(b))) hits += counts.histogram[b];
    rep.rows.push_back(make_row(std::string(cell_name(c)),
                                analytic_cell_fraction(s, c), hits, rep.pt_hits));
  }
  return rep;
}

}  // namespace phasecov
