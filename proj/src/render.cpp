#include "collabmap/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "collabmap/csv.hpp"

namespace collabmap::report {

using ojson = nlohmann::ordered_json;

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_p(double p) {
  if (p < 1e-3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", p);
    return buf;
  }
  return format_fixed(p, 4);
}

namespace {

std::string opt3(const std::optional<double>& v) { return v ? format_fixed(*v, 3) : ""; }

ojson opt_json(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n' || c == '\r') out += ' ';
    else out.push_back(c);
  }
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_cell(c) + " |";
  return out + "\n";
}

std::string rank_value(const RankTable& t, double v) {
  return t.metric == Metric::count ? std::to_string(static_cast<long long>(v)) : format_fixed(v, 3);
}

const char* kRankColumns[] = {"rank",      "sector_id", "value",    "sector_name", "uda_id",
                              "uda_name",  "n_articles", "n_coauth", "n_industry_coauth",
                              "headcount"};

std::vector<std::string> rank_cells(const RankTable& t, const RankRow& r) {
  return {std::to_string(r.rank),
          r.sector.sector_id,
          rank_value(t, r.value),
          r.sector.sector_name,
          r.sector.uda_id,
          r.sector.uda_name,
          std::to_string(r.sector.n_articles),
          std::to_string(r.sector.n_coauth),
          std::to_string(r.sector.n_industry_coauth),
          std::to_string(r.sector.headcount)};
}

}  // namespace

std::string render(const RankTable& t, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out = csv::join({std::begin(kRankColumns), std::end(kRankColumns)}) + "\n";
      for (const auto& r : t.rows) out += csv::join(rank_cells(t, r)) + "\n";
      return out;
    }
    case Format::json: {
      ojson j;
      j["title"] = t.title;
      j["level"] = std::string(indicators::to_string(t.level));
      j["metric"] = std::string(to_string(t.metric));
      j["k"] = t.k;
      j["rows"] = ojson::array();
      for (const auto& r : t.rows) {
        ojson row;
        row["rank"] = r.rank;
        row["sector_id"] = r.sector.sector_id;
        row["value"] = r.value;
        row["sector_name"] = r.sector.sector_name;
        row["uda_id"] = r.sector.uda_id;
        row["uda_name"] = r.sector.uda_name;
        row["n_articles"] = r.sector.n_articles;
        row["n_coauth"] = r.sector.n_coauth;
        row["n_industry_coauth"] = r.sector.n_industry_coauth;
        row["headcount"] = r.sector.headcount;
        j["rows"].push_back(std::move(row));
      }
      return j.dump(2) + "\n";
    }
    case Format::md: {
      std::string out = "### " + md_cell(t.title) + "\n\n";
      out += md_row({std::begin(kRankColumns), std::end(kRankColumns)});
      out += "|---:|---|---:|---|---|---|---:|---:|---:|---:|\n";
      for (const auto& r : t.rows) out += md_row(rank_cells(t, r));
      return out;
    }
  }
  return {};
}

std::string render(const ComparisonTable& table, Format format) {
  const stats::Comparison& c = table.comparison;
  const stats::TestResult& r = c.result;
  switch (format) {
    case Format::csv: {
      std::string out =
          "grouping,indicator,kind,label_a,mean_a,variance_a,n_a,label_b,mean_b,variance_b,n_b,"
          "t,df,p_one,p_two,unit_kind,candidate_units,excluded_units,threshold\n";
      out += csv::join({std::string(stats::to_string(c.grouping)),
                        std::string(stats::to_string(c.indicator)),
                        std::string(stats::to_string(r.kind)), c.a.label, format_fixed(c.a.mean, 3),
                        opt3(c.a.variance), std::to_string(c.a.n), c.b.label,
                        format_fixed(c.b.mean, 3), opt3(c.b.variance), std::to_string(c.b.n),
                        format_fixed(r.t, 4), format_fixed(r.df, 3), format_p(r.p_one),
                        format_p(r.p_two), c.unit_kind, std::to_string(c.candidate_units),
                        std::to_string(c.excluded_units), std::to_string(c.threshold)});
      return out + "\n";
    }
    case Format::json: {
      ojson j;
      j["grouping"] = std::string(stats::to_string(c.grouping));
      j["indicator"] = std::string(stats::to_string(c.indicator));
      j["sample_a"] = {{"label", c.a.label}, {"mean", c.a.mean}, {"variance", opt_json(c.a.variance)},
                       {"n", c.a.n}};
      j["sample_b"] = {{"label", c.b.label}, {"mean", c.b.mean}, {"variance", opt_json(c.b.variance)},
                       {"n", c.b.n}};
      j["t"] = r.t;
      j["df"] = r.df;
      j["p_one"] = r.p_one;
      j["p_two"] = r.p_two;
      j["kind"] = std::string(stats::to_string(r.kind));
      j["title"] = table.title;
      j["unit_kind"] = c.unit_kind;
      j["candidate_units"] = c.candidate_units;
      j["excluded_units"] = c.excluded_units;
      j["threshold"] = c.threshold;
      j["exclusion_note"] = c.exclusion_note;
      if (r.kind == stats::TestKind::paired) j["units"] = c.units;
      return j.dump(2) + "\n";
    }
    case Format::md: {
      std::string out = "### " + md_cell(table.title) + "\n\n";
      out += md_row({"statistic", c.a.label, c.b.label});
      out += "|---|---:|---:|\n";
      out += md_row({"mean", format_fixed(c.a.mean, 3), format_fixed(c.b.mean, 3)});
      out += md_row({"variance", opt3(c.a.variance), opt3(c.b.variance)});
      out += md_row({"observations", std::to_string(c.a.n), std::to_string(c.b.n)});
      out += md_row({"t", "", format_fixed(r.t, 4)});
      out += md_row({"df", "", format_fixed(r.df, 3)});
      out += md_row({"p (one-tailed)", "", format_p(r.p_one)});
      out += md_row({"p (two-tailed)", "", format_p(r.p_two)});
      out += "\nNote: " + c.exclusion_note + ".\n";
      return out;
    }
  }
  return {};
}

std::string render(const MultidiscTable& t, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out = "scope_kind,scope_id,subset,n_pubs,ii_sds,ii_sci\n";
      for (const auto& r : t.rows) {
        out += csv::join({r.scope_kind, r.scope_id, std::string(collab::to_string(r.subset)),
                          std::to_string(r.n_pubs), opt3(r.ii_sds), opt3(r.ii_sci)}) +
               "\n";
      }
      return out;
    }
    case Format::json: {
      ojson j;
      j["subset"] = std::string(collab::to_string(t.subset));
      j["rows"] = ojson::array();
      for (const auto& r : t.rows) {
        j["rows"].push_back({{"scope_kind", r.scope_kind},
                             {"scope_id", r.scope_id},
                             {"subset", std::string(collab::to_string(r.subset))},
                             {"n_pubs", r.n_pubs},
                             {"ii_sds", opt_json(r.ii_sds)},
                             {"ii_sci", opt_json(r.ii_sci)}});
      }
      return j.dump(2) + "\n";
    }
    case Format::md: {
      std::string out = "### Multidisciplinarity indices, subset " +
                        std::string(collab::to_string(t.subset)) + "\n\n";
      out += md_row({"scope_kind", "scope_id", "n_pubs", "ii_sds", "ii_sci"});
      out += "|---|---|---:|---:|---:|\n";
      for (const auto& r : t.rows) {
        out += md_row({r.scope_kind, r.scope_id, std::to_string(r.n_pubs),
                       r.ii_sds ? format_fixed(*r.ii_sds, 3) : "n/a",
                       r.ii_sci ? format_fixed(*r.ii_sci, 3) : "n/a"});
      }
      return out;
    }
  }
  return {};
}

}  // namespace collabmap::report
