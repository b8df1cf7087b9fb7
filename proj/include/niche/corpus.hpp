#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "niche/dates.hpp"
#include "niche/linalg.hpp"

namespace niche {

// One app-month observation as scraped. Absent fields stay absent until the
// imputation passes run; they are never defaulted at ingest.
struct AppRecord {
  int month = 0;
  bool scraped = false;
  std::optional<std::string> description;
  std::optional<double> price;
  std::optional<std::int64_t> installs_lb;
  std::optional<bool> contains_ads;
  std::optional<bool> offers_iap;
  std::optional<double> rating;
  std::optional<std::int64_t> reviews;
  std::optional<Date> released;
  std::optional<double> size_mb;
  std::optional<bool> adult;
  std::optional<std::string> genre_id;
  std::optional<std::string> firm;
};

struct AppSeries {
  std::string app_id;
  std::vector<AppRecord> months;  // index = month, padded to panel length
};

struct PanelDataset {
  std::vector<AppSeries> apps;
  std::vector<Date> wave_dates;        // strictly increasing, one per month
  std::set<std::string> top_firms;

  int n_months() const { return static_cast<int>(wave_dates.size()); }
};

enum class Category { game, business, social, medical, lifestyle };
enum class Period { before, after_1, after_2, after_3, after_4 };

const char* category_name(Category c);
const char* period_name(Period p);

struct DerivedRow {
  std::string app_id;
  int month = 0;
  double niche = 0.0;
  double log_price = 0.0;
  double log_installs = 0.0;
  double log_reviews = 0.0;
  double rating = 0.0;
  long days_since_launch = 0;
  double size_mb = 0.0;
  bool adult = false;
  Category category = Category::lifestyle;
  int tier = 3;
  bool top_firm = false;
  bool market_leader = false;
  Period period = Period::before;
  bool app_death = false;
  bool change_to_tier1 = false;
  bool change_to_top_firm = false;
  bool merger_acquisition = false;
};

// --- ingest -----------------------------------------------------------

// One JSON object per line; duplicate (app_id, month) is a data error,
// malformed lines report their line number. Apps are padded to the panel
// length with scraped=false months.
PanelDataset ingest_jsonl(const std::string& path,
                          const std::vector<Date>& wave_dates,
                          const std::set<std::string>& top_firms);

std::vector<Date> default_wave_dates();
std::vector<Date> load_wave_dates(const std::string& path);
std::set<std::string> load_top_firms(const std::string& path);

// --- imputation -------------------------------------------------------

struct Deletion {
  std::string app_id;
  std::string variable;
  std::string reason;
};

struct ImputeReport {
  std::vector<Deletion> deletions;   // flagged, applied by apply_deletions
  std::size_t filled = 0;
};

// Stable variables (adult, released, genre, size, rating, reviews,
// description): per-app mode for discrete, mean for continuous. Reviews are
// rounded back to a count.
ImputeReport impute_stable(PanelDataset& panel);

// contains_ads / offers_iap: uniform non-missing value, then month-0 false,
// then carry-forward, in that order.
ImputeReport impute_monetization_flags(PanelDataset& panel);

// installs_lb, price, firm: last observation carried forward. A month-0
// absence has nothing to carry and flags the whole app for deletion.
ImputeReport impute_locf(PanelDataset& panel);

std::size_t apply_deletions(PanelDataset& panel, const std::vector<Deletion>& deletions);

// Convenience pipeline: stable -> monetization -> locf, then deletion.
std::vector<Deletion> impute_all(PanelDataset& panel);

// --- derived variables ------------------------------------------------

// Death starts at the first month of an unbroken terminal gap of scrape
// misses; an interior gap is not death.
std::vector<bool> detect_app_death(const AppSeries& app);

Category map_genre_to_category(const std::string& genre_id,
                               std::vector<std::string>* warnings = nullptr);

int assign_tier(std::int64_t installs_lb);

bool flag_market_leader(int tier, const std::string& firm,
                        const std::set<std::string>& top_firms);

Period period_of(const Date& wave_date);

std::vector<DerivedRow> derive_variables(
    const PanelDataset& panel, const std::map<std::string, double>& niche_index,
    const Date& anchor_date, std::vector<std::string>* warnings = nullptr);

// --- descriptive statistics -------------------------------------------

struct SummaryRow {
  std::string group;
  std::string variable;
  std::size_t count = 0;
  // Continuous variables; unset (count==0) renders as empty cells.
  double mean = 0, stddev = 0, min = 0, median = 0, max = 0;
  bool is_dummy = false;
  double pct_true = 0;  // dummies only
};

using RowPredicate = bool (*)(const DerivedRow&);

struct Grouping {
  std::string name;
  std::vector<const DerivedRow*> rows;
};

std::vector<Grouping> standard_groupings(const std::vector<DerivedRow>& rows);

std::vector<SummaryRow> summarize(const std::vector<Grouping>& groups);

// Named accessor shared by summary, correlation and regression code;
// dummies evaluate to 0/1.
double numeric_value(const DerivedRow& row, const std::string& var);
const std::vector<std::string>& continuous_variables();
const std::vector<std::string>& dummy_variables();

Matrix correlation_matrix(const std::vector<const DerivedRow*>& rows,
                          const std::vector<std::string>& variables,
                          std::vector<std::string>* warnings = nullptr);

}  // namespace niche
