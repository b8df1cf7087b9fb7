#include "niche/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "niche/common.hpp"
#include "niche/io.hpp"
#include "niche/parallel.hpp"
#include "niche/stats.hpp"

using nlohmann::json;

namespace niche {

const char* category_name(Category c) {
  switch (c) {
    case Category::game: return "game";
    case Category::business: return "business";
    case Category::social: return "social";
    case Category::medical: return "medical";
    case Category::lifestyle: return "lifestyle";
  }
  return "?";
}

const char* period_name(Period p) {
  switch (p) {
    case Period::before: return "before";
    case Period::after_1: return "after_1";
    case Period::after_2: return "after_2";
    case Period::after_3: return "after_3";
    case Period::after_4: return "after_4";
  }
  return "?";
}

// --- ingest -----------------------------------------------------------

std::vector<Date> default_wave_dates() {
  // 18 unevenly spaced waves, 2019-07 through 2021-07, avoiding the months
  // the period dummies do not cover (2020-05..2020-08).
  static const char* kDates[] = {
      "2019-07-15", "2019-08-15", "2019-09-15", "2019-10-15", "2019-12-15",
      "2020-01-15", "2020-02-15", "2020-03-15", "2020-04-15", "2020-09-15",
      "2020-10-15", "2020-12-15", "2021-01-15", "2021-02-15", "2021-04-15",
      "2021-05-15", "2021-06-15", "2021-07-15"};
  std::vector<Date> out;
  for (const char* d : kDates) out.push_back(parse_date(d));
  return out;
}

std::vector<Date> load_wave_dates(const std::string& path) {
  std::vector<Date> out;
  for (const auto& line : read_lines(path)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_date(line));
  }
  if (out.empty()) throw ValidationError("wave-dates file is empty: " + path);
  return out;
}

std::set<std::string> load_top_firms(const std::string& path) {
  std::set<std::string> firms;
  for (const auto& line : read_lines(path))
    if (!line.empty() && line[0] != '#') firms.insert(line);
  return firms;
}

namespace {

template <class T>
std::optional<T> opt_field(const json& j, const char* key);

template <>
std::optional<std::string> opt_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

template <>
std::optional<double> opt_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<double>();
}

template <>
std::optional<std::int64_t> opt_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::int64_t>();
}

template <>
std::optional<bool> opt_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<bool>();
}

void validate_record(const AppRecord& r, const std::string& app_id, std::size_t line_no) {
  auto fail = [&](const std::string& what) {
    throw DataError("line " + std::to_string(line_no) + " (" + app_id + "): " + what);
  };
  if (r.price && *r.price < 0) fail("negative price");
  if (r.installs_lb && *r.installs_lb < 0) fail("negative installs_lb");
  if (r.reviews && *r.reviews < 0) fail("negative reviews");
  if (r.size_mb && *r.size_mb <= 0) fail("nonpositive size_mb");
  if (r.rating && (*r.rating < 0 || *r.rating > 5)) fail("rating outside [0,5]");
}

}  // namespace

PanelDataset ingest_jsonl(const std::string& path,
                          const std::vector<Date>& wave_dates,
                          const std::set<std::string>& top_firms) {
  for (std::size_t i = 1; i < wave_dates.size(); ++i)
    if (!(wave_dates[i - 1] < wave_dates[i]))
      throw ValidationError("wave dates not strictly increasing at index " +
                            std::to_string(i));

  std::ifstream in(path);
  if (!in) throw DataError("cannot open: " + path);

  std::unordered_map<std::string, std::size_t> app_slot;
  std::vector<AppSeries> apps;
  std::unordered_set<std::string> seen;  // "app\tmonth"
  int max_month = -1;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.contains("app_id") || !j.contains("month"))
      throw DataError("line " + std::to_string(line_no) + ": app_id/month required");

    const std::string app_id = j["app_id"].get<std::string>();
    AppRecord r;
    r.month = j["month"].get<int>();
    if (r.month < 0)
      throw DataError("line " + std::to_string(line_no) + ": negative month");
    if (r.month >= static_cast<int>(wave_dates.size()))
      throw ValidationError("line " + std::to_string(line_no) + ": month " +
                            std::to_string(r.month) +
                            " beyond wave timeline (supply --wave-dates)");
    const std::string key = app_id + "\t" + std::to_string(r.month);
    if (!seen.insert(key).second)
      throw DataError("line " + std::to_string(line_no) + ": duplicate (" +
                      app_id + ", " + std::to_string(r.month) + ")");

    r.scraped = j.contains("scraped") && !j["scraped"].is_null()
                    ? j["scraped"].get<bool>()
                    : true;
    r.description = opt_field<std::string>(j, "description");
    r.price = opt_field<double>(j, "price");
    r.installs_lb = opt_field<std::int64_t>(j, "installs_lb");
    r.contains_ads = opt_field<bool>(j, "contains_ads");
    r.offers_iap = opt_field<bool>(j, "offers_iap");
    r.rating = opt_field<double>(j, "rating");
    r.reviews = opt_field<std::int64_t>(j, "reviews");
    r.size_mb = opt_field<double>(j, "size_mb");
    r.adult = opt_field<bool>(j, "adult");
    r.genre_id = opt_field<std::string>(j, "genre_id");
    r.firm = opt_field<std::string>(j, "firm");
    if (auto rel = opt_field<std::string>(j, "released")) r.released = parse_date(*rel);
    validate_record(r, app_id, line_no);

    auto [it, inserted] = app_slot.try_emplace(app_id, apps.size());
    if (inserted) apps.push_back(AppSeries{app_id, {}});
    auto& series = apps[it->second].months;
    if (static_cast<int>(series.size()) <= r.month) series.resize(r.month + 1);
    max_month = std::max(max_month, r.month);
    series[r.month] = std::move(r);
  }

  // Panel length comes from the data; months never observed in any line are
  // not part of the panel. Missing lines inside it mean the wave missed the
  // app (scraped=false).
  PanelDataset panel;
  const int t = max_month + 1;
  panel.wave_dates.assign(wave_dates.begin(), wave_dates.begin() + t);
  panel.top_firms = top_firms;
  panel.apps = std::move(apps);
  for (auto& app : panel.apps) {
    app.months.resize(t);
    for (int m = 0; m < t; ++m) app.months[m].month = m;
  }
  std::sort(panel.apps.begin(), panel.apps.end(),
            [](const AppSeries& a, const AppSeries& b) { return a.app_id < b.app_id; });
  return panel;
}

// --- imputation -------------------------------------------------------

namespace {

// Per-app mode; ties go to the value seen in the earliest month.
template <class T>
std::optional<T> series_mode(const AppSeries& app,
                             std::optional<T> AppRecord::*field) {
  std::vector<std::pair<T, int>> counts;  // value -> count, insertion ordered
  for (const auto& rec : app.months) {
    if (!(rec.*field)) continue;
    const T& v = *(rec.*field);
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& p) { return p.first == v; });
    if (it == counts.end()) counts.emplace_back(v, 1);
    else it->second++;
  }
  if (counts.empty()) return std::nullopt;
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

template <class T>
std::size_t fill_with(AppSeries& app, std::optional<T> AppRecord::*field, const T& v) {
  std::size_t filled = 0;
  for (auto& rec : app.months) {
    if (!(rec.*field)) {
      rec.*field = v;
      ++filled;
    }
  }
  return filled;
}

std::optional<double> series_mean(const AppSeries& app,
                                  std::optional<double> AppRecord::*field) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& rec : app.months) {
    if (rec.*field) {
      sum += *(rec.*field);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

template <class T>
std::size_t carry_forward(AppSeries& app, std::optional<T> AppRecord::*field) {
  std::size_t filled = 0;
  std::optional<T> last;
  for (auto& rec : app.months) {
    if (rec.*field) {
      last = rec.*field;
    } else if (last) {
      rec.*field = last;
      ++filled;
    }
  }
  return filled;
}

}  // namespace

ImputeReport impute_stable(PanelDataset& panel) {
  ImputeReport report;
  std::vector<std::size_t> filled(panel.apps.size(), 0);
  std::vector<std::vector<Deletion>> deletions(panel.apps.size());

  par::for_each(panel.apps.size(), [&](std::size_t a) {
    auto& app = panel.apps[a];
    auto flag = [&](const char* var) {
      deletions[a].push_back({app.app_id, var, "absent in all months"});
    };

    if (auto v = series_mode(app, &AppRecord::adult))
      filled[a] += fill_with(app, &AppRecord::adult, *v);
    else flag("adult");
    if (auto v = series_mode(app, &AppRecord::released))
      filled[a] += fill_with(app, &AppRecord::released, *v);
    else flag("released");
    if (auto v = series_mode(app, &AppRecord::genre_id))
      filled[a] += fill_with(app, &AppRecord::genre_id, *v);
    else flag("genre_id");
    if (auto v = series_mode(app, &AppRecord::description))
      filled[a] += fill_with(app, &AppRecord::description, *v);
    else flag("description");
    if (auto v = series_mean(app, &AppRecord::size_mb))
      filled[a] += fill_with(app, &AppRecord::size_mb, *v);
    else flag("size_mb");
    if (auto v = series_mean(app, &AppRecord::rating))
      filled[a] += fill_with(app, &AppRecord::rating, *v);
    else flag("rating");

    // Reviews are counts: mean of the non-missing months, rounded.
    {
      double sum = 0;
      std::size_t n = 0;
      for (const auto& rec : app.months)
        if (rec.reviews) {
          sum += static_cast<double>(*rec.reviews);
          ++n;
        }
      if (n > 0) {
        const auto mean = static_cast<std::int64_t>(
            std::llround(sum / static_cast<double>(n)));
        filled[a] += fill_with(app, &AppRecord::reviews, mean);
      } else {
        flag("reviews");
      }
    }
  });

  for (std::size_t a = 0; a < panel.apps.size(); ++a) {
    report.filled += filled[a];
    for (auto& d : deletions[a]) report.deletions.push_back(std::move(d));
  }
  return report;
}

ImputeReport impute_monetization_flags(PanelDataset& panel) {
  ImputeReport report;
  std::vector<std::size_t> filled(panel.apps.size(), 0);

  par::for_each(panel.apps.size(), [&](std::size_t a) {
    auto& app = panel.apps[a];
    for (auto field : {&AppRecord::contains_ads, &AppRecord::offers_iap}) {
      bool any_absent = false, saw_true = false, saw_false = false;
      for (const auto& rec : app.months) {
        if (!(rec.*field)) any_absent = true;
        else if (*(rec.*field)) saw_true = true;
        else saw_false = true;
      }
      if (!any_absent) continue;
      // Rule 1: a uniform non-missing value fills everything.
      if (saw_true != saw_false) {
        filled[a] += fill_with(app, field, saw_true);
        continue;
      }
      // Rule 2: month 0 still absent defaults to false.
      if (!app.months.empty() && !(app.months[0].*field)) {
        app.months[0].*field = false;
        ++filled[a];
      }
      // Rule 3: carry the prior month forward.
      filled[a] += carry_forward(app, field);
    }
  });
  for (std::size_t f : filled) report.filled += f;
  return report;
}

ImputeReport impute_locf(PanelDataset& panel) {
  ImputeReport report;
  std::vector<std::size_t> filled(panel.apps.size(), 0);
  std::vector<std::vector<Deletion>> deletions(panel.apps.size());

  par::for_each(panel.apps.size(), [&](std::size_t a) {
    auto& app = panel.apps[a];
    if (app.months.empty()) return;
    auto run = [&](auto field, const char* var) {
      if (!(app.months[0].*field)) {
        deletions[a].push_back(
            {app.app_id, var, "absent at month 0, nothing to carry"});
        return;
      }
      filled[a] += carry_forward(app, field);
    };
    run(&AppRecord::installs_lb, "installs_lb");
    run(&AppRecord::price, "price");
    run(&AppRecord::firm, "firm");
  });

  for (std::size_t a = 0; a < panel.apps.size(); ++a) {
    report.filled += filled[a];
    for (auto& d : deletions[a]) report.deletions.push_back(std::move(d));
  }
  return report;
}

std::size_t apply_deletions(PanelDataset& panel,
                            const std::vector<Deletion>& deletions) {
  std::unordered_set<std::string> doomed;
  for (const auto& d : deletions) doomed.insert(d.app_id);
  const std::size_t before = panel.apps.size();
  std::erase_if(panel.apps,
                [&](const AppSeries& app) { return doomed.count(app.app_id) > 0; });
  return before - panel.apps.size();
}

std::vector<Deletion> impute_all(PanelDataset& panel) {
  std::vector<Deletion> all;
  auto absorb = [&](ImputeReport r) {
    for (auto& d : r.deletions) all.push_back(std::move(d));
  };
  absorb(impute_stable(panel));
  absorb(impute_monetization_flags(panel));
  absorb(impute_locf(panel));
  apply_deletions(panel, all);
  return all;
}

// --- derived variables ------------------------------------------------

std::vector<bool> detect_app_death(const AppSeries& app) {
  const std::size_t t = app.months.size();
  std::vector<bool> dead(t, false);
  // Death = the terminal run of scrape misses; a gap that later resumes is
  // not death.
  std::size_t first_dead = t;
  for (std::size_t m = t; m-- > 0;) {
    if (app.months[m].scraped) break;
    first_dead = m;
  }
  if (first_dead == 0) first_dead = t;  // never scraped at all: treat as alive
  for (std::size_t m = first_dead; m < t; ++m) dead[m] = true;
  return dead;
}

namespace {

std::string normalize_genre(const std::string& genre) {
  std::string out;
  out.reserve(genre.size());
  for (char c : genre) {
    if (c == '_') out += ' ';
    else out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  // collapse runs of spaces, trim
  std::string trimmed;
  bool in_space = true;
  for (char c : out) {
    if (c == ' ') {
      if (!in_space) trimmed += ' ';
      in_space = true;
    } else {
      trimmed += c;
      in_space = false;
    }
  }
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
  return trimmed;
}

const std::set<std::string>& business_genres() {
  static const std::set<std::string> s = {
      "finance", "education", "news and magazine", "news and magazines",
      "business", "productivity", "tools", "books and reference",
      "libraries and demo", "libraries and demos"};
  return s;
}

const std::set<std::string>& social_genres() {
  static const std::set<std::string> s = {
      "communication", "food and drink", "social", "shopping", "dating",
      "events", "weather", "maps and navigation", "auto and vehicles"};
  return s;
}

const std::set<std::string>& medical_genres() {
  static const std::set<std::string> s = {"health and fitness", "medical"};
  return s;
}

const std::set<std::string>& lifestyle_genres() {
  static const std::set<std::string> s = {
      "personalization", "sports", "music and audio", "entertainment",
      "travel and local", "lifestyle", "photography", "video players",
      "video players and editors", "parenting", "comics", "art and design",
      "beauty", "house and home"};
  return s;
}

}  // namespace

Category map_genre_to_category(const std::string& genre_id,
                               std::vector<std::string>* warnings) {
  const std::string g = normalize_genre(genre_id);
  if (g.rfind("game", 0) == 0) return Category::game;
  if (business_genres().count(g)) return Category::business;
  if (social_genres().count(g)) return Category::social;
  if (medical_genres().count(g)) return Category::medical;
  if (!lifestyle_genres().count(g)) {
    const std::string msg = "unknown genre '" + genre_id + "' mapped to lifestyle";
    if (warnings) warnings->push_back(msg);
    else log_warn(msg);
  }
  return Category::lifestyle;
}

int assign_tier(std::int64_t installs_lb) {
  if (installs_lb >= 10'000'000) return 1;
  if (installs_lb >= 100'000) return 2;
  return 3;
}

bool flag_market_leader(int tier, const std::string& firm,
                        const std::set<std::string>& top_firms) {
  return tier == 1 || top_firms.count(firm) > 0;
}

Period period_of(const Date& d) {
  const int ym = d.year * 100 + d.month;
  if (ym < 202003) return Period::before;
  if (ym <= 202004) return Period::after_1;
  if (ym >= 202009 && ym <= 202012) return Period::after_2;
  if (ym >= 202101 && ym <= 202104) return Period::after_3;
  if (ym >= 202105 && ym <= 202107) return Period::after_4;
  throw ValidationError("wave date " + d.iso() + " falls in no analysis period");
}

std::vector<DerivedRow> derive_variables(
    const PanelDataset& panel, const std::map<std::string, double>& niche_index,
    const Date& anchor_date, std::vector<std::string>* warnings) {
  std::vector<DerivedRow> rows;
  const int t = panel.n_months();
  std::vector<Period> periods(t);
  for (int m = 0; m < t; ++m) periods[m] = period_of(panel.wave_dates[m]);

  auto log1 = [](double x) { return std::log(x + 1.0); };

  for (const auto& app : panel.apps) {
    auto niche_it = niche_index.find(app.app_id);
    if (niche_it == niche_index.end()) {
      if (warnings)
        warnings->push_back("app " + app.app_id + " has no niche score; skipped");
      continue;
    }
    // Category from the modal genre across months.
    std::string genre;
    if (auto g = series_mode(app, &AppRecord::genre_id)) genre = *g;
    const Category category = map_genre_to_category(genre, warnings);
    const auto dead = detect_app_death(app);

    int prev_tier = 0;
    bool prev_top = false;
    std::string prev_firm;
    for (int m = 0; m < t; ++m) {
      const AppRecord& rec = app.months[m];
      if (!rec.price || !rec.installs_lb || !rec.reviews || !rec.rating ||
          !rec.size_mb || !rec.adult || !rec.released || !rec.firm)
        throw DataError("derive_variables: app " + app.app_id +
                        " still has absent fields; run imputation first");
      DerivedRow row;
      row.app_id = app.app_id;
      row.month = m;
      row.niche = niche_it->second;
      row.log_price = log1(*rec.price);
      row.log_installs = log1(static_cast<double>(*rec.installs_lb));
      row.log_reviews = log1(static_cast<double>(*rec.reviews));
      row.rating = *rec.rating;
      row.size_mb = *rec.size_mb;
      row.adult = *rec.adult;
      row.category = category;
      long days = days_between(*rec.released, anchor_date);
      if (days < 0) {
        if (warnings)
          warnings->push_back("app " + app.app_id + " released after anchor date; " +
                              "days_since_launch floored at 0");
        days = 0;
      }
      row.days_since_launch = days;
      row.tier = assign_tier(*rec.installs_lb);
      row.top_firm = panel.top_firms.count(*rec.firm) > 0;
      row.market_leader = flag_market_leader(row.tier, *rec.firm, panel.top_firms);
      row.period = periods[m];
      row.app_death = dead[m];
      if (m > 0) {
        row.change_to_tier1 = (row.tier == 1 && prev_tier != 1);
        row.change_to_top_firm = (row.top_firm && !prev_top);
        row.merger_acquisition = (*rec.firm != prev_firm);
      }
      prev_tier = row.tier;
      prev_top = row.top_firm;
      prev_firm = *rec.firm;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// --- descriptive statistics -------------------------------------------

const std::vector<std::string>& continuous_variables() {
  static const std::vector<std::string> v = {
      "Niche",   "LogPrice",        "LogInstalls", "logReviews",
      "Rating",  "DaysSinceLaunch", "AppSize"};
  return v;
}

const std::vector<std::string>& dummy_variables() {
  static const std::vector<std::string> v = {
      "AdultContent", "InAppPurchase",   "InAppAds",        "Game",
      "Business",     "Social",          "Medical",         "Lifestyle",
      "Tier1",        "Tier2",           "Tier3",           "TopFirm",
      "ML",           "AppDeath",        "ChangeToTier1",   "ChangeToTopFirm",
      "MergerAcquisition"};
  return v;
}

double numeric_value(const DerivedRow& r, const std::string& var) {
  if (var == "Niche") return r.niche;
  if (var == "LogPrice") return r.log_price;
  if (var == "LogInstalls") return r.log_installs;
  if (var == "logReviews") return r.log_reviews;
  if (var == "Rating") return r.rating;
  if (var == "DaysSinceLaunch") return static_cast<double>(r.days_since_launch);
  if (var == "AppSize") return r.size_mb;
  if (var == "AdultContent") return r.adult ? 1.0 : 0.0;
  if (var == "Game") return r.category == Category::game ? 1.0 : 0.0;
  if (var == "Business") return r.category == Category::business ? 1.0 : 0.0;
  if (var == "Social") return r.category == Category::social ? 1.0 : 0.0;
  if (var == "Medical") return r.category == Category::medical ? 1.0 : 0.0;
  if (var == "Lifestyle") return r.category == Category::lifestyle ? 1.0 : 0.0;
  if (var == "Tier1") return r.tier == 1 ? 1.0 : 0.0;
  if (var == "Tier2") return r.tier == 2 ? 1.0 : 0.0;
  if (var == "Tier3") return r.tier == 3 ? 1.0 : 0.0;
  if (var == "TopFirm") return r.top_firm ? 1.0 : 0.0;
  if (var == "ML") return r.market_leader ? 1.0 : 0.0;
  if (var == "AppDeath") return r.app_death ? 1.0 : 0.0;
  if (var == "ChangeToTier1") return r.change_to_tier1 ? 1.0 : 0.0;
  if (var == "ChangeToTopFirm") return r.change_to_top_firm ? 1.0 : 0.0;
  if (var == "MergerAcquisition") return r.merger_acquisition ? 1.0 : 0.0;
  throw ValidationError("unknown variable: " + var);
}

std::vector<Grouping> standard_groupings(const std::vector<DerivedRow>& rows) {
  std::vector<Grouping> groups;
  auto add = [&](const std::string& name, auto pred) {
    Grouping g{name, {}};
    for (const auto& r : rows)
      if (pred(r)) g.rows.push_back(&r);
    groups.push_back(std::move(g));
  };
  add("FULL", [](const DerivedRow&) { return true; });
  add("ML", [](const DerivedRow& r) { return r.market_leader; });
  add("MF", [](const DerivedRow& r) { return !r.market_leader; });
  for (Category c : {Category::business, Category::game, Category::lifestyle,
                     Category::medical, Category::social}) {
    add(std::string("FULL/") + category_name(c),
        [c](const DerivedRow& r) { return r.category == c; });
    add(std::string("ML/") + category_name(c),
        [c](const DerivedRow& r) { return r.market_leader && r.category == c; });
    add(std::string("MF/") + category_name(c),
        [c](const DerivedRow& r) { return !r.market_leader && r.category == c; });
  }
  for (int t : {1, 2, 3})
    add("Tier" + std::to_string(t),
        [t](const DerivedRow& r) { return r.tier == t; });
  add("TopFirm", [](const DerivedRow& r) { return r.top_firm; });
  add("NonTopFirm", [](const DerivedRow& r) { return !r.top_firm; });
  return groups;
}

std::vector<SummaryRow> summarize(const std::vector<Grouping>& groups) {
  std::vector<SummaryRow> out;
  for (const auto& g : groups) {
    for (const auto& var : continuous_variables()) {
      SummaryRow s;
      s.group = g.name;
      s.variable = var;
      s.count = g.rows.size();
      if (!g.rows.empty()) {
        std::vector<double> vals;
        vals.reserve(g.rows.size());
        for (const auto* r : g.rows) vals.push_back(numeric_value(*r, var));
        s.mean = mean_of(vals);
        s.stddev = stddev_of(vals);
        s.min = *std::min_element(vals.begin(), vals.end());
        s.max = *std::max_element(vals.begin(), vals.end());
        s.median = median_of(vals);
      }
      out.push_back(std::move(s));
    }
    for (const auto& var : dummy_variables()) {
      SummaryRow s;
      s.group = g.name;
      s.variable = var;
      s.count = g.rows.size();
      s.is_dummy = true;
      if (!g.rows.empty()) {
        double t = 0;
        for (const auto* r : g.rows) t += numeric_value(*r, var);
        s.pct_true = 100.0 * t / static_cast<double>(g.rows.size());
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

Matrix correlation_matrix(const std::vector<const DerivedRow*>& rows,
                          const std::vector<std::string>& variables,
                          std::vector<std::string>* warnings) {
  const std::size_t p = variables.size();
  if (rows.size() < 2) throw DataError("correlation_matrix: need at least 2 rows");
  Matrix cols(p, rows.size());
  for (std::size_t v = 0; v < p; ++v)
    for (std::size_t i = 0; i < rows.size(); ++i)
      cols(v, i) = numeric_value(*rows[i], variables[v]);

  std::vector<bool> degenerate(p, false);
  for (std::size_t v = 0; v < p; ++v) {
    if (stddev_of(cols.row(v)) == 0.0) {
      degenerate[v] = true;
      const std::string msg =
          "correlation: variable " + variables[v] + " has zero variance; set to 0";
      if (warnings) warnings->push_back(msg);
      else log_warn(msg);
    }
  }

  Matrix corr(p, p, 0.0);
  for (std::size_t a = 0; a < p; ++a) {
    corr(a, a) = 1.0;
    for (std::size_t b = a + 1; b < p; ++b) {
      double rho = 0.0;
      if (!degenerate[a] && !degenerate[b]) rho = pearson(cols.row(a), cols.row(b));
      corr(a, b) = rho;
      corr(b, a) = rho;
    }
  }
  return corr;
}

}  // namespace niche
