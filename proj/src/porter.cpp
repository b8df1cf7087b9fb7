#include "niche/porter.hpp"

#include <array>
#include <cstring>

namespace niche {
namespace {

bool is_cons(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_cons(w, i - 1);
    default:
      return true;
  }
}

// Measure m of w[0..len): number of VC sequences in [C](VC)^m[V].
int measure(const std::string& w, std::size_t len) {
  int m = 0;
  std::size_t i = 0;
  while (i < len && is_cons(w, i)) ++i;   // leading consonants
  while (i < len) {
    while (i < len && !is_cons(w, i)) ++i;  // vowels
    if (i >= len) break;
    while (i < len && is_cons(w, i)) ++i;   // consonants
    ++m;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (!is_cons(w, i)) return true;
  return false;
}

bool double_cons(const std::string& w, std::size_t len) {
  return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_cons(w, len - 3) || is_cons(w, len - 2) || !is_cons(w, len - 1))
    return false;
  const char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, const char* suf) {
  const std::size_t n = std::strlen(suf);
  return w.size() >= n && w.compare(w.size() - n, n, suf) == 0;
}

struct Rule {
  const char* suffix;
  const char* replacement;
  int min_measure;  // stem measure must satisfy m > min_measure - 1
};

void step_1a(std::string& w) {
  if (ends_with(w, "sses")) w.resize(w.size() - 2);
  else if (ends_with(w, "ies")) w.resize(w.size() - 2);
  else if (ends_with(w, "ss")) { /* keep */ }
  else if (ends_with(w, "s")) w.resize(w.size() - 1);
}

void step_1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w += 'e';
  } else if (double_cons(w, w.size())) {
    const char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w += 'e';
  }
}

void step_1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

const Rule kStep2[] = {
    {"ational", "ate", 1}, {"tional", "tion", 1}, {"enci", "ence", 1},
    {"anci", "ance", 1},   {"izer", "ize", 1},    {"abli", "able", 1},
    {"alli", "al", 1},     {"entli", "ent", 1},   {"eli", "e", 1},
    {"ousli", "ous", 1},   {"ization", "ize", 1}, {"ation", "ate", 1},
    {"ator", "ate", 1},    {"alism", "al", 1},    {"iveness", "ive", 1},
    {"fulness", "ful", 1}, {"ousness", "ous", 1}, {"aliti", "al", 1},
    {"iviti", "ive", 1},   {"biliti", "ble", 1},
};

const Rule kStep3[] = {
    {"icate", "ic", 1}, {"ative", "", 1}, {"alize", "al", 1},
    {"iciti", "ic", 1}, {"ical", "ic", 1}, {"ful", "", 1},
    {"ness", "", 1},
};

const Rule kStep4[] = {
    {"al", "", 2},    {"ance", "", 2}, {"ence", "", 2}, {"er", "", 2},
    {"ic", "", 2},    {"able", "", 2}, {"ible", "", 2}, {"ant", "", 2},
    {"ement", "", 2}, {"ment", "", 2}, {"ent", "", 2},  {"ou", "", 2},
    {"ism", "", 2},   {"ate", "", 2},  {"iti", "", 2},  {"ous", "", 2},
    {"ive", "", 2},   {"ize", "", 2},
};

// Longest-match dispatch for a step's rule table.
void run_step(std::string& w, const Rule* rules, std::size_t n) {
  const Rule* best = nullptr;
  std::size_t best_len = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t len = std::strlen(rules[r].suffix);
    if (len > best_len && ends_with(w, rules[r].suffix)) {
      best = &rules[r];
      best_len = len;
    }
  }
  if (!best) return;
  const std::size_t stem_len = w.size() - best_len;
  if (measure(w, stem_len) > best->min_measure - 1) {
    w.resize(stem_len);
    w += best->replacement;
  }
}

void step_4_ion(std::string& w) {
  // ION deletes only after s or t; handled apart from the plain table.
  if (ends_with(w, "ion")) {
    const std::size_t stem_len = w.size() - 3;
    if (stem_len >= 1 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't') &&
        measure(w, stem_len) > 1)
      w.resize(stem_len);
  }
}

void step_5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  const std::size_t stem_len = w.size() - 1;
  const int m = measure(w, stem_len);
  if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.resize(stem_len);
}

void step_5b(std::string& w) {
  if (measure(w, w.size()) > 1 && double_cons(w, w.size()) && w.back() == 'l')
    w.pop_back();
}

}  // namespace

std::string porter_stem(std::string w) {
  if (w.size() <= 2) return w;
  for (char c : w)
    if (c < 'a' || c > 'z') return w;

  step_1a(w);
  step_1b(w);
  step_1c(w);
  run_step(w, kStep2, std::size(kStep2));
  run_step(w, kStep3, std::size(kStep3));
  // ION has a letter condition, so resolve it before the generic table when
  // it is the longest candidate.
  if (ends_with(w, "ion")) {
    step_4_ion(w);
  } else {
    run_step(w, kStep4, std::size(kStep4));
  }
  step_5a(w);
  step_5b(w);
  return w;
}

}  // namespace niche
