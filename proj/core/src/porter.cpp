#include "fintext/porter.hpp"

#include <array>

namespace fintext {

namespace {

// Working buffer for one word. Suffix conditions (m, *v*, *d, *o) are
// evaluated on the stem that remains in front of a candidate suffix.
class PorterBuffer {
 public:
  explicit PorterBuffer(std::string_view word) : word_(word) {}

  std::string str() const { return word_; }

  bool is_consonant(std::size_t i) const {
    switch (word_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in word_[0, end).
  int measure(std::size_t end) const {
    int m = 0;
    std::size_t i = 0;
    while (i < end && is_consonant(i)) ++i;
    while (i < end) {
      while (i < end && !is_consonant(i)) ++i;
      if (i >= end) break;
      ++m;
      while (i < end && is_consonant(i)) ++i;
    }
    return m;
  }

  bool has_vowel(std::size_t end) const {
    for (std::size_t i = 0; i < end; ++i) {
      if (!is_consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant_at_end() const {
    std::size_t n = word_.size();
    return n >= 2 && word_[n - 1] == word_[n - 2] && is_consonant(n - 1);
  }

  // cvc test on word_[0, end) with the final consonant not w, x, or y.
  bool ends_cvc(std::size_t end) const {
    if (end < 3) return false;
    if (!is_consonant(end - 3) || is_consonant(end - 2) || !is_consonant(end - 1)) {
      return false;
    }
    char c = word_[end - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends_with(std::string_view suffix) const {
    return word_.size() >= suffix.size() &&
           word_.compare(word_.size() - suffix.size(), suffix.size(), suffix) == 0;
  }

  std::size_t stem_length(std::string_view suffix) const {
    return word_.size() - suffix.size();
  }

  void truncate(std::size_t new_size) { word_.resize(new_size); }

  void replace_suffix(std::string_view suffix, std::string_view replacement) {
    word_.resize(word_.size() - suffix.size());
    word_.append(replacement);
  }

  std::size_t size() const { return word_.size(); }
  char back() const { return word_.back(); }

 private:
  std::string word_;
};

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the longest matching rule whose stem has measure > min_measure.
// Once a suffix matches, no shorter rule is considered.
bool apply_rules(PorterBuffer& w, std::initializer_list<Rule> rules,
                 int min_measure) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (w.ends_with(r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size())) {
      best = &r;
    }
  }
  if (best == nullptr) return false;
  if (w.measure(w.stem_length(best->suffix)) > min_measure) {
    w.replace_suffix(best->suffix, best->replacement);
    return true;
  }
  return false;
}

// plurals and -ed / -ing
void step1ab(PorterBuffer& w) {
  if (w.back() == 's') {
    if (w.ends_with("sses")) {
      w.truncate(w.size() - 2);
    } else if (w.ends_with("ies")) {
      w.replace_suffix("ies", "i");
    } else if (w.size() >= 2 && w.str()[w.size() - 2] != 's') {
      w.truncate(w.size() - 1);
    }
  }

  bool cleanup = false;
  if (w.ends_with("eed")) {
    if (w.measure(w.stem_length("eed")) > 0) w.truncate(w.size() - 1);
  } else if (w.ends_with("ed") && w.has_vowel(w.stem_length("ed"))) {
    w.truncate(w.size() - 2);
    cleanup = true;
  } else if (w.ends_with("ing") && w.has_vowel(w.stem_length("ing"))) {
    w.truncate(w.size() - 3);
    cleanup = true;
  }
  if (!cleanup) return;

  if (w.ends_with("at") || w.ends_with("bl") || w.ends_with("iz")) {
    w.replace_suffix("", "e");
  } else if (w.double_consonant_at_end()) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.truncate(w.size() - 1);
  } else if (w.measure(w.size()) == 1 && w.ends_cvc(w.size())) {
    w.replace_suffix("", "e");
  }
}

void step1c(PorterBuffer& w) {
  if (w.back() == 'y' && w.has_vowel(w.size() - 1)) {
    w.replace_suffix("y", "i");
  }
}

void step2(PorterBuffer& w) {
  apply_rules(w,
              {{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
               {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
               {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
               {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
               {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
               {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
               {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"}},
              0);
}

void step3(PorterBuffer& w) {
  apply_rules(w,
              {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
               {"ical", "ic"},  {"ful", ""},   {"ness", ""}},
              0);
}

void step4(PorterBuffer& w) {
  static constexpr std::array<std::string_view, 19> suffixes = {
      "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
      "ment", "ent",  "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive",
      "ize"};
  std::string_view best;
  for (std::string_view s : suffixes) {
    if (w.ends_with(s) && s.size() > best.size()) best = s;
  }
  if (best.empty()) return;
  std::size_t stem = w.stem_length(best);
  if (w.measure(stem) <= 1) return;
  if (best == "ion") {
    if (stem == 0) return;
    char prev = w.str()[stem - 1];
    if (prev != 's' && prev != 't') return;
  }
  w.truncate(stem);
}

void step5(PorterBuffer& w) {
  if (w.back() == 'e') {
    int m = w.measure(w.size());
    if (m > 1 || (m == 1 && !w.ends_cvc(w.size() - 1))) {
      w.truncate(w.size() - 1);
    }
  }
  if (w.back() == 'l' && w.double_consonant_at_end() && w.measure(w.size()) > 1) {
    w.truncate(w.size() - 1);
  }
}

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  PorterBuffer w(word);
  step1ab(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5(w);
  return w.str();
}

}  // namespace fintext
