// Copyright 2026 The textnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "textnet/stemmer.hpp"

namespace textnet {
namespace {

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

// Porter's definition: y is a consonant at the start or after a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 || !is_consonant(w, i - 1);
    default:
      return true;
  }
}

bool has_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) ||
      !is_consonant(w, n - 1)) {
    return false;
  }
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

std::string strip_plural(std::string_view w) {
  if (ends_with(w, "sses")) return std::string(w.substr(0, w.size() - 2));
  if (ends_with(w, "ies")) {
    std::string out(w.substr(0, w.size() - 3));
    out += w.size() > 4 ? "y" : "ie";
    return out;
  }
  if (ends_with(w, "xes") || ends_with(w, "ches") || ends_with(w, "shes") ||
      ends_with(w, "zzes")) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) {
    return std::string(w);
  }
  if (ends_with(w, "s") && w.size() > 3 &&
      has_vowel(w.substr(0, w.size() - 1))) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

std::string strip_verbal(std::string w) {
  if (ends_with(w, "eed")) {
    if (porter_measure(std::string_view(w).substr(0, w.size() - 3)) > 0) {
      w.pop_back();
    }
    return w;
  }
  std::size_t cut = 0;
  if (ends_with(w, "ed")) {
    cut = 2;
  } else if (ends_with(w, "ing")) {
    cut = 3;
  }
  if (cut == 0) return w;
  const std::string_view stem = std::string_view(w).substr(0, w.size() - cut);
  if (!has_vowel(stem)) return w;
  std::string out(stem);
  if (ends_with(out, "at") || ends_with(out, "bl") || ends_with(out, "iz")) {
    out.push_back('e');
  } else if (ends_double_consonant(out)) {
    const char last = out.back();
    if (last != 'l' && last != 's' && last != 'z') out.pop_back();
  } else if (porter_measure(out) == 1 && ends_cvc(out)) {
    out.push_back('e');
  }
  return out;
}

}  // namespace

int porter_measure(std::string_view w) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

std::string inflectional_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  return strip_verbal(strip_plural(word));
}

}  // namespace textnet
