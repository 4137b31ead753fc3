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

#ifndef TEXTNET_STEMMER_HPP_
#define TEXTNET_STEMMER_HPP_

#include <string>
#include <string_view>

namespace textnet {

// Inflectional suffix stripper for lowercase ASCII words. It only undoes
// plural / third-person "-s" and "-ed" / "-ing", so output stays close to a
// dictionary form ("properties" -> "property", "hoping" -> "hope").
//
// Plural rules, first match wins:
//   sses -> ss                      classes   -> class
//   ies  -> y   (word length > 4)   cities    -> city
//   ies  -> ie  (otherwise)         ties      -> tie
//   xes, ches, shes, zzes -> drop "es"  boxes -> box
//   ss, us, is -> unchanged         glass, status, this
//   s    -> drop (word length > 3 and the rest contains a vowel)
//
// Verb rules follow Porter's step 1b: "eed" -> "ee" when the measure of the
// stem is positive; otherwise "ed" / "ing" are removed when the stem holds a
// vowel, then "at"/"bl"/"iz" get an "e" back, a doubled final consonant
// other than l/s/z is undoubled, and a short consonant-vowel-consonant stem
// of measure 1 gets an "e" back.
std::string inflectional_stem(std::string_view word);

// Porter's measure m of a word, the number of VC sequences in [C](VC)^m[V].
int porter_measure(std::string_view word);

}  // namespace textnet

#endif  // TEXTNET_STEMMER_HPP_
