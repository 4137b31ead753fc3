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

#ifndef TEXTNET_CSV_HPP_
#define TEXTNET_CSV_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace textnet::csv {

// One parsed record plus the 1-based line it started on.
struct Record {
  std::vector<std::string> fields;
  int line = 0;
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. Lines starting with '#' outside quotes are skipped, as are
// blank lines. Throws textnet::Error on an unterminated quote.
std::vector<Record> read(std::istream& in);

// Quotes a field only when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace textnet::csv

#endif  // TEXTNET_CSV_HPP_
