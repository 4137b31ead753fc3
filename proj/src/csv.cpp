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

#include "textnet/csv.hpp"

#include <iterator>

#include "textnet/common.hpp"

namespace textnet::csv {

std::vector<Record> read(std::istream& in) {
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<Record> records;
  std::size_t i = 0;
  int line = 1;
  // skip a UTF-8 byte order mark
  if (data.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;

  while (i < data.size()) {
    if (data[i] == '\n' || data[i] == '\r') {
      if (data[i] == '\n') ++line;
      ++i;
      continue;
    }
    if (data[i] == '#') {
      while (i < data.size() && data[i] != '\n') ++i;
      continue;
    }
    Record rec;
    rec.line = line;
    std::string field;
    bool in_quotes = false;
    bool done = false;
    while (!done) {
      if (i >= data.size()) {
        if (in_quotes) {
          throw Error("csv: unterminated quote in record starting at line " +
                      std::to_string(rec.line));
        }
        rec.fields.push_back(std::move(field));
        break;
      }
      const char c = data[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < data.size() && data[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          in_quotes = true;
          ++i;
          break;
        case ',':
          rec.fields.push_back(std::move(field));
          field.clear();
          ++i;
          break;
        case '\r':
          ++i;
          break;
        case '\n':
          rec.fields.push_back(std::move(field));
          ++line;
          ++i;
          done = true;
          break;
        default:
          field.push_back(c);
          ++i;
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace textnet::csv
