// Copyright 2026 The catseg Authors.
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

#include "catseg/vertical.h"

#include <fstream>
#include <sstream>

#include "catseg/error.h"
#include "catseg/text.h"

namespace catseg {

VerticalDocument ParseVertical(std::string_view text) {
  VerticalDocument doc;
  Sentence current;
  auto flush = [&]() {
    if (!current.tokens.empty()) {
      doc.sentences.push_back(std::move(current));
      current = Sentence();
    }
  };

  const std::vector<std::string> lines = SplitLines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string &line = lines[i];
    const int line_number = static_cast<int>(i) + 1;
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (line == "#" || line.rfind("# ", 0) == 0) {
      std::string body(Trim(std::string_view(line).substr(1)));
      size_t eq = body.find(" = ");
      if (eq == std::string::npos) {
        doc.metadata.emplace_back(body, "");
      } else {
        doc.metadata.emplace_back(std::string(Trim(body.substr(0, eq))),
                                  std::string(Trim(body.substr(eq + 3))));
      }
      continue;
    }
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated fields, found " +
                           std::to_string(fields.size()),
                       line_number);
    }
    for (const std::string &field : fields) {
      if (field.empty()) throw ParseError("empty field", line_number);
    }
    current.tokens.push_back(Token{current.size(), std::move(fields[0]),
                                   ToLower(fields[1]), std::move(fields[2])});
  }
  flush();
  if (doc.sentences.empty()) throw ParseError("empty input");
  return doc;
}

std::string SerializeVertical(const VerticalDocument &doc) {
  std::string out;
  for (const auto &[key, value] : doc.metadata) {
    out += "# " + key;
    if (!value.empty()) out += " = " + value;
    out += '\n';
  }
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    if (s > 0) out += '\n';
    for (const Token &token : doc.sentences[s].tokens) {
      out += token.form + '\t' + token.lemma + '\t' + token.tag + '\n';
    }
  }
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace catseg
