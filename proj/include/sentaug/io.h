//
// Copyright 2026 The sentaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef SENTAUG_IO_H_
#define SENTAUG_IO_H_

#include <string>
#include <vector>

namespace sentaug {

// Reads a whole file. Throws DataError naming the path if it cannot be read.
std::string ReadFile(const std::string& path);

// Writes `contents` to a temporary sibling of `path` and renames it into
// place, so readers never observe a partially written file.
void WriteFileAtomic(const std::string& path, const std::string& contents);

// Splits on '\n', dropping a trailing '\r' from each line. A final newline
// does not produce an extra empty line.
std::vector<std::string> SplitLines(const std::string& text);

std::vector<std::string> Split(const std::string& text, char sep);

std::string Trim(const std::string& s);

std::string ToLower(std::string s);

}  // namespace sentaug

#endif  // SENTAUG_IO_H_
