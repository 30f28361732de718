/*
   Copyright 2026 The liouville authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIOUVILLE_TOOLS_CLI_HPP
#define LIOUVILLE_TOOLS_CLI_HPP

#include <ostream>

namespace liouville::cli {

// Exit codes: 0 integrated, 1 usage or parse error, 2 no gamma form found,
// 3 unsupported, 4 verification or corpus failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liouville::cli

#endif  // LIOUVILLE_TOOLS_CLI_HPP
