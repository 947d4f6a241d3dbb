/*
 * Copyright 2026 The flotcol Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FLOTCOL_CLI_HPP_
#define FLOTCOL_CLI_HPP_

#include <ostream>

namespace flotcol
{

/// Entry point of the flotcol command-line tool. Returns 0 on success,
/// 1 on invalid input and 2 on numerical failure; errors are reported as
/// a JSON object on err.
int run_cli(int argc, char ** argv, std::ostream & out, std::ostream & err);

}  // namespace flotcol

#endif  // FLOTCOL_CLI_HPP_
