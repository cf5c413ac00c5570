/*
   Copyright 2026 The blocktest authors

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

#pragma once

#include <cstddef>
#include <functional>

namespace blocktest {

/// Resolves a requested thread count: values >= 1 are taken as-is, 0 means
/// "use BLOCKTEST_THREADS if set, else hardware concurrency".
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is handed
/// out as whole indices; every task writes only to its own slot, so results
/// are identical for any thread count. Exceptions from tasks are rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace blocktest
