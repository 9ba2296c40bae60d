// Copyright 2026 The Counterlab Authors
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

#ifndef COUNTERLAB_SRC_PREFIX_RUNNER_HPP
#define COUNTERLAB_SRC_PREFIX_RUNNER_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "counterlab/core.hpp"

namespace counterlab::detail {

// Evaluates every input by walking them in sorted order and keeping the states of the current
// prefix on a stack, so a shared prefix is simulated once.
template <class State, class Step, class Finish>
auto run_sharing_prefixes(const Alphabet &alphabet, std::span<const std::string> inputs, State start, Step step,
                          Finish finish) {
    using Result = decltype(finish(start));
    for (const std::string &w : inputs) {
        encode_tape(alphabet, w);
    }
    std::vector<std::size_t> order(inputs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inputs[a] < inputs[b]; });

    std::vector<Result> results(inputs.size());
    std::vector<State> stack;
    stack.push_back(step(start, Alphabet::left_end));
    std::string current;
    for (std::size_t index : order) {
        const std::string &w = inputs[index];
        std::size_t common = 0;
        while (common < current.size() && common < w.size() && current[common] == w[common]) {
            common++;
        }
        stack.resize(common + 1);
        for (std::size_t i = common; i < w.size(); i++) {
            stack.push_back(step(stack.back(), *alphabet.index_of(w[i])));
        }
        current = w;
        results[index] = finish(step(stack.back(), alphabet.right_end()));
    }
    return results;
}

}  // namespace counterlab::detail

#endif
