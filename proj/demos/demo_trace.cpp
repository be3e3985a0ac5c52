// Traces a generator word through the apparatus, one state per step.

#include <octoloop/apparatus.hpp>

#include <iostream>
#include <vector>

int main() {
    using namespace octoloop;
    const std::vector<BasisIndex> word = {BasisIndex::Lj, BasisIndex::k};
    const RunResult r = run_word(word, /*want_trace=*/true);
    for (std::size_t step = 0; step < r.trace.size(); ++step) {
        const std::string op = step == 0 ? "start" : std::string(basis_name(word[step - 1]));
        std::cout << trace_line(step, op, r.trace[step]) << "\n";
    }
    std::cout << "result: " << name(r.final) << "\n";
    return 0;
}
