#include "bdc/cli/batch.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "bdc/cli/parallel.hpp"

namespace bdc::cli {

std::size_t run_batch(std::istream& in, std::ostream& out, const ComputeOptions& options, std::size_t jobs) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.emplace_back(number, line);
    }

    std::vector<std::string> results(lines.size());
    std::vector<char> failed(lines.size(), 0);
    parallel_for(lines.size(), jobs, [&](std::size_t i) {
        try {
            const ParsedInstance p = parse_instance_text(lines[i].second);
            results[i] = result_json(p, compute(p, options)).dump();
        } catch (const std::exception& e) {
            results[i] = error_json(e, lines[i].first).dump();
            failed[i] = 1;
        }
    });

    std::size_t errors = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        out << results[i] << '\n';
        errors += failed[i];
    }
    return errors;
}

}  // namespace bdc::cli
