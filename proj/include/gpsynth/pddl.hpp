#pragma once

#include <stdexcept>
#include <string>

#include "gpsynth/model.hpp"

namespace gpsynth {

// Position-bearing parse diagnostic.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

// STRIPS-fragment PDDL (:strips and :typing only).
StripsDomain parse_domain(const std::string& text);
StripsInstance parse_instance(const std::string& text, const StripsDomain& domain);

std::string print_domain(const StripsDomain& domain);
std::string print_instance(const StripsInstance& inst, const StripsDomain& domain,
                           const std::string& domain_name);

} // namespace gpsynth
