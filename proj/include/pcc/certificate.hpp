#pragma once

#include <string>
#include <vector>

#include "pcc/structures.hpp"

namespace pcc {

enum class CertKind { TwoFactor, CycleOfLength, PathCover, Triangle };

// Tagged witness a validator can check without trusting the producer.
// `note` records the producing algorithm and its parameters.
struct Certificate {
    CertKind kind = CertKind::TwoFactor;
    CycleFamily family;          // TwoFactor
    OrientedCycle cycle;         // CycleOfLength, Triangle
    int length = 0;              // CycleOfLength
    std::vector<PCPath> paths;   // PathCover
    std::string note;

    static Certificate two_factor(CycleFamily f, std::string note);
    static Certificate cycle_of_length(OrientedCycle c, int length, std::string note);
    static Certificate path_cover(std::vector<PCPath> p, std::string note);
    static Certificate triangle(OrientedCycle c, std::string note);
};

struct Validation {
    bool ok = false;
    std::string reason;  // violated condition when !ok
};

Validation validate_certificate(const EdgeColouredGraph& g, const Certificate& cert);

struct CertParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented text block; see README for the format. Round-trips losslessly.
std::string to_text(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace pcc
