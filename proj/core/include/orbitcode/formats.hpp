#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcode/code.hpp"
#include "orbitcode/orbit.hpp"
#include "orbitcode/perm.hpp"
#include "orbitcode/word.hpp"

namespace orbitcode {

// Malformed input file; the message carries "<file>:<line>: <reason>".
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Group file: "degree <m>", optional "n <n>", then one generator per line in
// cycle notation. '#' starts a comment; blank lines are skipped.
struct GroupFile {
    PermutationGroup group;
    std::optional<int> n;  // enables the doubleword-compatibility check
};

GroupFile read_group_file(std::istream& in, std::string_view name);
GroupFile load_group_file(const std::string& path);
void write_group_file(std::ostream& out, const PermutationGroup& group, std::optional<int> n);

// Seed/representative file: one 0/1 string of length 2n per line.
std::vector<Doubleword> read_seeds_file(std::istream& in, std::string_view name);
std::vector<Doubleword> load_seeds_file(const std::string& path);
void write_seeds_file(std::ostream& out, std::span<const Doubleword> seeds);

// Code file: header "code length=<n> size=<M> mindist=<d>", one word per line.
struct CodeFileData {
    Code code;                 // claimed_min_distance taken from the header
    int header_min_distance;   // kInfiniteDistance when the header says "inf"
};

CodeFileData read_code_file(std::istream& in, std::string_view name);
CodeFileData load_code_file(const std::string& path);
void write_code_file(std::ostream& out, const Code& c, int min_distance);

// Orbit list: one line per orbit, "rep=<bits> size=<k> mindist=<d|inf>".
std::vector<Orbit> read_orbit_list(std::istream& in, std::string_view name);
std::vector<Orbit> load_orbit_list(const std::string& path);
void write_orbit_list(std::ostream& out, std::span<const Orbit> orbits);

// "inf" for kInfiniteDistance, the decimal value otherwise.
std::string format_distance(int distance);

}  // namespace orbitcode
