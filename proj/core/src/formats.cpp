#include "orbitcode/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace orbitcode {

namespace {

[[noreturn]] void fail(std::string_view name, int line, const std::string& message) {
    throw FormatError(std::string(name) + ":" + std::to_string(line) + ": " + message);
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open file");
    return in;
}

}  // namespace

std::string format_distance(int distance) {
    return distance == kInfiniteDistance ? "inf" : std::to_string(distance);
}

GroupFile read_group_file(std::istream& in, std::string_view name) {
    std::optional<int> degree, n;
    std::vector<Permutation> generators;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        if (line.starts_with("degree")) {
            std::istringstream fields(line);
            std::string key;
            int value;
            if (!(fields >> key >> value) || key != "degree" || value < 1)
                fail(name, line_no, "expected 'degree <m>' with m >= 1");
            if (degree) fail(name, line_no, "duplicate degree line");
            degree = value;
            continue;
        }
        if (line.starts_with("n ") || line == "n") {
            std::istringstream fields(line);
            std::string key;
            int value;
            if (!(fields >> key >> value) || value < 1)
                fail(name, line_no, "expected 'n <n>' with n >= 1");
            if (n) fail(name, line_no, "duplicate n line");
            n = value;
            continue;
        }
        if (!degree) fail(name, line_no, "generator before the degree line");
        try {
            generators.push_back(parse_cycles(line, *degree));
        } catch (const std::invalid_argument& e) {
            fail(name, line_no, e.what());
        }
    }
    if (!degree) fail(name, std::max(line_no, 1), "missing 'degree <m>' line");
    if (generators.empty()) fail(name, std::max(line_no, 1), "no generators");
    if (n) {
        if (*degree != 2 * *n)
            fail(name, 1, "degree " + std::to_string(*degree) + " is not 2n for n=" +
                              std::to_string(*n));
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (!is_doubleword_compatible(generators[i], *n))
                throw FormatError(std::string(name) + ": generator " + std::to_string(i + 1) +
                                  " is not doubleword-compatible for n=" + std::to_string(*n));
    }
    return GroupFile{PermutationGroup(*degree, std::move(generators)), n};
}

GroupFile load_group_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_group_file(in, path);
}

void write_group_file(std::ostream& out, const PermutationGroup& group, std::optional<int> n) {
    out << "degree " << group.degree() << "\n";
    if (n) out << "n " << *n << "\n";
    for (const auto& g : group.generators()) out << format_cycles(g) << "\n";
}

std::vector<Doubleword> read_seeds_file(std::istream& in, std::string_view name) {
    std::vector<Doubleword> seeds;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        try {
            seeds.push_back(Doubleword::parse(line));
        } catch (const std::invalid_argument& e) {
            fail(name, line_no, e.what());
        }
        if (seeds.size() > 1 && seeds.back().half_length() != seeds.front().half_length())
            fail(name, line_no, "doubleword length differs from earlier lines");
    }
    return seeds;
}

std::vector<Doubleword> load_seeds_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_seeds_file(in, path);
}

void write_seeds_file(std::ostream& out, std::span<const Doubleword> seeds) {
    for (const auto& s : seeds) out << s.to_string() << "\n";
}

CodeFileData read_code_file(std::istream& in, std::string_view name) {
    std::string raw;
    int line_no = 0;
    std::optional<int> length;
    std::optional<std::uint64_t> size;
    std::optional<int> min_distance;
    std::vector<std::uint64_t> words;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        if (line.starts_with("code")) {
            if (length) fail(name, line_no, "duplicate header line");
            std::istringstream fields(line);
            std::string token;
            fields >> token;  // "code"
            while (fields >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos)
                    fail(name, line_no, "expected key=value in header, found '" + token + "'");
                std::string key = token.substr(0, eq), value = token.substr(eq + 1);
                try {
                    if (key == "length")
                        length = std::stoi(value);
                    else if (key == "size")
                        size = std::stoull(value);
                    else if (key == "mindist")
                        min_distance = value == "inf" ? kInfiniteDistance : std::stoi(value);
                    else
                        fail(name, line_no, "unknown header key '" + key + "'");
                } catch (const std::logic_error&) {
                    fail(name, line_no, "bad value for header key '" + key + "'");
                }
            }
            if (!length || !size || !min_distance)
                fail(name, line_no, "header requires length=, size= and mindist=");
            continue;
        }
        if (!length) fail(name, line_no, "word before the 'code' header line");
        Codeword w = [&] {
            try {
                return Codeword::parse(line);
            } catch (const std::invalid_argument& e) {
                fail(name, line_no, e.what());
            }
        }();
        if (w.length() != *length)
            fail(name, line_no, "word length " + std::to_string(w.length()) +
                                    " does not match header length " + std::to_string(*length));
        words.push_back(w.value());
    }
    if (!length) fail(name, std::max(line_no, 1), "missing 'code' header line");
    if (words.size() != *size)
        throw FormatError(std::string(name) + ": header says size=" + std::to_string(*size) +
                          " but file has " + std::to_string(words.size()) + " words");
    Code code = [&] {
        try {
            return make_code(*length, std::move(words), *min_distance);
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string(name) + ": " + e.what());
        }
    }();
    return CodeFileData{std::move(code), *min_distance};
}

CodeFileData load_code_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_code_file(in, path);
}

void write_code_file(std::ostream& out, const Code& c, int min_distance) {
    out << "code length=" << c.length << " size=" << c.size()
        << " mindist=" << format_distance(min_distance) << "\n";
    for (std::uint64_t w : c.words) out << Codeword(c.length, w).to_string() << "\n";
}

std::vector<Orbit> read_orbit_list(std::istream& in, std::string_view name) {
    std::vector<Orbit> orbits;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string rep_token, size_token, dist_token;
        if (!(fields >> rep_token >> size_token >> dist_token) ||
            !rep_token.starts_with("rep=") || !size_token.starts_with("size=") ||
            !dist_token.starts_with("mindist="))
            fail(name, line_no, "expected 'rep=<bits> size=<k> mindist=<d|inf>'");
        try {
            Doubleword rep = Doubleword::parse(rep_token.substr(4));
            std::uint64_t size = std::stoull(size_token.substr(5));
            std::string dist = dist_token.substr(8);
            int min_distance = dist == "inf" ? kInfiniteDistance : std::stoi(dist);
            orbits.push_back(Orbit{rep, size, min_distance});
        } catch (const std::logic_error& e) {
            fail(name, line_no, e.what());
        }
    }
    return orbits;
}

std::vector<Orbit> load_orbit_list(const std::string& path) {
    auto in = open_or_throw(path);
    return read_orbit_list(in, path);
}

void write_orbit_list(std::ostream& out, std::span<const Orbit> orbits) {
    for (const auto& orbit : orbits)
        out << "rep=" << orbit.rep.to_string() << " size=" << orbit.size
            << " mindist=" << format_distance(orbit.min_distance) << "\n";
}

}  // namespace orbitcode
