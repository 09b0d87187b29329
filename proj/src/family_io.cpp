#include "diamfam/family_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace diamfam {

namespace {

std::string strip(const std::string& line) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = line.find_last_not_of(" \t\r");
    return line.substr(a, b - a + 1);
}

std::uint64_t parse_member_line(const std::string& line, int n) {
    if (line.front() == '{') {
        if (line.back() != '}') {
            throw std::invalid_argument("unterminated brace list: " + line);
        }
        SetMask m = SetMask::empty_set(GroundSize(n));
        std::stringstream body(line.substr(1, line.size() - 2));
        std::string tok;
        while (std::getline(body, tok, ',')) {
            tok = strip(tok);
            if (tok.empty()) {
                throw std::invalid_argument("empty element in brace list: " + line);
            }
            m = m.with(std::stoi(tok));
        }
        return m.bits();
    }
    if (line.find_first_not_of("01") == std::string::npos) {
        if (static_cast<int>(line.size()) != n) {
            throw std::invalid_argument("bitstring length " + std::to_string(line.size()) +
                                        " does not match n=" + std::to_string(n));
        }
        std::uint64_t bits = 0;
        for (int j = 0; j < n; ++j) {
            if (line[static_cast<std::size_t>(j)] == '1') bits |= std::uint64_t{1} << j;
        }
        return bits;
    }
    throw std::invalid_argument("unrecognized member line: " + line);
}

}  // namespace

SetFamily read_family_text(std::istream& in) {
    std::string line;
    int n = 0;
    bool have_n = false;
    std::vector<std::uint64_t> masks;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (!have_n) {
            if (line.rfind("n=", 0) != 0) {
                throw std::invalid_argument("expected header line n=<int>, got: " + line);
            }
            n = std::stoi(line.substr(2));
            have_n = true;
            continue;
        }
        masks.push_back(parse_member_line(line, n));
    }
    if (!have_n) {
        throw std::invalid_argument("missing header line n=<int>");
    }
    return SetFamily::from_masks(GroundSize(n), std::move(masks), /*reject_duplicates=*/true);
}

SetFamily parse_family_text(const std::string& text) {
    std::istringstream in(text);
    return read_family_text(in);
}

void write_family_text(std::ostream& out, const SetFamily& f) {
    out << "n=" << f.ground_size() << "\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out << to_string(f.member(i)) << "\n";
    }
}

std::string family_to_text(const SetFamily& f) {
    std::ostringstream out;
    write_family_text(out, f);
    return out.str();
}

SetFamily parse_family_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("members")) {
        throw std::invalid_argument("family JSON requires keys \"n\" and \"members\"");
    }
    const int n = j.at("n").get<int>();
    std::vector<std::uint64_t> masks;
    for (const auto& member : j.at("members")) {
        masks.push_back(SetMask::of(GroundSize(n), member.get<std::vector<int>>()).bits());
    }
    return SetFamily::from_masks(GroundSize(n), std::move(masks), /*reject_duplicates=*/true);
}

std::string family_to_json(const SetFamily& f) {
    nlohmann::json j;
    j["n"] = f.ground_size();
    auto members = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        members.push_back(f.member(i).elements());
    }
    j["members"] = std::move(members);
    return j.dump(2);
}

namespace {
bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}
}  // namespace

SetFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    if (has_json_extension(path)) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_family_json(buf.str());
    }
    return read_family_text(in);
}

void save_family(const std::string& path, const SetFamily& f) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    if (has_json_extension(path)) {
        out << family_to_json(f) << "\n";
    } else {
        write_family_text(out, f);
    }
}

}  // namespace diamfam
