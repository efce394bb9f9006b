#include "mdf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mdf {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        fail(errc::input_error, "bad " + what + ": '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(errc::input_error, "bad " + what + ": '" + s + "'");
    }
}

// "key=value" → value, or fail.
std::string expect_kv(const std::string& token, const std::string& key) {
    auto eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key)
        fail(errc::input_error, "expected '" + key + "=...', got '" + token + "'");
    return token.substr(eq + 1);
}

std::vector<std::string> content_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::input_error, "cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) fail(errc::input_error, "'" + path + "' has no content");
    return lines;
}

}  // namespace

Fq parse_field_spec(const std::string& spec) {
    auto caret = spec.find('^');
    std::uint64_t p, k = 1;
    if (caret == std::string::npos) {
        p = parse_u64(spec, "field order");
    } else {
        p = parse_u64(spec.substr(0, caret), "field characteristic");
        k = parse_u64(spec.substr(caret + 1), "field extension degree");
    }
    return Fq::make(p, static_cast<int>(k));
}

MonomialIdeal load_ideal(const std::string& path) {
    auto lines = content_lines(path);
    int s = static_cast<int>(parse_u64(expect_kv(lines[0], "s"), "variable count"));
    std::vector<ExpVec> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream iss(lines[i]);
        ExpVec g;
        long long e;
        while (iss >> e) {
            if (e < 0) fail(errc::input_error, "negative exponent in '" + path + "'");
            g.push_back(static_cast<int>(e));
        }
        if (!iss.eof()) fail(errc::input_error, "bad exponent line in '" + path + "'");
        gens.push_back(std::move(g));
    }
    return minimalize(s, std::move(gens));
}

std::vector<long long> CartesianSpec::sizes() const {
    std::vector<long long> out;
    for (const auto& A : factors) out.push_back(static_cast<long long>(A.size()));
    return out;
}

CartesianSpec parse_cartesian_spec(const std::string& text) {
    std::istringstream iss(text);
    std::string token;
    if (!(iss >> token) || token != "cartesian")
        fail(errc::input_error, "cartesian spec must start with 'cartesian'");
    if (!(iss >> token)) fail(errc::input_error, "cartesian spec missing 'q=...'");
    CartesianSpec spec{parse_field_spec(expect_kv(token, "q")), {}};

    int next = 2;
    while (iss >> token) {
        std::string list = expect_kv(token, "A" + std::to_string(next));
        std::erase_if(list, [](char c) { return c == '{' || c == '}'; });
        std::vector<FieldElem> A;
        std::istringstream ls(list);
        std::string item;
        while (std::getline(ls, item, ',')) {
            std::uint64_t idx = parse_u64(item, "element index");
            if (idx >= spec.F.q()) fail(errc::input_error, "element index out of range");
            A.push_back(spec.F.elem(idx));
        }
        spec.factors.push_back(std::move(A));
        ++next;
    }
    if (spec.factors.empty()) fail(errc::empty_factor, "cartesian spec has no factors");
    return spec;
}

PointSet load_points(const std::string& path) {
    auto lines = content_lines(path);
    if (lines[0].rfind("cartesian", 0) == 0) return parse_cartesian_spec(lines[0]).pointset();

    std::istringstream head(lines[0]);
    std::string qtok, stok;
    if (!(head >> qtok >> stok)) fail(errc::input_error, "bad header in '" + path + "'");
    Fq F = parse_field_spec(expect_kv(qtok, "q"));
    int s = static_cast<int>(parse_u64(expect_kv(stok, "s"), "coordinate count"));

    std::vector<std::vector<FieldElem>> raws;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream iss(lines[i]);
        std::vector<FieldElem> pt;
        std::uint64_t idx;
        while (iss >> idx) {
            if (idx >= F.q()) fail(errc::input_error, "element index out of range in '" + path + "'");
            pt.push_back(F.elem(idx));
        }
        if (!iss.eof()) fail(errc::input_error, "bad point line in '" + path + "'");
        raws.push_back(std::move(pt));
    }
    return make_pointset(F, s, raws);
}

}  // namespace mdf
