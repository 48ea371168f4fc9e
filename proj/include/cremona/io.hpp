#ifndef CREMONA_IO_HPP
#define CREMONA_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "basepoints.hpp"
#include "decompose.hpp"
#include "homaloidal.hpp"
#include "polyaut.hpp"
#include "word.hpp"

namespace cremona::io {

// nlohmann::json stores objects in a std::map, so keys always come out sorted.
using Json = nlohmann::json;

inline Json rational_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(0, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError(0, "rationals must be strings \"a/b\" or integers");
}

inline Json to_json(const Mat3& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back({rational_json(m(i, 0)), rational_json(m(i, 1)), rational_json(m(i, 2))});
    return rows;
}

inline Json to_json(const Word& w) {
    Json out = Json::array();
    for (const auto& l : w.letters()) {
        if (l.is_sigma()) {
            out.push_back({{"op", "sigma"}});
        } else {
            out.push_back({{"op", "linear"}, {"m", to_json(l.matrix())}});
        }
    }
    return out;
}

inline Word word_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError(0, "a word is a JSON array of letters");
    Word w;
    for (const auto& letter : j) {
        if (!letter.is_object() || !letter.contains("op")) throw ParseError(0, "each letter needs an \"op\" field");
        const std::string op = letter.at("op").get<std::string>();
        if (op == "sigma") {
            w.push_sigma();
        } else if (op == "linear") {
            const Json& rows = letter.at("m");
            if (!rows.is_array() || rows.size() != 3) throw ParseError(0, "a linear letter needs a 3x3 matrix");
            Mat3 m;
            for (int r = 0; r < 3; ++r) {
                if (!rows[r].is_array() || rows[r].size() != 3) throw ParseError(0, "a linear letter needs a 3x3 matrix");
                for (int c = 0; c < 3; ++c) m(r, c) = rational_from_json(rows[r][c]);
            }
            w.push_linear(m);
        } else {
            throw ParseError(0, "unknown letter op \"" + op + "\"");
        }
    }
    return w;
}

inline Json to_json(const ProjPoint& p) { return {rational_json(p[0]), rational_json(p[1]), rational_json(p[2])}; }

inline Json to_json(const BasePointReport& r) {
    Json pts = Json::array();
    for (const auto& bp : r.points) pts.push_back({{"m", bp.multiplicity}, {"p", to_json(bp.point)}});
    return {{"degree", r.degree}, {"points", pts}, {"deficiency_sq", r.deficiency_sq}, {"deficiency_lin", r.deficiency_lin}};
}

inline Json to_json(const CharVector& cv) {
    Json pts = Json::array();
    for (const auto& p : cv.points()) pts.push_back({{"m", p.multiplicity}, {"parent", p.parent ? Json(*p.parent) : Json(nullptr)}});
    return {{"d", cv.degree()}, {"points", pts}, {"complete", cv.complete()}};
}

inline CharVector charvec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("points"))
        throw ParseError(0, "a characteristic vector needs \"d\" and \"points\"");
    std::vector<BasePointNode> pts;
    for (const auto& p : j.at("points")) {
        BasePointNode n;
        if (p.is_number_integer()) {
            n.multiplicity = p.get<int>();
        } else {
            n.multiplicity = p.at("m").get<int>();
            if (p.contains("parent") && !p.at("parent").is_null()) n.parent = p.at("parent").get<std::size_t>();
        }
        pts.push_back(n);
    }
    return CharVector(j.at("d").get<int>(), std::move(pts), j.value("complete", true));
}

/// Compact form "d; m1, m2, ..." with every point proper.
inline CharVector charvec_from_compact(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError(0, "expected \"d; m1, m2, ...\"");
    const auto to_int = [](std::string_view s, std::size_t offset) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        if (b == std::string_view::npos) throw ParseError(offset, "expected an integer");
        const std::string t(s.substr(b, e - b + 1));
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw ParseError(offset + b, "expected an integer");
        }
        if (used != t.size()) throw ParseError(offset + b + used, "unexpected character");
        return v;
    };
    const int d = to_int(text.substr(0, semi), 0);
    std::vector<int> ms;
    std::string_view rest = text.substr(semi + 1);
    std::size_t offset = semi + 1;
    if (rest.find_first_not_of(" \t") != std::string_view::npos) {
        while (true) {
            const auto comma = rest.find(',');
            ms.push_back(to_int(rest.substr(0, comma), offset));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
            offset += comma + 1;
        }
    }
    return CharVector::proper(d, ms);
}

inline Json to_json(const JHPair& p) { return {{"h", p.h}, {"two_j", p.two_j}}; }

inline Json to_json(const BoundsReport& r) {
    return {{"count_ok", r.count_ok},           {"max_points", r.max_points},   {"per_point_ok", r.per_point_ok},
            {"point_count", r.point_count},     {"proximity_ok", r.proximity_ok}, {"strong_triple_ok", r.strong_triple_ok},
            {"triple_sum", r.triple_sum},       {"weak_triple_ok", r.weak_triple_ok}};
}

inline Json to_json(const DescentTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json centers = Json::array();
        for (const auto& c : s.centers) centers.push_back(c ? Json(*c) : Json("fresh"));
        Json step{{"after", to_json(s.after)}, {"case", std::string(1, s.case_tag)}, {"centers", centers}, {"jh", to_json(s.jh_after)}};
        if (s.case_b_exchange)
            step["case_b_exchange"] = {{"bezout", (*s.case_b_exchange)[0]}, {"two_j", (*s.case_b_exchange)[1]}};
        steps.push_back(std::move(step));
    }
    Json macro = Json::array();
    for (const auto& m : t.macro) macro.push_back(to_json(m));
    return {{"macro", macro}, {"sigma_count", t.sigma_count}, {"steps", steps}, {"terminated", t.terminated}};
}

inline Json to_json(const DegreeBounds& b) {
    return {{"lower", b.lower}, {"upper_general", b.upper_general}, {"upper_polyaut", b.upper_polyaut}};
}

inline Json to_json(const LamyTrace& t) {
    Json stages = Json::array();
    for (const auto& s : t.stages) stages.push_back({{"count_after", s.count_after}, {"label", s.label}, {"removed", s.removed}});
    return {{"aut_degree", t.aut_degree}, {"final", t.final_count}, {"initial", t.initial}, {"stages", stages}};
}

inline Json to_json(const VerifyReport& r) { return {{"sigma_count", r.sigma_count}, {"verified", r.verified}}; }

inline Json to_json(const DecompositionReport& r) {
    return {{"lower_bound", r.lower_bound},
            {"sigma_count", r.sigma_count},
            {"upper_bound_polyaut", r.upper_bound_polyaut},
            {"verified", r.verified},
            {"word", to_json(r.word)}};
}

inline Json to_json(const std::vector<JungFactor>& factors) {
    Json out = Json::array();
    for (const auto& f : factors) out.push_back({{"kind", std::string(factor_kind_name(f.kind))}, {"map", to_string(f.map)}});
    return out;
}

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
}

inline Word load_word(const std::string& path) { return word_from_json(parse_json(read_file(path))); }

}  // namespace cremona::io

#endif  // CREMONA_IO_HPP
