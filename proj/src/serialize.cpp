#include "gtc/serialize.hpp"

#include <sstream>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, sep)) out.push_back(piece);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

int parse_int(const std::string& raw) {
    const std::string t = trim(raw);
    if (t.empty()) throw ParseError("empty coordinate");
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw ParseError("not an integer: \"" + t + "\"");
    }
    if (used != t.size()) throw ParseError("not an integer: \"" + t + "\"");
    return v;
}

}  // namespace

std::vector<Point> parse_point_list(const std::string& text, int r) {
    std::vector<Point> pts;
    if (trim(text).empty()) return pts;
    for (const std::string& chunk : split(text, ';')) {
        const std::vector<std::string> coords = split(chunk, ',');
        if (static_cast<int>(coords.size()) != r)
            throw ParseError("point \"" + trim(chunk) + "\" has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(r));
        Point p;
        p.reserve(coords.size());
        for (const std::string& c : coords) p.push_back(parse_int(c));
        pts.push_back(std::move(p));
    }
    return pts;
}

std::string format_point_list(const std::vector<Point>& pts) {
    std::string out;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ';';
        for (size_t j = 0; j < pts[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(pts[i][j]);
        }
    }
    return out;
}

json point_list_to_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(p);
    return arr;
}

json matrix_to_json(const FqMatrix& A) {
    json rows = json::array();
    for (int i = 0; i < A.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < A.cols; ++j) row.push_back(static_cast<int>(A.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string matrix_join(const FqMatrix& A, char sep) {
    std::string out;
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) {
            if (j) out += sep;
            out += std::to_string(A.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string matrix_to_text(const FqMatrix& A) { return matrix_join(A, ' '); }
std::string matrix_to_csv(const FqMatrix& A) { return matrix_join(A, ','); }

Polytope polytope_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("polytope JSON must be an object");
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw ParseError("polytope JSON needs an integer \"r\"");
    Polytope P;
    P.r = j["r"].get<int>();
    if (P.r < 1) throw ParseError("polytope dimension must be positive");

    if (!j.contains("bounds") || !j["bounds"].is_array() ||
        static_cast<int>(j["bounds"].size()) != P.r)
        throw ParseError("polytope JSON needs \"bounds\", one [lo,hi] pair per axis");
    for (const auto& b : j["bounds"]) {
        if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
            throw ParseError("each bound must be an integer pair [lo,hi]");
        long long lo = b[0].get<long long>(), hi = b[1].get<long long>();
        if (lo > hi) throw ParseError("bound has lo > hi");
        P.bounds.emplace_back(lo, hi);
    }

    if (j.contains("ineqs")) {
        if (!j["ineqs"].is_array()) throw ParseError("\"ineqs\" must be an array");
        for (const auto& iq : j["ineqs"]) {
            if (!iq.is_object() || !iq.contains("a") || !iq.contains("b") || !iq["a"].is_array() ||
                static_cast<int>(iq["a"].size()) != P.r || !iq["b"].is_number_integer())
                throw ParseError("each inequality needs \"a\" (length-r array) and integer \"b\"");
            Polytope::Ineq ineq;
            for (const auto& c : iq["a"]) {
                if (!c.is_number_integer()) throw ParseError("inequality coefficients must be integers");
                ineq.a.push_back(c.get<long long>());
            }
            ineq.b = iq["b"].get<long long>();
            P.ineqs.push_back(std::move(ineq));
        }
    }
    return P;
}

std::vector<Codeword> codewords_from_json(const json& j, const Field& F, const OrderedH& order) {
    if (!j.is_array()) throw ParseError("codeword input must be a JSON array of vectors");
    std::vector<Codeword> out;
    for (const auto& vec : j) {
        if (!vec.is_array() || vec.size() != static_cast<size_t>(order.n()))
            throw ParseError("each codeword must be an array of " + std::to_string(order.n()) +
                             " element indices");
        Codeword c;
        c.grid = order.grid;
        c.values.reserve(vec.size());
        for (const auto& e : vec) {
            if (!e.is_number_integer()) throw ParseError("element indices must be integers");
            long long v = e.get<long long>();
            if (v < 0 || v >= F.q())
                throw ParseError("element index " + std::to_string(v) + " outside 0.." +
                                 std::to_string(F.q() - 1));
            c.values.push_back(static_cast<Elem>(v));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace gtc
