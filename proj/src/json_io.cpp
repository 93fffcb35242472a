#include "twistcs/json_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace twistcs {

namespace {

using nlohmann::json;

json bipoly_json_value(const BiPoly& p) {
    json j;
    j["vars"] = {p.vars().first, p.vars().second};
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({key.first, key.second, c.get_str()});
    j["terms"] = std::move(terms);
    return j;
}

json integer_json(const BigInt& c) {
    static const BigInt lim = BigInt(1) << 53;
    if (abs(c) < lim) return json(c.get_si());
    return json(c.get_str());
}

// Coefficient-in-B rendered without spaces, e.g. "2*B^2-1" or "2-2*B^2".
// Terms print in descending B-degree unless that leads with a negative term
// while ascending order leads with a positive one.
std::string render_coeff_poly(const std::string& var,
                              const std::vector<std::pair<long, BigInt>>& terms) {
    auto term_str = [&](const std::pair<long, BigInt>& t, bool first) {
        const auto& [e, c] = t;
        std::string s;
        BigInt a = abs(c);
        bool neg = c < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        if (a != 1 || e == 0) {
            s += a.get_str();
            if (e != 0) s += "*";
        }
        if (e != 0) {
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    };
    std::vector<std::pair<long, BigInt>> desc(terms.rbegin(), terms.rend());
    bool flip = desc.front().second < 0 && terms.front().second > 0;
    const auto& order = flip ? terms : desc;
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) out += term_str(order[i], i == 0);
    return out;
}

void append_csv_complex(std::string& out, std::complex<double> z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
    out += buf;
}

}  // namespace

std::string bipoly_to_json(const BiPoly& p) { return bipoly_json_value(p).dump(); }

BiPoly bipoly_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bipoly_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms") ||
        !j["vars"].is_array() || j["vars"].size() != 2 ||
        !j["terms"].is_array())
        throw std::invalid_argument("bipoly_from_json: malformed document");
    BiPoly p = BiPoly::zero(j["vars"][0].get<std::string>(),
                            j["vars"][1].get<std::string>());
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer())
            throw std::invalid_argument("bipoly_from_json: malformed term");
        BigInt c;
        if (t[2].is_string())
            c = BigInt(t[2].get<std::string>());
        else if (t[2].is_number_integer())
            c = BigInt(t[2].get<long>());
        else
            throw std::invalid_argument("bipoly_from_json: malformed coefficient");
        long i = t[0].get<long>(), k = t[1].get<long>();
        if (p.coeff(i, k) != 0)
            throw std::invalid_argument("bipoly_from_json: duplicate exponent pair");
        if (c != 0) p.set_term(i, k, c);
    }
    return p;
}

std::string polygon_to_json(const BiPoly& p) {
    NewtonPolygon poly = newton_polygon(p);
    json j;
    json verts = json::array();
    for (const auto& v : poly.vertices) verts.push_back({v.first, v.second});
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& e : poly.edges) {
        EdgePoly ep = edge_polynomial(p, e);
        json coeffs = json::array();
        for (const BigInt& c : ep.coeffs) coeffs.push_back(integer_json(c));
        edges.push_back({{"slope", e.slope.str()}, {"poly_t", std::move(coeffs)}});
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string render_pdist(const BiPoly& p) {
    if (p.is_zero()) return "0";
    // Bucket terms by V-degree, ascending B within each bucket.
    std::map<long, std::vector<std::pair<long, BigInt>>> groups;
    for (const auto& [key, c] : p.terms())
        groups[key.first].emplace_back(key.second, c);
    std::string out;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        long vexp = it->first;
        std::string coeff = render_coeff_poly(p.vars().second, it->second);
        std::string piece;
        if (vexp == 0) {
            piece = coeff;
        } else {
            std::string vpart = p.vars().first;
            if (vexp != 1) vpart += "^" + std::to_string(vexp);
            if (coeff == "1")
                piece = vpart;
            else if (coeff == "-1")
                piece = "-" + vpart;
            else if (it->second.size() > 1)
                piece = "(" + coeff + ")*" + vpart;
            else
                piece = coeff + "*" + vpart;
        }
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " " + piece;
        else
            out += " + " + piece;
    }
    return out;
}

std::string render_apoly(const BiPoly& p) {
    if (p.is_zero()) return "0";
    // Terms ordered by ascending (M-degree, L-degree): vars are (L, M).
    std::vector<std::tuple<long, long, BigInt>> terms;
    for (const auto& [key, c] : p.terms())
        terms.emplace_back(key.second, key.first, c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(std::get<0>(a), std::get<1>(a)) <
                         std::pair(std::get<0>(b), std::get<1>(b));
              });
    std::string out;
    for (const auto& [mexp, lexp, c] : terms) {
        BigInt a = abs(c);
        bool neg = c < 0;
        std::string body;
        bool have_var = lexp != 0 || mexp != 0;
        if (a != 1 || !have_var) body = a.get_str();
        if (lexp != 0) {
            if (!body.empty()) body += "*";
            body += p.vars().first;
            if (lexp != 1) body += "^" + std::to_string(lexp);
        }
        if (mexp != 0) {
            if (!body.empty()) body += "*";
            body += p.vars().second;
            if (mexp != 1) body += "^" + std::to_string(mexp);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string branch_csv(const CsSamples& s) {
    std::string out = "alpha,re_v,im_v,re_v1,im_v1,re_v2,im_v2,integrand\n";
    char buf[64];
    const BranchTrack& t = s.track;
    for (size_t j = 0; j < t.grid_h.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,", t.grid_h[j]);
        out += buf;
        if (j == 0 && t.alpha_lo == 0.0) {
            out += "inf,0";  // cusp: V = 1/W diverges
        } else {
            append_csv_complex(out, 1.0 / t.W[j]);
        }
        out += ",,,,,";
        std::snprintf(buf, sizeof(buf), "%.17g\n", s.fh[j]);
        out += buf;
    }
    // Skip the duplicated alpha0 sample: it opens the spherical range.
    for (size_t j = 1; j < t.grid_s.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g,,,", t.grid_s[j]);
        out += buf;
        append_csv_complex(out, t.V1[j]);
        out += ",";
        append_csv_complex(out, t.V2[j]);
        std::snprintf(buf, sizeof(buf), ",%.17g\n", s.fs[j]);
        out += buf;
    }
    return out;
}

}  // namespace twistcs
