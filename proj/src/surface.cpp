#include "kmoduli/surface.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "kmoduli/errors.hpp"

namespace kmoduli {

namespace {

Int json_int(const nlohmann::json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw validation_error("field '" + field + "' must be an integer (number or string)");
}

IntMat json_int_matrix(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw validation_error("field '" + field + "' must be a matrix");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw validation_error("field '" + field + "' must be a matrix");
        IntVec r;
        for (const auto& x : row) r.push_back(json_int(x, field));
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<Int> json_int_vector(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw validation_error("field '" + field + "' must be a vector");
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(json_int(x, field));
    return v;
}

SurfaceModel finish(SurfaceModel s) {
    if (s.canonical_class.size() != static_cast<std::size_t>(s.h2_rank))
        throw validation_error("canonical class has wrong length");
    s.todd1.clear();
    for (const auto& k : s.canonical_class) s.todd1.push_back(ratio(-k, 2));
    Int k2e = s.k_square() + s.euler_number;
    if (k2e % 12 != 0)
        throw validation_error("K^2 + e = " + k2e.get_str() + " is not divisible by 12");
    s.todd2 = ratio(k2e, 12);
    s.validate();
    return s;
}

// sign of sorting the concatenation of two strictly increasing index lists;
// 0 when they overlap
int merge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>* out) {
    int sign = 1;
    std::size_t ia = 0, ib = 0;
    out->clear();
    while (ia < a.size() || ib < b.size()) {
        if (ia < a.size() && ib < b.size() && a[ia] == b[ib]) return 0;
        if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
            out->push_back(a[ia++]);
        } else {
            if ((a.size() - ia) % 2 != 0) sign = -sign;
            out->push_back(b[ib++]);
        }
    }
    return sign;
}

SurfaceModel make_abelian() {
    SurfaceModel s;
    s.name = "Abelian";
    s.b1 = 4;
    s.h2_rank = 6;
    s.euler_number = 0;
    s.canonical_class.assign(6, 0);

    // exterior algebra on a_1..a_4; H^2 basis = lex pairs, H^3 basis
    // indexed by the omitted generator, [pt] = a_1^a_2^a_3^a_4
    std::vector<std::vector<int>> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) pairs.push_back({i, j});
    std::vector<std::vector<int>> triples;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> t;
        for (int j = 0; j < 4; ++j)
            if (j != i) t.push_back(j);
        triples.push_back(t);
    }

    std::vector<int> merged;
    s.intersection_form.assign(6, IntVec(6, 0));
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q)
            s.intersection_form[p][q] = merge_sign(pairs[p], pairs[q], &merged);

    s.odd_pairing.assign(4, IntVec(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s.odd_pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                merge_sign({i}, triples[static_cast<std::size_t>(j)], &merged);

    s.wedge11.assign(4, std::vector<IntVec>(4, IntVec(6, 0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int sg = merge_sign({i}, {j}, &merged);
            if (sg == 0) continue;
            auto it = std::find(pairs.begin(), pairs.end(), merged);
            s.wedge11[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(it - pairs.begin())] = sg;
        }

    s.wedge13.assign(4, std::vector<IntVec>(6, IntVec(4, 0)));
    for (int i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 6; ++k) {
            int sg = merge_sign({i}, pairs[k], &merged);
            if (sg == 0) continue;
            auto it = std::find(triples.begin(), triples.end(), merged);
            s.wedge13[static_cast<std::size_t>(i)][k][static_cast<std::size_t>(it - triples.begin())] = sg;
        }
    return finish(std::move(s));
}

IntMat e8_minus() {
    IntMat c(8, IntVec(8, 0));
    for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (auto [a, b] : edges) {
        c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
        c[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 1;
    }
    return c;
}

SurfaceModel make_k3() {
    SurfaceModel s;
    s.name = "K3";
    s.b1 = 0;
    s.h2_rank = 22;
    s.euler_number = 24;
    s.canonical_class.assign(22, 0);
    s.intersection_form.assign(22, IntVec(22, 0));
    // three hyperbolic planes
    for (int u = 0; u < 3; ++u) {
        std::size_t a = static_cast<std::size_t>(2 * u), b = a + 1;
        s.intersection_form[a][b] = 1;
        s.intersection_form[b][a] = 1;
    }
    IntMat e8 = e8_minus();
    for (int blk = 0; blk < 2; ++blk)
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                s.intersection_form[6 + static_cast<std::size_t>(blk) * 8 + i]
                                   [6 + static_cast<std::size_t>(blk) * 8 + j] = e8[i][j];
    return finish(std::move(s));
}

SurfaceModel make_hirzebruch(long n, std::string name) {
    // basis (C0, f) with C0.C0 = -n, C0.f = 1, f.f = 0
    SurfaceModel s;
    s.name = std::move(name);
    s.b1 = 0;
    s.h2_rank = 2;
    s.euler_number = 4;
    s.intersection_form = {{Int(-n), 1}, {1, 0}};
    s.canonical_class = {Int(-2), Int(-n - 2)};
    return finish(std::move(s));
}

SurfaceModel make_ruled(long g, long delta) {
    if (g < 0 || delta < 0) throw validation_error("Ruled(g,delta): g, delta >= 0 required");
    // projectivization of (line bundle of degree 2g-2+delta) + O over a
    // genus-g curve; basis (xi, f) with xi = c_1(O(1)), f = fiber class
    long d = 2 * g - 2 + delta;
    SurfaceModel s;
    s.name = "Ruled(" + std::to_string(g) + "," + std::to_string(delta) + ")";
    s.b1 = static_cast<int>(2 * g);
    s.h2_rank = 2;
    s.euler_number = 4 - 4 * g;
    s.intersection_form = {{Int(d), 1}, {1, 0}};
    s.canonical_class = {Int(-2), Int(2 * g - 2 + d)};
    if (g > 0) s.odd_pairing = int_identity(static_cast<std::size_t>(2 * g));
    return finish(std::move(s));
}

} // namespace

Int SurfaceModel::k_square() const {
    return bilinear(intersection_form, canonical_class, canonical_class);
}

void SurfaceModel::validate() const {
    if (h2_rank <= 0) throw validation_error("h2_rank must be positive");
    if (b1 < 0) throw validation_error("b1 must be non-negative");
    if (intersection_form.size() != static_cast<std::size_t>(h2_rank) || !is_symmetric(intersection_form))
        throw validation_error("intersection form must be a symmetric h2_rank x h2_rank matrix");
    Int d = det(intersection_form);
    if (d != 1 && d != -1)
        throw validation_error("intersection form is not unimodular (det = " + d.get_str() + ")");
    if (b1 > 0) {
        if (odd_pairing.size() != static_cast<std::size_t>(b1) || !is_square(odd_pairing))
            throw validation_error("odd pairing must be a b1 x b1 matrix");
        Int od = det(odd_pairing);
        if (od != 1 && od != -1)
            throw validation_error("odd pairing is not unimodular (det = " + od.get_str() + ")");
    } else if (!odd_pairing.empty())
        throw validation_error("odd pairing must be empty when b1 = 0");
    if (canonical_class.size() != static_cast<std::size_t>(h2_rank))
        throw validation_error("canonical class has wrong length");
    if (Rat(12) * todd2 != Rat(k_square() + euler_number))
        throw validation_error("todd2 inconsistent with K^2 + e");
}

CohClass CohClass::zero(const SurfaceModel& s) {
    CohClass c;
    c.d0 = 0;
    c.d4 = 0;
    c.d1.assign(static_cast<std::size_t>(s.b1), Rat(0));
    c.d3.assign(static_cast<std::size_t>(s.b1), Rat(0));
    c.d2.assign(static_cast<std::size_t>(s.h2_rank), Rat(0));
    return c;
}

bool CohClass::is_integral() const {
    auto ok = [](const RatVec& v) {
        for (const auto& q : v)
            if (!is_integer(q)) return false;
        return true;
    };
    return is_integer(d0) && is_integer(d4) && ok(d1) && ok(d2) && ok(d3);
}

bool CohClass::is_zero() const {
    auto z = [](const RatVec& v) {
        for (const auto& q : v)
            if (q != 0) return false;
        return true;
    };
    return d0 == 0 && d4 == 0 && z(d1) && z(d2) && z(d3);
}

CohClass& CohClass::operator+=(const CohClass& o) {
    if (d1.size() != o.d1.size() || d2.size() != o.d2.size() || d3.size() != o.d3.size())
        throw validation_error("cohomology classes live on different surfaces");
    d0 += o.d0;
    d4 += o.d4;
    for (std::size_t i = 0; i < d1.size(); ++i) d1[i] += o.d1[i];
    for (std::size_t i = 0; i < d2.size(); ++i) d2[i] += o.d2[i];
    for (std::size_t i = 0; i < d3.size(); ++i) d3[i] += o.d3[i];
    return *this;
}

CohClass& CohClass::operator*=(const Rat& c) {
    d0 *= c;
    d4 *= c;
    for (auto& q : d1) q *= c;
    for (auto& q : d2) q *= c;
    for (auto& q : d3) q *= c;
    return *this;
}

void check_on_surface(const SurfaceModel& s, const CohClass& a) {
    if (a.d1.size() != static_cast<std::size_t>(s.b1) || a.d3.size() != static_cast<std::size_t>(s.b1) ||
        a.d2.size() != static_cast<std::size_t>(s.h2_rank))
        throw validation_error("class does not live on surface '" + s.name + "'");
}

SurfaceModel builtin_surface(const std::string& name) {
    if (name == "P2") {
        SurfaceModel s;
        s.name = "P2";
        s.h2_rank = 1;
        s.euler_number = 3;
        s.intersection_form = {{1}};
        s.canonical_class = {Int(-3)};
        return finish(std::move(s));
    }
    if (name == "P1xP1") {
        SurfaceModel s;
        s.name = "P1xP1";
        s.h2_rank = 2;
        s.euler_number = 4;
        s.intersection_form = {{0, 1}, {1, 0}};
        s.canonical_class = {Int(-2), Int(-2)};
        return finish(std::move(s));
    }
    if (name == "K3") return make_k3();
    if (name == "Abelian") return make_abelian();
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(F(\d+))")))
        return make_hirzebruch(std::stol(m[1]), name);
    if (std::regex_match(name, m, std::regex(R"(Ruled\((\d+),(\d+)\))")))
        return make_ruled(std::stol(m[1]), std::stol(m[2]));
    throw validation_error("unknown builtin surface '" + name + "'");
}

SurfaceModel surface_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("surface spec is not valid JSON: ") + e.what());
    }
    for (const char* field : {"name", "b1", "intersection_form", "canonical_class", "euler_number"})
        if (!j.contains(field)) throw validation_error(std::string("surface spec is missing '") + field + "'");
    SurfaceModel s;
    s.name = j["name"].get<std::string>();
    Int b1 = json_int(j["b1"], "b1");
    s.b1 = static_cast<int>(b1.get_si());
    if (s.b1 < 0) throw validation_error("b1 must be non-negative");
    s.intersection_form = json_int_matrix(j["intersection_form"], "intersection_form");
    if (!is_square(s.intersection_form) || s.intersection_form.empty())
        throw validation_error("intersection_form must be a nonempty square matrix");
    s.h2_rank = static_cast<int>(s.intersection_form.size());
    if (s.b1 > 0) {
        if (!j.contains("odd_pairing")) throw validation_error("surface spec with b1 > 0 needs 'odd_pairing'");
        s.odd_pairing = json_int_matrix(j["odd_pairing"], "odd_pairing");
    } else if (j.contains("odd_pairing") && !j["odd_pairing"].empty())
        throw validation_error("odd_pairing must be empty when b1 = 0");
    s.canonical_class = json_int_vector(j["canonical_class"], "canonical_class");
    s.euler_number = json_int(j["euler_number"], "euler_number");
    return finish(std::move(s));
}

SurfaceModel build_surface(const std::string& spec) {
    try {
        return builtin_surface(spec);
    } catch (const validation_error&) {
        std::ifstream in(spec);
        if (!in) throw validation_error("'" + spec + "' is neither a builtin surface nor a readable spec file");
        std::ostringstream os;
        os << in.rdbuf();
        return surface_from_json_text(os.str());
    }
}

BlowUpResult blow_up(const SurfaceModel& s) {
    SurfaceModel t;
    t.name = "Bl(" + s.name + ")";
    t.b1 = s.b1;
    t.h2_rank = s.h2_rank + 1;
    t.euler_number = s.euler_number + 1;
    t.odd_pairing = s.odd_pairing;
    std::size_t n = static_cast<std::size_t>(s.h2_rank);
    t.intersection_form.assign(n + 1, IntVec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.intersection_form[i][j] = s.intersection_form[i][j];
    t.intersection_form[n][n] = -1;
    t.canonical_class = s.canonical_class;
    t.canonical_class.push_back(1);
    if (s.has_odd_products()) {
        t.wedge11 = s.wedge11;
        for (auto& row : t.wedge11)
            for (auto& v : row) v.push_back(0);
        t.wedge13 = s.wedge13;
        for (auto& row : t.wedge13) row.push_back(IntVec(static_cast<std::size_t>(s.b1), 0));
    }
    return {finish(std::move(t)), s.h2_rank};
}

CohClass cup(const SurfaceModel& s, const CohClass& a, const CohClass& b) {
    check_on_surface(s, a);
    check_on_surface(s, b);
    CohClass out = CohClass::zero(s);

    out.d0 = a.d0 * b.d0;
    for (std::size_t i = 0; i < out.d1.size(); ++i) out.d1[i] = a.d0 * b.d1[i] + b.d0 * a.d1[i];
    for (std::size_t i = 0; i < out.d2.size(); ++i) out.d2[i] = a.d0 * b.d2[i] + b.d0 * a.d2[i];
    for (std::size_t i = 0; i < out.d3.size(); ++i) out.d3[i] = a.d0 * b.d3[i] + b.d0 * a.d3[i];
    out.d4 = a.d0 * b.d4 + b.d0 * a.d4;

    // H^2 x H^2
    out.d4 += bilinear(s.intersection_form, a.d2, b.d2);
    // H^1 x H^3 and H^3 x H^1 (anticommuting)
    if (s.b1 > 0) {
        out.d4 += bilinear(s.odd_pairing, a.d1, b.d3);
        out.d4 -= bilinear(s.odd_pairing, b.d1, a.d3);
    }
    // products inside the odd part; zero unless the model carries them
    if (s.has_odd_products()) {
        for (std::size_t i = 0; i < a.d1.size(); ++i)
            for (std::size_t j = 0; j < b.d1.size(); ++j) {
                Rat c = a.d1[i] * b.d1[j];
                if (c == 0) continue;
                for (std::size_t k = 0; k < out.d2.size(); ++k)
                    out.d2[k] += c * Rat(s.wedge11[i][j][k]);
            }
        auto acc13 = [&](const RatVec& odd, const RatVec& even) {
            for (std::size_t i = 0; i < odd.size(); ++i)
                for (std::size_t k = 0; k < even.size(); ++k) {
                    Rat c = odd[i] * even[k];
                    if (c == 0) continue;
                    for (std::size_t l = 0; l < static_cast<std::size_t>(s.b1); ++l)
                        out.d3[l] += c * Rat(s.wedge13[i][k][l]);
                }
        };
        acc13(a.d1, b.d2); // H^1 x H^2
        acc13(b.d1, a.d2); // H^2 x H^1 commutes
    }
    return out;
}

Rat integrate(const SurfaceModel& s, const CohClass& a) {
    check_on_surface(s, a);
    return a.d4;
}

CohClass todd(const SurfaceModel& s) {
    CohClass t = CohClass::zero(s);
    t.d0 = 1;
    t.d2 = s.todd1;
    t.d4 = s.todd2;
    return t;
}

} // namespace kmoduli
