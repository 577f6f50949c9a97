#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "CLI11.hpp"
#include "json.hpp"
#include "tame/artinschreier.hpp"
#include "tame/grammar.hpp"
#include "tame/tameness.hpp"

namespace tame {

namespace {

using nlohmann::ordered_json;

constexpr long long kQCap = 81;

FqRef field_of_q(long long q) {
    if (q < 2 || q > kQCap)
        fail("UnsupportedDescriptor", "q must be a prime power between 2 and 81");
    long long p = 2;
    while (q % p != 0) ++p;
    long long m = q;
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) fail("UnsupportedDescriptor", "q must be a prime power between 2 and 81");
    return Fq::make(p, k);
}

FqRef resolve_field(const std::string& field, long long q) {
    if (!field.empty()) {
        FqRef F = parse_field(field);
        if (F->q() > static_cast<uint64_t>(kQCap))
            fail("UnsupportedDescriptor", "q must be a prime power between 2 and 81");
        return F;
    }
    if (q > 0) return field_of_q(q);
    fail("UnsupportedDescriptor", "a field is required: pass --q, --field, or set TAME_Q");
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    for (const auto& s : out)
        if (s.empty()) fail("ParseError", "empty entry in list \"" + csv + "\"");
    return out;
}

std::vector<PlaceRef> parse_places_list(const std::string& csv, const FqRef& F) {
    std::vector<PlaceRef> places;
    for (const auto& s : split_list(csv)) places.push_back(parse_place(s, F));
    return places;
}

long long parse_uint(const std::string& s, const char* what) {
    if (s.empty() || s.size() > 6 ||
        !std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        fail("ParseError", std::string("bad ") + what + " \"" + s + "\"");
    return std::stoll(s);
}

std::vector<long long> parse_windows_list(const std::string& csv) {
    std::vector<long long> out;
    for (const auto& s : split_list(csv)) out.push_back(parse_uint(s, "window"));
    return out;
}

/* Monic polynomial in T over F_q(t), e.g. "T^3 - t", "T^2 - T - 1/t";
   coefficients attach with '*' and may use parentheses. */
std::vector<RatFunc> parse_tpoly(const std::string& input, const FqRef& F) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail("ParseError", "empty polynomial");
    std::vector<RatFunc> coeffs;
    auto at = [&](size_t k) -> RatFunc& {
        while (coeffs.size() <= k) coeffs.emplace_back(F);
        return coeffs[k];
    };
    size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        size_t j = i;
        int depth = 0;
        while (j < s.size()) {
            char c = s[j];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if ((c == '+' || c == '-') && depth == 0 && j > i && s[j - 1] != '^') break;
            ++j;
        }
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.empty()) fail("ParseError", "empty term in \"" + input + "\"");
        size_t pos = term.find('T');
        RatFunc coef = RatFunc::constant(F, 1);
        long long k = 0;
        if (pos == std::string::npos) {
            coef = parse_ratfunc(term, F);
        } else {
            std::string pre = term.substr(0, pos);
            std::string post = term.substr(pos + 1);
            if (!pre.empty()) {
                if (pre.back() != '*')
                    fail("ParseError", "coefficients attach to T with '*' in \"" + input + "\"");
                pre.pop_back();
                coef = parse_ratfunc(pre, F);
            }
            if (post.empty()) {
                k = 1;
            } else {
                if (post[0] != '^') fail("ParseError", "expected '^' after T in \"" + input + "\"");
                k = parse_uint(post.substr(1), "exponent");
                if (k < 1) fail("ParseError", "bad exponent in \"" + input + "\"");
            }
        }
        if (negative) coef = -coef;
        at(static_cast<size_t>(k)) = at(static_cast<size_t>(k)) + coef;
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) fail("ParseError", "polynomial must have degree at least 1 in T");
    return coeffs;
}

ExtensionDesc to_extension(std::vector<RatFunc> c, const FqRef& F) {
    long long m = static_cast<long long>(c.size()) - 1;
    RatFunc one = RatFunc::constant(F, 1);
    if (!(c.back() == one)) fail("UnsupportedDescriptor", "defining polynomial must be monic");
    bool pure = true;
    for (long long k = 1; k < m; ++k)
        if (!c[static_cast<size_t>(k)].is_zero()) pure = false;
    long long p = F->p();
    if (pure && m >= 2 && !c[0].is_zero() && std::gcd(m, p) == 1)
        return ExtensionDesc::kummer(m, -c[0]);
    if (m == p) {
        bool as = c[1] == -one;
        for (long long k = 2; k < m; ++k)
            if (!c[static_cast<size_t>(k)].is_zero()) as = false;
        if (as) return ExtensionDesc::artin_schreier(-c[0]);
    }
    return ExtensionDesc::general(std::move(c));
}

const char* ext_kind_str(ExtKind k) {
    switch (k) {
        case ExtKind::Kummer: return "kummer";
        case ExtKind::ArtinSchreier: return "artin-schreier";
        case ExtKind::General: return "general";
    }
    fail("InternalError", "unknown extension kind");
}

SpaceKind space_kind_of(const std::string& s) {
    if (s == "spa-a1-p1") return SpaceKind::A1OverP1;
    if (s == "spa-gm-specfq") return SpaceKind::GmOverPoint;
    if (s == "spa-a1-specfq") return SpaceKind::A1OverPoint;
    if (s == "spa-a1-a1") return SpaceKind::A1OverA1;
    if (s == "pruefer") return SpaceKind::PlaceSetPair;
    fail("UnsupportedDescriptor", "unknown space \"" + s + "\"");
}

struct ChartCover {
    std::vector<HuberPairDesc> charts;
    std::vector<HuberPairDesc> overlaps;
};

ChartCover cover_of(const std::string& space, const FqRef& F) {
    Poly t = Poly::t(F);
    RatFunc rt = RatFunc::t(F);
    RatFunc ri = rt.inv();
    if (space == "spa-a1-p1")
        return {{HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {rt}),
                 HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {ri})},
                {HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt, ri})}};
    if (space == "spa-gm-specfq")
        return {{HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt}),
                 HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {ri})},
                {HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt, ri})}};
    if (space == "spa-a1-specfq")
        return {{HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {})}, {}};
    if (space == "spa-a1-a1")
        return {{HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {rt})}, {}};
    fail("UnsupportedDescriptor", "space \"" + space + "\" has no chart cover");
}

ordered_json envelope(const char* command, long long seed) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["seed"] = seed;
    return j;
}

ordered_json degrees_json(const CohomologyReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : rep.degrees) {
        ordered_json e;
        e["i"] = d.degree;
        e["dim"] = d.dim;
        e["stable"] = d.stable;
        e["description"] = d.description;
        arr.push_back(std::move(e));
    }
    return arr;
}

ordered_json table_json(const CohomologyTable& t) {
    ordered_json j;
    ordered_json h0;
    h0["dim"] = t.h0;
    h0["description"] = t.h0_desc;
    j["H0"] = std::move(h0);
    ordered_json h1;
    if (t.h1_finite) {
        h1["dim"] = t.h1;
    } else {
        ordered_json tr = ordered_json::array();
        for (const auto& [N, dim] : t.h1_truncated) {
            ordered_json e;
            e["N"] = N;
            e["dim"] = dim;
            tr.push_back(std::move(e));
        }
        h1["truncated"] = std::move(tr);
    }
    h1["stable"] = t.h1_stable;
    j["H1"] = std::move(h1);
    ordered_json h2;
    h2["dim"] = t.h2;
    j["H2"] = std::move(h2);
    if (t.reference_h1 >= 0) j["reference_h1"] = t.reference_h1;
    j["verdict"] = t.verdict;
    return j;
}

void render_text(const ordered_json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array()) {
            bool scalar = std::all_of(value.begin(), value.end(),
                                      [](const ordered_json& v) { return v.is_primitive(); });
            if (scalar) {
                out << pad << key << ": [";
                for (size_t i = 0; i < value.size(); ++i) {
                    if (i) out << ", ";
                    const auto& v = value[i];
                    out << (v.is_string() ? v.get<std::string>() : v.dump());
                }
                out << "]\n";
            } else {
                out << pad << key << ":\n";
                for (const auto& item : value) {
                    out << pad << "  -\n";
                    render_text(item, out, indent + 4);
                }
            }
        } else {
            out << pad << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

void emit(const ordered_json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        render_text(j, out, 0);
    else
        out << j.dump(2) << "\n";
}

}  // namespace

int exit_code_for(const std::string& error_code) {
    if (error_code == "OracleMismatch" || error_code == "InternalError") return 2;
    return 1;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact valuation, integral-closure, and cohomology pipelines over F_q(t)"};
    app.name("tame");
    app.require_subcommand(1);

    std::string format = "json";
    long long seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed echoed into reports")->capture_default_str();

    ordered_json report;
    bool have_report = false;
    int exit_code = 0;
    auto finish = [&](ordered_json j, int code) {
        report = std::move(j);
        have_report = true;
        exit_code = code;
    };

    // classify-ext
    auto* c_ext = app.add_subcommand("classify-ext", "ramification over a completed place");
    std::string ce_field, ce_place, ce_poly;
    long long ce_q = 0;
    c_ext->fallthrough();
    c_ext->add_option("--q", ce_q, "field size")->envname("TAME_Q");
    c_ext->add_option("--field", ce_field, "field, e.g. GF(4)");
    c_ext->add_option("--place", ce_place, "base place")->required();
    c_ext->add_option("--poly", ce_poly, "monic polynomial in T")->required();
    c_ext->callback([&] {
        FqRef F = resolve_field(ce_field, ce_q);
        PlaceRef place = parse_place(ce_place, F);
        ExtensionDesc ext = to_extension(parse_tpoly(ce_poly, F), F);
        RamificationReport rep = extend_valuation(place, ext);
        ordered_json j = envelope("classify-ext", seed);
        j["field"] = field_str(F);
        j["place"] = place_str(*place);
        j["poly"] = ce_poly;
        j["kind"] = ext_kind_str(ext.kind);
        j["degree"] = rep.degree;
        ordered_json branches = ordered_json::array();
        for (const auto& b : rep.branches) {
            ordered_json e;
            e["e"] = b.e;
            e["f"] = b.f;
            e["slope"] = rat_str(b.slope);
            e["class"] = ram_class_str(b.cls);
            branches.push_back(std::move(e));
        }
        j["branches"] = std::move(branches);
        j["class"] = ram_class_str(rep.overall);
        finish(std::move(j), 0);
    });

    // admissible
    auto* adm = app.add_subcommand("admissible", "site admissibility along boundary places");
    std::string ad_field, ad_poly, ad_site = "tame", ad_pair, ad_boundary = "inf";
    long long ad_q = 0;
    adm->fallthrough();
    adm->add_option("--q", ad_q, "field size")->envname("TAME_Q");
    adm->add_option("--field", ad_field, "field, e.g. GF(4)");
    adm->add_option("--poly", ad_poly, "monic polynomial in T")->required();
    adm->add_option("--site", ad_site, "etale, strongly_etale, or tame")->capture_default_str();
    adm->add_option("--pair", ad_pair, "base pair descriptor");
    adm->add_option("--boundary", ad_boundary, "comma-separated boundary places")
        ->capture_default_str();
    adm->callback([&] {
        HuberPairDesc pair = [&] {
            if (!ad_pair.empty()) return parse_pair(ad_pair);
            FqRef base_field = resolve_field(ad_field, ad_q);
            return HuberPairDesc::with_closure(base_field, RingKind::Poly, Poly(base_field), {});
        }();
        const FqRef& F = pair.F;
        ExtensionDesc ext = to_extension(parse_tpoly(ad_poly, F), F);
        SiteKind site = parse_site(ad_site);
        std::vector<PlaceRef> boundary = parse_places_list(ad_boundary, F);
        CoverReport rep = cover_admissible(ext, site, pair, boundary);
        ordered_json j = envelope("admissible", seed);
        j["field"] = field_str(F);
        j["poly"] = ad_poly;
        j["site"] = site_str(site);
        j["pair"] = pair_str(pair);
        ordered_json verdicts = ordered_json::array();
        for (const auto& v : rep.verdicts) {
            ordered_json e;
            e["place"] = place_str(*v.place);
            e["class"] = ram_class_str(v.worst);
            e["admissible"] = v.admissible;
            verdicts.push_back(std::move(e));
        }
        j["verdicts"] = std::move(verdicts);
        j["admissible"] = rep.admissible;
        finish(std::move(j), 0);
    });

    // integral
    auto* intg = app.add_subcommand("integral", "integrality of a tensor element");
    std::string in_place = "t", in_kummer, in_element;
    long long in_q = 0;
    int in_level = 1;
    intg->fallthrough();
    intg->add_option("--q", in_q, "field size")->envname("TAME_Q");
    intg->add_option("--place", in_place, "base place")->capture_default_str();
    intg->add_option("--kummer", in_kummer, "e.g. m=2:alpha=t")->required();
    intg->add_option("--level", in_level, "tensor level")->capture_default_str();
    intg->add_option("--element", in_element, "tensor element")->required();
    intg->callback([&] {
        FqRef F = resolve_field("", in_q);
        PlaceRef base = parse_place(in_place, F);
        KummerRef alg = parse_kummer(in_kummer, F, base);
        TensorElement x = parse_tensor_element(in_element, alg, in_level);
        bool criterion = is_integral(x);
        bool oracle = is_integral_oracle(x);
        ordered_json j = envelope("integral", seed);
        j["q"] = static_cast<long long>(F->q());
        j["place"] = place_str(*base);
        j["kummer"] = kummer_str(*alg);
        j["level"] = in_level;
        j["element"] = tensor_element_str(x);
        j["criterion"] = criterion;
        j["oracle"] = oracle;
        finish(std::move(j), criterion == oracle ? 0 : 2);
    });

    // vandermonde
    auto* vdm = app.add_subcommand("vandermonde", "character matrix and its exact inverse");
    long long v_q = 0, v_m = 0;
    int v_n = 2;
    vdm->fallthrough();
    vdm->add_option("--q", v_q, "field size")->envname("TAME_Q");
    vdm->add_option("--m", v_m, "root-of-unity order")->required();
    vdm->add_option("--n", v_n, "tensor level")->capture_default_str();
    vdm->callback([&] {
        FqRef F = resolve_field("", v_q);
        Vandermonde vd = vandermonde(F, v_m, v_n);
        bool identity = true;
        for (long long i = 0; i < vd.size; ++i) {
            for (long long jj = 0; jj < vd.size; ++jj) {
                uint64_t sum = 0;
                for (long long kk = 0; kk < vd.size; ++kk)
                    sum = F->add(sum, F->mul(vd.V[static_cast<size_t>(i)][static_cast<size_t>(kk)],
                                             vd.Vinv[static_cast<size_t>(kk)][static_cast<size_t>(jj)]));
                if (sum != (i == jj ? 1u : 0u)) identity = false;
            }
        }
        ordered_json j = envelope("vandermonde", seed);
        j["q"] = static_cast<long long>(F->q());
        j["m"] = vd.m;
        j["n"] = vd.n;
        j["size"] = vd.size;
        j["V"] = vd.V;
        j["Vinv"] = vd.Vinv;
        j["product_identity"] = identity;
        finish(std::move(j), identity ? 0 : 2);
    });

    // amitsur
    auto* ami = app.add_subcommand("amitsur", "comparison complex homology and homotopy check");
    std::string am_kummer, am_place = "t";
    long long am_q = 0, am_window = 16;
    int am_levels = 2;
    ami->fallthrough();
    ami->add_option("--q", am_q, "field size")->envname("TAME_Q");
    ami->add_option("--kummer", am_kummer, "e.g. m=2:alpha=t")->required();
    ami->add_option("--place", am_place, "base place")->capture_default_str();
    ami->add_option("--levels", am_levels, "top tensor level")->capture_default_str();
    ami->add_option("--window", am_window, "truncation window")
        ->envname("TAME_WINDOW")
        ->capture_default_str();
    ami->callback([&] {
        FqRef F = resolve_field("", am_q);
        PlaceRef base = parse_place(am_place, F);
        KummerRef alg = parse_kummer(am_kummer, F, base);
        Complex c = amitsur_complex(alg, am_levels);
        HomotopyReport hrep = verify_homotopy(c);
        CohomologyReport rep = truncated_homology(c, am_window);
        bool exact = hrep.pass;
        for (const auto& d : rep.degrees) {
            if (d.degree == 0 && (d.dim != rep.aug_dim || !d.stable)) exact = false;
            if (d.degree > 0 && d.dim != 0) exact = false;
        }
        ordered_json j = envelope("amitsur", seed);
        j["q"] = static_cast<long long>(F->q());
        j["place"] = place_str(*base);
        j["kummer"] = kummer_str(*alg);
        j["levels"] = am_levels;
        j["window"] = rep.window;
        j["aug_dim"] = rep.aug_dim;
        j["degrees"] = degrees_json(rep);
        ordered_json h;
        h["pass"] = hrep.pass;
        h["violations"] = hrep.violations;
        j["homotopy"] = std::move(h);
        finish(std::move(j), exact ? 0 : 2);
    });

    // laurent
    auto* lau = app.add_subcommand("laurent", "Laurent cover of a place-set pair");
    std::string la_places, la_f;
    long long la_q = 0, la_window = 16;
    lau->fallthrough();
    lau->add_option("--q", la_q, "field size")->envname("TAME_Q");
    lau->add_option("--places", la_places, "comma-separated places")->required();
    lau->add_option("--f", la_f, "covering function")->required();
    lau->add_option("--window", la_window, "truncation window")
        ->envname("TAME_WINDOW")
        ->capture_default_str();
    lau->callback([&] {
        FqRef F = resolve_field("", la_q);
        std::vector<PlaceRef> places = parse_places_list(la_places, F);
        HuberPairDesc pair = HuberPairDesc::field_with_places(F, places);
        RatFunc f = parse_ratfunc(la_f, F);
        CohomologyReport rep = laurent_cech(pair, f, la_window);
        bool exact = rep.splitting_exact && rep.degrees.size() == 2 &&
                     rep.degrees[0].dim == rep.aug_dim && rep.degrees[1].dim == 0;
        ordered_json j = envelope("laurent", seed);
        j["q"] = static_cast<long long>(F->q());
        j["pair"] = pair_str(pair);
        j["f"] = ratfunc_str(f);
        j["window"] = rep.window;
        j["aug_dim"] = rep.aug_dim;
        j["degrees"] = degrees_json(rep);
        j["witnesses"] = rep.witnesses;
        j["splitting_exact"] = rep.splitting_exact;
        finish(std::move(j), exact ? 0 : 2);
    });

    // cech
    auto* cech = app.add_subcommand("cech", "integral structure sheaf of a chart cover");
    std::string ch_space;
    long long ch_q = 0, ch_window = 16;
    cech->fallthrough();
    cech->add_option("--space", ch_space, "spa-a1-p1, spa-gm-specfq, spa-a1-specfq, spa-a1-a1, p1-o")
        ->required();
    cech->add_option("--q", ch_q, "field size")->envname("TAME_Q");
    cech->add_option("--window", ch_window, "truncation window")
        ->envname("TAME_WINDOW")
        ->capture_default_str();
    cech->callback([&] {
        FqRef F = resolve_field("", ch_q);
        ordered_json j = envelope("cech", seed);
        j["space"] = ch_space;
        j["q"] = static_cast<long long>(F->q());
        j["window"] = ch_window;
        int code = 0;
        if (ch_space == "p1-o") {
            CohomologyReport rep = cech_P1_O(F, ch_window);
            j["aug_dim"] = rep.aug_dim;
            j["degrees"] = degrees_json(rep);
        } else {
            ChartCover cover = cover_of(ch_space, F);
            CohomologyReport rep = cech_O_plus(cover.charts, cover.overlaps, ch_window);
            j["aug_dim"] = rep.aug_dim;
            j["degrees"] = degrees_json(rep);
            if (ch_space == "spa-a1-p1") {
                CohomologyReport line = cech_P1_O(F, ch_window);
                j["reference_degrees"] = degrees_json(line);
                bool match = rep.degrees.size() == line.degrees.size();
                for (size_t i = 0; match && i < rep.degrees.size(); ++i)
                    match = rep.degrees[i].dim == line.degrees[i].dim;
                j["match"] = match;
                if (!match) code = 2;
            }
        }
        finish(std::move(j), code);
    });

    // coker
    auto* cok = app.add_subcommand("coker", "cokernel of x -> x^p - x on a section ring");
    std::string co_ring, co_places;
    long long co_N = 0;
    cok->fallthrough();
    cok->add_option("--ring", co_ring, "GF(q) or GF(q)[t]")->required();
    cok->add_option("--places", co_places, "places for an intersection ring");
    cok->add_option("--N", co_N, "degree bound")->required();
    cok->callback([&] {
        std::string rs = co_ring;
        rs.erase(std::remove_if(rs.begin(), rs.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 rs.end());
        bool poly_ring = rs.size() > 3 && rs.substr(rs.size() - 3) == "[t]";
        FqRef F = parse_field(poly_ring ? rs.substr(0, rs.size() - 3) : rs);
        SectionRing ring = SectionRing::constants(F);
        if (poly_ring) {
            if (!co_places.empty())
                fail("UnsupportedDescriptor", "--places applies to a field ring only");
            ring = SectionRing::polynomials(F);
        } else if (!co_places.empty()) {
            ring = SectionRing::place_set(F, parse_places_list(co_places, F));
        }
        CokerReport rep = coker_dim(ring, co_N);
        ordered_json j = envelope("coker", seed);
        j["ring"] = poly_ring ? field_str(F) + "[t]" : field_str(F);
        if (!ring.places.empty()) {
            ordered_json pl = ordered_json::array();
            for (const auto& p : ring.places) pl.push_back(place_str(*p));
            j["places"] = std::move(pl);
        }
        j["N"] = co_N;
        j["dim"] = rep.dim;
        j["canonical_dim"] = rep.canonical_dim;
        j["rank"] = rep.rank;
        j["target_dim"] = rep.target_dim;
        j["domain_dim"] = rep.domain_dim;
        finish(std::move(j), 0);
    });

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "constant-coefficient cohomology table");
    std::string so_space, so_places, so_windows = "8,16,32";
    long long so_q = 0;
    coh->fallthrough();
    coh->add_option("--space", so_space,
                    "spa-a1-p1, spa-gm-specfq, spa-a1-specfq, spa-a1-a1, pruefer")
        ->required();
    coh->add_option("--q", so_q, "field size")->envname("TAME_Q");
    coh->add_option("--places", so_places, "places for a pruefer pair");
    coh->add_option("--windows", so_windows, "comma-separated truncation bounds")
        ->capture_default_str();
    coh->callback([&] {
        FqRef F = resolve_field("", so_q);
        SpaceDesc desc{F, space_kind_of(so_space), {}};
        if (desc.kind == SpaceKind::PlaceSetPair) {
            if (so_places.empty())
                fail("UnsupportedDescriptor", "pruefer spaces need --places");
            desc.places = parse_places_list(so_places, F);
        } else if (!so_places.empty()) {
            fail("UnsupportedDescriptor", "--places applies to pruefer spaces only");
        }
        CohomologyTable table = tame_cohomology(desc, parse_windows_list(so_windows));
        ordered_json j = envelope("cohomology", seed);
        j["space"] = so_space;
        j["q"] = static_cast<long long>(F->q());
        ordered_json tj = table_json(table);
        for (auto& [k, v] : tj.items()) j[k] = v;
        finish(std::move(j), 0);
    });

    // purity
    auto* pur = app.add_subcommand("purity", "degree-one comparison of two instances");
    std::string pu_left = "spa-gm-specfq", pu_right = "spa-a1-specfq";
    long long pu_q = 0;
    pur->fallthrough();
    pur->add_option("--q", pu_q, "field size")->envname("TAME_Q");
    pur->add_option("--left", pu_left, "left space")->capture_default_str();
    pur->add_option("--right", pu_right, "right space")->capture_default_str();
    pur->callback([&] {
        FqRef F = resolve_field("", pu_q);
        SpaceKind lk = space_kind_of(pu_left);
        SpaceKind rk = space_kind_of(pu_right);
        if (lk == SpaceKind::PlaceSetPair || rk == SpaceKind::PlaceSetPair)
            fail("UnsupportedDescriptor", "purity compares chart instances");
        PurityReport rep = purity_check({F, lk, {}}, {F, rk, {}});
        bool control = (lk == SpaceKind::A1OverA1 && rk == SpaceKind::A1OverP1) ||
                       (lk == SpaceKind::A1OverP1 && rk == SpaceKind::A1OverA1);
        ordered_json j = envelope("purity", seed);
        j["q"] = static_cast<long long>(F->q());
        ordered_json left;
        left["space"] = pu_left;
        ordered_json lt = table_json(rep.left);
        for (auto& [k, v] : lt.items()) left[k] = v;
        j["left"] = std::move(left);
        ordered_json right;
        right["space"] = pu_right;
        ordered_json rt_table = table_json(rep.right);
        for (auto& [k, v] : rt_table.items()) right[k] = v;
        j["right"] = std::move(right);
        j["equal"] = rep.equal;
        j["verdict"] = rep.verdict;
        j["note"] = rep.note;
        finish(std::move(j), rep.equal == !control ? 0 : 2);
    });

    // homotopy
    auto* hom = app.add_subcommand("homotopy", "base point against the affine line over it");
    long long ho_q = 0;
    hom->fallthrough();
    hom->add_option("--q", ho_q, "field size")->envname("TAME_Q");
    hom->callback([&] {
        FqRef F = resolve_field("", ho_q);
        HomotopyReportAS rep = homotopy_check(F);
        ordered_json j = envelope("homotopy", seed);
        j["q"] = static_cast<long long>(F->q());
        ordered_json galois;
        galois["H0"] = ordered_json{{"dim", rep.galois_h0}};
        galois["H1"] = ordered_json{{"dim", rep.galois_h1}};
        j["galois"] = std::move(galois);
        j["pipeline"] = table_json(rep.pipeline);
        j["equal"] = rep.equal;
        j["verdict"] = rep.verdict;
        finish(std::move(j), rep.equal ? 0 : 2);
    });

    // classify-point
    auto* cpt = app.add_subcommand("classify-point", "membership of a valuation in a pair");
    std::string cp_place, cp_pair;
    cpt->fallthrough();
    cpt->add_option("--place", cp_place, "valuation descriptor")->required();
    cpt->add_option("--pair", cp_pair, "pair descriptor")->required();
    cpt->callback([&] {
        HuberPairDesc pair = parse_pair(cp_pair);
        PlaceRef v = parse_place(cp_place, pair.F);
        PointClass cls = classify_point(v, pair);
        ordered_json j = envelope("classify-point", seed);
        j["pair"] = pair_str(pair);
        j["place"] = place_str(*v);
        j["member"] = cls.member;
        j["type"] = cls.type;
        if (cls.has_witness) j["witness"] = ratfunc_str(cls.witness);
        finish(std::move(j), 0);
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json j;
        j["error"] = ordered_json{{"code", "Usage"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 1;
    } catch (const Error& e) {
        ordered_json j;
        j["error"] = ordered_json{{"code", e.code()}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"] = ordered_json{{"code", "InternalError"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 2;
    }
    if (have_report) emit(report, format, out);
    return exit_code;
}

}  // namespace tame
