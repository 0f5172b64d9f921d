#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "heightlab/exactpoly.hpp"
#include "heightlab/galois.hpp"
#include "heightlab/height.hpp"
#include "heightlab/json_io.hpp"
#include "heightlab/paperlab.hpp"
#include "heightlab/quadfield.hpp"
#include "heightlab/roots.hpp"

namespace {

using namespace heightlab;

struct GlobalOpts {
    bool json = false;
    long prec_cap = 4096;
    double eps = 1e-9;
};

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

RatBound parse_bound(const std::string& s, int inf_sign) {
    if (s == "inf" || s == "+inf" || s == "oo") return RatBound::pos_inf();
    if (s == "-inf" || s == "-oo") return RatBound::neg_inf();
    if (s.empty()) return inf_sign < 0 ? RatBound::neg_inf() : RatBound::pos_inf();
    return RatBound::at(parse_rat(s));
}

int infer_points(const std::vector<std::string>& cycle_strings) {
    int max_pt = 0;
    for (const auto& s : cycle_strings) {
        std::string digits;
        for (size_t i = 0; i <= s.size(); ++i) {
            if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
                digits += s[i];
            } else if (!digits.empty()) {
                max_pt = std::max(max_pt, std::stoi(digits));
                digits.clear();
            }
        }
    }
    return max_pt + 1;
}

std::vector<Perm> parse_perm_list(const std::string& text, int n) {
    std::vector<Perm> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            out.push_back(Perm::from_cycles(cur, n));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(Perm::from_cycles(cur, n));
    return out;
}

int cmd_height(const std::string& poly, const GlobalOpts& g) {
    IntPoly f = IntPoly::from_string(poly);
    MeasureOptions opt;
    opt.eps = g.eps;
    opt.prec_cap = g.prec_cap;
    HeightReport h = weil_height(f, opt);
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "height";
        j["input"] = f.to_string();
        j["height"] = height_report_json(h);
        emit(j);
    } else {
        std::printf("h(%s) in [%.17g, %.17g]\n", f.to_string().c_str(), h.lo, h.hi);
        if (h.exact_log_arg)
            std::printf("  exact Mahler measure: %s\n", to_string(*h.exact_log_arg).c_str());
        if (h.witness_prime)
            std::printf("  irreducible mod %llu\n",
                        static_cast<unsigned long long>(*h.witness_prime));
        else
            std::printf("  irreducibility asserted (no witness within budget)\n");
    }
    return 0;
}

int cmd_mahler(const std::string& poly, const GlobalOpts& g) {
    IntPoly f = IntPoly::from_string(poly);
    MeasureOptions opt;
    opt.eps = g.eps;
    opt.prec_cap = g.prec_cap;
    HeightReport m = mahler_measure(f, opt);
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "mahler";
        j["input"] = f.to_string();
        j["mahler"] = height_report_json(m);
        emit(j);
    } else {
        std::printf("M(%s) in [%.17g, %.17g]\n", f.to_string().c_str(), m.lo, m.hi);
        if (m.exact_log_arg) std::printf("  exact: %s\n", to_string(*m.exact_log_arg).c_str());
    }
    return 0;
}

int cmd_disc(const std::string& poly, const GlobalOpts& g) {
    IntPoly f = IntPoly::from_string(poly);
    Int d = discriminant(f);
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "disc";
        j["input"] = f.to_string();
        j["discriminant"] = to_string(d);
        j["perfect_square"] = is_perfect_square(d);
        emit(j);
    } else {
        std::printf("disc(%s) = %s%s\n", f.to_string().c_str(), to_string(d).c_str(),
                    is_perfect_square(d) ? " (a perfect square)" : "");
    }
    return 0;
}

int cmd_sturm(const std::string& poly, const std::string& lo, const std::string& hi,
              const GlobalOpts& g) {
    IntPoly f = IntPoly::from_string(poly);
    RatBound lb = parse_bound(lo, -1);
    RatBound ub = parse_bound(hi, +1);
    int count = sturm_count(f, lb, ub);
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "sturm";
        j["input"] = f.to_string();
        j["lo"] = lo.empty() ? "-inf" : lo;
        j["hi"] = hi.empty() ? "inf" : hi;
        j["count"] = count;
        emit(j);
    } else {
        std::printf("real roots of %s in (%s, %s]: %d\n", f.to_string().c_str(),
                    lo.empty() ? "-inf" : lo.c_str(), hi.empty() ? "inf" : hi.c_str(), count);
    }
    return 0;
}

int cmd_circle(const std::string& poly, const GlobalOpts& g) {
    IntPoly f = IntPoly::from_string(poly);
    RootOptions opt;
    opt.prec_cap = g.prec_cap;
    CircleVerdict v = all_on_unit_circle(f, opt);
    const char* method =
        v.method == CircleVerdict::Method::ExactSelfInversive ? "exact-self-inversive"
                                                              : "certified-numeric";
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "circle";
        j["input"] = f.to_string();
        j["on_circle"] = v.on_circle;
        j["method"] = method;
        if (v.witness) {
            j["witness"]["root_index"] = v.witness->root_index;
            j["witness"]["separation"] = to_string(v.witness->separation);
        }
        emit(j);
    } else {
        std::printf("all roots of %s on unit circle: %s (%s)\n", f.to_string().c_str(),
                    v.on_circle ? "true" : "false", method);
        if (v.witness)
            std::printf("  witness: root %d, separation >= %s\n", v.witness->root_index,
                        to_string(v.witness->separation).c_str());
    }
    return 0;
}

int cmd_garza(const std::string& c_text, const GlobalOpts& g) {
    Rat c = parse_rat(c_text);
    Enclosure e = garza_bound(c);
    if (g.json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaTag;
        j["command"] = "garza";
        j["C"] = to_string(c);
        j["garza"]["lo"] = e.lo;
        j["garza"]["hi"] = e.hi;
        emit(j);
    } else {
        std::printf("garza(%s) in [%.17g, %.17g]\n", to_string(c).c_str(), e.lo, e.hi);
    }
    return 0;
}

int cmd_group(const std::vector<std::string>& gens_text, const std::string& centralizer_of,
              bool simple, const std::vector<std::string>& fixed_args, int points,
              const GlobalOpts& g) {
    std::vector<std::string> all = gens_text;
    if (!centralizer_of.empty()) all.push_back(centralizer_of);
    for (const auto& s : fixed_args) all.push_back(s);
    const int n = points > 0 ? points : infer_points(all);
    std::vector<Perm> gens;
    for (const auto& s : gens_text) gens.push_back(Perm::from_cycles(s, n));
    GroupTable group = generate(gens);

    nlohmann::ordered_json j;
    j["schema"] = kSchemaTag;
    j["command"] = "group";
    j["points"] = n;
    j["order"] = group.order();
    nlohmann::ordered_json gen_list = nlohmann::ordered_json::array();
    for (const auto& p : group.generators()) gen_list.push_back(p.to_cycle_string());
    j["generators"] = gen_list;
    if (!g.json) std::printf("group on %d points, order %d\n", n, group.order());

    if (simple) {
        bool s = is_simple(group);
        j["simple"] = s;
        if (!g.json) std::printf("  simple: %s\n", s ? "true" : "false");
    }
    if (!centralizer_of.empty()) {
        GroupTable cent = centralizer(group, Perm::from_cycles(centralizer_of, n));
        j["centralizer_order"] = cent.order();
        if (!g.json) std::printf("  centralizer order: %d\n", cent.order());
    }
    if (!fixed_args.empty()) {
        if (fixed_args.size() != 2)
            throw std::invalid_argument("--fixed-cosets needs H generators and c");
        GroupTable h = generate(parse_perm_list(fixed_args[0], n));
        Perm c = Perm::from_cycles(fixed_args[1], n);
        int fixed = fixed_cosets(group, h, c);
        j["fixed_cosets"] = fixed;
        j["subgroup_order"] = h.order();
        if (!g.json)
            std::printf("  fixed cosets of H (order %d) under %s: %d\n", h.order(),
                        fixed_args[1].c_str(), fixed);
    }
    if (g.json) emit(j);
    return 0;
}

int emit_transcript(const Transcript& tr, const GlobalOpts& g) {
    if (g.json) emit(transcript_json(tr));
    else std::cout << render_transcript_text(tr);
    return tr.pass() ? 0 : 1;
}

// Full report: {input, degree, r, R, mahler, height, bounds}.
int cmd_bound(const std::string& poly, bool imaginary, const GlobalOpts& g, const LabOptions& lab) {
    IntPoly f = IntPoly::from_string(poly);
    Transcript tr = run_bound_report(f, imaginary, lab);
    if (!g.json) {
        std::cout << render_transcript_text(tr);
        return tr.pass() ? 0 : 1;
    }
    MeasureOptions opt;
    opt.eps = g.eps;
    opt.prec_cap = g.prec_cap;
    IntPoly u = normalize(f);
    EmbeddingStats stats = embedding_stats(u);
    HeightReport m = mahler_measure(u, opt);
    HeightReport h = weil_height(u, opt);
    BoundCert cert = theorem_constant(stats, imaginary);

    nlohmann::ordered_json j;
    j["schema"] = kSchemaTag;
    j["command"] = "bound";
    j["input"] = u.to_string();
    j["degree"] = stats.degree;
    j["r"] = stats.real_count;
    j["R"] = to_string(stats.ratio);
    nlohmann::ordered_json mj;
    mj["lo"] = m.lo;
    mj["hi"] = m.hi;
    if (m.exact_log_arg) mj["exact"] = to_string(*m.exact_log_arg);
    j["mahler"] = std::move(mj);
    j["height"]["lo"] = h.lo;
    j["height"]["hi"] = h.hi;
    j["bounds"]["C"] = to_string(cert.C);
    j["bounds"]["garza"]["lo"] = cert.garza_value.lo;
    j["bounds"]["garza"]["hi"] = cert.garza_value.hi;
    j["bounds"]["halved"] = cert.halved;
    j["bounds"]["final"]["lo"] = cert.final_c.lo;
    j["bounds"]["final"]["hi"] = cert.final_c.hi;
    j["transcript"] = transcript_json(tr);
    emit(j);
    return tr.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heightlab - exact and certified Weil-height toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--prec-cap", g.prec_cap, "precision-ladder cap in bits")->capture_default_str();
    app.add_option("--eps", g.eps, "relative enclosure tolerance")->capture_default_str();

    std::string poly, lo, hi, c_text, centralizer_of;
    std::vector<std::string> gens, fixed_args;
    bool simple = false, imaginary = false;
    int n_max = 12, points = 0;
    std::uint64_t p_val = 2;

    auto* height_cmd = app.add_subcommand("height", "certified Weil height of a minimal polynomial");
    height_cmd->add_option("poly", poly, "polynomial (symbolic or c0,c1,...)")->required();
    auto* mahler_cmd = app.add_subcommand("mahler", "certified Mahler measure");
    mahler_cmd->add_option("poly", poly)->required();
    auto* disc_cmd = app.add_subcommand("disc", "exact discriminant");
    disc_cmd->add_option("poly", poly)->required();
    auto* sturm_cmd = app.add_subcommand("sturm", "exact real-root count in (lo, hi]");
    sturm_cmd->add_option("poly", poly)->required();
    sturm_cmd->add_option("lo", lo, "lower endpoint (rational or -inf)");
    sturm_cmd->add_option("hi", hi, "upper endpoint (rational or inf)");
    auto* circle_cmd = app.add_subcommand("circle", "exact all-roots-on-unit-circle test");
    circle_cmd->add_option("poly", poly)->required();
    auto* garza_cmd = app.add_subcommand("garza", "effective lower bound at ratio C");
    garza_cmd->add_option("C", c_text, "rational in (0,1], e.g. 1/15")->required();
    auto* group_cmd = app.add_subcommand("group", "small permutation-group calculations");
    group_cmd->add_option("gens", gens, "generators in cycle notation")->required();
    group_cmd->add_option("--centralizer", centralizer_of, "report the centralizer order of g");
    group_cmd->add_flag("--simple", simple, "test simplicity");
    group_cmd->add_option("--fixed-cosets", fixed_args,
                          "H generators (';'-separated) and c: counts cosets sH with c sH = sH")
        ->expected(2);
    group_cmd->add_option("--n", points, "number of points (inferred when omitted)");

    auto* paper = app.add_subcommand("paper", "scenario runners reproducing quantitative claims");
    paper->require_subcommand(1);
    auto* small_cmd = paper->add_subcommand("small-height", "heights of the 5x^(2n)-6x^n+5 family");
    small_cmd->add_option("--n", n_max, "largest n")->capture_default_str();
    auto* ex1_cmd = paper->add_subcommand("example1", "splitting field of x^5+x^3+1 pipeline");
    auto* ex2_cmd = paper->add_subcommand("example2", "x^4-p over Q(sqrt(p)) pipeline");
    ex2_cmd->add_option("--p", p_val, "prime")->capture_default_str();
    auto* sch_cmd = paper->add_subcommand("schinzel", "height-gap suite over the default corpus");
    auto* bound_cmd = paper->add_subcommand("bound", "embedding stats and effective bound");
    bound_cmd->add_option("poly", poly)->required();
    bound_cmd->add_flag("--imaginary", imaginary, "halve for a totally imaginary extension");

    height_cmd->fallthrough();
    mahler_cmd->fallthrough();
    disc_cmd->fallthrough();
    sturm_cmd->fallthrough();
    circle_cmd->fallthrough();
    garza_cmd->fallthrough();
    group_cmd->fallthrough();
    paper->fallthrough();
    small_cmd->fallthrough();
    ex1_cmd->fallthrough();
    ex2_cmd->fallthrough();
    sch_cmd->fallthrough();
    bound_cmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        LabOptions lab;
        lab.prec_cap = g.prec_cap;
        lab.eps = g.eps;
        if (*height_cmd) return cmd_height(poly, g);
        if (*mahler_cmd) return cmd_mahler(poly, g);
        if (*disc_cmd) return cmd_disc(poly, g);
        if (*sturm_cmd) return cmd_sturm(poly, lo, hi, g);
        if (*circle_cmd) return cmd_circle(poly, g);
        if (*garza_cmd) return cmd_garza(c_text, g);
        if (*group_cmd) return cmd_group(gens, centralizer_of, simple, fixed_args, points, g);
        if (*small_cmd) return emit_transcript(run_small_height_sequence(n_max, lab), g);
        if (*ex1_cmd) return emit_transcript(run_example1_pipeline(lab), g);
        if (*ex2_cmd) return emit_transcript(run_example2_pipeline(p_val, lab), g);
        if (*sch_cmd) return emit_transcript(run_schinzel_suite(default_schinzel_corpus(), lab), g);
        if (*bound_cmd) return cmd_bound(poly, imaginary, g, lab);
    } catch (const indecision_error& e) {
        std::cerr << "indecision: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
