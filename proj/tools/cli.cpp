#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "lamina/accordion.hpp"
#include "lamina/cotag.hpp"
#include "lamina/gaps.hpp"
#include "lamina/io.hpp"
#include "lamina/orbit.hpp"
#include "lamina/portrait.hpp"
#include "lamina/strip.hpp"
#include "lamina/svg.hpp"

namespace lamina {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kCommands{"orbit",       "leaf-orbit", "pullback", "validate", "gaps",
                                      "accordion",   "classify",   "strip-check", "qc-validate", "qc-link",
                                      "qc-smart",    "qc",         "cotag",    "render"};

const char* kUsage =
    "usage: lamina <command> [args] [--degree d] [--depth n] [--json] [--out FILE]\n"
    "commands:\n"
    "  orbit A                      orbit of an angle\n"
    "  leaf-orbit A B               orbit of a leaf\n"
    "  pullback CRITICAL [SEED]     pullback lamination (or --portrait FILE)\n"
    "  validate LAM                 validity and sibling invariance\n"
    "  gaps LAM                     complementary gaps with degrees\n"
    "  accordion LAM A B            accordion of a leaf in a lamination\n"
    "  accordion classify A B X Y   case of a linked leaf pair\n"
    "  classify V1 V2 ...           orbit type of a polygon\n"
    "  strip-check                  cubic strip configuration (or --leaf A B, --sweep N)\n"
    "  qc-validate P | qc-link P1 P2 | qc-smart P1 P2 A B\n"
    "  cotag compute C1 C2 | cotag relation T1 T2 | cotag usc LIMIT TARGET SEQ...\n"
    "  render LAM                   SVG picture\n";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json chord_json(const Chord& c) { return Json::array({c.lo().str(), c.hi().str()}); }

Json poly_json(const Polygon& p) {
    Json j = Json::array();
    for (const auto& a : p.vertices()) j.push_back(a.str());
    return j;
}

template <class C>
Json chords_json(const C& chords) {
    Json j = Json::array();
    for (const auto& c : chords) j.push_back(chord_json(c));
    return j;
}

Json opt_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Chord chord_arg(const std::vector<std::string>& v, std::size_t at) {
    return Chord(parse_angle(v.at(at)), parse_angle(v.at(at + 1)));
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// first token that is not a global option or its value
std::optional<std::string> command_word(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a == "--degree" || a == "--depth" || a == "--out") {
            ++i;
            continue;
        }
        if (!a.empty() && a[0] == '-') continue;
        return a;
    }
    return std::nullopt;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto cmd = command_word(args);
    bool wants_help = std::find(args.begin(), args.end(), "--help") != args.end() ||
                      std::find(args.begin(), args.end(), "-h") != args.end();
    if (!cmd && wants_help) {
        out << kUsage;
        return 0;
    }
    if (!cmd || !kCommands.count(*cmd)) {
        err << (cmd ? "unknown command '" + *cmd + "'\n" : "missing command\n") << kUsage;
        return 2;
    }

    CLI::App app{"exact computations with invariant laminations", "lamina"};
    app.fallthrough();
    int degree_value = 2;
    int depth = 4;
    bool json_flag = false;
    std::string out_path;
    app.add_option("--degree", degree_value, "degree of the angle map")->check(CLI::Range(2, 1000));
    app.add_option("--depth", depth, "pullback depth")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json_flag, "JSON output where text is the default");
    app.add_option("--out", out_path, "write the result to FILE");

    std::function<std::string()> run;
    auto degree = [&] { return Degree(degree_value); };

    // orbit
    std::string angle_text;
    auto* c_orbit = app.add_subcommand("orbit", "orbit of an angle");
    c_orbit->add_option("angle", angle_text)->required();
    c_orbit->callback([&] {
        run = [&] {
            auto o = angle_orbit(degree(), parse_angle(angle_text));
            Json j{{"preperiod", o.preperiod}, {"period", o.period}, {"orbit", Json::array()}};
            for (std::size_t i = 0; i < o.distinct(); ++i) j["orbit"].push_back(o.orbit[i].str());
            return dump(j);
        };
    });

    // leaf-orbit
    std::vector<std::string> pos;
    auto* c_leaf = app.add_subcommand("leaf-orbit", "orbit of a leaf");
    c_leaf->add_option("endpoints", pos)->expected(2)->required();
    c_leaf->callback([&] {
        run = [&] {
            auto o = leaf_orbit(degree(), chord_arg(pos, 0));
            Json j{{"preperiod", o.preperiod}, {"period", o.period}, {"orbit", Json::array()}};
            for (std::size_t i = 0; i < o.distinct(); ++i) j["orbit"].push_back(chord_json(o.orbit[i]));
            j["pairwise_unlinked"] = o.pairwise_unlinked;
            j["self_link_step"] = opt_int(o.self_link_step);
            j["collapse_step"] = opt_int(o.collapse_step);
            return dump(j);
        };
    });

    // pullback
    std::string portrait_path;
    std::vector<std::string> seed_leaves;
    bool no_critical = false;
    auto* c_pull = app.add_subcommand("pullback", "pullback lamination from critical data");
    c_pull->add_option("files", pos, "CRITICAL [SEED]")->expected(0, 2);
    c_pull->add_option("--portrait", portrait_path, "qc-portrait file instead of CRITICAL");
    c_pull->add_option("--leaf", seed_leaves, "seed leaf \"a b\" (repeatable)");
    c_pull->add_flag("--no-critical-leaves", no_critical, "keep critical chords out of the output");
    c_pull->callback([&] {
        run = [&] {
            PullbackLog log;
            std::optional<Lamination> lam;
            if (!portrait_path.empty()) {
                lam = portrait_lamination(parse_portrait(read_file(portrait_path)), depth, &log);
            } else {
                if (pos.empty()) throw Error("pullback needs a critical file or --portrait");
                auto fcc = parse_critical(read_file(pos[0]));
                Lamination seed = pos.size() > 1 ? parse_lamination(read_file(pos[1])) : Lamination(fcc.degree());
                if (seed.degree() != fcc.degree()) throw Error("seed and critical data have different degrees");
                for (const auto& s : seed_leaves) seed.insert(parse_chord(s));
                PullbackOptions opts;
                opts.include_critical_chords = !no_critical;
                lam = pullback_generate(fcc, seed, depth, opts, &log);
            }
            if (!json_flag) return serialize_lamination(*lam);
            Json j{{"degree", lam->degree().value()}, {"depth", depth}, {"leaves", Json::array()}};
            for (const auto& c : lam->leaves())
                j["leaves"].push_back(Json{{"leaf", chord_json(c)}, {"generation", lam->generation(c)}});
            j["added_per_step"] = log.added_per_step;
            j["discards"] = Json::array();
            for (const auto& d : log.discards)
                j["discards"].push_back(
                    Json{{"step", d.step}, {"candidate", chord_json(d.candidate)}, {"blocker", chord_json(d.blocker)}});
            return dump(j);
        };
    });

    // validate
    auto* c_val = app.add_subcommand("validate", "validity and sibling invariance of a lamination");
    c_val->add_option("file", pos)->expected(1)->required();
    c_val->callback([&] {
        run = [&] {
            auto lam = parse_lamination(read_file(pos[0]));
            auto v = validate(lam);
            auto s = check_sibling_invariance(lam);
            Json j{{"valid", v.valid && s.ok}};
            j["crossing"] = v.crossing ? Json::array({chord_json(v.crossing->first), chord_json(v.crossing->second)})
                                       : Json(nullptr);
            j["missing_images"] = chords_json(v.missing_images);
            j["sibling_invariance"] = Json{{"ok", s.ok},
                                           {"missing_images", chords_json(s.missing_images)},
                                           {"missing_pullbacks", chords_json(s.missing_pullbacks)},
                                           {"missing_siblings", chords_json(s.missing_siblings)},
                                           {"waived", s.waived}};
            j["proper"] = is_proper(lam).proper;
            return dump(j);
        };
    });

    // gaps
    auto* c_gaps = app.add_subcommand("gaps", "complementary gaps of a lamination");
    c_gaps->add_option("file", pos)->expected(1)->required();
    c_gaps->callback([&] {
        run = [&] {
            auto lam = parse_lamination(read_file(pos[0]));
            Json j{{"gaps", Json::array()}};
            for (const auto& g : gaps(lam)) {
                Json arcs = Json::array();
                for (const auto& a : g.arcs) arcs.push_back(a.str());
                j["gaps"].push_back(Json{{"boundary", poly_json(g.boundary)},
                                         {"degree", gap_degree(lam.degree(), g)},
                                         {"arcs", arcs},
                                         {"truncation_artifact", g.is_outer_truncation_artifact}});
            }
            return dump(j);
        };
    });

    // accordion
    auto* c_acc = app.add_subcommand("accordion", "accordions");
    c_acc->add_option("args", pos, "LAM A B")->expected(0, 3);
    auto* c_acc_cls = c_acc->add_subcommand("classify", "case of a linked pair of periodic leaves");
    std::vector<std::string> cls_pos;
    c_acc_cls->add_option("endpoints", cls_pos, "A B X Y")->expected(4)->required();
    c_acc_cls->callback([&] {
        run = [&] {
            auto c = classify_accordion(degree(), chord_arg(cls_pos, 0), chord_arg(cls_pos, 2));
            Json w{{"a", c.a.str()}, {"b", c.b.str()}, {"x", c.x.str()}, {"y", c.y.str()}};
            if (c.case_id == 2) {
                w["flip_power"] = c.flip_power;
                w["subcase"] = c.flip_subcase;
            }
            if (c.case_id == 3) w["period"] = c.period;
            if (c.case_id == 4) {
                w["other_index"] = c.other_index;
                w["pattern"] = c.pattern;
            }
            return dump(Json{{"case", c.case_id}, {"witness", w}, {"summary", c.str()}});
        };
    });
    c_acc->require_subcommand(0, 1);
    c_acc->callback([&] {
        if (run) return;
        if (pos.size() != 3) throw CLI::ArgumentMismatch("accordion needs LAM A B");
        run = [&] {
            auto lam = parse_lamination(read_file(pos[0]));
            auto acc = accordion_vs_lamination(lam, Chord(parse_angle(pos[1]), parse_angle(pos[2])));
            Json vs = Json::array();
            for (const auto& a : acc.vertices()) vs.push_back(a.str());
            return dump(Json{{"axis", chord_json(acc.axis)}, {"members", chords_json(acc.members)}, {"vertices", vs}});
        };
    });

    // classify
    auto* c_cls = app.add_subcommand("classify", "orbit type of a polygon");
    c_cls->add_option("vertices", pos)->required();
    c_cls->callback([&] {
        run = [&] {
            std::string lit;
            for (const auto& s : pos) lit += s + " ";
            Polygon p = parse_polygon(lit);
            auto w = wandering_check(degree(), p);
            Json j{{"polygon", poly_json(p)}, {"verdict", w.str()}};
            if (w.kind == WanderingVerdict::Kind::periodic && w.step == 0 && p.size() >= 3) {
                auto g = check_gap_transitivity(degree(), p);
                Json orbits = Json::array();
                for (const auto& o : g.orbits) {
                    Json oj = Json::array();
                    for (const auto& a : o) oj.push_back(a.str());
                    orbits.push_back(oj);
                }
                j["remap"] = Json{{"period", g.period},
                                  {"vertex_orbits", orbits},
                                  {"transitive", g.transitive()},
                                  {"fixed_dgon", g.fixed_dgon},
                                  {"consistent", g.consistent}};
            }
            return dump(j);
        };
    });

    // strip-check
    std::vector<std::string> strip_leaf;
    int sweep = 0;
    auto* c_strip = app.add_subcommand("strip-check", "central strip checks");
    c_strip->add_option("--leaf", strip_leaf, "quadratic leaf A B")->expected(2);
    c_strip->add_option("--sweep", sweep, "quadratic sweep up to this denominator");
    c_strip->callback([&] {
        run = [&] {
            if (!strip_leaf.empty()) {
                Chord l = chord_arg(strip_leaf, 0);
                auto cs = central_strip(l);
                auto v = central_strip_analyze(l);
                Json j{{"leaf", chord_json(l)}, {"sibling", chord_json(cs.sibling)}, {"verdict", v.str()}};
                j["image"] = v.image ? chord_json(*v.image) : Json(nullptr);
                return dump(j);
            }
            if (sweep > 0) {
                auto s = central_strip_sweep(sweep);
                Json j{{"max_denominator", s.max_denominator},
                       {"leaves", s.leaves},
                       {"never_enters", s.never_enters},
                       {"boundary_hits", s.boundary_hits},
                       {"separating", s.separating},
                       {"non_separating_inadmissible", s.non_separating_raw - s.counterexamples},
                       {"counterexamples", s.counterexamples}};
                j["first_counterexample"] =
                    s.first_counterexample ? chord_json(*s.first_counterexample) : Json(nullptr);
                return dump(j);
            }
            auto f = cubic_strip_example();
            const Degree three(3);
            Json j{{"M", chord_json(f.m)},
                   {"M_endpoint_periods",
                    Json::array({angle_orbit(three, f.m.lo()).period, angle_orbit(three, f.m.hi()).period})},
                   {"M_sibling", chord_json(f.m_sibling)},
                   {"N", chord_json(f.n)},
                   {"N_sibling", chord_json(f.n_sibling)},
                   {"steps_M_to_N", f.steps_m_to_n},
                   {"sigma_M", chord_json(f.image_of_m)},
                   {"narrow_strip_width", f.narrow_width.str()},
                   {"wide_strip_width", f.wide_width.str()},
                   {"sigma_M_in_wide_strip", to_string(f.image_in_wide)},
                   {"sigma_M_in_narrow_strip", to_string(f.image_in_narrow)},
                   {"inside_wide_strip", f.image_in_wide == StripPosition::inside_same ||
                                             f.image_in_wide == StripPosition::inside_split}};
            return dump(j);
        };
    });

    // qc verbs, both as qc-x and as qc x
    std::string avoid;
    auto qc_validate = [&] {
        auto p = parse_portrait(read_file(pos.at(0)));
        auto r = validate_portrait(p);
        Json j{{"valid", r.valid}, {"problems", r.problems}, {"warnings", r.warnings}};
        if (r.valid) {
            Json colls = Json::array();
            for (const auto& f : full_collections(p)) colls.push_back(chords_json(f.chords()));
            j["full_collections"] = colls;
        }
        return dump(j);
    };
    auto qc_link = [&] {
        auto v = linkage_verdict(parse_portrait(read_file(pos.at(0))), parse_portrait(read_file(pos.at(1))));
        Json per = Json::array();
        for (auto r : v.per_index) per.push_back(to_string(r));
        return dump(Json{{"relation", to_string(v.relation)}, {"per_index", per}});
    };
    auto qc_smart = [&] {
        auto p1 = parse_portrait(read_file(pos.at(0)));
        auto p2 = parse_portrait(read_file(pos.at(1)));
        std::optional<Angle> x;
        if (!avoid.empty()) x = parse_angle(avoid);
        auto f = smart_critical_collection(chord_arg(pos, 2), &p1, p2, x);
        return dump(Json{{"collection", chords_json(f.chords())}});
    };
    auto add_qc = [&](CLI::App* parent, const std::string& name, int nargs, std::function<std::string()> fn) {
        auto* c = parent->add_subcommand(name);
        c->add_option("args", pos)->expected(nargs)->required();
        if (name.find("smart") != std::string::npos) c->add_option("--avoid", avoid, "endpoint to keep free");
        c->callback([&run, fn] { run = fn; });
    };
    add_qc(&app, "qc-validate", 1, qc_validate);
    add_qc(&app, "qc-link", 2, qc_link);
    add_qc(&app, "qc-smart", 4, qc_smart);
    auto* c_qc = app.add_subcommand("qc", "qc-portrait verbs");
    c_qc->require_subcommand(1);
    add_qc(c_qc, "validate", 1, qc_validate);
    add_qc(c_qc, "link", 2, qc_link);
    add_qc(c_qc, "smart", 4, qc_smart);

    // cotag
    std::string tolerance = "1/1000";
    auto* c_tag = app.add_subcommand("cotag", "co-critical tags");
    c_tag->require_subcommand(1);
    auto* t_compute = c_tag->add_subcommand("compute", "tag of two critical sets given as polygon literals");
    t_compute->add_option("sets", pos)->expected(2)->required();
    t_compute->callback([&] {
        run = [&] {
            CoTag t = cotag(parse_polygon(pos[0]), parse_polygon(pos[1]));
            if (!json_flag) return serialize_tag(t);
            return dump(Json{{"first", poly_json(t.first)}, {"second", poly_json(t.second)}});
        };
    });
    auto* t_rel = c_tag->add_subcommand("relation", "relation of two tag files");
    t_rel->add_option("files", pos)->expected(2)->required();
    t_rel->callback([&] {
        run = [&] {
            auto r = tags_relation(parse_tag(read_file(pos[0])), parse_tag(read_file(pos[1])));
            return dump(Json{{"relation", to_string(r)}});
        };
    });
    auto* t_usc = c_tag->add_subcommand("usc", "upper semicontinuity witness");
    t_usc->add_option("files", pos, "LIMIT TARGET SEQ...")->expected(2, 1 << 20)->required();
    t_usc->add_option("--tolerance", tolerance, "distance bound for the last term");
    t_usc->callback([&] {
        run = [&] {
            CoTag limit = parse_tag(read_file(pos[0]));
            CoTag target = parse_tag(read_file(pos[1]));
            std::vector<CoTag> seq;
            for (std::size_t i = 2; i < pos.size(); ++i) seq.push_back(parse_tag(read_file(pos[i])));
            Angle tol = parse_angle(tolerance);
            auto r = usc_witness_check(seq, limit, target, tol.value());
            Json d = Json::array();
            for (std::size_t i = 0; i < seq.size(); ++i)
                d.push_back(Json::array({r.first_distances[i].str(), r.second_distances[i].str()}));
            return dump(Json{{"pass", r.pass},
                             {"limit_meets_target", r.limit_meets_target},
                             {"message", r.message},
                             {"distances", d}});
        };
    });

    // render
    bool hyperbolic = false, labels = false;
    int size = 512;
    double stroke = 0.004;
    auto* c_render = app.add_subcommand("render", "SVG picture of a lamination");
    c_render->add_option("file", pos)->expected(1)->required();
    c_render->add_flag("--hyperbolic", hyperbolic, "draw leaves as geodesics");
    c_render->add_flag("--labels", labels, "label endpoints");
    c_render->add_option("--size", size, "image size in pixels")->check(CLI::Range(64, 1 << 14));
    c_render->add_option("--stroke", stroke, "stroke width in disk units");
    c_render->callback([&] {
        run = [&] {
            RenderStyle st;
            st.geodesic = hyperbolic ? RenderStyle::Geodesic::hyperbolic : RenderStyle::Geodesic::straight;
            st.label_angles = labels;
            st.image_size = size;
            st.stroke_width = stroke;
            return render_svg(parse_lamination(read_file(pos[0])), st);
        };
    });

    app.require_subcommand(1);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << kUsage;
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (!run) {
        err << kUsage;
        return 2;
    }
    try {
        std::string result = run();
        if (out_path.empty()) {
            out << result;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw Error("cannot write " + out_path);
            f << result;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range&) {
        err << "error: missing arguments\n" << kUsage;
        return 2;
    }
    return 0;
}

}  // namespace lamina
