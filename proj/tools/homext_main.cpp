#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "homext/json_io.hpp"
#include "homext/svg.hpp"

using namespace homext;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ModuleSet load_collection(const std::string& signs, const std::string& path) {
    ModuleSet chi{build_atilde(OrientationVector::parse(signs)), {}};
    chi.modules = parse_collection(read_file(path));
    if (chi.modules.empty()) throw ParseError("collection file " + path + " lists no modules");
    chi.validate();
    return chi;
}

json basis_json(const AtildeQuiver& q, const StringModule& m1, const StringModule& m2,
                bool ext) {
    json out = json::array();
    if (!ext) {
        for (const GraphMap& gm : graph_maps(q, m1, m2)) {
            json e;
            e["kind"] = "graph_map";
            e["quotient_cuts"] = {gm.quot.a, gm.quot.b};
            e["submodule_cuts"] = {gm.sub.a, gm.sub.b};
            e["middle_inverted"] = gm.middle_inverted;
            e["two_sided"] = gm.two_sided;
            out.push_back(std::move(e));
        }
        return out;
    }
    for (const ExtClass& e : ext_basis(q, m1, m2)) {
        json item;
        if (e.from_connection) {
            item["kind"] = "connection";
            item["arrow"] = e.conn.arrow;
        } else {
            item["kind"] = "two_sided_graph_map";
            item["quotient_cuts"] = {e.map.quot.a, e.map.quot.b};
            item["submodule_cuts"] = {e.map.sub.a, e.map.sub.b};
        }
        json mids = json::array();
        for (const StringModule& m : e.middle_terms) mids.push_back(m.to_string());
        item["middle_terms"] = std::move(mids);
        out.push_back(std::move(item));
    }
    return out;
}

void emit(const json& doc, bool as_json, const std::string& out_path) {
    std::string text = as_json ? doc.dump(2) : doc.dump(2);
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
    }
}

json homext_json_doc(const HomExtQuiver& h) { return json::parse(homext_to_json(h)); }

int run(int argc, char** argv) {
    CLI::App app{"exact computations with string modules over acyclic cycle quivers"};
    app.require_subcommand(1);

    std::string signs, m1_text, m2_text, file, out_path;
    int window = 3;
    int lmax = 2;
    int twist_a = 0, twist_b = 0;
    int band = 0;
    bool as_json = false;
    std::string field = "rational";

    auto add_common = [&](CLI::App* cmd, bool needs_quiver = true) {
        if (needs_quiver) cmd->add_option("--quiver", signs, "sign string such as +--")->required();
        cmd->add_flag("--json", as_json, "emit JSON");
        cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* hom = app.add_subcommand("hom", "basis and dimension of Hom(M1, M2)");
    add_common(hom);
    hom->add_option("m1", m1_text)->required();
    hom->add_option("m2", m2_text)->required();

    CLI::App* ext = app.add_subcommand("ext", "basis and dimension of Ext(M1, M2)");
    add_common(ext);
    ext->add_option("m1", m1_text)->required();
    ext->add_option("m2", m2_text)->required();

    CLI::App* hequiver = app.add_subcommand("hequiver", "quiver of a module collection");
    add_common(hequiver);
    hequiver->add_option("collection", file, "collection file")->required();

    CLI::App* orderings = app.add_subcommand("orderings", "exceptional orderings of a collection");
    add_common(orderings);
    orderings->add_option("collection", file)->required();

    CLI::App* check = app.add_subcommand("check", "exceptionality verdict for a collection");
    add_common(check);
    check->add_option("collection", file)->required();

    CLI::App* classify_cmd = app.add_subcommand("classify", "twist classes of exceptional sets");
    add_common(classify_cmd);
    classify_cmd->add_option("--window", window, "twist search window");
    classify_cmd->add_option("--lmax", lmax, "winding bound for the enumeration");

    CLI::App* twist_cmd = app.add_subcommand("twist", "apply boundary twists to a collection");
    add_common(twist_cmd);
    twist_cmd->add_option("collection", file)->required();
    twist_cmd->add_option("-a", twist_a, "left twist exponent");
    twist_cmd->add_option("-b", twist_b, "right twist exponent");

    CLI::App* super = app.add_subcommand("superquiver", "degree-graded quiver with frozen arrows");
    add_common(super);
    super->add_option("collection", file)->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "matrix-level dimension queries");
    add_common(oracle_cmd);
    oracle_cmd->add_option("m1", m1_text)->required();
    oracle_cmd->add_option("m2", m2_text)->required();
    oracle_cmd->add_option("--field", field, "rational or prime");

    CLI::App* render = app.add_subcommand("render", "draw a collection as an annulus diagram");
    add_common(render);
    render->add_option("collection", file)->required();
    render->add_option("--band", band, "overlay the closed curve of this band power");

    CLI11_PARSE(app, argc, argv);

    if (hom->parsed() || ext->parsed()) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        StringModule m1 = StringModule::parse(m1_text), m2 = StringModule::parse(m2_text);
        const bool want_ext = ext->parsed();
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["quiver"] = signs;
        doc["m1"] = m1.to_string();
        doc["m2"] = m2.to_string();
        doc["dim"] = want_ext ? dim_ext(q, m1, m2) : dim_hom(q, m1, m2);
        doc["basis"] = basis_json(q, m1, m2, want_ext);
        emit(doc, as_json, out_path);
        return 0;
    }

    if (hequiver->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["quiver"] = signs;
        const bool exceptional = is_exceptional_set(chi);
        doc["exceptional"] = exceptional;
        if (exceptional) {
            HomExtQuiver h = build_geometric(chi);
            HomExtQuiver alg = build_algebraic(chi);
            if (!iso_with_relations(h.quiver, alg.quiver).has_value())
                throw InternalInconsistency("geometric and algebraic quivers disagree");
            doc["homext_quiver"] = homext_json_doc(h);
            auto reach = ext_poset(h.quiver);
            json poset = json::array();
            for (size_t i = 0; i < reach.size(); ++i)
                for (size_t j = 0; j < reach.size(); ++j)
                    if (i != j && reach[i][j])
                        poset.push_back(json::array(
                            {h.modules[i].to_string(), h.modules[j].to_string()}));
            doc["poset"] = std::move(poset);
            doc["linear_extensions"] = count_linear_extensions(h.quiver).str();
            json fans = json::object();
            ArcDiagram d = chi.diagram();
            for (int p = 1; p <= chi.quiver.n(); ++p) {
                json fan = json::array();
                for (const Arc& a : complete_fan(d, p)) fan.push_back(a.to_string());
                fans[std::to_string(p)] = std::move(fan);
            }
            doc["fans"] = std::move(fans);
            if (chi.modules.size() <= 8) {
                json orders = json::array();
                for (const auto& order : exceptional_orderings(chi)) {
                    json one = json::array();
                    for (const StringModule& m : order) one.push_back(m.to_string());
                    orders.push_back(std::move(one));
                }
                doc["orderings"] = std::move(orders);
            }
        } else {
            HomExtQuiver h = build_algebraic(chi);
            doc["homext_quiver"] = homext_json_doc(h);
            // cycle witness: a shortest directed cycle of the arrow relation
            json witness = json::array();
            const auto& arrows = h.quiver.arrows;
            std::vector<int> loop_at;
            for (const auto& a : arrows)
                if (a.src == a.tgt) loop_at.push_back(a.src);
            if (!loop_at.empty()) {
                witness.push_back(h.modules[static_cast<size_t>(loop_at[0])].to_string());
            } else {
                auto reach = ext_poset(h.quiver);
                for (size_t i = 0; i < reach.size() && witness.empty(); ++i)
                    for (size_t j = 0; j < reach.size() && witness.empty(); ++j)
                        if (i != j && reach[i][j] && reach[j][i]) {
                            witness.push_back(h.modules[i].to_string());
                            witness.push_back(h.modules[j].to_string());
                        }
            }
            doc["cycle_witness"] = std::move(witness);
        }
        emit(doc, as_json, out_path);
        return 0;
    }

    if (orderings->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        json doc;
        doc["schema_version"] = kSchemaVersion;
        auto orders = exceptional_orderings(chi);
        doc["count"] = orders.size();
        if (chi.modules.size() <= 8) {
            json list = json::array();
            for (const auto& order : orders) {
                json one = json::array();
                for (const StringModule& m : order) one.push_back(m.to_string());
                list.push_back(std::move(one));
            }
            doc["orderings"] = std::move(list);
        }
        emit(doc, as_json, out_path);
        return 0;
    }

    if (check->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        json doc;
        doc["schema_version"] = kSchemaVersion;
        const bool algebraic = is_exceptional_set(chi);
        bool geometric = false;
        try {
            geometric = is_exceptional_diagram(chi.diagram());
        } catch (const WrongCardinality&) {
            geometric = false;
        }
        const bool by_ordering = !exceptional_orderings(chi).empty();
        if (algebraic != geometric || algebraic != by_ordering)
            throw InternalInconsistency("exceptionality verdicts disagree");
        doc["exceptional"] = algebraic;
        emit(doc, as_json, out_path);
        return 0;
    }

    if (classify_cmd->parsed()) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        auto sets = enumerate_exceptional_sets(q, lmax);
        auto classes = classify_sets(sets, window);
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["quiver"] = signs;
        doc["winding_bound"] = lmax;
        doc["window"] = window;
        doc["set_count"] = sets.size();
        doc["class_count"] = classes.size();
        json cls = json::array();
        for (const TwistClass& c : classes) {
            json one;
            json rep = json::array();
            for (const StringModule& m : sets[static_cast<size_t>(c.representative)].modules)
                rep.push_back(m.to_string());
            one["representative"] = std::move(rep);
            one["quiver"] = homext_json_doc(c.quiver);
            json members = json::array();
            for (const TwistClassMember& m : c.members) {
                json entry;
                json mods = json::array();
                for (const StringModule& mod : sets[static_cast<size_t>(m.set_index)].modules)
                    mods.push_back(mod.to_string());
                entry["modules"] = std::move(mods);
                if (m.word) entry["twist_word"] = {m.word->a, m.word->b};
                if (m.window_exhausted) entry["window_exhausted"] = true;
                members.push_back(std::move(entry));
            }
            one["members"] = std::move(members);
            cls.push_back(std::move(one));
        }
        doc["classes"] = std::move(cls);
        emit(doc, as_json, out_path);
        return 0;
    }

    if (twist_cmd->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        ModuleSet twisted = twist_set(chi, TwistWord{twist_a, twist_b});
        std::string text = write_collection(twisted.modules);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw Error("cannot write " + out_path);
            out << text;
        }
        return 0;
    }

    if (super->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        HomExtQuiver h = build_geometric(chi);
        Superquiver s = from_homext(h, chi.quiver);
        json doc = json::parse(superquiver_to_json(s));
        json comps = json::array();
        for (const StringModule& m : chi.modules)
            comps.push_back(to_string(classify(chi.quiver, m)));
        doc["components"] = std::move(comps);
        doc["trivial_twist"] = json::parse(superquiver_to_json(trivial_twist(s)));
        emit(doc, as_json, out_path);
        return 0;
    }

    if (oracle_cmd->parsed()) {
        AtildeQuiver q = build_atilde(OrientationVector::parse(signs));
        GQuiver g = to_general(q);
        StringModule m1 = StringModule::parse(m1_text), m2 = StringModule::parse(m2_text);
        FieldMode mode;
        if (field == "rational") mode = FieldMode::Rational;
        else if (field == "prime") mode = FieldMode::Prime;
        else throw ParseError("--field must be rational or prime");
        RepQ r1 = realize(q, m1), r2 = realize(q, m2);
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["field"] = field;
        doc["hom"] = hom_dim(g, r1, r2, mode);
        doc["ext"] = ext_dim(g, r1, r2, mode);
        doc["euler"] = euler_form(g, r1.dims, r2.dims);
        doc["ext_cokernel"] = ext_dim_cokernel(g, r1, r2);
        emit(doc, as_json, out_path);
        return 0;
    }

    if (render->parsed()) {
        ModuleSet chi = load_collection(signs, file);
        std::optional<ClosedCurve> curve;
        if (band > 0) curve = psi(BandPower{band});
        std::string svg = render_svg(chi.diagram(), curve);
        if (out_path.empty()) {
            std::cout << svg;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw Error("cannot write " + out_path);
            out << svg;
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const NegativeExt& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const TooShort& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AllSignsEqual& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
