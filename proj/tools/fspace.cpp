// Command-line front end. Exit codes: 0 success, 1 domain error,
// 2 I/O or format error (including unknown subcommands).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fspace/complexes.hpp"
#include "fspace/digraph.hpp"
#include "fspace/enumeration.hpp"
#include "fspace/errors.hpp"
#include "fspace/group_actions.hpp"
#include "fspace/homotopy.hpp"
#include "fspace/io.hpp"
#include "fspace/linalg.hpp"
#include "fspace/poset.hpp"
#include "fspace/subposet_sums.hpp"
#include "fspace/zero_one_matrix.hpp"

namespace {

using nlohmann::json;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string perm_one_based(const std::vector<int>& perm) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(perm[i] + 1);
    }
    return out;
}

int cmd_validate(const std::string& path, bool as_json) {
    if (path.ends_with(".pm")) {
        fspace::ZeroOneMatrix m = fspace::load_matrix_file(path);
        auto violation = fspace::validate_membership(m);
        if (as_json) {
            json doc = fspace::json_document("validate");
            doc["ok"] = !violation.has_value();
            if (violation) {
                doc["condition"] = violation->condition;
                doc["witness"] = {violation->i + 1, violation->j + 1, violation->k + 1};
                doc["detail"] = violation->describe();
            }
            emit(doc);
        } else {
            std::cout << (violation ? violation->describe() : "ok") << "\n";
        }
        return violation ? 1 : 0;
    }
    if (path.ends_with(".cplx")) {
        fspace::load_complex_file(path);
    } else {
        fspace::load_poset_file(path);
    }
    if (as_json) {
        json doc = fspace::json_document("validate");
        doc["ok"] = true;
        emit(doc);
    } else {
        std::cout << "ok\n";
    }
    return 0;
}

int cmd_matrix(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    fspace::ZeroOneMatrix m = fspace::matrix_from_poset(p);
    if (as_json) {
        json doc = fspace::json_document("matrix");
        doc.update(fspace::to_json(m));
        emit(doc);
    } else {
        std::cout << fspace::write_matrix(m);
    }
    return 0;
}

int cmd_poset(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::poset_from_matrix(fspace::load_matrix_file(path));
    if (as_json) {
        json doc = fspace::json_document("poset");
        doc.update(fspace::to_json(p));
        emit(doc);
    } else {
        std::cout << fspace::write_poset(p);
    }
    return 0;
}

int cmd_invariants(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    fspace::InvariantsBundle b = fspace::invariants_bundle(p);
    if (as_json) {
        json doc = fspace::json_document("invariants");
        doc.update(fspace::to_json(b));
        doc["n"] = p.size();
        emit(doc);
    } else {
        std::cout << "n           " << p.size() << "\n"
                  << "det         " << b.det.get_str() << "\n"
                  << "absDet      " << b.abs_det.get_str() << "\n"
                  << "rankBar     " << b.rank_bar << "\n"
                  << "reducedEuler " << b.reduced_euler.get_str() << "\n"
                  << "eulerConsistent " << (b.euler_consistent ? "yes" : "no") << "\n"
                  << "sigma       " << b.sums.total << "\n";
    }
    return 0;
}

int cmd_core(const std::string& path, bool as_json, bool weak) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    auto [result, trace] = weak ? fspace::weak_reduce(p) : fspace::core(p);
    if (as_json) {
        json doc = fspace::json_document(weak ? "reduce" : "core");
        doc["result"] = fspace::to_json(result);
        doc["trace"] = fspace::to_json(trace);
        doc["signFlips"] = trace.sign_flips();
        emit(doc);
    } else {
        for (const auto& move : trace.moves)
            std::cout << "remove " << move.label << " (" << fspace::move_kind_name(move.move)
                      << (move.witness ? ", witness " + *move.witness : "") << ")\n";
        std::cout << fspace::write_poset(result);
    }
    return 0;
}

int cmd_beats(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    auto beats = fspace::find_beat_points(p);
    auto weaks = fspace::find_weak_beat_points(p);
    if (as_json) {
        json doc = fspace::json_document("beats");
        json beat_list = json::array();
        for (const auto& b : beats) {
            json item;
            item["index"] = b.point + 1;
            item["label"] = p.label(b.point);
            item["kind"] = fspace::beat_kind_name(b.kind);
            item["witness"] = p.label(b.witness);
            beat_list.push_back(std::move(item));
        }
        doc["beatPoints"] = beat_list;
        json weak_list = json::array();
        for (const auto& w : weaks) {
            json item;
            item["index"] = w.point + 1;
            item["label"] = p.label(w.point);
            item["kind"] = fspace::weak_kind_name(w.kind);
            weak_list.push_back(std::move(item));
        }
        doc["weakBeatPoints"] = weak_list;
        emit(doc);
    } else {
        for (const auto& b : beats)
            std::cout << "beat " << p.label(b.point) << " " << fspace::beat_kind_name(b.kind)
                      << " witness " << p.label(b.witness) << "\n";
        for (const auto& w : weaks)
            std::cout << "weak " << p.label(w.point) << " " << fspace::weak_kind_name(w.kind)
                      << "\n";
        if (beats.empty() && weaks.empty()) std::cout << "none\n";
    }
    return 0;
}

int cmd_homeo(const std::string& a, const std::string& b, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(a);
    fspace::Poset q = fspace::load_poset_or_matrix(b);
    auto sigma = fspace::homeomorphism(p, q);
    if (as_json) {
        json doc = fspace::json_document("homeo");
        doc["homeomorphic"] = sigma.has_value();
        if (sigma) {
            json perm = json::array();
            for (int v : *sigma) perm.push_back(v + 1);
            doc["permutation"] = perm;
        }
        emit(doc);
    } else if (sigma) {
        std::cout << "homeomorphic\npermutation: " << perm_one_based(*sigma) << "\n";
    } else {
        std::cout << "non-homeomorphic\n";
    }
    return 0;
}

int cmd_order_complex(const std::string& path, bool as_json) {
    fspace::SimplicialComplex k = fspace::order_complex(fspace::load_poset_or_matrix(path));
    if (as_json) {
        json doc = fspace::json_document("order-complex");
        doc.update(fspace::to_json(k));
        emit(doc);
    } else {
        std::cout << fspace::write_complex(k);
    }
    return 0;
}

int cmd_face_poset(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::face_poset(fspace::load_complex_file(path));
    if (as_json) {
        json doc = fspace::json_document("face-poset");
        doc.update(fspace::to_json(p));
        emit(doc);
    } else {
        std::cout << fspace::write_poset(p);
    }
    return 0;
}

int cmd_euler(const std::string& path, bool as_json) {
    long long chi = 0;
    fspace::BigInt chi_reduced;
    if (path.ends_with(".cplx")) {
        fspace::SimplicialComplex k = fspace::load_complex_file(path);
        chi = fspace::euler(k);
        chi_reduced = static_cast<long>(fspace::reduced_euler(k));
    } else {
        chi_reduced = fspace::reduced_euler_of_poset(fspace::load_poset_or_matrix(path));
        chi = static_cast<long long>(fspace::BigInt(chi_reduced + 1).get_si());
    }
    if (as_json) {
        json doc = fspace::json_document("euler");
        doc["euler"] = chi;
        doc["reducedEuler"] = fspace::big_to_json(chi_reduced);
        emit(doc);
    } else {
        std::cout << "euler " << chi << "\nreducedEuler " << chi_reduced.get_str() << "\n";
    }
    return 0;
}

int cmd_det_complex(const std::string& path, bool as_json) {
    fspace::SimplicialComplex k = fspace::load_complex_file(path);
    fspace::BigInt det = fspace::det_of_complex(k);
    int rb = fspace::rankbar_of_complex(k);
    if (as_json) {
        json doc = fspace::json_document("det-complex");
        doc["det"] = fspace::big_to_json(det);
        doc["rankBar"] = rb;
        emit(doc);
    } else {
        std::cout << "det " << det.get_str() << "\nrankBar " << rb << "\n";
    }
    return 0;
}

int cmd_gamma(const std::string& path, bool as_json, int limit) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    fspace::GammaTable table = fspace::gamma_table(p, limit);
    if (as_json) {
        json doc = fspace::json_document("gamma");
        doc.update(fspace::to_json(table));
        emit(doc);
    } else {
        for (std::size_t i = 0; i < table.gamma.size(); ++i)
            std::cout << "gamma[" << i << "] " << table.gamma[i].get_str() << "\n";
        std::cout << "detPlusIdentity " << table.det_plus_identity.get_str() << "\n";
    }
    return 0;
}

int cmd_det_plus_i(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    fspace::BigInt d = fspace::det_plus_identity(p);
    if (as_json) {
        json doc = fspace::json_document("det-plus-i");
        doc["detPlusIdentity"] = fspace::big_to_json(d);
        doc["isChain"] = d == 1;
        emit(doc);
    } else {
        std::cout << d.get_str() << "\n";
    }
    return 0;
}

int cmd_action(const std::string& mode, const std::string& poset_path,
               const std::string& action_path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(poset_path);
    auto perms = fspace::load_action_file(action_path);
    fspace::GroupAction action = fspace::validate_action(p, perms);
    json doc = fspace::json_document("action");
    doc["mode"] = mode;
    doc["groupOrder"] = action.order();
    if (mode == "validate") {
        doc["ok"] = true;
        if (!as_json) std::cout << "ok: free action of order " << action.order() << "\n";
    } else if (mode == "block") {
        fspace::BlockForm blocks = fspace::block_form(p, action);
        doc["latinVerified"] = blocks.latin_verified;
        json domain = json::array();
        for (int v : blocks.domain) domain.push_back(v + 1);
        doc["domain"] = domain;
        doc["blockOf"] = blocks.block_of;
        if (!as_json) {
            std::cout << "latin block structure verified\ndomain:";
            for (int v : blocks.domain) std::cout << " " << p.label(v);
            std::cout << "\n" << fspace::write_matrix(blocks.reordered);
        }
    } else if (mode == "z2") {
        fspace::Z2Factorization f = fspace::z2_det_factorization(p, action);
        doc["detSum"] = fspace::big_to_json(f.det_sum);
        doc["detDifference"] = fspace::big_to_json(f.det_difference);
        doc["product"] = fspace::big_to_json(f.product);
        doc["det"] = fspace::big_to_json(f.det_full);
        if (!as_json)
            std::cout << "det(A11+A12) " << f.det_sum.get_str() << "\ndet(A11-A12) "
                      << f.det_difference.get_str() << "\nproduct " << f.product.get_str()
                      << "\ndet " << f.det_full.get_str() << "\n";
    } else if (mode == "orbit") {
        fspace::OrbitSumReport r = fspace::orbit_sum_check(p, action);
        doc["sumDown"] = r.sum_down;
        doc["sumUp"] = r.sum_up;
        doc["downDivisible"] = r.down_divisible;
        doc["upDivisible"] = r.up_divisible;
        if (!as_json)
            std::cout << "sum |U| " << r.sum_down << (r.down_divisible ? " (divisible)" : " (NOT divisible)")
                      << "\nsum |F| " << r.sum_up << (r.up_divisible ? " (divisible)" : " (NOT divisible)")
                      << "\n";
    } else {
        throw fspace::FormatError("action", 0, "unknown mode '" + mode + "'");
    }
    if (as_json) emit(doc);
    return 0;
}

int cmd_enumerate(int n, const std::string& emit_dir, bool as_json) {
    auto posets = fspace::enumerate_posets(n);
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        std::ostringstream csv;
        csv << "file,n,absDet,rankBar,width,height,reducedEuler,A2,A3,detPlusI\n";
        int index = 0;
        for (const auto& p : posets) {
            ++index;
            char name[32];
            std::snprintf(name, sizeof name, "poset_%04d.poset", index);
            std::ofstream out(std::filesystem::path(emit_dir) / name);
            out << fspace::write_poset(p);
            auto counts = fspace::antichain_counts(p);
            csv << name << "," << p.size() << ","
                << fspace::BigInt(abs(fspace::determinant(fspace::matrix_from_poset(p)))).get_str()
                << ","
                << fspace::rank_bar(p) << "," << fspace::width(p) << "," << fspace::height(p)
                << "," << fspace::reduced_euler_of_poset(p).get_str() << ","
                << counts.a2.get_str() << "," << counts.a3.get_str() << ","
                << fspace::det_plus_identity(p).get_str() << "\n";
        }
        std::ofstream csv_file(std::filesystem::path(emit_dir) / "invariants.csv");
        csv_file << csv.str();
    }
    if (as_json) {
        json doc = fspace::json_document("enumerate");
        doc["n"] = n;
        doc["count"] = posets.size();
        emit(doc);
    } else {
        std::cout << posets.size() << "\n";
    }
    return 0;
}

int cmd_family(const std::string& name, int size, bool as_json) {
    fspace::Poset p = fspace::make_family({name, size});
    if (as_json) {
        json doc = fspace::json_document("family");
        doc.update(fspace::to_json(p));
        emit(doc);
    } else {
        std::cout << fspace::write_poset(p);
    }
    return 0;
}

int cmd_dot(const std::string& path, const std::string& view) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    if (view == "hasse") {
        std::cout << fspace::export_dot_hasse(p);
    } else if (view == "gx") {
        std::cout << fspace::export_dot(fspace::to_digraph(fspace::matrix_from_poset(p)),
                                        p.labels());
    } else {
        throw fspace::FormatError("dot", 0, "unknown view '" + view + "'");
    }
    return 0;
}

int cmd_scc(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    fspace::SccResult r = fspace::scc(fspace::to_digraph(fspace::matrix_from_poset(p)));
    if (as_json) {
        json doc = fspace::json_document("scc");
        doc["count"] = r.count;
        doc["component"] = r.component;
        emit(doc);
    } else {
        std::cout << r.count << "\n";
    }
    return 0;
}

int cmd_width(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    if (as_json) {
        json doc = fspace::json_document("width");
        doc["width"] = fspace::width(p);
        doc["height"] = fspace::height(p);
        emit(doc);
    } else {
        std::cout << fspace::width(p) << "\n";
    }
    return 0;
}

int cmd_antichains(const std::string& path, bool as_json) {
    fspace::Poset p = fspace::load_poset_or_matrix(path);
    auto counts = fspace::antichain_counts(p);
    if (as_json) {
        json doc = fspace::json_document("antichains");
        doc["a2"] = fspace::big_to_json(counts.a2);
        doc["a3"] = fspace::big_to_json(counts.a3);
        emit(doc);
    } else {
        std::cout << "A2 " << counts.a2.get_str() << "\nA3 " << counts.a3.get_str() << "\n";
    }
    return 0;
}

int cmd_fence_check(int n, bool as_json) {
    bool all_ok = true;
    json results = json::array();
    for (int k = 2; k <= n; ++k) {
        bool ok = fspace::fence_charpoly_check(k);
        all_ok = all_ok && ok;
        if (as_json) {
            json item;
            item["n"] = k;
            item["ok"] = ok;
            results.push_back(std::move(item));
        } else {
            std::cout << "fence(" << k << ") "
                      << (ok ? "ok" : "MISMATCH") << "\n";
        }
    }
    if (as_json) {
        json doc = fspace::json_document("fence-check");
        doc["results"] = results;
        doc["ok"] = all_ok;
        emit(doc);
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact poset/matrix invariants for finite topological spaces"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    bool as_json = false;
    std::string file_a, file_b, mode = "validate", view = "gx", name, emit_dir;
    int number = 0, limit = 0;

    auto* validate = app.add_subcommand("validate", "check a .poset/.pm/.cplx file");
    validate->add_option("file", file_a)->required();
    auto* matrix = app.add_subcommand("matrix", "poset -> 0/1 matrix");
    matrix->add_option("file", file_a)->required();
    auto* poset = app.add_subcommand("poset", "0/1 matrix -> poset");
    poset->add_option("file", file_a)->required();
    auto* invariants = app.add_subcommand("invariants", "det, rank-bar, sums, Euler");
    invariants->add_option("file", file_a)->required();
    auto* core = app.add_subcommand("core", "Stong core with reduction trace");
    core->add_option("file", file_a)->required();
    auto* reduce = app.add_subcommand("reduce", "beat + weak-beat removal reduction");
    reduce->add_option("file", file_a)->required();
    auto* beats = app.add_subcommand("beats", "beat and weak beat points");
    beats->add_option("file", file_a)->required();
    auto* homeo = app.add_subcommand("homeo", "decide homeomorphism of two posets");
    homeo->add_option("a", file_a)->required();
    homeo->add_option("b", file_b)->required();
    auto* order_cx = app.add_subcommand("order-complex", "poset -> order complex");
    order_cx->add_option("file", file_a)->required();
    auto* face_p = app.add_subcommand("face-poset", "complex -> face poset");
    face_p->add_option("file", file_a)->required();
    auto* euler = app.add_subcommand("euler", "Euler characteristics");
    euler->add_option("file", file_a)->required();
    auto* det_cx = app.add_subcommand("det-complex", "det and rank-bar of a complex");
    det_cx->add_option("file", file_a)->required();
    auto* gamma = app.add_subcommand("gamma", "Γ subposet determinant sums");
    gamma->add_option("file", file_a)->required();
    gamma->add_option("--limit", limit, "size cap override");
    auto* det_pi = app.add_subcommand("det-plus-i", "det(X_M + I)");
    det_pi->add_option("file", file_a)->required();
    auto* action = app.add_subcommand("action", "group action checks");
    action->add_option("mode", mode, "validate|block|z2|orbit")->required();
    action->add_option("poset", file_a)->required();
    action->add_option("perms", file_b)->required();
    auto* enumerate = app.add_subcommand("enumerate", "posets up to homeomorphism");
    enumerate->add_option("n", number)->required();
    enumerate->add_option("--emit", emit_dir, "write .poset files and invariants.csv");
    auto* family = app.add_subcommand("family", "named poset families");
    family->add_option("name", name)->required();
    family->add_option("size", number);
    auto* dot = app.add_subcommand("dot", "GraphViz export");
    dot->add_option("file", file_a)->required();
    dot->add_option("--view", view, "gx|hasse");
    auto* scc_cmd = app.add_subcommand("scc", "strongly connected components of G_X");
    scc_cmd->add_option("file", file_a)->required();
    auto* width_cmd = app.add_subcommand("width", "maximum antichain size");
    width_cmd->add_option("file", file_a)->required();
    auto* anti = app.add_subcommand("antichains", "A2 and A3 counts");
    anti->add_option("file", file_a)->required();
    auto* fence = app.add_subcommand("fence-check", "fence characteristic polynomial identity");
    fence->add_option("n", number)->required();

    for (auto* sub : {validate, matrix, poset, invariants, core, reduce, beats, homeo, order_cx,
                      face_p, euler, det_cx, gamma, det_pi, action, enumerate, family, scc_cmd,
                      width_cmd, anti, fence})
        sub->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file_a, as_json);
        if (matrix->parsed()) return cmd_matrix(file_a, as_json);
        if (poset->parsed()) return cmd_poset(file_a, as_json);
        if (invariants->parsed()) return cmd_invariants(file_a, as_json);
        if (core->parsed()) return cmd_core(file_a, as_json, false);
        if (reduce->parsed()) return cmd_core(file_a, as_json, true);
        if (beats->parsed()) return cmd_beats(file_a, as_json);
        if (homeo->parsed()) return cmd_homeo(file_a, file_b, as_json);
        if (order_cx->parsed()) return cmd_order_complex(file_a, as_json);
        if (face_p->parsed()) return cmd_face_poset(file_a, as_json);
        if (euler->parsed()) return cmd_euler(file_a, as_json);
        if (det_cx->parsed()) return cmd_det_complex(file_a, as_json);
        if (gamma->parsed()) return cmd_gamma(file_a, as_json, limit);
        if (det_pi->parsed()) return cmd_det_plus_i(file_a, as_json);
        if (action->parsed()) return cmd_action(mode, file_a, file_b, as_json);
        if (enumerate->parsed()) return cmd_enumerate(number, emit_dir, as_json);
        if (family->parsed()) return cmd_family(name, number, as_json);
        if (dot->parsed()) return cmd_dot(file_a, view);
        if (scc_cmd->parsed()) return cmd_scc(file_a, as_json);
        if (width_cmd->parsed()) return cmd_width(file_a, as_json);
        if (anti->parsed()) return cmd_antichains(file_a, as_json);
        if (fence->parsed()) return cmd_fence_check(number, as_json);
    } catch (const fspace::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
