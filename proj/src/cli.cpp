#include "flagdom/cli.hpp"

#include "flagdom/classify.hpp"
#include "flagdom/flag_oracle.hpp"
#include "flagdom/intersect.hpp"
#include "flagdom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace flagdom {

namespace {

using nlohmann::json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string form, perm, alpha, theorem = "all", format = "json", out;
    bool perfect = false;
    int max_n = 6;
};

// A table for CSV output; JSON is built separately.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_csv(const Table &t) {
    std::ostringstream o;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) o << (i ? "," : "") << csv_cell(cells[i]);
        o << "\n";
    };
    line(t.header);
    for (const auto &r : t.rows) line(r);
    return o.str();
}

json envelope(const RealForm &rf, const std::string &verb) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["verb"] = verb;
    j["form"] = rf.code();
    j["n"] = rf.n;
    if (rf.kind == Kind::SOpq || rf.kind == Kind::Sppq) {
        j["p"] = rf.p;
        j["q"] = rf.q;
    } else {
        j["p"] = nullptr;
        j["q"] = nullptr;
    }
    return j;
}

std::string tf(bool b) { return b ? "true" : "false"; }

SignedPerm perm_arg(const Options &o, const RealForm &rf) {
    if (o.perm.empty()) throw ValidationError("--perm is required for this verb");
    try {
        return parse_perm(o.perm, rf.n, rf.weyl);
    } catch (const ParseError &e) {
        throw ValidationError(e.what());
    }
}

void cap(const Options &o, const RealForm &rf, int hard) {
    if (rf.n > o.max_n) throw ValidationError("n = " + std::to_string(rf.n) + " exceeds --max-n " + std::to_string(o.max_n));
    if (rf.n > hard) throw ValidationError("n = " + std::to_string(rf.n) + " exceeds the hard limit " + std::to_string(hard) + " for this verb");
}

std::pair<std::string, std::string> flag_names(const RealForm &rf) {
    switch (rf.kind) {
    case Kind::SpR: return {"generous", "super_generous"};
    case Kind::SOStar: return {"dense", "super_dense"};
    case Kind::SOpq: return {"harmonic", "perfect_harmonic"};
    case Kind::Sppq: return {"major", "perfect_major"};
    }
    return {};
}

std::pair<json, Table> do_enumerate(const Options &o, const RealForm &rf) {
    std::vector<SignedPerm> elems;
    if (o.perfect) {
        elems = distinguished_elements(rf);
    } else {
        cap(o, rf, kEnumerateCap);
        elems = enumerate_group(rf.n, rf.weyl);
    }
    json j = envelope(rf, "enumerate");
    j["perfect"] = o.perfect;
    j["count"] = elems.size();
    json list = json::array();
    Table t{{"perm", "length_paper"}, {}};
    for (const auto &w : elems) {
        int l = length_paper(w);
        list.push_back({{"perm", w.str()}, {"length", l}});
        t.rows.push_back({w.str(), std::to_string(l)});
    }
    j["elements"] = list;
    return {j, t};
}

std::pair<json, Table> do_classify(const Options &o, const RealForm &rf) {
    SignedPerm w = perm_arg(o, rf);
    Classification c = classify(rf, w);
    auto [base, dist] = flag_names(rf);
    json j = envelope(rf, "classify");
    j["perm"] = w.str();
    j[base] = c.predicate;
    j[dist] = c.distinguished;
    j["length"] = c.length_paper;
    j["length_bfs"] = c.length_bfs ? json(*c.length_bfs) : json(nullptr);
    j["dim_dual_schubert"] = dim_dual_schubert(rf);
    Table t{{"perm", base, dist, "length", "length_bfs"},
            {{w.str(), tf(c.predicate), tf(c.distinguished), std::to_string(c.length_paper),
              c.length_bfs ? std::to_string(*c.length_bfs) : ""}}};
    return {j, t};
}

std::pair<json, Table> do_length(const Options &o, const RealForm &rf) {
    SignedPerm w = perm_arg(o, rf);
    json j = envelope(rf, "length");
    j["perm"] = w.str();
    int lp = length_paper(w);
    j["length_paper"] = lp;
    std::string lb;
    if (w.n() <= kBfsCap) {
        j["length_bfs"] = length_bfs(w);
        lb = std::to_string(length_bfs(w));
    } else {
        j["length_bfs"] = nullptr;
    }
    return {j, Table{{"perm", "length_paper", "length_bfs"}, {{w.str(), std::to_string(lp), lb}}}};
}

std::pair<json, Table> do_intersect(const Options &o, const RealForm &rf) {
    SignedPerm w = perm_arg(o, rf);
    cap(o, rf, kFixedFlagCap);
    IntersectionReport r;
    try {
        r = intersect(rf, w);
    } catch (const std::invalid_argument &e) {
        throw ValidationError(e.what());
    }
    if (!o.alpha.empty() && !enumerate_flag_domains(rf).count(o.alpha))
        throw ValidationError("'" + o.alpha + "' is not a flag domain of " + rf.name());
    json j = envelope(rf, "intersect");
    j["perm"] = w.str();
    j["method"] = r.method;
    json pts = json::array();
    Table t{{"label", "signature", "vectors"}, {}};
    for (const auto &p : r.points) {
        if (!o.alpha.empty() && p.signature != o.alpha) continue;
        json vecs = json::array();
        std::string joined;
        for (int k = 0; k < rf.n; ++k) {
            std::string v = vector_str(fixed_flag(rf, p.label).chain[k]);
            vecs.push_back(v);
            joined += (k ? " " : "") + v;
        }
        pts.push_back({{"label", p.label.str()}, {"signature", p.signature}, {"vectors", vecs}});
        t.rows.push_back({p.label.str(), p.signature, joined});
    }
    j["points"] = pts;
    if (o.alpha.empty()) {
        json dom = json::object();
        for (const auto &[sig, labels] : r.by_domain) {
            json l = json::array();
            for (const auto &s : labels) l.push_back(s.str());
            dom[sig] = l;
        }
        j["by_domain"] = dom;
        j["counts"] = {{"total_points", r.total_points()},
                       {"domains_touched", r.domains_touched()},
                       {"points_per_domain", r.points_per_domain()}};
    } else {
        j["alpha"] = o.alpha;
        j["counts"] = {{"total_points", pts.size()}};
    }
    return {j, t};
}

std::pair<json, Table> do_counts(const Options &o, const RealForm &rf) {
    json j = envelope(rf, "counts");
    j["perfect"] = o.perfect;
    Table t{{"form", "perfect", "count", "formula"}, {}};
    if (o.perfect) {
        auto elems = distinguished_elements(rf);
        j["count"] = elems.size();
        j["formula"] = perfect_count_formula(rf);
        t.rows.push_back({rf.code(), "true", std::to_string(elems.size()), std::to_string(perfect_count_formula(rf))});
    } else {
        cap(o, rf, kEnumerateCap);
        long c = 0;
        for (const auto &w : enumerate_group(rf.n, rf.weyl)) c += chapter_predicate(rf, w);
        j["count"] = c;
        j["chapter"] = chapter_name(rf);
        t.rows.push_back({rf.code(), "false", std::to_string(c), ""});
    }
    return {j, t};
}

std::pair<json, Table> do_dims(const Options &, const RealForm &rf) {
    json j = envelope(rf, "dims");
    int z = dim_flag_manifold(rf), c = dim_base_cycle(rf), d = dim_dual_schubert(rf);
    j["dim_flag_manifold"] = z;
    j["dim_base_cycle"] = c;
    j["dim_dual_schubert"] = d;
    j["identity_holds"] = c + d == z;
    return {j, Table{{"form", "dim_flag_manifold", "dim_base_cycle", "dim_dual_schubert"},
                     {{rf.code(), std::to_string(z), std::to_string(c), std::to_string(d)}}}};
}

json report_json(const VerificationReport &r) {
    json params = {{"form", r.rf.code()}, {"n", r.rf.n}};
    if (r.rf.kind == Kind::SOpq || r.rf.kind == Kind::Sppq) {
        params["p"] = r.rf.p;
        params["q"] = r.rf.q;
    }
    return {{"theorem", r.theorem},
            {"params", params},
            {"pass", r.pass},
            {"checked", r.checked},
            {"counterexamples", r.counterexamples}};
}

std::pair<json, Table> do_verify(const Options &o, const RealForm &rf, bool &failed) {
    cap(o, rf, kFixedFlagCap);
    std::vector<std::string> ids;
    if (o.theorem == "all") {
        ids = theorems_for(rf);
    } else {
        if (!known_theorem(o.theorem)) throw ValidationError("unknown theorem '" + o.theorem + "'");
        ids = {o.theorem};
    }
    json j = envelope(rf, "verify");
    json reports = json::array();
    Table t{{"theorem", "form", "pass", "checked", "counterexamples"}, {}};
    bool all_pass = true;
    for (const auto &id : ids) {
        VerificationReport r;
        try {
            r = verify(rf, id);
        } catch (const std::invalid_argument &e) {
            throw ValidationError(e.what());
        }
        all_pass = all_pass && r.pass;
        reports.push_back(report_json(r));
        t.rows.push_back({r.theorem, rf.code(), tf(r.pass), std::to_string(r.checked), std::to_string(r.counterexamples.size())});
    }
    j["reports"] = reports;
    j["pass"] = all_pass;
    failed = !all_pass;
    return {j, t};
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Flag domains, Schubert cells and cycle intersections for Sp(2n,R), SO*(2n), SO(p,q), Sp(p,q)"};
    app.require_subcommand(1, 1);
    Options o;
    const std::vector<std::string> verbs = {"enumerate", "classify", "length", "intersect", "counts", "dims", "verify"};
    const std::map<std::string, std::string> blurbs = {
        {"enumerate", "list group elements, or the super/perfect ones with --perfect"},
        {"classify", "chapter predicates and lengths of --perm"},
        {"length", "length of --perm by the box algorithm and by BFS"},
        {"intersect", "intersection points of the Schubert variety of --perm with base cycles"},
        {"counts", "number of predicate elements, or perfect ones with --perfect"},
        {"dims", "dimensions of Z, the base cycle and the dual Schubert varieties"},
        {"verify", "run an exhaustive check (--theorem, default all)"},
    };
    for (const auto &v : verbs) {
        auto *sub = app.add_subcommand(v, blurbs.at(v));
        sub->add_option("--form", o.form, "sp2n-r:<n>, so-star:<n>, so-pq:<p>,<q> or sp-pq:<p>,<q>")->required();
        sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out, "write to FILE instead of standard output");
        sub->add_option("--max-n", o.max_n, "cap for exhaustive verbs")->check(CLI::PositiveNumber);
        if (v == "classify" || v == "length" || v == "intersect") sub->add_option("--perm", o.perm, "e.g. -3,5,-1,4,2");
        if (v == "intersect") sub->add_option("--alpha", o.alpha, "flag domain signature, e.g. +-+");
        if (v == "enumerate" || v == "counts") sub->add_flag("--perfect", o.perfect);
        if (v == "verify") sub->add_option("--theorem", o.theorem, "theorem id or all");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    json j;
    Table t;
    bool failed = false;
    try {
        RealForm rf = parse_form(o.form);
        if (verb == "enumerate") std::tie(j, t) = do_enumerate(o, rf);
        else if (verb == "classify") std::tie(j, t) = do_classify(o, rf);
        else if (verb == "length") std::tie(j, t) = do_length(o, rf);
        else if (verb == "intersect") std::tie(j, t) = do_intersect(o, rf);
        else if (verb == "counts") std::tie(j, t) = do_counts(o, rf);
        else if (verb == "dims") std::tie(j, t) = do_dims(o, rf);
        else std::tie(j, t) = do_verify(o, rf, failed);
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = o.format == "csv" ? render_csv(t) : j.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return 1;
        }
        f << text;
    }
    return failed ? 2 : 0;
}

} // namespace flagdom
