// Command-line front end: every library operation as a subcommand, with table
// and JSON output plus the batch verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hess/bwb.hpp"
#include "hess/envelope.hpp"
#include "hess/filtered.hpp"
#include "hess/symcoh.hpp"
#include "hess/typea.hpp"
#include "hess/verify.hpp"

namespace {

using namespace hess;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitResource = 70;

struct Ctx {
    bool json = false;
    std::string type_family;
    int rank = 0;
    long long cap = kDefaultCap;
};

long long env_cap() {
    if (const char* s = std::getenv("HESSDEFORM_CAP")) {
        try {
            return std::stoll(s);
        } catch (...) {
            throw RejectedInput("HESSDEFORM_CAP is not an integer");
        }
    }
    return kDefaultCap;
}

RootSystem make_rs(const Ctx& c) {
    if (c.type_family.size() != 1) throw RejectedInput("--type expects one of A..G");
    return RootSystem(CartanType::make(c.type_family[0], c.rank));
}

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (...) {
            throw RejectedInput("malformed integer list '" + s + "'");
        }
    }
    if (out.empty()) throw RejectedInput("empty integer list");
    return out;
}

std::vector<PValue> parse_eigs(const std::string& s) {
    std::vector<PValue> out;
    auto push = [&](const std::string& item) {
        if (item == "inf" || item == "oo")
            out.push_back(PValue::infinity());
        else
            out.push_back(PValue::of(parse_rat(item)));
    };
    if (!s.empty() && s.front() == '[') {  // JSON list form
        OJson j;
        try {
            j = OJson::parse(s);
        } catch (...) {
            throw RejectedInput("malformed eigenvalue JSON list");
        }
        if (!j.is_array()) throw RejectedInput("eigenvalue JSON must be an array");
        for (const auto& e : j) {
            if (e.is_string())
                push(e.get<std::string>());
            else if (e.is_number_integer())
                out.push_back(PValue::of(Rat(e.get<long long>())));
            else
                throw RejectedInput("eigenvalues must be integers or rational strings");
        }
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) push(item);
    }
    if (out.empty()) throw RejectedInput("empty eigenvalue list");
    return out;
}

MatQ parse_matrix(const std::string& s) {
    OJson j;
    try {
        j = OJson::parse(s);
    } catch (...) {
        throw RejectedInput("malformed matrix JSON");
    }
    if (!j.is_array() || j.empty()) throw RejectedInput("matrix JSON must be an array of rows");
    int rows = (int)j.size();
    int cols = -1;
    for (const auto& row : j) {
        if (!row.is_array()) throw RejectedInput("matrix rows must be arrays");
        if (cols < 0) cols = (int)row.size();
        if ((int)row.size() != cols) throw RejectedInput("ragged matrix rows");
    }
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_string())
                m.at(i, k) = parse_rat(e.get<std::string>());
            else if (e.is_number_integer())
                m.at(i, k) = Rat(e.get<long long>());
            else
                throw RejectedInput("matrix entries must be integers or rational strings");
        }
    return m;
}

std::string cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == (int)i) {
            seen[i] = true;
            continue;
        }
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

OJson perm_json(const Permutation& p) {
    OJson a = OJson::array();
    for (int x : p) a.push_back(x + 1);
    return a;
}

OJson weight_json(const WeightVector& w) {
    OJson a = OJson::array();
    for (auto x : w.c) a.push_back(x);
    return a;
}

OJson rootvec_json(const RootVector& v) {
    OJson a = OJson::array();
    for (auto x : v.c) a.push_back(x);
    return a;
}

int emit(const Envelope& e, bool json, const std::string& human) {
    if (json)
        std::cout << render_json(envelope_json(e));
    else
        std::cout << human;
    return exit_code_for_status(e.status);
}

std::string profile_human(const CohomologyProfile& p) {
    std::ostringstream os;
    if (p.exact) {
        os << "exact cohomology (" << p.rule << "):";
        if (p.dims.empty()) os << " all degrees vanish";
        for (const auto& [d, v] : p.dims) os << " h^" << d << " = " << v;
        os << "\n";
    } else {
        os << "bounds only (" << p.rule << "):";
        for (const auto& [d, v] : p.bounds) os << " h^" << d << " <= " << v;
        os << "\n";
    }
    return os.str();
}

OJson profile_json(const CohomologyProfile& p) {
    OJson j = OJson::object();
    j["exact"] = p.exact;
    j["rule"] = p.rule;
    OJson dims = OJson::object();
    for (const auto& [d, v] : p.dims) dims[std::to_string(d)] = json_int(v);
    j["dims"] = dims;
    if (!p.exact) {
        OJson bounds = OJson::object();
        for (const auto& [d, v] : p.bounds) bounds[std::to_string(d)] = json_int(v);
        j["bounds"] = bounds;
    }
    return j;
}

OJson bott_json(const BottResult& b) {
    OJson j = OJson::object();
    j["singular"] = b.singular;
    if (!b.singular) {
        j["degree"] = b.degree;
        j["dominant_weight"] = weight_json(b.dominant_weight);
        j["dimension"] = json_int(b.dimension);
    }
    return j;
}

OJson chi_report_json(const ChiReport& rep) {
    OJson j = OJson::object();
    j["claim"] = rep.claim;
    j["lhs_chi"] = json_int(rep.lhs);
    j["rhs_chi"] = json_int(rep.rhs);
    j["status"] = rep.asserted ? (rep.holds ? "ok" : "theorem-violation")
                               : (rep.holds ? "conjecture-holds" : "conjecture-differs");
    j["detail"] = rep.detail;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and machine verification of cohomology, deformation and\n"
                 "moduli data of codimension-one regular semisimple Hessenberg varieties"};
    app.require_subcommand(1);

    Ctx ctx;
    ctx.cap = kDefaultCap;

    std::string weight_s, eweight_s, eigs_s, eigs2_s, flavor = "x", beta_s, mat_s, a_s, b_s;
    int n_arg = 4;
    long long box = 3, nn = 1, trials = 500;
    int kmax = 10, max_rank = 8, jobs = 1, shift = 4;
    bool parabolic = false;

    auto add_type = [&](CLI::App* c) {
        c->add_option("--type", ctx.type_family, "family A..G")->required();
        c->add_option("--rank", ctx.rank, "rank")->required();
        c->add_flag("--json", ctx.json, "emit a JSON envelope");
    };

    auto* rootsys_c = app.add_subcommand("rootsys", "root system data");
    auto* info_c = rootsys_c->add_subcommand("info", "Cartan matrix and distinguished roots");
    add_type(info_c);

    auto* bwb_c = app.add_subcommand("bwb", "line bundle cohomology");
    auto* line_c = bwb_c->add_subcommand("line", "cohomology of one line bundle");
    add_type(line_c);
    line_c->add_option("--weight", weight_s, "fundamental coordinates, comma separated");
    line_c->add_option("--type-a-eweight", eweight_s, "integer n-tuple for type A, translated");
    auto* dim_c = bwb_c->add_subcommand("dim", "Weyl dimension of a dominant weight");
    add_type(dim_c);
    dim_c->add_option("--weight", weight_s, "fundamental coordinates, comma separated");
    dim_c->add_option("--type-a-eweight", eweight_s, "integer n-tuple for type A, translated");

    auto* tables_c = app.add_subcommand("tables", "regular weight tables");
    auto* treg_c = tables_c->add_subcommand("regular", "both regular-weight tables");
    add_type(treg_c);

    auto* hess_c = app.add_subcommand("hess", "Hessenberg deformation pipeline");
    auto* dx_c = hess_c->add_subcommand("deform-x", "deformation table on the full flag side");
    add_type(dx_c);
    auto* dy_c = hess_c->add_subcommand("deform-y", "deformation table on the parabolic side");
    add_type(dy_c);
    auto* van_c = hess_c->add_subcommand("vanishing", "twisted tangent cohomology profile");
    add_type(van_c);
    van_c->add_flag("--parabolic", parabolic, "use the theta parabolic instead of the Borel");

    auto* ta_c = app.add_subcommand("typea", "type A moduli operations");
    auto* isox_c = ta_c->add_subcommand("isox", "affine equivalence of eigenvalue configurations");
    isox_c->add_option("--eigs", eigs_s)->required();
    isox_c->add_option("--eigs2", eigs2_s)->required();
    isox_c->add_flag("--json", ctx.json);
    auto* isoy_c = ta_c->add_subcommand("isoy", "Moebius equivalence of configurations");
    isoy_c->add_option("--eigs", eigs_s)->required();
    isoy_c->add_option("--eigs2", eigs2_s)->required();
    isoy_c->add_flag("--json", ctx.json);
    auto* aut_c = ta_c->add_subcommand("aut", "automorphism group report");
    aut_c->add_option("--eigs", eigs_s)->required();
    aut_c->add_option("--flavor", flavor, "x or y");
    aut_c->add_flag("--json", ctx.json);
    auto* canon_c = ta_c->add_subcommand("canon", "canonical moduli point");
    canon_c->add_option("--eigs", eigs_s)->required();
    canon_c->add_option("--flavor", flavor, "x or y");
    canon_c->add_flag("--json", ctx.json);
    auto* search_c = ta_c->add_subcommand("charsearch", "cohomological line bundle search");
    search_c->add_option("--n", n_arg)->required();
    search_c->add_option("--box", box);
    search_c->add_option("--kmax", kmax);
    search_c->add_flag("--json", ctx.json);
    auto* symm_c = ta_c->add_subcommand("symmetrize", "symmetrizing bilinear form of a matrix");
    symm_c->add_option("--matrix", mat_s)->required();
    symm_c->add_flag("--json", ctx.json);
    auto* pencil_c = ta_c->add_subcommand("pencil", "invariant binary form of a matrix pencil");
    pencil_c->add_option("--a", a_s)->required();
    pencil_c->add_option("--b", b_s)->required();
    pencil_c->add_flag("--json", ctx.json);

    auto* sc_c = app.add_subcommand("symcoh", "symmetric power chi identities");
    CLI::App* sc_subs[5];
    const char* sc_names[5] = {"short", "long", "para", "conjecture", "demazure"};
    for (int i = 0; i < 5; ++i) {
        sc_subs[i] = sc_c->add_subcommand(sc_names[i]);
        add_type(sc_subs[i]);
        sc_subs[i]->add_option("--n", nn, "symmetric power");
        sc_subs[i]->add_option("--cap", ctx.cap, "combinatorial cap");
    }
    sc_subs[0]->add_option("--beta", beta_s, "root in simple-root coordinates");
    sc_subs[1]->add_option("--beta", beta_s, "root in simple-root coordinates");
    sc_subs[3]->add_option("--shift", shift, "4, or 2 for the type C variant");
    sc_subs[4]->add_option("--trials", trials, "random instances per run");

    std::string out_path;
    auto* verify_c = app.add_subcommand("verify", "batch verification");
    auto* all_c = verify_c->add_subcommand("all", "run the full acceptance battery");
    all_c->add_option("--max-rank", max_rank);
    all_c->add_option("--jobs", jobs, "fan per-type work out across threads");
    all_c->add_option("--out", out_path, "also write the JSON envelope to a file");
    all_c->add_flag("--json", ctx.json);

    try {
        app.parse(argc, argv);
        bool cap_given = false;
        for (auto* sub : sc_subs) cap_given = cap_given || sub->count("--cap") > 0;
        if (!cap_given) ctx.cap = env_cap();  // --cap beats the environment

        if (info_c->parsed()) {
            RootSystem rs = make_rs(ctx);
            const auto& d = rs.distinguished();
            Envelope e;
            e.command = "rootsys info";
            e.inputs["type"] = rs.type().name();
            e.result["rank"] = rs.rank();
            e.result["num_positive_roots"] = rs.num_positive();
            e.result["dim_g"] = rs.dim_g();
            e.result["coxeter_number"] = rs.coxeter_number();
            OJson cm = OJson::array();
            for (int i = 0; i < rs.rank(); ++i) {
                OJson row = OJson::array();
                for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
                cm.push_back(row);
            }
            e.result["cartan_matrix"] = cm;
            e.result["theta"] = rootvec_json(rs.theta());
            if (d.theta_plus) {
                e.result["theta_plus"] = rootvec_json(*d.theta_plus);
                e.result["k"] = *d.k_index;
                e.result["theta_plus_plus"] = rootvec_json(*d.theta_plus_plus);
            }
            OJson d0 = OJson::array(), bd = OJson::array();
            for (int i : d.delta0) d0.push_back(i);
            for (int i : d.boundary) bd.push_back(i);
            e.result["delta0"] = d0;
            e.result["boundary"] = bd;
            std::ostringstream os;
            os << rs.type().name() << ": |Phi+| = " << rs.num_positive()
               << ", dim g = " << rs.dim_g() << ", Coxeter number " << rs.coxeter_number() << "\n";
            os << "theta = " << coords_str(rs.theta().c) << "\n";
            if (d.theta_plus)
                os << "theta+ = " << coords_str(d.theta_plus->c) << ", k = " << *d.k_index
                   << ", theta++ = " << coords_str(d.theta_plus_plus->c) << "\n";
            os << "delta0 = {";
            for (int i : d.delta0) os << " " << i;
            os << " }, boundary = {";
            for (int i : d.boundary) os << " " << i;
            os << " }\n";
            return emit(e, ctx.json, os.str());
        }

        if (line_c->parsed() || dim_c->parsed()) {
            RootSystem rs = make_rs(ctx);
            WeightVector w;
            if (!eweight_s.empty()) {
                if (rs.type().family != 'A')
                    throw RejectedInput("--type-a-eweight needs type A");
                auto tuple = parse_ints(eweight_s);
                if ((int)tuple.size() != rs.rank() + 1)
                    throw RejectedInput("e-weight tuple must have length rank+1");
                w.c.resize(rs.rank());
                for (int i = 0; i < rs.rank(); ++i) w.c[i] = tuple[i] - tuple[i + 1];
            } else if (!weight_s.empty()) {
                w.c = parse_ints(weight_s);
                if ((int)w.c.size() != rs.rank())
                    throw RejectedInput("weight must have rank coordinates");
            } else {
                throw RejectedInput("provide --weight or --type-a-eweight");
            }
            Envelope e;
            e.inputs["type"] = rs.type().name();
            e.inputs["weight"] = weight_json(w);
            std::ostringstream os;
            if (line_c->parsed()) {
                e.command = "bwb line";
                e.citations = {"borel-weil-bott"};
                BottResult b = bott_line(rs, w);
                e.result = bott_json(b);
                if (b.singular)
                    os << "singular: all cohomology vanishes\n";
                else
                    os << "degree " << b.degree << ", dominant weight "
                       << coords_str(b.dominant_weight.c) << ", dimension " << b.dimension << "\n";
            } else {
                e.command = "bwb dim";
                e.citations = {"weyl-dimension-formula"};
                Int d = weyl_dim(rs, w);
                e.result["dimension"] = json_int(d);
                os << "dim = " << d << "\n";
            }
            return emit(e, ctx.json, os.str());
        }

        if (treg_c->parsed()) {
            RootSystem rs = make_rs(ctx);
            Envelope e;
            e.command = "tables regular";
            e.inputs["type"] = rs.type().name();
            e.citations = {"regular-root-shifts", "regular-root-shifts-twisted"};
            std::ostringstream os;
            auto render_rows = [&](const std::vector<RegularRow>& rows, const char* title) {
                OJson arr = OJson::array();
                os << title << "\n";
                os << "  alpha            ell  dominant        case  ht_P\n";
                for (const auto& row : rows) {
                    OJson j = OJson::object();
                    j["alpha"] = rootvec_json(row.alpha);
                    j["ell"] = row.degree;
                    j["dominant"] = weight_json(row.dominant);
                    j["case"] = row.case_tag;
                    j["ht_p"] = row.ht_p;
                    arr.push_back(j);
                    std::string alpha_str = row.alpha == rs.theta() ? "theta" :
                        (row.alpha == -1ll * rs.theta() ? "-theta" : coords_str(row.alpha.c));
                    os << "  " << alpha_str;
                    for (size_t pad = alpha_str.size(); pad < 17; ++pad) os << ' ';
                    os << row.degree << "    " << coords_str(row.dominant.c) << "   ("
                       << row.case_tag << ")   " << row.ht_p << "\n";
                }
                return arr;
            };
            e.result["regular"] = render_rows(enumerate_regular(rs), "alpha with alpha+rho regular:");
            if (rs.rank() >= 2)
                e.result["regular_shift"] =
                    render_rows(enumerate_regular_shift(rs), "alpha with alpha-theta+rho regular:");
            return emit(e, ctx.json, os.str());
        }

        if (dx_c->parsed() || dy_c->parsed()) {
            RootSystem rs = make_rs(ctx);
            bool xside = dx_c->parsed();
            DeformationTable t = xside ? deformation_table_X(rs) : deformation_table_Y(rs);
            Envelope e;
            e.command = xside ? "hess deform-x" : "hess deform-y";
            e.inputs["type"] = rs.type().name();
            e.citations = {xside ? "deformation-dimensions-full-flag"
                                 : "deformation-dimensions-parabolic",
                           "kodaira-spencer-surjective"};
            e.result["h0"] = json_int(t.h0);
            e.result["h1"] = json_int(t.h1);
            e.result["higher_vanish"] = t.higher_vanish;
            e.result["normal_h0"] = json_int(t.normal_h0);
            e.result["kodaira_spencer_surjective"] = true;
            e.result["theorem_range"] = t.theorem_range;
            std::ostringstream os;
            os << "h^0(T) = " << t.h0 << ", h^1(T) = " << t.h1
               << ", higher cohomology vanishes; h^0(normal) = " << t.normal_h0 << "\n";
            if (!t.theorem_range)
                os << "note: outside the range of the closed-form theorem; pipeline value shown\n";
            return emit(e, ctx.json, os.str());
        }

        if (van_c->parsed()) {
            RootSystem rs = make_rs(ctx);
            auto pair = build_twisted_pair(rs, parabolic ? BundleCase::Parabolic : BundleCase::Borel);
            CohomologyProfile p = resolve_cohomology(rs, pair);
            Envelope e;
            e.command = "hess vanishing";
            e.inputs["type"] = rs.type().name();
            e.inputs["parabolic"] = parabolic;
            e.citations = {parabolic ? "vanishing-theorem-parabolic" : "vanishing-theorem-borel"};
            e.result = profile_json(p);
            if (!p.exact) e.status = "unresolved";
            return emit(e, ctx.json, profile_human(p));
        }

        if (isox_c->parsed() || isoy_c->parsed()) {
            bool xflavor = isox_c->parsed();
            EigenConfig c1 = EigenConfig::make(parse_eigs(eigs_s), !xflavor);
            EigenConfig c2 = EigenConfig::make(parse_eigs(eigs2_s), !xflavor);
            Envelope e;
            e.command = xflavor ? "typea isox" : "typea isoy";
            e.inputs["eigs"] = c1.str();
            e.inputs["eigs2"] = c2.str();
            e.citations = {xflavor ? "isomorphism-criterion-affine" : "isomorphism-criterion-mobius"};
            std::ostringstream os;
            if (xflavor) {
                auto w = affine_equivalent(c1, c2);
                e.result["equivalent"] = w.has_value();
                if (w) {
                    e.result["witness"] = OJson{{"a", json_rat(w->first.a)}, {"b", json_rat(w->first.b)}};
                    e.result["permutation"] = perm_json(w->second);
                    os << "equivalent: a = " << rat_str(w->first.a) << ", b = " << rat_str(w->first.b)
                       << ", permutation " << cycles(w->second) << "\n";
                } else {
                    os << "not equivalent\n";
                }
            } else {
                auto w = mobius_equivalent(c1, c2);
                e.result["equivalent"] = w.has_value();
                if (w) {
                    OJson m = OJson::array();
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) m.push_back(json_rat(w->first.m[i][j]));
                    e.result["witness"] = m;
                    e.result["permutation"] = perm_json(w->second);
                    os << "equivalent: " << w->first.str() << ", permutation " << cycles(w->second)
                       << "\n";
                } else {
                    os << "not equivalent\n";
                }
            }
            return emit(e, ctx.json, os.str());
        }

        if (aut_c->parsed()) {
            if (flavor != "x" && flavor != "y") throw RejectedInput("--flavor must be x or y");
            EigenConfig c = EigenConfig::make(parse_eigs(eigs_s), flavor == "y");
            AutReport rep = aut_report(c, flavor[0]);
            Envelope e;
            e.command = "typea aut";
            e.inputs["eigs"] = c.str();
            e.inputs["flavor"] = flavor;
            e.citations = {"automorphism-group-structure", "stabilizer-classification"};
            e.result["identity_component"] = "torus of dimension " + std::to_string(rep.torus_dim);
            e.result["pi0_order"] = rep.pi0_order;
            e.result["stabilizer_order"] = rep.stabilizer.order;
            e.result["stabilizer_class"] = rep.stabilizer.class_name();
            OJson gens = OJson::array();
            for (const auto& g : rep.stabilizer.generators) gens.push_back(cycles(g));
            e.result["stabilizer_generators"] = gens;
            e.result["theorem_range"] = rep.theorem_range;
            std::ostringstream os;
            os << "identity component: torus of dimension " << rep.torus_dim << "\n"
               << "component group order " << rep.pi0_order << " = 2 * |"
               << rep.stabilizer.class_name() << "|\n";
            if (!rep.theorem_range) os << "note: n < 4 is outside the theorem range\n";
            return emit(e, ctx.json, os.str());
        }

        if (canon_c->parsed()) {
            if (flavor != "x" && flavor != "y") throw RejectedInput("--flavor must be x or y");
            EigenConfig c = EigenConfig::make(parse_eigs(eigs_s), flavor == "y");
            EigenConfig k = canonical_point(c, flavor[0]);
            Envelope e;
            e.command = "typea canon";
            e.inputs["eigs"] = c.str();
            e.inputs["flavor"] = flavor;
            OJson pts = OJson::array();
            for (const auto& p : k.pts) pts.push_back(p.str());
            e.result["canonical"] = pts;
            return emit(e, ctx.json, k.str() + "\n");
        }

        if (search_c->parsed()) {
            auto found = characterize_search(n_arg, box, kmax);
            Envelope e;
            e.command = "typea charsearch";
            e.inputs["n"] = n_arg;
            e.inputs["box"] = box;
            e.inputs["kmax"] = kmax;
            e.citations = {"line-bundle-characterization"};
            OJson arr = OJson::array();
            std::ostringstream os;
            for (const auto& lam : found) {
                OJson one = OJson::array();
                os << "(";
                for (size_t i = 0; i < lam.size(); ++i) {
                    one.push_back(lam[i]);
                    os << (i ? "," : "") << lam[i];
                }
                arr.push_back(one);
                os << ")\n";
            }
            e.result["weights"] = arr;
            return emit(e, ctx.json, os.str());
        }

        if (symm_c->parsed()) {
            MatQ s = parse_matrix(mat_s);
            MatQ q = symmetrize(s);
            Envelope e;
            e.command = "typea symmetrize";
            e.inputs["matrix"] = mat_s;
            e.citations = {"symmetrization-of-an-operator"};
            OJson rows = OJson::array();
            std::ostringstream os;
            for (int i = 0; i < q.rows(); ++i) {
                OJson row = OJson::array();
                for (int j = 0; j < q.cols(); ++j) {
                    row.push_back(rat_str(q.at(i, j)));
                    os << rat_str(q.at(i, j)) << (j + 1 < q.cols() ? " " : "\n");
                }
                rows.push_back(row);
            }
            e.result["q"] = rows;
            return emit(e, ctx.json, os.str());
        }

        if (pencil_c->parsed()) {
            MatQ A = parse_matrix(a_s), B = parse_matrix(b_s);
            auto coef = pencil_charpoly(A, B);
            Envelope e;
            e.command = "typea pencil";
            e.inputs["a"] = a_s;
            e.inputs["b"] = b_s;
            e.citations = {"pencil-determinant-invariant"};
            OJson arr = OJson::array();
            std::ostringstream os;
            for (size_t i = 0; i < coef.size(); ++i) {
                arr.push_back(json_int(coef[i]));
                os << (i ? " " : "") << coef[i];
            }
            os << "\n";
            e.result["coefficients"] = arr;
            return emit(e, ctx.json, os.str());
        }

        for (int sci = 0; sci < 5; ++sci) {
            if (!sc_subs[sci]->parsed()) continue;
            RootSystem rs = make_rs(ctx);
            Envelope e;
            e.command = std::string("symcoh ") + sc_names[sci];
            e.inputs["type"] = rs.type().name();
            e.inputs["n"] = nn;
            std::ostringstream os;
            OJson arr = OJson::array();
            auto add_report = [&](const ChiReport& rep) {
                arr.push_back(chi_report_json(rep));
                os << rep.claim << " [" << rep.detail << "]: lhs " << rep.lhs << ", rhs " << rep.rhs
                   << (rep.holds ? " (equal)\n" : " (DIFFER)\n");
                if (rep.asserted && !rep.holds) e.status = "theorem-violation";
                if (!rep.asserted && e.status == "ok") e.status = "conjecture-report";
            };
            if (sci == 0 || sci == 1) {
                e.citations = {sci == 0 ? "sym-power-cohomology-short" : "sym-power-cohomology-long"};
                std::vector<RootVector> betas;
                if (!beta_s.empty()) {
                    RootVector b{parse_ints(beta_s)};
                    if ((int)b.c.size() != rs.rank()) throw RejectedInput("beta has wrong length");
                    betas.push_back(b);
                } else {
                    for (const auto& a : rs.positive_roots())
                        if (sci == 0 ? rs.is_short(a) : rs.is_long(a)) betas.push_back(a);
                }
                for (const auto& b : betas)
                    add_report(sci == 0 ? check_short(rs, b, nn, ctx.cap)
                                        : check_long(rs, b, nn, ctx.cap));
            } else if (sci == 2) {
                e.citations = {"sym-power-cohomology-parabolic-type-a"};
                add_report(check_parabolic_A(rs, nn, ctx.cap));
            } else if (sci == 3) {
                e.citations = {"sym-power-shift-conjecture"};
                add_report(check_conjecture(rs, nn, shift, ctx.cap));
            } else {
                e.citations = {"reflection-rules-for-chi"};
                DemazureStats st = demazure_chi_rules(rs, (int)trials, 0xD533Du, ctx.cap);
                OJson j = OJson::object();
                j["trials"] = st.trials;
                j["violations"] = st.violations;
                arr.push_back(j);
                os << st.trials << " trials, " << st.violations << " violations\n";
                if (st.violations != 0) e.status = "theorem-violation";
            }
            e.result["reports"] = arr;
            return emit(e, ctx.json, os.str());
        }

        if (all_c->parsed()) {
            auto results = run_verification(max_rank, jobs);
            Envelope e;
            e.command = "verify all";
            e.inputs["max_rank"] = max_rank;
            bool all_pass = true;
            OJson arr = OJson::array();
            std::ostringstream os;
            for (const auto& cr : results) {
                all_pass = all_pass && cr.pass;
                OJson j = OJson::object();
                j["criterion"] = cr.id;
                j["name"] = cr.name;
                j["pass"] = cr.pass;
                j["detail"] = cr.detail;
                OJson fj = OJson::array(), rj = OJson::array();
                for (const auto& f : cr.failures) fj.push_back(f);
                for (const auto& rep : cr.reports) rj.push_back(rep);
                j["failures"] = fj;
                j["reports"] = rj;
                arr.push_back(j);
                os << "criterion " << cr.id << " [" << (cr.pass ? "PASS" : "FAIL") << "] "
                   << cr.name << " — " << cr.detail << "\n";
                for (const auto& f : cr.failures) os << "    failure: " << f << "\n";
                for (const auto& rep : cr.reports) os << "    report: " << rep << "\n";
            }
            e.result["criteria"] = arr;
            e.status = all_pass ? "ok" : "theorem-violation";
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw RejectedInput("cannot open --out file " + out_path);
                f << render_json(envelope_json(e));
            }
            return emit(e, ctx.json, os.str());
        }

        std::cerr << "no subcommand executed\n";
        return kExitUsage;
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help
        std::cerr << err.what() << "\n";
        return kExitUsage;
    } catch (const RejectedInput& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedInput& err) {
        std::cerr << "unsupported input: " << err.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit& err) {
        std::cerr << "resource limit: " << err.what() << "\n";
        return kExitResource;
    } catch (const InternalContradiction& err) {
        std::cerr << "theorem violation: " << err.what() << "\n";
        return kExitViolation;
    } catch (const Unresolved& err) {
        std::cerr << "unresolved: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
