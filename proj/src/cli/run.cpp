#include "hg/cli/run.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hg/classify/classify.hpp"
#include "hg/core/expr.hpp"
#include "hg/core/parallel.hpp"
#include "hg/families/families.hpp"
#include "hg/galois/galois.hpp"
#include "hg/homology/homology.hpp"
#include "hg/hopf/checks.hpp"
#include "hg/transport/transport.hpp"
#include "hg/weakhopf/weakhopf.hpp"

namespace hg {

using nlohmann::json;

int exit_code_for(ErrorKind k) { return exit_code::kErrorBase + static_cast<int>(k); }

namespace {

const std::vector<std::pair<std::string, std::string>>& registry() {
    static const std::vector<std::pair<std::string, std::string>> r{
        {"cogroupoid", "structure maps and cogroupoid diagrams of a family"},
        {"galois", "bijectivity of the left and right canonical maps on every nonzero pair"},
        {"classify", "congruence/similarity partitions of a corpus and isomorphism witnesses"},
        {"transport", "cotensor transport of the fundamental comodule and the cleftness verdict"},
        {"homology", "Koszul complex of A_{alpha,t}: d o d = 0 and exactness by filtration level"},
        {"weakhopf", "weak Hopf algebra assembled from all objects of a family"},
        {"fusion", "fusion ring laws of the simple comodules of H(F)"},
        {"invariants", "coinvariant dimensions of k_p[x] over O_p(S_2n) against p = 1"},
    };
    return r;
}

// ---- input decoding ----

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    raise(ErrorKind::Parse, "expected an expression string, got " + v.dump());
}

const json& field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) raise(ErrorKind::Parse, "missing key '" + key + "'");
    return obj.at(key);
}

std::vector<std::vector<std::string>> string_rows(const json& m) {
    if (!m.is_array()) raise(ErrorKind::Parse, "matrix must be an array of rows");
    std::vector<std::vector<std::string>> rows;
    for (auto& r : m) {
        if (!r.is_array()) raise(ErrorKind::Parse, "matrix row must be an array");
        rows.emplace_back();
        for (auto& e : r) rows.back().push_back(scalar_text(e));
    }
    return rows;
}

ExactMatrix parse_matrix(const json& m) { return ExactMatrix::parse(string_rows(m)); }

NamedMatrix parse_named(const json& o) {
    return {field(o, "name").get<std::string>(), parse_matrix(field(o, "matrix"))};
}

std::vector<NamedMatrix> parse_named_list(const json& arr) {
    if (!arr.is_array()) raise(ErrorKind::Parse, "expected an array of named matrices");
    std::vector<NamedMatrix> out;
    for (auto& o : arr) out.push_back(parse_named(o));
    return out;
}

ASTMatrix parse_ast(const json& o) {
    std::string name = field(o, "name").get<std::string>();
    if (o.contains("symbolic")) return symbolic_ast(o.at("symbolic").get<std::size_t>(), name);
    ExactMatrix m = parse_matrix(field(o, "p"));
    ASTMatrix p{name, {}};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        p.p.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j) p.p.back().push_back(m(i, j));
    }
    return p;
}

struct FamilyInput {
    std::string type;
    CogroupoidData C;
    std::vector<unsigned> orders;  // GroupCocycle only
};

FamilyInput parse_family(const json& f) {
    FamilyInput out;
    out.type = field(f, "type").get<std::string>();
    const json& objs = field(f, "objects");
    if (!objs.is_array() || objs.empty()) raise(ErrorKind::Parse, "family needs a nonempty object list");
    if (out.type == "B" || out.type == "H") {
        auto named = parse_named_list(objs);
        out.C = out.type == "B" ? make_B(named) : make_H(named);
    } else if (out.type == "GLpq" || out.type == "S2n") {
        std::vector<ASTMatrix> ps;
        for (auto& o : objs) ps.push_back(parse_ast(o));
        out.C = out.type == "GLpq" ? make_GLpq(ps) : make_S2n(ps);
    } else if (out.type == "GroupCocycle") {
        out.orders = field(f, "orders").get<std::vector<unsigned>>();
        FiniteGroup G = cyclic_product(out.orders);
        std::vector<GroupCocycle> cs;
        for (auto& o : objs) {
            std::string name = field(o, "name").get<std::string>();
            if (o.value("trivial", false)) {
                GroupCocycle t = trivial_cocycle(G);
                t.name = name;
                cs.push_back(std::move(t));
                continue;
            }
            ExactMatrix b = parse_matrix(field(o, "bilinear"));
            ScalarTable tab;
            for (std::size_t i = 0; i < b.rows(); ++i) {
                tab.emplace_back();
                for (std::size_t j = 0; j < b.cols(); ++j) tab.back().push_back(b(i, j));
            }
            cs.push_back(bilinear_cocycle(G, out.orders, tab, name));
        }
        out.C = make_group_cocycle_cogroupoid(G, cs);
    } else {
        raise(ErrorKind::Parse, "unknown family type '" + out.type + "'");
    }
    return out;
}

void describe_family(Certificate& c, const CogroupoidData& C) {
    c.data["family"] = C.family;
    c.data["objects"] = C.objects;
    json homs = json::array();
    for (std::size_t x = 0; x < C.size(); ++x)
        for (std::size_t y = 0; y < C.size(); ++y) {
            json h;
            h["pair"] = C.pair_name(x, y);
            h["status"] = nonzero_status_name(C.status(x, y).status);
            h["presentation"] = C.hom(x, y)->canonical_text();
            homs.push_back(std::move(h));
        }
    c.data["homs"] = std::move(homs);
}

// Runs independent certificate jobs on the worker pool; order is preserved.
std::vector<Certificate> fan_out(const std::vector<std::function<Certificate()>>& jobs) {
    std::vector<Certificate> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i](); });
    return out;
}

// ---- suites ----

std::vector<Certificate> suite_cogroupoid(const RunSpec& s) {
    FamilyInput F = parse_family(field(s.input, "family"));
    const CogroupoidData& C = F.C;
    auto out = fan_out({[&] { return check_structure_maps(C); }, [&] { return check_cogroupoid(C, s.degree); }});
    describe_family(out[0], C);
    return out;
}

std::vector<Certificate> suite_galois(const RunSpec& s) {
    FamilyInput F = parse_family(field(s.input, "family"));
    const CogroupoidData& C = F.C;
    std::vector<std::function<Certificate()>> jobs;
    for (std::size_t x = 0; x < C.size(); ++x)
        for (std::size_t y = 0; y < C.size(); ++y) {
            if (C.status(x, y).status == NonzeroStatus::ExpectedZero) continue;
            for (GaloisSide side : {GaloisSide::Left, GaloisSide::Right})
                jobs.push_back([&C, x, y, side, d = s.degree] {
                    GaloisCertificate g = verify_galois(C, x, y, side, d);
                    g.cert.data["kappa_eta"] = g.kappa_eta;
                    g.cert.data["eta_kappa"] = g.eta_kappa;
                    g.cert.add({"galois", C.pair_name(x, y), C.finite ? -1 : d, g.pass(),
                                galois_side_name(side) + " canonical map"});
                    return g.cert;
                });
        }
    if (jobs.empty()) raise(ErrorKind::Precondition, "no pair with a possibly nonzero hom-algebra");
    return fan_out(jobs);
}

// Equivalence-relation laws of a decided relation on a corpus, plus its classes.
Certificate relation_certificate(const std::string& kind, const std::vector<NamedMatrix>& corpus,
                                 const std::function<bool(const ExactMatrix&, const ExactMatrix&)>& rel) {
    std::size_t n = corpus.size();
    std::vector<std::vector<char>> R(n, std::vector<char>(n));
    parallel_for(n * n, [&](std::size_t k) { R[k / n][k % n] = rel(corpus[k / n].m, corpus[k % n].m); });
    Certificate c;
    c.kind = kind;
    c.subject = std::to_string(n) + " matrices";
    c.exact = true;
    c.degree = -1;
    for (std::size_t i = 0; i < n; ++i)
        c.add({"reflexive", corpus[i].name, -1, R[i][i] != 0, ""});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            c.add({"symmetric", corpus[i].name + "," + corpus[j].name, -1, R[i][j] == R[j][i], ""});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (R[i][j] && R[j][k] && !R[i][k])
                    c.add({"transitive", corpus[i].name + "," + corpus[j].name + "," + corpus[k].name, -1, false,
                           "related pairs do not compose"});
    c.add({"transitive", "all triples", -1, true, ""});
    json classes = json::array();
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        json cls = json::array();
        for (std::size_t j = i; j < n; ++j)
            if (R[i][j]) {
                seen[j] = 1;
                cls.push_back(corpus[j].name);
            }
        classes.push_back(std::move(cls));
    }
    c.data["classes"] = std::move(classes);
    return c;
}

ExactMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    for (;;) {
        ExactMatrix P(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P(i, j) = Scalar(dist(rng));
        if (P.is_invertible()) return P;
    }
}

std::vector<Certificate> suite_classify(const RunSpec& s) {
    std::vector<NamedMatrix> corpus = parse_named_list(field(s.input, "corpus"));
    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < corpus.size(); ++i) by_name[corpus[i].name] = i;
    auto lookup = [&](const json& w, const char* key) -> const NamedMatrix& {
        std::string name = field(w, key).get<std::string>();
        auto it = by_name.find(name);
        if (it == by_name.end()) raise(ErrorKind::Parse, "unknown corpus matrix '" + name + "'");
        return corpus[it->second];
    };

    std::vector<std::function<Certificate()>> jobs;
    jobs.push_back([&] { return relation_certificate("congruence", corpus, congruent_test); });
    jobs.push_back([&] { return relation_certificate("similarity", corpus, similar_test); });

    struct Witness {
        std::string family;
        NamedMatrix E, F, G;
        ExactMatrix P;
    };
    std::vector<Witness> ws;
    if (s.input.contains("witnesses"))
        for (auto& w : s.input.at("witnesses"))
            ws.push_back({w.value("family", std::string("B")), lookup(w, "E"), lookup(w, "F"), lookup(w, "G"),
                          parse_matrix(field(w, "P"))});
    // Seeded witnesses: G = P^{-1} F P^{-t} for a random integer P, checked over B(F, -).
    std::size_t random_count = s.input.value("random_witnesses", std::size_t{0});
    std::mt19937_64 rng(s.seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        const NamedMatrix& F = corpus[rng() % corpus.size()];
        ExactMatrix P = random_invertible(F.m.rows(), rng);
        ExactMatrix Pinv = P.inverse();
        NamedMatrix G{F.name + "_r" + std::to_string(k), Pinv * F.m * Pinv.transpose()};
        ws.push_back({"B", F, F, G, P});
    }
    for (auto& w : ws) {
        if (w.family != "B" && w.family != "H") raise(ErrorKind::Parse, "witness family must be B or H");
        jobs.push_back([&w, d = s.degree] {
            GaloisIso iso = w.family == "B" ? build_iso_B(w.E, w.F, w.G, w.P, d) : build_iso_H(w.E, w.F, w.G, w.P, d);
            iso.cert.data["P"] = w.P.to_strings();
            iso.cert.data["G"] = w.G.m.to_strings();
            return iso.cert;
        });
    }
    return fan_out(jobs);
}

std::vector<Certificate> suite_transport(const RunSpec& s) {
    FamilyInput F = parse_family(field(s.input, "family"));
    if (F.type != "B" && F.type != "H") raise(ErrorKind::Precondition, "transport suite needs a B or H family");
    const CogroupoidData& C = F.C;
    std::size_t X = s.input.value("source", std::size_t{0});
    std::size_t Y = s.input.value("target", std::size_t{1});
    if (X >= C.size() || Y >= C.size()) raise(ErrorKind::Precondition, "source/target object index out of range");
    MatrixComodule V = F.type == "B" ? fundamental_comodule(C, X) : u_comodule(C, X);
    ComoduleCandidate cand = fundamental_candidate(C, X, Y);

    std::vector<std::function<Certificate()>> jobs;
    jobs.push_back([&] {
        TransportedComodule T = transport_comodule(V, C, X, Y, s.degree, &cand);
        T.cert.data["cotensor_dims"] = T.space.dims;
        if (T.base_change) T.cert.data["base_change"] = T.base_change->to_strings();
        return T.cert;
    });
    jobs.push_back([&] {
        CleftnessResult r = cleftness_witness(V, C, X, Y, s.degree);
        Certificate c;
        c.kind = "cleftness";
        c.subject = V.name + " box " + C.pair_name(X, Y);
        c.degree = s.degree;
        c.data["verdict"] = r.verdict == CleftVerdict::NonCleft ? "NonCleft" : "Inconclusive";
        c.data["comodule_dim"] = r.comodule_dim;
        c.data["cotensor_dim"] = r.cotensor_dim;
        c.data["reason"] = r.reason;
        c.add({"cotensor-stabilized", C.pair_name(X, Y), s.degree, r.space.stabilized, r.reason});
        return c;
    });
    if (s.input.value("round_trip", false))
        jobs.push_back([&] { return transport_round_trip(V, C, X, Y, s.degree); });
    return fan_out(jobs);
}

std::vector<Certificate> suite_homology(const RunSpec& s) {
    ExactMatrix alpha = parse_matrix(field(s.input, "alpha"));
    std::vector<std::string> ts{"0"};
    if (s.input.contains("t")) {
        const json& t = s.input.at("t");
        ts.clear();
        if (t.is_array())
            for (auto& v : t) ts.push_back(scalar_text(v));
        else
            ts.push_back(scalar_text(t));
    }
    std::vector<Scalar> tv;
    for (auto& t : ts) tv.push_back(parse_scalar(t));
    std::vector<EquivariantComplex> Ks;
    for (auto& t : tv) Ks.push_back(koszul_complex(alpha, t));

    std::vector<std::function<Certificate()>> jobs;
    for (std::size_t i = 0; i < Ks.size(); ++i) {
        jobs.push_back([&, i] { return check_complex(Ks[i], s.degree); });
        jobs.push_back([&, i] {
            ExactnessReport r = check_exactness(Ks[i], s.degree);
            json levels = json::array();
            for (auto& L : r.levels)
                levels.push_back({{"level", L.level}, {"dims", L.dims}, {"ranks", L.ranks},
                                  {"homology", L.homology}, {"euler", L.euler}});
            r.cert.data["levels"] = std::move(levels);
            r.cert.data["t"] = ts[i];
            r.cert.data["presentation"] = Ks[i].algebra->canonical_text();
            return r.cert;
        });
    }
    std::unique_ptr<FamilyInput> fam;
    if (s.input.contains("family")) {
        fam = std::make_unique<FamilyInput>(parse_family(s.input.at("family")));
        if (fam->type != "B" || fam->C.size() < 2)
            raise(ErrorKind::Precondition, "resolution transport needs a B family with two objects");
        for (std::size_t i = 0; i < tv.size(); ++i)
            jobs.push_back([&, i] { return transport_resolution(fam->C, 0, 1, tv[i], s.degree).cert; });
    }
    return fan_out(jobs);
}

std::vector<Certificate> suite_weakhopf(const RunSpec& s) {
    FamilyInput F = parse_family(field(s.input, "family"));
    std::vector<std::size_t> objs(F.C.size());
    for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = i;
    WeakHopfData W(F.C, objs);
    Certificate c = check_weak_hopf(W, s.degree);
    c.data["dimension"] = W.finite() ? json(W.dim()) : json(nullptr);
    return {c};
}

std::vector<Certificate> suite_fusion(const RunSpec& s) {
    std::size_t len = s.input.value("max_length", std::size_t{3});
    long n = s.input.value("n", 2L);
    if (n < 2) raise(ErrorKind::Precondition, "fusion needs n >= 2");
    return {fusion_certificate(len, n)};
}

std::vector<Certificate> suite_invariants(const RunSpec& s) {
    ASTMatrix p = parse_ast(field(s.input, "ast"));
    validate_ast(p, true);
    ASTMatrix one = trivial_ast(p.size());
    std::vector<std::vector<std::size_t>> dims(2);
    parallel_for(2, [&](std::size_t k) {
        const ASTMatrix& a = k == 0 ? p : one;
        CogroupoidData C = make_S2n({a});
        dims[k] = coinvariants(make_kp_polynomial(C, 0, a), s.degree).dims;
    });
    auto graded = [](const std::vector<std::size_t>& cum) {
        std::vector<std::size_t> g;
        for (std::size_t i = 0; i < cum.size(); ++i) g.push_back(cum[i] - (i ? cum[i - 1] : 0));
        return g;
    };
    Certificate c;
    c.kind = "invariants";
    c.subject = "k_" + p.name + "[x_1..x_" + std::to_string(2 * p.size()) + "]";
    c.degree = s.degree;
    c.exact = true;
    auto gp = graded(dims[0]), g1 = graded(dims[1]);
    for (std::size_t k = 0; k < gp.size(); ++k)
        c.add({"degree-" + std::to_string(k), p.name, static_cast<int>(k), k < g1.size() && gp[k] == g1[k],
               std::to_string(gp[k]) + " vs " + (k < g1.size() ? std::to_string(g1[k]) : "?")});
    c.data["dims"] = gp;
    c.data["oracle_dims"] = g1;
    return {c};
}

using SuiteFn = std::vector<Certificate> (*)(const RunSpec&);

SuiteFn suite_fn(const std::string& name) {
    static const std::map<std::string, SuiteFn> table{
        {"cogroupoid", suite_cogroupoid}, {"galois", suite_galois},     {"classify", suite_classify},
        {"transport", suite_transport},   {"homology", suite_homology}, {"weakhopf", suite_weakhopf},
        {"fusion", suite_fusion},         {"invariants", suite_invariants},
    };
    auto it = table.find(name);
    if (it == table.end()) raise(ErrorKind::Precondition, "unknown suite '" + name + "'");
    return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [n, d] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

std::string suite_description(const std::string& suite) {
    for (auto& [n, d] : registry())
        if (n == suite) return d;
    return {};
}

RunSpec parse_run_spec(const json& doc) {
    if (!doc.is_object()) raise(ErrorKind::Parse, "spec must be an object");
    RunSpec s;
    s.input = doc;
    s.suite = doc.value("suite", std::string());
    s.degree = doc.value("degree", 2);
    s.seed = doc.value("seed", std::uint64_t{1});
    return s;
}

bool RunReport::pass() const {
    if (certificates.empty()) return false;
    for (auto& c : certificates)
        if (!c.pass()) return false;
    return true;
}

json RunReport::bundle() const {
    json b;
    b["format"] = "hgw-bundle/1";
    b["suite"] = spec.suite;
    b["degree"] = spec.degree;
    b["seed"] = spec.seed;
    b["input"] = spec.input;
    b["pass"] = pass();
    auto& arr = b["certificates"] = json::array();
    for (auto& c : certificates) arr.push_back(c.to_json());
    return b;
}

std::string RunReport::summary() const {
    std::ostringstream os;
    os << "suite " << spec.suite << ", degree " << spec.degree << ", seed " << spec.seed << "\n";
    std::size_t checks = 0, failed = 0;
    for (auto& c : certificates) {
        os << "  " << c.summary() << "\n";
        if (auto* f = c.first_failure())
            os << "    first failure: " << f->id << (f->objects.empty() ? "" : " " + f->objects) << ": " << f->detail
               << "\n";
        checks += c.checks.size();
        failed += c.failures();
    }
    os << (pass() ? "PASS" : "FAIL") << ": " << certificates.size() << " certificates, " << checks << " checks, "
       << failed << " failed\n";
    return os.str();
}

RunReport run_suite(const RunSpec& spec) {
    if (spec.degree < 1) raise(ErrorKind::Precondition, "degree must be >= 1");
    SuiteFn fn = suite_fn(spec.suite);
    RunReport r;
    r.spec = spec;
    r.certificates = fn(spec);
    return r;
}

Certificate fusion_certificate(std::size_t max_len, long n, const FusionRule& rule) {
    Certificate c;
    c.kind = "fusion";
    c.subject = "words of length <= " + std::to_string(max_len);
    c.degree = static_cast<int>(max_len);
    c.exact = true;
    std::vector<FusionWord> W = fusion_words(max_len);
    auto one = [](const FusionWord& x) { return FusionSum{{x, 1}}; };
    auto show = [](const FusionWord& x) { return x.empty() ? std::string("e") : x; };
    auto product = [&](const FusionSum& x, const FusionSum& y) {
        FusionSum out;
        for (auto& [a, m] : x)
            for (auto& [b, k] : y)
                for (auto& [w, c] : rule(a, b)) out[w] += m * k * c;
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    };

    bool unit = true, bar = true, emult = true;
    std::string unit_d, bar_d, emult_d;
    for (auto& x : W) {
        if (unit && (rule("", x) != one(x) || rule(x, "") != one(x))) {
            unit = false;
            unit_d = show(x);
        }
        if (bar && fusion_bar(fusion_bar(x)) != x) {
            bar = false;
            bar_d = show(x);
        }
        FusionSum xx = rule(x, fusion_bar(x));
        auto it = xx.find("");
        if (emult && (it == xx.end() || it->second != 1)) {
            emult = false;
            emult_d = show(x);
        }
    }
    c.add({"unit", "", -1, unit, unit_d});
    c.add({"bar-involution", "", -1, bar, bar_d});
    c.add({"e-multiplicity-one", "", -1, emult, emult_d});

    std::size_t m = W.size();
    std::vector<char> ok(m * m * m, 1);
    parallel_for(m, [&](std::size_t i) {
        FusionSum X = one(W[i]);
        for (std::size_t j = 0; j < m; ++j) {
            FusionSum XY = product(X, one(W[j]));
            for (std::size_t k = 0; k < m; ++k)
                ok[(i * m + j) * m + k] = product(XY, one(W[k])) == product(X, product(one(W[j]), one(W[k])));
        }
    });
    std::size_t bad = 0;
    std::string first;
    for (std::size_t t = 0; t < ok.size(); ++t)
        if (!ok[t] && bad++ == 0)
            first = show(W[t / (m * m)]) + "," + show(W[(t / m) % m]) + "," + show(W[t % m]);
    c.add({"associativity", std::to_string(m * m * m) + " triples", -1, bad == 0, first});

    FusionDimensions dims = fusion_dimensions(n, max_len);
    c.add({"dimension-rule", "n=" + std::to_string(n), -1, dims.consistent, dims.detail});
    json dj = json::object();
    for (auto& [w, d] : dims.dims) dj[show(w)] = d;
    c.data["dimensions"] = std::move(dj);
    c.data["words"] = m;
    return c;
}

}  // namespace hg
