#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rsos/characters.hpp"
#include "rsos/json_io.hpp"
#include "rsos/model.hpp"
#include "rsos/paths.hpp"
#include "rsos/transforms.hpp"

using namespace rsos;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    int p = 0, pp = 0, a = 0, b = 0, L = -1, k = 0;
    std::optional<int> c, e, f, m;
    std::string form = "classical";
    std::string variant = "wt";
    std::string with_heights;
    std::string lambda;
    std::string input;
    std::string format = "json";
    std::string forms = "enumerate,bosonic,fermionic-classical,fermionic-modified";
    std::string output;
    bool prefer_tprime = false;
    int jobs = 1;
    int ppmax = 8;
    int lmax = 12;
};

std::vector<int> parse_int_list(const std::string& s, const char* what)
{
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::string join(const std::vector<long>& v, const char* open = "(", const char* close = ")")
{
    std::string s = open;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + close;
}

template <class T>
std::vector<long> to_long(const std::vector<T>& v)
{
    return std::vector<long>(v.begin(), v.end());
}

void emit(const Opts& o, const Json& j, const std::string& text)
{
    if (o.format == "text")
        std::cout << text << "\n";
    else
        std::cout << j.dump() << "\n";
}

void emit_poly(const Opts& o, const QuarterPoly& q) { emit(o, poly_to_json(q), q.to_string()); }

TakPreference preference(const Opts& o) { return o.prefer_tprime ? TakPreference::PreferTPrime : TakPreference::PreferT; }

FermionicForm parse_form(const std::string& s)
{
    if (s == "classical") return FermionicForm::Classical;
    if (s == "modified") return FermionicForm::Modified;
    throw UsageError("--form must be classical or modified");
}

void need_L(const Opts& o)
{
    if (o.L < 0) throw UsageError("--L is required and must be >= 0");
}

// ---- model ----

int cmd_model_show(const Opts& o)
{
    ModelShape m(o.p, o.pp);
    TakahashiData tak = continued_fraction(o.p, o.pp);
    std::string strip;
    for (int h = 1; h <= m.band_count(); ++h) strip += band_is_odd(m, h) ? '#' : '.';
    std::vector<long> ys, zs, tks(tak.tk.begin() + 1, tak.tk.end());
    for (int k = -1; k <= tak.n + 1; ++k) {
        ys.push_back(tak.y(k));
        zs.push_back(tak.z(k));
    }
    std::vector<long> kap(tak.kappa.begin(), tak.kappa.begin() + tak.t);
    std::vector<long> kapt(tak.kappa_tilde.begin(), tak.kappa_tilde.begin() + tak.t);
    std::vector<long> ls(tak.l.begin() + 1, tak.l.begin() + tak.t + 1);
    std::vector<int> both;
    for (int x : tak.T)
        if (std::find(tak.T_prime.begin(), tak.T_prime.end(), x) != tak.T_prime.end()) both.push_back(x);

    Json j;
    j["p"] = o.p;
    j["pp"] = o.pp;
    j["bands"] = strip;
    j["interfacial"] = interfacial_heights(m);
    j["cf"] = tak.cf;
    j["n"] = tak.n;
    j["t_k"] = tks;
    j["t"] = tak.t;
    j["y"] = ys;
    j["z"] = zs;
    j["kappa"] = kap;
    j["l"] = ls;
    j["kappa_tilde"] = kapt;
    j["T"] = tak.T;
    j["T_prime"] = tak.T_prime;
    j["T_and_T_prime"] = both;

    std::ostringstream t;
    t << "model (p,p') = (" << o.p << "," << o.pp << ")\n";
    t << "bands 1.." << m.band_count() << " (# odd, . even): " << strip << "\n";
    t << "interfacial heights: " << join(to_long(interfacial_heights(m)), "{", "}") << "\n";
    t << "continued fraction " << join(to_long(tak.cf)) << ", n = " << tak.n << ",\n";
    t << "(t_1,...,t_" << tak.n + 1 << ") = " << join(tks) << " and t = " << tak.t << "\n";
    t << "(y_-1,...,y_" << tak.n + 1 << ") = " << join(ys) << ",\n";
    t << "(z_-1,...,z_" << tak.n + 1 << ") = " << join(zs) << ",\n";
    t << "(kappa_0,...,kappa_" << tak.t - 1 << ") = " << join(kap) << ",\n";
    t << "(l_1,...,l_" << tak.t << ") = " << join(ls) << ",\n";
    t << "(kappa~_0,...,kappa~_" << tak.t - 1 << ") = " << join(kapt) << ".\n";
    t << "T  = " << join(to_long(tak.T), "{", "}") << "\n";
    t << "T' = " << join(to_long(tak.T_prime), "{", "}");
    if (!both.empty()) t << "\nin both T and T': " << join(to_long(both), "{", "}") << " (T is read by default)";
    emit(o, j, t.str());
    return 0;
}

// ---- chi ----

// When b lies in both T and T' (single-zone models) its reading fixes c: T gives b-1, T' gives b+1.
TakPreference resolve_reading(const Opts& o)
{
    TakahashiData tak = continued_fraction(o.p, o.pp);
    if (takahashi_membership(tak, o.b).ambiguous) {
        if (!o.c) return preference(o);
        if (*o.c != o.b - 1 && *o.c != o.b + 1) throw UsageError("--c must be b-1 or b+1");
        TakPreference implied = *o.c == o.b + 1 ? TakPreference::PreferTPrime : TakPreference::PreferT;
        if (o.prefer_tprime && implied != TakPreference::PreferTPrime)
            throw UsageError("--prefer-tprime reads b in T', which needs --c b+1");
        return implied;
    }
    CChoice ch = c_from_b(o.p, o.pp, o.b);
    if (o.c && !(*o.c == ch.c || (ch.ambiguous && *o.c == o.b - 1)))
        throw UsageError("--c " + std::to_string(*o.c) + " is not admissible for b = " + std::to_string(o.b) +
                         " (expected " + std::to_string(ch.c) + (ch.ambiguous ? " or b-1" : "") + ")");
    return preference(o);
}

int cmd_chi_enumerate(const Opts& o)
{
    need_L(o);
    ModelShape m(o.p, o.pp);
    std::vector<int> req = parse_int_list(o.with_heights, "--with-heights");
    std::set<int> S(req.begin(), req.end());
    if (o.e || o.f) {
        if (!o.e || !o.f) throw UsageError("wings need both --e and --f");
        if (o.c) throw UsageError("--c cannot be combined with --e/--f");
        emit_poly(o, chi_tilde_restricted(m, o.a, o.b, *o.e, *o.f, o.L, o.m, S));
        return 0;
    }
    if (!o.c) throw UsageError("chi enumerate needs --c, or --e and --f");
    if (o.m) throw UsageError("--m applies only to paths with wings (--e, --f)");
    emit_poly(o, chi_restricted(m, o.a, o.b, *o.c, o.L, S));
    return 0;
}

int cmd_chi_bosonic(const Opts& o)
{
    need_L(o);
    const int c = o.c ? *o.c : c_from_b(o.p, o.pp, o.b).c;
    emit_poly(o, bosonic(o.p, o.pp, o.a, o.b, c, o.L));
    return 0;
}

void note_ambiguity(const Opts& o, TakPreference pref)
{
    TakahashiData tak = continued_fraction(o.p, o.pp);
    for (int h : std::set<int>{o.a, o.b}) {
        if (takahashi_membership(tak, h).ambiguous)
            std::cerr << "note: " << h << " lies in both T and T'; reading " << (pref == TakPreference::PreferTPrime ? "T'" : "T")
                      << " (--prefer-tprime toggles)\n";
    }
}

int cmd_chi_fermionic(const Opts& o)
{
    need_L(o);
    const TakPreference pref = resolve_reading(o);
    FermionicForm form = parse_form(o.form);
    note_ambiguity(o, pref);
    QuarterPoly q = form == FermionicForm::Classical ? fermionic_classical(o.p, o.pp, o.a, o.b, o.L, pref)
                                                     : fermionic_modified(o.p, o.pp, o.a, o.b, o.L, pref);
    emit_poly(o, q);
    return 0;
}

// ---- path ----

Path input_path(const Opts& o)
{
    if (o.input.empty()) throw UsageError("--input path.json is required");
    return load_path(o.input);
}

int cmd_path_weight(const Opts& o)
{
    Path h = input_path(o);
    long w;
    if (o.variant == "wt")
        w = weight_wt(h);
    else if (o.variant == "wtilde")
        w = weight_wtilde(h);
    else
        throw UsageError("--variant must be wt or wtilde");
    Json j;
    j["variant"] = o.variant;
    j["weight"] = w;
    j["scoring"] = scoring_vertices(h);
    std::ostringstream t;
    t << o.variant << " = " << w << "\nscoring vertices: " << join(to_long(scoring_vertices(h)), "{", "}");
    emit(o, j, t.str());
    return 0;
}

int cmd_path_striking(const Opts& o)
{
    Path h = input_path(o);
    StrikingSequence ss = striking_sequence(h);
    PathStats st = path_stats(h);
    Json cols = Json::array();
    std::string top, bot;
    for (const Column& c : ss.columns) {
        cols.push_back({c.a, c.b});
        top += " " + std::to_string(c.a);
        bot += " " + std::to_string(c.b);
    }
    Json j;
    j["columns"] = cols;
    j["e"] = ss.e;
    j["f"] = ss.f;
    j["d"] = ss.d;
    j["m"] = st.m;
    j["alpha"] = st.alpha;
    j["beta"] = st.beta;
    j["pi"] = st.pi;
    j["wtilde"] = weight_from_striking(ss);
    std::ostringstream t;
    t << "non-scoring:" << top << "\nscoring:    " << bot << "\n(e,f,d) = (" << ss.e << "," << ss.f << "," << ss.d
      << ")  m = " << st.m << "  alpha = " << st.alpha << "  beta = " << st.beta << "  pi = " << st.pi
      << "  wtilde = " << weight_from_striking(ss);
    emit(o, j, t.str());
    return 0;
}

// ---- transform ----

void emit_transform(const Opts& o, const Path& h, const std::vector<MoveRecord>& trace, Json extra = Json::object())
{
    Json j;
    j["path"] = path_to_json(h);
    for (auto& [k, v] : extra.items()) j[k] = v;
    Json tr = Json::array();
    std::ostringstream t;
    t << emit_path(h);
    for (const MoveRecord& r : trace) {
        tr.push_back({{"from", r.from}, {"move", r.kind}});
        t << "\n  " << r.kind << " @" << r.from;
    }
    j["trace"] = tr;
    emit(o, j, t.str());
}

int cmd_transform(const std::string& which, const Opts& o)
{
    Path h = input_path(o);
    std::vector<int> lam = parse_int_list(o.lambda, "--lambda");
    if (which == "b1") {
        emit_transform(o, b1(h), {});
    } else if (which == "b2") {
        Path r = b2(h, o.k);
        std::vector<MoveRecord> tr(static_cast<std::size_t>(o.k), MoveRecord{0, "insert"});
        emit_transform(o, r, tr);
    } else if (which == "b3") {
        auto r = b3(h, o.k, lam);
        emit_transform(o, r.path, r.trace);
    } else if (which == "b") {
        auto r = b_transform(h, o.k, lam);
        emit_transform(o, r.path, r.trace);
    } else if (which == "d") {
        emit_transform(o, d_transform(h), {});
    } else if (which == "bd") {
        auto r = bd_transform(h, o.k, lam);
        emit_transform(o, r.path, r.trace);
    } else {
        Direction dir = Direction::B;
        if (o.form == "bd")
            dir = Direction::BD;
        else if (o.form != "b" && o.form != "classical")
            throw UsageError("decompose takes --form b or --form bd");
        auto r = decompose(h, dir);
        Json extra;
        extra["k"] = r.k;
        extra["lambda"] = r.lambda;
        emit_transform(o, r.path, r.trace, extra);
    }
    return 0;
}

// ---- mn ----

int cmd_mn_solve(const Opts& o)
{
    need_L(o);
    FermionicSystem sys = build_system(o.p, o.pp, o.a, o.b, preference(o));
    auto sols = mn_solutions(sys, o.L, parse_form(o.form));
    auto mem = [](const TakMember& t) {
        return Json{{"set", t.which == Membership::InT ? "T" : "T'"}, {"sigma", t.sigma}, {"ambiguous", t.ambiguous}};
    };
    Json j;
    j["a"] = mem(sys.member_L);
    j["b"] = mem(sys.member_R);
    Json arr = Json::array();
    std::ostringstream t;
    t << "a in " << (sys.member_L.which == Membership::InT ? "T" : "T'") << " (sigma " << sys.member_L.sigma << "), b in "
      << (sys.member_R.which == Membership::InT ? "T" : "T'") << " (sigma " << sys.member_R.sigma << "), "
      << sols.size() << " solutions";
    for (const MnSolution& s : sols) {
        arr.push_back({{"m_hat", s.m_hat}, {"n", s.n}});
        t << "\n  m^ = " << join(s.m_hat) << "  n = " << join(s.n);
    }
    j["solutions"] = arr;
    emit(o, j, t.str());
    return 0;
}

// ---- verify ----

struct Tuple {
    int p, pp, a, b, c, L;
    bool fermionic;
    TakPreference pref;
};

struct Record {
    Json json;
    std::string text;
    bool equal = true;
};

std::string first_mismatch(const QuarterPoly& x, const QuarterPoly& y, Json& out)
{
    QuarterPoly d = x - y;
    long e = d.min_quarter();
    out["exp_quarters"] = e;
    out["expected"] = x.coeff_quarter(e).get_str();
    out["got"] = y.coeff_quarter(e).get_str();
    return "q^(" + std::to_string(e) + "/4): " + x.coeff_quarter(e).get_str() + " vs " + y.coeff_quarter(e).get_str();
}

Record run_tuple(const Tuple& t, const std::vector<std::string>& forms)
{
    ModelShape m(t.p, t.pp);
    Record r;
    Json used = Json::array();
    std::optional<QuarterPoly> ref;
    std::string ref_name;
    Json mismatch;
    std::string detail;
    for (const std::string& f : forms) {
        QuarterPoly v;
        if (f == "enumerate")
            v = chi(m, t.a, t.b, t.c, t.L);
        else if (f == "bosonic")
            v = bosonic(t.p, t.pp, t.a, t.b, t.c, t.L);
        else if (!t.fermionic)
            continue;
        else if (f == "fermionic-classical")
            v = fermionic_classical(t.p, t.pp, t.a, t.b, t.L, t.pref);
        else
            v = fermionic_modified(t.p, t.pp, t.a, t.b, t.L, t.pref);
        used.push_back(f);
        if (!ref) {
            ref = v;
            ref_name = f;
        } else if (r.equal && v != *ref) {
            r.equal = false;
            mismatch["reference"] = ref_name;
            mismatch["form"] = f;
            detail = f + " vs " + ref_name + " at " + first_mismatch(*ref, v, mismatch);
        }
    }
    r.json = Json{{"p", t.p}, {"pp", t.pp}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"L", t.L}, {"forms", used}, {"equal", r.equal}};
    if (!r.equal) r.json["mismatch"] = mismatch;
    std::ostringstream s;
    s << std::setw(3) << t.p << std::setw(4) << t.pp << std::setw(4) << t.a << std::setw(4) << t.b << std::setw(4) << t.c
      << std::setw(4) << t.L << "  " << std::setw(2) << used.size() << "  " << (r.equal ? "ok" : "FAIL " + detail);
    r.text = s.str();
    return r;
}

std::vector<Tuple> sweep_tuples(int ppmax, int lmax)
{
    std::vector<Tuple> out;
    for (int pp = 3; pp <= ppmax; ++pp)
        for (int p = 1; p < pp; ++p) {
            if (std::gcd(p, pp) != 1) continue;
            TakahashiData tak = continued_fraction(p, pp);
            auto in_tt = [&](int h) { return takahashi_membership(tak, h).which != Membership::Neither; };
            for (int a = 1; a < pp; ++a)
                for (int b = 1; b < pp; ++b) {
                    CChoice ch = c_from_b(p, pp, b);
                    const bool both = takahashi_membership(tak, b).ambiguous;
                    for (int c : {b - 1, b + 1}) {
                        if (c < 1 || c > pp - 1) continue;
                        bool ferm = in_tt(a) && in_tt(b) && (both || c == ch.c || (ch.ambiguous && c == b - 1));
                        TakPreference pref = both && c == b + 1 ? TakPreference::PreferTPrime : TakPreference::PreferT;
                        for (int L = 0; L <= lmax; ++L)
                            if ((L - a + b) % 2 == 0) out.push_back({p, pp, a, b, c, L, ferm, pref});
                    }
                }
        }
    return out;
}

int cmd_verify_identity(const Opts& o)
{
    if (o.ppmax < 3) throw UsageError("--ppmax must be >= 3");
    if (o.lmax < 0) throw UsageError("--Lmax must be >= 0");
    if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
    std::vector<std::string> forms;
    {
        std::stringstream ss(o.forms);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f != "enumerate" && f != "bosonic" && f != "fermionic-classical" && f != "fermionic-modified")
                throw UsageError("unknown form '" + f + "'");
            forms.push_back(f);
        }
        if (forms.empty()) throw UsageError("--forms must be nonempty");
    }
    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) throw UsageError("cannot write '" + o.output + "'");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Tuple> tuples = sweep_tuples(o.ppmax, o.lmax);
    std::vector<std::optional<Record>> done(tuples.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::size_t printed = 0, failures = 0;
    std::string worker_error;

    auto write = [&](const std::string& line) {
        std::cout << line << "\n";
        if (file) file << line << "\n";
    };
    // records are emitted in tuple order as soon as the prefix is complete
    auto flush_ready = [&]() {
        while (printed < tuples.size() && done[printed]) {
            const Record& r = *done[printed];
            if (!r.equal) ++failures;
            write(o.format == "text" ? r.text : r.json.dump());
            done[printed].reset();
            ++printed;
        }
        std::cout.flush();
    };
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tuples.size()) return;
            Record r;
            try {
                r = run_tuple(tuples[i], forms);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(mu);
                if (worker_error.empty()) worker_error = e.what();
                r.equal = false;
                r.json = Json{{"p", tuples[i].p}, {"pp", tuples[i].pp}, {"error", e.what()}, {"equal", false}};
                r.text = "error: " + std::string(e.what());
            }
            std::lock_guard<std::mutex> lk(mu);
            done[i] = std::move(r);
            flush_ready();
        }
    };
    if (o.format == "text") write("  p  pp   a   b   c   L  forms  result");
    std::vector<std::thread> pool;
    for (int i = 1; i < o.jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    {
        std::lock_guard<std::mutex> lk(mu);
        flush_ready();
    }
    Json summary{{"summary", {{"tuples", tuples.size()}, {"failures", failures}}}};
    if (o.format == "text")
        write("tuples " + std::to_string(tuples.size()) + ", failures " + std::to_string(failures));
    else
        write(summary.dump());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "wall time " << secs << " s\n";
    return failures == 0 ? 0 : 1;
}

int seed_fixtures(const std::string& dir)
{
    std::filesystem::create_directories(dir);
    Path fig = make_path(ModelShape(3, 8), {2, 3, 4, 5, 4, 5, 6, 7, 6, 5, 6, 5, 4, 3, 4}, PostSeg{3});
    std::ofstream(std::filesystem::path(dir) / "fig1.json") << emit_path(fig) << "\n";
    Path wings = make_path(ModelShape(3, 8), fig.heights, Wings{0, 1});
    std::ofstream(std::filesystem::path(dir) / "fig1_wings.json") << emit_path(wings) << "\n";
    std::cout << Json{{"seeded", dir}, {"files", {"fig1.json", "fig1_wings.json"}}}.dump() << "\n";
    return 0;
}

void add_model_opts(CLI::App* s, Opts& o)
{
    s->add_option("--p", o.p, "p (odd bands + 1)")->required();
    s->add_option("--pp", o.pp, "p' (heights 1..p'-1)")->required();
}

void add_format(CLI::App* s, Opts& o)
{
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(int argc, char** argv)
{
    Opts o;
    CLI::App app{"RSOS lattice paths, finitized characters and transforms"};
    app.require_subcommand(0, 1);
    std::string seed_dir;
    app.add_option("--seed-fixtures", seed_dir, "write the canonical fixture files into DIR and exit");

    std::function<int()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
        CLI::App* s = parent->add_subcommand(name, help);
        add_format(s, o);
        s->callback([&action, fn] { action = fn; });
        return s;
    };

    CLI::App* model = app.add_subcommand("model", "model data")->require_subcommand(1);
    add_model_opts(leaf(model, "show", "bands, continued fraction and Takahashi tables", [&] { return cmd_model_show(o); }), o);

    CLI::App* chi_cmd = app.add_subcommand("chi", "finitized characters")->require_subcommand(1);
    for (const char* name : {"enumerate", "bosonic", "fermionic"}) {
        std::string n = name;
        CLI::App* s = leaf(chi_cmd, n, n + " form", [&, n] {
            if (n == "enumerate") return cmd_chi_enumerate(o);
            if (n == "bosonic") return cmd_chi_bosonic(o);
            return cmd_chi_fermionic(o);
        });
        add_model_opts(s, o);
        s->add_option("--a", o.a, "start height")->required();
        s->add_option("--b", o.b, "end height")->required();
        s->add_option("--c", o.c, "post-segment end height");
        s->add_option("--L", o.L, "path length")->required();
        if (n == "enumerate") {
            s->add_option("--e", o.e, "pre-segment direction (wings)");
            s->add_option("--f", o.f, "post-segment direction (wings)");
            s->add_option("--m", o.m, "restrict to m non-scoring vertices (wings)");
            s->add_option("--with-heights", o.with_heights, "comma list of heights every path must attain");
        }
        if (n == "fermionic") {
            s->add_option("--form", o.form, "classical or modified");
            s->add_flag("--prefer-tprime", o.prefer_tprime, "read a, b in T' when they lie in both T and T'");
        }
    }

    CLI::App* path_cmd = app.add_subcommand("path", "single-path statistics")->require_subcommand(1);
    CLI::App* pw = leaf(path_cmd, "weight", "path weight", [&] { return cmd_path_weight(o); });
    pw->add_option("--input", o.input, "path JSON file")->required();
    pw->add_option("--variant", o.variant, "wt or wtilde");
    CLI::App* ps = leaf(path_cmd, "striking", "striking sequence", [&] { return cmd_path_striking(o); });
    ps->add_option("--input", o.input, "path JSON file")->required();

    CLI::App* tr = app.add_subcommand("transform", "path transforms with an audit trace")->require_subcommand(1);
    for (const char* name : {"b1", "b2", "b3", "b", "d", "bd", "decompose"}) {
        std::string n = name;
        CLI::App* s = leaf(tr, n, n + " transform", [&, n] { return cmd_transform(n, o); });
        s->add_option("--input", o.input, "path JSON file")->required();
        if (n == "b2" || n == "b3" || n == "b" || n == "bd") s->add_option("--k", o.k, "particle count");
        if (n == "b3" || n == "b" || n == "bd") s->add_option("--lambda", o.lambda, "partition as a comma list");
        if (n == "decompose") s->add_option("--form", o.form, "b or bd preimage");
    }

    CLI::App* mn = app.add_subcommand("mn", "fermionic (m,n) systems")->require_subcommand(1);
    CLI::App* mns = leaf(mn, "solve", "list the (m,n) solutions", [&] { return cmd_mn_solve(o); });
    add_model_opts(mns, o);
    mns->add_option("--a", o.a, "start height")->required();
    mns->add_option("--b", o.b, "end height")->required();
    mns->add_option("--L", o.L, "path length")->required();
    mns->add_option("--form", o.form, "classical or modified");
    mns->add_flag("--prefer-tprime", o.prefer_tprime, "read a, b in T' when they lie in both T and T'");

    CLI::App* verify = app.add_subcommand("verify", "identity sweeps")->require_subcommand(1);
    CLI::App* vi = leaf(verify, "identity", "compare every polynomial form over a grid", [&] { return cmd_verify_identity(o); });
    vi->add_option("--ppmax", o.ppmax, "largest p'");
    vi->add_option("--Lmax", o.lmax, "largest L");
    vi->add_option("--jobs", o.jobs, "worker threads");
    vi->add_option("--forms", o.forms, "comma list of forms to compare");
    vi->add_option("--output", o.output, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (!seed_dir.empty()) return seed_fixtures(seed_dir);
        if (!action) {
            std::cerr << app.help();
            return 2;
        }
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int main(int argc, char** argv) { return run(argc, argv); }
