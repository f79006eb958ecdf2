#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "est/characters.hpp"
#include "est/estermann.hpp"
#include "est/expsums.hpp"
#include "est/moments.hpp"
#include "est/rationals.hpp"
#include "json.hpp"
#include "suites.hpp"

#ifndef EST_TOOL_VERSION
#define EST_TOOL_VERSION "0.0.0"
#endif

namespace est::cli {

using json = nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Accepts "0.5", "2i", "-1.5i", "0.5+2i", "0.7-1e-3i".
Complex parse_complex(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    if (text.empty()) throw UsageError("empty complex number");
    auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed complex number: " + text);
        }
        if (used != part.size()) throw UsageError("malformed complex number: " + text);
        return v;
    };
    if (text.back() != 'i') return to_double(text);
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return to_double(part);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {to_double(body.substr(0, split)), imag_of(body.substr(split))};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed integer list: " + text);
        }
        if (used != item.size()) throw UsageError("malformed integer list: " + text);
        out.push_back(v);
    }
    return out;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Parameters that may come from the config file or from flags.
const std::set<std::string>& config_keys() {
    static const std::set<std::string> keys = {
        "a", "q", "s", "alpha", "beta", "j", "m", "n", "l", "part", "convention",
        "k", "r", "sign", "variant", "form", "primes", "trials", "lmax", "points", "seed",
        "format", "output", "workers", "timings", "precision"};
    return keys;
}

const std::set<std::string>& precision_keys() {
    static const std::set<std::string> keys = {"em_shift", "bernoulli_order", "target_rel_err", "series_cutoff"};
    return keys;
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        if (!config_keys().count(key)) throw UsageError("unknown config key: " + key);
        if (key == "precision") {
            if (!value.is_object()) throw UsageError("config key precision must be an object");
            for (const auto& [pk, pv] : value.items()) {
                if (!precision_keys().count(pk)) throw UsageError("unknown precision key: " + pk);
                if (!pv.is_number()) throw UsageError("precision." + pk + " must be a number");
            }
        }
    }
    return cfg;
}

// Raw flag values; a parameter counts as set when its option was given.
struct Flags {
    std::string config_path;
    std::string a, q, s, alpha, beta, j, m, n, l, part, convention;
    std::string k, r, sign, variant, form, primes, trials, lmax, points, seed;
    std::string format, output, workers;
    bool timings = false;
    std::string em_shift, bernoulli_order;
};

// Resolves each parameter as flag > config > default and records the result.
class Resolver {
public:
    Resolver(const CLI::App& app, json cfg) : app_(app), cfg_(std::move(cfg)) {}

    std::string text(const std::string& key, const std::string& flag, const std::string& fallback) {
        std::string v = fallback;
        if (given(key)) {
            v = flag;
        } else if (cfg_.contains(key)) {
            const json& c = cfg_[key];
            if (c.is_string()) {
                v = c.get<std::string>();
            } else if (c.is_array()) {
                std::string joined;
                for (const auto& e : c) {
                    if (!e.is_number_integer()) throw UsageError("config key " + key + " must list integers");
                    joined += (joined.empty() ? "" : ",") + std::to_string(e.get<std::int64_t>());
                }
                v = joined;
            } else if (c.is_number_integer()) {
                v = std::to_string(c.get<std::int64_t>());
            } else if (c.is_number()) {
                std::ostringstream os;
                os.precision(17);
                os << c.get<double>();
                v = os.str();
            } else if (c.is_boolean()) {
                v = c.get<bool>() ? "true" : "false";
            } else {
                throw UsageError("config key " + key + " has an unsupported type");
            }
        }
        resolved_[key] = v;
        return v;
    }

    std::int64_t integer(const std::string& key, const std::string& flag, std::int64_t fallback) {
        const std::string v = text(key, flag, std::to_string(fallback));
        std::size_t used = 0;
        std::int64_t out = 0;
        try {
            out = std::stoll(v, &used);
        } catch (const std::exception&) {
            throw UsageError("--" + key + " expects an integer, got '" + v + "'");
        }
        if (used != v.size()) throw UsageError("--" + key + " expects an integer, got '" + v + "'");
        resolved_[key] = out;
        return out;
    }

    Complex complex(const std::string& key, const std::string& flag, const std::string& fallback) {
        const Complex z = parse_complex(text(key, flag, fallback));
        resolved_[key] = complex_json(z);
        return z;
    }

    std::vector<std::int64_t> list(const std::string& key, const std::string& flag) {
        const auto v = parse_int_list(text(key, flag, ""));
        resolved_[key] = v;
        return v;
    }

    bool flag(const std::string& key, bool flag_value) {
        bool v = flag_value;
        if (!given(key) && cfg_.contains(key)) {
            if (!cfg_[key].is_boolean()) throw UsageError("config key " + key + " must be a boolean");
            v = cfg_[key].get<bool>();
        }
        resolved_[key] = v;
        return v;
    }

    PrecisionConfig precision(const Flags& f) {
        PrecisionConfig p = default_precision();
        const json pc = cfg_.value("precision", json::object());
        if (pc.contains("em_shift")) p.em_shift = pc["em_shift"].get<int>();
        if (pc.contains("bernoulli_order")) p.bernoulli_order = pc["bernoulli_order"].get<int>();
        if (pc.contains("target_rel_err")) p.target_rel_err = pc["target_rel_err"].get<double>();
        if (pc.contains("series_cutoff")) p.series_cutoff = pc["series_cutoff"].get<std::int64_t>();
        if (given("em-shift")) p.em_shift = std::stoi(f.em_shift);
        if (given("bernoulli-order")) p.bernoulli_order = std::stoi(f.bernoulli_order);
        p.validate();
        resolved_["precision"] = {{"em_shift", p.em_shift},
                                  {"bernoulli_order", p.bernoulli_order},
                                  {"target_rel_err", p.target_rel_err},
                                  {"series_cutoff", p.series_cutoff}};
        return p;
    }

    // The effective configuration; the output path does not enter the hash.
    std::string hash(const std::string& command, const std::string& target) const {
        json doc = resolved_;
        doc.erase("output");
        doc.erase("timings");
        doc["command"] = command;
        doc["target"] = target;
        return fnv1a_hex(doc.dump());
    }

private:
    bool given(const std::string& key) const {
        const CLI::Option* opt = nullptr;
        for (const CLI::App* app : all_apps()) {
            try {
                opt = app->get_option("--" + key);
            } catch (const CLI::OptionNotFound&) {
                continue;
            }
            if (opt->count() > 0) return true;
        }
        return false;
    }

    std::vector<const CLI::App*> all_apps() const {
        std::vector<const CLI::App*> apps = {&app_};
        for (std::size_t i = 0; i < apps.size(); ++i) {
            for (const CLI::App* sub : apps[i]->get_subcommands({})) apps.push_back(sub);
        }
        return apps;
    }

    const CLI::App& app_;
    json cfg_;
    json resolved_ = json::object();
};

struct Table {
    std::vector<std::string> columns;
    std::set<std::string> complex_columns;  // written as <name>_re, <name>_im in CSV
    std::vector<std::map<std::string, json>> rows;
};

std::string scalar_text(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

void write_csv(const Table& t, std::ostream& os) {
    std::vector<std::string> header;
    std::vector<bool> is_complex;
    for (const std::string& c : t.columns) {
        const bool cplx = t.complex_columns.count(c) > 0;
        is_complex.push_back(cplx);
        if (cplx) {
            header.push_back(c + "_re");
            header.push_back(c + "_im");
        } else {
            header.push_back(c);
        }
    }
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        bool first = true;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const auto it = row.find(t.columns[i]);
            const json v = it == row.end() ? json() : it->second;
            if (is_complex[i]) {
                const std::string re = v.is_object() ? scalar_text(v["re"]) : scalar_text(v);
                const std::string im = v.is_object() ? scalar_text(v["im"]) : "";
                os << (first ? "" : ",") << csv_field(re) << "," << csv_field(im);
            } else {
                os << (first ? "" : ",") << csv_field(scalar_text(v));
            }
            first = false;
        }
        os << "\n";
    }
}

json table_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::object();
        for (const std::string& c : t.columns) {
            const auto it = row.find(c);
            r[c] = it == row.end() ? json() : it->second;
        }
        rows.push_back(r);
    }
    return rows;
}

json optional_complex(const std::optional<Complex>& z) { return z ? complex_json(*z) : json(); }

int sign_of(const std::string& text) {
    if (text == "+" || text == "1" || text == "+1" || text == "plus") return 1;
    if (text == "-" || text == "-1" || text == "minus") return -1;
    throw UsageError("--sign expects + or -");
}

struct Context {
    Resolver& res;
    const Flags& flags;
    std::ostream& out;
    std::ostream& err;
};

int cmd_eval(const std::string& target, Context& ctx) {
    Resolver& r = ctx.res;
    const Flags& f = ctx.flags;
    json doc = json::object();
    if (target == "estermann") {
        const Complex s = r.complex("s", f.s, "0.5");
        const std::int64_t a = r.integer("a", f.a, 1), q = r.integer("q", f.q, 2);
        const ShiftPair shift{r.complex("alpha", f.alpha, "0"), r.complex("beta", f.beta, "0")};
        const std::string part = r.text("part", f.part, "full");
        EstermannOptions opt;
        opt.precision = r.precision(f);
        const ReducedFraction x = ReducedFraction::make(a, q);
        if (part == "full") {
            doc["value"] = complex_json(estermann_eval(s, shift, x, opt));
        } else if (part == "cos" || part == "sin") {
            const CosSin cs = estermann_cos_sin(s, shift, x, opt);
            doc["value"] = complex_json(part == "cos" ? cs.cos_part : cs.sin_part);
        } else {
            throw UsageError("--part expects full, cos or sin");
        }
    } else if (target == "lvalue") {
        const std::int64_t q = r.integer("q", f.q, 3), j = r.integer("j", f.j, 1);
        const Complex s = r.complex("s", f.s, "0.5");
        const PrecisionConfig p = r.precision(f);
        if (!is_prime(q)) throw UsageError("lvalue: q must be prime");
        if (j < 0 || j >= q - 1) throw UsageError("lvalue: j must be in [0, q-2]");
        doc["value"] = complex_json(l_value_direct(build_group(q), j, s, p));
    } else if (target == "dedekind") {
        const std::int64_t a = r.integer("a", f.a, 1), q = r.integer("q", f.q, 2);
        doc["value"] = dedekind_sum(a, q).to_string();
    } else if (target == "cf") {
        const std::int64_t a = r.integer("a", f.a, 1), q = r.integer("q", f.q, 2);
        const std::string conv = r.text("convention", f.convention, "trailing-one");
        if (conv != "trailing-one" && conv != "standard") {
            throw UsageError("--convention expects trailing-one or standard");
        }
        const CFExpansion cf = cf_expand(ReducedFraction::make(a, q),
                                         conv == "standard" ? CFConvention::standard : CFConvention::trailing_one);
        doc["quotients"] = cf.quotients;
        doc["trailing_one"] = cf.trailing_one;
    } else if (target == "kloosterman") {
        const std::int64_t m = r.integer("m", f.m, 1), n = r.integer("n", f.n, 1), l = r.integer("l", f.l, 1);
        doc["value"] = complex_json(kloosterman_sum(m, n, l));
        doc["weil_bound"] = weil_bound(m, n, l);
    } else {
        throw UsageError("unknown eval target: " + target);
    }
    r.text("format", f.format, "json");
    doc["tool_version"] = EST_TOOL_VERSION;
    doc["config_hash"] = r.hash("eval", target);
    ctx.out << doc.dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, Context& ctx) {
    Resolver& r = ctx.res;
    const Flags& f = ctx.flags;
    SuiteOptions opt;
    opt.q = r.list("q", f.q);
    opt.r = int(r.integer("r", f.r, opt.r));
    opt.trials = int(r.integer("trials", f.trials, opt.trials));
    opt.lmax = int(r.integer("lmax", f.lmax, opt.lmax));
    opt.points = int(r.integer("points", f.points, opt.points));
    opt.seed = std::uint64_t(r.integer("seed", f.seed, std::int64_t(opt.seed)));
    const std::string format = r.text("format", f.format, "csv");
    if (opt.trials < 1 || opt.lmax < 1 || opt.points < 1 || opt.r < 1) {
        throw UsageError("trials, lmax, points and r must be positive");
    }
    for (std::int64_t q : opt.q) {
        if (!is_prime(q)) throw UsageError("--q entries must be prime");
    }
    const std::vector<SuiteCase> cases = run_suite(suite, opt);
    Table t;
    t.columns = {"suite", "case", "residual", "tolerance", "pass"};
    const SuiteCase* first_failure = nullptr;
    for (const SuiteCase& c : cases) {
        t.rows.push_back({{"suite", suite}, {"case", c.name}, {"residual", c.residual},
                          {"tolerance", c.tolerance}, {"pass", c.pass}});
        if (!c.pass && !first_failure) first_failure = &c;
    }
    if (format == "json") {
        json doc = {{"tool_version", EST_TOOL_VERSION},
                    {"config_hash", r.hash("verify", suite)},
                    {"suite", suite},
                    {"pass", first_failure == nullptr},
                    {"cases", table_json(t)}};
        ctx.out << doc.dump(2) << "\n";
    } else {
        r.hash("verify", suite);
        write_csv(t, ctx.out);
    }
    if (first_failure) {
        ctx.err << "verify " << suite << ": first failing case: " << first_failure->name
                << " residual=" << first_failure->residual << " tolerance=" << first_failure->tolerance << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

json report_cell(const std::optional<double>& v) { return v ? json(*v) : json(); }

int cmd_study(const std::string& study, Context& ctx) {
    Resolver& r = ctx.res;
    const Flags& f = ctx.flags;
    const std::vector<std::int64_t> primes = r.list("primes", f.primes);
    StudyParams p;
    p.workers = int(r.integer("workers", f.workers, 1));
    if (p.workers < 1) throw UsageError("--workers must be positive");
    const bool timings = r.flag("timings", f.timings);
    const std::string format = r.text("format", f.format, "csv");
    if (!std::is_sorted(primes.begin(), primes.end())) throw UsageError("--primes must be ascending");

    Table t;
    std::vector<std::vector<MomentReport>> runs;
    std::vector<std::string> labels;
    if (study == "theorem1") {
        p.k = int(r.integer("k", f.k, 3));
        const std::string variant = r.text("variant", f.variant, "derived");
        if (variant != "stated" && variant != "derived" && variant != "both") {
            throw UsageError("--variant expects stated, derived or both");
        }
        if (p.k < 3) throw UsageError("--k must be at least 3");
        for (const std::string v : {"stated", "derived"}) {
            if (variant != "both" && variant != v) continue;
            p.variant = v == "stated" ? Theorem1Variant::as_stated : Theorem1Variant::as_derived;
            runs.push_back(convergence_study(primes, StudyKind::theorem1, p));
            labels.push_back(v == "stated" ? "as_stated" : "as_derived");
        }
    } else if (study == "caee") {
        p.k = int(r.integer("k", f.k, 3));
        const std::string form = r.text("form", f.form, "refined");
        if (form != "refined" && form != "asymptotic") throw UsageError("--form expects refined or asymptotic");
        if (p.k < 3) throw UsageError("--k must be at least 3");
        p.estermann_form = form == "refined" ? EstermannMainForm::refined : EstermannMainForm::asymptotic;
        runs.push_back(convergence_study(primes, StudyKind::estermann, p));
        labels.push_back("");
    } else if (study == "tinc") {
        p.k = int(r.integer("k", f.k, 3));
        p.r = int(r.integer("r", f.r, 1));
        p.sign = sign_of(r.text("sign", f.sign, "+"));
        if (p.k < 1 || p.r < 1 || p.k * p.r < 3) throw UsageError("tinc needs k, r >= 1 and kr >= 3");
        runs.push_back(convergence_study(primes, StudyKind::cf, p));
        labels.push_back("");
    } else if (study == "fourth-moment") {
        runs.push_back(convergence_study(primes, StudyKind::fourth, p));
        labels.push_back("");
    } else if (study == "prr") {
        runs.push_back(convergence_study(primes, StudyKind::prr, p));
        labels.push_back("");
    } else {
        throw UsageError("unknown study: " + study);
    }

    const bool residual_study = study == "prr";
    const bool uses_k = study == "theorem1" || study == "caee" || study == "tinc";
    t.columns = {"q"};
    if (uses_k) t.columns.push_back("k");
    if (study == "tinc") t.columns.push_back("r");
    if (residual_study) {
        t.columns.push_back("residual_over_log_q");
    } else {
        t.columns.push_back("brute");
        for (const std::string& l : labels) t.columns.push_back(l.empty() ? "main" : "main_" + l);
        for (const std::string& l : labels) t.columns.push_back(l.empty() ? "ratio" : "ratio_" + l);
        t.complex_columns.insert(std::find(t.columns.begin(), t.columns.end(), "brute"), t.columns.end());
        t.columns.push_back("main_error_bound");
    }
    if (timings) t.columns.push_back("elapsed");
    t.columns.push_back("error");

    std::size_t failed = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::map<std::string, json> row;
        const MomentReport& base = runs[0][i];
        row["q"] = base.q;
        if (uses_k) row["k"] = base.k;
        if (base.r) row["r"] = *base.r;
        std::string error;
        double bound = 0.0, elapsed = 0.0;
        for (std::size_t v = 0; v < runs.size(); ++v) {
            const MomentReport& rep = runs[v][i];
            const std::string suffix = labels[v].empty() ? "" : "_" + labels[v];
            if (!rep.error.empty()) error = rep.error;
            bound = std::max(bound, rep.tail_bound);
            elapsed += rep.elapsed;
            if (rep.error.empty()) {
                row["brute"] = complex_json(rep.brute_value);
                row["main" + suffix] = complex_json(rep.main_term);
                row["ratio" + suffix] = optional_complex(rep.ratio);
            }
            row["residual_over_log_q"] = report_cell(rep.residual);
        }
        row["main_error_bound"] = bound;
        if (timings) row["elapsed"] = elapsed;
        row["error"] = error;
        if (!error.empty()) {
            ++failed;
            ctx.err << "study " << study << ": q=" << base.q << ": " << error << "\n";
        }
        t.rows.push_back(std::move(row));
    }
    if (format == "json") {
        json doc = {{"tool_version", EST_TOOL_VERSION},
                    {"config_hash", r.hash("study", study)},
                    {"study", study},
                    {"rows", table_json(t)}};
        ctx.out << doc.dump(2) << "\n";
    } else {
        r.hash("study", study);
        write_csv(t, ctx.out);
    }
    return !primes.empty() && failed == primes.size() ? kExitNumeric : kExitOk;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Estermann function, twisted moments and identity checks", "estcli"};
    app.require_subcommand(1);
    // Subcommands inherit this, so global flags may follow them.
    app.fallthrough();
    Flags f;
    app.add_option("--config", f.config_path, "JSON config file; flags override its values");
    app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", f.output, "write the report to this path");
    app.add_option("--workers", f.workers, "worker threads for studies");
    app.add_option("--em-shift", f.em_shift, "Euler-Maclaurin shift");
    app.add_option("--bernoulli-order", f.bernoulli_order, "highest Bernoulli number");
    app.add_flag("--timings", f.timings, "add an elapsed-seconds column to studies");

    CLI::App* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->require_subcommand(1);
    std::map<std::string, CLI::App*> eval_targets;
    for (const std::string name : {"estermann", "lvalue", "dedekind", "cf", "kloosterman"}) {
        eval_targets[name] = eval->add_subcommand(name);
    }
    eval_targets["estermann"]->add_option("--s", f.s);
    eval_targets["estermann"]->add_option("--a", f.a);
    eval_targets["estermann"]->add_option("--q", f.q);
    eval_targets["estermann"]->add_option("--alpha", f.alpha);
    eval_targets["estermann"]->add_option("--beta", f.beta);
    eval_targets["estermann"]->add_option("--part", f.part, "full, cos or sin");
    eval_targets["lvalue"]->add_option("--q", f.q);
    eval_targets["lvalue"]->add_option("--j", f.j, "character exponent");
    eval_targets["lvalue"]->add_option("--s", f.s);
    eval_targets["dedekind"]->add_option("--a", f.a);
    eval_targets["dedekind"]->add_option("--q", f.q);
    eval_targets["cf"]->add_option("--a", f.a);
    eval_targets["cf"]->add_option("--q", f.q);
    eval_targets["cf"]->add_option("--convention", f.convention, "trailing-one or standard");
    eval_targets["kloosterman"]->add_option("--m", f.m);
    eval_targets["kloosterman"]->add_option("--n", f.n);
    eval_targets["kloosterman"]->add_option("--l", f.l);

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--q", f.q, "comma-separated prime moduli");
    verify->add_option("--r", f.r, "largest r for gfar and beta");
    verify->add_option("--trials", f.trials, "random points per case");
    verify->add_option("--lmax", f.lmax, "largest modulus for weil");
    verify->add_option("--points", f.points, "parameter points for hga and aq4");
    verify->add_option("--seed", f.seed, "random seed");

    CLI::App* study = app.add_subcommand("study", "run a convergence study");
    std::string study_name;
    study->add_option("study", study_name)
        ->required()
        ->check(CLI::IsMember({"theorem1", "caee", "tinc", "fourth-moment", "prr"}));
    study->add_option("--k", f.k, "moment order");
    study->add_option("--r", f.r, "partial-quotient exponent for tinc");
    study->add_option("--sign", f.sign, "+ or -");
    study->add_option("--variant", f.variant, "stated, derived or both");
    study->add_option("--form", f.form, "refined or asymptotic");
    study->add_option("--primes", f.primes, "comma-separated ascending primes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const json cfg = f.config_path.empty() ? json::object() : load_config(f.config_path);
        Resolver res(app, cfg);
        const std::string output = res.text("output", f.output, "");
        std::ofstream file;
        if (!output.empty()) {
            file.open(output);
            if (!file) throw UsageError("cannot write " + output);
        }
        std::ostream& sink = output.empty() ? out : file;
        Context ctx{res, f, sink, err};
        if (eval->parsed()) {
            for (const auto& [name, sub] : eval_targets) {
                if (sub->parsed()) return cmd_eval(name, ctx);
            }
        }
        if (verify->parsed()) return cmd_verify(suite, ctx);
        return cmd_study(study_name, ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: config: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}

}  // namespace est::cli
