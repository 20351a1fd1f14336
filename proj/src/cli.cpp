#include "threegap/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "threegap/corpus.hpp"
#include "threegap/errors.hpp"
#include "threegap/iet.hpp"
#include "threegap/oracle.hpp"
#include "threegap/predictor.hpp"

namespace threegap::cli {

namespace {

using Json = nlohmann::ordered_json;

// Flat records share one emitter for csv and table output.
struct Records {
    std::vector<std::string> columns;
    std::vector<Json> rows;
};

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ';';
            out += cell(v[i]);
        }
        return out;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_csv(const Records& recs, std::ostream& os) {
    for (std::size_t i = 0; i < recs.columns.size(); ++i) os << (i ? "," : "") << csv_escape(recs.columns[i]);
    os << '\n';
    for (const auto& row : recs.rows) {
        for (std::size_t i = 0; i < recs.columns.size(); ++i) {
            os << (i ? "," : "") << csv_escape(cell(row.at(recs.columns[i])));
        }
        os << '\n';
    }
}

void write_table(const Records& recs, std::ostream& os) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(recs.columns.size());
    for (std::size_t i = 0; i < recs.columns.size(); ++i) width[i] = recs.columns[i].size();
    for (const auto& row : recs.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < recs.columns.size(); ++i) {
            line.push_back(cell(row.at(recs.columns[i])));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) text += "  ";
            text += line[i];
            if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
        }
        os << text << '\n';
    };
    emit(recs.columns);
    for (const auto& line : cells) emit(line);
}

void write_records(const Records& recs, Format format, std::ostream& os, bool json_lines) {
    switch (format) {
        case Format::Csv:
            write_csv(recs, os);
            return;
        case Format::Table:
            write_table(recs, os);
            return;
        case Format::Json:
            if (json_lines) {
                for (const auto& row : recs.rows) os << row.dump() << '\n';
                return;
            }
            if (recs.rows.size() == 1) {
                os << recs.rows.front().dump() << '\n';
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < recs.rows.size(); ++i) {
                os << recs.rows[i].dump() << (i + 1 < recs.rows.size() ? ",\n" : "\n");
            }
            os << "]\n";
            return;
    }
}

std::vector<std::string> keys_of(const Json& obj) {
    std::vector<std::string> keys;
    for (const auto& item : obj.items()) keys.push_back(item.key());
    return keys;
}

void add_decimal(Json& rec, const std::string& key, const Rational& value, const std::optional<int>& digits) {
    if (digits) rec[key + "_decimal"] = value.decimal(*digits);
}

Json gap_record(const GapStructure& g, const std::optional<int>& digits) {
    Json rec;
    rec["n"] = g.n;
    rec["m"] = g.m;
    rec["b_m"] = g.b_m;
    rec["l1"] = g.l1.str();
    rec["l2"] = g.l2.str();
    rec["l3"] = g.l3.str();
    rec["n1"] = g.n1;
    rec["n2"] = g.n2;
    rec["n3"] = g.n3;
    add_decimal(rec, "l1", g.l1, digits);
    add_decimal(rec, "l2", g.l2, digits);
    add_decimal(rec, "l3", g.l3, digits);
    return rec;
}

Json multiset_map(const oracle::GapMultiset& ms) {
    Json obj = Json::object();
    for (const auto& e : ms.entries) obj[e.length.str()] = e.count;
    return obj;
}

Records single(Json rec) {
    Records recs;
    recs.columns = keys_of(rec);
    recs.rows.push_back(std::move(rec));
    return recs;
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw CLI::ValidationError(std::string(flag) + " is required for this command");
    return *v;
}

Rational parse_rational_flag(const std::string& text) { return Rational::parse(text); }

Records cmd_predict(const RunConfig& cfg) {
    const auto in = resolve_z(cfg);
    return single(gap_record(predict(in.cf, in.z, require(cfg.n, "--n")), cfg.decimal));
}

Records cmd_oracle(const RunConfig& cfg) {
    const auto in = resolve_z(cfg);
    const auto points = oracle::kronecker_points(in.z, require(cfg.n, "--n"));
    const auto gaps = oracle::circular_gaps(points);
    Records recs;
    for (const auto& e : gaps.entries) {
        Json rec;
        rec["length"] = e.length.str();
        rec["count"] = e.count;
        add_decimal(rec, "length", e.length, cfg.decimal);
        recs.rows.push_back(std::move(rec));
    }
    if (cfg.format == Format::Json) {
        Json doc;
        doc["z"] = in.z.str();
        doc["n"] = *cfg.n;
        doc["gaps"] = Json::array();
        for (auto& r : recs.rows) doc["gaps"].push_back(r);
        return single(std::move(doc));
    }
    recs.columns = keys_of(recs.rows.front());
    return recs;
}

Records cmd_evolve(const RunConfig& cfg) {
    const auto in = resolve_z(cfg);
    Records recs;
    for (const auto& g : gap_evolution(in.cf, in.z, require(cfg.n_max, "--n-max"))) {
        recs.rows.push_back(gap_record(g, cfg.decimal));
    }
    recs.columns = keys_of(recs.rows.front());
    if (cfg.format == Format::Json && recs.rows.size() == 1) {
        // Keep the array shape even for a single row.
        Json arr = Json::array({recs.rows.front()});
        recs.rows = {std::move(arr)};
    }
    return recs;
}

Records cmd_verify(const RunConfig& cfg, bool& clean) {
    const auto in = resolve_z(cfg);
    const auto report = oracle::verify(in.cf, in.z, cfg.n_min, require(cfg.n_max, "--n-max"));
    clean = report.ok();
    Json doc;
    doc["z"] = report.z.str();
    doc["n_lo"] = report.n_lo;
    doc["n_hi"] = report.n_hi;
    doc["checked"] = report.checked;
    if (cfg.format == Format::Json) {
        doc["mismatches"] = Json::array();
        for (const auto& mm : report.mismatches) {
            Json entry;
            entry["n"] = mm.n;
            entry["predicted"] = multiset_map(mm.predicted);
            entry["observed"] = multiset_map(mm.observed);
            doc["mismatches"].push_back(std::move(entry));
        }
    } else {
        Json ns = Json::array();
        for (const auto& mm : report.mismatches) ns.push_back(mm.n);
        doc["mismatches"] = std::move(ns);
    }
    return single(std::move(doc));
}

iet::IntervalExchange trace_start(const RunConfig& cfg) {
    if (cfg.lengths) {
        const auto& text = *cfg.lengths;
        auto comma = text.find(',');
        if (comma == std::string::npos) throw ParseError("--lengths expects 'la,lb'");
        return iet::IntervalExchange({1, 2}, {2, 1},
                                     {parse_rational_flag(text.substr(0, comma)), parse_rational_flag(text.substr(comma + 1))});
    }
    return iet::make_rotation(resolve_z(cfg).z);
}

Records cmd_trace(const RunConfig& cfg, std::ostream& err) {
    iet::IntervalExchange cur = trace_start(cfg);
    Records recs;
    recs.columns = {"step", "type", "winner", "loser", "lambda_a", "lambda_b"};
    if (cfg.decimal) {
        recs.columns.push_back("lambda_a_decimal");
        recs.columns.push_back("lambda_b_decimal");
    }
    for (std::int64_t k = 1; k <= cfg.steps; ++k) {
        if (cur.keane_degenerate()) {
            if (k == 1) throw KeaneViolation("equal lengths before the first step", 0);
            err << "stopped: lengths equal after step " << (k - 1) << "\n";
            break;
        }
        auto step = iet::rauzy_step(cur);
        Json rec;
        rec["step"] = k;
        rec["type"] = step.eps;
        rec["winner"] = std::string(1, iet::to_char(step.winner));
        rec["loser"] = std::string(1, iet::to_char(step.loser));
        rec["lambda_a"] = step.after.lambda(iet::Label::A).str();
        rec["lambda_b"] = step.after.lambda(iet::Label::B).str();
        add_decimal(rec, "lambda_a", step.after.lambda(iet::Label::A), cfg.decimal);
        add_decimal(rec, "lambda_b", step.after.lambda(iet::Label::B), cfg.decimal);
        recs.rows.push_back(std::move(rec));
        cur = std::move(step.after);
    }
    return recs;
}

Records cmd_zorich(const RunConfig& cfg) {
    const auto in = resolve_z(cfg);
    const auto zq = iet::zorich_quotients(iet::make_rotation(in.z), cfg.blocks.value_or(cfg.depth));
    if (zq.quotients.empty()) throw KeaneViolation("induction of " + in.z.str() + " is undefined from the start", 0);
    const Side side = in.z < Rational(1, 2) ? Side::BelowHalf : Side::AboveHalf;
    const auto rebuilt = iet::cf_from_quotients(zq, side);
    Json doc;
    doc["z"] = in.z.str();
    doc["quotients"] = zq.quotients;
    doc["stopped_by"] = zq.stopped_by == iet::Truncation::Keane ? "keane" : "max_blocks";
    doc["cf"] = rebuilt.str();
    const auto& expected = in.cf;
    bool match = rebuilt.depth() <= expected.depth() &&
                 std::equal(rebuilt.partials.begin(), rebuilt.partials.end(), expected.partials.begin());
    if (zq.stopped_by == iet::Truncation::Keane) match = match && rebuilt.depth() == expected.depth();
    doc["expected_cf"] = expected.str();
    doc["match"] = match;
    return single(std::move(doc));
}

void report_error(std::ostream& err, const Error& e) {
    Json doc;
    doc["error"] = e.kind();
    doc["message"] = e.what();
    if (e.where()) doc["at"] = *e.where();
    err << doc.dump() << '\n';
}

}  // namespace

int default_depth() {
    if (const char* env = std::getenv("THREEGAP_DEPTH_DEFAULT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
    }
    return 30;
}

ZInput resolve_z(const RunConfig& cfg) {
    if (cfg.z_rational.has_value() == cfg.z_cf.has_value()) {
        throw CLI::ValidationError("exactly one of --z or --cf is required");
    }
    if (cfg.z_rational) {
        Rational z = Rational::parse(*cfg.z_rational);
        return {z, nt::cf_from_rational(z)};
    }
    const std::string& spec = *cfg.z_cf;
    nt::ContinuedFraction prefix;
    if (spec == "random") {
        prefix = corpus::random_cf(cfg.seed, cfg.depth);
    } else if (corpus::is_named(spec)) {
        prefix = corpus::named(spec, cfg.depth);
    } else {
        prefix = nt::ContinuedFraction::parse(spec);
    }
    auto realized = corpus::realize(prefix);
    return {std::move(realized.z), std::move(realized.cf)};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream doc;
    int status = kExitOk;
    try {
        Records recs;
        bool json_lines = false;
        switch (cfg.command) {
            case Command::Predict: recs = cmd_predict(cfg); break;
            case Command::Oracle: recs = cmd_oracle(cfg); break;
            case Command::Evolve: recs = cmd_evolve(cfg); break;
            case Command::Verify: {
                bool clean = true;
                recs = cmd_verify(cfg, clean);
                if (!clean) status = kExitDomain;
                break;
            }
            case Command::IetTrace:
                recs = cmd_trace(cfg, err);
                json_lines = true;
                break;
            case Command::Zorich: recs = cmd_zorich(cfg); break;
        }
        write_records(recs, cfg.format, doc, json_lines);
    } catch (const ParseError& e) {
        report_error(err, e);
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        report_error(err, e);
        return kExitDomain;
    }

    if (cfg.output) {
        std::ofstream file(*cfg.output, std::ios::binary);
        if (!file) {
            err << "usage: cannot open output file '" << *cfg.output << "'\n";
            return kExitUsage;
        }
        file << doc.str();
    } else {
        out << doc.str();
    }
    return status;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-gap structure of Kronecker sequences in exact arithmetic", "threegap"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.depth = default_depth();

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

    auto add_common = [&](CLI::App* sub) {
        auto* z = sub->add_option("--z", cfg.z_rational, "rotation number as p/q");
        auto* cf = sub->add_option("--cf", cfg.z_cf, "expansion '0;a1,a2,...' or golden | sqrt2 | e | random");
        z->excludes(cf);
        cf->excludes(z);
        sub->add_option("--depth", cfg.depth, "partials taken from named or random expansions")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for --cf random");
        sub->add_option("--format", cfg.format, "json | csv | table")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output,-o", cfg.output, "write the document to this file");
        sub->add_option("--decimal", cfg.decimal, "add k-digit decimal columns (display only)")->check(CLI::Range(0, 1000));
    };

    auto* predict_cmd = app.add_subcommand("predict", "closed-form gap lengths and counts for N points");
    add_common(predict_cmd);
    predict_cmd->add_option("--n", cfg.n, "number of points")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));

    auto* oracle_cmd = app.add_subcommand("oracle", "measured gaps of {n z mod 1 : n < N}");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--n", cfg.n, "number of points")->required()->check(CLI::Range(std::int64_t{1}, INT64_MAX));

    auto* verify_cmd = app.add_subcommand("verify", "compare prediction and measurement for N in [n-min, n-max]");
    add_common(verify_cmd);
    verify_cmd->add_option("--n-min", cfg.n_min, "first N")->check(CLI::Range(std::int64_t{2}, INT64_MAX));
    verify_cmd->add_option("--n-max", cfg.n_max, "last N")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));

    auto* evolve_cmd = app.add_subcommand("evolve", "prediction table for N = 2 .. n-max");
    add_common(evolve_cmd);
    evolve_cmd->add_option("--n-max", cfg.n_max, "last N")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));

    auto* trace_cmd = app.add_subcommand("iet-trace", "elementary Rauzy-Veech steps");
    add_common(trace_cmd);
    auto* lengths = trace_cmd->add_option("--lengths", cfg.lengths, "lambda_A,lambda_B with the rotation permutation");
    lengths->excludes("--z")->excludes("--cf");
    trace_cmd->add_option("--steps", cfg.steps, "maximum number of steps")->check(CLI::PositiveNumber);

    auto* zorich_cmd = app.add_subcommand("zorich", "accelerated induction quotients and the rebuilt expansion");
    add_common(zorich_cmd);
    zorich_cmd->add_option("--blocks", cfg.blocks, "maximum number of blocks (default: depth)")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (trace_cmd->parsed() && !cfg.lengths && !cfg.z_rational && !cfg.z_cf) {
        err << "usage: iet-trace needs --lengths, --z or --cf\n";
        return kExitUsage;
    }

    if (predict_cmd->parsed()) cfg.command = Command::Predict;
    else if (oracle_cmd->parsed()) cfg.command = Command::Oracle;
    else if (verify_cmd->parsed()) cfg.command = Command::Verify;
    else if (evolve_cmd->parsed()) cfg.command = Command::Evolve;
    else if (trace_cmd->parsed()) cfg.command = Command::IetTrace;
    else cfg.command = Command::Zorich;

    return run(cfg, out, err);
}

}  // namespace threegap::cli
