// lrcex: exact Littlewood-Richardson / parabolic Kostka / quiver
// semi-invariant calculator with table, JSON and CSV output.

#include <charconv>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrcex/bigint.hpp"
#include "lrcex/families.hpp"
#include "lrcex/lr.hpp"
#include "lrcex/partition.hpp"
#include "lrcex/polyfit.hpp"
#include "lrcex/quiver.hpp"

using json = nlohmann::ordered_json;
using namespace lrcex;

namespace {

struct Check {
    std::string name, lhs, rhs;
    bool pass;
};

struct Output {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<Check> checks;
};

/// Thrown when an enumeration would exceed the --timeout-boxes guard.
struct GuardRefusal {
    std::string message;
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(const BigRational& v) { return v.str(); }

Rectangle parse_rectangle(const std::string& text) {
    auto parse_ll = [&](const std::string& s) {
        long long v = 0;
        auto* last = s.data() + s.size();
        auto [p, ec] = std::from_chars(s.data(), last, v);
        if (ec != std::errc() || p != last)
            throw std::invalid_argument("rectangle: cannot parse '" + text + "'");
        return v;
    };
    auto caret = text.find('^');
    long long w = parse_ll(text.substr(0, caret));
    long long h = caret == std::string::npos ? 1 : parse_ll(text.substr(caret + 1));
    if (w < 0 || h < 0) throw std::invalid_argument("rectangle: negative side in '" + text + "'");
    return Rectangle{w, h};
}

std::vector<long long> parse_dimvec(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        long long v = 0;
        auto* last = tok.data() + tok.size();
        auto [p, ec] = std::from_chars(tok.data(), last, v);
        if (ec != std::errc() || p != last)
            throw std::invalid_argument("dimension vector: cannot parse '" + text + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "null";
    return v.dump();
}

/// Joins an array of scalars; nested structures fall back to compact JSON.
std::string cell_text(const json& v) {
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += ' ';
            out += scalar_text(x);
        }
        return out;
    }
    return scalar_text(v);
}

void print_rows_table(const json& rows) {
    if (rows.empty()) return;
    std::vector<std::string> header;
    for (const auto& [k, v] : rows.front().items()) header.push_back(k);
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& k : header) line.push_back(row.contains(k) ? cell_text(row[k]) : "");
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            std::cout << line[c];
            if (c + 1 < line.size())
                std::cout << std::string(width[c] - line[c].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    emit(header);
    for (const auto& line : cells) emit(line);
}

void print_table(const Output& out, long long elapsed_ms) {
    std::cout << "command: " << out.command << "\n";
    for (const auto& [k, v] : out.inputs.items())
        std::cout << k << ": " << cell_text(v) << "\n";
    for (const auto& [k, v] : out.result.items()) {
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            if (v.front().contains("render")) {
                std::cout << k << ":\n";
                for (const auto& f : v)
                    std::cout << f["render"].get<std::string>() << "\n";
            } else {
                std::cout << k << ":\n";
                print_rows_table(v);
            }
        } else {
            std::cout << k << ": " << cell_text(v) << "\n";
        }
    }
    for (const auto& c : out.checks)
        std::cout << "check " << c.name << ": " << c.lhs << " vs " << c.rhs
                  << (c.pass ? "  ok" : "  FAIL") << "\n";
    std::cout << "elapsed_ms: " << elapsed_ms << "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_csv(const Output& out) {
    // the first array-of-objects in the result is the row set; otherwise the
    // scalar entries form a single row
    const json* rows = nullptr;
    for (const auto& [k, v] : out.result.items())
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            rows = &v;
            break;
        }
    auto emit = [](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            std::cout << csv_escape(line[c]);
            if (c + 1 < line.size()) std::cout << ',';
        }
        std::cout << "\n";
    };
    if (rows) {
        std::vector<std::string> header;
        for (const auto& [k, v] : rows->front().items())
            if (k != "render") header.push_back(k);
        emit(header);
        for (const auto& row : *rows) {
            std::vector<std::string> line;
            for (const auto& k : header) line.push_back(row.contains(k) ? cell_text(row[k]) : "");
            emit(line);
        }
    } else {
        std::vector<std::string> header, line;
        for (const auto& [k, v] : out.result.items()) {
            header.push_back(k);
            line.push_back(cell_text(v));
        }
        emit(header);
        emit(line);
    }
    for (const auto& c : out.checks)
        std::cerr << "check " << c.name << ": " << c.lhs << " vs " << c.rhs
                  << (c.pass ? "  ok" : "  FAIL") << "\n";
}

void print_json(const Output& out, long long elapsed_ms) {
    json doc;
    doc["command"] = out.command;
    doc["inputs"] = out.inputs;
    doc["result"] = out.result;
    json checks = json::array();
    for (const auto& c : out.checks)
        checks.push_back(json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    doc["checks"] = checks;
    doc["elapsed_ms"] = elapsed_ms;
    std::cout << doc.dump(2) << "\n";
}

// ----------------------------------------------------------------- commands

struct Settings {
    std::string format = "table";
    int threads = 1;
    long long timeout_boxes = 60;
    bool force = false;
};

void guard_boxes(long long boxes, const Settings& s) {
    if (boxes > s.timeout_boxes && !s.force)
        throw GuardRefusal{"enumeration over " + std::to_string(boxes) +
                           " boxes exceeds --timeout-boxes=" + std::to_string(s.timeout_boxes) +
                           "; pass --force to proceed"};
}

Output cmd_lr(const std::string& outer, const std::string& inner1, const std::string& inner2,
              bool enumerate, bool oracle, const Settings& s) {
    Partition lam = parse_partition(outer), mu = parse_partition(inner1),
              nu = parse_partition(inner2);
    Output out{"lr"};
    out.inputs = {{"outer", lam.str()}, {"inner1", mu.str()}, {"inner2", nu.str()}};
    BigInt c = lr_coefficient(lam, mu, nu);
    out.result["value"] = str(c);
    if (enumerate || oracle) {
        bool contained = lam.contains(mu);
        guard_boxes(contained ? lam.size() - mu.size() : 0, s);
        std::vector<LRFilling> fills;
        if (contained) fills = enumerate_lr_fillings(SkewShape(lam, mu), nu);
        if (oracle)
            out.checks.push_back({"enumeration-count", std::to_string(fills.size()), str(c),
                                  BigInt(fills.size()) == c});
        if (enumerate) {
            json arr = json::array();
            for (const auto& f : fills)
                arr.push_back(json{{"rows", f.rows}, {"render", f.render()}});
            out.result["fillings"] = arr;
        }
    }
    return out;
}

Output cmd_multi_lr(const std::string& gamma, const std::vector<std::string>& factor_strs) {
    Partition g = parse_partition(gamma);
    std::vector<Partition> factors;
    json echoed = json::array();
    for (const auto& fs : factor_strs) {
        factors.push_back(parse_partition(fs));
        echoed.push_back(factors.back().str());
    }
    Output out{"multi-lr"};
    out.inputs = {{"gamma", g.str()}, {"factors", echoed}};
    out.result["value"] = str(multi_lr_coefficient(g, factors));
    return out;
}

Output cmd_kostka(const std::string& lambda, const std::vector<std::string>& rect_strs) {
    Partition lam = parse_partition(lambda);
    RectangleSequence rects;
    json echoed = json::array();
    for (const auto& rs : rect_strs) {
        rects.push_back(parse_rectangle(rs));
        echoed.push_back(std::to_string(rects.back().width) + "^" +
                         std::to_string(rects.back().height));
    }
    Output out{"kostka"};
    out.inputs = {{"lambda", lam.str()}, {"rects", echoed}};
    out.result["value"] = str(parabolic_kostka(lam, rects));
    return out;
}

Output cmd_counterexample(const std::string& family, long long from, long long to, long long N,
                          bool verify_direct, const Settings& s) {
    Family fam = family == "kostka" ? Family::Kostka : Family::Okounkov;
    Output out{"counterexample"};
    out.inputs = {{"family", family}, {"from", from}, {"to", to}, {"N", N}};
    json rows = json::array();
    if (N == 1) {
        ReportOptions opts;
        opts.family = fam;
        opts.verify_direct = verify_direct;
        opts.threads = s.threads;
        for (const auto& row : counterexample_report(from, to, opts)) {
            rows.push_back(json{{"n", row.n},
                                {"value_prev", "1"},
                                {"value_mid", str(row.value1)},
                                {"value_next", str(row.value2)},
                                {"lhs", str(row.record.lhs)},
                                {"rhs", str(row.record.rhs)},
                                {"holds", row.record.holds}});
            std::string at = " n=" + std::to_string(row.n);
            out.checks.push_back({"closed-form-stretch1" + at, str(row.value1), str(row.closed1),
                                  row.value1 == row.closed1});
            out.checks.push_back({"closed-form-stretch2" + at, str(row.value2), str(row.closed2),
                                  row.value2 == row.closed2});
            if (row.si_dim_ok)
                out.checks.push_back({"quiver-si-dim" + at, *row.si_dim_ok ? "agree" : "disagree",
                                      "agree", *row.si_dim_ok});
            if (row.direct_ok)
                out.checks.push_back({"direct-count" + at, *row.direct_ok ? "agree" : "disagree",
                                      "agree", *row.direct_ok});
        }
    } else {
        for (long long n = from; n <= to; ++n) {
            const BigInt prev = family_stretch_value(n, N - 1, s.threads);
            const BigInt mid = family_stretch_value(n, N, s.threads);
            const BigInt next = family_stretch_value(n, N + 1, s.threads);
            auto rec = log_concavity_check(
                [&](long long k) { return k == N - 1 ? prev : (k == N ? mid : next); }, N);
            rows.push_back(json{{"n", n},
                                {"value_prev", str(prev)},
                                {"value_mid", str(mid)},
                                {"value_next", str(next)},
                                {"lhs", str(rec.lhs)},
                                {"rhs", str(rec.rhs)},
                                {"holds", rec.holds}});
        }
    }
    out.result["rows"] = rows;
    return out;
}

Output cmd_quiver_euler(const std::string& preset, long long l, const std::string& alpha,
                        const std::string& beta) {
    Output out{"quiver euler"};
    if (!preset.empty()) {
        QuiverWithPair qp = preset == "t434-pair" ? t434_quiver_pair() : k4_star_quiver_pair();
        out.inputs = {{"preset", preset}};
        out.result["value"] = euler_form(qp.quiver, qp.pair.eps2, qp.pair.eps1);
        out.result["eps1"] = qp.pair.eps1;
        out.result["eps2"] = qp.pair.eps2;
        out.result["l"] = qp.pair.l;
        return out;
    }
    DimVector a = parse_dimvec(alpha), b = parse_dimvec(beta);
    out.inputs = {{"l", l}, {"alpha", a}, {"beta", b}};
    out.result["value"] = euler_form(kronecker_quiver(l), a, b);
    return out;
}

Output cmd_quiver_si_dim(long long l, long long n, long long m, const Settings& s) {
    Output out{"quiver si-dim"};
    out.inputs = {{"l", l}, {"n", n}, {"m", m}};
    out.result["value"] = str(kronecker_si_dim(l, n, m, s.threads));
    return out;
}

Output cmd_quiver_reciprocity(long long n, long long m, const Settings& s) {
    Output out{"quiver reciprocity"};
    out.inputs = {{"n", n}, {"m", m}};
    Weight sigma = weight_of(kronecker_quiver(3), WeightSide::Left, {n, n});
    BigInt lhs = kronecker_si_dim(3, n, m, s.threads);
    BigInt rhs = kronecker_si_dim_general(3, {m, 2 * m}, {sigma[0], sigma[1]}, s.threads);
    out.result["si_dim"] = str(lhs);
    out.result["si_dim_general"] = str(rhs);
    out.result["sigma"] = sigma;
    out.checks.push_back({"reciprocity", str(lhs), str(rhs), lhs == rhs});
    return out;
}

Output cmd_quiver_embed_check(long long n, long long m, const Settings& s) {
    Output out{"quiver embed-check"};
    out.inputs = {{"n", n}, {"m", m}};
    BigInt side_q = kronecker_si_dim(3, n, m, s.threads);
    auto fam = okounkov_family(n);
    BigInt side_lr = lr_coefficient(fam.lambda.stretched(m), fam.mu.stretched(m),
                                    fam.mu.stretched(m));
    out.result["si_dim"] = str(side_q);
    out.result["lr"] = str(side_lr);
    out.checks.push_back({"embed-agreement", str(side_q), str(side_lr), side_q == side_lr});
    return out;
}

Output cmd_stretch(const std::string& outer, const std::string& inner1, const std::string& inner2,
                   long long nmax) {
    Partition lam = parse_partition(outer), mu = parse_partition(inner1),
              nu = parse_partition(inner2);
    Output out{"stretch"};
    out.inputs = {{"outer", lam.str()}, {"inner1", mu.str()}, {"inner2", nu.str()},
                  {"nmax", nmax}};
    auto table = stretched_values(lam, mu, nu, nmax);
    json values = json::array();
    for (const auto& v : table.values) values.push_back(str(v));
    out.result["values"] = values;
    auto fit = fit_polynomial(table.values);
    if (fit) {
        out.result["degree"] = fit->degree;
        json coeffs = json::array();
        for (const auto& c : fit->coefficients) coeffs.push_back(str(c));
        out.result["coefficients"] = coeffs;
        out.result["constant_term"] = str(fit->constant_term());
        out.checks.push_back({"constant-term-one", str(fit->constant_term()), "1",
                              fit->constant_term() == 1});
    } else {
        out.result["degree"] = nullptr;
        out.result["note"] = "cannot confirm degree";
    }
    return out;
}

Output cmd_horn(long long n, bool list) {
    Output out{"horn"};
    out.inputs = {{"n", n}};
    BigInt count = horn_count_two_rows(n);
    BigInt closed = binomial(n + 5, 5);
    out.result["value"] = str(count);
    out.checks.push_back({"closed-form", str(count), str(closed), count == closed});
    if (list) {
        json rows = json::array();
        for (const auto& t : horn_triples_two_rows(n))
            rows.push_back(json{{"first", t.triple[0].str()},
                                {"second", t.triple[1].str()},
                                {"third", t.triple[2].str()},
                                {"monomial", t.monomial}});
        out.result["triples"] = rows;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LR coefficients, parabolic Kostka numbers and quiver semi-invariants"};
    app.require_subcommand(1);

    Settings settings;
    app.add_option("--format", settings.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", settings.threads, "worker threads for quiver sums")
        ->envname("LRCEX_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--timeout-boxes", settings.timeout_boxes,
                   "largest skew-box count enumerated without --force")
        ->capture_default_str();
    app.add_flag("--force", settings.force, "run enumerations past --timeout-boxes");

    std::string outer, inner1, inner2, gamma, lambda, family = "okounkov", preset, alpha, beta;
    std::vector<std::string> factors, rects;
    bool enumerate = false, oracle = false, verify_direct = false, list = false;
    long long n = 0, m = 1, l = 3, N = 1, nmax = 6;
    std::optional<long long> from, to, single_n;

    auto* lr = app.add_subcommand("lr", "one LR coefficient, optionally with its fillings");
    lr->add_option("--outer", outer)->required();
    lr->add_option("--inner1", inner1);
    lr->add_option("--inner2", inner2);
    lr->add_flag("--enumerate", enumerate, "print every filling");
    lr->add_flag("--oracle", oracle, "cross-check the count by enumeration");

    auto* mlr = app.add_subcommand("multi-lr", "multi-factor LR coefficient");
    mlr->add_option("--gamma", gamma)->required();
    mlr->add_option("--factor", factors, "factor partition (repeatable)")->required();

    auto* kk = app.add_subcommand("kostka", "parabolic Kostka number against rectangles");
    kk->add_option("--lambda", lambda)->required();
    kk->add_option("--rect", rects, "rectangle width^height (repeatable)")->required();

    auto* cex = app.add_subcommand("counterexample", "log-concavity report over a range of n");
    cex->add_option("--family", family)->check(CLI::IsMember({"okounkov", "kostka"}));
    cex->add_option("--n", single_n, "single n (same as --from n --to n)");
    cex->add_option("--from", from);
    cex->add_option("--to", to);
    cex->add_option("--N", N, "stretch index of the comparison")->check(CLI::PositiveNumber);
    cex->add_flag("--verify-direct", verify_direct,
                  "also recount small n directly from fillings");

    auto* qv = app.add_subcommand("quiver", "Euler forms and semi-invariant dimensions");
    qv->require_subcommand(1);
    auto* qe = qv->add_subcommand("euler", "Euler form value");
    qe->add_option("--preset", preset)->check(CLI::IsMember({"t434-pair", "k4star-pair"}));
    qe->add_option("--l", l, "arrows of the Kronecker quiver");
    qe->add_option("--alpha", alpha);
    qe->add_option("--beta", beta);
    auto* qs = qv->add_subcommand("si-dim", "semi-invariant dimension for theta(l)");
    qs->add_option("--l", l)->capture_default_str();
    qs->add_option("--n", n)->required();
    qs->add_option("--m", m)->capture_default_str();
    auto* qr = qv->add_subcommand("reciprocity", "both sides of the weight-swap identity");
    qr->add_option("--n", n)->required();
    qr->add_option("--m", m)->capture_default_str();
    auto* qc = qv->add_subcommand("embed-check", "quiver sum against the direct LR count");
    qc->add_option("--n", n)->required();
    qc->add_option("--m", m)->capture_default_str();

    auto* st = app.add_subcommand("stretch", "stretched values with a polynomial fit");
    st->add_option("--outer", outer)->required();
    st->add_option("--inner1", inner1);
    st->add_option("--inner2", inner2);
    st->add_option("--nmax", nmax, "largest stretch factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* hn = app.add_subcommand("horn", "two-row Horn triples for the target (n,n)");
    hn->add_option("--n", n)->required();
    hn->add_flag("--list", list, "list every triple with its monomial");

    for (auto* sub : {lr, mlr, kk, cex, qv, st, hn, qe, qs, qr, qc}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        Output out;
        if (lr->parsed()) {
            out = cmd_lr(outer, inner1, inner2, enumerate, oracle, settings);
        } else if (mlr->parsed()) {
            out = cmd_multi_lr(gamma, factors);
        } else if (kk->parsed()) {
            out = cmd_kostka(lambda, rects);
        } else if (cex->parsed()) {
            long long lo = single_n ? *single_n : from.value_or(1);
            long long hi = single_n ? *single_n : to.value_or(lo);
            out = cmd_counterexample(family, lo, hi, N, verify_direct, settings);
        } else if (qe->parsed()) {
            if (preset.empty() && (alpha.empty() || beta.empty()))
                throw std::invalid_argument("quiver euler: need --preset or --alpha/--beta");
            out = cmd_quiver_euler(preset, l, alpha, beta);
        } else if (qs->parsed()) {
            out = cmd_quiver_si_dim(l, n, m, settings);
        } else if (qr->parsed()) {
            out = cmd_quiver_reciprocity(n, m, settings);
        } else if (qc->parsed()) {
            out = cmd_quiver_embed_check(n, m, settings);
        } else if (st->parsed()) {
            out = cmd_stretch(outer, inner1, inner2, nmax);
        } else if (hn->parsed()) {
            out = cmd_horn(n, list);
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

        if (settings.format == "json")
            print_json(out, elapsed);
        else if (settings.format == "csv")
            print_csv(out);
        else
            print_table(out, elapsed);

        for (const auto& c : out.checks)
            if (!c.pass) return 1;
        return 0;
    } catch (const GuardRefusal& g) {
        std::cerr << "refused: " << g.message << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
