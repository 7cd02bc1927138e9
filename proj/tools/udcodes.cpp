// Command-line front end for the variable-length code toolkit.
//
// Exit statuses: 0 = success / property holds, 1 = property fails or a
// theorem precondition is not met, 2 = usage, parse or bound errors.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udcodes/codefile.hpp"
#include "udcodes/codes.hpp"
#include "udcodes/factorization.hpp"
#include "udcodes/freealg.hpp"
#include "udcodes/generators.hpp"
#include "udcodes/monoid.hpp"
#include "udcodes/rational.hpp"
#include "udcodes/theorem.hpp"

namespace {

using namespace udc;

constexpr const char* kReportHeader = "udcodes-report v1";

/// Accumulates key/value lines; in machine mode the output is exactly the
/// versioned key/value document, byte-stable for identical inputs.
class Report {
  public:
    explicit Report(bool machine) : machine_(machine) {}

    void kv(const std::string& key, const std::string& value) {
        lines_.emplace_back(key, value);
    }
    void kv(const std::string& key, const BigRational& q) {
        kv(key, to_fraction_string(q));
        kv(key + "~", to_decimal_string(q));
    }
    void kv(const std::string& key, bool b) { kv(key, std::string(b ? "true" : "false")); }
    void kv(const std::string& key, std::uint64_t n) { kv(key, std::to_string(n)); }

    void human(const std::string& text) {
        if (!machine_) std::cout << text << "\n";
    }

    void emit() const {
        if (!machine_) return;
        std::cout << kReportHeader << "\n";
        for (const auto& [k, v] : lines_) std::cout << k << ": " << v << "\n";
    }

    bool machine() const { return machine_; }

  private:
    bool machine_;
    std::vector<std::pair<std::string, std::string>> lines_;
};

std::string seq_text(const WordSequence& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += " ";
        out += ws[i].text();
    }
    return out;
}

Alphabet default_alphabet(unsigned r) {
    static const std::string digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    if (r < 1 || r > digits.size())
        throw InvalidValueError("alphabet size must be between 1 and " +
                                std::to_string(digits.size()));
    return Alphabet(digits.substr(0, r));
}

int cmd_kraft(const std::string& file, Report& rep) {
    Code code = parse_code_file(file);
    BigRational k = kraft_sum(code);
    rep.kv("command", std::string("kraft"));
    rep.kv("alphabet", code.alphabet().symbols());
    rep.kv("words", static_cast<std::uint64_t>(code.size()));
    rep.kv("kraft", k);
    rep.human("K = " + to_fraction_string(k) + " (~ " + to_decimal_string(k) + ")");
    return 0;
}

int cmd_check_ud(const std::string& file, Report& rep) {
    Code code = parse_code_file(file);
    UdVerdict v = is_uniquely_decipherable(code);
    rep.kv("command", std::string("check-ud"));
    rep.kv("decipherable", v.decipherable);
    if (v.decipherable) {
        rep.human("uniquely decipherable");
        return 0;
    }
    rep.kv("witness.word", v.witness->word.text());
    rep.kv("witness.parse1", seq_text(v.witness->parse1));
    rep.kv("witness.parse2", seq_text(v.witness->parse2));
    rep.human("NOT uniquely decipherable");
    rep.human("witness: \"" + v.witness->word.text() + "\" = (" + seq_text(v.witness->parse1) +
              ") = (" + seq_text(v.witness->parse2) + ")");
    return 1;
}

int cmd_factorize(const std::string& file, const std::string& word_text, std::size_t max_parses,
                  Report& rep) {
    Code code = parse_code_file(file);
    Word w(code.alphabet(), word_text);
    auto parses = all_factorizations(w, code, max_parses);
    UdVerdict v = is_uniquely_decipherable(code);
    rep.kv("command", std::string("factorize"));
    rep.kv("word", w.text());
    rep.kv("decipherable", v.decipherable);
    rep.kv("parses", static_cast<std::uint64_t>(parses.size()));
    for (std::size_t i = 0; i < parses.size(); ++i) {
        rep.kv("parse." + std::to_string(i), seq_text(parses[i]));
        rep.human("(" + seq_text(parses[i]) + ")");
    }
    if (parses.empty()) rep.human("no factorization");
    if (!v.decipherable) rep.human("note: the code is not uniquely decipherable");
    return parses.empty() ? 1 : 0;
}

int cmd_prefix_from_lengths(const std::vector<unsigned>& lengths, unsigned r,
                            const std::string& alphabet_symbols, Report& rep) {
    Alphabet a = alphabet_symbols.empty() ? default_alphabet(r) : Alphabet(alphabet_symbols);
    Code code = construct_prefix_code(lengths, a);
    rep.kv("command", std::string("prefix-from-lengths"));
    rep.kv("alphabet", a.symbols());
    rep.kv("kraft", kraft_sum(code));
    std::ostringstream body;
    write_code_file(body, code);
    rep.kv("codefile", std::string("|"));
    int i = 0;
    std::istringstream lines(body.str());
    for (std::string line; std::getline(lines, line);)
        rep.kv("codefile." + std::to_string(i++), line);
    if (!rep.machine()) write_code_file(std::cout, code);
    return 0;
}

int cmd_check_extended(const std::string& file_c, const std::string& file_d, Report& rep) {
    Code c = parse_code_file(file_c);
    Code d = parse_code_file(file_d);
    rep.kv("command", std::string("check-extended"));
    try {
        ExtendedVerdict v = check_extended_mcmillan(c, d);
        rep.kv("kraft.c", v.kraft_c);
        rep.kv("kraft.d", v.kraft_d);
        rep.kv("holds", v.holds);
        for (const auto& [w, f] : v.report.parses)
            rep.kv("parse." + w.text(), seq_text(*f));
        rep.human("K(C) = " + to_fraction_string(v.kraft_c) +
                  (v.holds ? " <= " : " > ") + to_fraction_string(v.kraft_d) + " = K(D)");
        return v.holds ? 0 : 1;
    } catch (const NotUdError& e) {
        rep.kv("error", std::string("not-ud"));
        rep.kv("error.code", e.code_name);
        rep.kv("witness.word", e.witness.word.text());
        rep.kv("witness.parse1", seq_text(e.witness.parse1));
        rep.kv("witness.parse2", seq_text(e.witness.parse2));
        rep.human(std::string("precondition failed: ") + e.what());
        return 1;
    } catch (const SubcodeRelationError& e) {
        rep.kv("error", std::string("subcode-relation"));
        for (std::size_t i = 0; i < e.unparseable.size(); ++i)
            rep.kv("unparseable." + std::to_string(i), e.unparseable[i].text());
        rep.human(std::string("precondition failed: ") + e.what());
        return 1;
    }
}

int cmd_prove_trace(const std::string& file_c, const std::string& file_d, unsigned k,
                    const TheoremLimits& limits, Report& rep) {
    Code c = parse_code_file(file_c);
    Code d = parse_code_file(file_d);
    rep.kv("command", std::string("prove-trace"));
    rep.kv("k", static_cast<std::uint64_t>(k));
    try {
        ProofTrace t = run_proof_trace(c, d, k, limits);
        rep.kv("m", static_cast<std::uint64_t>(t.m));
        rep.kv("kraft.c", t.kraft_c);
        rep.kv("kraft.d", t.kraft_d);
        for (const auto& lvl : t.levels) {
            std::string p = "l." + std::to_string(lvl.l) + ".";
            rep.kv(p + "w1", static_cast<std::uint64_t>(lvl.w1_count));
            rep.kv(p + "w2", static_cast<std::uint64_t>(lvl.w2_count));
            rep.kv(p + "eval.w1", lvl.eval_w1);
            rep.kv(p + "eval.w2", lvl.eval_w2);
        }
        rep.kv("expr.1", true); // per-level expansion checks all passed
        rep.kv("expr.2", true);
        rep.kv("expr.3", t.sum_split_ok);
        rep.kv("expr.4", t.congruence_ok); // congruence of (4) with (6)
        rep.kv("expr.5", t.eval5_nonnegative);
        rep.kv("expr.6", t.eval_identity_ok);
        rep.kv("expr.7", t.ineq7.holds);
        rep.kv("expr.8", t.ineq8_applicable ? t.ineq8.holds : false);
        rep.kv("eval.3", t.eval3);
        rep.kv("eval.4", t.eval4);
        rep.kv("eval.5", t.eval5);
        rep.kv("eval.6", t.eval6);
        rep.kv("ineq7.lhs", t.ineq7.lhs);
        rep.kv("ineq7.rhs", t.ineq7.mid);
        if (t.ineq8_applicable) {
            rep.kv("ineq8.lhs", t.ineq8.lhs);
            rep.kv("ineq8.mid", t.ineq8.mid);
            rep.kv("ineq8.rhs", t.ineq8.rhs);
        }
        rep.kv("all-ok", t.all_ok);
        rep.human("m = " + std::to_string(t.m) + ", all expression checks OK");
        rep.human("K(C)^k = " + to_fraction_string(t.ineq7.lhs) +
                  " <= " + to_fraction_string(t.ineq7.mid));
        return 0;
    } catch (const NotUdError& e) {
        rep.kv("error", std::string("not-ud"));
        rep.kv("error.code", e.code_name);
        rep.kv("witness.word", e.witness.word.text());
        rep.human(std::string("precondition failed: ") + e.what());
        return 1;
    } catch (const SubcodeRelationError& e) {
        rep.kv("error", std::string("subcode-relation"));
        rep.human(std::string("precondition failed: ") + e.what());
        return 1;
    }
}

int cmd_random(const std::string& kind, const GenConfig& cfg, Report& rep) {
    rep.kv("command", std::string("random"));
    rep.kv("kind", kind);
    rep.kv("seed", cfg.seed);
    auto emit_code = [&](const std::string& label, const Code& code) {
        std::ostringstream body;
        write_code_file(body, code);
        int i = 0;
        std::istringstream lines(body.str());
        for (std::string line; std::getline(lines, line);)
            rep.kv(label + "." + std::to_string(i++), line);
        if (!rep.machine()) {
            std::cout << "# " << label << "\n";
            write_code_file(std::cout, code);
        }
    };
    if (kind == "prefix") {
        emit_code("code", random_prefix_code(cfg));
    } else if (kind == "pair") {
        auto [c, d] = random_composed_pair(cfg);
        emit_code("d", d);
        emit_code("c", c);
    } else if (kind == "nonud") {
        emit_code("code", random_non_ud_code(cfg));
    } else {
        throw InvalidValueError("unknown kind '" + kind + "' (expected prefix|pair|nonud)");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for uniquely decipherable codes and Kraft sums"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "emit a machine-readable key/value report");

    std::string file, file_c, file_d, word_text, alphabet_symbols, kind;
    std::vector<unsigned> lengths;
    unsigned r = 2, k = 1;
    TheoremLimits limits;
    GenConfig gen;
    std::uint64_t seed = 0;
    unsigned size = 0;

    auto* kraft = app.add_subcommand("kraft", "exact Kraft sum of a code file");
    kraft->add_option("file", file)->required();

    auto* ud = app.add_subcommand("check-ud", "unique-decipherability test with witness");
    ud->add_option("file", file)->required();

    auto* fact = app.add_subcommand("factorize", "all factorizations of a word over a code");
    fact->add_option("file", file)->required();
    fact->add_option("word", word_text)->required();
    fact->add_option("--max-parses", limits.max_parses);

    auto* pfl = app.add_subcommand("prefix-from-lengths",
                                   "canonical prefix code with the given lengths");
    pfl->add_option("lengths", lengths)->required();
    pfl->add_option("--r", r, "alphabet size (default 2)");
    pfl->add_option("--alphabet", alphabet_symbols, "explicit alphabet symbols");

    auto* ext = app.add_subcommand("check-extended", "extended inequality K(C) <= K(D)");
    ext->add_option("file_c", file_c)->required();
    ext->add_option("file_d", file_d)->required();

    auto* trace = app.add_subcommand("prove-trace", "run and verify the full polynomial argument");
    trace->add_option("file_c", file_c)->required();
    trace->add_option("file_d", file_d)->required();
    trace->add_option("--k", k, "exponent (default 1)");
    trace->add_option("--max-terms", limits.max_terms);
    trace->add_option("--max-parses", limits.max_parses);
    trace->add_option("--max-tuples", limits.max_tuples);
    trace->add_option("--max-mk", limits.max_mk);

    auto* rnd = app.add_subcommand("random", "generate code files (prefix|pair|nonud)");
    rnd->add_option("kind", kind)->required();
    rnd->add_option("--seed", seed);
    rnd->add_option("--size", size, "exact code size");
    rnd->add_option("--min-size", gen.min_size);
    rnd->add_option("--max-size", gen.max_size);
    rnd->add_option("--max-len", gen.max_len);
    rnd->add_option("--max-blocks", gen.max_blocks);
    rnd->add_option("--alphabet", alphabet_symbols);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep(machine);
    int status = 2;
    try {
        if (kraft->parsed()) status = cmd_kraft(file, rep);
        else if (ud->parsed()) status = cmd_check_ud(file, rep);
        else if (fact->parsed()) status = cmd_factorize(file, word_text, limits.max_parses, rep);
        else if (pfl->parsed()) status = cmd_prefix_from_lengths(lengths, r, alphabet_symbols, rep);
        else if (ext->parsed()) status = cmd_check_extended(file_c, file_d, rep);
        else if (trace->parsed()) status = cmd_prove_trace(file_c, file_d, k, limits, rep);
        else if (rnd->parsed()) {
            gen.seed = seed;
            if (!alphabet_symbols.empty()) gen.alphabet = Alphabet(alphabet_symbols);
            if (size > 0) gen.min_size = gen.max_size = size;
            status = cmd_random(kind, gen, rep);
        }
    } catch (const ParseError& e) {
        rep.kv("error", std::string("parse"));
        rep.kv("error.line", static_cast<std::uint64_t>(e.line));
        rep.kv("error.message", std::string(e.what()));
        rep.human(std::string("parse error (line ") + std::to_string(e.line) + "): " + e.what());
        status = 2;
    } catch (const KraftViolationError& e) {
        rep.kv("error", std::string("kraft-violation"));
        rep.kv("error.sum", e.exact_sum);
        rep.human(std::string("error: ") + e.what());
        status = 1;
    } catch (const BoundExceededError& e) {
        rep.kv("error", std::string("bound-exceeded"));
        rep.kv("error.message", std::string(e.what()));
        rep.human(std::string("error: ") + e.what());
        status = 2;
    } catch (const Error& e) {
        rep.kv("error", std::string("error"));
        rep.kv("error.message", std::string(e.what()));
        rep.human(std::string("error: ") + e.what());
        status = 2;
    }
    rep.emit();
    return status;
}
