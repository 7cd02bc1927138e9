// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion also enforces its wall-clock budget.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "udcodes/codefile.hpp"
#include "udcodes/codes.hpp"
#include "udcodes/factorization.hpp"
#include "udcodes/freealg.hpp"
#include "udcodes/generators.hpp"
#include "udcodes/monoid.hpp"
#include "udcodes/theorem.hpp"

using namespace udc;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool check(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

const Alphabet kBinary("01");

Code binary_code(const std::vector<std::string>& texts) {
    return Code::from_strings(kBinary, texts);
}

// criterion 1: classical McMillan over full alphabets and random prefix codes
bool criterion1(std::string& detail) {
    static const std::string digits = "0123456789";
    for (unsigned r = 1; r <= 5; ++r) {
        Alphabet a(digits.substr(0, r));
        if (!check(kraft_sum(Code::full_alphabet(a)) == 1, detail,
                   "K(A^1) != 1 for r = " + std::to_string(r)))
            return false;
    }
    SplitMix64 seeds(20260823);
    for (int i = 0; i < 1000; ++i) {
        GenConfig cfg{.seed = seeds.next(),
                      .alphabet = (i % 2 == 0) ? Alphabet("01") : Alphabet("012"),
                      .min_size = 1,
                      .max_size = 8,
                      .max_len = 8};
        Code c = random_prefix_code(cfg);
        if (!check(is_uniquely_decipherable(c).decipherable, detail, "prefix code not UD"))
            return false;
        if (!check(kraft_sum(c) <= 1, detail, "prefix code Kraft sum exceeds 1")) return false;
    }
    return true;
}

// criterion 2: extended theorem on 500 composed pairs
bool criterion2(std::string& detail) {
    SplitMix64 seeds(77007);
    for (int i = 0; i < 500; ++i) {
        GenConfig cfg{.seed = seeds.next(), .max_size = 5, .max_len = 4, .max_blocks = 3};
        auto [c, d] = random_composed_pair(cfg);
        ExtendedVerdict v = check_extended_mcmillan(c, d);
        if (!check(v.holds, detail,
                   "K(C) > K(D) on seed iteration " + std::to_string(i)))
            return false;
    }
    return true;
}

// criterion 3: Sardinas-Patterson agrees with brute force on the small universe
bool criterion3(std::string& detail) {
    auto universe = oracle::small_binary_universe(3, 3);
    for (const Code& c : universe) {
        auto brute = oracle::brute_force_collision(c, 6);
        UdVerdict v = is_uniquely_decipherable(c);
        if (!check(v.decipherable == !brute.has_value(), detail,
                   "verdict disagrees with oracle for a code of size " +
                       std::to_string(c.size())))
            return false;
        if (!v.decipherable &&
            !check(witness_self_verifies(c, *v.witness), detail, "witness fails to self-verify"))
            return false;
    }
    detail = std::to_string(universe.size()) + " codes checked";
    return true;
}

// criterion 4: full proof traces on the fixed instances
bool criterion4(std::string& detail) {
    struct Instance {
        Code c, d;
        unsigned k;
    };
    std::vector<Instance> instances;
    Code c1 = binary_code({"010", "1100", "011"});
    Code d1 = binary_code({"0", "10", "11"});
    for (unsigned k : {1u, 2u}) instances.push_back({c1, d1, k});
    Code c2 = binary_code({"0", "10", "11"});
    Code d2 = Code::full_alphabet(kBinary);
    for (unsigned k : {1u, 2u, 3u}) instances.push_back({c2, d2, k});

    for (const auto& inst : instances) {
        ProofTrace t = run_proof_trace(inst.c, inst.d, inst.k);
        if (!check(t.all_ok, detail, "trace reported failure")) return false;
        for (const auto& lvl : t.levels) {
            BigInt expected = ipow(BigInt(inst.d.size()), lvl.l);
            if (!check(BigInt(lvl.w1_count + lvl.w2_count) == expected, detail,
                       "partition cardinality off at l = " + std::to_string(lvl.l)))
                return false;
        }
        if (!check(t.eval3 == t.eval5 + t.eval6, detail, "evaluation identity fails"))
            return false;
        if (!check(t.eval5 >= 0, detail, "eval(5) negative")) return false;
        if (!check(t.eval6 == rational_pow(kraft_sum(inst.c), inst.k), detail,
                   "eval(6) != K(C)^k"))
            return false;
        if (!check(t.ineq7.holds && t.ineq8_applicable && t.ineq8.holds, detail,
                   "inequality (7)/(8) failed"))
            return false;
    }
    // the spec's spot value: ({0,10,11},{0,1},k=3) gives 1 <= 4
    ProofTrace t = run_proof_trace(c2, d2, 3);
    if (!check(t.ineq7.lhs == 1 && t.ineq7.mid == 4, detail, "spot check 1 <= 4 failed"))
        return false;
    return true;
}

// criterion 5: decode bijection cardinalities on the criterion-4 instances
bool criterion5(std::string& detail) {
    Code c1 = binary_code({"010", "1100", "011"});
    Code d1 = binary_code({"0", "10", "11"});
    Code c2 = binary_code({"0", "10", "11"});
    Code d2 = Code::full_alphabet(kBinary);

    struct Instance {
        Code c, d;
        unsigned k;
    };
    std::vector<Instance> instances{{c1, d1, 1}, {c1, d1, 2}, {c2, d2, 1}, {c2, d2, 2},
                                    {c2, d2, 3}};
    for (const auto& inst : instances) {
        if (!check(decode_bijection_check(inst.c, inst.d, inst.k), detail,
                   "bijection check failed at k = " + std::to_string(inst.k)))
            return false;
        unsigned m = depth_m(inst.c, inst.d);
        std::size_t total_w1 = 0;
        for (unsigned l = inst.k; l <= m * inst.k; ++l) {
            auto [w1, w2] = partition_Wl(inst.c, inst.d, inst.k, l);
            total_w1 += w1.size();
        }
        std::size_t expected = 1;
        for (unsigned i = 0; i < inst.k; ++i) expected *= inst.c.size();
        if (!check(total_w1 == expected, detail,
                   "|union W_l1| = " + std::to_string(total_w1) + ", expected " +
                       std::to_string(expected)))
            return false;
    }
    return true;
}

// criterion 6: randomized algebra laws, 10000 checks total
bool criterion6(std::string& detail) {
    SplitMix64 rng(31337);
    Code c = binary_code({"010", "1100", "011"});
    Code d = binary_code({"0", "10", "11"});

    auto random_word = [&]() {
        unsigned len = static_cast<unsigned>(rng.in_range(1, 4));
        std::string t;
        for (unsigned i = 0; i < len; ++i)
            t += kBinary.symbol(static_cast<unsigned>(rng.below(2)));
        return Word(kBinary, t);
    };
    auto random_poly = [&]() {
        NCPolynomial p;
        unsigned terms = static_cast<unsigned>(rng.below(4));
        for (unsigned t = 0; t < terms; ++t) {
            Monomial m;
            for (unsigned i = static_cast<unsigned>(rng.below(3)); i > 0; --i)
                m.indets.push_back(random_word());
            p.add_term(m, BigRational(static_cast<long>(rng.in_range(0, 8)) - 4,
                                      static_cast<long>(rng.in_range(1, 4))));
        }
        return p;
    };
    auto random_c_poly = [&]() {
        NCPolynomial p;
        for (unsigned t = static_cast<unsigned>(rng.in_range(1, 3)); t > 0; --t) {
            Monomial m;
            for (unsigned i = static_cast<unsigned>(rng.below(3)); i > 0; --i)
                m.indets.push_back(c.words()[rng.below(c.size())]);
            p.add_term(m, BigRational(static_cast<long>(rng.in_range(1, 4))));
        }
        return p;
    };

    int checks = 0;
    while (checks < 10000) {
        NCPolynomial p = random_poly(), q = random_poly();
        if (evaluate(p + q, kBinary) != evaluate(p, kBinary) + evaluate(q, kBinary))
            return check(false, detail, "additivity of evaluate fails");
        if (evaluate(p * q, kBinary) != evaluate(p, kBinary) * evaluate(q, kBinary))
            return check(false, detail, "multiplicativity of evaluate fails");
        checks += 2;

        Word x = random_word(), y = random_word();
        if (x != y) {
            NCPolynomial xp = NCPolynomial::indeterminate(x);
            NCPolynomial yp = NCPolynomial::indeterminate(y);
            if (xp * yp == yp * xp) return check(false, detail, "x*y == y*x for distinct x, y");
            ++checks;
        }

        NCPolynomial pc = random_c_poly(), qc = random_c_poly();
        if (rewrite_mod_ideal(pc * qc, c, d) !=
            rewrite_mod_ideal(pc, c, d) * rewrite_mod_ideal(qc, c, d))
            return check(false, detail, "rewrite is not multiplicative");
        if (evaluate(rewrite_mod_ideal(pc, c, d), kBinary) != evaluate(pc, kBinary))
            return check(false, detail, "evaluate after rewrite changed the value");
        checks += 2;
    }
    detail = std::to_string(checks) + " checks";
    return true;
}

// criterion 7: Kraft converse round trip on 200 seeded multisets
bool criterion7(std::string& detail) {
    SplitMix64 rng(909090);
    int accepted = 0, rejected = 0;
    for (int i = 0; i < 200; ++i) {
        unsigned r = static_cast<unsigned>(rng.in_range(2, 3));
        Alphabet a(std::string("012").substr(0, r));
        std::vector<unsigned> lengths;
        for (unsigned n = static_cast<unsigned>(rng.in_range(1, 8)); n > 0; --n)
            lengths.push_back(static_cast<unsigned>(rng.in_range(1, 6)));
        BigRational sum = 0;
        for (unsigned l : lengths) sum += kraft_weight(r, l);

        if (sum <= 1) {
            Code code = construct_prefix_code(lengths, a);
            std::vector<unsigned> got;
            for (const Word& w : code) got.push_back(static_cast<unsigned>(w.length()));
            std::sort(got.begin(), got.end());
            std::sort(lengths.begin(), lengths.end());
            if (!check(got == lengths, detail, "length multiset mismatch")) return false;
            if (!check(is_prefix_code(code), detail, "output is not a prefix code"))
                return false;
            if (!check(kraft_sum(code) == sum, detail, "Kraft sum mismatch")) return false;
            ++accepted;
        } else {
            try {
                construct_prefix_code(lengths, a);
                return check(false, detail, "Kraft violation not rejected");
            } catch (const KraftViolationError&) {
                ++rejected;
            }
        }
    }
    detail = std::to_string(accepted) + " constructed, " + std::to_string(rejected) + " rejected";
    return true;
}

// criterion 8: CLI machine reports are byte-identical across two runs
bool criterion8(std::string& detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "udcodes_acceptance";
    fs::create_directories(dir);
    auto fixture = [&](const std::string& name, const std::string& content) {
        fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    };
    std::string c = fixture("c.code", "alphabet: 01\n010\n1100\n011\n");
    std::string d = fixture("d.code", "alphabet: 01\n0\n10\n11\n");
    std::string nonud = fixture("nonud.code", "alphabet: 01\n0\n01\n10\n");
    std::string bad = fixture("bad.code", "no alphabet line\n");

    struct Fixture {
        std::string args;
        int expect_status;
    };
    std::vector<Fixture> fixtures{
        {"--machine kraft " + d, 0},
        {"--machine check-ud " + d, 0},
        {"--machine check-ud " + nonud, 1},
        {"--machine check-ud " + bad, 2},
        {"--machine factorize " + d + " 1100", 0},
        {"--machine prefix-from-lengths 1 2 2 --r 2", 0},
        {"--machine prefix-from-lengths 1 1 2 --r 2", 1},
        {"--machine check-extended " + c + " " + d, 0},
        {"--machine check-extended " + nonud + " " + d, 1},
        {"--machine prove-trace " + c + " " + d + " --k 2", 0},
        {"--machine prove-trace " + c + " " + d + " --k 2 --max-mk 2", 2},
        {"--machine random prefix --seed 7 --size 4", 0},
        {"--machine random pair --seed 7", 0},
        {"--machine random nonud --seed 7", 0},
    };

    auto run = [&](const std::string& args) -> std::pair<int, std::string> {
        std::string cmd = std::string(UDCODES_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return {-1, ""};
        std::string out;
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
        return {WEXITSTATUS(pclose(pipe)), out};
    };

    for (const auto& f : fixtures) {
        auto [s1, o1] = run(f.args);
        auto [s2, o2] = run(f.args);
        if (!check(s1 == f.expect_status, detail,
                   "unexpected exit status " + std::to_string(s1) + " for: " + f.args))
            return false;
        if (!check(s1 == s2 && o1 == o2, detail, "non-deterministic output for: " + f.args))
            return false;
        if (!check(o1.starts_with("udcodes-report v1\n"), detail,
                   "missing report header for: " + f.args))
            return false;
    }
    detail = std::to_string(fixtures.size()) + " fixtures, two runs each";
    return true;
}

} // namespace

int main() {
    criterion(1, "classical McMillan on full alphabets and 1000 random prefix codes", 10,
              criterion1);
    criterion(2, "extended theorem on 500 composed pairs", 30, criterion2);
    criterion(3, "UD decider vs brute-force oracle on the small universe", 60, criterion3);
    criterion(4, "proof traces on the fixed instances", 30, criterion4);
    criterion(5, "decode bijection cardinalities", 10, criterion5);
    criterion(6, "randomized algebra laws", 20, criterion6);
    criterion(7, "Kraft converse round trip", 10, criterion7);
    criterion(8, "CLI determinism and exit statuses", 10, criterion8);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
