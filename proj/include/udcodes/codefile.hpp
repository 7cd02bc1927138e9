#ifndef UDCODES_CODEFILE_HPP
#define UDCODES_CODEFILE_HPP

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "udcodes/codes.hpp"
#include "udcodes/monoid.hpp"

namespace udc {

// Code file format:
//   # comment lines and blank lines are ignored
//   alphabet: <symbols>      (first content line; distinct single characters)
//   <one codeword per following non-blank line>
// Whitespace-only lines, duplicate codewords and characters outside the
// alphabet are parse errors carrying the line number.

inline Code parse_code_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_alphabet = false;
    std::string alphabet_symbols;
    std::vector<std::string> texts;
    std::vector<int> text_lines;

    auto is_blank = [](const std::string& s) { return s.empty(); };
    auto is_comment = [](const std::string& s) { return !s.empty() && s[0] == '#'; };
    auto has_space = [](const std::string& s) {
        return std::any_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); });
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || is_comment(line)) continue;
        if (!have_alphabet) {
            const std::string prefix = "alphabet: ";
            if (!line.starts_with(prefix))
                throw ParseError("expected 'alphabet: <symbols>' as first content line", lineno);
            alphabet_symbols = line.substr(prefix.size());
            if (alphabet_symbols.empty())
                throw ParseError("alphabet declaration is empty", lineno);
            have_alphabet = true;
            continue;
        }
        if (has_space(line)) throw ParseError("codeword contains whitespace", lineno);
        if (std::find(texts.begin(), texts.end(), line) != texts.end())
            throw ParseError("duplicate codeword '" + line + "'", lineno);
        texts.push_back(line);
        text_lines.push_back(lineno);
    }
    if (!have_alphabet) throw ParseError("missing alphabet declaration", lineno);

    try {
        Alphabet alphabet(alphabet_symbols);
        std::vector<Word> words;
        for (std::size_t i = 0; i < texts.size(); ++i) {
            try {
                words.emplace_back(alphabet, texts[i]);
            } catch (const InvalidValueError& e) {
                throw ParseError(e.what(), text_lines[i]);
            }
        }
        return Code(alphabet, std::move(words));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
    }
}

inline Code parse_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    return parse_code_file(in);
}

inline Code parse_code_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

inline void write_code_file(std::ostream& out, const Code& code) {
    out << "alphabet: " << code.alphabet().symbols() << "\n";
    for (const Word& w : code) out << w.text() << "\n";
}

} // namespace udc

#endif
