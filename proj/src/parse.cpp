#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "fpr/presentation.hpp"

namespace fpr {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::map<std::string, int> gen_index;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    std::string parse_name_token() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected a generator name");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer exponent");
        return std::stol(s.substr(start, pos - start));
    }

    // name -> (generator, +1); Name with uppercased first letter -> (generator, -1)
    std::pair<int, int> resolve(const std::string& token, std::size_t at) {
        auto it = gen_index.find(token);
        if (it != gen_index.end()) return {it->second, 1};
        if (std::isupper(static_cast<unsigned char>(token[0]))) {
            std::string lowered = token;
            lowered[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lowered[0])));
            it = gen_index.find(lowered);
            if (it != gen_index.end()) return {it->second, -1};
        }
        throw UnknownGenerator("unknown generator '" + token + "'", at);
    }

    std::vector<Letter> parse_word(char terminator) {
        std::vector<Letter> out;
        bool any = false;
        for (;;) {
            char c = peek();
            if (c == '\0' || c == ',' || c == terminator) break;
            if (c == '*') {
                ++pos;
                continue;
            }
            std::vector<Letter> atom;
            if (c == '(') {
                ++pos;
                atom = parse_word(')');
                if (!eat(')')) fail("expected ')'");
            } else {
                std::size_t at = pos;
                std::string token = parse_name_token();
                auto [g, sign] = resolve(token, at);
                atom.push_back(Letter{g, sign});
            }
            long exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = parse_integer();
            }
            Word w = Word(std::move(atom)).pow(exp);
            out.insert(out.end(), w.letters().begin(), w.letters().end());
            any = true;
        }
        if (!any) fail("expected a word");
        return out;
    }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Parser p(text);
    std::vector<std::string> names;
    for (;;) {
        std::size_t at = p.pos;
        std::string name = p.parse_name_token();
        if (!std::islower(static_cast<unsigned char>(name[0])))
            throw ParseError("generator names must start with a lowercase letter", at);
        if (p.gen_index.count(name)) throw ParseError("duplicate generator '" + name + "'", at);
        p.gen_index[name] = static_cast<int>(names.size());
        names.push_back(name);
        if (p.eat(',')) continue;
        break;
    }
    if (!p.eat(';')) p.fail("expected ';' after the generator list");

    std::vector<Word> relators;
    for (;;) {
        std::size_t at = p.pos;
        Word w(p.parse_word(';'));
        if (w.empty()) throw EmptyRelator("relator at position " + std::to_string(at) +
                                          " freely reduces to the identity");
        relators.push_back(std::move(w));
        if (p.eat(',')) continue;
        break;
    }
    p.skip_ws();
    if (p.pos != p.s.size()) p.fail("trailing input");
    return Presentation(std::move(names), std::move(relators));
}

}  // namespace fpr
