#include "halg/algio.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace halg {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int gen_index(const AlgebraSpec& spec, const std::string& name, int line) {
    for (size_t i = 0; i < spec.gens.size(); ++i)
        if (spec.gens[i].name == name) return static_cast<int>(i);
    fail(line, "unknown generator '" + name + "'");
}

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    std::string number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(line, "expected a number");
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
            ++pos;
        if (pos == start) fail(line, std::string("unexpected character '") + s[pos] + "'");
        return s.substr(start, pos - start);
    }
};

}  // namespace

Field parse_field(const std::string& name) {
    if (name == "Q") return Field::rationals();
    if (name.size() > 1 && name[0] == 'F') {
        unsigned long p = std::stoul(name.substr(1));
        return Field::prime(p);
    }
    throw ParseError("unknown field '" + name + "' (expected Q or F<p>)");
}

std::vector<std::pair<Monomial, Scalar>> parse_poly(const AlgebraSpec& spec,
                                                    const std::string& expr, int line) {
    Lexer lx{expr, 0, line};
    std::map<Monomial, Scalar> acc;
    bool first = true;
    while (!lx.done()) {
        Scalar coeff(1);
        if (lx.peek() == '+') {
            ++lx.pos;
        } else if (lx.peek() == '-') {
            ++lx.pos;
            coeff = -1;
        } else if (!first) {
            fail(line, "expected '+' or '-' between terms");
        }
        first = false;

        Monomial mono;
        bool expect_factor = true;
        while (expect_factor) {
            if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                std::string num = lx.number();
                if (lx.peek() == '/') {
                    ++lx.pos;
                    num += "/" + lx.number();
                }
                Scalar c(num);
                c.canonicalize();
                coeff *= c;
            } else {
                int g = gen_index(spec, lx.name(), line);
                int power = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    power = std::stoi(lx.number());
                }
                for (int k = 0; k < power; ++k) mono.push_back(g);
            }
            if (lx.peek() == '*') {
                ++lx.pos;
            } else {
                expect_factor = false;
            }
        }
        Scalar sign = canonicalize(spec, mono);
        coeff *= sign;
        if (!spec.field.is_zero(coeff)) {
            auto [it, fresh] = acc.try_emplace(mono, Scalar(0));
            it->second = spec.field.add(it->second, coeff);
            if (spec.field.is_zero(it->second)) acc.erase(it);
        }
    }
    return {acc.begin(), acc.end()};
}

AlgebraFile parse_algebra(std::istream& in) {
    AlgebraFile f;
    // differentials are parsed after all generators are known
    std::vector<std::pair<int, std::pair<std::string, std::string>>> dlines;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        auto words = split_ws(s);
        if (words.empty()) continue;
        const std::string& key = words[0];
        if (key == "field") {
            if (words.size() != 2) fail(line, "expected: field Q | F<p>");
            try {
                f.spec.field = parse_field(words[1]);
            } catch (const Error& e) {
                fail(line, e.what());
            }
        } else if (key == "flavor") {
            if (words.size() != 2 || (words[1] != "commutative" && words[1] != "associative"))
                fail(line, "expected: flavor commutative | associative");
            f.spec.flavor = (words[1] == "commutative") ? Flavor::Commutative : Flavor::Associative;
        } else if (key == "generator") {
            if (words.size() != 3) fail(line, "expected: generator <name> <degree>");
            for (const auto& g : f.spec.gens)
                if (g.name == words[1]) fail(line, "duplicate generator '" + words[1] + "'");
            try {
                f.spec.gens.push_back({words[1], std::stoi(words[2])});
            } catch (const std::exception&) {
                fail(line, "bad degree '" + words[2] + "'");
            }
        } else if (key == "d") {
            auto eq = s.find('=');
            if (words.size() < 3 || eq == std::string::npos)
                fail(line, "expected: d <generator> = <polynomial>");
            dlines.push_back({line, {words[1], s.substr(eq + 1)}});
        } else if (key == "max_weight" || key == "max_degree") {
            if (words.size() != 2) fail(line, "expected: " + key + " <n>");
            int v = 0;
            try {
                v = std::stoi(words[1]);
            } catch (const std::exception&) {
                fail(line, "bad bound '" + words[1] + "'");
            }
            if (v < 0) fail(line, key + " must be nonnegative");
            (key == "max_weight" ? f.bounds.max_weight : f.bounds.max_degree) = v;
            (key == "max_weight" ? f.has_weight : f.has_degree) = true;
        } else {
            fail(line, "unknown directive '" + key + "'");
        }
    }
    for (const auto& [ln, d] : dlines) {
        int g = gen_index(f.spec, d.first, ln);
        auto val = parse_poly(f.spec, d.second, ln);
        if (!val.empty()) f.spec.dgen[g] = std::move(val);
    }
    if (f.spec.gens.empty()) throw ParseError("no generators declared");
    return f;
}

AlgebraFile parse_algebra_string(const std::string& text) {
    std::istringstream in(text);
    return parse_algebra(in);
}

}  // namespace halg
