#include "tq/spec_parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "tq/errors.hpp"

namespace tq {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw SpecParseError(
                std::string("expected '") + c + "' at position " + std::to_string(pos), pos);
        ++pos;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    double number() {
        skip_ws();
        if (pos >= text.size())
            throw SpecParseError("expected number at position " + std::to_string(pos), pos);
        const std::string rest(text.substr(pos));
        char* end = nullptr;
        const double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str() || std::isnan(v))
            throw SpecParseError("expected number at position " + std::to_string(pos), pos);
        pos += static_cast<std::size_t>(end - rest.c_str());
        return v;
    }

    std::vector<double> numbers(std::size_t count) {
        std::vector<double> out;
        out.push_back(number());
        while (out.size() < count) {
            expect(',');
            out.push_back(number());
        }
        return out;
    }

    void expect_end() {
        if (!eof())
            throw SpecParseError(
                "unexpected trailing input at position " + std::to_string(pos), pos);
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
    Cursor cur{text};
    const std::string head = cur.word();
    if (head.empty())
        throw SpecParseError("expected state name at position " + std::to_string(cur.pos),
                             cur.pos);

    StateSpec spec;
    if (head == "e" || head == "g" || head == "s" || head == "a") {
        cur.expect_end();
        if (head == "e") spec = CollectiveE{};
        else if (head == "g") spec = CollectiveG{};
        else if (head == "s") spec = CollectiveS{};
        else spec = CollectiveA{};
    } else if (head == "file") {
        cur.expect(':');
        std::string path(text.substr(cur.pos));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front())))
            path.erase(path.begin());
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
            path.pop_back();
        if (path.empty())
            throw SpecParseError("expected file path at position " + std::to_string(cur.pos),
                                 cur.pos);
        spec = RawFile{path};
    } else if (head == "product") {
        cur.expect(':');
        const auto v = cur.numbers(4);
        cur.expect_end();
        spec = Product{v[0], v[1], v[2], v[3]};
    } else if (head == "gibbs") {
        cur.expect(':');
        const auto v = cur.numbers(1);
        cur.expect_end();
        spec = Gibbs{v[0]};
    } else if (head == "maxent") {
        cur.expect(':');
        const auto v = cur.numbers(3);
        cur.expect_end();
        spec = MaxEnt{v[0], v[1], v[2]};
    } else if (head == "xclass") {
        cur.expect(':');
        const auto v = cur.numbers(2);
        cur.expect_end();
        spec = XClass{v[0], v[1]};
    } else if (head == "eta") {
        cur.expect(':');
        const auto v = cur.numbers(1);
        cur.expect_end();
        spec = EtaState{v[0]};
    } else {
        throw SpecParseError("unknown state '" + head + "'", 0);
    }
    validate_spec(spec);
    return spec;
}

std::string spec_to_string(const StateSpec& spec) {
    struct Printer {
        std::string operator()(const CollectiveE&) const { return "e"; }
        std::string operator()(const CollectiveG&) const { return "g"; }
        std::string operator()(const CollectiveS&) const { return "s"; }
        std::string operator()(const CollectiveA&) const { return "a"; }
        std::string operator()(const Product& p) const {
            return "product:" + fmt(p.theta_a) + "," + fmt(p.phi_a) + "," + fmt(p.theta_b) +
                   "," + fmt(p.phi_b);
        }
        std::string operator()(const Gibbs& g) const { return "gibbs:" + fmt(g.t0_over_omega); }
        std::string operator()(const MaxEnt& m) const {
            return "maxent:" + fmt(m.a) + "," + fmt(m.theta1) + "," + fmt(m.theta2);
        }
        std::string operator()(const XClass& x) const {
            return "xclass:" + fmt(x.x) + "," + fmt(x.z);
        }
        std::string operator()(const EtaState& e) const { return "eta:" + fmt(e.eta); }
        std::string operator()(const RawFile& r) const { return "file:" + r.path; }
    };
    return std::visit(Printer{}, spec);
}

}  // namespace tq
