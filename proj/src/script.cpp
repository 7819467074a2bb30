#include "ixmult/script.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "ixmult/errors.hpp"
#include "ixmult/homology.hpp"
#include "ixmult/monomial_ideal.hpp"
#include "ixmult/parser.hpp"
#include "ixmult/scheme.hpp"
#include "ixmult/std_basis.hpp"

namespace ixm {
namespace {

using nlohmann::json;

struct SchemeDecl {
    bool projective;
    Ideal ideal;
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    int line;
};

struct Session {
    RingPtr ring;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, std::vector<Rational>> points;
    std::map<std::string, SchemeDecl> schemes;
    std::vector<Command> commands;
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool is_ident(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError(msg, line, 1);
}

void declare_ring(Session& ss, const std::string& rest, int line) {
    if (ss.ring) fail(line, "a script declares exactly one ring");
    const std::string body = trim(rest);
    if (body.size() < 4 || body.substr(0, 2) != "Q[" || body.back() != ']')
        fail(line, "expected 'ring Q[vars]'");
    std::vector<std::string> names;
    std::string inner = body.substr(2, body.size() - 3);
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inner.find(',', start);
        std::string name = trim(comma == std::string::npos ? inner.substr(start)
                                                           : inner.substr(start, comma - start));
        if (!is_ident(name)) fail(line, "bad variable name '" + name + "'");
        names.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        ss.ring = PolyRing::make(names, MonomialOrder::degrevlex());
    } catch (const StructuralError& e) {
        fail(line, e.what());
    }
}

void require_ring(const Session& ss, int line) {
    if (!ss.ring) fail(line, "no ring declared yet");
}

// name = rhs
std::pair<std::string, std::string> split_decl(const std::string& rest, int line,
                                               const char* kind) {
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos) fail(line, std::string("expected '") + kind + " name = ...'");
    std::string name = trim(rest.substr(0, eq));
    if (!is_ident(name)) fail(line, "bad " + std::string(kind) + " name '" + name + "'");
    return {name, rest.substr(eq + 1)};
}

void declare_ideal(Session& ss, const std::string& rest, int line, int col0) {
    require_ring(ss, line);
    auto [name, rhs] = split_decl(rest, line, "ideal");
    if (ss.ideals.count(name)) fail(line, "ideal '" + name + "' already declared");
    std::vector<Polynomial> gens;
    // commas cannot occur inside the polynomial grammar, so split on them
    std::size_t start = 0;
    const std::size_t base = static_cast<std::size_t>(col0) + (rest.size() - rhs.size());
    while (start <= rhs.size()) {
        std::size_t comma = rhs.find(',', start);
        std::string piece =
            comma == std::string::npos ? rhs.substr(start) : rhs.substr(start, comma - start);
        if (trim(piece).empty()) fail(line, "expected a polynomial");
        gens.push_back(
            parse_polynomial(piece, ss.ring, line, static_cast<int>(base + start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    ss.ideals.emplace(name, Ideal(ss.ring, std::move(gens)));
}

void declare_point(Session& ss, const std::string& rest, int line) {
    require_ring(ss, line);
    auto [name, rhs0] = split_decl(rest, line, "point");
    if (ss.points.count(name)) fail(line, "point '" + name + "' already declared");
    std::string rhs = trim(rhs0);
    if (rhs.size() < 2 || rhs.front() != '(' || rhs.back() != ')')
        fail(line, "expected 'point name = (a, b, ...)'");
    std::string inner = rhs.substr(1, rhs.size() - 2);
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inner.find(',', start);
        std::string piece = trim(comma == std::string::npos ? inner.substr(start)
                                                            : inner.substr(start, comma - start));
        try {
            coords.push_back(parse_rational(piece));
        } catch (const UserError& e) {
            fail(line, std::string(e.what()));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(coords.size()) != ss.ring->nvars())
        fail(line, "point has " + std::to_string(coords.size()) + " coordinates but the ring has " +
                       std::to_string(ss.ring->nvars()) + " variables");
    ss.points.emplace(name, std::move(coords));
}

void declare_scheme(Session& ss, bool projective, const std::string& rest, int line) {
    require_ring(ss, line);
    auto [name, rhs0] = split_decl(rest, line, projective ? "projective" : "affine");
    if (ss.schemes.count(name)) fail(line, "scheme '" + name + "' already declared");
    std::string rhs = trim(rhs0);
    auto it = ss.ideals.find(rhs);
    if (it == ss.ideals.end()) fail(line, "unknown ideal '" + rhs + "'");
    if (projective) {
        try {
            ProjectiveScheme check(it->second);  // homogeneity is checked here
        } catch (const HomogeneityError& e) {
            fail(line, e.what());
        }
    }
    ss.schemes.emplace(name, SchemeDecl{projective, it->second});
}

const SchemeDecl& get_scheme(const Session& ss, const std::string& name, int line) {
    auto it = ss.schemes.find(name);
    if (it == ss.schemes.end()) fail(line, "unknown scheme '" + name + "'");
    return it->second;
}

const Ideal& get_ideal(const Session& ss, const std::string& name, int line) {
    auto it = ss.ideals.find(name);
    if (it == ss.ideals.end()) fail(line, "unknown ideal '" + name + "'");
    return it->second;
}

const std::vector<Rational>& get_point(const Session& ss, const std::string& name, int line) {
    auto it = ss.points.find(name);
    if (it == ss.points.end()) fail(line, "unknown point '" + name + "'");
    return it->second;
}

void expect_args(const Command& cmd, std::size_t n) {
    if (cmd.args.size() != n)
        fail(cmd.line, cmd.verb + " expects " + std::to_string(n) + " arguments, got " +
                           std::to_string(cmd.args.size()));
}

// identifiers must be declared before the command line that uses them
void validate_command(const Session& ss, const Command& cmd) {
    if (cmd.verb == "mult" || cmd.verb == "serre-mult") {
        expect_args(cmd, 3);
        get_scheme(ss, cmd.args[0], cmd.line);
        get_scheme(ss, cmd.args[1], cmd.line);
        get_point(ss, cmd.args[2], cmd.line);
    } else if (cmd.verb == "degree") {
        expect_args(cmd, 1);
        get_scheme(ss, cmd.args[0], cmd.line);
    } else if (cmd.verb == "eliminate") {
        if (cmd.args.size() < 2)
            fail(cmd.line, "eliminate expects an ideal and at least one variable");
        get_ideal(ss, cmd.args[0], cmd.line);
        for (std::size_t i = 1; i < cmd.args.size(); ++i)
            if (!ss.ring->var_index(cmd.args[i]))
                fail(cmd.line, "no variable named '" + cmd.args[i] + "' in " + ss.ring->str());
    } else if (cmd.verb == "bezout") {
        if (cmd.args.size() < 3)
            fail(cmd.line, "bezout expects two schemes and at least one point");
        get_scheme(ss, cmd.args[0], cmd.line);
        get_scheme(ss, cmd.args[1], cmd.line);
        for (std::size_t i = 2; i < cmd.args.size(); ++i) get_point(ss, cmd.args[i], cmd.line);
    } else if (cmd.verb == "tor") {
        expect_args(cmd, 4);
        get_ideal(ss, cmd.args[1], cmd.line);
        get_ideal(ss, cmd.args[2], cmd.line);
        get_point(ss, cmd.args[3], cmd.line);
    }
}

Session parse_session(const std::string& source) {
    Session ss;
    std::istringstream is(source);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string text = trim(raw);
        if (text.empty()) continue;
        std::size_t sp = text.find_first_of(" \t");
        std::string verb = sp == std::string::npos ? text : text.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : text.substr(sp + 1);
        const int col0 = static_cast<int>(raw.find(verb)) + static_cast<int>(verb.size()) + 2;
        if (verb == "ring") {
            declare_ring(ss, rest, line);
        } else if (verb == "ideal") {
            declare_ideal(ss, rest, line, col0);
        } else if (verb == "point") {
            declare_point(ss, rest, line);
        } else if (verb == "affine" || verb == "projective") {
            declare_scheme(ss, verb == "projective", rest, line);
        } else if (verb == "mult" || verb == "serre-mult" || verb == "degree" ||
                   verb == "eliminate" || verb == "bezout" || verb == "tor") {
            require_ring(ss, line);
            Command cmd{verb, split_ws(rest), line};
            validate_command(ss, cmd);
            ss.commands.push_back(std::move(cmd));
        } else {
            fail(line, "unknown directive '" + verb + "'");
        }
    }
    return ss;
}

// ---- command execution ------------------------------------------------------

struct Output {
    std::ostringstream text;
    std::vector<json> records;
};

json record_for(const Command& cmd) {
    json rec;
    rec["command"] = cmd.verb;
    rec["inputs"] = cmd.args;
    rec["warnings"] = json::array();
    return rec;
}

void run_mult(const Session& ss, const Command& cmd, Output& out, bool serre) {
    const SchemeDecl& Y = get_scheme(ss, cmd.args[0], cmd.line);
    const SchemeDecl& Z = get_scheme(ss, cmd.args[1], cmd.line);
    const auto& coords = get_point(ss, cmd.args[2], cmd.line);
    if (Y.projective != Z.projective)
        fail(cmd.line, "schemes '" + cmd.args[0] + "' and '" + cmd.args[1] +
                           "' mix affine and projective");
    json rec = record_for(cmd);
    std::int64_t value = 0;
    bool on_intersection = false;
    std::vector<std::int64_t> lengths;
    std::string point_str;
    if (Y.projective) {
        auto p = RationalPoint::projective(coords);
        point_str = p.str();
        ProjectiveScheme PY(Y.ideal), PZ(Z.ideal);
        if (serre) {
            SerreResult r = projective_serre_multiplicity(PY, PZ, p);
            value = r.profile.chi;
            lengths = r.profile.lengths;
            on_intersection = r.on_intersection;
        } else {
            NaiveResult r = projective_naive_multiplicity(PY, PZ, p);
            value = r.value;
            on_intersection = r.on_intersection;
        }
    } else {
        auto p = RationalPoint::affine(coords);
        point_str = p.str();
        AffineScheme AY(Y.ideal), AZ(Z.ideal);
        if (serre) {
            SerreResult r = serre_multiplicity(AY, AZ, p);
            value = r.profile.chi;
            lengths = r.profile.lengths;
            on_intersection = r.on_intersection;
        } else {
            NaiveResult r = naive_multiplicity(AY, AZ, p);
            value = r.value;
            on_intersection = r.on_intersection;
        }
    }
    rec["result"] = value;
    out.text << cmd.verb << "(" << cmd.args[0] << ", " << cmd.args[1] << ") at " << point_str
             << " = " << value << "\n";
    if (serre) {
        rec["tor_lengths"] = lengths;
        for (std::size_t i = 0; i < lengths.size(); ++i)
            out.text << "  Tor_" << i << " length " << lengths[i] << "\n";
    }
    if (!on_intersection) {
        std::string w = "point " + point_str + " is not on both schemes";
        rec["warnings"].push_back(w);
        out.text << "  warning: " << w << "\n";
    }
    out.records.push_back(std::move(rec));
}

void run_degree(const Session& ss, const Command& cmd, Output& out) {
    const SchemeDecl& Y = get_scheme(ss, cmd.args[0], cmd.line);
    if (!Y.projective) fail(cmd.line, "degree needs a projective scheme");
    json rec = record_for(cmd);
    std::int64_t d = projective_degree(Y.ideal);
    rec["result"] = d;
    out.text << "degree(" << cmd.args[0] << ") = " << d << "\n";
    out.records.push_back(std::move(rec));
}

void run_eliminate(const Session& ss, const Command& cmd, Output& out) {
    const Ideal& I = get_ideal(ss, cmd.args[0], cmd.line);
    std::vector<std::string> vars(cmd.args.begin() + 1, cmd.args.end());
    Ideal E = eliminate(I, vars);
    json rec = record_for(cmd);
    json gens = json::array();
    for (const auto& g : E.gens()) gens.push_back(g.str());
    rec["result"] = json{{"generators", gens}, {"ring", E.ring()->str()}};
    out.text << "eliminate(" << cmd.args[0];
    for (const auto& v : vars) out.text << ", " << v;
    out.text << ") = " << E.str() << " in " << E.ring()->str() << "\n";
    out.records.push_back(std::move(rec));
}

void run_bezout(const Session& ss, const Command& cmd, Output& out) {
    const SchemeDecl& Y = get_scheme(ss, cmd.args[0], cmd.line);
    const SchemeDecl& Z = get_scheme(ss, cmd.args[1], cmd.line);
    if (!Y.projective || !Z.projective) fail(cmd.line, "bezout needs projective schemes");
    std::vector<RationalPoint> pts;
    for (std::size_t i = 2; i < cmd.args.size(); ++i)
        pts.push_back(RationalPoint::projective(get_point(ss, cmd.args[i], cmd.line)));
    BezoutReport rep = bezout_check(ProjectiveScheme(Y.ideal), ProjectiveScheme(Z.ideal), pts);
    json rec = record_for(cmd);
    json mults = json::array();
    for (const auto& [pt, chi_value] : rep.multiplicities)
        mults.push_back(json{{"chi", chi_value}, {"point", pt.str()}});
    rec["result"] = json{{"deg_y", rep.deg_y},       {"deg_z", rep.deg_z},
                         {"matches", rep.matches},   {"multiplicities", mults},
                         {"product", rep.product},   {"total", rep.total}};
    out.text << "bezout(" << cmd.args[0] << ", " << cmd.args[1] << "): deg(" << cmd.args[0]
             << ") = " << rep.deg_y << ", deg(" << cmd.args[1] << ") = " << rep.deg_z
             << ", product = " << rep.product << "\n";
    for (const auto& [pt, chi_value] : rep.multiplicities)
        out.text << "  " << pt.str() << " -> " << chi_value << "\n";
    out.text << "  total = " << rep.total << "; "
             << (rep.matches ? "matches the product" : "DOES NOT match the product") << "\n";
    out.records.push_back(std::move(rec));
}

void run_tor(const Session& ss, const Command& cmd, Output& out) {
    int i = 0;
    try {
        std::size_t used = 0;
        i = std::stoi(cmd.args[0], &used);
        if (used != cmd.args[0].size() || i < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
        fail(cmd.line, "tor index must be a non-negative integer, got '" + cmd.args[0] + "'");
    }
    const Ideal& I = get_ideal(ss, cmd.args[1], cmd.line);
    const Ideal& J = get_ideal(ss, cmd.args[2], cmd.line);
    auto p = RationalPoint::affine(get_point(ss, cmd.args[3], cmd.line));
    RingMap shift = localize_at_point(ss.ring, p).second;
    Length t = tor_length(i, shift.apply(I), shift.apply(J));
    if (!t)
        throw NotIsolatedError("tor: infinite length at " + p.str() +
                               " (the intersection is not isolated)");
    json rec = record_for(cmd);
    rec["result"] = *t;
    out.text << "tor_" << i << "(" << cmd.args[1] << ", " << cmd.args[2] << ") at " << p.str()
             << " = " << *t << "\n";
    out.records.push_back(std::move(rec));
}

}  // namespace

std::string run_script(const std::string& source, bool machine_format) {
    Session ss = parse_session(source);
    Output out;
    for (const auto& cmd : ss.commands) {
        if (cmd.verb == "mult") {
            run_mult(ss, cmd, out, false);
        } else if (cmd.verb == "serre-mult") {
            run_mult(ss, cmd, out, true);
        } else if (cmd.verb == "degree") {
            run_degree(ss, cmd, out);
        } else if (cmd.verb == "eliminate") {
            run_eliminate(ss, cmd, out);
        } else if (cmd.verb == "bezout") {
            run_bezout(ss, cmd, out);
        } else if (cmd.verb == "tor") {
            run_tor(ss, cmd, out);
        } else {
            throw InternalError("unhandled command verb '" + cmd.verb + "'");
        }
    }
    if (!machine_format) return out.text.str();
    std::ostringstream os;
    for (const auto& rec : out.records) os << rec.dump() << "\n";
    return os.str();
}

}  // namespace ixm
