#include "degtab/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace degtab {

namespace {

bool valid_name(const std::string& s)
{
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string idx(std::initializer_list<std::int64_t> parts)
{
    std::string out;
    for (auto p : parts) out += "_" + std::to_string(p);
    return out;
}

}  // namespace

std::size_t IlpModel::add_variable(std::string name, VarKind kind, std::int64_t lower, std::optional<std::int64_t> upper)
{
    if (!valid_name(name)) throw std::invalid_argument("bad variable name '" + name + "'");
    if (index_.count(name)) throw std::invalid_argument("duplicate variable name '" + name + "'");
    if (upper && *upper < lower) throw std::invalid_argument("empty domain for '" + name + "'");
    index_[name] = variables_.size();
    variables_.push_back({std::move(name), kind, lower, upper});
    return variables_.size() - 1;
}

void IlpModel::add_constraint(std::string name, std::vector<Term> terms, Sense sense, std::int64_t rhs)
{
    if (!valid_name(name)) throw std::invalid_argument("bad constraint name '" + name + "'");
    for (const auto& t : terms) {
        if (t.var >= variables_.size()) throw std::out_of_range("constraint refers to unknown variable");
    }
    constraints_.push_back({std::move(name), std::move(terms), sense, rhs});
}

std::optional<std::size_t> IlpModel::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t IlpModel::at(const std::string& name) const
{
    if (auto i = find(name)) return *i;
    throw std::out_of_range("unknown variable '" + name + "'");
}

IlpModel build_blp(int K, int L, int T, std::int64_t entry_bound)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");
    const std::int64_t E = 2 * entry_bound;
    const int rows = K + T, cols = L + T;
    const std::int64_t lambda = std::min(K, L) + T;

    IlpModel m;
    std::vector<std::size_t> U(E + 1);
    for (std::int64_t e = 0; e <= E; ++e) U[e] = m.add_binary("U" + idx({e}));
    auto R = [&](int r, std::int64_t e) { return m.at("R" + idx({r, e})); };
    auto C = [&](int c, std::int64_t e) { return m.at("C" + idx({c, e})); };
    auto M = [&](int r, int c, std::int64_t e) { return m.at("M" + idx({r, c, e})); };
    for (int r = 1; r <= rows; ++r)
        for (std::int64_t e = 0; e <= E; ++e) m.add_binary("R" + idx({r, e}));
    for (int c = 1; c <= cols; ++c)
        for (std::int64_t e = 0; e <= E; ++e) m.add_binary("C" + idx({c, e}));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            for (std::int64_t e = 0; e <= E; ++e) m.add_binary("M" + idx({r, c, e}));

    for (std::int64_t e = 0; e <= E; ++e) m.objective.terms.push_back({U[e], 1});

    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            for (std::int64_t e = 0; e <= E; ++e)
                m.add_constraint("lbU" + idx({r, c, e}), {{M(r, c, e), 1}, {U[e], -1}}, Sense::LessEqual, 0);

    for (std::int64_t e = 0; e <= E; ++e) {
        for (int r0 = 1; r0 <= K; ++r0) {
            for (int c0 = 1; c0 <= L; ++c0) {
                std::vector<Term> t;
                for (int r = 1; r <= rows; ++r)
                    for (int c = 1; c <= cols; ++c) t.push_back({M(r, c, e), (r == r0 && c == c0) ? lambda : 1});
                m.add_constraint("decode" + idx({e, r0, c0}), std::move(t), Sense::LessEqual, lambda);
            }
        }
    }

    for (std::int64_t e = 0; e <= E; ++e) {
        std::vector<Term> tr, tc;
        for (int r = 1; r <= rows; ++r) tr.push_back({R(r, e), 1});
        for (int c = 1; c <= cols; ++c) tc.push_back({C(c, e), 1});
        m.add_constraint("rowdistinct" + idx({e}), std::move(tr), Sense::LessEqual, 1);
        m.add_constraint("coldistinct" + idx({e}), std::move(tc), Sense::LessEqual, 1);
    }

    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            std::vector<Term> t;
            for (std::int64_t e = 0; e <= E; ++e) t.push_back({M(r, c, e), 1});
            m.add_constraint("M1" + idx({r, c}), std::move(t), Sense::Equal, 1);
        }
    }
    for (int r = 1; r <= rows; ++r) {
        std::vector<Term> t;
        for (std::int64_t e = 0; e <= E; ++e) t.push_back({R(r, e), 1});
        m.add_constraint("R1" + idx({r}), std::move(t), Sense::Equal, 1);
    }
    for (int c = 1; c <= cols; ++c) {
        std::vector<Term> t;
        for (std::int64_t e = 0; e <= E; ++e) t.push_back({C(c, e), 1});
        m.add_constraint("C1" + idx({c}), std::move(t), Sense::Equal, 1);
    }
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            std::vector<Term> t;
            for (std::int64_t e = 1; e <= E; ++e) t.push_back({M(r, c, e), e});
            for (std::int64_t e = 1; e <= E; ++e) {
                t.push_back({R(r, e), -e});
                t.push_back({C(c, e), -e});
            }
            m.add_constraint("sum" + idx({r, c}), std::move(t), Sense::Equal, 0);
        }
    }

    // value(next) - value(prev) >= 1
    auto sorted_cut = [&](const std::string& name, auto var, int i) {
        std::vector<Term> t;
        for (std::int64_t e = 1; e <= E; ++e) {
            t.push_back({var(i, e), e});
            t.push_back({var(i + 1, e), -e});
        }
        m.add_constraint(name + idx({i}), std::move(t), Sense::LessEqual, -1);
    };
    for (int r = 1; r < K; ++r) sorted_cut("sortap", R, r);
    for (int r = K + 1; r < K + T; ++r) sorted_cut("sortas", R, r);
    for (int c = 1; c < L; ++c) sorted_cut("sortbp", C, c);
    for (int c = L + 1; c < L + T; ++c) sorted_cut("sortbs", C, c);
    m.add_constraint("zeroalpha", {{R(1, 0), 1}, {R(K + 1, 0), 1}}, Sense::Equal, 1);
    m.add_constraint("zerobeta", {{C(1, 0), 1}, {C(L + 1, 0), 1}}, Sense::Equal, 1);
    return m;
}

IlpModel build_ilp_fixed(int K, int L, int T, bool tight_link)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    if (K < L) std::swap(K, L);
    const std::int64_t k = K, l = L, t = T, kl = k * l;
    const std::int64_t v_hi = t * (kl + t) + k - 1;
    const std::int64_t e_hi = (t + 1) * (kl + t) + k - 2;
    const std::int64_t f_hi = kl + k + t - 2;

    std::vector<std::int64_t> beta;
    for (std::int64_t c = 0; c < l; ++c) beta.push_back(k * c);
    for (std::int64_t s = 0; s < t; ++s) beta.push_back(kl + s);

    IlpModel m;
    const auto N = m.add_variable("N", VarKind::Integer, kl, kl + (e_hi - kl + 1));
    auto U = [&](std::int64_t e) { return m.at("U" + idx({e})); };
    auto S = [&](std::int64_t r, std::int64_t s) { return m.at("S" + idx({r, s})); };
    auto R = [&](std::int64_t r) { return m.at("R" + idx({r})); };
    for (std::int64_t e = kl; e <= e_hi; ++e) m.add_binary("U" + idx({e}));
    for (std::int64_t r = k + 1; r <= k + t; ++r) m.add_variable("R" + idx({r}), VarKind::Integer, kl, v_hi);
    for (std::int64_t r = k + 1; r <= k + t; ++r)
        for (std::int64_t s = kl; s <= v_hi; ++s) m.add_binary("S" + idx({r, s}));

    m.objective.terms.push_back({N, 1});

    std::vector<Term> defn{{N, 1}};
    for (std::int64_t e = kl; e <= e_hi; ++e) defn.push_back({U(e), -1});
    m.add_constraint("defN", std::move(defn), Sense::Equal, kl);
    for (std::int64_t e = kl; e <= f_hi; ++e) m.add_constraint("fixU" + idx({e}), {{U(e), 1}}, Sense::Equal, 1);

    for (std::int64_t r = k + 1; r <= k + t; ++r) {
        for (std::int64_t s = kl; s <= v_hi; ++s) {
            if (tight_link) {
                for (std::size_t c = 0; c < beta.size(); ++c) {
                    m.add_constraint("link" + idx({r, s, static_cast<std::int64_t>(c + 1)}),
                                     {{S(r, s), 1}, {U(s + beta[c]), -1}}, Sense::LessEqual, 0);
                }
            } else {
                std::vector<Term> terms{{S(r, s), l + t}};
                for (auto b : beta) terms.push_back({U(s + b), -1});
                m.add_constraint("link" + idx({r, s}), std::move(terms), Sense::LessEqual, 0);
            }
        }
    }
    for (std::int64_t r = k + 1; r <= k + t; ++r) {
        std::vector<Term> one, val;
        for (std::int64_t s = kl; s <= v_hi; ++s) {
            one.push_back({S(r, s), 1});
            val.push_back({S(r, s), s});
        }
        val.push_back({R(r), -1});
        m.add_constraint("S1" + idx({r}), std::move(one), Sense::Equal, 1);
        m.add_constraint("SR" + idx({r}), std::move(val), Sense::Equal, 0);
    }
    for (std::int64_t i = k + 1; i < k + t; ++i) {
        m.add_constraint("orderlo" + idx({i}), {{R(i), 1}, {R(i + 1), -1}}, Sense::LessEqual, -1);
        m.add_constraint("orderhi" + idx({i}), {{R(i + 1), 1}, {R(i), -1}}, Sense::LessEqual, kl + t);
    }
    return m;
}

IlpCountFormulas ilp_fixed_count_formulas(int K, int L, int T)
{
    if (K < L) std::swap(K, L);
    const std::int64_t k = K, l = L, t = T;
    return {t * t * k * l + t * t * t + t * t + t * k + 2 * t + k,
            t * t * k * l + t * t * t - t * k * l - t * k + 5 * t + k - 3};
}

namespace {

constexpr std::size_t kLineWidth = 255;

std::string term_text(std::int64_t coef, const std::string& name, bool first)
{
    std::string s;
    if (coef < 0) s = first ? "-" : "- ";
    else if (!first) s = "+ ";
    const auto mag = coef < 0 ? -coef : coef;
    if (mag != 1) s += std::to_string(mag) + " ";
    return s + name;
}

// Appends tokens separated by spaces, breaking lines before kLineWidth.
class Wrapper {
public:
    explicit Wrapper(std::string& out, std::string indent) : out_(out), indent_(std::move(indent)) {}

    void token(const std::string& tok)
    {
        if (line_ > 0 && line_ + 1 + tok.size() > kLineWidth) {
            out_ += "\n" + indent_;
            line_ = indent_.size();
            out_ += tok;
            line_ += tok.size();
            return;
        }
        if (line_ > 0) {
            out_ += ' ';
            ++line_;
        }
        out_ += tok;
        line_ += tok.size();
    }

    void end()
    {
        out_ += '\n';
        line_ = 0;
    }

private:
    std::string& out_;
    std::string indent_;
    std::size_t line_ = 0;
};

const char* sense_text(Sense s)
{
    switch (s) {
    case Sense::LessEqual: return "<=";
    case Sense::GreaterEqual: return ">=";
    case Sense::Equal: return "=";
    }
    return "=";
}

}  // namespace

std::string emit_lp_text(const IlpModel& model)
{
    const auto& vars = model.variables();
    std::vector<std::size_t> order(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a].name < vars[b].name; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (vars[order[i]].name == vars[order[i - 1]].name) throw std::invalid_argument("name collision: " + vars[order[i]].name);
    }
    {
        std::vector<std::string> cnames;
        for (const auto& c : model.constraints()) cnames.push_back(c.name);
        std::sort(cnames.begin(), cnames.end());
        if (auto it = std::adjacent_find(cnames.begin(), cnames.end()); it != cnames.end()) {
            throw std::invalid_argument("name collision: " + *it);
        }
    }

    std::string out;
    out += model.objective.minimize ? "Minimize\n" : "Maximize\n";
    {
        Wrapper w(out, "   ");
        w.token(" obj:");
        if (model.objective.terms.empty()) w.token("0");
        bool first = true;
        for (const auto& t : model.objective.terms) {
            w.token(term_text(t.coef, vars[t.var].name, first));
            first = false;
        }
        w.end();
    }
    out += "Subject To\n";
    for (const auto& c : model.constraints()) {
        Wrapper w(out, "   ");
        w.token(" " + c.name + ":");
        if (c.terms.empty()) w.token("0");
        bool first = true;
        for (const auto& t : c.terms) {
            w.token(term_text(t.coef, vars[t.var].name, first));
            first = false;
        }
        w.token(sense_text(c.sense));
        w.token(std::to_string(c.rhs));
        w.end();
    }
    out += "Bounds\n";
    for (auto i : order) {
        const auto& v = vars[i];
        if (v.kind == VarKind::Binary) continue;
        out += " " + std::to_string(v.lower) + " <= " + v.name + " <= " + (v.upper ? std::to_string(*v.upper) : "+inf") + "\n";
    }
    auto list = [&](const char* header, VarKind kind) {
        std::vector<std::string> names;
        for (auto i : order)
            if (vars[i].kind == kind) names.push_back(vars[i].name);
        if (names.empty()) return;
        out += header;
        out += '\n';
        Wrapper w(out, " ");
        for (const auto& n : names) w.token(n);
        w.end();
    };
    list("Binary", VarKind::Binary);
    list("General", VarKind::Integer);
    out += "End\n";
    return out;
}

namespace {

struct ParsedTerm {
    std::int64_t coef;
    std::string name;
};

std::int64_t parse_int(const std::string& s)
{
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected integer, got '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("expected integer, got '" + s + "'");
    return v;
}

bool is_number(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Parses "[+|-] [coef] name ..." token streams.
std::vector<ParsedTerm> parse_terms(const std::vector<std::string>& toks)
{
    std::vector<ParsedTerm> out;
    std::int64_t sign = 1;
    std::int64_t coef = 1;
    bool have_coef = false;
    for (const auto& tok : toks) {
        if (tok == "+") continue;
        if (tok == "-") {
            sign = -sign;
            continue;
        }
        if (tok.size() > 1 && tok.front() == '-') {
            // "-name" or "-3"
            sign = -sign;
            const auto rest = tok.substr(1);
            if (is_number(rest)) {
                coef = parse_int(rest);
                have_coef = true;
            } else {
                out.push_back({sign * coef, rest});
                sign = 1, coef = 1, have_coef = false;
            }
            continue;
        }
        if (is_number(tok)) {
            if (have_coef) throw std::invalid_argument("two coefficients in a row");
            coef = parse_int(tok);
            have_coef = true;
            continue;
        }
        out.push_back({sign * coef, tok});
        sign = 1, coef = 1, have_coef = false;
    }
    if (have_coef) {
        if (coef != 0) throw std::invalid_argument("constant term not supported");
        (void)coef;
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

IlpModel parse_lp_text(const std::string& text)
{
    enum class Section { None, Objective, Constraints, Bounds, Binary, General, End };
    Section sec = Section::None;

    // Statements are gathered first (they may span lines), then variables are
    // declared in order of first appearance.
    bool minimize = true;
    std::string objective_text;
    std::vector<std::string> constraint_texts;
    std::map<std::string, std::pair<std::int64_t, std::optional<std::int64_t>>> bounds;
    std::vector<std::string> binaries, generals;

    std::istringstream in(text);
    std::string line;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const auto head = lower(line.substr(line.find_first_not_of(' ')));
        if (head == "minimize" || head == "maximize") {
            minimize = head == "minimize";
            sec = Section::Objective;
            continue;
        }
        if (head == "subject to") {
            sec = Section::Constraints;
            continue;
        }
        if (head == "bounds") {
            sec = Section::Bounds;
            continue;
        }
        if (head == "binary" || head == "binaries") {
            sec = Section::Binary;
            continue;
        }
        if (head == "general" || head == "generals") {
            sec = Section::General;
            continue;
        }
        if (head == "end") {
            sec = Section::End;
            continue;
        }
        const bool continuation = line.front() == ' ' && line.size() > 1 && line[1] == ' ';
        switch (sec) {
        case Section::Objective: objective_text += " " + line; break;
        case Section::Constraints:
            if (continuation && !constraint_texts.empty()) constraint_texts.back() += " " + line;
            else constraint_texts.push_back(line);
            break;
        case Section::Bounds:
            if (toks.size() != 5 || toks[1] != "<=" || toks[3] != "<=") throw std::invalid_argument("bad bound: " + line);
            bounds[toks[2]] = {parse_int(toks[0]), toks[4] == "+inf" ? std::nullopt : std::optional<std::int64_t>(parse_int(toks[4]))};
            break;
        case Section::Binary: binaries.insert(binaries.end(), toks.begin(), toks.end()); break;
        case Section::General: generals.insert(generals.end(), toks.begin(), toks.end()); break;
        case Section::None:
        case Section::End: throw std::invalid_argument("text outside a section: " + line);
        }
    }
    if (sec != Section::End) throw std::invalid_argument("missing End");

    struct Stmt {
        std::string name;
        std::vector<ParsedTerm> terms;
        Sense sense;
        std::int64_t rhs;
    };
    auto split_label = [](const std::string& s) {
        auto toks = tokenize(s);
        if (toks.empty() || toks.front().back() != ':') throw std::invalid_argument("missing label: " + s);
        std::string name = toks.front().substr(0, toks.front().size() - 1);
        toks.erase(toks.begin());
        return std::make_pair(name, toks);
    };

    auto [obj_name, obj_toks] = split_label(objective_text);
    (void)obj_name;
    if (obj_toks.size() == 1 && obj_toks[0] == "0") obj_toks.clear();
    const auto obj_terms = parse_terms(obj_toks);

    std::vector<Stmt> stmts;
    for (const auto& ct : constraint_texts) {
        auto [name, toks] = split_label(ct);
        if (toks.size() < 2) throw std::invalid_argument("bad constraint: " + ct);
        const auto rhs = parse_int(toks.back());
        const auto& s = toks[toks.size() - 2];
        Sense sense = s == "<=" ? Sense::LessEqual : s == ">=" ? Sense::GreaterEqual : s == "=" ? Sense::Equal
                                                                                             : throw std::invalid_argument("bad sense: " + s);
        toks.resize(toks.size() - 2);
        if (toks.size() == 1 && toks[0] == "0") toks.clear();
        stmts.push_back({name, parse_terms(toks), sense, rhs});
    }

    // Declaration order: first appearance in objective, then constraints.
    IlpModel m;
    m.objective.minimize = minimize;
    std::map<std::string, VarKind> kinds;
    for (const auto& n : binaries) kinds[n] = VarKind::Binary;
    for (const auto& n : generals) kinds[n] = VarKind::Integer;
    auto declare = [&](const std::string& name) {
        if (auto i = m.find(name)) return *i;
        auto k = kinds.find(name);
        if (k == kinds.end()) throw std::invalid_argument("variable '" + name + "' is neither Binary nor General");
        if (k->second == VarKind::Binary) return m.add_binary(name);
        auto b = bounds.find(name);
        if (b == bounds.end()) return m.add_variable(name, VarKind::Integer, 0, std::nullopt);
        return m.add_variable(name, VarKind::Integer, b->second.first, b->second.second);
    };
    for (const auto& t : obj_terms) m.objective.terms.push_back({declare(t.name), t.coef});
    for (const auto& st : stmts) {
        std::vector<Term> terms;
        for (const auto& t : st.terms) terms.push_back({declare(t.name), t.coef});
        m.add_constraint(st.name, std::move(terms), st.sense, st.rhs);
    }
    // Declared but unused variables, in name order.
    for (const auto& [name, kind] : kinds) declare(name);
    return m;
}

bool same_model(const IlpModel& a, const IlpModel& b)
{
    if (a.variables().size() != b.variables().size()) return false;
    for (const auto& v : a.variables()) {
        auto j = b.find(v.name);
        if (!j) return false;
        const auto& w = b.variables()[*j];
        if (v.kind != w.kind || v.lower != w.lower || v.upper != w.upper) return false;
    }
    auto named = [](const IlpModel& m, const std::vector<Term>& terms) {
        std::vector<std::pair<std::string, std::int64_t>> out;
        for (const auto& t : terms) out.emplace_back(m.variables()[t.var].name, t.coef);
        return out;
    };
    if (a.objective.minimize != b.objective.minimize) return false;
    if (named(a, a.objective.terms) != named(b, b.objective.terms)) return false;
    if (a.constraints().size() != b.constraints().size()) return false;
    for (std::size_t i = 0; i < a.constraints().size(); ++i) {
        const auto& x = a.constraints()[i];
        const auto& y = b.constraints()[i];
        if (x.name != y.name || x.sense != y.sense || x.rhs != y.rhs) return false;
        if (named(a, x.terms) != named(b, y.terms)) return false;
    }
    return true;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Domain {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
};

// Constraint rows normalised to sum(coef * x) <= rhs.
struct Row {
    std::vector<Term> terms;
    std::int64_t rhs;
};

class Solver {
public:
    Solver(const IlpModel& m, std::uint64_t budget) : model_(m), budget_(budget)
    {
        const auto n = m.variables().size();
        watch_.resize(n);
        for (const auto& c : m.constraints()) {
            auto add = [&](std::int64_t sign) {
                Row r{c.terms, sign * c.rhs};
                for (auto& t : r.terms) t.coef *= sign;
                for (const auto& t : r.terms) watch_[t.var].push_back(rows_.size());
                rows_.push_back(std::move(r));
            };
            if (c.sense != Sense::GreaterEqual) add(1);
            if (c.sense != Sense::LessEqual) add(-1);
        }
        obj_sign_ = m.objective.minimize ? 1 : -1;
        for (auto t : m.objective.terms) {
            t.coef *= obj_sign_;
            obj_.push_back(t);
        }
    }

    SolveResult run()
    {
        Domain d;
        for (const auto& v : model_.variables()) {
            d.lo.push_back(v.lower);
            d.hi.push_back(v.upper.value_or(kInf));
        }
        std::vector<std::size_t> all(rows_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        if (propagate(d, all)) search(d);

        SolveResult res;
        res.nodes = nodes_;
        if (aborted_) res.status = SolveStatus::BudgetExceeded;
        else if (!have_best_) res.status = SolveStatus::Infeasible;
        else {
            res.status = SolveStatus::Optimal;
            res.objective = obj_sign_ * best_obj_;
            res.values = best_;
        }
        return res;
    }

private:
    // Tightens bounds to a fixpoint; false on infeasibility.
    bool propagate(Domain& d, std::vector<std::size_t> queue_init)
    {
        std::deque<std::size_t> queue(queue_init.begin(), queue_init.end());
        std::vector<char> queued(rows_.size(), 0);
        for (auto r : queue) queued[r] = 1;
        while (!queue.empty()) {
            const auto ri = queue.front();
            queue.pop_front();
            queued[ri] = 0;
            const Row& row = rows_[ri];
            std::int64_t min_act = 0;
            int unbounded = 0;
            for (const auto& t : row.terms) {
                const auto b = t.coef > 0 ? d.lo[t.var] : d.hi[t.var];
                if (b >= kInf || b <= -kInf) ++unbounded;
                else min_act += t.coef * b;
            }
            if (unbounded) continue;
            if (min_act > row.rhs) return false;
            const std::int64_t slack = row.rhs - min_act;
            for (const auto& t : row.terms) {
                const auto v = t.var;
                bool changed = false;
                if (t.coef > 0) {
                    const auto nh = d.lo[v] + slack / t.coef;
                    if (nh < d.hi[v]) {
                        d.hi[v] = nh;
                        changed = true;
                    }
                } else {
                    const auto nl = d.hi[v] - slack / (-t.coef);
                    if (nl > d.lo[v]) {
                        d.lo[v] = nl;
                        changed = true;
                    }
                }
                if (d.lo[v] > d.hi[v]) return false;
                if (changed) {
                    for (auto r : watch_[v]) {
                        if (!queued[r]) {
                            queued[r] = 1;
                            queue.push_back(r);
                        }
                    }
                }
            }
        }
        return true;
    }

    std::int64_t objective_bound(const Domain& d) const
    {
        std::int64_t s = 0;
        for (const auto& t : obj_) {
            const auto b = t.coef > 0 ? d.lo[t.var] : d.hi[t.var];
            if (b >= kInf) return -kInf;
            s += t.coef * b;
        }
        return s;
    }

    void search(Domain& d)
    {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        const auto bound = objective_bound(d);
        if (have_best_ && bound >= best_obj_) return;

        std::size_t pick = d.lo.size();
        for (std::size_t v = 0; v < d.lo.size(); ++v) {
            if (d.lo[v] < d.hi[v]) {
                pick = v;
                break;
            }
        }
        if (pick == d.lo.size()) {
            have_best_ = true;
            best_obj_ = bound;
            best_ = d.lo;
            return;
        }

        // x = lo, then x >= lo + 1.
        {
            Domain child = d;
            child.hi[pick] = child.lo[pick];
            if (propagate(child, watch_[pick])) search(child);
        }
        {
            Domain child = d;
            child.lo[pick] += 1;
            if (propagate(child, watch_[pick])) search(child);
        }
    }

    const IlpModel& model_;
    std::uint64_t budget_;
    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> watch_;
    std::vector<Term> obj_;
    std::int64_t obj_sign_ = 1;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool have_best_ = false;
    std::int64_t best_obj_ = 0;
    std::vector<std::int64_t> best_;
};

}  // namespace

SolveResult naive_solve(const IlpModel& model, std::uint64_t budget) { return Solver(model, budget).run(); }

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

}  // namespace degtab
