#include "mdl/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "mdl/combinatorics.hpp"
#include "mdl/resolving.hpp"

namespace mdl {
namespace {

std::string y_name(int v) { return "y_" + std::to_string(v + 1); }

std::string x_name(int i, int j) {
    return "x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

void require_model_input(const DistanceMatrix& dm, const char* who) {
    if (dm.n() < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 vertices");
    if (!dm.connected()) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

constexpr std::size_t kMaxLineLength = 255;

void emit_wrapped(std::ostringstream& out, const std::vector<std::string>& tokens) {
    std::string line = " ";
    bool line_has_token = false;
    for (const auto& tok : tokens) {
        std::size_t extra = (line_has_token ? 1 : 0) + tok.size();
        if (line_has_token && line.size() + extra > kMaxLineLength) {
            out << line << '\n';
            line = " ";
            line_has_token = false;
            extra = tok.size();
        }
        if (line_has_token) line += ' ';
        line += tok;
        line_has_token = true;
    }
    out << line << '\n';
}

std::vector<std::string> expression_tokens(const std::vector<LinearTerm>& terms) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (i == 0) {
            if (t.coef < 0) tokens.push_back("-");
        } else {
            tokens.push_back(t.coef < 0 ? "-" : "+");
        }
        long long mag = t.coef < 0 ? -t.coef : t.coef;
        if (mag != 1) tokens.push_back(std::to_string(mag));
        tokens.push_back(t.var);
    }
    return tokens;
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t start = tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) return false;
    return std::all_of(tok.begin() + start, tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

// Accepts y_<i> with i >= 1 and x_<i>_<j> with 1 <= i < j.
bool valid_var_name(const std::string& name) {
    auto parse_pos = [](const std::string& s) -> long long {
        if (s.empty() || !std::all_of(s.begin(), s.end(),
                                      [](unsigned char c) { return std::isdigit(c); }))
            return -1;
        long long v = 0;
        for (char c : s) {
            v = v * 10 + (c - '0');
            if (v > std::numeric_limits<int>::max()) return -1;
        }
        return v;
    };
    if (name.rfind("y_", 0) == 0) return parse_pos(name.substr(2)) >= 1;
    if (name.rfind("x_", 0) == 0) {
        auto sep = name.find('_', 2);
        if (sep == std::string::npos) return false;
        long long i = parse_pos(name.substr(2, sep - 2));
        long long j = parse_pos(name.substr(sep + 1));
        return i >= 1 && j >= 1 && i < j;
    }
    return false;
}

struct TokenRun {
    std::vector<std::string> tokens;
    int line = 0;  // line of the first token
};

struct LinearExpression {
    std::vector<LinearTerm> terms;
    Sense sense = Sense::Ge;
    long long rhs = 0;
};

long long parse_integer(const std::string& token, int line) {
    try {
        return std::stoll(token);
    } catch (const std::out_of_range&) {
        throw LpParseError(line, "integer `" + token + "` out of range");
    }
}

LinearExpression parse_linear(const std::vector<std::string>& tokens, int line, bool want_sense) {
    LinearExpression out;
    std::size_t i = 0;
    auto at_sense = [&] {
        return i < tokens.size() && (tokens[i] == ">=" || tokens[i] == "<=");
    };
    bool first = true;
    while (i < tokens.size() && !at_sense()) {
        long long sign = 1;
        if (tokens[i] == "+" || tokens[i] == "-") {
            sign = tokens[i] == "-" ? -1 : 1;
            ++i;
        } else if (!first) {
            throw LpParseError(line, "expected `+` or `-` between terms, got `" + tokens[i] + "`");
        }
        long long mag = 1;
        if (i < tokens.size() && is_integer_token(tokens[i])) {
            mag = parse_integer(tokens[i], line);
            ++i;
        }
        if (i >= tokens.size() || at_sense())
            throw LpParseError(line, "expected a variable name");
        out.terms.push_back({sign * mag, tokens[i]});
        ++i;
        first = false;
    }
    if (out.terms.empty()) throw LpParseError(line, "empty linear expression");
    if (!want_sense) {
        if (i != tokens.size())
            throw LpParseError(line, "unexpected `" + tokens[i] + "` in objective");
        return out;
    }
    if (!at_sense()) throw LpParseError(line, "expected `>=` or `<=`");
    out.sense = tokens[i] == ">=" ? Sense::Ge : Sense::Le;
    ++i;
    if (i >= tokens.size() || !is_integer_token(tokens[i]))
        throw LpParseError(line, "expected integer right-hand side");
    out.rhs = parse_integer(tokens[i], line);
    ++i;
    if (i != tokens.size()) throw LpParseError(line, "unexpected `" + tokens[i] + "` after rhs");
    return out;
}

}  // namespace

void IlpModel::validate() const {
    if (objective.empty()) throw std::invalid_argument("IlpModel: empty objective");
    if (constraints.empty()) throw std::invalid_argument("IlpModel: no constraints");
    std::set<std::string> names;
    std::set<std::string> binary_set(binaries.begin(), binaries.end());
    if (binary_set.size() != binaries.size())
        throw std::invalid_argument("IlpModel: duplicate binary declaration");
    auto check_var = [&](const std::string& var) {
        if (!binary_set.count(var))
            throw std::invalid_argument("IlpModel: variable `" + var + "` is not declared binary");
    };
    for (const auto& t : objective) check_var(t.var);
    for (const auto& c : constraints) {
        if (!names.insert(c.name).second)
            throw std::invalid_argument("IlpModel: duplicate constraint name `" + c.name + "`");
        if (c.terms.empty())
            throw std::invalid_argument("IlpModel: constraint `" + c.name + "` has no terms");
        for (const auto& t : c.terms) check_var(t.var);
    }
}

IlpModel build_strong_ilp(const DistanceMatrix& dm) {
    require_model_input(dm, "build_strong_ilp");
    const int n = dm.n();
    IlpModel model;
    for (int i = 0; i < n; ++i) model.objective.push_back({1, y_name(i)});
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            IlpConstraint row;
            row.name = "pair_" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
            for (int i = 0; i < n; ++i)
                if (strongly_resolves(dm, i, u, v)) row.terms.push_back({1, y_name(i)});
            if (row.terms.empty())
                throw std::runtime_error("build_strong_ilp: pair (" + std::to_string(u + 1) + "," +
                                         std::to_string(v + 1) + ") has an empty cover row");
            row.sense = Sense::Ge;
            row.rhs = 1;
            model.constraints.push_back(std::move(row));
        }
    }
    for (int i = 0; i < n; ++i) model.binaries.push_back(y_name(i));
    model.validate();
    return model;
}

IlpModel build_doubly_ilp(const DistanceMatrix& dm) {
    require_model_input(dm, "build_doubly_ilp");
    const int n = dm.n();
    IlpModel model;
    for (int i = 0; i < n; ++i) model.objective.push_back({1, y_name(i)});
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            IlpConstraint row;
            row.name = "pair_" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (doubly_resolves(dm, i, j, u, v)) row.terms.push_back({1, x_name(i, j)});
            if (row.terms.empty())
                throw std::runtime_error("build_doubly_ilp: pair (" + std::to_string(u + 1) + "," +
                                         std::to_string(v + 1) + ") has an empty cover row");
            row.sense = Sense::Ge;
            row.rhs = 1;
            model.constraints.push_back(std::move(row));
        }
    }
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            std::string suffix = "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            model.constraints.push_back({"link1" + suffix,
                                         {{2, x_name(i, j)}, {-1, y_name(i)}, {-1, y_name(j)}},
                                         Sense::Le,
                                         0});
            model.constraints.push_back({"link2" + suffix,
                                         {{1, x_name(i, j)}, {-1, y_name(i)}, {-1, y_name(j)}},
                                         Sense::Ge,
                                         -1});
        }
    }
    for (int i = 0; i < n; ++i) model.binaries.push_back(y_name(i));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) model.binaries.push_back(x_name(i, j));
    model.validate();
    return model;
}

std::string write_lp(const IlpModel& model) {
    model.validate();
    std::ostringstream out;
    out << "Minimize\n";
    std::vector<std::string> obj_tokens{"obj:"};
    for (const auto& tok : expression_tokens(model.objective)) obj_tokens.push_back(tok);
    emit_wrapped(out, obj_tokens);
    out << "Subject To\n";
    for (const auto& c : model.constraints) {
        std::vector<std::string> tokens{c.name + ":"};
        for (const auto& tok : expression_tokens(c.terms)) tokens.push_back(tok);
        tokens.push_back(c.sense == Sense::Ge ? ">=" : "<=");
        tokens.push_back(std::to_string(c.rhs));
        emit_wrapped(out, tokens);
    }
    out << "Binaries\n";
    emit_wrapped(out, model.binaries);
    out << "End\n";
    return out.str();
}

IlpModel read_lp(const std::string& text) {
    enum class State { ExpectMinimize, Objective, Constraints, Binaries, Done };
    State state = State::ExpectMinimize;

    TokenRun objective;
    std::vector<std::pair<std::string, TokenRun>> raw_constraints;  // (name, tokens)
    std::vector<std::pair<std::string, int>> raw_binaries;          // (name, line)

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto trimmed = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trimmed(line);
        if (stripped.empty()) continue;

        if (state == State::ExpectMinimize) {
            if (stripped != "Minimize") throw LpParseError(line_no, "expected `Minimize`");
            state = State::Objective;
            continue;
        }
        if (state == State::Objective && stripped == "Subject To") {
            if (objective.tokens.empty()) throw LpParseError(line_no, "missing objective");
            state = State::Constraints;
            continue;
        }
        if (state == State::Constraints && stripped == "Binaries") {
            state = State::Binaries;
            continue;
        }
        if (state == State::Binaries && stripped == "End") {
            state = State::Done;
            continue;
        }
        if (state == State::Done) throw LpParseError(line_no, "content after `End`");

        std::istringstream ls(stripped);
        std::string tok;
        while (ls >> tok) {
            switch (state) {
                case State::Objective:
                    if (objective.tokens.empty()) {
                        if (tok != "obj:") throw LpParseError(line_no, "expected `obj:` label");
                        objective.line = line_no;
                    }
                    objective.tokens.push_back(tok);
                    break;
                case State::Constraints:
                    if (tok.size() > 1 && tok.back() == ':') {
                        raw_constraints.push_back(
                            {tok.substr(0, tok.size() - 1), TokenRun{{}, line_no}});
                    } else {
                        if (raw_constraints.empty())
                            throw LpParseError(line_no, "expected `<name>:` to start a constraint");
                        raw_constraints.back().second.tokens.push_back(tok);
                    }
                    break;
                case State::Binaries:
                    raw_binaries.push_back({tok, line_no});
                    break;
                default:
                    throw LpParseError(line_no, "unexpected content");
            }
        }
    }
    if (state != State::Done) throw LpParseError(line_no + 1, "expected `End`");
    if (objective.tokens.empty()) throw LpParseError(line_no + 1, "missing objective");

    IlpModel model;
    std::vector<std::string> obj_expr(objective.tokens.begin() + 1, objective.tokens.end());
    model.objective = parse_linear(obj_expr, objective.line, /*want_sense=*/false).terms;

    std::map<std::string, int> name_lines;
    for (const auto& [name, run] : raw_constraints) {
        auto [it, inserted] = name_lines.insert({name, run.line});
        if (!inserted)
            throw LpParseError(run.line, "duplicate constraint name `" + name + "` (first at line " +
                                             std::to_string(it->second) + ")");
        LinearExpression expr = parse_linear(run.tokens, run.line, /*want_sense=*/true);
        model.constraints.push_back({name, std::move(expr.terms), expr.sense, expr.rhs});
    }

    std::set<std::string> binary_set;
    for (const auto& [name, bin_line] : raw_binaries) {
        if (!valid_var_name(name))
            throw LpParseError(bin_line,
                               "bad variable name `" + name + "` (expected 1-indexed y_i or x_i_j)");
        if (!binary_set.insert(name).second)
            throw LpParseError(bin_line, "duplicate binary `" + name + "`");
        model.binaries.push_back(name);
    }

    auto check_vars = [&](const std::vector<LinearTerm>& terms, int at_line) {
        for (const auto& t : terms) {
            if (!valid_var_name(t.var))
                throw LpParseError(at_line, "bad variable name `" + t.var +
                                                "` (expected 1-indexed y_i or x_i_j)");
            if (!binary_set.count(t.var))
                throw LpParseError(at_line, "unknown variable `" + t.var + "`");
        }
    };
    check_vars(model.objective, objective.line);
    for (std::size_t i = 0; i < model.constraints.size(); ++i)
        check_vars(model.constraints[i].terms, raw_constraints[i].second.line);

    model.validate();
    return model;
}

long long solve_binary_minimize(const IlpModel& model) {
    model.validate();
    std::map<std::string, int> index;
    for (const auto& name : model.binaries)
        index.emplace(name, static_cast<int>(index.size()));
    const int nb = static_cast<int>(model.binaries.size());

    std::vector<long long> obj_coef(nb, 0);
    for (const auto& t : model.objective) obj_coef[index[t.var]] += t.coef;
    std::vector<int> obj_vars, aux_vars;
    for (int i = 0; i < nb; ++i) (obj_coef[i] != 0 ? obj_vars : aux_vars).push_back(i);
    if (obj_vars.size() > 20)
        throw std::invalid_argument("solve_binary_minimize: more than 20 objective variables");

    struct Row {
        std::vector<std::pair<int, long long>> terms;
        Sense sense;
        long long rhs;
        int aux = -1;  // index of the single auxiliary variable in a <= row
    };
    std::vector<bool> is_aux(nb, false);
    for (int a : aux_vars) is_aux[a] = true;
    std::vector<Row> rows;
    for (const auto& c : model.constraints) {
        Row row;
        row.sense = c.sense;
        row.rhs = c.rhs;
        for (const auto& t : c.terms) row.terms.push_back({index.at(t.var), t.coef});
        if (c.sense == Sense::Le) {
            for (const auto& [var, coef] : row.terms) {
                if (!is_aux[var]) continue;
                if (row.aux >= 0 && row.aux != var)
                    throw std::invalid_argument(
                        "solve_binary_minimize: a <= row has several auxiliary variables");
                if (coef <= 0)
                    throw std::invalid_argument(
                        "solve_binary_minimize: auxiliary variable with non-positive <= coefficient");
                row.aux = var;
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<int> vals(nb, 0);
    auto row_lhs = [&](const Row& row) {
        long long lhs = 0;
        for (const auto& [var, coef] : row.terms) lhs += coef * vals[var];
        return lhs;
    };
    auto feasible = [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < obj_vars.size(); ++i)
            vals[obj_vars[i]] = (mask >> i) & 1;
        for (int a : aux_vars) vals[a] = 1;
        // Auxiliary binaries take their largest value allowed by the <= rows.
        for (const auto& row : rows)
            if (row.sense == Sense::Le && row.aux >= 0 && vals[row.aux] == 1 &&
                row_lhs(row) > row.rhs)
                vals[row.aux] = 0;
        for (const auto& row : rows) {
            long long lhs = row_lhs(row);
            if (row.sense == Sense::Ge ? lhs < row.rhs : lhs > row.rhs) return false;
        }
        return true;
    };

    const int m = static_cast<int>(obj_vars.size());
    bool unit_objective = std::all_of(obj_vars.begin(), obj_vars.end(),
                                      [&](int v) { return obj_coef[v] == 1; });
    if (unit_objective) {
        // Enumerate by ascending cardinality and stop at the first feasible
        // assignment.
        for (int size = 0; size <= m; ++size) {
            std::vector<int> idx(size);
            for (int i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                std::uint32_t mask = 0;
                for (int i : idx) mask |= std::uint32_t{1} << i;
                if (feasible(mask)) return size;
                int i = size - 1;
                while (i >= 0 && idx[i] == m - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        throw std::runtime_error("solve_binary_minimize: model is infeasible");
    }

    long long best = std::numeric_limits<long long>::max();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (!feasible(static_cast<std::uint32_t>(mask))) continue;
        long long value = 0;
        for (std::size_t i = 0; i < obj_vars.size(); ++i)
            if ((mask >> i) & 1) value += obj_coef[obj_vars[i]];
        best = std::min(best, value);
    }
    if (best == std::numeric_limits<long long>::max())
        throw std::runtime_error("solve_binary_minimize: model is infeasible");
    return best;
}

}  // namespace mdl
